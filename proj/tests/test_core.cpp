#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mdlie/algebraic.hpp>
#include <mdlie/factor.hpp>
#include <mdlie/matrix.hpp>
#include <mdlie/multivariate.hpp>
#include <mdlie/polynomial.hpp>
#include <mdlie/quotient.hpp>
#include <mdlie/rational.hpp>
#include <mdlie/smith.hpp>

using namespace mdlie;

static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-14") == Rational(-14));
    CHECK(format_rational(Rational(-3, 9)) == "-1/3");
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(decimal_string(Rational(1, 8), 4) == "0.1250");
    CHECK(decimal_string(Rational(-1, 3), 3) == "-0.333");
    CHECK_THROWS_AS((void)parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rational("two"), std::invalid_argument);
}

TEST_CASE("bareiss rank and determinant") {
    RatMatrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(bareiss_rank(a) == 2);
    CHECK(bareiss_det(a) == Rational(0));

    RatMatrix b = from_rows({{0, 1, 2}, {3, 4, 5}, {6, 7, 9}});
    CHECK(bareiss_det(b) == Rational(-3));
    CHECK(bareiss_rank(b) == 3);

    // fraction-free elimination stays exact on awkward pivots
    RatMatrix c(3, 3);
    c(0, 0) = Rational(1, 7);
    c(0, 2) = Rational(2, 3);
    c(1, 1) = Rational(-5, 11);
    c(2, 0) = Rational(3);
    c(2, 2) = Rational(1, 2);
    CHECK(bareiss_det(c) == (Rational(1, 7) * Rational(1, 2) - Rational(2, 3) * Rational(3)) *
                                Rational(-5, 11));
}

TEST_CASE("inverse and linear solving") {
    RatMatrix a = from_rows({{2, 1}, {7, 4}});
    RatMatrix inv = inverse(a);
    CHECK(a * inv == RatMatrix::identity(2));

    std::vector<Rational> x;
    CHECK(solve_linear(a, {Rational(1), Rational(0)}, x));
    CHECK(x == std::vector<Rational>{Rational(4), Rational(-7)});

    RatMatrix sing = from_rows({{1, 2}, {2, 4}});
    CHECK_THROWS_AS((void)inverse(sing), SingularMatrix);
    CHECK_FALSE(solve_linear(sing, {Rational(1), Rational(0)}, x));
}

TEST_CASE("echelon forms agree with bareiss rank") {
    RatMatrix a = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}, {1, 3, 4, 4}});
    RatMatrix copy = a;
    CHECK(rref_in_place(copy).size() == bareiss_rank(a));
    CHECK(column_span_basis(a).cols() == 2);
    CHECK(kernel_basis(a).cols() == 2);
    // kernel columns really solve a x = 0
    RatMatrix k = kernel_basis(a);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<Rational> img = mat_vec(a, k.column(j));
        for (const Rational& v : img) CHECK(is_zero(v));
    }
}

TEST_CASE("polynomial division and printing") {
    RatPoly p(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});  // t^2 - 2
    RatPoly d(std::vector<Rational>{Rational(1), Rational(1)});                // t + 1
    RatPoly q, r;
    poly_divmod(p, d, q, r);
    CHECK(q * d + r == p);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == Rational(-1));
    CHECK(poly_to_string(p) == "t^2 - 2");
    CHECK(poly_to_string(RatPoly(std::vector<Rational>{Rational(0), Rational(-1, 2)})) == "-1/2*t");
}

TEST_CASE("rational roots and factorization over Q") {
    // (t - 2)(t + 3) t
    RatPoly p(std::vector<Rational>{Rational(0), Rational(-6), Rational(1), Rational(1)});
    std::vector<Rational> roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-3));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(2));

    // (t - 1)(t^2 - 2): one linear factor, one irreducible quadratic
    RatPoly q(std::vector<Rational>{Rational(2), Rational(-2), Rational(-1), Rational(1)});
    std::vector<RatPoly> factors = factor_over_q(q);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].degree() == 1);
    CHECK(factors[1] == RatPoly(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)}));
}

TEST_CASE("binomial factorization tracks real roots") {
    auto fs = binomial_factor(2, Rational(4));  // t^2 - 4
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == RatPoly(std::vector<Rational>{Rational(-2), Rational(1)}));
    CHECK(fs[1].factor == RatPoly(std::vector<Rational>{Rational(2), Rational(1)}));
    CHECK(fs[0].has_real_root);

    fs = binomial_factor(2, Rational(1, 2));  // 2t^2 - 1, irreducible with real roots
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].factor == RatPoly(std::vector<Rational>{Rational(-1), Rational(0), Rational(2)}));
    CHECK(fs[0].has_real_root);

    fs = binomial_factor(2, Rational(-1));  // t^2 + 1, no real root
    REQUIRE(fs.size() == 1);
    CHECK_FALSE(fs[0].has_real_root);

    fs = binomial_factor(3, Rational(8));  // (t - 2)(t^2 + 2t + 4)
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == RatPoly(std::vector<Rational>{Rational(-2), Rational(1)}));
    CHECK(fs[1].factor ==
          RatPoly(std::vector<Rational>{Rational(4), Rational(2), Rational(1)}));
    CHECK_FALSE(fs[1].has_real_root);

    fs = binomial_factor(4, Rational(4));  // (t^2 - 2)(t^2 + 2)
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].has_real_root != fs[1].has_real_root);
}

TEST_CASE("perfect squares") {
    Rational root;
    CHECK(is_perfect_square(Rational(49, 4), root));
    CHECK(root == Rational(7, 2));
    CHECK_FALSE(is_perfect_square(Rational(2), root));
}

TEST_CASE("real root isolation and ordering") {
    RatPoly p(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});  // t^2 - 2
    std::vector<AlgebraicScalar> roots = real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].sign() < 0);
    CHECK(roots[1].sign() > 0);
    CHECK(roots[0] < roots[1]);
    CHECK_FALSE(roots[1].is_rational());

    // sqrt(2) from two different isolating runs compares equal
    AlgebraicScalar a = real_roots(p)[1];
    AlgebraicScalar b = roots[1];
    CHECK(a == b);
    CHECK(AlgebraicScalar::compare(a, AlgebraicScalar(Rational(3, 2))) < 0);
    CHECK(AlgebraicScalar::compare(a, AlgebraicScalar(Rational(7, 5))) > 0);
    CHECK(AlgebraicScalar(Rational(5)).is_rational());
    CHECK(AlgebraicScalar(Rational(5)).rational_value() == Rational(5));
}

TEST_CASE("quotient field arithmetic") {
    auto ctx = std::make_shared<QuotientCtx>(
        RatPoly(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)}));
    QElem t = QElem::generator(ctx);
    CHECK(t * t == QElem(ctx, RatPoly(Rational(2))));
    QElem inv = QElem(ctx, RatPoly(Rational(1))) / t;  // 1/sqrt(2) = t/2
    CHECK(inv * t == QElem(ctx, RatPoly(Rational(1))));
}

TEST_CASE("invariant factors separate similarity classes") {
    RatMatrix id2 = RatMatrix::identity(2);
    std::vector<RatPoly> fid = invariant_factors(id2);
    REQUIRE(fid.size() == 2);
    CHECK(poly_to_string(fid[0]) == "t - 1");
    CHECK(poly_to_string(fid[1]) == "t - 1");

    RatMatrix j2 = from_rows({{1, 1}, {0, 1}});
    std::vector<RatPoly> fj = invariant_factors(j2);
    REQUIRE(fj.size() == 2);
    CHECK(fj[0].degree() == 0);
    CHECK(poly_to_string(fj[1]) == "t^2 - 2*t + 1");

    CHECK_FALSE(similar_over_field(id2, j2));
    CHECK(char_poly(id2) == char_poly(j2));  // same spectrum, different classes

    RatMatrix c = from_rows({{1, 2}, {1, 3}});
    RatMatrix conj = c * j2 * inverse(c);
    CHECK(similar_over_field(j2, conj));

    RatMatrix j3 = from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    std::vector<RatPoly> f3 = invariant_factors(j3);
    REQUIRE(f3.size() == 3);
    CHECK(f3[2] == char_poly(j3));
    CHECK(f3[0].degree() == 0);
    CHECK(f3[1].degree() == 0);
}

TEST_CASE("symbolic rank of linear-form matrices") {
    Matrix<MPoly> m(3, 3);
    MPoly x = MPoly::variable(0, 2), y = MPoly::variable(1, 2);
    m(0, 1) = x;
    m(1, 0) = MPoly(0) - x;
    m(0, 2) = y;
    m(2, 0) = MPoly(0) - y;
    CHECK(symbolic_rank(m, 2) == 2);
    CHECK(symbolic_rank(Matrix<MPoly>(3, 3), 2) == 0);
}
