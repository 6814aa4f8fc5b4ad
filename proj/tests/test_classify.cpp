#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mdlie/catalog.hpp>
#include <mdlie/classifier.hpp>
#include <mdlie/md.hpp>
#include <mdlie/rng.hpp>

using namespace mdlie;

static LieAlgebra make(const std::string& name, const CatalogParams& p = {}) {
    return catalog_make(name, p).algebra;
}

static RatMatrix diag3(long a, long b, long c) {
    RatMatrix m(3, 3);
    m(0, 0) = Rational(a);
    m(1, 1) = Rational(b);
    m(2, 2) = Rational(c);
    return m;
}

static RatMatrix scramble(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t pass = 0; pass < 2 * n; ++pass) {
        std::size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        RatMatrix shear = RatMatrix::identity(n);
        shear(i, j) = rng.rational(4, 3);
        m = m * shear;
    }
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix d = RatMatrix::identity(n);
        d(i, i) = rng.nonzero_rational(4, 3);
        m = m * d;
    }
    return m;
}

TEST_CASE("1-dimensional derived ideal: central generator splits off heisenberg") {
    ClassificationResult r = classify_dim1_derived(make("heisenberg", {{"m", "3"}}));
    CHECK(r.label.tag == ClassTag::HeisenbergPlusAbelian);
    CHECK(r.label.m == 3);
    CHECK(r.label.k == 0);
    CHECK(r.checked);

    LieAlgebra padded = direct_sum(make("heisenberg", {{"m", "1"}}), make("abelian", {{"n", "2"}}));
    ClassificationResult rp = classify_dim1_derived(padded);
    CHECK(rp.label.m == 1);
    CHECK(rp.label.k == 2);
    CHECK(rp.checked);
    CHECK(padded.apply_basis_change(rp.witness).same_constants(canonical_heisenberg_plus_abelian(1, 2)));
}

TEST_CASE("1-dimensional derived ideal: non-central generator gives the aff block") {
    LieAlgebra g = direct_sum(make("aff"), make("abelian", {{"n", "3"}}));
    ClassificationResult r = classify_dim1_derived(g);
    CHECK(r.label.tag == ClassTag::AffPlusAbelian);
    CHECK(r.label.n == 5);
    CHECK(r.checked);
    CHECK(g.apply_basis_change(r.witness).same_constants(canonical_aff_plus_abelian(5)));
}

TEST_CASE("dim-1 classification is basis invariant") {
    LieAlgebra base = direct_sum(make("heisenberg", {{"m", "2"}}), make("abelian", {{"n", "1"}}));
    ClassificationResult expect = classify_dim1_derived(base);
    for (std::uint64_t s = 1; s <= 5; ++s) {
        LieAlgebra g = base.apply_basis_change(scramble(base.dim(), s));
        ClassificationResult r = classify_dim1_derived(g);
        CHECK(same_label(r.label, expect.label));
        CHECK(r.checked);
    }
}

TEST_CASE("decomposability in the central dim-1 case") {
    CHECK_FALSE(decomposability_dim1_case(make("heisenberg", {{"m", "2"}})));
    CHECK(decomposability_dim1_case(
        direct_sum(make("heisenberg", {{"m", "2"}}), make("abelian", {{"n", "1"}}))));
    // aff has a non-central derived generator: outside this criterion
    CHECK_THROWS_AS((void)decomposability_dim1_case(make("aff")), PreconditionError);
    CHECK_THROWS_AS((void)decomposability_dim1_case(make("abelian", {{"n", "2"}})), PreconditionError);
}

TEST_CASE("construct_from_matrix builds the semidirect product") {
    LieAlgebra g = construct_from_matrix(diag3(2, 3, 5));
    g.validate();
    CHECK(g.dim() == 4);
    CHECK(g.derived_ideal().cols() == 3);
    CHECK(g.spans_commute(g.derived_ideal()));
    CHECK(g.bracket_basis(3, 0) == std::vector<Rational>{Rational(2), Rational(0), Rational(0), Rational(0)});

    CHECK_THROWS_AS((void)construct_from_matrix(diag3(1, 0, 2)), SingularMatrix);
    CHECK_THROWS_AS((void)construct_from_matrix(RatMatrix(2, 3)), SizeMismatch);
}

TEST_CASE("dim-4 matcher: commutative derived ideal") {
    ClassLabel l = classify(construct_from_matrix(diag3(6, 10, 2))).label;
    CHECK(l.tag == ClassTag::MD43Family);
    CHECK(l.family == "1.1");
    REQUIRE(l.params.size() == 2);
    CHECK(l.params[0].first == "lambda1");
    CHECK(same_param(l.params[0].second, ParamValue(Rational(3))));
    CHECK(same_param(l.params[1].second, ParamValue(Rational(5))));

    RatMatrix j2(3, 3);
    j2(0, 0) = Rational(2); j2(0, 1) = Rational(1); j2(1, 1) = Rational(2);
    j2(2, 2) = Rational(1);
    ClassLabel l2 = classify(construct_from_matrix(j2)).label;
    CHECK(l2.family == "1.2");
    REQUIRE(l2.params.size() == 1);
    CHECK(same_param(l2.params[0].second, ParamValue(Rational(2))));

    RatMatrix j3(3, 3);
    for (int i = 0; i < 3; ++i) j3(i, i) = Rational(1);
    j3(0, 1) = Rational(1); j3(1, 2) = Rational(1);
    CHECK(classify(construct_from_matrix(j3)).label.family == "1.3");

    RatMatrix rot(3, 3);
    rot(0, 0) = Rational(3, 5); rot(0, 1) = Rational(-4, 5);
    rot(1, 0) = Rational(4, 5); rot(1, 1) = Rational(3, 5);
    rot(2, 2) = Rational(2);
    ClassLabel l4 = classify(construct_from_matrix(rot)).label;
    CHECK(l4.family == "1.4");
    REQUIRE(l4.params.size() == 3);
    CHECK(l4.params[0].first == "lambda");
    CHECK(same_param(l4.params[0].second, ParamValue(Rational(2))));
    CHECK(same_param(l4.params[1].second, ParamValue(Rational(3, 5))));
    CHECK(same_param(l4.params[2].second, ParamValue(Rational(4, 5))));
}

TEST_CASE("dim-4 matcher: scaling the action matrix does not change the label") {
    ClassLabel a = classify(construct_from_matrix(diag3(6, 10, 2))).label;
    ClassLabel b = classify(construct_from_matrix(diag3(6, 10, 2).scaled(Rational(7, 3)))).label;
    CHECK(same_label(a, b));
}

TEST_CASE("dim-4 matcher: h_3 derived ideal splits on the quotient action") {
    ClassLabel d = classify(make("diamond", {{"m", "1"}})).label;
    CHECK(d.tag == ClassTag::MD44Family);
    CHECK(d.family == "2.2");

    ClassLabel r = classify(make("md44", {{"family", "2.1"}})).label;
    CHECK(r.tag == ClassTag::MD44Family);
    CHECK(r.family == "2.1");
}

TEST_CASE("dim-5 matcher recovers catalog instances after a basis change") {
    struct Probe {
        const char* family;
        CatalogParams params;
    };
    const std::vector<Probe> probes = {
        {"4.1", {{"lambda1", "2"}, {"lambda2", "3"}, {"lambda3", "5"}}},
        {"4.5", {}},
        {"4.8", {{"lambda", "1/2"}}},
        {"4.10", {}},
        {"4.11", {{"lambda1", "2"}, {"lambda2", "3"}, {"cos", "3/5"}, {"sin", "4/5"}}},
        {"4.11", {{"lambda1", "2"}, {"lambda2", "-3"}, {"cos", "3/5"}, {"sin", "4/5"}}},
        {"4.12", {{"lambda", "2"}, {"cos", "3/5"}, {"sin", "4/5"}}},
        {"4.13", {{"lambda", "3"}, {"cos", "5/13"}, {"sin", "12/13"}}},
        {"4.14", {{"lambda", "7"}, {"mu", "2"}, {"cos", "3/5"}, {"sin", "4/5"}}},
    };
    std::uint64_t seed = 17;
    for (const Probe& p : probes) {
        CatalogParams full = p.params;
        full["family"] = p.family;
        LieAlgebra g = make("md54", full);
        ClassLabel direct = classify(g).label;
        CHECK(direct.tag == ClassTag::MD54Family);
        CHECK(direct.family == p.family);
        ClassLabel moved = classify(g.apply_basis_change(scramble(5, seed++))).label;
        CHECK(same_label(direct, moved));
    }
}

TEST_CASE("labels are invariant under negating the complement generator") {
    const std::vector<std::pair<const char*, CatalogParams>> cases = {
        {"md54", {{"family", "4.11"}, {"lambda1", "2"}, {"lambda2", "3"}, {"cos", "3/5"}, {"sin", "4/5"}}},
        {"md54", {{"family", "4.12"}, {"lambda", "2"}, {"cos", "3/5"}, {"sin", "4/5"}}},
        {"md54", {{"family", "4.13"}, {"lambda", "3"}, {"cos", "5/13"}, {"sin", "12/13"}}},
        {"md54", {{"family", "4.14"}, {"lambda", "7"}, {"mu", "2"}, {"cos", "3/5"}, {"sin", "4/5"}}},
        {"md43", {{"family", "1.4"}, {"lambda", "2"}, {"cos", "3/5"}, {"sin", "4/5"}}},
    };
    for (const auto& [name, params] : cases) {
        LieAlgebra g = catalog_make(name, params).algebra;
        RatMatrix neg = RatMatrix::identity(g.dim());
        neg(g.dim() - 1, g.dim() - 1) = Rational(-1);
        ClassLabel a = classify(g).label;
        ClassLabel b = classify(g.apply_basis_change(neg)).label;
        CHECK(a.tag != ClassTag::Unclassified);
        CHECK(same_label(a, b));
    }
}

TEST_CASE("dim-5 matcher refuses eigenvalues beyond quadratic degree") {
    RatMatrix a(4, 4);  // companion of t^3 - 2, plus a fixed line
    a(0, 2) = Rational(2);
    a(1, 0) = Rational(1);
    a(2, 1) = Rational(1);
    a(3, 3) = Rational(1);
    ClassLabel l = classify(construct_from_matrix(a)).label;
    CHECK(l.tag == ClassTag::Unclassified);
    CHECK(l.note == "eigenvalue data exceeds rational or quadratic degree");
}

TEST_CASE("dim-5 matcher flags block shapes outside the family list") {
    RatMatrix a(4, 4);  // J2(2) + [2] + [1]: triple eigenvalue with blocks {2,1}
    a(0, 0) = Rational(2); a(0, 1) = Rational(1);
    a(1, 1) = Rational(2);
    a(2, 2) = Rational(2);
    a(3, 3) = Rational(1);
    ClassLabel l = classify(construct_from_matrix(a)).label;
    CHECK(l.tag == ClassTag::Unclassified);
    CHECK(l.note == "block structure fits family 4.6 only with a unit parameter, outside its range");
}

TEST_CASE("classify dispatcher covers the remaining shapes") {
    ClassifyOutcome ab = classify(make("abelian", {{"n", "3"}}));
    CHECK(ab.label.tag == ClassTag::Abelian);
    CHECK(ab.label.n == 3);
    CHECK(ab.checked);

    ClassLabel big = classify(make("g2m", {{"m", "2"}})).label;
    CHECK(big.tag == ClassTag::Unclassified);
    CHECK(big.note == "outside the classified ranges");
}

TEST_CASE("isomorphism of codim-1 commutative actions") {
    LieAlgebra a = construct_from_matrix(diag3(2, 3, 1));
    LieAlgebra b = construct_from_matrix(diag3(4, 6, 2));
    ScaledSimilarity s = iso_codim1(a, b);
    CHECK(s.related);
    CHECK(s.scalar_rational);
    CHECK(s.scalar == Rational(2));

    LieAlgebra c = construct_from_matrix(diag3(2, 5, 1));
    CHECK_FALSE(iso_codim1(a, c).related);

    RatMatrix small(2, 2);
    small(0, 0) = Rational(2); small(1, 1) = Rational(3);
    CHECK_FALSE(iso_codim1(a, construct_from_matrix(small)).related);

    CHECK_THROWS_AS((void)iso_codim1(make("heisenberg", {{"m", "1"}}), a), PreconditionError);
}

TEST_CASE("md_decide applies its rules in order") {
    MdVerdict v = md_decide(make("heisenberg", {{"m", "2"}}));
    CHECK(v.status == MdStatus::MD);
    CHECK(v.reason == "Thm4.1");

    // non-commutative second derived ideal (not solvable, but the test applies)
    LieAlgebra sl2(3);
    sl2.set_bracket(0, 1, {Rational(0), Rational(2), Rational(0)});
    sl2.set_bracket(0, 2, {Rational(0), Rational(0), Rational(-2)});
    sl2.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});
    sl2.validate();
    MdVerdict vs = md_decide(sl2);
    CHECK(vs.status == MdStatus::NotMD);
    CHECK(vs.reason == "Prop2.8");

    MdVerdict vt = md_decide(construct_from_matrix(diag3(2, 3, 5)));
    CHECK(vt.status == MdStatus::MD);
    CHECK(vt.reason == "Thm4.3(i)");

    MdVerdict vd = md_decide(make("diamond", {{"m", "2"}}));
    CHECK(vd.status == MdStatus::NotMD);
    CHECK(vd.reason == "Thm4.3(ii)");

    MdVerdict vm = md_decide(make("diamond", {{"m", "1"}}));
    CHECK(vm.status == MdStatus::MD);
    CHECK(vm.reason == "Prop3.2-match");

    MdVerdict vn = md_decide(make("nil5"), 300, 1);
    CHECK(vn.status == MdStatus::Undecided);
    CHECK(vn.reason == "SamplingEvidence");
    CHECK(vn.evaluations == 300);
    CHECK(vn.generic_dim == 2);
}
