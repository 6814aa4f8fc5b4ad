#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mdlie/catalog.hpp>
#include <mdlie/classifier.hpp>
#include <mdlie/md.hpp>

using namespace mdlie;

TEST_CASE("catalog listing covers every constructor") {
    std::vector<CatalogInfo> list = catalog_list();
    CHECK(list.size() == 14);
    for (const CatalogInfo& info : list) {
        CHECK_FALSE(info.name.empty());
        CHECK_FALSE(info.provenance.empty());
    }
}

TEST_CASE("pinned structure constants") {
    LieAlgebra h2 = catalog_make("heisenberg", {{"m", "2"}}).algebra;
    CHECK(h2.dim() == 5);
    // [X_i, Y_i] = Z with Z last
    std::vector<Rational> z(5, Rational(0));
    z[4] = Rational(1);
    CHECK(h2.bracket_basis(0, 1) == z);
    CHECK(h2.bracket_basis(2, 3) == z);
    CHECK(h2.bracket_basis(0, 2) == std::vector<Rational>(5, Rational(0)));

    LieAlgebra d1 = catalog_make("diamond", {{"m", "1"}}).algebra;
    CHECK(d1.dim() == 4);
    CHECK(d1.labels() == std::vector<std::string>{"X1", "Y1", "Z", "T"});
    std::vector<Rational> zt(4, Rational(0));
    zt[2] = Rational(1);
    CHECK(d1.bracket_basis(0, 1) == zt);
    std::vector<Rational> mx(4, Rational(0));
    mx[0] = Rational(-1);
    CHECK(d1.bracket_basis(3, 0) == mx);

    LieAlgebra g7 = catalog_make("g2m1", {{"m", "3"}}).algebra;
    CHECK(g7.dim() == 7);
    std::vector<Rational> v(7, Rational(0));
    v[6] = Rational(1);
    CHECK(g7.bracket_basis(2, 3) == v);  // [X3, X4] = X7
    v[6] = Rational(2);
    CHECK(g7.bracket_basis(0, 6) == v);  // [X1, X7] = 2 X7
    v = std::vector<Rational>(7, Rational(0));
    v[2] = Rational(-1);
    CHECK(g7.bracket_basis(1, 3) == v);  // [X2, X4] = -X3
}

TEST_CASE("every catalog instance validates, round-trips, and matches its md claim") {
    struct Entry {
        const char* name;
        CatalogParams params;
        MdStatus expect;
    };
    const std::vector<Entry> entries = {
        {"abelian", {{"n", "1"}}, MdStatus::MD},
        {"abelian", {{"n", "4"}}, MdStatus::MD},
        {"aff", {}, MdStatus::MD},
        {"heisenberg", {{"m", "1"}}, MdStatus::MD},
        {"heisenberg", {{"m", "3"}}, MdStatus::MD},
        {"diamond", {{"m", "1"}}, MdStatus::MD},
        {"diamond", {{"m", "2"}}, MdStatus::NotMD},
        {"diamond", {{"m", "3"}}, MdStatus::NotMD},
        {"md41", {{"family", "1"}}, MdStatus::MD},
        {"md41", {{"family", "2"}}, MdStatus::MD},
        {"md43", {{"family", "1.1"}, {"lambda1", "3"}, {"lambda2", "5"}}, MdStatus::MD},
        {"md43", {{"family", "1.2"}, {"lambda", "2"}}, MdStatus::MD},
        {"md43", {{"family", "1.3"}}, MdStatus::MD},
        {"md43", {{"family", "1.4"}, {"lambda", "2"}, {"cos", "3/5"}, {"sin", "4/5"}}, MdStatus::MD},
        {"md44", {{"family", "2.1"}}, MdStatus::MD},
        {"md44", {{"family", "2.2"}}, MdStatus::MD},
        {"md51", {{"family", "1"}}, MdStatus::MD},
        {"md51", {{"family", "2"}}, MdStatus::MD},
        {"md54", {{"family", "4.1"}, {"lambda1", "2"}, {"lambda2", "3"}, {"lambda3", "5"}}, MdStatus::MD},
        {"md54", {{"family", "4.5"}}, MdStatus::MD},
        {"md54", {{"family", "4.8"}, {"lambda", "1/2"}}, MdStatus::MD},
        {"md54",
         {{"family", "4.14"}, {"lambda", "7"}, {"mu", "2"}, {"cos", "3/5"}, {"sin", "4/5"}},
         MdStatus::MD},
        {"nil5", {}, MdStatus::Undecided},
        {"nil6", {}, MdStatus::Undecided},
        {"g2m", {{"m", "2"}}, MdStatus::Undecided},
        {"affc", {}, MdStatus::Undecided},
    };
    for (const Entry& e : entries) {
        CAPTURE(e.name);
        CatalogEntry made = catalog_make(e.name, e.params);
        made.algebra.validate();
        CHECK(made.name == e.name);
        CHECK_FALSE(made.provenance.empty());

        std::string text = emit_algebra(made.algebra);
        LieAlgebra back = parse_algebra(text);
        CHECK(back.same_constants(made.algebra));
        CHECK(back.labels() == made.algebra.labels());
        CHECK(emit_algebra(back) == text);  // byte-identical round trip

        MdVerdict v = md_decide(made.algebra, 600, 0);
        CHECK(v.status == e.expect);
    }
}

TEST_CASE("default labels are omitted from emitted JSON") {
    LieAlgebra g(3);
    g.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
    std::string text = emit_algebra(g);
    CHECK(text.find("\"basis\"") == std::string::npos);
    CHECK(text.find("\"name\"") == std::string::npos);
    CHECK(parse_algebra(text).same_constants(g));

    g.set_labels({"a", "b", "c"});
    g.set_name("tiny");
    std::string named = emit_algebra(g);
    CHECK(named.find("\"basis\"") != std::string::npos);
    CHECK(named.find("\"tiny\"") != std::string::npos);
    LieAlgebra back = parse_algebra(named);
    CHECK(back.name() == "tiny");
    CHECK(back.labels() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("constructor rejects bad names and parameters") {
    CHECK_THROWS_AS((void)catalog_make("nosuch"), UnknownName);
    CHECK_THROWS_AS((void)catalog_make("heisenberg", {{"m", "0"}}), ParamOutOfRange);
    CHECK_THROWS_AS((void)catalog_make("heisenberg", {{"m", "two"}}), ParamOutOfRange);
    CHECK_THROWS_AS((void)catalog_make("heisenberg"), ParamOutOfRange);  // missing m
    CHECK_THROWS_AS((void)catalog_make("md41", {{"family", "3"}}), ParamOutOfRange);
    CHECK_THROWS_AS((void)catalog_make("md54", {{"family", "4.3"}, {"lambda", "1"}}),
                    ParamOutOfRange);  // unit parameter excluded
    CHECK_THROWS_AS((void)catalog_make("md54", {{"family", "4.3"}, {"lambda", "0"}}),
                    ParamOutOfRange);
    CHECK_THROWS_AS(
        (void)catalog_make("md43", {{"family", "1.4"}, {"lambda", "2"}, {"cos", "1/2"}, {"sin", "1/2"}}),
        ParamOutOfRange);  // not on the unit circle
    CHECK_THROWS_AS(
        (void)catalog_make("md43", {{"family", "1.4"}, {"lambda", "2"}, {"cos", "3/5"}, {"sin", "-4/5"}}),
        ParamOutOfRange);  // sin must be positive
    CHECK_THROWS_AS(
        (void)catalog_make(
            "md54", {{"family", "4.14"}, {"lambda", "1"}, {"mu", "-2"}, {"cos", "3/5"}, {"sin", "4/5"}}),
        ParamOutOfRange);
    CHECK_THROWS_AS((void)catalog_make("md54", {{"family", "4.5"}, {"lambda", "2"}}),
                    ParamOutOfRange);  // unexpected parameter
    CHECK_THROWS_AS(
        (void)catalog_make("md54", {{"family", "4.1"}, {"lambda1", "2"}, {"lambda2", "2"}, {"lambda3", "5"}}),
        ParamOutOfRange);  // parameters must differ
}

TEST_CASE("parser reports structural problems") {
    CHECK_THROWS_AS((void)parse_algebra("{\"dim\": 0, \"brackets\": []}"), SyntaxError);
    CHECK_THROWS_AS((void)parse_algebra("{\"brackets\": []}"), SyntaxError);
    CHECK_THROWS_AS((void)parse_algebra("{\"dim\": 2, \"brackets\": [], \"extra\": 1}"), SyntaxError);
    CHECK_THROWS_AS((void)parse_algebra("{\"dim\": 2}"), SyntaxError);
    CHECK_THROWS_AS(
        (void)parse_algebra("{\"dim\": 2, \"basis\": [\"X\"], \"brackets\": []}"), SyntaxError);

    // malformed JSON carries the offending line number
    try {
        (void)parse_algebra("{\n  \"dim\": 2,\n  \"brackets\": [\n}");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("(line 4)") != std::string::npos);
    }

    const std::string dup =
        "{\"dim\": 3, \"brackets\": ["
        "{\"left\": 1, \"right\": 2, \"result\": {\"3\": \"1\"}},"
        "{\"left\": 1, \"right\": 2, \"result\": {\"3\": \"2\"}}]}";
    CHECK_THROWS_AS((void)parse_algebra(dup), DuplicateBracket);

    const std::string oob =
        "{\"dim\": 2, \"brackets\": [{\"left\": 1, \"right\": 3, \"result\": {\"1\": \"1\"}}]}";
    CHECK_THROWS_AS((void)parse_algebra(oob), IndexOutOfRange);

    const std::string oob2 =
        "{\"dim\": 2, \"brackets\": [{\"left\": 1, \"right\": 2, \"result\": {\"5\": \"1\"}}]}";
    CHECK_THROWS_AS((void)parse_algebra(oob2), IndexOutOfRange);

    const std::string order =
        "{\"dim\": 2, \"brackets\": [{\"left\": 2, \"right\": 1, \"result\": {\"1\": \"1\"}}]}";
    CHECK_THROWS_AS((void)parse_algebra(order), SyntaxError);

    const std::string badkey =
        "{\"dim\": 2, \"brackets\": [{\"left\": 1, \"right\": 2, \"flip\": true, \"result\": {}}]}";
    CHECK_THROWS_AS((void)parse_algebra(badkey), SyntaxError);

    const std::string badrat =
        "{\"dim\": 2, \"brackets\": [{\"left\": 1, \"right\": 2, \"result\": {\"1\": \"1/0\"}}]}";
    CHECK_THROWS_AS((void)parse_algebra(badrat), SyntaxError);

    // a table that types correctly but breaks the Jacobi identity
    const std::string nonjacobi =
        "{\"dim\": 3, \"brackets\": ["
        "{\"left\": 1, \"right\": 2, \"result\": {\"3\": \"1\"}},"
        "{\"left\": 2, \"right\": 3, \"result\": {\"2\": \"1\"}}]}";
    CHECK_THROWS_AS((void)parse_algebra(nonjacobi), JacobiViolation);
}

TEST_CASE("classification agrees with the catalog's own labels") {
    ClassLabel a = classify(catalog_make("md41", {{"family", "1"}}).algebra).label;
    CHECK(a.tag == ClassTag::HeisenbergPlusAbelian);
    CHECK(a.m == 1);
    CHECK(a.k == 1);

    ClassLabel b = classify(catalog_make("md41", {{"family", "2"}}).algebra).label;
    CHECK(b.tag == ClassTag::AffPlusAbelian);
    CHECK(b.n == 4);

    ClassLabel c = classify(catalog_make("md51", {{"family", "1"}}).algebra).label;
    CHECK(c.tag == ClassTag::HeisenbergPlusAbelian);
    CHECK(c.m == 2);
    CHECK(c.k == 0);

    ClassLabel d = classify(catalog_make("md51", {{"family", "2"}}).algebra).label;
    CHECK(d.tag == ClassTag::AffPlusAbelian);
    CHECK(d.n == 5);
}
