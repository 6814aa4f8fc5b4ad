#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mdlie/cli_app.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mdlie;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const std::string& fixture_dir() {
    static std::string dir = [] {
        fs::path d = fs::temp_directory_path() / "mdlie-cli-fixtures";
        fs::create_directories(d);
        auto write = [&](const char* name, const std::string& text) {
            std::ofstream f(d / name, std::ios::binary);
            f << text;
        };
        auto emit = [&](const char* name, const LieAlgebra& g) { write(name, emit_algebra(g)); };

        emit("h5.json", catalog_make("heisenberg", {{"m", "2"}}).algebra);
        RatMatrix c = RatMatrix::identity(5);
        c(0, 3) = Rational(2);
        c(2, 4) = Rational(-1, 2);
        c(1, 1) = Rational(3);
        emit("h5scr.json", catalog_make("heisenberg", {{"m", "2"}}).algebra.apply_basis_change(c));
        emit("h3r2.json", direct_sum(catalog_make("heisenberg", {{"m", "1"}}).algebra,
                                     LieAlgebra(2)));
        emit("md43a.json",
             catalog_make("md43", {{"family", "1.1"}, {"lambda1", "3"}, {"lambda2", "5"}}).algebra);
        RatMatrix scaled(3, 3);
        scaled(0, 0) = Rational(6);
        scaled(1, 1) = Rational(10);
        scaled(2, 2) = Rational(2);
        emit("md43b.json", construct_from_matrix(scaled));
        emit("md43c.json", catalog_make("md43", {{"family", "1.3"}}).algebra);
        emit("diamond2.json", catalog_make("diamond", {{"m", "2"}}).algebra);
        emit("diamond2r.json",
             direct_sum(catalog_make("diamond", {{"m", "2"}}).algebra, LieAlgebra(1)));
        emit("nil5.json", catalog_make("nil5").algebra);
        write("badtable.json",
              "{\"dim\": 3, \"brackets\": ["
              "{\"left\": 1, \"right\": 2, \"result\": {\"3\": \"1\"}},"
              "{\"left\": 2, \"right\": 3, \"result\": {\"2\": \"1\"}}]}");
        write("garbage.json", "{ not json");
        return d.string();
    }();
    return dir;
}

std::string fx(const char* name) { return fixture_dir() + "/" + name; }

}  // namespace

TEST_CASE("usage and help") {
    CHECK(run({"--help"}).code == 0);
    CHECK(contains(run({"--help"}).out, "check"));
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"orbit-dim", fx("h5.json")}).code == 2);  // missing --functional
    CHECK(run({"catalog"}).code == 2);                   // missing subcommand
}

TEST_CASE("check validates algebra files") {
    CliResult ok = run({"check", fx("h5.json")});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "valid: yes"));

    CliResult bad = run({"check", fx("badtable.json")});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "valid: no"));
    CHECK(contains(bad.out, "Jacobi identity fails at triple (1,2,3)"));

    CliResult garbage = run({"check", fx("garbage.json")});
    CHECK(garbage.code == 1);
    CHECK(contains(garbage.out, "valid: no"));
    CHECK(contains(garbage.out, "invalid JSON"));

    CliResult gone = run({"check", fx("missing.json")});
    CHECK(gone.code == 2);
    CHECK(contains(gone.err, "cannot read file"));

    CliResult js = run({"--json", "check", fx("badtable.json")});
    CHECK(js.code == 1);
    auto doc = nlohmann::ordered_json::parse(js.out);
    CHECK(doc["valid"] == false);
    CHECK(contains(doc["error"].get<std::string>(), "Jacobi"));
}

TEST_CASE("invariants") {
    CliResult r = run({"invariants", fx("diamond2.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "dim: 6"));
    CHECK(contains(r.out, "derived-dim: 5"));
    CHECK(contains(r.out, "second-derived-dim: 1"));
    CHECK(contains(r.out, "center-dim: 1"));
    CHECK(contains(r.out, "commutative: no"));
    CHECK(contains(r.out, "derived-commutative: no"));

    CliResult js = run({"--json", "invariants", fx("h5.json")});
    auto doc = nlohmann::ordered_json::parse(js.out);
    CHECK(doc["dim"] == 5);
    CHECK(doc["derived-dim"] == 1);
    CHECK(doc["derived-commutative"] == true);
}

TEST_CASE("orbit-dim at a functional") {
    CliResult r = run({"orbit-dim", fx("h5.json"), "--functional", "0,0,0,0,1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "functional: 0,0,0,0,1"));
    CHECK(contains(r.out, "orbit-dim: 4"));

    CliResult zero = run({"orbit-dim", fx("h5.json"), "--functional", "1/2, -3, 0, 7, 0"});
    CHECK(zero.code == 0);
    CHECK(contains(zero.out, "orbit-dim: 0"));

    CHECK(run({"orbit-dim", fx("h5.json"), "--functional", "1,2,3"}).code == 2);
    CHECK(run({"orbit-dim", fx("h5.json"), "--functional", "1,2,3,4,x"}).code == 2);
}

TEST_CASE("generic-rank, symbolic and sampled") {
    CliResult sym = run({"generic-rank", fx("h5.json")});
    CHECK(sym.code == 0);
    CHECK(contains(sym.out, "method: symbolic"));
    CHECK(contains(sym.out, "generic-rank: 4"));

    CliResult smp = run({"generic-rank", fx("h5.json"), "--sampled-only", "--samples", "30",
                         "--seed", "5"});
    CHECK(smp.code == 0);
    CHECK(contains(smp.out, "method: sampled"));
    CHECK(contains(smp.out, "samples: 30"));
    CHECK(contains(smp.out, "seed: 5"));
    CHECK(contains(smp.out, "generic-rank: 4"));
    CHECK(run({"generic-rank", fx("h5.json"), "--sampled-only", "--samples", "30", "--seed", "5"})
              .out == smp.out);  // deterministic
}

TEST_CASE("md verdicts and exit codes") {
    CliResult md = run({"md", fx("h5.json")});
    CHECK(md.code == 0);
    CHECK(contains(md.out, "status: MD"));
    CHECK(contains(md.out, "reason: Thm4.1"));

    CliResult not_md = run({"md", fx("diamond2.json")});
    CHECK(not_md.code == 1);
    CHECK(contains(not_md.out, "status: NotMD"));
    CHECK(contains(not_md.out, "reason: Thm4.3(ii)"));

    CliResult refuted = run({"md", fx("diamond2r.json")});
    CHECK(refuted.code == 1);
    CHECK(contains(refuted.out, "reason: Falsifier"));
    CHECK(contains(refuted.out, "witness: "));
    CHECK(contains(refuted.out, "witness-dim: 2"));
    CHECK(contains(refuted.out, "generic-dim: 4"));

    CliResult open = run({"md", fx("nil5.json"), "--budget", "200", "--seed", "3"});
    CHECK(open.code == 0);
    CHECK(contains(open.out, "status: Undecided"));
    CHECK(contains(open.out, "reason: SamplingEvidence"));
    CHECK(contains(open.out, "evaluations: 200"));
    CHECK(contains(open.out, "budget: 200"));

    CliResult js = run({"--json", "md", fx("diamond2.json")});
    CHECK(js.code == 1);
    auto doc = nlohmann::ordered_json::parse(js.out);
    CHECK(doc["status"] == "NotMD");
    CHECK(doc["reason"] == "Thm4.3(ii)");
    CHECK(doc["budget"] == 5000);
}

TEST_CASE("classify prints the label and a checked witness when available") {
    CliResult r = run({"classify", fx("h5.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "label: HeisenbergPlusAbelian{m=2, k=0}"));
    CHECK(contains(r.out, "checked: yes"));

    CliResult scr = run({"classify", fx("h5scr.json")});
    CHECK(contains(scr.out, "label: HeisenbergPlusAbelian{m=2, k=0}"));

    CliResult fam = run({"classify", fx("md43a.json")});
    CHECK(contains(fam.out, "label: MD43Family{1.1, lambda1 = 3, lambda2 = 5}"));
    CHECK(contains(fam.out, "param: lambda1 = 3"));

    CliResult js = run({"--json", "classify", fx("h5.json")});
    auto doc = nlohmann::ordered_json::parse(js.out);
    CHECK(doc["label"] == "HeisenbergPlusAbelian{m=2, k=0}");
    CHECK(doc["checked"] == true);
    CHECK(doc["witness-row"].is_array());
    CHECK(doc["witness-row"].size() == 5);
}

TEST_CASE("iso on 1-dimensional derived ideals compares labels") {
    CliResult same = run({"iso", fx("h5.json"), fx("h5scr.json")});
    CHECK(same.code == 0);
    CHECK(contains(same.out, "related: yes"));
    CHECK(contains(same.out, "method: dim1-label"));

    CliResult diff = run({"iso", fx("h5.json"), fx("h3r2.json")});
    CHECK(diff.code == 1);
    CHECK(contains(diff.out, "related: no"));
    CHECK(contains(diff.out, "label-a: HeisenbergPlusAbelian{m=2, k=0}"));
    CHECK(contains(diff.out, "label-b: HeisenbergPlusAbelian{m=1, k=2}"));
}

TEST_CASE("iso on commutative 1-codimensional derived ideals uses scaled similarity") {
    CliResult rel = run({"iso", fx("md43a.json"), fx("md43b.json")});
    CHECK(rel.code == 0);
    CHECK(contains(rel.out, "related: yes"));
    CHECK(contains(rel.out, "method: codim1-scaled-similarity"));
    CHECK(contains(rel.out, "scale: 2"));

    CliResult unrel = run({"iso", fx("md43a.json"), fx("md43c.json")});
    CHECK(unrel.code == 1);
    CHECK(contains(unrel.out, "related: no"));

    CliResult unsupported = run({"iso", fx("h5.json"), fx("md43a.json")});
    CHECK(unsupported.code == 2);
    CHECK(contains(unsupported.err, "error:"));
}

TEST_CASE("catalog list and emit") {
    CliResult list = run({"catalog", "list"});
    CHECK(list.code == 0);
    CHECK(contains(list.out, "entry: heisenberg"));
    CHECK(contains(list.out, "entry: md54"));

    CliResult js = run({"--json", "catalog", "list"});
    auto doc = nlohmann::ordered_json::parse(js.out);
    CHECK(doc["entries"].size() == 14);

    CliResult emit = run({"catalog", "emit", "heisenberg", "--param", "m=2"});
    CHECK(emit.code == 0);
    CHECK(parse_algebra(emit.out).same_constants(catalog_make("heisenberg", {{"m", "2"}}).algebra));

    const std::string target = fixture_dir() + "/emitted.json";
    CliResult to_file = run({"catalog", "emit", "md44", "--param", "family=2.1", "--out", target});
    CHECK(to_file.code == 0);
    CHECK(contains(to_file.out, "written: " + target));
    CHECK(run({"check", target}).code == 0);

    CHECK(run({"catalog", "emit", "nosuch"}).code == 2);
    CHECK(run({"catalog", "emit", "heisenberg", "--param", "m=0"}).code == 2);
    CHECK(run({"catalog", "emit", "heisenberg", "--param", "m"}).code == 2);
    CHECK(run({"catalog", "emit", "heisenberg", "--param", "m=1", "--param", "m=2"}).code == 2);
}

TEST_CASE("report tables writes one file per table and fails honestly") {
    const std::string dir = fixture_dir() + "/reports";
    CliResult r = run({"report", "tables", "--out", dir});
    CHECK(r.code == 1);  // the quartic-orbit table does not reproduce
    CHECK(contains(r.out, "table: thm4_1.txt PASS"));
    CHECK(contains(r.out, "table: sec5.txt FAIL"));
    CHECK(contains(r.out, "overall: FAIL"));
    for (const char* name : {"prop3_1.txt", "prop3_2.txt", "prop3_3.txt", "prop3_4.txt",
                             "prop3_5.txt", "thm4_1.txt", "thm4_3.txt", "thm4_5.txt", "sec5.txt"})
        CHECK(fs::exists(fs::path(dir) / name));

    // identical invocations produce byte-identical reports
    std::ifstream f1(fs::path(dir) / "thm4_3.txt", std::ios::binary);
    std::ostringstream s1;
    s1 << f1.rdbuf();
    const std::string dir2 = fixture_dir() + "/reports2";
    CHECK(run({"report", "tables", "--out", dir2}).code == 1);
    std::ifstream f2(fs::path(dir2) / "thm4_3.txt", std::ios::binary);
    std::ostringstream s2;
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK_FALSE(s1.str().empty());
}
