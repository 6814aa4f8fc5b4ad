// Acceptance suite: runs every numbered criterion, prints one PASS/FAIL line
// per criterion with its runtime against the pinned limit, then writes the
// table reports twice and checks they are byte-identical.  Exits nonzero if
// anything fails.
#include <mdlie/reports.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    constexpr std::uint64_t seed = 0;
    bool all_pass = true;

    std::vector<mdlie::CriterionResult> criteria = mdlie::run_all_criteria(seed);
    for (const mdlie::CriterionResult& r : criteria) {
        std::printf("%s criterion %d (%.2fs < %gs): %s\n", r.pass() ? "PASS" : "FAIL", r.index,
                    r.seconds, r.limit_seconds, r.title.c_str());
        for (const mdlie::CheckLine& c : r.checks)
            if (!c.pass) std::printf("    failed check: %s\n", c.text.c_str());
        if (!r.within_limit()) std::printf("    exceeded time limit\n");
        all_pass = all_pass && r.pass();
    }

    const fs::path dir_a = fs::temp_directory_path() / "mdlie-acceptance-reports-a";
    const fs::path dir_b = fs::temp_directory_path() / "mdlie-acceptance-reports-b";
    fs::create_directories(dir_a);
    fs::create_directories(dir_b);
    mdlie::ReportRun run = mdlie::write_reports(dir_a.string(), criteria, seed);
    mdlie::write_reports(dir_b.string(), criteria, seed);
    for (const mdlie::ReportFile& f : run.files) {
        std::printf("%s report %s\n", f.pass ? "PASS" : "FAIL", f.name.c_str());
        all_pass = all_pass && f.pass;
        const std::string a = slurp(dir_a / f.name);
        if (a.empty() || a != slurp(dir_b / f.name)) {
            std::printf("FAIL report %s is not reproducible\n", f.name.c_str());
            all_pass = false;
        }
    }

    std::printf("overall: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
