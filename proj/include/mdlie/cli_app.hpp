#pragma once

/*
 * Command-line front end. Every verb prints line-oriented `tag: value` fields
 * (or the same fields as a JSON object under --json) and is deterministic
 * given its flags. Exit codes: 2 for usage or input errors, 1 when a
 * predicate verb answers negatively, 0 otherwise.
 */

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "classifier.hpp"
#include "kirillov.hpp"
#include "md.hpp"
#include "reports.hpp"

namespace mdlie {

namespace cli_detail {

class Printer {
  public:
    Printer(std::ostream& out, bool json) : out_(out), json_(json) {}

    void text(const std::string& tag, const std::string& value) {
        if (json_)
            doc_[tag] = value;
        else
            out_ << tag << ": " << value << "\n";
    }
    void number(const std::string& tag, long long value) {
        if (json_)
            doc_[tag] = value;
        else
            out_ << tag << ": " << value << "\n";
    }
    void number(const std::string& tag, std::size_t value) {
        number(tag, static_cast<long long>(value));
    }
    void flag(const std::string& tag, bool value) {
        if (json_)
            doc_[tag] = value;
        else
            out_ << tag << ": " << (value ? "yes" : "no") << "\n";
    }
    void push(const std::string& tag, const std::string& value) {
        if (json_)
            doc_[tag].push_back(value);
        else
            out_ << tag << ": " << value << "\n";
    }
    void push_object(const std::string& tag, const nlohmann::ordered_json& obj) {
        if (json_) {
            doc_[tag].push_back(obj);
        } else {
            for (const auto& [k, v] : obj.items()) out_ << k << ": " << v.get<std::string>() << "\n";
        }
    }
    void finish() {
        if (json_) out_ << doc_.dump(2) << "\n";
    }

  private:
    std::ostream& out_;
    bool json_;
    nlohmann::ordered_json doc_;
};

inline LieAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

inline std::vector<Rational> parse_functional(const std::string& text, std::size_t dim) {
    std::vector<Rational> f;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const std::size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) throw PreconditionError("empty entry in functional");
        const std::size_t b = item.find_last_not_of(" \t");
        f.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
    if (f.size() != dim)
        throw PreconditionError("functional needs " + std::to_string(dim) + " entries, got " +
                                std::to_string(f.size()));
    return f;
}

inline CatalogParams parse_params(const std::vector<std::string>& kvs) {
    CatalogParams params;
    for (const std::string& kv : kvs) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParamOutOfRange("--param expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        if (params.count(key)) throw ParamOutOfRange("parameter '" + key + "' given twice");
        params[key] = kv.substr(eq + 1);
    }
    return params;
}

inline void print_label(Printer& p, const ClassLabel& label) {
    p.text("label", label.to_string());
    for (const auto& [name, value] : label.params) p.push("param", name + " = " + param_to_string(value));
    if (!label.note.empty()) p.text("note", label.note);
}

inline void print_witness(Printer& p, const RatMatrix& w) {
    for (std::size_t i = 0; i < w.rows(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < w.cols(); ++j) {
            if (j) row += ",";
            row += format_rational(w(i, j));
        }
        p.push("witness-row", row);
    }
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for coadjoint-orbit dimensions of solvable Lie algebras"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "mirror the output fields as a JSON object");

    std::string file, file_b, functional_text, catalog_name, out_path, report_dir;
    std::vector<std::string> param_kvs;
    std::uint64_t seed = 0;
    std::size_t samples = 200, budget = 5000;
    bool sampled_only = false;

    CLI::App* check = app.add_subcommand("check", "validate an algebra file (exit 1 when invalid)");
    check->add_option("file", file, "algebra JSON file")->required();

    CLI::App* invariants =
        app.add_subcommand("invariants", "dimensions of the derived series and the center");
    invariants->add_option("file", file, "algebra JSON file")->required();

    CLI::App* orbit = app.add_subcommand("orbit-dim", "orbit dimension at one functional");
    orbit->add_option("file", file, "algebra JSON file")->required();
    orbit->add_option("--functional", functional_text, "coordinates 'q1,...,qn' in the dual basis")
        ->required();

    CLI::App* generic = app.add_subcommand("generic-rank", "maximal orbit dimension");
    generic->add_option("file", file, "algebra JSON file")->required();
    generic->add_flag("--sampled-only", sampled_only, "skip the symbolic rank, sample functionals");
    generic->add_option("--samples", samples, "sample count for --sampled-only")->capture_default_str();
    generic->add_option("--seed", seed, "random seed")->capture_default_str();

    CLI::App* md = app.add_subcommand("md", "decide whether every orbit has dimension 0 or the "
                                            "maximum (exit 1 when refuted)");
    md->add_option("file", file, "algebra JSON file")->required();
    md->add_option("--budget", budget, "rank evaluations for the falsifier")->capture_default_str();
    md->add_option("--seed", seed, "random seed")->capture_default_str();

    CLI::App* classify_cmd = app.add_subcommand("classify", "match against the classified families");
    classify_cmd->add_option("file", file, "algebra JSON file")->required();

    CLI::App* iso = app.add_subcommand("iso", "decide isomorphism (exit 1 when not isomorphic)");
    iso->add_option("file_a", file, "first algebra JSON file")->required();
    iso->add_option("file_b", file_b, "second algebra JSON file")->required();

    CLI::App* catalog = app.add_subcommand("catalog", "built-in algebra families");
    catalog->require_subcommand(1);
    CLI::App* cat_list = catalog->add_subcommand("list", "list entries with parameter signatures");
    CLI::App* cat_emit = catalog->add_subcommand("emit", "write one entry as an algebra JSON file");
    cat_emit->add_option("name", catalog_name, "catalog entry name")->required();
    cat_emit->add_option("--param", param_kvs, "entry parameter key=value (repeatable)");
    cat_emit->add_option("--out", out_path, "write to a file instead of standard output");

    CLI::App* report = app.add_subcommand("report", "machine-checked reproduction reports");
    CLI::App* rep_tables = report->add_subcommand("tables", "run the acceptance criteria and write "
                                                            "one report file per reproduced table");
    report->require_subcommand(1);
    rep_tables->add_option("--out", report_dir, "output directory")->required();
    rep_tables->add_option("--seed", seed, "random seed")->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    cli_detail::Printer p(out, json);

    if (check->parsed()) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            err << "error: cannot read file " << file << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        try {
            parse_algebra(ss.str());
        } catch (const std::exception& e) {
            p.flag("valid", false);
            p.text("error", e.what());
            p.finish();
            return 1;
        }
        p.flag("valid", true);
        p.finish();
        return 0;
    }

    try {
        if (invariants->parsed()) {
            LieAlgebra g = cli_detail::load_algebra(file);
            if (!g.name().empty()) p.text("name", g.name());
            p.number("dim", g.dim());
            RatMatrix derived = g.derived_ideal();
            p.number("derived-dim", derived.cols());
            p.number("second-derived-dim", g.second_derived().cols());
            p.number("center-dim", g.center().cols());
            p.flag("commutative", g.is_commutative());
            p.flag("derived-commutative", g.spans_commute(derived));
            p.finish();
            return 0;
        }

        if (orbit->parsed()) {
            LieAlgebra g = cli_detail::load_algebra(file);
            std::vector<Rational> f = cli_detail::parse_functional(functional_text, g.dim());
            p.text("functional", detail::join_rationals(f));
            p.number("orbit-dim", orbit_dimension(g, f));
            p.finish();
            return 0;
        }

        if (generic->parsed()) {
            LieAlgebra g = cli_detail::load_algebra(file);
            if (sampled_only) {
                p.text("method", "sampled");
                p.number("samples", samples);
                p.number("seed", static_cast<long long>(seed));
                p.number("generic-rank", sampled_generic_dimension(g, samples, seed));
            } else {
                p.text("method", "symbolic");
                p.number("generic-rank", generic_orbit_dimension(g));
            }
            p.finish();
            return 0;
        }

        if (md->parsed()) {
            LieAlgebra g = cli_detail::load_algebra(file);
            MdVerdict v = md_decide(g, budget, seed);
            p.text("status", to_string(v.status));
            p.text("reason", v.reason);
            if (v.witness) {
                p.text("witness", detail::join_rationals(*v.witness));
                p.number("witness-dim", v.witness_dim);
            }
            if (v.evaluations > 0 || v.witness) {
                p.number("generic-dim", v.generic_dim);
                p.number("evaluations", v.evaluations);
            }
            p.number("budget", budget);
            p.number("seed", static_cast<long long>(seed));
            p.finish();
            return v.status == MdStatus::NotMD ? 1 : 0;
        }

        if (classify_cmd->parsed()) {
            LieAlgebra g = cli_detail::load_algebra(file);
            ClassifyOutcome o = classify(g);
            cli_detail::print_label(p, o.label);
            if (o.witness) {
                p.flag("checked", o.checked);
                cli_detail::print_witness(p, *o.witness);
            }
            p.finish();
            return 0;
        }

        if (iso->parsed()) {
            LieAlgebra a = cli_detail::load_algebra(file);
            LieAlgebra b = cli_detail::load_algebra(file_b);
            if (a.derived_ideal().cols() == 1 && b.derived_ideal().cols() == 1) {
                ClassificationResult ra = classify_dim1_derived(a), rb = classify_dim1_derived(b);
                const bool related = a.dim() == b.dim() && same_label(ra.label, rb.label);
                p.flag("related", related);
                p.text("method", "dim1-label");
                p.text("label-a", ra.label.to_string());
                p.text("label-b", rb.label.to_string());
                p.finish();
                return related ? 0 : 1;
            }
            ScaledSimilarity s = iso_codim1(a, b);
            p.flag("related", s.related);
            p.text("method", "codim1-scaled-similarity");
            if (s.related) {
                if (s.scalar_rational) {
                    p.text("scale", format_rational(s.scalar));
                } else {
                    p.text("scale-min-poly", poly_to_string(s.scalar_min_poly));
                    p.text("scale-approx", s.scalar_root->approx_string());
                }
            }
            p.finish();
            return s.related ? 0 : 1;
        }

        if (cat_list->parsed()) {
            for (const CatalogInfo& info : catalog_list())
                p.push_object("entries", {{"entry", info.name},
                                          {"params", info.signature},
                                          {"source", info.provenance}});
            p.finish();
            return 0;
        }

        if (cat_emit->parsed()) {
            CatalogEntry entry = catalog_make(catalog_name, cli_detail::parse_params(param_kvs));
            const std::string doc = emit_algebra(entry.algebra);
            if (out_path.empty()) {
                out << doc;
            } else {
                std::ofstream of(out_path, std::ios::binary);
                if (!of) throw PreconditionError("cannot write file " + out_path);
                of << doc;
                p.text("written", out_path);
                p.finish();
            }
            return 0;
        }

        if (rep_tables->parsed()) {
            std::filesystem::create_directories(report_dir);
            ReportRun run = write_reports(report_dir, run_all_criteria(seed), seed);
            for (const ReportFile& f : run.files)
                p.push("table", f.name + " " + (f.pass ? "PASS" : "FAIL"));
            p.text("directory", report_dir);
            p.text("overall", run.all_pass ? "PASS" : "FAIL");
            p.finish();
            return run.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace mdlie
