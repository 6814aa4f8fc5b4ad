#pragma once

/*
 * Named constructors for the worked algebra families and the JSON file
 * format for user-defined algebras.
 *
 * File format (UTF-8, JSON):
 *   { "name": optional text, "dim": n >= 1, "basis": optional n labels,
 *     "brackets": [ { "left": i, "right": j, "result": { "k": "p/q", ... } } ] }
 * Indices are 1-based with left < right, at most one entry per pair; omitted
 * pairs are zero and antisymmetric completion is implied. Parsing is strict:
 * unknown keys are rejected and the Jacobi identity is checked.
 */

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "classifier.hpp"
#include "errors.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace mdlie {

using CatalogParams = std::map<std::string, std::string>;

struct CatalogEntry {
    std::string name;
    CatalogParams params;
    LieAlgebra algebra{1};
    std::string provenance;
};

// one row of `catalog list`
struct CatalogInfo {
    std::string name;
    std::string signature;  // parameter names and ranges
    std::string provenance;
};

inline std::vector<CatalogInfo> catalog_list() {
    return {
        {"abelian", "n (integer >= 1)", "elementary; direct-sum tail used throughout"},
        {"aff", "none", "sec2.3: [X,Y] = Y"},
        {"heisenberg", "m (integer >= 1)", "sec2.4: [X_i,Y_i] = Z"},
        {"diamond", "m (integer >= 1)", "sec2.5: extends heisenberg by [T,X_i] = -X_i, [T,Y_i] = Y_i"},
        {"md41", "family (1 or 2)", "prop3.1: the two algebras with 1-dimensional derived ideal"},
        {"md43", "family (1.1-1.4) + lambda/lambda1/lambda2/cos/sin as the family requires",
         "prop3.2 case 1: commutative 3-dimensional derived ideal"},
        {"md44", "family (2.1 or 2.2)", "prop3.2 case 2: derived ideal h_3"},
        {"md51", "family (1 or 2)", "prop3.3: the two algebras with 1-dimensional derived ideal"},
        {"md54", "family (4.1-4.14) + lambda/lambda1/lambda2/lambda3/mu/cos/sin as the family requires",
         "prop3.4: commutative 4-dimensional derived ideal, generator acting invertibly"},
        {"nil5", "none", "prop3.5 item (iii); the source list omits some decomposables (non-exhaustive)"},
        {"nil6", "none", "prop3.5 item (iv); the source list omits some decomposables (non-exhaustive)"},
        {"g2m", "m (integer >= 2)", "sec5.2: [X_1,X_k] = X_k with a rotation action of X_2"},
        {"g2m1", "m (integer >= 2)", "sec5.2: adds [X_3,X_4] = X_{2m+1}, [X_1,X_{2m+1}] = 2X_{2m+1}"},
        {"affc", "none",
         "sec5.2: realification with the standard convention; the source names the algebra "
         "without printing constants"},
    };
}

namespace detail {

inline int param_int(const CatalogParams& p, const std::string& key, int min_value) {
    auto it = p.find(key);
    if (it == p.end()) throw ParamOutOfRange("missing parameter '" + key + "'");
    int v = 0;
    try {
        std::size_t pos = 0;
        v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParamOutOfRange("parameter '" + key + "' must be an integer, got '" + it->second + "'");
    }
    if (v < min_value)
        throw ParamOutOfRange("parameter '" + key + "' must be at least " + std::to_string(min_value));
    return v;
}

inline Rational param_rat(const CatalogParams& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw ParamOutOfRange("missing parameter '" + key + "'");
    try {
        return parse_rational(it->second);
    } catch (const std::exception&) {
        throw ParamOutOfRange("parameter '" + key + "' must be a rational 'p' or 'p/q', got '" +
                              it->second + "'");
    }
}

inline std::string param_text(const CatalogParams& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw ParamOutOfRange("missing parameter '" + key + "'");
    return it->second;
}

inline void reject_extras(const CatalogParams& p, const std::set<std::string>& allowed) {
    for (const auto& [k, v] : p)
        if (!allowed.count(k)) throw ParamOutOfRange("unexpected parameter '" + k + "'");
}

inline void require_nonzero(const Rational& v, const std::string& key) {
    if (is_zero(v)) throw ParamOutOfRange("parameter '" + key + "' must be nonzero");
}

inline void require_not_unit(const Rational& v, const std::string& key) {
    require_nonzero(v, key);
    if (v == Rational(1)) throw ParamOutOfRange("parameter '" + key + "' must avoid 0 and 1");
}

inline void require_distinct(const Rational& a, const Rational& b, const std::string& ka,
                             const std::string& kb) {
    if (a == b) throw ParamOutOfRange("parameters '" + ka + "' and '" + kb + "' must differ");
}

// exact point on the unit circle with positive sine (angle strictly inside (0, pi))
inline void require_rotation(const Rational& c, const Rational& s) {
    if (c * c + s * s != Rational(1))
        throw ParamOutOfRange("parameters 'cos' and 'sin' must satisfy cos^2 + sin^2 = 1");
    if (s.sign() <= 0) throw ParamOutOfRange("parameter 'sin' must be positive");
}

inline std::vector<std::string> numbered(const std::string& stem, std::size_t count,
                                         std::size_t from = 1) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(stem + std::to_string(from + i));
    return v;
}

inline RatMatrix rotation_block(const Rational& c, const Rational& s) {
    RatMatrix m(2, 2);
    m(0, 0) = c; m(0, 1) = -s;
    m(1, 0) = s; m(1, 1) = c;
    return m;
}

inline RatMatrix jordan(std::size_t size, const Rational& v) {
    RatMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = v;
        if (i + 1 < size) m(i, i + 1) = Rational(1);
    }
    return m;
}

inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline RatMatrix diag_matrix(const std::vector<Rational>& v) {
    RatMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
    return m;
}

inline RatMatrix md43_matrix(const std::string& family, const CatalogParams& p) {
    if (family == "1.1") {
        reject_extras(p, {"family", "lambda1", "lambda2"});
        Rational l1 = param_rat(p, "lambda1"), l2 = param_rat(p, "lambda2");
        require_nonzero(l1, "lambda1");
        require_nonzero(l2, "lambda2");
        return diag_matrix({l1, l2, Rational(1)});
    }
    if (family == "1.2") {
        reject_extras(p, {"family", "lambda"});
        Rational l = param_rat(p, "lambda");
        require_nonzero(l, "lambda");
        return block_diag(jordan(2, l), diag_matrix({Rational(1)}));
    }
    if (family == "1.3") {
        reject_extras(p, {"family"});
        return jordan(3, Rational(1));
    }
    if (family == "1.4") {
        reject_extras(p, {"family", "lambda", "cos", "sin"});
        Rational l = param_rat(p, "lambda"), c = param_rat(p, "cos"), s = param_rat(p, "sin");
        require_nonzero(l, "lambda");
        require_rotation(c, s);
        return block_diag(rotation_block(c, s), diag_matrix({l}));
    }
    throw ParamOutOfRange("family must be one of 1.1, 1.2, 1.3, 1.4");
}

inline RatMatrix md54_matrix(const std::string& family, const CatalogParams& p) {
    const Rational one(1);
    if (family == "4.1") {
        reject_extras(p, {"family", "lambda1", "lambda2", "lambda3"});
        Rational l1 = param_rat(p, "lambda1"), l2 = param_rat(p, "lambda2"), l3 = param_rat(p, "lambda3");
        require_not_unit(l1, "lambda1");
        require_not_unit(l2, "lambda2");
        require_not_unit(l3, "lambda3");
        require_distinct(l1, l2, "lambda1", "lambda2");
        require_distinct(l1, l3, "lambda1", "lambda3");
        require_distinct(l2, l3, "lambda2", "lambda3");
        return diag_matrix({l1, l2, l3, one});
    }
    if (family == "4.2") {
        reject_extras(p, {"family", "lambda1", "lambda2"});
        Rational l1 = param_rat(p, "lambda1"), l2 = param_rat(p, "lambda2");
        require_not_unit(l1, "lambda1");
        require_not_unit(l2, "lambda2");
        require_distinct(l1, l2, "lambda1", "lambda2");
        return diag_matrix({l1, l2, one, one});
    }
    if (family == "4.3" || family == "4.4" || family == "4.7" || family == "4.8" || family == "4.9") {
        reject_extras(p, {"family", "lambda"});
        Rational l = param_rat(p, "lambda");
        require_not_unit(l, "lambda");
        if (family == "4.3") return diag_matrix({l, l, one, one});
        if (family == "4.4") return diag_matrix({l, one, one, one});
        if (family == "4.7") return block_diag(diag_matrix({l, l}), jordan(2, one));
        if (family == "4.8") return block_diag(jordan(2, l), jordan(2, one));
        return block_diag(diag_matrix({l}), jordan(3, one));
    }
    if (family == "4.5") {
        reject_extras(p, {"family"});
        return diag_matrix({one, one, one, one});
    }
    if (family == "4.6") {
        reject_extras(p, {"family", "lambda1", "lambda2"});
        Rational l1 = param_rat(p, "lambda1"), l2 = param_rat(p, "lambda2");
        require_not_unit(l1, "lambda1");
        require_not_unit(l2, "lambda2");
        require_distinct(l1, l2, "lambda1", "lambda2");
        return block_diag(diag_matrix({l1, l2}), jordan(2, one));
    }
    if (family == "4.10") {
        reject_extras(p, {"family"});
        return jordan(4, one);
    }
    if (family == "4.11") {
        reject_extras(p, {"family", "lambda1", "lambda2", "cos", "sin"});
        Rational l1 = param_rat(p, "lambda1"), l2 = param_rat(p, "lambda2");
        Rational c = param_rat(p, "cos"), s = param_rat(p, "sin");
        require_nonzero(l1, "lambda1");
        require_nonzero(l2, "lambda2");
        require_distinct(l1, l2, "lambda1", "lambda2");
        require_rotation(c, s);
        return block_diag(rotation_block(c, s), diag_matrix({l1, l2}));
    }
    if (family == "4.12" || family == "4.13") {
        reject_extras(p, {"family", "lambda", "cos", "sin"});
        Rational l = param_rat(p, "lambda"), c = param_rat(p, "cos"), s = param_rat(p, "sin");
        require_nonzero(l, "lambda");
        require_rotation(c, s);
        if (family == "4.12") return block_diag(rotation_block(c, s), diag_matrix({l, l}));
        return block_diag(rotation_block(c, s), jordan(2, l));
    }
    if (family == "4.14") {
        reject_extras(p, {"family", "lambda", "mu", "cos", "sin"});
        Rational l = param_rat(p, "lambda"), mu = param_rat(p, "mu");
        Rational c = param_rat(p, "cos"), s = param_rat(p, "sin");
        if (mu.sign() <= 0) throw ParamOutOfRange("parameter 'mu' must be positive");
        require_rotation(c, s);
        RatMatrix second(2, 2);
        second(0, 0) = l; second(0, 1) = -mu;
        second(1, 0) = mu; second(1, 1) = l;
        return block_diag(rotation_block(c, s), second);
    }
    throw ParamOutOfRange("family must be one of 4.1 through 4.14");
}

inline std::string render_params(const std::string& name, const CatalogParams& p) {
    // fixed key order per entry so rendered names are deterministic
    static const std::vector<std::string> order = {"n",       "m",       "family", "lambda",
                                                   "lambda1", "lambda2", "lambda3", "mu",
                                                   "cos",     "sin"};
    std::string out = name;
    char sep = '(';
    for (const std::string& key : order) {
        auto it = p.find(key);
        if (it == p.end()) continue;
        out += sep + key + "=" + it->second;
        sep = ',';
    }
    if (sep == ',') out += ')';
    return out;
}

}  // namespace detail

inline CatalogEntry catalog_make(const std::string& name, const CatalogParams& params = {}) {
    CatalogEntry entry;
    entry.name = name;
    entry.params = params;
    for (const CatalogInfo& info : catalog_list())
        if (info.name == name) entry.provenance = info.provenance;

    if (name == "abelian") {
        detail::reject_extras(params, {"n"});
        int n = detail::param_int(params, "n", 1);
        entry.algebra = LieAlgebra(static_cast<std::size_t>(n));
    } else if (name == "aff") {
        detail::reject_extras(params, {});
        LieAlgebra g(2);
        g.set_labels({"X", "Y"});
        g.add_to_bracket(0, 1, 1, Rational(1));
        entry.algebra = g;
    } else if (name == "heisenberg") {
        detail::reject_extras(params, {"m"});
        int m = detail::param_int(params, "m", 1);
        LieAlgebra g(2 * static_cast<std::size_t>(m) + 1);
        std::vector<std::string> labels;
        for (int i = 1; i <= m; ++i) {
            labels.push_back("X" + std::to_string(i));
            labels.push_back("Y" + std::to_string(i));
        }
        labels.push_back("Z");
        g.set_labels(labels);
        for (int i = 0; i < m; ++i)
            g.add_to_bracket(2 * static_cast<std::size_t>(i), 2 * static_cast<std::size_t>(i) + 1,
                             2 * static_cast<std::size_t>(m), Rational(1));
        entry.algebra = g;
    } else if (name == "diamond") {
        detail::reject_extras(params, {"m"});
        int m = detail::param_int(params, "m", 1);
        const std::size_t um = static_cast<std::size_t>(m);
        LieAlgebra g(2 * um + 2);
        std::vector<std::string> labels;
        for (int i = 1; i <= m; ++i) {
            labels.push_back("X" + std::to_string(i));
            labels.push_back("Y" + std::to_string(i));
        }
        labels.push_back("Z");
        labels.push_back("T");
        g.set_labels(labels);
        for (std::size_t i = 0; i < um; ++i) {
            g.add_to_bracket(2 * i, 2 * i + 1, 2 * um, Rational(1));
            g.add_to_bracket(2 * um + 1, 2 * i, 2 * i, Rational(-1));
            g.add_to_bracket(2 * um + 1, 2 * i + 1, 2 * i + 1, Rational(1));
        }
        entry.algebra = g;
    } else if (name == "md41") {
        detail::reject_extras(params, {"family"});
        std::string family = detail::param_text(params, "family");
        LieAlgebra g(4);
        g.set_labels({"X", "Y", "Z", "T"});
        if (family == "1") {
            g.add_to_bracket(0, 1, 2, Rational(1));  // h_3 plus a central line
        } else if (family == "2") {
            g.add_to_bracket(0, 1, 1, Rational(1));  // aff plus two central lines
        } else {
            throw ParamOutOfRange("family must be 1 or 2");
        }
        entry.algebra = g;
    } else if (name == "md43") {
        std::string family = detail::param_text(params, "family");
        LieAlgebra g = construct_from_matrix(detail::md43_matrix(family, params));
        g.set_labels({"X", "Y", "Z", "T"});
        entry.algebra = g;
    } else if (name == "md44") {
        detail::reject_extras(params, {"family"});
        std::string family = detail::param_text(params, "family");
        LieAlgebra g(4);
        g.set_labels({"X", "Y", "Z", "T"});
        g.add_to_bracket(0, 1, 2, Rational(1));
        if (family == "2.1") {
            g.add_to_bracket(3, 0, 1, Rational(-1));
            g.add_to_bracket(3, 1, 0, Rational(1));
        } else if (family == "2.2") {
            g.add_to_bracket(3, 0, 0, Rational(-1));
            g.add_to_bracket(3, 1, 1, Rational(1));
        } else {
            throw ParamOutOfRange("family must be 2.1 or 2.2");
        }
        entry.algebra = g;
    } else if (name == "md51") {
        detail::reject_extras(params, {"family"});
        std::string family = detail::param_text(params, "family");
        LieAlgebra g(5);
        g.set_labels(detail::numbered("X", 5));
        if (family == "1") {
            g.add_to_bracket(0, 1, 4, Rational(1));  // the 5-dimensional Heisenberg algebra
            g.add_to_bracket(2, 3, 4, Rational(1));
        } else if (family == "2") {
            g.add_to_bracket(3, 4, 4, Rational(1));  // aff plus three central lines
        } else {
            throw ParamOutOfRange("family must be 1 or 2");
        }
        entry.algebra = g;
    } else if (name == "md54") {
        std::string family = detail::param_text(params, "family");
        LieAlgebra g = construct_from_matrix(detail::md54_matrix(family, params));
        g.set_labels(detail::numbered("X", 5));
        entry.algebra = g;
    } else if (name == "nil5") {
        detail::reject_extras(params, {});
        LieAlgebra g(5);
        g.set_labels({"X1", "X2", "X3", "Y1", "Y2"});
        g.add_to_bracket(0, 1, 2, Rational(1));  // [X1,X2] = X3
        g.add_to_bracket(0, 2, 3, Rational(1));  // [X1,X3] = Y1
        g.add_to_bracket(1, 2, 4, Rational(1));  // [X2,X3] = Y2
        entry.algebra = g;
    } else if (name == "nil6") {
        detail::reject_extras(params, {});
        LieAlgebra g(6);
        g.set_labels({"X1", "X2", "X3", "Y1", "Y2", "Y3"});
        g.add_to_bracket(0, 1, 5, Rational(1));  // [X1,X2] = Y3
        g.add_to_bracket(1, 2, 3, Rational(1));  // [X2,X3] = Y1
        g.add_to_bracket(2, 0, 4, Rational(1));  // [X3,X1] = Y2
        entry.algebra = g;
    } else if (name == "g2m" || name == "g2m1") {
        detail::reject_extras(params, {"m"});
        int m = detail::param_int(params, "m", 2);
        const std::size_t um = static_cast<std::size_t>(m);
        const std::size_t n = name == "g2m" ? 2 * um : 2 * um + 1;
        LieAlgebra g(n);
        g.set_labels(detail::numbered("X", n));
        for (std::size_t k = 3; k <= 2 * um; ++k) g.add_to_bracket(0, k - 1, k - 1, Rational(1));
        for (std::size_t j = 2; j <= um; ++j) {
            g.add_to_bracket(1, 2 * j - 2, 2 * j - 1, Rational(1));   // [X2, X_{2j-1}] = X_{2j}
            g.add_to_bracket(1, 2 * j - 1, 2 * j - 2, Rational(-1));  // [X2, X_{2j}] = -X_{2j-1}
        }
        if (name == "g2m1") {
            g.add_to_bracket(2, 3, 2 * um, Rational(1));      // [X3,X4] = X_{2m+1}
            g.add_to_bracket(0, 2 * um, 2 * um, Rational(2)); // [X1,X_{2m+1}] = 2X_{2m+1}
        }
        entry.algebra = g;
    } else if (name == "affc") {
        detail::reject_extras(params, {});
        LieAlgebra g(4);
        g.set_labels({"X1", "X2", "Y1", "Y2"});
        g.add_to_bracket(0, 2, 2, Rational(1));   // [X1,Y1] = Y1
        g.add_to_bracket(0, 3, 3, Rational(1));   // [X1,Y2] = Y2
        g.add_to_bracket(1, 2, 3, Rational(1));   // [X2,Y1] = Y2
        g.add_to_bracket(1, 3, 2, Rational(-1));  // [X2,Y2] = -Y1
        entry.algebra = g;
    } else {
        throw UnknownName("no catalog entry named '" + name + "'");
    }

    entry.algebra.set_name(detail::render_params(name, params));
    entry.algebra.validate();
    return entry;
}

// ---------------------------------------------------------------------------
// file format

namespace detail {

inline long line_of_offset(const std::string& text, std::size_t byte) {
    long line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline bool default_labels(const LieAlgebra& g) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.labels()[i] != "e" + std::to_string(i + 1)) return false;
    return true;
}

}  // namespace detail

inline LieAlgebra parse_algebra(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what(),
                          detail::line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
    }
    if (!doc.is_object()) throw SyntaxError("top level must be an object", 0);
    for (const auto& [key, value] : doc.items())
        if (key != "name" && key != "dim" && key != "basis" && key != "brackets")
            throw SyntaxError("unknown key '" + key + "'", 0);

    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw SyntaxError("'dim' must be an integer", 0);
    long n = doc["dim"].get<long>();
    if (n < 1) throw SyntaxError("'dim' must be at least 1", 0);
    LieAlgebra g(static_cast<std::size_t>(n));

    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw SyntaxError("'name' must be a string", 0);
        g.set_name(doc["name"].get<std::string>());
    }
    if (doc.contains("basis")) {
        if (!doc["basis"].is_array() || doc["basis"].size() != static_cast<std::size_t>(n))
            throw SyntaxError("'basis' must list exactly " + std::to_string(n) + " labels", 0);
        std::vector<std::string> labels;
        for (const auto& item : doc["basis"]) {
            if (!item.is_string()) throw SyntaxError("'basis' entries must be strings", 0);
            labels.push_back(item.get<std::string>());
        }
        g.set_labels(labels);
    }
    if (!doc.contains("brackets") || !doc["brackets"].is_array())
        throw SyntaxError("'brackets' must be a list", 0);

    std::set<std::pair<long, long>> seen;
    for (const auto& item : doc["brackets"]) {
        if (!item.is_object()) throw SyntaxError("bracket entries must be objects", 0);
        for (const auto& [key, value] : item.items())
            if (key != "left" && key != "right" && key != "result")
                throw SyntaxError("unknown key '" + key + "' in bracket entry", 0);
        if (!item.contains("left") || !item["left"].is_number_integer() || !item.contains("right") ||
            !item["right"].is_number_integer())
            throw SyntaxError("'left' and 'right' must be integers", 0);
        long i = item["left"].get<long>(), j = item["right"].get<long>();
        if (i < 1 || i > n || j < 1 || j > n)
            throw IndexOutOfRange("bracket indices must lie in 1.." + std::to_string(n));
        if (i >= j) throw SyntaxError("'left' must be smaller than 'right'", 0);
        if (!seen.insert({i, j}).second)
            throw DuplicateBracket("duplicate bracket entry for (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
        if (!item.contains("result") || !item["result"].is_object())
            throw SyntaxError("'result' must be an object", 0);
        std::vector<Rational> coeffs(static_cast<std::size_t>(n), Rational(0));
        for (const auto& [key, value] : item["result"].items()) {
            long k = 0;
            try {
                std::size_t pos = 0;
                k = std::stol(key, &pos);
                if (pos != key.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw SyntaxError("result keys must be basis indices, got '" + key + "'", 0);
            }
            if (k < 1 || k > n)
                throw IndexOutOfRange("result index " + std::to_string(k) + " must lie in 1.." +
                                      std::to_string(n));
            if (!value.is_string())
                throw SyntaxError("result values must be rational strings", 0);
            try {
                coeffs[static_cast<std::size_t>(k - 1)] = parse_rational(value.get<std::string>());
            } catch (const std::exception& e) {
                throw SyntaxError(e.what(), 0);
            }
        }
        g.set_bracket(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), coeffs);
    }
    g.validate();
    return g;
}

inline std::string emit_algebra(const LieAlgebra& g) {
    nlohmann::ordered_json doc;
    if (!g.name().empty()) doc["name"] = g.name();
    doc["dim"] = g.dim();
    if (!detail::default_labels(g)) doc["basis"] = g.labels();
    doc["brackets"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const std::vector<Rational>& c = g.bracket_basis(i, j);
            bool nonzero = false;
            for (const Rational& x : c)
                if (!is_zero(x)) nonzero = true;
            if (!nonzero) continue;
            nlohmann::ordered_json entry;
            entry["left"] = i + 1;
            entry["right"] = j + 1;
            nlohmann::ordered_json result = nlohmann::ordered_json::object();
            for (std::size_t k = 0; k < c.size(); ++k)
                if (!is_zero(c[k])) result[std::to_string(k + 1)] = format_rational(c[k]);
            entry["result"] = result;
            doc["brackets"].push_back(entry);
        }
    return doc.dump(2) + "\n";
}

}  // namespace mdlie
