#pragma once

#include <nleib/bounds.hpp>
#include <nleib/nalgebra.hpp>
#include <nleib/series.hpp>

#include <json.hpp>

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nleib {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

/// Algebra file grammar (line-oriented, whitespace-separated tokens):
///   # comment
///   arity <n>
///   dim <m>
///   names <l1> ... <lm>          (optional, after dim)
///   b <i1> ... <in> <k> <coeff>  (1-based indices; coeff = p or p/q, q > 0)
/// arity and dim must precede every b line; duplicate (tuple, target) lines
/// are rejected.
inline StructureConstants parse_algebra(const std::string& text) {
    std::optional<int> arity;
    std::optional<int> dim;
    std::optional<StructureConstants> sc;
    std::set<std::pair<std::vector<int>, int>> seen;

    const auto parse_int = [](const std::string& tok, int line) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ParseError(line, "expected integer, got '" + tok + "'");
        }
    };

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream line(raw);
        std::string head;
        if (!(line >> head)) continue;      // blank
        if (head[0] == '#') continue;       // comment

        std::vector<std::string> toks;
        std::string tok;
        while (line >> tok) toks.push_back(tok);

        if (head == "arity") {
            if (arity) throw ParseError(line_no, "duplicate arity line");
            if (toks.size() != 1) throw ParseError(line_no, "arity takes exactly one value");
            arity = parse_int(toks[0], line_no);
            if (*arity < 2) throw ParseError(line_no, "arity must be >= 2");
        } else if (head == "dim") {
            if (dim) throw ParseError(line_no, "duplicate dim line");
            if (toks.size() != 1) throw ParseError(line_no, "dim takes exactly one value");
            dim = parse_int(toks[0], line_no);
            if (*dim < 1) throw ParseError(line_no, "dim must be >= 1");
        } else if (head == "names") {
            if (!dim) throw ParseError(line_no, "names must come after dim");
            if (!sc) {
                if (!arity) throw ParseError(line_no, "names must come after arity");
                sc.emplace(*arity, *dim);
            }
            if (toks.size() != static_cast<std::size_t>(*dim))
                throw ParseError(line_no, "names needs exactly " + std::to_string(*dim) + " labels");
            try {
                sc->set_basis_names(toks);
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (head == "b") {
            if (!arity || !dim) throw ParseError(line_no, "bracket line before arity/dim header");
            if (!sc) sc.emplace(*arity, *dim);
            if (toks.size() != static_cast<std::size_t>(*arity) + 2)
                throw ParseError(line_no, "bracket line needs " + std::to_string(*arity) +
                                              " indices, a target and a coefficient");
            std::vector<int> tuple(static_cast<std::size_t>(*arity));
            for (int j = 0; j < *arity; ++j) {
                const int idx = parse_int(toks[static_cast<std::size_t>(j)], line_no);
                if (idx < 1 || idx > *dim) throw ParseError(line_no, "index out of range: " + toks[static_cast<std::size_t>(j)]);
                tuple[static_cast<std::size_t>(j)] = idx - 1;
            }
            const int target = parse_int(toks[static_cast<std::size_t>(*arity)], line_no);
            if (target < 1 || target > *dim)
                throw ParseError(line_no, "target index out of range: " + toks[static_cast<std::size_t>(*arity)]);
            Rational coeff;
            try {
                coeff = parse_rational(toks.back());
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
            if (!seen.insert({tuple, target - 1}).second)
                throw ParseError(line_no, "duplicate bracket line for this tuple and target");
            sc->add(tuple, target - 1, coeff);
        } else {
            throw ParseError(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!arity || !dim) throw ParseError(line_no, "missing arity/dim header");
    if (!sc) sc.emplace(*arity, *dim);
    return *std::move(sc);
}

/// Canonical emission: header, optional names, then one b line per stored
/// coefficient in table order (1-based, lowest-terms rationals).
inline std::string render_algebra(const StructureConstants& sc) {
    std::ostringstream os;
    os << "arity " << sc.arity() << "\n";
    os << "dim " << sc.dim() << "\n";
    if (!sc.basis_names().empty()) {
        os << "names";
        for (const auto& name : sc.basis_names()) os << ' ' << name;
        os << "\n";
    }
    for (const auto& [tuple, terms] : sc.table()) {
        for (const auto& [target, coeff] : terms) {
            os << 'b';
            for (int i : tuple) os << ' ' << i + 1;
            os << ' ' << target + 1 << ' ' << coeff << "\n";
        }
    }
    return os.str();
}

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

inline std::vector<std::string> builtin_names() {
    return {"ex3_18", "ex3_20", "ex3_3:<m>", "zero:<n>:<m>", "filippov:<n>"};
}

/// Built-in algebra library, emitted in the file format.
///   ex3_3:<m>    m-dimensional Leibniz 3-algebra with [x_i,x_1,x_1] = x_{i+1}
///   ex3_18       2-dimensional Leibniz algebra with [x,x] = y
///   ex3_20       4-dimensional Lie-filiform Leibniz algebra
///   zero:<n>:<m> abelian n-algebra of dimension m
///   filippov:<n> simple (n+1)-dimensional Filippov algebra
inline std::string builtin(const std::string& name) {
    const auto split = [&]() {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            const auto colon = name.find(':', start);
            parts.push_back(name.substr(start, colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return parts;
    };
    const auto param = [&](const std::string& tok) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("builtin: bad parameter '" + tok + "' in '" + name + "'");
        }
    };

    const auto parts = split();
    std::ostringstream os;
    if (parts[0] == "ex3_18" && parts.size() == 1) {
        os << "# ex3_18\narity 2\ndim 2\nnames x y\nb 1 1 2 1\n";
    } else if (parts[0] == "ex3_20" && parts.size() == 1) {
        os << "# ex3_20\narity 2\ndim 4\nnames x1 x2 x3 x4\n"
           << "b 1 1 3 1\nb 1 2 4 1\nb 2 1 3 1\nb 3 1 4 1\n";
    } else if (parts[0] == "ex3_3" && parts.size() == 2) {
        const int m = param(parts[1]);
        if (m < 2) throw std::invalid_argument("builtin: ex3_3 needs m >= 2");
        os << "# ex3_3 with m = " << m << "\narity 3\ndim " << m << "\nnames";
        for (int i = 1; i <= m; ++i) os << " x" << i;
        os << "\n";
        for (int i = 1; i <= m - 1; ++i) os << "b " << i << " 1 1 " << i + 1 << " 1\n";
    } else if (parts[0] == "zero" && parts.size() == 3) {
        const int n = param(parts[1]);
        const int m = param(parts[2]);
        if (n < 2) throw std::invalid_argument("builtin: zero needs arity >= 2");
        if (m < 1) throw std::invalid_argument("builtin: zero needs dim >= 1");
        os << "# zero algebra, arity " << n << "\narity " << n << "\ndim " << m << "\n";
    } else if (parts[0] == "filippov" && parts.size() == 2) {
        const int n = param(parts[1]);
        if (n < 2) throw std::invalid_argument("builtin: filippov needs n >= 2");
        const int m = n + 1;
        os << "# filippov, simple " << m << "-dimensional " << n << "-Lie algebra\n"
           << "arity " << n << "\ndim " << m << "\n";
        // [e_1, ..., ê_i, ..., e_{n+1}] = (-1)^(n+1-i) e_i, extended
        // alternating over every injective tuple.
        for (int omit = 1; omit <= m; ++omit) {
            std::vector<int> base;
            for (int j = 1; j <= m; ++j)
                if (j != omit) base.push_back(j);
            const int base_sign = (m - omit) % 2 == 0 ? 1 : -1;
            std::vector<int> perm = base;
            do {
                const int sign = base_sign * detail::permutation_sign(perm);
                os << 'b';
                for (int j : perm) os << ' ' << j;
                os << ' ' << omit << ' ' << (sign > 0 ? "1" : "-1") << "\n";
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    } else {
        throw std::invalid_argument("builtin: unknown name '" + name + "'");
    }
    return os.str();
}

inline StructureConstants builtin_algebra(const std::string& name) { return parse_algebra(builtin(name)); }

enum class IdentityStatus { ok, violated, skipped };

inline std::string to_string(IdentityStatus s) {
    switch (s) {
        case IdentityStatus::ok: return "ok";
        case IdentityStatus::violated: return "violated";
        case IdentityStatus::skipped: return "skipped";
    }
    return "unknown";
}

/// Everything `analyze` reports. Classification and bounds are present only
/// when the identity holds or its check was explicitly skipped.
struct AnalysisReport {
    int arity = 0;
    int dim = 0;
    std::vector<std::string> names;
    IdentityStatus identity_status = IdentityStatus::ok;
    std::size_t violation_count = 0;
    std::optional<IdentityViolation> first_violation;
    std::optional<ClassificationReport> classification;
    std::optional<AlgebraParams> params;
    std::optional<BoundReport> bounds;
};

struct AnalyzeOptions {
    bool skip_identity = false;
    std::optional<std::size_t> max_violations;
    bool force = false;
};

inline AlgebraParams params_from_classification(const ClassificationReport& rep) {
    AlgebraParams p;
    p.n = rep.arity;
    p.m = rep.dim;
    p.d = detail::dim_at(rep.lie_series_dims, 2);
    p.m_bar = p.m - p.d;
    p.lie_class = rep.lie_class;
    p.lie_filiform = rep.lie_filiform;
    p.lie_maximal_class = rep.lie_maximal_class;
    p.lie_abelian = rep.lie_abelian;
    return p;
}

inline AnalysisReport analyze(const StructureConstants& sc, const AnalyzeOptions& opts = {}) {
    AnalysisReport report;
    report.arity = sc.arity();
    report.dim = sc.dim();
    report.names = sc.basis_names();

    if (opts.skip_identity) {
        report.identity_status = IdentityStatus::skipped;
    } else {
        const auto violations = check_fundamental_identity(sc, opts.max_violations, opts.force);
        if (!violations.empty()) {
            report.identity_status = IdentityStatus::violated;
            report.violation_count = violations.size();
            report.first_violation = violations.front();
            return report;
        }
        report.identity_status = IdentityStatus::ok;
    }

    report.classification = classify(sc);
    AlgebraParams params = params_from_classification(*report.classification);

    ConstraintExtras extras;
    const Subspace center = lie_center(sc);
    const Subspace q2 = lie_product_subspace(sc, Subspace::full(static_cast<std::size_t>(sc.dim())));
    extras.dim_central_ideal = static_cast<int>(center.dim());
    extras.dim_central_ideal_cap_q2 = static_cast<int>(intersect(center, q2).dim());
    if (params.lie_class && *params.lie_class >= 2) {
        const int c = *params.lie_class;
        extras.j = c;
        extras.dim_qj_lie = detail::dim_at(report.classification->lie_series_dims, c);
    }
    // dim of the Lie-central factor's abelianization, for the upper-series bound
    const QuotientResult central_factor = quotient(sc, center);
    const Subspace factor_q2 = lie_product_subspace(
        central_factor.algebra, Subspace::full(static_cast<std::size_t>(central_factor.algebra.dim())));
    params.m_central = central_factor.algebra.dim() - static_cast<int>(factor_q2.dim());

    report.params = params;
    report.bounds = best_bounds(params, extras);
    return report;
}

// ---------------------------------------------------------------------------
// Rendering

enum class ReportFormat { text, json };

namespace detail {

inline std::string format_tuple_1based(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(t[i] + 1);
    }
    return s + ")";
}

inline std::string format_vector(const QVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += nleib::to_string(v[i]);
    }
    return s + ")";
}

inline std::string format_dims(const std::vector<int>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

/// BigInt as a json number when it fits in 64 bits, else as a string.
inline nlohmann::json json_bigint(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

inline nlohmann::json bound_items_json(const BoundReport& bounds) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : bounds.items) {
        nlohmann::json j;
        j["id"] = nleib::to_string(item.id);
        j["applicable"] = item.applicable;
        j["reason"] = item.reason;
        if (item.value) j["value"] = json_bigint(*item.value);
        if (item.applicable) j["exact"] = item.exact;
        if (item.raw) j["raw"] = nleib::to_string(*item.raw);
        items.push_back(std::move(j));
    }
    return items;
}

inline nlohmann::json relative_json(const std::vector<RelativeConstraint>& relative) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : relative) {
        nlohmann::json j;
        j["id"] = c.id;
        j["applicable"] = c.applicable;
        j["reason"] = c.reason;
        if (c.applicable) {
            j["description"] = c.description;
            nlohmann::json coeffs;
            for (const auto& [key, value] : c.coefficients) coeffs[key] = json_bigint(value);
            j["coefficients"] = std::move(coeffs);
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

inline nlohmann::json bound_report_json(const BoundReport& bounds) {
    nlohmann::json j;
    j["items"] = bound_items_json(bounds);
    if (bounds.best) {
        nlohmann::json best;
        best["id"] = nleib::to_string(bounds.best->id);
        best["value"] = json_bigint(*bounds.best->value);
        best["exact"] = bounds.best->exact;
        j["best"] = std::move(best);
    }
    j["relative"] = relative_json(bounds.relative);
    return j;
}

inline void render_bounds_text(std::ostringstream& os, const BoundReport& bounds) {
    os << "bounds:\n";
    for (const auto& item : bounds.items) {
        os << "  " << nleib::to_string(item.id) << ": ";
        if (item.applicable) {
            os << *item.value;
            if (item.exact) os << " (exact)";
            if (item.raw) os << " (raw " << *item.raw << ")";
            os << " -- " << item.reason;
        } else {
            os << "n/a -- " << item.reason;
        }
        os << "\n";
    }
    if (bounds.best) {
        os << "best_bound: " << *bounds.best->value << " (" << nleib::to_string(bounds.best->id) << ")\n";
        if (bounds.best->exact) os << "exact_multiplier_dim: " << *bounds.best->value << "\n";
    }
    os << "relative_constraints:\n";
    for (const auto& c : bounds.relative) {
        os << "  " << c.id << ": ";
        if (c.applicable)
            os << c.description << " -- " << c.reason << "\n";
        else
            os << "n/a -- " << c.reason << "\n";
    }
}

}  // namespace detail

/// BoundReport rendering for the parameter-only path.
inline std::string render_bound_report(const BoundReport& bounds, const AlgebraParams& p,
                                       ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json j;
        nlohmann::json params;
        params["n"] = p.n;
        params["m"] = p.m;
        params["d"] = p.d;
        params["m_bar"] = p.m_bar;
        if (p.lie_class) params["lie_class"] = *p.lie_class;
        params["lie_filiform"] = p.lie_filiform;
        params["lie_maximal_class"] = p.lie_maximal_class;
        params["lie_abelian"] = p.lie_abelian;
        if (p.m_central) params["m_central"] = *p.m_central;
        j["params"] = std::move(params);
        j["bounds"] = detail::bound_report_json(bounds);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "n: " << p.n << "\nm: " << p.m << "\nd: " << p.d << "\nm_bar: " << p.m_bar << "\n";
    os << "lie_class: " << (p.lie_class ? std::to_string(*p.lie_class) : "unknown") << "\n";
    os << "lie_filiform: " << (p.lie_filiform ? "true" : "false") << "\n";
    os << "lie_maximal_class: " << (p.lie_maximal_class ? "true" : "false") << "\n";
    os << "lie_abelian: " << (p.lie_abelian ? "true" : "false") << "\n";
    if (p.m_central) os << "m_central: " << *p.m_central << "\n";
    detail::render_bounds_text(os, bounds);
    return os.str();
}

inline std::string render_report(const AnalysisReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json j;
        nlohmann::json algebra;
        algebra["arity"] = report.arity;
        algebra["dim"] = report.dim;
        if (!report.names.empty()) algebra["names"] = report.names;
        j["algebra"] = std::move(algebra);

        nlohmann::json identity;
        identity["status"] = to_string(report.identity_status);
        identity["violations"] = report.violation_count;
        if (report.first_violation) {
            nlohmann::json v;
            nlohmann::json xs = nlohmann::json::array();
            for (int x : report.first_violation->x_tuple) xs.push_back(x + 1);
            nlohmann::json ys = nlohmann::json::array();
            for (int y : report.first_violation->y_tuple) ys.push_back(y + 1);
            nlohmann::json defect = nlohmann::json::array();
            for (std::size_t i = 0; i < report.first_violation->defect.dim(); ++i)
                defect.push_back(to_string(report.first_violation->defect[i]));
            v["x_tuple"] = std::move(xs);
            v["y_tuple"] = std::move(ys);
            v["defect"] = std::move(defect);
            identity["first_violation"] = std::move(v);
        }
        j["identity"] = std::move(identity);

        if (report.classification) {
            const auto& c = *report.classification;
            nlohmann::json cls;
            cls["lie_series_dims"] = c.lie_series_dims;
            cls["series_dims"] = c.series_dims;
            cls["series_all_slot_dims"] = c.series_all_slot_dims;
            cls["upper_lie_series_dims"] = c.upper_lie_series_dims;
            cls["lie_center_dim"] = c.lie_center_dim;
            cls["leibnizator_dim"] = c.leibnizator_dim;
            cls["leibnizator_closure_enlarged"] = c.leibnizator_closure_enlarged;
            cls["series_slot_convention_differs"] = c.series_slot_convention_differs;
            if (c.lie_class)
                cls["lie_class"] = *c.lie_class;
            else
                cls["lie_class"] = nullptr;
            if (c.nilpotency_class)
                cls["class"] = *c.nilpotency_class;
            else
                cls["class"] = nullptr;
            nlohmann::json flags;
            flags["lie_abelian"] = c.lie_abelian;
            flags["lie_nilpotent"] = c.lie_nilpotent;
            flags["nilpotent"] = c.nilpotent;
            flags["lie_filiform"] = c.lie_filiform;
            flags["filiform"] = c.filiform;
            flags["lie_maximal_class"] = c.lie_maximal_class;
            flags["maximal_class"] = c.maximal_class;
            flags["n_lie"] = c.n_lie;
            cls["flags"] = std::move(flags);
            j["classification"] = std::move(cls);
        }
        if (report.bounds) j["bounds"] = detail::bound_report_json(*report.bounds);
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "identity: " << to_string(report.identity_status) << "\n";
    if (report.identity_status == IdentityStatus::violated) {
        os << "violations: " << report.violation_count << "\n";
        if (report.first_violation) {
            os << "first_violation: x = " << detail::format_tuple_1based(report.first_violation->x_tuple)
               << ", y = " << detail::format_tuple_1based(report.first_violation->y_tuple)
               << ", defect = " << detail::format_vector(report.first_violation->defect) << "\n";
        }
        return os.str();
    }
    os << "arity: " << report.arity << "\n";
    os << "dim: " << report.dim << "\n";
    if (!report.names.empty()) {
        os << "names:";
        for (const auto& name : report.names) os << ' ' << name;
        os << "\n";
    }
    if (report.classification) {
        const auto& c = *report.classification;
        os << "lie_series_dims: " << detail::format_dims(c.lie_series_dims) << "\n";
        os << "series_dims: " << detail::format_dims(c.series_dims) << "\n";
        os << "series_all_slot_dims: " << detail::format_dims(c.series_all_slot_dims) << "\n";
        os << "upper_lie_series_dims: " << detail::format_dims(c.upper_lie_series_dims) << "\n";
        os << "lie_center_dim: " << c.lie_center_dim << "\n";
        os << "leibnizator_dim: " << c.leibnizator_dim << "\n";
        os << "leibnizator_closure_enlarged: " << (c.leibnizator_closure_enlarged ? "true" : "false") << "\n";
        os << "series_slot_convention_differs: " << (c.series_slot_convention_differs ? "true" : "false") << "\n";
        os << "lie_class: " << (c.lie_class ? std::to_string(*c.lie_class) : "none") << "\n";
        os << "class: " << (c.nilpotency_class ? std::to_string(*c.nilpotency_class) : "none") << "\n";
        os << "lie_abelian: " << (c.lie_abelian ? "true" : "false") << "\n";
        os << "lie_nilpotent: " << (c.lie_nilpotent ? "true" : "false") << "\n";
        os << "nilpotent: " << (c.nilpotent ? "true" : "false") << "\n";
        os << "lie_filiform: " << (c.lie_filiform ? "true" : "false") << "\n";
        os << "filiform: " << (c.filiform ? "true" : "false") << "\n";
        os << "lie_maximal_class: " << (c.lie_maximal_class ? "true" : "false") << "\n";
        os << "maximal_class: " << (c.maximal_class ? "true" : "false") << "\n";
        os << "n_lie: " << (c.n_lie ? "true" : "false") << "\n";
    }
    if (report.bounds) detail::render_bounds_text(os, *report.bounds);
    return os.str();
}

}  // namespace nleib
