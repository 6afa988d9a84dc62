#pragma once

#include <nleib/combinatorics.hpp>
#include <nleib/rational.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nleib {

/// Numeric invariants feeding the bound catalog.
struct AlgebraParams {
    int n = 2;                         // arity
    int m = 1;                         // dim q
    int d = 0;                         // dim q²_Lie
    int m_bar = 1;                     // dim q/q²_Lie = m - d
    std::optional<int> lie_class;      // present iff Lie-nilpotent
    bool lie_filiform = false;
    bool lie_maximal_class = false;
    bool lie_abelian = false;
    std::optional<int> m_central;      // dim (q/Z_Lie(q)) / (q/Z_Lie(q))²_Lie

    void validate() const {
        if (n < 2) throw std::invalid_argument("AlgebraParams: n must be >= 2");
        if (m < 1) throw std::invalid_argument("AlgebraParams: m must be >= 1");
        if (d < 0 || d > m) throw std::invalid_argument("AlgebraParams: d must satisfy 0 <= d <= m");
        if (m_bar != m - d) throw std::invalid_argument("AlgebraParams: m_bar must equal m - d");
        if (lie_abelian && d != 0) throw std::invalid_argument("AlgebraParams: Lie-abelian requires d = 0");
        if (lie_class && *lie_class < 0) throw std::invalid_argument("AlgebraParams: negative class");
        if (m_central && (*m_central < 0 || *m_central > m))
            throw std::invalid_argument("AlgebraParams: m_central out of range");
    }
};

enum class BoundId {
    THM_GENERAL,
    THM_N2,
    COR_DM1,
    COR_NILP,
    COR_NILP_N2,
    COR_HALF,
    COR_HALF_N2,
    COR_FILIFORM,
    COR_FILIFORM_N2,
    REMARK_ABELIAN,
    COR_MAXCLASS,
};

inline constexpr std::array<BoundId, 11> kBoundCatalog = {
    BoundId::THM_GENERAL,  BoundId::THM_N2,       BoundId::COR_DM1,
    BoundId::COR_NILP,     BoundId::COR_NILP_N2,  BoundId::COR_HALF,
    BoundId::COR_HALF_N2,  BoundId::COR_FILIFORM, BoundId::COR_FILIFORM_N2,
    BoundId::REMARK_ABELIAN, BoundId::COR_MAXCLASS,
};

inline std::string to_string(BoundId id) {
    switch (id) {
        case BoundId::THM_GENERAL: return "THM_GENERAL";
        case BoundId::THM_N2: return "THM_N2";
        case BoundId::COR_DM1: return "COR_DM1";
        case BoundId::COR_NILP: return "COR_NILP";
        case BoundId::COR_NILP_N2: return "COR_NILP_N2";
        case BoundId::COR_HALF: return "COR_HALF";
        case BoundId::COR_HALF_N2: return "COR_HALF_N2";
        case BoundId::COR_FILIFORM: return "COR_FILIFORM";
        case BoundId::COR_FILIFORM_N2: return "COR_FILIFORM_N2";
        case BoundId::REMARK_ABELIAN: return "REMARK_ABELIAN";
        case BoundId::COR_MAXCLASS: return "COR_MAXCLASS";
    }
    throw std::invalid_argument("unknown BoundId");
}

// Raw catalog formulas, evaluated exactly. Kept separate from the
// applicability logic so the dominance properties can sweep parameter
// grids directly.

inline BigInt thm_general_formula(int n, int m, int d) { return binom(m + n - 1, n) - d; }

inline BigInt thm_general_sum_formula(int n, int m, int d) {
    BigInt s = 0;
    for (int i = 1; i <= n; ++i) s += binom(n - 1, i - 1) * binom(m, i);
    return s - d;
}

inline BigInt thm_n2_formula(int m, int d) {
    return BigInt(m) * (m + 1) / 2 - d;
}

inline BigInt cor_nilp_formula(int n, int m, int d) {
    return binom(m - d + n - 1, n) + d * binom(m - d + n - 2, n - 1) - d;
}

inline Rational cor_nilp_n2_formula(int m, int d) {
    return Rational(BigInt(m) * m + m - BigInt(m) * d, 2) - d;
}

inline Rational cor_half_formula(int n, int m, int d) {
    return Rational((m + d - 1) * binom(m - d + n - 2, n - 1) - d, 2);
}

inline Rational cor_half_n2_formula(int m, int d) {
    return Rational(BigInt(m) * m - m - BigInt(d) * d, 2);
}

inline BigInt cor_filiform_first_branch(int n, int m) {
    // C(2n-2, n-1) is even for n >= 2, so m * C / 2 is always integral.
    return BigInt(m) * binom(2 * n - 2, n - 1) / 2 - 1;
}

inline BigInt cor_filiform_second_branch(int n) {
    return binom(2 * n - 1, n) + binom(2 * n - 2, n - 1) - 1;
}

inline BigInt floor_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// One catalog entry: applicability verdict with the failed or satisfied
/// hypothesis named, the exact value when applicable, and the un-floored
/// rational for the half-formulas.
struct BoundItem {
    BoundId id;
    bool applicable = false;
    std::string reason;
    std::optional<BigInt> value;    // present iff applicable
    bool exact = false;             // value is dim M_Lie exactly, not just a bound
    std::optional<Rational> raw;    // un-floored value, when fractional
};

namespace detail {

inline BoundItem not_applicable(BoundId id, std::string reason) {
    BoundItem item;
    item.id = id;
    item.applicable = false;
    item.reason = std::move(reason);
    return item;
}

inline BoundItem applicable(BoundId id, BigInt value, std::string reason, bool exact = false,
                            std::optional<Rational> raw = std::nullopt) {
    BoundItem item;
    item.id = id;
    item.applicable = true;
    item.reason = std::move(reason);
    item.value = std::move(value);
    item.exact = exact;
    if (raw && *raw != Rational(*item.value)) item.raw = raw;
    return item;
}

}  // namespace detail

inline BoundItem bound_value(BoundId id, const AlgebraParams& p) {
    p.validate();
    const bool nilpotent = p.lie_class.has_value();
    switch (id) {
        case BoundId::THM_GENERAL:
            return detail::applicable(id, thm_general_formula(p.n, p.m, p.d), "any Leibniz n-algebra");
        case BoundId::THM_N2:
            if (p.n != 2) return detail::not_applicable(id, "requires n = 2");
            return detail::applicable(id, thm_n2_formula(p.m, p.d), "Leibniz 2-algebra");
        case BoundId::COR_DM1:
            if (!nilpotent) return detail::not_applicable(id, "requires Lie-nilpotency");
            if (p.d != p.m - 1) return detail::not_applicable(id, "requires d = m - 1");
            return detail::applicable(id, 1, "Lie-nilpotent with d = m - 1");
        case BoundId::COR_NILP:
            if (!nilpotent) return detail::not_applicable(id, "requires Lie-nilpotency");
            return detail::applicable(id, cor_nilp_formula(p.n, p.m, p.d), "Lie-nilpotent");
        case BoundId::COR_NILP_N2: {
            if (p.n != 2) return detail::not_applicable(id, "requires n = 2");
            if (!nilpotent) return detail::not_applicable(id, "requires Lie-nilpotency");
            const Rational raw = cor_nilp_n2_formula(p.m, p.d);
            return detail::applicable(id, floor_rational(raw), "Lie-nilpotent 2-algebra", false, raw);
        }
        case BoundId::COR_HALF: {
            if (!nilpotent) return detail::not_applicable(id, "requires Lie-nilpotency");
            if (p.d < 1) return detail::not_applicable(id, "requires d >= 1");
            const Rational raw = cor_half_formula(p.n, p.m, p.d);
            return detail::applicable(id, floor_rational(raw), "Lie-nilpotent with d >= 1", false, raw);
        }
        case BoundId::COR_HALF_N2: {
            if (p.n != 2) return detail::not_applicable(id, "requires n = 2");
            if (!nilpotent) return detail::not_applicable(id, "requires Lie-nilpotency");
            if (p.d < 1) return detail::not_applicable(id, "requires d >= 1");
            const Rational raw = cor_half_n2_formula(p.m, p.d);
            return detail::applicable(id, floor_rational(raw), "Lie-nilpotent 2-algebra with d >= 1", false, raw);
        }
        case BoundId::COR_FILIFORM:
            if (!p.lie_filiform) return detail::not_applicable(id, "requires Lie-filiform");
            if (p.m <= p.n) return detail::not_applicable(id, "requires m > n");
            if (p.m <= 5)
                return detail::applicable(id, cor_filiform_first_branch(p.n, p.m), "Lie-filiform, m <= 5");
            return detail::applicable(id, cor_filiform_second_branch(p.n), "Lie-filiform, m >= 6");
        case BoundId::COR_FILIFORM_N2:
            if (p.n != 2) return detail::not_applicable(id, "requires n = 2");
            if (!p.lie_filiform) return detail::not_applicable(id, "requires Lie-filiform");
            if (p.m == 2) return detail::applicable(id, 3, "Lie-filiform 2-algebra with m = 2", true);
            if (p.m <= 5) return detail::applicable(id, p.m - 1, "Lie-filiform 2-algebra, 2 < m <= 5");
            return detail::applicable(id, 4, "Lie-filiform 2-algebra, m >= 6");
        case BoundId::REMARK_ABELIAN:
            if (!p.lie_abelian) return detail::not_applicable(id, "requires Lie-abelian");
            if (p.n == 2)
                return detail::applicable(id, BigInt(p.m) * (p.m + 1) / 2,
                                          "Lie-abelian 2-algebra: equality case", true);
            if (p.m == p.n)
                return detail::applicable(id, binom(2 * p.n - 1, p.n), "n-dimensional Lie-abelian n-algebra");
            return detail::not_applicable(id, "requires n = 2 or m = n");
        case BoundId::COR_MAXCLASS:
            if (!p.lie_maximal_class) return detail::not_applicable(id, "requires maximal class");
            return detail::applicable(id, 1, "Lie-nilpotent of maximal class");
    }
    throw std::invalid_argument("unknown BoundId");
}

/// A relative inequality between dim M_Lie(q) and a quotient's multiplier,
/// with every numeric coefficient evaluated and the unknowns left symbolic.
struct RelativeConstraint {
    std::string id;
    bool applicable = false;
    std::string reason;
    std::string description;
    std::vector<std::pair<std::string, BigInt>> coefficients;
};

/// Optional per-theorem inputs. j defaults to 2 (where dim q^j_Lie = d);
/// any other j requires dim_qj_lie. The L22IV entry needs a central ideal's
/// dimension data.
struct ConstraintExtras {
    std::optional<int> i;
    std::optional<int> j;
    std::optional<int> dim_qj_lie;
    std::optional<int> dim_central_ideal;         // dim I for some I ⊆ Z_Lie(q)
    std::optional<int> dim_central_ideal_cap_q2;  // dim (I ∩ q²_Lie)
};

namespace detail {

inline RelativeConstraint constraint_na(std::string id, std::string reason) {
    RelativeConstraint c;
    c.id = std::move(id);
    c.applicable = false;
    c.reason = std::move(reason);
    return c;
}

}  // namespace detail

inline std::vector<RelativeConstraint> relative_constraints(const AlgebraParams& p,
                                                            const ConstraintExtras& extras = {}) {
    p.validate();
    std::vector<RelativeConstraint> out;
    const int i = extras.i.value_or(2);
    if (i < 2) throw std::invalid_argument("relative_constraints: i must be >= 2");
    const bool class2 = p.lie_class && *p.lie_class >= 2;

    // T34: dim M_Lie(q) = dim M_Lie(q/Z_Lie(q)) + k.
    if (p.lie_maximal_class || (p.lie_filiform && p.m > p.n)) {
        RelativeConstraint c;
        c.id = "T34";
        c.applicable = true;
        c.reason = p.lie_maximal_class ? "Lie-nilpotent of maximal class" : "Lie-filiform with m > n";
        const BigInt k_max = p.lie_maximal_class ? BigInt(0) : binom(2 * p.n - 2, p.n - 1) - 1;
        c.description = "dim M_Lie(q) = dim M_Lie(q/Z_Lie(q)) + k, -1 <= k <= " + k_max.str();
        c.coefficients = {{"k_min", -1}, {"k_max", k_max}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::constraint_na("T34", "requires Lie-filiform with m > n, or maximal class"));
    }

    const auto resolve_j = [&]() -> std::pair<int, BigInt> {
        const int j = extras.j.value_or(2);
        if (j < 2 || (p.lie_class && j > *p.lie_class))
            throw std::invalid_argument("relative_constraints: j out of range [2, c]");
        if (j == 2 && !extras.dim_qj_lie) return {2, BigInt(p.d)};
        if (!extras.dim_qj_lie)
            throw std::invalid_argument("relative_constraints: dim_qj_lie extra required for j != 2");
        return {j, BigInt(*extras.dim_qj_lie)};
    };

    // T39: dim M_Lie(q) <= dim M_Lie(q/q^i_Lie) + dim q^j_Lie * [C(m_bar+n-2, n-1) - 1].
    if (class2) {
        const auto [j, dim_qj] = resolve_j();
        RelativeConstraint c;
        c.id = "T39";
        c.applicable = true;
        c.reason = "Lie-nilpotent of class >= 2";
        const BigInt bracket = binom(p.m_bar + p.n - 2, p.n - 1) - 1;
        const BigInt additive = dim_qj * bracket;
        c.description = "dim M_Lie(q) <= dim M_Lie(q/q^" + std::to_string(i) + "_Lie) + " +
                        additive.str() + " [j = " + std::to_string(j) + ", dim q^j_Lie = " +
                        dim_qj.str() + "]";
        c.coefficients = {{"i", i}, {"j", j}, {"dim_qj_lie", dim_qj}, {"bracket", bracket}, {"additive", additive}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::constraint_na("T39", "requires Lie-nilpotency class >= 2"));
    }

    // T313: dim M_Lie(q) + dim M_Lie(q/q^i_Lie) <= (m - 1) * C(m_bar+n-2, n-1).
    if (class2) {
        RelativeConstraint c;
        c.id = "T313";
        c.applicable = true;
        c.reason = "Lie-nilpotent of class >= 2";
        const BigInt rhs = BigInt(p.m - 1) * binom(p.m_bar + p.n - 2, p.n - 1);
        c.description = "dim M_Lie(q) + dim M_Lie(q/q^" + std::to_string(i) + "_Lie) <= " + rhs.str();
        c.coefficients = {{"i", i}, {"rhs", rhs}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::constraint_na("T313", "requires Lie-nilpotency class >= 2"));
    }

    // T321: as T39, with m_bar replaced by the Lie-central factor's m.
    if (class2 && p.m_central) {
        const auto [j, dim_qj] = resolve_j();
        RelativeConstraint c;
        c.id = "T321";
        c.applicable = true;
        c.reason = "Lie-nilpotent of class >= 2 with m_central known";
        const BigInt bracket = binom(*p.m_central + p.n - 2, p.n - 1) - 1;
        const BigInt additive = dim_qj * bracket;
        c.description = "dim M_Lie(q) <= dim M_Lie(q/q^" + std::to_string(i) + "_Lie) + " +
                        additive.str() + " [j = " + std::to_string(j) + ", dim q^j_Lie = " +
                        dim_qj.str() + ", m_central = " + std::to_string(*p.m_central) + "]";
        c.coefficients = {{"i", i}, {"j", j}, {"dim_qj_lie", dim_qj}, {"bracket", bracket}, {"additive", additive}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::constraint_na(
            "T321", class2 ? "requires m_central" : "requires Lie-nilpotency class >= 2"));
    }

    // L22IV: dim M_Lie(q) + dim(I ∩ q²_Lie) <= dim M_Lie(q/I) + dim I * m_bar^(n-1).
    if (extras.dim_central_ideal && extras.dim_central_ideal_cap_q2) {
        RelativeConstraint c;
        c.id = "L22IV";
        c.applicable = true;
        c.reason = "central ideal data supplied (I ⊆ Z_Lie(q))";
        BigInt pow = 1;
        for (int e = 0; e < p.n - 1; ++e) pow *= p.m_bar;
        const BigInt term = BigInt(*extras.dim_central_ideal) * pow;
        c.description = "dim M_Lie(q) + " + std::to_string(*extras.dim_central_ideal_cap_q2) +
                        " <= dim M_Lie(q/I) + " + term.str() + " [dim I = " +
                        std::to_string(*extras.dim_central_ideal) + "]";
        c.coefficients = {{"dim_ideal", *extras.dim_central_ideal},
                          {"dim_ideal_cap_q2_lie", *extras.dim_central_ideal_cap_q2},
                          {"term", term}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::constraint_na("L22IV", "requires dim I and dim(I ∩ q²_Lie) for some I ⊆ Z_Lie(q)"));
    }
    return out;
}

struct BoundReport {
    std::vector<BoundItem> items;           // catalog order
    std::optional<BoundItem> best;          // minimal applicable value
    std::vector<RelativeConstraint> relative;
};

/// Evaluates the whole catalog. Best = minimal applicable value; on ties an
/// exact value wins over a bound, then the later catalog entry wins.
inline BoundReport best_bounds(const AlgebraParams& p, const ConstraintExtras& extras = {}) {
    p.validate();
    BoundReport report;
    for (BoundId id : kBoundCatalog) {
        BoundItem item = bound_value(id, p);
        if (item.applicable) {
            if (!report.best || *item.value < *report.best->value ||
                (*item.value == *report.best->value && (item.exact || !report.best->exact)))
                report.best = item;
        }
        report.items.push_back(std::move(item));
    }
    report.relative = relative_constraints(p, extras);
    return report;
}

}  // namespace nleib
