#pragma once

#include <nleib/linalg.hpp>
#include <nleib/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nleib {

/// Sparse structure-constant table of an n-linear bracket on Q^m:
/// [e_{i1},...,e_{in}] = sum_k c^k_{i1..in} e_k. Indices are 0-based
/// internally; the file format is 1-based. Only nonzero coefficients are
/// stored, sorted by target index per tuple.
class StructureConstants {
public:
    using Tuple = std::vector<int>;
    using Terms = std::vector<std::pair<int, Rational>>;
    using Table = std::map<Tuple, Terms>;

    StructureConstants(int arity, int dim) : arity_(arity), dim_(dim) {
        if (arity < 2) throw std::invalid_argument("StructureConstants: arity must be >= 2");
        if (dim < 0) throw std::invalid_argument("StructureConstants: dim must be >= 0");
    }

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    const Table& table() const { return table_; }

    const std::vector<std::string>& basis_names() const { return basis_names_; }
    void set_basis_names(std::vector<std::string> names) {
        if (!names.empty() && names.size() != static_cast<std::size_t>(dim_))
            throw std::invalid_argument("StructureConstants: wrong number of basis names");
        basis_names_ = std::move(names);
    }

    /// Accumulates c onto the (tuple, target) coefficient; zero results are erased.
    void add(const Tuple& tuple, int target, const Rational& c) {
        check_tuple(tuple);
        if (target < 0 || target >= dim_)
            throw std::invalid_argument("StructureConstants: target index out of range");
        if (c == 0) return;
        Terms& terms = table_[tuple];
        auto it = std::lower_bound(terms.begin(), terms.end(), target,
                                   [](const auto& t, int k) { return t.first < k; });
        if (it != terms.end() && it->first == target) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        } else {
            terms.insert(it, {target, c});
        }
        if (terms.empty()) table_.erase(tuple);
    }

    /// Bracket of a basis tuple as a sparse term list (empty when zero).
    const Terms& basis_bracket(const Tuple& tuple) const {
        check_tuple(tuple);
        static const Terms kEmpty;
        const auto it = table_.find(tuple);
        return it == table_.end() ? kEmpty : it->second;
    }

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.table_ == b.table_ &&
               a.basis_names_ == b.basis_names_;
    }

private:
    void check_tuple(const Tuple& tuple) const {
        if (tuple.size() != static_cast<std::size_t>(arity_))
            throw std::invalid_argument("StructureConstants: tuple arity mismatch");
        for (int i : tuple)
            if (i < 0 || i >= dim_) throw std::invalid_argument("StructureConstants: index out of range");
    }

    int arity_;
    int dim_;
    Table table_;
    std::vector<std::string> basis_names_;
};

namespace detail {

inline void check_args(const StructureConstants& sc, std::size_t count, std::size_t dim) {
    if (count != static_cast<std::size_t>(sc.arity()))
        throw std::invalid_argument("eval_bracket: argument count does not match arity");
    if (dim != static_cast<std::size_t>(sc.dim()))
        throw std::invalid_argument("eval_bracket: vector dimension does not match algebra");
}

/// Multilinear expansion of the bracket against the sparse table.
inline QVector eval_bracket_ptrs(const StructureConstants& sc, const std::vector<const QVector*>& args) {
    for (const QVector* a : args) check_args(sc, args.size(), a->dim());
    QVector out(static_cast<std::size_t>(sc.dim()));
    for (const auto& [tuple, terms] : sc.table()) {
        Rational prod = 1;
        bool zero = false;
        for (std::size_t slot = 0; slot < tuple.size(); ++slot) {
            const Rational& c = (*args[slot])[static_cast<std::size_t>(tuple[slot])];
            if (c == 0) {
                zero = true;
                break;
            }
            prod *= c;
        }
        if (zero) continue;
        for (const auto& [target, coeff] : terms)
            out[static_cast<std::size_t>(target)] += coeff * prod;
    }
    return out;
}

inline std::vector<const QVector*> to_ptrs(const std::vector<QVector>& args) {
    std::vector<const QVector*> ps;
    ps.reserve(args.size());
    for (const auto& a : args) ps.push_back(&a);
    return ps;
}

/// Bracket with basis vectors everywhere except one vector argument:
/// sum_a v[a] * [.., e_a at slot, ..]. tuple is scratch space holding the
/// fixed basis indices; its slot entry is clobbered.
inline QVector eval_bracket_one_vector(const StructureConstants& sc, std::vector<int>& tuple, int slot,
                                       const QVector& v) {
    QVector out(static_cast<std::size_t>(sc.dim()));
    const int m = sc.dim();
    for (int a = 0; a < m; ++a) {
        const Rational& c = v[static_cast<std::size_t>(a)];
        if (c == 0) continue;
        tuple[static_cast<std::size_t>(slot)] = a;
        for (const auto& [target, coeff] : sc.basis_bracket(tuple))
            out[static_cast<std::size_t>(target)] += coeff * c;
    }
    return out;
}

inline QVector eval_lie_bracket_ptrs(const StructureConstants& sc, const std::vector<const QVector*>& args) {
    const std::size_t n = args.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    QVector out(static_cast<std::size_t>(sc.dim()));
    std::vector<const QVector*> permuted(n);
    do {
        for (std::size_t i = 0; i < n; ++i) permuted[i] = args[perm[i]];
        out += eval_bracket_ptrs(sc, permuted);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace detail

/// [args_1, ..., args_n], n-linear in every slot.
inline QVector eval_bracket(const StructureConstants& sc, const std::vector<QVector>& args) {
    return detail::eval_bracket_ptrs(sc, detail::to_ptrs(args));
}

/// Bracket of a basis tuple as a coordinate vector.
inline QVector eval_bracket_basis(const StructureConstants& sc, const StructureConstants::Tuple& tuple) {
    QVector out(static_cast<std::size_t>(sc.dim()));
    for (const auto& [target, coeff] : sc.basis_bracket(tuple))
        out[static_cast<std::size_t>(target)] = coeff;
    return out;
}

/// [args]_Lie = sum over all n! permutations of the ordinary bracket;
/// fully symmetric in its arguments.
inline QVector eval_lie_bracket(const StructureConstants& sc, const std::vector<QVector>& args) {
    return detail::eval_lie_bracket_ptrs(sc, detail::to_ptrs(args));
}

/// Inclusion-exclusion form of the Lie-bracket: bracket of the summed
/// argument in every slot, minus the brackets over all non-injective index
/// maps. Agrees with eval_lie_bracket on every input.
inline QVector eval_lie_bracket_alt(const StructureConstants& sc, const std::vector<QVector>& args) {
    const std::size_t n = args.size();
    detail::check_args(sc, n, args.empty() ? static_cast<std::size_t>(sc.dim()) : args[0].dim());
    QVector s(static_cast<std::size_t>(sc.dim()));
    for (const auto& a : args) s += a;
    QVector out = detail::eval_bracket_ptrs(sc, std::vector<const QVector*>(n, &s));

    std::vector<std::size_t> theta(n, 0);
    std::vector<const QVector*> chosen(n);
    std::vector<bool> seen(n);
    while (true) {
        std::fill(seen.begin(), seen.end(), false);
        bool injective = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[theta[i]]) injective = false;
            seen[theta[i]] = true;
        }
        if (!injective) {
            for (std::size_t i = 0; i < n; ++i) chosen[i] = &args[theta[i]];
            out -= detail::eval_bracket_ptrs(sc, chosen);
        }
        std::size_t i = 0;
        while (i < n && theta[i] + 1 == n) theta[i++] = 0;
        if (i == n) break;
        ++theta[i];
    }
    return out;
}

/// Witness of a failed fundamental identity at a basis tuple: the nonzero
/// difference LHS - RHS. Indices are 0-based.
struct IdentityViolation {
    std::vector<int> x_tuple;  // n entries
    std::vector<int> y_tuple;  // n-1 entries
    QVector defect;
};

struct TupleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kIdentityTupleSoftLimit = 10'000'000;

/// Checks [[x_1..x_n], y_2..y_n] = sum_i [x_1.., [x_i, y_2..y_n], ..x_n]
/// over all basis tuples in lexicographic order; by multilinearity this
/// decides the identity. Empty result iff sc is a Leibniz n-algebra.
/// Refuses above the tuple soft limit unless force is set.
inline std::vector<IdentityViolation> check_fundamental_identity(
    const StructureConstants& sc, std::optional<std::size_t> max_violations = std::nullopt,
    bool force = false) {
    const int n = sc.arity();
    const int m = sc.dim();
    std::vector<IdentityViolation> violations;
    if (m == 0) return violations;

    double tuple_estimate = 1.0;
    for (int i = 0; i < 2 * n - 1; ++i) tuple_estimate *= m;
    if (!force && tuple_estimate > static_cast<double>(kIdentityTupleSoftLimit))
        throw TupleLimitError("check_fundamental_identity: " + std::to_string(tuple_estimate) +
                              " basis tuples exceeds the soft limit; pass force to override");

    std::vector<int> combined(static_cast<std::size_t>(2 * n - 1), 0);
    std::vector<int> x(static_cast<std::size_t>(n));
    std::vector<int> inner_tuple(static_cast<std::size_t>(n));
    std::vector<int> scratch(static_cast<std::size_t>(n));
    while (true) {
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = combined[static_cast<std::size_t>(i)];
        const int* y = combined.data() + n;  // y_2..y_n

        // [[x_1..x_n], y_2..y_n]
        const QVector inner = eval_bracket_basis(sc, x);
        for (int i = 1; i < n; ++i) scratch[static_cast<std::size_t>(i)] = y[i - 1];
        QVector defect = detail::eval_bracket_one_vector(sc, scratch, 0, inner);

        for (int i = 0; i < n; ++i) {
            inner_tuple[0] = x[static_cast<std::size_t>(i)];
            for (int j = 1; j < n; ++j) inner_tuple[static_cast<std::size_t>(j)] = y[j - 1];
            const QVector mid = eval_bracket_basis(sc, inner_tuple);
            for (int j = 0; j < n; ++j) scratch[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
            defect -= detail::eval_bracket_one_vector(sc, scratch, i, mid);
        }

        if (!defect.is_zero()) {
            violations.push_back({x, std::vector<int>(y, y + (n - 1)), std::move(defect)});
            if (max_violations && violations.size() >= *max_violations) return violations;
        }

        int i = 2 * n - 2;
        while (i >= 0 && combined[static_cast<std::size_t>(i)] == m - 1) combined[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++combined[static_cast<std::size_t>(i)];
    }
    return violations;
}

/// Smallest subspace containing s that absorbs bracketing with arbitrary
/// elements in every slot. Fixpoint sweep, at most dim steps.
inline Subspace ideal_closure(const StructureConstants& sc, const Subspace& s) {
    const int n = sc.arity();
    const int m = sc.dim();
    if (s.ambient_dim() != static_cast<std::size_t>(m))
        throw std::invalid_argument("ideal_closure: ambient dimension mismatch");

    Subspace cur = s;
    while (true) {
        std::vector<QVector> found;
        std::vector<int> fill(static_cast<std::size_t>(n - 1), 0);
        std::vector<int> scratch(static_cast<std::size_t>(n));
        for (const QVector& v : cur.basis()) {
            for (int pos = 0; pos < n; ++pos) {
                std::fill(fill.begin(), fill.end(), 0);
                while (true) {
                    int fi = 0;
                    for (int j = 0; j < n; ++j)
                        if (j != pos) scratch[static_cast<std::size_t>(j)] = fill[static_cast<std::size_t>(fi++)];
                    QVector w = detail::eval_bracket_one_vector(sc, scratch, pos, v);
                    if (!w.is_zero() && !cur.contains(w)) found.push_back(std::move(w));

                    int i = n - 2;
                    while (i >= 0 && fill[static_cast<std::size_t>(i)] == m - 1) fill[static_cast<std::size_t>(i--)] = 0;
                    if (i < 0) break;
                    ++fill[static_cast<std::size_t>(i)];
                }
            }
        }
        if (found.empty()) return cur;
        std::vector<QVector> all = cur.basis();
        all.insert(all.end(), found.begin(), found.end());
        cur = Subspace::span(all, static_cast<std::size_t>(m));
    }
}

/// True iff brackets with one slot in s and the rest arbitrary stay in s.
inline bool is_ideal(const StructureConstants& sc, const Subspace& s) {
    return ideal_closure(sc, s) == s;
}

/// Polarized generator span of the Leibnizator: for every slot pair p < q
/// and every basis filling of the remaining slots, the brackets with both
/// slots set to e_a, plus the symmetrized (e_a, e_b) + (e_b, e_a) sums.
/// Over characteristic 0 this spans exactly the brackets with two equal
/// arguments.
inline Subspace leibnizator_span(const StructureConstants& sc) {
    const int n = sc.arity();
    const int m = sc.dim();
    std::vector<QVector> gens;
    std::vector<int> tuple(static_cast<std::size_t>(n));

    std::vector<int> fill(static_cast<std::size_t>(n >= 2 ? n - 2 : 0), 0);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            std::fill(fill.begin(), fill.end(), 0);
            while (true) {
                const auto place = [&](int a, int b) {
                    int fi = 0;
                    for (int j = 0; j < n; ++j) {
                        if (j == p)
                            tuple[static_cast<std::size_t>(j)] = a;
                        else if (j == q)
                            tuple[static_cast<std::size_t>(j)] = b;
                        else
                            tuple[static_cast<std::size_t>(j)] = fill[static_cast<std::size_t>(fi++)];
                    }
                };
                for (int a = 0; a < m; ++a) {
                    place(a, a);
                    QVector g = eval_bracket_basis(sc, tuple);
                    if (!g.is_zero()) gens.push_back(std::move(g));
                    for (int b = a + 1; b < m; ++b) {
                        place(a, b);
                        QVector h = eval_bracket_basis(sc, tuple);
                        place(b, a);
                        h += eval_bracket_basis(sc, tuple);
                        if (!h.is_zero()) gens.push_back(std::move(h));
                    }
                }
                if (fill.empty()) break;
                int i = n - 3;
                while (i >= 0 && fill[static_cast<std::size_t>(i)] == m - 1) fill[static_cast<std::size_t>(i--)] = 0;
                if (i < 0) break;
                ++fill[static_cast<std::size_t>(i)];
            }
        }
    }
    return Subspace::span(gens, static_cast<std::size_t>(m));
}

/// The Leibnizator ideal: ideal closure of the polarized generator span.
inline Subspace leibnizator(const StructureConstants& sc) {
    return ideal_closure(sc, leibnizator_span(sc));
}

/// True iff the bracket changes sign under every adjacent transposition of
/// basis arguments. Over characteristic 0 this is equivalent to the
/// Leibnizator vanishing; both routes are compared in the test suite.
inline bool has_alternating_bracket(const StructureConstants& sc) {
    const int n = sc.arity();
    const int m = sc.dim();
    if (m == 0) return true;
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    while (true) {
        const QVector v = eval_bracket_basis(sc, tuple);
        for (int p = 0; p + 1 < n; ++p) {
            std::vector<int> swapped = tuple;
            std::swap(swapped[static_cast<std::size_t>(p)], swapped[static_cast<std::size_t>(p + 1)]);
            if (!(eval_bracket_basis(sc, swapped) + v).is_zero()) return false;
        }
        int i = n - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == m - 1) tuple[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++tuple[static_cast<std::size_t>(i)];
    }
    return true;
}

/// True iff the Leibnizator ideal is zero, i.e. sc is an n-Lie (Filippov)
/// algebra.
inline bool is_n_lie(const StructureConstants& sc) { return leibnizator(sc).dim() == 0; }

/// Quotient algebra q/I on the complement basis (standard basis vectors at
/// the non-pivot coordinates of I) together with the projection matrix and
/// the surviving basis indices.
struct QuotientResult {
    StructureConstants algebra;
    QMatrix projection;              // (m - dim I) x m, acts as v -> P v
    std::vector<int> complement;     // original indices of the surviving basis vectors
};

inline QuotientResult quotient(const StructureConstants& sc, const Subspace& ideal) {
    const int n = sc.arity();
    const int m = sc.dim();
    if (ideal.ambient_dim() != static_cast<std::size_t>(m))
        throw std::invalid_argument("quotient: ambient dimension mismatch");
    if (!is_ideal(sc, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");

    const auto pivots = ideal.pivot_columns();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<int> complement;
    for (int j = 0; j < m; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) complement.push_back(j);
    const int mq = static_cast<int>(complement.size());

    // proj(e_j) = unit at j's complement slot; proj(e_pivot) = -(basis row at
    // the complement coordinates), so that proj kills the ideal.
    QMatrix proj(static_cast<std::size_t>(mq), static_cast<std::size_t>(m));
    for (int r = 0; r < mq; ++r) proj.row(static_cast<std::size_t>(r))[static_cast<std::size_t>(complement[static_cast<std::size_t>(r)])] = 1;
    for (std::size_t b = 0; b < pivots.size(); ++b) {
        const QVector& row = ideal.basis()[b];
        for (int r = 0; r < mq; ++r)
            proj.row(static_cast<std::size_t>(r))[pivots[b]] = -row[static_cast<std::size_t>(complement[static_cast<std::size_t>(r)])];
    }

    StructureConstants out(n, mq);
    if (!sc.basis_names().empty()) {
        std::vector<std::string> names;
        for (int j : complement) names.push_back(sc.basis_names()[static_cast<std::size_t>(j)]);
        out.set_basis_names(std::move(names));
    }
    if (mq > 0) {
        std::vector<int> t(static_cast<std::size_t>(n), 0);       // tuple over the quotient basis
        std::vector<int> lifted(static_cast<std::size_t>(n));     // same tuple in the original indices
        while (true) {
            for (int j = 0; j < n; ++j) lifted[static_cast<std::size_t>(j)] = complement[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])];
            const QVector w = proj.apply(eval_bracket_basis(sc, lifted));
            for (int k = 0; k < mq; ++k)
                if (w[static_cast<std::size_t>(k)] != 0) out.add(t, k, w[static_cast<std::size_t>(k)]);
            int i = n - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == mq - 1) t[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++t[static_cast<std::size_t>(i)];
        }
    }
    return {std::move(out), std::move(proj), std::move(complement)};
}

}  // namespace nleib
