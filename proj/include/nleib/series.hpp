#pragma once

#include <nleib/nalgebra.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace nleib {

namespace detail {

/// Non-decreasing (n-1)-tuples over {0..m-1}, the filling set for
/// Lie-products: full symmetry of the Lie-bracket makes other orders and
/// slot positions redundant.
inline std::vector<std::vector<int>> nondecreasing_fillings(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n - 1), 0);
    if (m == 0) return out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(t);
        int i = n - 2;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == m - 1) --i;
        if (i < 0) break;
        const int v = t[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n - 1; ++j) t[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

/// Lie-bracket of one vector with basis fillings: the sum over all n!
/// arrangements of (v, e_{f1}, ..., e_{f(n-1)}), each evaluated through the
/// sparse one-vector path.
inline QVector lie_bracket_vector_with_units(const StructureConstants& sc, const QVector& v,
                                             const std::vector<int>& fill) {
    const int n = sc.arity();
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<int> scratch(static_cast<std::size_t>(n));
    QVector out(static_cast<std::size_t>(sc.dim()));
    do {
        int vslot = 0;
        for (int k = 0; k < n; ++k) {
            if (perm[static_cast<std::size_t>(k)] == 0)
                vslot = k;
            else
                scratch[static_cast<std::size_t>(k)] =
                    fill[perm[static_cast<std::size_t>(k)] - 1];
        }
        out += eval_bracket_one_vector(sc, scratch, vslot, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace detail

/// [A, q, ..., q]_Lie: span of the Lie-brackets with one argument running
/// over a basis of A and the rest over the standard basis.
inline Subspace lie_product_subspace(const StructureConstants& sc, const Subspace& a) {
    const int n = sc.arity();
    const int m = sc.dim();
    if (a.ambient_dim() != static_cast<std::size_t>(m))
        throw std::invalid_argument("lie_product_subspace: ambient dimension mismatch");

    std::vector<QVector> gens;
    for (const QVector& v : a.basis()) {
        for (const auto& fill : detail::nondecreasing_fillings(m, n)) {
            QVector w = detail::lie_bracket_vector_with_units(sc, v, fill);
            if (!w.is_zero()) gens.push_back(std::move(w));
        }
    }
    return Subspace::span(gens, static_cast<std::size_t>(m));
}

namespace detail {

/// Span of ordinary brackets with a basis vector of A in the given slots
/// and standard basis vectors elsewhere.
inline Subspace product_subspace(const StructureConstants& sc, const Subspace& a, bool all_slots) {
    const int n = sc.arity();
    const int m = sc.dim();
    std::vector<QVector> gens;
    std::vector<int> fill(static_cast<std::size_t>(n - 1), 0);
    std::vector<int> scratch(static_cast<std::size_t>(n));
    const int last_pos = all_slots ? n - 1 : 0;
    for (const QVector& v : a.basis()) {
        for (int pos = 0; pos <= last_pos; ++pos) {
            std::fill(fill.begin(), fill.end(), 0);
            while (true) {
                int fi = 0;
                for (int j = 0; j < n; ++j)
                    if (j != pos) scratch[static_cast<std::size_t>(j)] = fill[static_cast<std::size_t>(fi++)];
                QVector w = eval_bracket_one_vector(sc, scratch, pos, v);
                if (!w.is_zero()) gens.push_back(std::move(w));

                int i = n - 2;
                while (i >= 0 && fill[static_cast<std::size_t>(i)] == m - 1) fill[static_cast<std::size_t>(i--)] = 0;
                if (i < 0) break;
                ++fill[static_cast<std::size_t>(i)];
            }
        }
    }
    return Subspace::span(gens, static_cast<std::size_t>(m));
}

template <typename Step>
std::vector<Subspace> descending_series(const StructureConstants& sc, Step step) {
    std::vector<Subspace> series;
    series.push_back(Subspace::full(static_cast<std::size_t>(sc.dim())));
    // a descending chain in Q^m stabilizes within dim+1 terms
    for (int guard = 0; guard <= sc.dim() + 1; ++guard) {
        Subspace next = step(series.back());
        if (next == series.back()) return series;
        series.push_back(std::move(next));
    }
    throw std::logic_error("descending_series: chain failed to stabilize");
}

}  // namespace detail

/// Lower Lie-central series q = q^1_Lie >= q^2_Lie >= ..., listed until it
/// stabilizes (last entry zero iff Lie-nilpotent).
inline std::vector<Subspace> lower_lie_series(const StructureConstants& sc) {
    return detail::descending_series(sc, [&](const Subspace& prev) { return lie_product_subspace(sc, prev); });
}

/// Ordinary lower central series with the first-slot convention
/// q^i = span[q^{i-1}, q, ..., q].
inline std::vector<Subspace> lower_series(const StructureConstants& sc) {
    return detail::descending_series(sc, [&](const Subspace& prev) { return detail::product_subspace(sc, prev, false); });
}

/// Variant of the ordinary series that brackets the previous term in every
/// slot; reported alongside the first-slot convention for comparison.
inline std::vector<Subspace> lower_series_all_slots(const StructureConstants& sc) {
    return detail::descending_series(sc, [&](const Subspace& prev) { return detail::product_subspace(sc, prev, true); });
}

/// Z_Lie(q) = {x : [x, q, ..., q]_Lie = 0}: kernel of the stacked maps
/// x -> [x, e_{j2}, ..., e_{jn}]_Lie over non-decreasing fillings.
inline Subspace lie_center(const StructureConstants& sc) {
    const int n = sc.arity();
    const int m = sc.dim();
    std::vector<QVector> units;
    for (int i = 0; i < m; ++i)
        units.push_back(QVector::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(i)));

    QMatrix stacked(static_cast<std::size_t>(m));
    for (const auto& fill : detail::nondecreasing_fillings(m, n)) {
        // Columns of the block: images of the basis vectors.
        std::vector<QVector> images;
        images.reserve(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a)
            images.push_back(detail::lie_bracket_vector_with_units(sc, units[static_cast<std::size_t>(a)], fill));
        for (int k = 0; k < m; ++k) {
            QVector row(static_cast<std::size_t>(m));
            bool nonzero = false;
            for (int a = 0; a < m; ++a) {
                row[static_cast<std::size_t>(a)] = images[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
                nonzero = nonzero || row[static_cast<std::size_t>(a)] != 0;
            }
            if (nonzero) stacked.add_row(std::move(row));
        }
    }
    return kernel(stacked);
}

/// Upper Lie-central series 0 = Z^Lie_0 <= Z^Lie_1 <= ...; each term is the
/// preimage of the Lie-center of the quotient by the previous term. Listed
/// until stable (last entry q iff Lie-nilpotent).
inline std::vector<Subspace> upper_lie_series(const StructureConstants& sc) {
    const int m = sc.dim();
    std::vector<Subspace> series;
    series.push_back(Subspace::zero(static_cast<std::size_t>(m)));
    for (int guard = 0; guard <= m + 1; ++guard) {
        const Subspace& cur = series.back();
        if (cur.dim() == static_cast<std::size_t>(m)) return series;
        const QuotientResult q = quotient(sc, cur);
        const Subspace zq = lie_center(q.algebra);
        if (zq.dim() == 0) return series;
        std::vector<QVector> lifted = cur.basis();
        for (const QVector& v : zq.basis()) {
            QVector w(static_cast<std::size_t>(m));
            for (std::size_t r = 0; r < v.dim(); ++r)
                w[static_cast<std::size_t>(q.complement[r])] = v[r];
            lifted.push_back(std::move(w));
        }
        series.push_back(Subspace::span(lifted, static_cast<std::size_t>(m)));
    }
    throw std::logic_error("upper_lie_series: chain failed to stabilize");
}

/// Series dimensions, nilpotency classes and classification flags.
struct ClassificationReport {
    int arity = 0;
    int dim = 0;
    std::vector<int> lie_series_dims;        // dim q^i_Lie, i = 1, 2, ...
    std::vector<int> series_dims;            // ordinary, first-slot convention
    std::vector<int> series_all_slot_dims;   // ordinary, all-slots variant
    std::vector<int> upper_lie_series_dims;  // dim Z^Lie_i, i = 0, 1, ...
    int lie_center_dim = 0;
    int leibnizator_dim = 0;
    bool leibnizator_closure_enlarged = false;
    bool series_slot_convention_differs = false;
    std::optional<int> lie_class;
    std::optional<int> nilpotency_class;
    bool lie_abelian = false;
    bool lie_nilpotent = false;
    bool nilpotent = false;
    bool lie_filiform = false;
    bool filiform = false;
    bool lie_maximal_class = false;
    bool maximal_class = false;
    bool n_lie = false;
};

namespace detail {

inline std::vector<int> series_dims(const std::vector<Subspace>& series) {
    std::vector<int> dims;
    dims.reserve(series.size());
    for (const auto& s : series) dims.push_back(static_cast<int>(s.dim()));
    return dims;
}

/// dim of the i-th series term (1-based); terms past the listed chain keep
/// the stabilized value.
inline int dim_at(const std::vector<int>& dims, int i) {
    if (dims.empty()) return 0;
    const std::size_t idx = static_cast<std::size_t>(i - 1);
    return idx < dims.size() ? dims[idx] : dims.back();
}

inline std::optional<int> nilpotency_class_of(const std::vector<int>& dims) {
    if (dims.empty() || dims.back() != 0) return std::nullopt;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] == 0) return static_cast<int>(i);  // q^{i+1} = 0, q^i != 0
    return std::nullopt;
}

inline bool filiform_dims(const std::vector<int>& dims, int m, int n) {
    if (m < n) return false;
    for (int i = 2; i <= m - n + 2; ++i)
        if (dim_at(dims, i) != m - n + 2 - i) return false;
    return true;
}

inline bool maximal_class_dims(const std::vector<int>& dims, int m) {
    for (int i = 1; i <= m + 1; ++i)
        if (dim_at(dims, i) != m + 1 - i) return false;
    return true;
}

}  // namespace detail

inline ClassificationReport classify(const StructureConstants& sc) {
    ClassificationReport rep;
    rep.arity = sc.arity();
    rep.dim = sc.dim();
    const int m = sc.dim();
    const int n = sc.arity();

    const auto lie_series = lower_lie_series(sc);
    const auto ord_series = lower_series(sc);
    const auto all_series = lower_series_all_slots(sc);
    rep.lie_series_dims = detail::series_dims(lie_series);
    rep.series_dims = detail::series_dims(ord_series);
    rep.series_all_slot_dims = detail::series_dims(all_series);
    rep.series_slot_convention_differs = rep.series_dims != rep.series_all_slot_dims;
    rep.upper_lie_series_dims = detail::series_dims(upper_lie_series(sc));

    rep.lie_center_dim = static_cast<int>(lie_center(sc).dim());
    const Subspace leib_span = leibnizator_span(sc);
    const Subspace leib = ideal_closure(sc, leib_span);
    rep.leibnizator_dim = static_cast<int>(leib.dim());
    rep.leibnizator_closure_enlarged = leib.dim() != leib_span.dim();

    rep.lie_class = detail::nilpotency_class_of(rep.lie_series_dims);
    rep.nilpotency_class = detail::nilpotency_class_of(rep.series_dims);
    rep.lie_nilpotent = rep.lie_class.has_value();
    rep.nilpotent = rep.nilpotency_class.has_value();
    rep.lie_abelian = detail::dim_at(rep.lie_series_dims, 2) == 0;
    rep.lie_filiform = detail::filiform_dims(rep.lie_series_dims, m, n);
    rep.filiform = detail::filiform_dims(rep.series_dims, m, n);
    rep.lie_maximal_class = detail::maximal_class_dims(rep.lie_series_dims, m);
    rep.maximal_class = detail::maximal_class_dims(rep.series_dims, m);
    rep.n_lie = leib.dim() == 0;
    return rep;
}

/// The correction term of the multiplier inequality for an ideal I:
/// dim(I ∩ q²_Lie), dim [I, q, ..., q]_Lie and their gap.
struct RelativeGap {
    int dim_intersection;
    int dim_product;
    int gap;
};

inline RelativeGap relative_gap(const StructureConstants& sc, const Subspace& ideal) {
    if (!is_ideal(sc, ideal)) throw std::invalid_argument("relative_gap: subspace is not an ideal");
    const Subspace q2 = lie_product_subspace(sc, Subspace::full(static_cast<std::size_t>(sc.dim())));
    const Subspace inter = intersect(ideal, q2);
    const Subspace prod = lie_product_subspace(sc, ideal);
    if (!inter.contains(prod))
        throw std::logic_error("relative_gap: [I,q,...,q]_Lie not contained in I ∩ q²_Lie");
    return {static_cast<int>(inter.dim()), static_cast<int>(prod.dim()),
            static_cast<int>(inter.dim()) - static_cast<int>(prod.dim())};
}

}  // namespace nleib
