#pragma once

// Shared helpers for the test suites: deterministic random generators and a
// brute-force bracket evaluator kept independent of the library's own
// evaluation path, used to re-verify reported identity defects.

#include <nleib/nleib.hpp>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace test_support {

using nleib::QVector;
using nleib::Rational;
using nleib::StructureConstants;
using nleib::Subspace;

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline QVector random_vector(std::mt19937& rng, std::size_t dim) {
    QVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = random_rational(rng);
    return v;
}

inline Subspace random_subspace(std::mt19937& rng, std::size_t ambient) {
    std::uniform_int_distribution<std::size_t> count(0, ambient);
    std::vector<QVector> vs;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, ambient));
    return Subspace::span(vs, ambient);
}

/// Deterministic rejection sampling of sparse structure-constant tables
/// (n in {2,3}, m in 2..4) that pass the fundamental-identity check.
inline std::vector<StructureConstants> random_leibniz_tables(std::size_t want, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> arity_pick(2, 3);
    std::uniform_int_distribution<int> dim_pick(2, 4);
    std::uniform_int_distribution<int> entry_pick(1, 3);
    std::uniform_int_distribution<int> coeff_pick(0, 3);
    std::uniform_int_distribution<int> graded_pick(0, 9);
    const Rational coeffs[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};

    std::vector<StructureConstants> out;
    std::size_t attempts = 0;
    while (out.size() < want) {
        if (++attempts > 200000) throw std::runtime_error("random_leibniz_tables: sampling stalled");
        const int n = arity_pick(rng);
        const int m = dim_pick(rng);
        StructureConstants sc(n, m);
        const int entries = entry_pick(rng);
        for (int e = 0; e < entries; ++e) {
            std::vector<int> tuple(static_cast<std::size_t>(n));
            int max_idx = 0;
            for (auto& t : tuple) {
                t = std::uniform_int_distribution<int>(0, m - 2)(rng);
                max_idx = std::max(max_idx, t);
            }
            // Mostly graded targets (high acceptance), occasionally arbitrary.
            const int target = graded_pick(rng) < 7
                                   ? std::uniform_int_distribution<int>(max_idx + 1, m - 1)(rng)
                                   : std::uniform_int_distribution<int>(0, m - 1)(rng);
            sc.add(tuple, target, coeffs[static_cast<std::size_t>(coeff_pick(rng))]);
        }
        if (sc.table().empty()) continue;
        if (nleib::check_fundamental_identity(sc, std::size_t{1}).empty()) out.push_back(std::move(sc));
    }
    return out;
}

// --- independent oracle ----------------------------------------------------

using SparseVec = std::map<int, Rational>;

inline SparseVec to_sparse(const QVector& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v[i] != 0) s[static_cast<int>(i)] = v[i];
    return s;
}

/// Bracket of sparse vectors by direct expansion over the support product,
/// looking tuples up in the raw table. A different strategy from the
/// library's table-iteration evaluator.
inline SparseVec oracle_bracket(const StructureConstants& sc, const std::vector<SparseVec>& args) {
    SparseVec out;
    std::vector<SparseVec::const_iterator> its;
    for (const auto& a : args) {
        if (a.empty()) return out;
        its.push_back(a.begin());
    }
    while (true) {
        Rational prod = 1;
        std::vector<int> tuple;
        for (const auto& it : its) {
            tuple.push_back(it->first);
            prod *= it->second;
        }
        const auto found = sc.table().find(tuple);
        if (found != sc.table().end())
            for (const auto& [target, coeff] : found->second) {
                out[target] += coeff * prod;
                if (out[target] == 0) out.erase(target);
            }
        std::size_t i = args.size();
        while (i > 0) {
            --i;
            if (++its[i] != args[i].end()) break;
            its[i] = args[i].begin();
            if (i == 0) return out;
        }
    }
}

inline SparseVec unit_sparse(int index) { return {{index, Rational(1)}}; }

/// Fundamental-identity defect at a basis tuple, re-derived from scratch.
inline SparseVec oracle_identity_defect(const StructureConstants& sc, const std::vector<int>& x_tuple,
                                        const std::vector<int>& y_tuple) {
    const int n = sc.arity();
    std::vector<SparseVec> x_units;
    for (int x : x_tuple) x_units.push_back(unit_sparse(x));
    std::vector<SparseVec> y_units;
    for (int y : y_tuple) y_units.push_back(unit_sparse(y));

    std::vector<SparseVec> lhs_args;
    lhs_args.push_back(oracle_bracket(sc, x_units));
    for (const auto& y : y_units) lhs_args.push_back(y);
    SparseVec defect = oracle_bracket(sc, lhs_args);

    for (int i = 0; i < n; ++i) {
        std::vector<SparseVec> inner_args;
        inner_args.push_back(x_units[static_cast<std::size_t>(i)]);
        for (const auto& y : y_units) inner_args.push_back(y);
        std::vector<SparseVec> outer = x_units;
        outer[static_cast<std::size_t>(i)] = oracle_bracket(sc, inner_args);
        for (const auto& [k, c] : oracle_bracket(sc, outer)) {
            defect[k] -= c;
            if (defect[k] == 0) defect.erase(k);
        }
    }
    return defect;
}

}  // namespace test_support
