#pragma once

#include <nleib/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace nleib {

/// C(a, b), exact; 0 whenever a < 0, b < 0 or a < b.
inline BigInt binom(long long a, long long b) {
    if (b < 0 || a < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;  // exact at every step: result is C(a-b+i, i)
    }
    return result;
}

/// r-dimensional figurate number P_k^(r) = C(k+r-1, r).
/// r = 1 gives the naturals, r = 2 the triangular numbers T_k,
/// r = 3 the tetrahedral numbers H_k.
inline BigInt figurate(long long k, long long r) {
    if (k < 1 || r < 1) throw std::invalid_argument("figurate: k and r must be >= 1");
    return binom(k + r - 1, r);
}

/// Number of non-decreasing sequences of length s over {1..t}: C(t+s-1, s).
inline BigInt count_nondecreasing(long long t, long long s) {
    if (t < 1) throw std::invalid_argument("count_nondecreasing: t must be >= 1");
    if (s < 0) throw std::invalid_argument("count_nondecreasing: s must be >= 0");
    return binom(t + s - 1, s);
}

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Complete lexicographic listing of the non-decreasing sequences of
/// length s over {1..t}. Refuses when the count exceeds the cap.
inline std::vector<std::vector<int>> enumerate_nondecreasing(
    int t, int s, std::size_t cap = kDefaultEnumerationCap) {
    const BigInt count = count_nondecreasing(t, s);
    if (count > cap)
        throw std::length_error("enumerate_nondecreasing: " + count.str() +
                                " sequences exceeds cap " + std::to_string(cap));
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> cur(static_cast<std::size_t>(s), 1);
    if (s == 0) {
        out.push_back(cur);
        return out;
    }
    while (true) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == t) --i;
        if (i < 0) break;
        const int v = cur[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < s; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

struct PascalIdentityResult {
    BigInt lhs;
    BigInt rhs;
    bool equal;
};

/// Closed-form check of C(2n, n) = sum_{i=0..n} C(2n-r-1-i, n-r-1) * P_{i+1}^(r).
inline PascalIdentityResult pascal_identity_check(int n, int r) {
    if (n < 2) throw std::invalid_argument("pascal_identity_check: n must be >= 2");
    if (r < 1 || r > n - 1) throw std::invalid_argument("pascal_identity_check: r out of range [1, n-1]");
    const BigInt lhs = binom(2LL * n, n);
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) rhs += binom(2LL * n - r - 1 - i, n - r - 1) * figurate(i + 1, r);
    return {lhs, rhs, lhs == rhs};
}

/// One class of the identity's counting proof: non-decreasing sequences of
/// length n over {1..n+1} whose first n-r entries have maximum exactly n+1-i.
struct ClassCount {
    int i;
    BigInt predicted;   // C(2n-r-1-i, n-r-1) * P_{i+1}^(r)
    BigInt enumerated;  // brute-force tally over the full listing
};

/// Enumeration oracle for the identity: partitions all C(2n, n) sequences
/// into the proof's classes and tallies each against the closed form.
inline std::vector<ClassCount> pascal_identity_classes(
    int n, int r, std::size_t cap = kDefaultEnumerationCap) {
    if (n < 2) throw std::invalid_argument("pascal_identity_classes: n must be >= 2");
    if (r < 1 || r > n - 1) throw std::invalid_argument("pascal_identity_classes: r out of range [1, n-1]");
    std::vector<ClassCount> classes;
    classes.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        classes.push_back({i, binom(2LL * n - r - 1 - i, n - r - 1) * figurate(i + 1, r), 0});

    const int prefix_len = n - r;  // >= 1 since r <= n-1
    for (const auto& seq : enumerate_nondecreasing(n + 1, n, cap)) {
        // A non-decreasing prefix attains its maximum at the last position.
        const int vmax = seq[static_cast<std::size_t>(prefix_len) - 1];
        const int i = n + 1 - vmax;
        classes[static_cast<std::size_t>(i)].enumerated += 1;
    }
    return classes;
}

/// Sum of the Pascal-triangle entries C(k, j) inside the rhombus spanned
/// between row 0 and the central entry of row 2n-2:
/// 0 <= k <= 2n-2, max(0, k-n+1) <= j <= min(k, n-1). Equals C(2n, n) - 1.
inline BigInt rhombus_sum(int n) {
    if (n < 2) throw std::invalid_argument("rhombus_sum: n must be >= 2");
    BigInt total = 0;
    for (long long k = 0; k <= 2LL * n - 2; ++k) {
        const long long lo = std::max(0LL, k - n + 1);
        const long long hi = std::min(k, static_cast<long long>(n) - 1);
        for (long long j = lo; j <= hi; ++j) total += binom(k, j);
    }
    return total;
}

struct DecompositionRow {
    BigInt coefficient;    // C(2n-r-1-i, n-r-1)
    BigInt figurate_term;  // P_{i+1}^(r)
    BigInt product;
};

/// Rows i = 0..n of the central-binomial decomposition into figurate
/// numbers; the products sum to C(2n, n).
inline std::vector<DecompositionRow> decomposition_table(int n, int r) {
    if (n < 2) throw std::invalid_argument("decomposition_table: n must be >= 2");
    if (r < 1 || r > n - 1) throw std::invalid_argument("decomposition_table: r out of range [1, n-1]");
    std::vector<DecompositionRow> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const BigInt c = binom(2LL * n - r - 1 - i, n - r - 1);
        const BigInt p = figurate(i + 1, r);
        rows.push_back({c, p, c * p});
    }
    return rows;
}

enum class SequenceKind {
    central_binomial,            // C(2n-2, n-1) for n = 2, 3, ...: 2, 6, 20, 70, 252, ...
    central_binomial_minus_one,  // 1, 5, 19, 69, 251, ...
};

inline SequenceKind sequence_kind_from_string(const std::string& s) {
    if (s == "central_binomial") return SequenceKind::central_binomial;
    if (s == "central_binomial_minus_one") return SequenceKind::central_binomial_minus_one;
    throw std::invalid_argument("unknown sequence kind '" + s + "'");
}

inline std::vector<BigInt> sequences(SequenceKind kind, int count) {
    if (count < 1) throw std::invalid_argument("sequences: count must be >= 1");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 2; n < 2 + count; ++n) {
        BigInt v = binom(2LL * n - 2, n - 1);
        if (kind == SequenceKind::central_binomial_minus_one) v -= 1;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace nleib
