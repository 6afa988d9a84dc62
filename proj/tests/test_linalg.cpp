#include <catch2/catch_amalgamated.hpp>

#include <nleib/linalg.hpp>
#include <nleib/rational.hpp>

#include "test_support.hpp"

#include <random>

using namespace nleib;

namespace {

QVector qv(std::vector<int> xs) {
    QVector v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
    return v;
}

QMatrix qm(std::vector<std::vector<int>> rows, std::size_t cols) {
    QMatrix m(cols);
    for (auto& r : rows) m.add_row(qv(r));
    return m;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("+3") == Rational(3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(numerator(parse_rational("6/4")) == 3);
    CHECK(denominator(parse_rational("6/4")) == 2);

    CHECK_THROWS_AS(parse_rational("3/-4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);

    CHECK(make_rational(1, -3) == Rational(-1, 3));
    CHECK(denominator(make_rational(1, -3)) == 3);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rref examples") {
    CHECK(rref(qm({{2, 4}, {1, 2}}, 2)) == qm({{1, 2}}, 2));
    CHECK(rref(qm({{0, 1}, {1, 0}}, 2)) == qm({{1, 0}, {0, 1}}, 2));
    CHECK(rref(qm({{1, 1, 1}, {1, 2, 3}}, 3)) == qm({{1, 0, -1}, {0, 1, 2}}, 3));
    CHECK(rref(QMatrix(3)).rows() == 0);
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cols = 1 + rng() % 5;
        const std::size_t rows = rng() % 5;
        QMatrix m(cols);
        for (std::size_t i = 0; i < rows; ++i) m.add_row(test_support::random_vector(rng, cols));
        const QMatrix once = rref(m);
        CHECK(rref(once) == once);
    }
}

TEST_CASE("span examples") {
    const auto s1 = Subspace::span({qv({1, 2}), qv({2, 4})}, 2);
    CHECK(s1.dim() == 1);
    CHECK(s1.basis()[0] == qv({1, 2}));

    CHECK(Subspace::span({}, 3).dim() == 0);

    const auto s3 = Subspace::span({qv({1, 0, 0}), qv({1, 1, 0})}, 3);
    CHECK(s3.basis() == std::vector<QVector>{qv({1, 0, 0}), qv({0, 1, 0})});

    CHECK_THROWS_AS(Subspace::span({qv({1, 0})}, 3), std::invalid_argument);
}

TEST_CASE("span of a subspace basis reproduces it, generators are members") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t ambient = 1 + rng() % 5;
        std::vector<QVector> vs;
        const std::size_t k = rng() % 4;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(test_support::random_vector(rng, ambient));
        const Subspace s = Subspace::span(vs, ambient);
        CHECK(Subspace::span(s.basis(), ambient) == s);
        for (const auto& v : vs) CHECK(member(s, v));
    }
}

TEST_CASE("member examples") {
    const auto s = Subspace::span({qv({1, 2})}, 2);
    CHECK(member(s, qv({3, 6})));
    CHECK_FALSE(member(s, qv({1, 0})));
    CHECK(member(Subspace::zero(2), qv({0, 0})));
    CHECK_THROWS_AS(member(s, qv({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("sum examples") {
    CHECK(sum(Subspace::span({qv({1, 0})}, 2), Subspace::span({qv({0, 1})}, 2)) == Subspace::full(2));
    const auto a = Subspace::span({qv({1, 2, 3}), qv({0, 1, 1})}, 3);
    CHECK(sum(a, Subspace::zero(3)) == a);
    CHECK(sum(Subspace::span({qv({1, 1})}, 2), Subspace::span({qv({1, -1})}, 2)).dim() == 2);
}

TEST_CASE("intersect examples") {
    const auto xy = Subspace::span({qv({1, 0, 0}), qv({0, 1, 0})}, 3);
    const auto yz = Subspace::span({qv({0, 1, 0}), qv({0, 0, 1})}, 3);
    CHECK(intersect(xy, yz) == Subspace::span({qv({0, 1, 0})}, 3));
    CHECK(intersect(xy, xy) == xy);
    CHECK(intersect(Subspace::span({qv({1, 1})}, 2), Subspace::span({qv({1, -1})}, 2)).dim() == 0);
}

TEST_CASE("dimension formula dim(A+B) + dim(A∩B) = dim A + dim B") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t ambient = 1 + rng() % 6;
        const Subspace a = test_support::random_subspace(rng, ambient);
        const Subspace b = test_support::random_subspace(rng, ambient);
        const Subspace s = sum(a, b);
        const Subspace i = intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.contains(a));
        CHECK(s.contains(b));
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel(qm({{1, 1}}, 2)) == Subspace::span({qv({1, -1})}, 2));
    CHECK(kernel(qm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)).dim() == 0);
    CHECK(kernel(qm({{1, 2, 3}}, 3)).dim() == 2);
}

TEST_CASE("kernel satisfies M v = 0 and rank-nullity") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t cols = 1 + rng() % 5;
        const std::size_t rows = rng() % 5;
        QMatrix m(cols);
        for (std::size_t i = 0; i < rows; ++i) m.add_row(test_support::random_vector(rng, cols));
        const Subspace k = kernel(m);
        for (const auto& v : k.basis()) CHECK(m.apply(v).is_zero());
        CHECK(k.dim() == cols - rref(m).rows());
    }
}

TEST_CASE("subspace canonical equality") {
    const auto a = Subspace::span({qv({2, 4})}, 2);
    const auto b = Subspace::span({qv({1, 2})}, 2);
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
    // pivot entries are 1, pivot columns strictly increasing
    const auto s = Subspace::span({qv({0, 2, 1}), qv({3, 3, 3}), qv({3, 5, 4})}, 3);
    const auto pivots = s.pivot_columns();
    for (std::size_t i = 0; i + 1 < pivots.size(); ++i) CHECK(pivots[i] < pivots[i + 1]);
    for (std::size_t i = 0; i < s.dim(); ++i) CHECK(s.basis()[i][pivots[i]] == 1);
}
