#include <catch2/catch_amalgamated.hpp>

#include <nleib/io.hpp>
#include <nleib/nalgebra.hpp>

#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace nleib;

namespace {

QVector unit(const StructureConstants& sc, int i) {
    return QVector::unit(static_cast<std::size_t>(sc.dim()), static_cast<std::size_t>(i));
}

std::vector<QVector> units_for(const StructureConstants& sc, std::vector<int> idx) {
    std::vector<QVector> out;
    for (int i : idx) out.push_back(unit(sc, i));
    return out;
}

Subspace span_of_units(const StructureConstants& sc, std::vector<int> idx) {
    return Subspace::span(units_for(sc, idx), static_cast<std::size_t>(sc.dim()));
}

}  // namespace

TEST_CASE("structure constants canonical table") {
    StructureConstants sc(2, 2);
    sc.add({0, 0}, 1, Rational(1, 2));
    sc.add({0, 0}, 1, Rational(1, 2));
    CHECK(sc.basis_bracket({0, 0}).size() == 1);
    CHECK(sc.basis_bracket({0, 0})[0].second == 1);
    sc.add({0, 0}, 1, Rational(-1));
    CHECK(sc.table().empty());  // cancelled to zero

    CHECK_THROWS_AS(sc.add({0}, 1, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(sc.add({0, 2}, 1, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(sc.add({0, 0}, 5, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(StructureConstants(1, 3), std::invalid_argument);
}

TEST_CASE("eval_bracket on the built-in examples") {
    const auto ex33 = builtin_algebra("ex3_3:4");
    // [x2, x1, x1] = x3
    CHECK(eval_bracket(ex33, units_for(ex33, {1, 0, 0})) == unit(ex33, 2));
    // one argument zero kills the product
    CHECK(eval_bracket(ex33, {unit(ex33, 1), QVector(4), unit(ex33, 0)}).is_zero());

    const auto ex318 = builtin_algebra("ex3_18");
    CHECK(eval_bracket(ex318, units_for(ex318, {0, 0})) == unit(ex318, 1));  // [x,x] = y
    CHECK(eval_bracket(ex318, units_for(ex318, {0, 1})).is_zero());          // [x,y] = 0

    CHECK_THROWS_AS(eval_bracket(ex318, units_for(ex318, {0})), std::invalid_argument);
    CHECK_THROWS_AS(eval_bracket(ex318, {unit(ex318, 0), QVector(3)}), std::invalid_argument);
}

TEST_CASE("eval_bracket is linear in each slot") {
    std::mt19937 rng(7);
    const auto tables = test_support::random_leibniz_tables(5, 1001);
    for (const auto& sc : tables) {
        const std::size_t m = static_cast<std::size_t>(sc.dim());
        const int n = sc.arity();
        for (int slot = 0; slot < n; ++slot) {
            std::vector<QVector> args;
            for (int i = 0; i < n; ++i) args.push_back(test_support::random_vector(rng, m));
            const QVector u = test_support::random_vector(rng, m);
            const QVector w = test_support::random_vector(rng, m);
            const Rational a = test_support::random_rational(rng);
            const Rational b = test_support::random_rational(rng);

            auto with = [&](QVector v) {
                auto copy = args;
                copy[static_cast<std::size_t>(slot)] = std::move(v);
                return eval_bracket(sc, copy);
            };
            CHECK(with(a * u + b * w) == a * with(u) + b * with(w));
        }
    }
}

TEST_CASE("eval_lie_bracket examples") {
    const auto ex33 = builtin_algebra("ex3_3:4");
    // [x_i, x_1, x_1]_Lie = 2 x_{i+1} for x_i distinct from x_1
    for (int i = 1; i < 3; ++i)
        CHECK(eval_lie_bracket(ex33, units_for(ex33, {i, 0, 0})) == Rational(2) * unit(ex33, i + 1));
    // all six permutations of (x_1, x_1, x_1) coincide
    CHECK(eval_lie_bracket(ex33, units_for(ex33, {0, 0, 0})) == Rational(6) * unit(ex33, 1));

    const auto ex318 = builtin_algebra("ex3_18");
    // derived route: [x,x] + [x,x]
    const QVector twice =
        eval_bracket(ex318, units_for(ex318, {0, 0})) + eval_bracket(ex318, units_for(ex318, {0, 0}));
    CHECK(eval_lie_bracket(ex318, units_for(ex318, {0, 0})) == twice);

    const auto ex320 = builtin_algebra("ex3_20");
    // [x1,x2]_Lie = [x1,x2] + [x2,x1] = x4 + x3
    CHECK(eval_lie_bracket(ex320, units_for(ex320, {0, 1})) == unit(ex320, 2) + unit(ex320, 3));
}

TEST_CASE("lie bracket is fully symmetric") {
    std::mt19937 rng(8);
    for (const auto& name : {std::string("ex3_18"), std::string("ex3_20"), std::string("ex3_3:4"),
                             std::string("filippov:3")}) {
        const auto sc = builtin_algebra(name);
        const std::size_t m = static_cast<std::size_t>(sc.dim());
        std::vector<QVector> args;
        for (int i = 0; i < sc.arity(); ++i) args.push_back(test_support::random_vector(rng, m));
        const QVector base = eval_lie_bracket(sc, args);
        std::vector<std::size_t> perm(args.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            std::vector<QVector> shuffled;
            for (auto p : perm) shuffled.push_back(args[p]);
            CHECK(eval_lie_bracket(sc, shuffled) == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("lie bracket equals its inclusion-exclusion form") {
    // all basis tuples of the builtins
    for (const auto& name : {std::string("ex3_18"), std::string("ex3_20"), std::string("ex3_3:5"),
                             std::string("filippov:2"), std::string("filippov:3")}) {
        const auto sc = builtin_algebra(name);
        const int n = sc.arity();
        const int m = sc.dim();
        std::vector<int> t(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<QVector> args;
            for (int i : t) args.push_back(unit(sc, i));
            CHECK(eval_lie_bracket(sc, args) == eval_lie_bracket_alt(sc, args));
            int i = n - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == m - 1) t[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++t[static_cast<std::size_t>(i)];
        }
    }

    // randomized rational vectors, arities up to 4
    std::mt19937 rng(9);
    for (const auto& name :
         {std::string("ex3_18"), std::string("ex3_3:5"), std::string("filippov:4")}) {
        const auto sc = builtin_algebra(name);
        const std::size_t m = static_cast<std::size_t>(sc.dim());
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<QVector> args;
            for (int i = 0; i < sc.arity(); ++i) args.push_back(test_support::random_vector(rng, m));
            CHECK(eval_lie_bracket(sc, args) == eval_lie_bracket_alt(sc, args));
        }
    }

    // zero algebra: everything vanishes
    const auto zero = builtin_algebra("zero:3:3");
    CHECK(eval_lie_bracket_alt(zero, units_for(zero, {0, 1, 2})).is_zero());

    // the two forms computed independently on ex3_3:5 at (x2, x1, x3)
    const auto ex33 = builtin_algebra("ex3_3:5");
    CHECK(eval_lie_bracket(ex33, units_for(ex33, {1, 0, 2})) ==
          eval_lie_bracket_alt(ex33, units_for(ex33, {1, 0, 2})));
}

TEST_CASE("fundamental identity holds on the paper's examples") {
    CHECK(check_fundamental_identity(builtin_algebra("ex3_3:5")).empty());
    CHECK(check_fundamental_identity(builtin_algebra("ex3_20")).empty());
    CHECK(check_fundamental_identity(builtin_algebra("ex3_18")).empty());
}

TEST_CASE("fundamental identity detects a corrupted bracket") {
    auto sc = builtin_algebra("ex3_18");
    sc.add({1, 0}, 0, Rational(1));  // [y,x] = x
    const auto violations = check_fundamental_identity(sc);
    REQUIRE_FALSE(violations.empty());
    for (const auto& v : violations) {
        CHECK_FALSE(v.defect.is_zero());
        const auto oracle = test_support::oracle_identity_defect(sc, v.x_tuple, v.y_tuple);
        CHECK_FALSE(oracle.empty());
        CHECK(test_support::to_sparse(v.defect) == oracle);
    }
    // violations arrive in lexicographic tuple order
    for (std::size_t i = 0; i + 1 < violations.size(); ++i) {
        auto key = [](const IdentityViolation& v) {
            auto k = v.x_tuple;
            k.insert(k.end(), v.y_tuple.begin(), v.y_tuple.end());
            return k;
        };
        CHECK(key(violations[i]) < key(violations[i + 1]));
    }
    // early stop
    CHECK(check_fundamental_identity(sc, std::size_t{1}).size() == 1);
}

TEST_CASE("identity checker refuses oversized sweeps unless forced") {
    StructureConstants big(2, 300);  // 300^3 = 2.7e7 tuples
    CHECK_THROWS_AS(check_fundamental_identity(big), TupleLimitError);
    StructureConstants small(2, 3);
    CHECK_NOTHROW(check_fundamental_identity(small, std::nullopt, true));
}

TEST_CASE("leibnizator examples") {
    const auto ex318 = builtin_algebra("ex3_18");
    CHECK(leibnizator(ex318) == span_of_units(ex318, {1}));  // <y>

    const auto ex33 = builtin_algebra("ex3_3:5");
    CHECK(leibnizator(ex33) == span_of_units(ex33, {1, 2, 3, 4}));  // <x2..x5>

    // alternating bracket: no repeated-argument bracket survives
    CHECK(leibnizator(builtin_algebra("filippov:2")).dim() == 0);
    CHECK(leibnizator(builtin_algebra("filippov:3")).dim() == 0);

    const auto ex320 = builtin_algebra("ex3_20");
    CHECK(leibnizator(ex320) == span_of_units(ex320, {2, 3}));
}

TEST_CASE("ideal_closure examples and properties") {
    const auto ex33 = builtin_algebra("ex3_3:4");
    CHECK(ideal_closure(ex33, Subspace::zero(4)).dim() == 0);
    CHECK(ideal_closure(ex33, span_of_units(ex33, {0})) == Subspace::full(4));

    const auto ex320 = builtin_algebra("ex3_20");
    CHECK(ideal_closure(ex320, span_of_units(ex320, {2})) == span_of_units(ex320, {2, 3}));

    std::mt19937 rng(10);
    for (const auto& sc : test_support::random_leibniz_tables(10, 2002)) {
        const std::size_t m = static_cast<std::size_t>(sc.dim());
        const Subspace s = test_support::random_subspace(rng, m);
        const Subspace closed = ideal_closure(sc, s);
        CHECK(closed.contains(s));                        // extensive
        CHECK(ideal_closure(sc, closed) == closed);       // idempotent
        const Subspace bigger = sum(s, test_support::random_subspace(rng, m));
        CHECK(ideal_closure(sc, bigger).contains(closed));  // monotone
        CHECK(is_ideal(sc, closed));
    }
}

TEST_CASE("is_ideal examples") {
    const auto ex320 = builtin_algebra("ex3_20");
    CHECK(is_ideal(ex320, span_of_units(ex320, {2, 3})));
    CHECK_FALSE(is_ideal(ex320, span_of_units(ex320, {0})));
    CHECK(is_ideal(ex320, Subspace::zero(4)));
}

TEST_CASE("quotient of ex3_20 by <x4>") {
    const auto ex320 = builtin_algebra("ex3_20");
    const auto q = quotient(ex320, span_of_units(ex320, {3}));
    CHECK(q.algebra.dim() == 3);
    CHECK(q.complement == std::vector<int>{0, 1, 2});
    // surviving brackets: [x1,x1] = x3, [x2,x1] = x3; [x1,x2] and [x3,x1] die
    StructureConstants expected(2, 3);
    expected.set_basis_names({"x1", "x2", "x3"});
    expected.add({0, 0}, 2, Rational(1));
    expected.add({1, 0}, 2, Rational(1));
    CHECK(q.algebra == expected);
}

TEST_CASE("quotient by zero is the identity projection") {
    const auto ex318 = builtin_algebra("ex3_18");
    const auto q = quotient(ex318, Subspace::zero(2));
    CHECK(q.algebra == ex318);
    for (int i = 0; i < 2; ++i) CHECK(q.projection.apply(unit(ex318, i)) == unit(ex318, i));
}

TEST_CASE("quotient of the ex3_3 family drops to the smaller family") {
    const auto big = builtin_algebra("ex3_3:4");
    const auto q = quotient(big, span_of_units(big, {3}));
    CHECK(q.algebra == builtin_algebra("ex3_3:3"));
}

TEST_CASE("quotient rejects non-ideals") {
    const auto ex320 = builtin_algebra("ex3_20");
    CHECK_THROWS_AS(quotient(ex320, span_of_units(ex320, {0})), std::invalid_argument);
}

TEST_CASE("quotient projection is an algebra homomorphism") {
    const auto check_hom = [](const StructureConstants& sc, const Subspace& ideal) {
        const auto q = quotient(sc, ideal);
        const int n = sc.arity();
        const int m = sc.dim();
        std::vector<int> t(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<QVector> projected;
            for (int i : t)
                projected.push_back(q.projection.apply(QVector::unit(static_cast<std::size_t>(m),
                                                                     static_cast<std::size_t>(i))));
            const QVector lhs = q.projection.apply(eval_bracket_basis(sc, t));
            const QVector rhs = q.algebra.dim() == 0 ? QVector(0) : eval_bracket(q.algebra, projected);
            CHECK(lhs == rhs);
            int i = n - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == m - 1) t[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++t[static_cast<std::size_t>(i)];
        }
    };
    const auto ex320 = builtin_algebra("ex3_20");
    check_hom(ex320, span_of_units(ex320, {3}));
    check_hom(ex320, span_of_units(ex320, {2, 3}));
    const auto ex33 = builtin_algebra("ex3_3:5");
    check_hom(ex33, span_of_units(ex33, {3, 4}));

    // ideal whose reduced basis has non-unit rows
    StructureConstants odd(2, 2);
    odd.add({0, 0}, 0, Rational(1));
    odd.add({0, 0}, 1, Rational(1));  // [e1,e1] = e1 + e2
    const Subspace diag = Subspace::span({QVector(std::vector<Rational>{1, 1})}, 2);
    REQUIRE(is_ideal(odd, diag));
    check_hom(odd, diag);
}

TEST_CASE("n-Lie detection routes agree") {
    CHECK_FALSE(is_n_lie(builtin_algebra("ex3_18")));
    CHECK(is_n_lie(builtin_algebra("zero:2:3")));
    CHECK(is_n_lie(builtin_algebra("filippov:2")));  // 3-dim cross product algebra

    for (const auto& name : {std::string("ex3_18"), std::string("ex3_20"), std::string("ex3_3:4"),
                             std::string("filippov:2"), std::string("filippov:3"),
                             std::string("zero:3:4")}) {
        const auto sc = builtin_algebra(name);
        const bool via_leibnizator = is_n_lie(sc);
        CHECK(via_leibnizator == has_alternating_bracket(sc));
        CHECK(via_leibnizator == (leibnizator_span(sc).dim() == 0));
    }
    for (const auto& sc : test_support::random_leibniz_tables(20, 3003))
        CHECK(is_n_lie(sc) == has_alternating_bracket(sc));
}

TEST_CASE("cross product algebra built by hand is 3-Lie") {
    StructureConstants cross(2, 3);
    cross.add({0, 1}, 2, Rational(1));
    cross.add({1, 0}, 2, Rational(-1));
    cross.add({1, 2}, 0, Rational(1));
    cross.add({2, 1}, 0, Rational(-1));
    cross.add({2, 0}, 1, Rational(1));
    cross.add({0, 2}, 1, Rational(-1));
    CHECK(check_fundamental_identity(cross).empty());
    CHECK(is_n_lie(cross));
    CHECK(cross == builtin_algebra("filippov:2"));
}
