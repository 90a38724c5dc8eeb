#include <doctest.h>

#include <random>

#include "gcas/egbf.hpp"
#include "golden.hpp"

using namespace gcas;

namespace {

// Independent per-monomial evaluator: recomputes the affine part one
// monomial at a time with a plain multiply loop; no shared code with eval_t1
// beyond the digit type.
Int naive_affine_eval(const IntArray& lambda, Int lambda0, const std::vector<Int>& values,
                      Int q) {
    Int acc = lambda0 % q;
    for (Eigen::Index gamma = 1; gamma <= lambda.rows(); ++gamma)
        for (Eigen::Index l = 0; l < lambda.cols(); ++l) {
            Int power = 1;
            for (Eigen::Index t = 0; t < gamma; ++t)
                power = (power * values[static_cast<std::size_t>(l)]) % q;
            acc = (acc + lambda(gamma - 1, l) * power) % q;
        }
    return acc;
}

Theorem1Function affine_only_function(Int b, Int m, Int n, Int q, const IntArray& lambda,
                                      Int lambda0) {
    Theorem1Function fn{Modulus(q)};
    fn.b = b;
    fn.m = m;
    fn.n = n;
    for (Int l = 1; l <= m + n; ++l) fn.partitions.push_back({l});  // no quadratic terms
    fn.d.assign(static_cast<std::size_t>(m + n), {});
    fn.lambda = lambda;
    fn.lambda0 = lambda0;
    return fn;
}

}  // namespace

TEST_CASE("eval_t1 reproduces the reference instance entries") {
    const Theorem1Params params = golden::example1_params();
    auto at = [&](Int g, Int i) {
        return eval_t1(params.fn, index_to_digits(g, 2, 1), index_to_digits(i, 2, 3));
    };
    CHECK(at(0, 3) == 3);
    CHECK(at(1, 1) == 3);
    CHECK(at(0, 0) == 0);
}

TEST_CASE("materialize reproduces the base array of the reference instance") {
    const ExponentArray base = materialize(golden::example1_params().fn);
    CHECK(base == golden::to_array(golden::example1_arrays()[0]));
}

TEST_CASE("materialize trivial functions") {
    const Modulus q6(6);
    const ExponentArray zeros =
        materialize([](const DigitVector&, const DigitVector&) { return Int{0}; }, 2, 1, 2, 1,
                    q6);
    CHECK(zeros.rows() == 2);
    CHECK(zeros.cols() == 2);
    CHECK((zeros.entries == 0).all());

    const ExponentArray fives =
        materialize([](const DigitVector&, const DigitVector&) { return Int{5}; }, 2, 1, 2, 1,
                    q6);
    CHECK((fives.entries == 5).all());
}

TEST_CASE("materialize enforces the capacity bound") {
    CHECK_THROWS_AS(materialize([](const DigitVector&, const DigitVector&) { return Int{0}; },
                                2, 21, 2, 1, Modulus(2)),
                    std::length_error);
}

TEST_CASE("materialize shape and range over random functions") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Int b1 = 2 + static_cast<Int>(rng() % 2);
        const Int b2 = 2 + static_cast<Int>(rng() % 2);
        const Int m = 1 + static_cast<Int>(rng() % 2);
        const Int n = static_cast<Int>(rng() % 3);
        const Int q = 12;
        const ExponentArray arr = materialize(
            [&](const DigitVector& g, const DigitVector& i) {
                return static_cast<Int>(rng() % 40) - 10 + digits_to_index(g) +
                       digits_to_index(i);
            },
            b1, m, b2, n, Modulus(q));
        Int rows = 1, cols = 1;
        for (Int t = 0; t < m; ++t) rows *= b1;
        for (Int t = 0; t < n; ++t) cols *= b2;
        CHECK(arr.rows() == rows);
        CHECK(arr.cols() == cols);
        CHECK(((arr.entries >= 0) && (arr.entries < q)).all());
    }
}

TEST_CASE("eval_t1 digit validation") {
    const Theorem1Params params = golden::example1_params();
    CHECK_THROWS_AS(eval_t1(params.fn, index_to_digits(0, 2, 2), index_to_digits(0, 2, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_t1(params.fn, index_to_digits(0, 3, 1), index_to_digits(0, 2, 3)),
                    std::invalid_argument);
}

TEST_CASE("chain-free eval_t1 matches an independent per-monomial evaluator") {
    std::mt19937 rng(23);
    for (auto [b, m, n, q] : {std::array<Int, 4>{2, 1, 2, 4}, std::array<Int, 4>{2, 2, 1, 6},
                              std::array<Int, 4>{3, 1, 1, 6}, std::array<Int, 4>{2, 3, 2, 2}}) {
        IntArray lambda(q - 1, m + n);
        for (Eigen::Index r = 0; r < lambda.rows(); ++r)
            for (Eigen::Index c = 0; c < lambda.cols(); ++c)
                lambda(r, c) = static_cast<Int>(rng() % q);
        const Int lambda0 = static_cast<Int>(rng() % q);
        const Theorem1Function fn = affine_only_function(b, m, n, q, lambda, lambda0);

        Int rows = 1, cols = 1;
        for (Int t = 0; t < m; ++t) rows *= b;
        for (Int t = 0; t < n; ++t) cols *= b;
        REQUIRE(rows * cols <= 64);
        for (Int g = 0; g < rows; ++g)
            for (Int i = 0; i < cols; ++i) {
                const DigitVector gd = index_to_digits(g, b, static_cast<int>(m));
                const DigitVector id = index_to_digits(i, b, static_cast<int>(n));
                const std::vector<Int> z = unified_digits(gd, id).digits;
                CHECK(eval_t1(fn, gd, id) == naive_affine_eval(lambda, lambda0, z, q));
            }
    }
}

TEST_CASE("affine part is additive modulo the constant") {
    std::mt19937 rng(31);
    const Int b = 2, m = 2, n = 1, q = 6;
    for (int trial = 0; trial < 10; ++trial) {
        IntArray la(q - 1, m + n), lb(q - 1, m + n);
        for (Eigen::Index r = 0; r < la.rows(); ++r)
            for (Eigen::Index c = 0; c < la.cols(); ++c) {
                la(r, c) = static_cast<Int>(rng() % q);
                lb(r, c) = static_cast<Int>(rng() % q);
            }
        const Theorem1Function fa = affine_only_function(b, m, n, q, la, 0);
        const Theorem1Function fb = affine_only_function(b, m, n, q, lb, 0);
        IntArray sum = (la + lb).unaryExpr([](Int v) { return v % 6; });
        const Theorem1Function fs = affine_only_function(b, m, n, q, sum, 0);
        for (Int g = 0; g < 4; ++g)
            for (Int i = 0; i < 2; ++i) {
                const DigitVector gd = index_to_digits(g, b, 2);
                const DigitVector id = index_to_digits(i, b, 1);
                CHECK(eval_t1(fs, gd, id) ==
                      (eval_t1(fa, gd, id) + eval_t1(fb, gd, id)) % q);
            }
    }
}

TEST_CASE("eval_t2 basics") {
    Theorem2Function zero{Modulus(4)};
    zero.b1 = zero.b2 = 2;
    zero.m = zero.n = 1;
    zero.x_partitions = {{1}};
    zero.y_partitions = {{1}};
    zero.d = {{}};
    zero.d_prime = {{}};
    zero.lambda = IntArray::Zero(3, 1);
    zero.nu = IntArray::Zero(3, 1);

    for (Int g = 0; g < 2; ++g)
        for (Int i = 0; i < 2; ++i)
            CHECK(eval_t2(zero, index_to_digits(g, 2, 1), index_to_digits(i, 2, 1)) == 0);

    Theorem2Function constant = zero;
    constant.lambda0 = 3;
    for (Int g = 0; g < 2; ++g)
        for (Int i = 0; i < 2; ++i)
            CHECK(eval_t2(constant, index_to_digits(g, 2, 1), index_to_digits(i, 2, 1)) == 3);

    // single monomial 2 * x_1: hand value at x=1 is 2, cross-checked with the
    // independent evaluator
    Theorem2Function mono = zero;
    mono.lambda(0, 0) = 2;
    CHECK(eval_t2(mono, index_to_digits(1, 2, 1), index_to_digits(0, 2, 1)) == 2);
    CHECK(naive_affine_eval(mono.lambda, 0, {1}, 4) == 2);
    CHECK(eval_t2(mono, index_to_digits(0, 2, 1), index_to_digits(0, 2, 1)) == 0);
}

TEST_CASE("eval_t2 splits alphabets between sides") {
    Theorem2Function fn{Modulus(6)};
    fn.b1 = 2;
    fn.b2 = 3;
    fn.m = 2;
    fn.n = 1;
    fn.x_partitions = {{1, 2}};
    fn.y_partitions = {{1}};
    fn.d = {{1}};
    fn.d_prime = {{}};
    fn.lambda = IntArray::Zero(5, 2);
    fn.nu = IntArray::Zero(5, 1);
    fn.nu(0, 0) = 2;  // + 2*y_1

    // f = (6/2) x1 x2 + 2 y1
    auto value = [&](Int x1, Int x2, Int y1) {
        return eval_t2(fn, DigitVector{2, {x1, x2}}, DigitVector{3, {y1}});
    };
    CHECK(value(1, 1, 0) == 3);
    CHECK(value(1, 1, 2) == 1);  // 3 + 4 mod 6
    CHECK(value(0, 1, 1) == 2);
}
