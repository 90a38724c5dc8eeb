#pragma once

#include <functional>
#include <vector>

#include "gcas/digits.hpp"
#include "gcas/types.hpp"

namespace gcas {

/// L1 x L2 matrix over Z_q; row g, column i. The complex-valued array is
/// obtained entrywise as the entries-th power of the primitive q-th root.
struct ExponentArray {
    Modulus q;
    IntArray entries;

    ExponentArray(Modulus modulus, IntArray values)
        : q(modulus), entries(std::move(values)) {}

    Int rows() const { return entries.rows(); }
    Int cols() const { return entries.cols(); }
};

bool operator==(const ExponentArray& a, const ExponentArray& b);

/// Chain-structured function of m+n base-b variables z_1..z_{m+n}
/// (z_1..z_m row digits, z_{m+1}..z_{m+n} column digits):
///
///   f = (q/b) * sum_a sum_b d[a][b] * z_{pi_a(b)} * z_{pi_a(b+1)}
///       + sum_{g=1}^{q-1} sum_l lambda(g,l) * z_l^g + lambda0   (mod q)
///
/// partitions[a] is the ordered chain pi_a over 1-based variable indices;
/// the chains partition {1..m+n}. d[a] has |pi_a|-1 unit coefficients.
struct Theorem1Function {
    Int b = 2;
    Int m = 1;
    Int n = 0;
    Modulus q;
    std::vector<std::vector<Int>> partitions;
    std::vector<std::vector<Int>> d;
    IntArray lambda;  // (q-1) x (m+n); row gamma-1, column l-1
    Int lambda0 = 0;

    explicit Theorem1Function(Modulus modulus) : q(modulus) {}

    Int k() const { return static_cast<Int>(partitions.size()); }
};

/// Two-alphabet variant: x-chains over the m base-b1 row variables and
/// y-chains over the n base-b2 column variables, with separate affine parts.
struct Theorem2Function {
    Int b1 = 2;
    Int b2 = 2;
    Int m = 1;
    Int n = 1;
    Modulus q;
    std::vector<std::vector<Int>> x_partitions;
    std::vector<std::vector<Int>> y_partitions;
    std::vector<std::vector<Int>> d;        // per x-chain, U(b1) coefficients
    std::vector<std::vector<Int>> d_prime;  // per y-chain, U(b2) coefficients
    IntArray lambda;  // (q-1) x m
    IntArray nu;      // (q-1) x n
    Int lambda0 = 0;

    explicit Theorem2Function(Modulus modulus) : q(modulus) {}

    Int k1() const { return static_cast<Int>(x_partitions.size()); }
    Int k2() const { return static_cast<Int>(y_partitions.size()); }
};

/// Evaluate at one point; g_digits has m base-b digits, i_digits n base-b digits.
Int eval_t1(const Theorem1Function& fn, const DigitVector& g_digits, const DigitVector& i_digits);

/// Evaluate the two-alphabet form; g_digits base b1 (m digits), i_digits base b2 (n digits).
Int eval_t2(const Theorem2Function& fn, const DigitVector& g_digits, const DigitVector& i_digits);

using PointEvaluator = std::function<Int(const DigitVector&, const DigitVector&)>;

/// Tabulate an evaluator into the full b1^m x b2^n array, entry (g, i) =
/// evaluator(digits of g, digits of i) mod q. Throws std::length_error when
/// the array would exceed the desk-scale cell bound.
ExponentArray materialize(const PointEvaluator& evaluator, Int b1, Int m, Int b2, Int n,
                          Modulus q);

ExponentArray materialize(const Theorem1Function& fn);
ExponentArray materialize(const Theorem2Function& fn);

}  // namespace gcas
