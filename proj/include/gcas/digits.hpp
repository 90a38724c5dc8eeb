#pragma once

#include <vector>

#include "gcas/types.hpp"

namespace gcas {

/// Mixed-radix digit string, least-significant digit first:
/// value = sum_g digits[g] * base^g, every digit in [0, base).
struct DigitVector {
    Int base = 2;
    std::vector<Int> digits;

    std::size_t size() const { return digits.size(); }
    Int operator[](std::size_t pos) const { return digits[pos]; }
};

bool operator==(const DigitVector& a, const DigitVector& b);

/// Expand value into exactly `length` base-b digits, LSB first.
/// Throws std::out_of_range unless 0 <= value < base^length.
DigitVector index_to_digits(Int value, Int base, int length);

/// Inverse of index_to_digits. Throws std::invalid_argument on a digit
/// outside [0, base). The empty vector maps to 0.
Int digits_to_index(const DigitVector& d);

/// Concatenate [g_1..g_m, i_1..i_n] into one digit string of length m+n.
/// Both inputs must share a base.
DigitVector unified_digits(const DigitVector& g_digits, const DigitVector& i_digits);

/// base_val^exponent mod q, with the convention x^0 = 1 for every x
/// (so affine monomials stay well-defined at 0).
Int mod_pow(Int base_val, Int exponent, Modulus q);

}  // namespace gcas
