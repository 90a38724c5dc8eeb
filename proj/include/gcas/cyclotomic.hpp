#pragma once

#include <complex>
#include <optional>

#include "gcas/types.hpp"

namespace gcas {

/// Formal integer combination of q-th roots of unity:
/// value = sum_j coeffs[j] * w^j with w = exp(2*pi*i/q).
/// Equal coefficient vectors are equal values; the converse is false
/// (vanishing sums), which is exactly what is_zero decides.
struct CyclotomicSum {
    Modulus q;
    IntVector coeffs;

    explicit CyclotomicSum(Modulus modulus)
        : q(modulus), coeffs(IntVector::Zero(modulus.q)) {}
};

bool operator==(const CyclotomicSum& a, const CyclotomicSum& b);

/// Integer polynomial, coeffs[k] multiplies x^k. Trimmed so the leading
/// coefficient is nonzero (the zero polynomial has an empty vector).
struct IntPolynomial {
    IntVector coeffs = IntVector::Zero(0);

    bool is_zero_poly() const { return coeffs.size() == 0; }
    Eigen::Index degree() const { return coeffs.size() - 1; }  // -1 for the zero polynomial
};

bool operator==(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial poly_trim(IntVector coeffs);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Remainder of a modulo b, b monic. Division is over the integers and is
/// exact in that setting (no rational coefficients arise).
IntPolynomial poly_mod_monic(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b for monic b with a guaranteed-zero remainder; a nonzero
/// remainder raises internal_error.
IntPolynomial poly_div_exact_monic(const IntPolynomial& a, const IntPolynomial& b);

/// Accumulate weight * w^exponent into s (exponent reduced mod q).
CyclotomicSum& add_term(CyclotomicSum& s, Int exponent, Int weight);

/// n-th cyclotomic polynomial, computed as (x^n - 1) / prod of the
/// cyclotomic polynomials of the proper divisors of n. Memoized; safe to
/// call concurrently (duplicate computation is idempotent).
const IntPolynomial& cyclotomic_polynomial(Int n);

/// Exact vanishing test: the sum is zero iff its coefficient polynomial is
/// divisible by the q-th cyclotomic polynomial.
bool is_zero(const CyclotomicSum& s);

/// Floating-point evaluation; the numeric cross-check for is_zero.
std::complex<double> to_complex(const CyclotomicSum& s);

/// If the sum equals a rational integer, return it exactly (decided by
/// polynomial reduction, not floating point); otherwise nullopt.
std::optional<Int> magnitude_of_real_integer(const CyclotomicSum& s);

/// Complex conjugate in exponent space: coeffs'[j] = coeffs[(q - j) mod q].
CyclotomicSum conjugate(const CyclotomicSum& s);

}  // namespace gcas
