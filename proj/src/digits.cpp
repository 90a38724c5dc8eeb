#include "gcas/digits.hpp"

#include <stdexcept>
#include <string>

namespace gcas {

bool operator==(const DigitVector& a, const DigitVector& b) {
    return a.base == b.base && a.digits == b.digits;
}

DigitVector index_to_digits(Int value, Int base, int length) {
    if (base < 2) throw std::invalid_argument("index_to_digits: base must be >= 2");
    if (length < 0) throw std::invalid_argument("index_to_digits: negative length");
    if (value < 0) throw std::out_of_range("index_to_digits: negative value");

    DigitVector out;
    out.base = base;
    out.digits.resize(static_cast<std::size_t>(length));
    Int rest = value;
    for (int pos = 0; pos < length; ++pos) {
        out.digits[static_cast<std::size_t>(pos)] = rest % base;
        rest /= base;
    }
    if (rest != 0) {
        throw std::out_of_range("index_to_digits: value " + std::to_string(value) +
                                " does not fit in " + std::to_string(length) + " digits");
    }
    return out;
}

Int digits_to_index(const DigitVector& d) {
    if (d.base < 2) throw std::invalid_argument("digits_to_index: base must be >= 2");
    Int value = 0;
    Int scale = 1;
    for (Int digit : d.digits) {
        if (digit < 0 || digit >= d.base)
            throw std::invalid_argument("digits_to_index: digit out of [0, base)");
        value += digit * scale;
        scale *= d.base;
    }
    return value;
}

DigitVector unified_digits(const DigitVector& g_digits, const DigitVector& i_digits) {
    if (g_digits.base != i_digits.base)
        throw std::invalid_argument("unified_digits: base mismatch");
    DigitVector out;
    out.base = g_digits.base;
    out.digits.reserve(g_digits.size() + i_digits.size());
    out.digits.insert(out.digits.end(), g_digits.digits.begin(), g_digits.digits.end());
    out.digits.insert(out.digits.end(), i_digits.digits.begin(), i_digits.digits.end());
    return out;
}

Int mod_pow(Int base_val, Int exponent, Modulus q) {
    if (base_val < 0) throw std::invalid_argument("mod_pow: negative base");
    if (exponent < 0) throw std::invalid_argument("mod_pow: negative exponent");
    Int result = 1 % q.q;
    Int acc = base_val % q.q;
    Int e = exponent;
    while (e > 0) {
        if (e & 1) result = (result * acc) % q.q;
        acc = (acc * acc) % q.q;
        e >>= 1;
    }
    return result;
}

}  // namespace gcas
