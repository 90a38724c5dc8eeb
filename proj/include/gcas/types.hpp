#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>

namespace gcas {

using Int = std::int64_t;

/// Dense 2-D array of integers (entries of q-ary arrays, exponent tables).
using IntArray = Eigen::Array<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense column of integers (root-of-unity multiplicities, polynomial coefficients).
using IntVector = Eigen::Array<Int, Eigen::Dynamic, 1>;

// Desk-scale capacity limits. Everything below fits in 64-bit arithmetic
// with room to spare; parameter validation rejects anything larger.
inline constexpr Int kMaxModulus = Int{1} << 16;
inline constexpr Int kMaxArrayCells = Int{1} << 20;
inline constexpr Int kMaxSetMembers = Int{1} << 20;

/// Exact integer arithmetic reached a state it guarantees cannot happen
/// (e.g. a nonzero remainder in a division that must be exact).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Phase alphabet size q >= 2; array entries live in Z_q.
struct Modulus {
    Int q;

    explicit Modulus(Int value) : q(value) {
        if (q < 2) throw std::invalid_argument("Modulus: q must be >= 2");
        if (q > kMaxModulus) throw std::invalid_argument("Modulus: q exceeds supported bound");
    }
};

inline bool operator==(Modulus a, Modulus b) { return a.q == b.q; }

/// Canonical representative of v mod q in [0, q).
inline Int mod_reduce(Int v, Int q) {
    Int r = v % q;
    return r < 0 ? r + q : r;
}

}  // namespace gcas
