#pragma once

#include <string>
#include <vector>

#include "gcas/egbf.hpp"
#include "gcas/types.hpp"

namespace gcas {

/// How the extra pinned offset term of the two-alphabet construction is
/// interpreted. The printed form of that term is ambiguous, so the builder
/// takes an explicit choice and the exact verifier arbitrates.
enum class OffsetStrategy {
    AsPrintedUnscaled,  // n * (x_{k1+1} + y_{k1+1})
    AsPrintedScaled,    // (q/N1) * n * (x_{k1+1} + y_{k1+1})
    MirrorTheorem1,     // (q/N1) * n * x_m
};

const char* to_string(OffsetStrategy s);

struct Theorem1Params {
    Theorem1Function fn;
    Int N = 2;

    explicit Theorem1Params(Theorem1Function function, Int set_base)
        : fn(std::move(function)), N(set_base) {}
};

struct Theorem2Params {
    Theorem2Function fn;
    Int N1 = 2;
    Int N2 = 2;
    OffsetStrategy offset_strategy = OffsetStrategy::MirrorTheorem1;

    Theorem2Params(Theorem2Function function, Int set_base1, Int set_base2,
                   OffsetStrategy strategy)
        : fn(std::move(function)), N1(set_base1), N2(set_base2), offset_strategy(strategy) {}
};

/// Ordered multiset of equal-shape exponent arrays; labels carry the offset
/// tuple that produced each member.
struct ArraySet {
    Modulus q;
    std::vector<ExponentArray> members;
    std::vector<std::vector<Int>> labels;

    explicit ArraySet(Modulus modulus) : q(modulus) {}

    Int rows() const { return members.empty() ? 0 : members.front().rows(); }
    Int cols() const { return members.empty() ? 0 : members.front().cols(); }

    /// Number of members identical to an earlier member. Duplicates are legal
    /// (multiset semantics) but worth surfacing to the caller.
    std::size_t duplicate_count() const;
};

/// Constraint-check outcome. Errors reject the build; warnings flag legal
/// but degenerate inputs (offset collisions that will duplicate members).
struct Validation {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

Validation validate_t1(const Theorem1Params& p);

/// Validation for the prior-work base variant: identical except that the
/// pinned offset variable is unused, so no collision applies.
Validation validate_t1_base(const Theorem1Params& p);

Validation validate_t2(const Theorem2Params& p);

/// All N^{k+1} arrays f + (q/N)(sum_a n_a z_{pi_a(1)} + n_{k+1} z_m), offset
/// tuples (n_1..n_{k+1}) in ascending lexicographic order.
ArraySet build_t1_set(const Theorem1Params& p);

/// The size-N^k variant without the pinned term: f + (q/N) sum_a n_a z_{pi_a(1)}.
ArraySet build_t1_base_set(const Theorem1Params& p);

/// All N1^{k1+1} * N2^{k2} arrays
/// f + (q/N1) sum_a n_a x_{pi_a(1)} + (q/N2) sum_u n'_u y_{sigma_u(1)} + T,
/// T per offset_strategy; tuples (n_1..n_{k1}, n_{k1+1}, n'_1..n'_{k2})
/// in ascending lexicographic order.
ArraySet build_t2_set(const Theorem2Params& p);

}  // namespace gcas
