#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcas/construct.hpp"
#include "gcas/cyclotomic.hpp"
#include "gcas/egbf.hpp"

namespace gcas {

/// 2-D correlation shift; valid range is -L1 < u1 < L1, -L2 < u2 < L2.
struct Shift {
    Int u1 = 0;
    Int u2 = 0;
};

bool operator==(Shift a, Shift b);
bool operator<(Shift a, Shift b);  // lexicographic (u1, u2)

/// Outcome of the exact complementarity check. The verdict is a proof for
/// the instance: every shift sum is decided by integer arithmetic alone.
struct VerificationReport {
    Int set_size = 0;
    Int rows = 0;
    Int cols = 0;
    Int peak = 0;  // value of the set sum at shift (0,0)
    std::vector<std::pair<Shift, CyclotomicSum>> nonzero_shifts;  // origin excluded
    bool is_gcas = false;
    std::string strategy_notes;
};

/// Aperiodic autocorrelation of one array at one shift, as an exact sum of
/// q-th roots of unity. Positions shifted outside the array contribute
/// nothing. Out-of-range shifts are an error, not zero.
CyclotomicSum aacf(const ExponentArray& c, Shift s);

/// Sum of aacf over all members of the set.
CyclotomicSum aacf_set_sum(const ArraySet& set, Shift s);

/// Decide the complementarity property over the full shift grid. Only the
/// half with u1 > 0 or (u1 = 0, u2 >= 0) is computed; the other half is
/// implied by conjugate symmetry and offending mirror shifts are listed too.
/// The verifier trusts nothing from construction: it reads entries only.
VerificationReport check_gcas(const ArraySet& set);

/// Exact check of aacf(c, u) == conj(aacf(c, -u)) at every in-range shift.
bool check_conjugate_symmetry(const ExponentArray& c);

std::string render_report(const VerificationReport& report);

}  // namespace gcas
