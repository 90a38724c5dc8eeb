#include "gcas/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gcas {

bool operator==(Shift a, Shift b) { return a.u1 == b.u1 && a.u2 == b.u2; }

bool operator<(Shift a, Shift b) {
    return a.u1 != b.u1 ? a.u1 < b.u1 : a.u2 < b.u2;
}

namespace {

void require_in_range(Shift s, Int rows, Int cols) {
    if (s.u1 <= -rows || s.u1 >= rows || s.u2 <= -cols || s.u2 >= cols)
        throw std::out_of_range("aacf: shift outside the open correlation range");
}

// Accumulate the overlap terms of one member into `acc` (length q).
void accumulate_aacf(const IntArray& entries, Shift s, Int q, IntVector& acc) {
    const Int rows = entries.rows();
    const Int cols = entries.cols();
    const Int g_lo = std::max<Int>(0, -s.u1);
    const Int g_hi = std::min<Int>(rows, rows - s.u1);  // exclusive
    const Int i_lo = std::max<Int>(0, -s.u2);
    const Int i_hi = std::min<Int>(cols, cols - s.u2);

    Int* counts = acc.data();
    for (Int i = i_lo; i < i_hi; ++i) {
        const Int* shifted = &entries(g_lo + s.u1, i + s.u2);
        const Int* fixed = &entries(g_lo, i);
        const Int span = g_hi - g_lo;
        for (Int t = 0; t < span; ++t) {
            Int diff = shifted[t] - fixed[t];
            if (diff < 0) diff += q;
            ++counts[diff];
        }
    }
}

}  // namespace

CyclotomicSum aacf(const ExponentArray& c, Shift s) {
    require_in_range(s, c.rows(), c.cols());
    CyclotomicSum sum(c.q);
    accumulate_aacf(c.entries, s, c.q.q, sum.coeffs);
    return sum;
}

CyclotomicSum aacf_set_sum(const ArraySet& set, Shift s) {
    if (set.members.empty()) throw std::invalid_argument("aacf_set_sum: empty set");
    require_in_range(s, set.rows(), set.cols());
    CyclotomicSum sum(set.q);
    for (const auto& member : set.members) {
        if (member.rows() != set.rows() || member.cols() != set.cols())
            throw std::invalid_argument("aacf_set_sum: member shape mismatch");
        accumulate_aacf(member.entries, s, set.q.q, sum.coeffs);
    }
    return sum;
}

VerificationReport check_gcas(const ArraySet& set) {
    if (set.members.empty()) throw std::invalid_argument("check_gcas: empty set");
    const Int rows = set.rows();
    const Int cols = set.cols();
    for (const auto& member : set.members) {
        if (member.rows() != rows || member.cols() != cols || member.q.q != set.q.q)
            throw std::invalid_argument("check_gcas: inconsistent member shapes");
    }

    VerificationReport report;
    report.set_size = static_cast<Int>(set.members.size());
    report.rows = rows;
    report.cols = cols;

    Int computed = 0;
    for (Int u1 = 0; u1 < rows; ++u1) {
        const Int u2_start = (u1 == 0) ? 0 : -(cols - 1);
        for (Int u2 = u2_start; u2 < cols; ++u2) {
            const Shift s{u1, u2};
            const CyclotomicSum sum = aacf_set_sum(set, s);
            ++computed;
            if (u1 == 0 && u2 == 0) {
                report.peak = magnitude_of_real_integer(sum).value_or(-1);
                continue;
            }
            if (!is_zero(sum)) {
                report.nonzero_shifts.emplace_back(s, sum);
                // mirror shift is nonzero too, by conjugate symmetry
                report.nonzero_shifts.emplace_back(Shift{-u1, -u2}, conjugate(sum));
            }
        }
    }

    std::sort(report.nonzero_shifts.begin(), report.nonzero_shifts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const Int expected_peak = report.set_size * rows * cols;
    report.is_gcas = report.nonzero_shifts.empty() && report.peak == expected_peak;
    {
        std::ostringstream notes;
        notes << "computed " << computed << " of " << (2 * rows - 1) * (2 * cols - 1)
              << " shifts; the rest follow by conjugate symmetry";
        report.strategy_notes = notes.str();
    }
    return report;
}

bool check_conjugate_symmetry(const ExponentArray& c) {
    for (Int u1 = -(c.rows() - 1); u1 < c.rows(); ++u1)
        for (Int u2 = -(c.cols() - 1); u2 < c.cols(); ++u2) {
            const CyclotomicSum fwd = aacf(c, {u1, u2});
            const CyclotomicSum mirrored = conjugate(aacf(c, {-u1, -u2}));
            if (!(fwd == mirrored)) return false;
        }
    return true;
}

std::string render_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "members=" << report.set_size << " rows=" << report.rows
        << " cols=" << report.cols << "\n";
    out << "peak=" << report.peak << " expected="
        << report.set_size * report.rows * report.cols << "\n";
    out << "nonzero_shifts=" << report.nonzero_shifts.size() << "\n";
    for (const auto& [shift, sum] : report.nonzero_shifts) {
        out << "  u1=" << shift.u1 << " u2=" << shift.u2 << " coeffs=[";
        for (Eigen::Index j = 0; j < sum.coeffs.size(); ++j) {
            if (j) out << ",";
            out << sum.coeffs[j];
        }
        out << "]\n";
    }
    out << "GCAS: " << (report.is_gcas ? "yes" : "no") << " (" << report.set_size << ","
        << report.rows << "," << report.cols << ")\n";
    return out.str();
}

}  // namespace gcas
