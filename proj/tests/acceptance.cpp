// Acceptance suite: every release criterion as an executable check, one
// PASS/FAIL line each, exact arithmetic throughout. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "gcas/catalog.hpp"
#include "gcas/io.hpp"
#include "gcas/sweep.hpp"
#include "gcas/verify.hpp"
#include "golden.hpp"

using namespace gcas;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), elapsed, detail.empty() ? "" : "; ", detail.c_str());
    if (!ok) ++failures;
}

bool criterion1_table_reproduction(std::string& detail) {
    const ArraySet set = build_t1_set(golden::example1_params());
    if (set.members.size() != 9) return false;
    std::vector<ExponentArray> expected;
    for (const auto& rows : golden::example1_arrays()) expected.push_back(golden::to_array(rows));
    const bool equal = golden::multiset_equal(set.members, expected);
    detail = "9 members, entry-exact multiset match";
    return equal;
}

bool criterion2_example_verification(std::string& detail) {
    const ArraySet set = build_t1_set(golden::example1_params());

    // full-grid evaluation, no symmetry shortcut, every sum decided exactly
    int zero_shifts = 0;
    for (Int u1 = -1; u1 <= 1; ++u1)
        for (Int u2 = -7; u2 <= 7; ++u2) {
            const CyclotomicSum sum = aacf_set_sum(set, {u1, u2});
            if (u1 == 0 && u2 == 0) {
                if (magnitude_of_real_integer(sum) != 144) return false;
            } else {
                if (!is_zero(sum)) return false;
                ++zero_shifts;
            }
        }
    if (zero_shifts != 44) return false;

    const VerificationReport report = check_gcas(set);
    detail = "peak 144, 44 exactly-zero shifts";
    return report.is_gcas && report.peak == 144;
}

bool criterion3_t1_sweep(std::string& detail) {
    T1SweepBounds t1;  // b in {2,3}, q in {2,3,4,6,12}, m+n <= 5, 50 draws
    T2SweepBounds t2;
    t2.qs.clear();  // t1 only
    const SweepOutcome outcome = run_sweep(t1, t2, 2);
    std::ostringstream note;
    note << outcome.t1_tuples << " tuples x " << t1.draws << " draws, "
         << outcome.t1_failures << " failures";
    detail = note.str();
    return outcome.t1_tuples > 0 && outcome.t1_failures == 0;
}

bool criterion4_maximal_chain_count(std::string& detail) {
    Theorem1Function fn{Modulus(6)};
    fn.b = 2;
    fn.m = 1;
    fn.n = 2;
    fn.partitions = {{1}, {2}, {3}};  // k = m+n
    fn.d = {{}, {}, {}};
    fn.lambda = IntArray::Zero(5, 3);
    const Theorem1Params params(std::move(fn), 3);

    const Validation validation = validate_t1(params);
    if (!validation.ok()) return false;
    const ArraySet set = build_t1_set(params);
    if (set.members.size() != 81) return false;
    const VerificationReport report = check_gcas(set);
    std::ostringstream note;
    note << "81 members, peak " << report.peak << ", " << set.duplicate_count()
         << " duplicate members retained";
    detail = note.str();
    return report.is_gcas && report.rows == 2 && report.cols == 4;
}

bool criterion5_t2_strategy_gate(std::string& detail) {
    T1SweepBounds t1;
    t1.qs.clear();  // t2 only
    T2SweepBounds t2;  // b1,b2 in {2,3}, q in {4,6,12}, m,n <= 3, set <= 512
    const SweepOutcome outcome = run_sweep(t1, t2, 2);

    std::ofstream report("acceptance_t2_sweep.csv");
    report << sweep_csv(outcome);

    std::ostringstream note;
    const auto passing = outcome.t2_passing_strategies();
    note << "passing strategies:";
    for (const auto& name : passing) note << " " << name;
    Int failures_total = 0;
    for (const auto& [name, stats] : outcome.t2_strategy_stats) failures_total += stats.second;
    note << "; strategy x tuple failures: " << failures_total
         << "; default: mirror-t1; full report: acceptance_t2_sweep.csv";
    detail = note.str();

    // the shipped default must be among the passing strategies
    bool default_passes = false;
    for (const auto& name : passing) default_passes |= name == "mirror-t1";
    return !passing.empty() && default_passes;
}

bool criterion6_base_variant_comparison(std::string& detail) {
    const ArraySet base = build_t1_base_set(golden::example1_params());
    if (base.members.size() != 3) return false;
    if (!(base.members[0] == golden::to_array(golden::example1_arrays()[0]))) return false;
    if (!(base.members[1] == golden::to_array(golden::example1_arrays()[2]))) return false;
    if (!(base.members[2] == golden::to_array(golden::example1_arrays()[6]))) return false;
    const VerificationReport report = check_gcas(base);
    if (!report.is_gcas || report.peak != 3 * 2 * 8) return false;

    // the comparison front end must report 9 vs 3 at the reference key
    const std::string command = std::string(GCAS_CLI_PATH) + " compare > acceptance_compare.txt";
    const int status = std::system(command.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return false;
    std::ifstream in("acceptance_compare.txt");
    std::string line;
    bool found = false;
    while (std::getline(in, line)) {
        if (line.find("L1=2 L2=8 q=6") == std::string::npos) continue;
        found = line.find("Th1 set size 9") != std::string::npos &&
                line.find("Ref18a set size 3") != std::string::npos;
    }
    detail = "(3,2,8) verified; compare reports Th1 9 vs Ref18a 3 at (2,8,q=6)";
    return found;
}

bool criterion7_zero_test_cross_check(std::string& detail) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<Int> entry(-5, 5);
    const Int qs[] = {2, 3, 4, 6, 8, 9, 12};
    int agreements = 0;
    const int trials = 1400;
    for (int trial = 0; trial < trials; ++trial) {
        const Int q = qs[trial % 7];
        CyclotomicSum s{Modulus(q)};
        Int magnitude = 0;
        for (Int j = 0; j < q; ++j) {
            s.coeffs[j] = entry(rng);
            magnitude += std::abs(s.coeffs[j]);
        }
        const double eps = 1e-6 * static_cast<double>(magnitude + 1);
        if (is_zero(s) == (std::abs(to_complex(s)) < eps)) ++agreements;
    }
    std::ostringstream note;
    note << agreements << "/" << trials << " agreements";
    detail = note.str();
    return agreements == trials;
}

bool criterion8_conjugate_symmetry(std::string& detail) {
    std::mt19937 rng(515151);
    const Int qs[] = {2, 4, 6};
    for (int trial = 0; trial < 100; ++trial) {
        const Int q = qs[trial % 3];
        const Int rows = 1 + static_cast<Int>(rng() % 8);
        const Int cols = 1 + static_cast<Int>(rng() % 8);
        IntArray entries(rows, cols);
        for (Int g = 0; g < rows; ++g)
            for (Int i = 0; i < cols; ++i) entries(g, i) = static_cast<Int>(rng() % q);
        if (!check_conjugate_symmetry(ExponentArray{Modulus(q), std::move(entries)}))
            return false;
    }
    detail = "100 random arrays, all shifts exact";
    return true;
}

bool criterion9_negative_control(std::string& detail) {
    ArraySet set = build_t1_set(golden::example1_params());
    set.members[0].entries(0, 0) = (set.members[0].entries(0, 0) + 1) % 6;
    const VerificationReport report = check_gcas(set);
    std::ostringstream note;
    note << report.nonzero_shifts.size() << " nonzero shifts listed";
    detail = note.str();
    return !report.is_gcas && !report.nonzero_shifts.empty();
}

}  // namespace

int main() {
    criterion(1, "reference nine-array set reproduced entry-exact", 1.0,
              criterion1_table_reproduction);
    criterion(2, "reference set verifies with peak 144 and zero sidelobes", 1.0,
              criterion2_example_verification);
    criterion(3, "single-alphabet sweep passes exactly on every tuple", 600.0,
              criterion3_t1_sweep);
    criterion(4, "maximal chain count yields a verified 81-member set", 30.0,
              criterion4_maximal_chain_count);
    criterion(5, "an offset strategy passes the two-alphabet sweep", 600.0,
              criterion5_t2_strategy_gate);
    criterion(6, "base variant gives the 3-member set and the comparison reports 9 vs 3",
              30.0, criterion6_base_variant_comparison);
    criterion(7, "exact zero test agrees with the numeric oracle on 1400 random sums", 10.0,
              criterion7_zero_test_cross_check);
    criterion(8, "correlation conjugate symmetry holds exactly on random arrays", 60.0,
              criterion8_conjugate_symmetry);
    criterion(9, "single-entry perturbation is caught with listed offending shifts", 10.0,
              criterion9_negative_control);

    if (failures == 0)
        std::puts("acceptance: all criteria passed");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures;
}
