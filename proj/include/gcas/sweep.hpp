#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcas/construct.hpp"

namespace gcas {

/// Exhaustive single-alphabet sweep: every (b, q, N, m, n, k) tuple within
/// bounds, `draws` random functions per tuple (random chain partition and
/// orderings, random unit chain coefficients, random affine part). Draw 0
/// uses a canonical partition that keeps the pinned variable off the chain
/// heads whenever the tuple allows it.
struct T1SweepBounds {
    std::vector<Int> bs{2, 3};
    std::vector<Int> qs{2, 3, 4, 6, 12};
    Int max_mn = 5;
    Int max_cells = 256;
    Int max_set_size = 256;
    Int draws = 50;
    std::uint64_t seed = 0x1d2d3d4d5d6d7dULL;
};

/// Two-alphabet sweep: every strategy is exercised on every tuple it
/// validates for, on identical random functions, so the verifier's verdicts
/// isolate the strategy choice.
struct T2SweepBounds {
    std::vector<Int> b1s{2, 3};
    std::vector<Int> b2s{2, 3};
    std::vector<Int> qs{4, 6, 12};
    Int max_m = 3;
    Int max_n = 3;
    Int max_set_size = 512;
    Int draws = 20;
    std::uint64_t seed = 0x9a8b7c6d5e4fULL;
};

struct SweepRecord {
    std::string params;
    std::string strategy;  // "-" for single-alphabet rows
    std::string verdict;   // pass | fail | invalid
    Int draws = 0;
    Int failures = 0;
    double elapsed_s = 0.0;
};

struct SweepOutcome {
    std::vector<SweepRecord> records;
    Int t1_tuples = 0;
    Int t1_failures = 0;
    std::map<std::string, std::pair<Int, Int>> t2_strategy_stats;  // name -> {valid tuples, failures}

    bool t1_passed() const { return t1_failures == 0; }
    /// Strategies with at least the vacuous right to be called passing.
    std::vector<std::string> t2_passing_strategies() const;
    bool gate_passed() const;
};

SweepOutcome run_sweep(const T1SweepBounds& t1, const T2SweepBounds& t2, unsigned threads);

std::string sweep_csv(const SweepOutcome& outcome);
std::string sweep_summary(const SweepOutcome& outcome);

}  // namespace gcas
