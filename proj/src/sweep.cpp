#include "gcas/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "gcas/verify.hpp"

namespace gcas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t tuple_id, std::uint64_t draw) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(tuple_id * 1000003ULL + draw)));
}

Int rand_in(std::mt19937_64& rng, Int lo, Int hi) {  // inclusive
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

std::vector<Int> units_of(Int b) {
    std::vector<Int> units;
    for (Int r = 1; r < b; ++r)
        if (std::gcd(r, b) == 1) units.push_back(r);
    return units;
}

// Random ordered partition of {1..size} into k nonempty ordered chains.
std::vector<std::vector<Int>> random_chains(std::mt19937_64& rng, Int size, Int k) {
    std::vector<Int> order(static_cast<std::size_t>(size));
    for (Int t = 0; t < size; ++t) order[static_cast<std::size_t>(t)] = t + 1;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Int> gaps(static_cast<std::size_t>(size - 1));
    for (Int t = 0; t < size - 1; ++t) gaps[static_cast<std::size_t>(t)] = t + 1;
    std::shuffle(gaps.begin(), gaps.end(), rng);
    std::vector<Int> cuts(gaps.begin(), gaps.begin() + (k - 1));
    cuts.push_back(0);
    cuts.push_back(size);
    std::sort(cuts.begin(), cuts.end());

    std::vector<std::vector<Int>> chains;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
        chains.emplace_back(order.begin() + cuts[c], order.begin() + cuts[c + 1]);
    return chains;
}

// Deterministic partition keeping `special` positions off the chain heads
// whenever k leaves room: specials go to the back of one long final chain.
std::vector<std::vector<Int>> canonical_chains(Int size, Int k, const std::vector<Int>& special) {
    std::vector<Int> seq;
    for (Int t = 1; t <= size; ++t)
        if (std::find(special.begin(), special.end(), t) == special.end()) seq.push_back(t);
    for (Int s : special)
        if (s >= 1 && s <= size) seq.push_back(s);

    std::vector<std::vector<Int>> chains;
    for (Int c = 0; c < k - 1; ++c) chains.push_back({seq[static_cast<std::size_t>(c)]});
    chains.emplace_back(seq.begin() + (k - 1), seq.end());
    return chains;
}

std::vector<std::vector<Int>> random_unit_coeffs(std::mt19937_64& rng,
                                                 const std::vector<std::vector<Int>>& chains,
                                                 const std::vector<Int>& units) {
    std::vector<std::vector<Int>> d;
    for (const auto& chain : chains) {
        std::vector<Int> row;
        for (std::size_t t = 0; t + 1 < chain.size(); ++t)
            row.push_back(units[static_cast<std::size_t>(
                rand_in(rng, 0, static_cast<Int>(units.size()) - 1))]);
        d.push_back(std::move(row));
    }
    return d;
}

IntArray random_affine(std::mt19937_64& rng, Int q, Int vars) {
    IntArray out(q - 1, vars);
    for (Eigen::Index g = 0; g < out.rows(); ++g)
        for (Eigen::Index l = 0; l < out.cols(); ++l) out(g, l) = rand_in(rng, 0, q - 1);
    return out;
}

struct T1Tuple {
    Int b, q, N, m, n, k;
    std::uint64_t id;
};

struct T2Tuple {
    Int b1, b2, q, N1, N2, m, n, k1, k2;
    std::uint64_t id;
};

Int int_pow(Int base, Int exp) {
    Int v = 1;
    for (Int t = 0; t < exp; ++t) v *= base;
    return v;
}

std::vector<T1Tuple> t1_tuples(const T1SweepBounds& bounds) {
    std::vector<T1Tuple> tuples;
    std::uint64_t id = 0;
    for (Int b : bounds.bs)
        for (Int q : bounds.qs) {
            if (q % b != 0) continue;
            for (Int N = b; N <= q; ++N) {
                if (q % N != 0) continue;
                for (Int m = 1; m <= bounds.max_mn; ++m)
                    for (Int n = 0; m + n <= bounds.max_mn; ++n) {
                        if (int_pow(b, m + n) > bounds.max_cells) continue;
                        for (Int k = 1; k <= m + n; ++k) {
                            Int size = 1;
                            bool over = false;
                            for (Int t = 0; t <= k && !over; ++t) {
                                if (size > bounds.max_set_size / N) over = true;
                                else size *= N;
                            }
                            if (over || size > bounds.max_set_size) continue;
                            tuples.push_back({b, q, N, m, n, k, id++});
                        }
                    }
            }
        }
    return tuples;
}

std::vector<T2Tuple> t2_tuples(const T2SweepBounds& bounds) {
    std::vector<T2Tuple> tuples;
    std::uint64_t id = 0;
    for (Int b1 : bounds.b1s)
        for (Int b2 : bounds.b2s)
            for (Int q : bounds.qs) {
                if (q % b1 != 0 || q % b2 != 0) continue;
                for (Int N1 = b1; N1 <= q; ++N1) {
                    if (q % N1 != 0) continue;
                    for (Int N2 = b2; N2 <= q; ++N2) {
                        if (q % N2 != 0) continue;
                        for (Int m = 1; m <= bounds.max_m; ++m)
                            for (Int n = 1; n <= bounds.max_n; ++n)
                                for (Int k1 = 1; k1 <= m; ++k1)
                                    for (Int k2 = 1; k2 <= n; ++k2) {
                                        const Int size =
                                            int_pow(N1, k1 + 1) * int_pow(N2, k2);
                                        if (size > bounds.max_set_size) continue;
                                        tuples.push_back(
                                            {b1, b2, q, N1, N2, m, n, k1, k2, id++});
                                    }
                    }
                }
            }
    return tuples;
}

Theorem1Params draw_t1(const T1Tuple& t, const T1SweepBounds& bounds, Int draw) {
    auto rng = seeded_rng(bounds.seed, t.id, static_cast<std::uint64_t>(draw));
    Theorem1Function fn{Modulus(t.q)};
    fn.b = t.b;
    fn.m = t.m;
    fn.n = t.n;
    fn.partitions = (draw == 0) ? canonical_chains(t.m + t.n, t.k, {t.m})
                                : random_chains(rng, t.m + t.n, t.k);
    fn.d = random_unit_coeffs(rng, fn.partitions, units_of(t.b));
    fn.lambda = random_affine(rng, t.q, t.m + t.n);
    fn.lambda0 = rand_in(rng, 0, t.q - 1);
    return Theorem1Params(std::move(fn), t.N);
}

Theorem2Params draw_t2(const T2Tuple& t, const T2SweepBounds& bounds, Int draw,
                       OffsetStrategy strategy) {
    auto rng = seeded_rng(bounds.seed, t.id, static_cast<std::uint64_t>(draw));
    Theorem2Function fn{Modulus(t.q)};
    fn.b1 = t.b1;
    fn.b2 = t.b2;
    fn.m = t.m;
    fn.n = t.n;
    if (draw == 0) {
        fn.x_partitions = canonical_chains(t.m, t.k1, {t.k1 + 1, t.m});
        fn.y_partitions = canonical_chains(t.n, t.k2, {t.k1 + 1});
    } else {
        fn.x_partitions = random_chains(rng, t.m, t.k1);
        fn.y_partitions = random_chains(rng, t.n, t.k2);
    }
    fn.d = random_unit_coeffs(rng, fn.x_partitions, units_of(t.b1));
    fn.d_prime = random_unit_coeffs(rng, fn.y_partitions, units_of(t.b2));
    fn.lambda = random_affine(rng, t.q, t.m);
    fn.nu = random_affine(rng, t.q, t.n);
    fn.lambda0 = rand_in(rng, 0, t.q - 1);
    return Theorem2Params(std::move(fn), t.N1, t.N2, strategy);
}

template <class Task>
void run_indexed(std::size_t count, unsigned threads, Task&& task) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                task(i);
            }
        });
    for (auto& th : pool) th.join();
}

constexpr OffsetStrategy kStrategies[] = {OffsetStrategy::AsPrintedUnscaled,
                                          OffsetStrategy::AsPrintedScaled,
                                          OffsetStrategy::MirrorTheorem1};

}  // namespace

std::vector<std::string> SweepOutcome::t2_passing_strategies() const {
    std::vector<std::string> passing;
    for (const auto& [name, stats] : t2_strategy_stats)
        if (stats.second == 0) passing.push_back(name);
    return passing;
}

bool SweepOutcome::gate_passed() const {
    if (t1_failures > 0) return false;
    if (t2_strategy_stats.empty()) return true;  // nothing enumerated: vacuous
    return !t2_passing_strategies().empty();
}

SweepOutcome run_sweep(const T1SweepBounds& t1, const T2SweepBounds& t2, unsigned threads) {
    SweepOutcome outcome;

    const auto tuples1 = t1_tuples(t1);
    std::vector<SweepRecord> records1(tuples1.size());
    run_indexed(tuples1.size(), threads, [&](std::size_t i) {
        const T1Tuple& t = tuples1[i];
        const auto start = std::chrono::steady_clock::now();
        Int failures = 0;
        for (Int draw = 0; draw < t1.draws; ++draw) {
            const Theorem1Params params = draw_t1(t, t1, draw);
            if (!validate_t1(params).ok()) {
                ++failures;
                continue;
            }
            if (!check_gcas(build_t1_set(params)).is_gcas) ++failures;
        }
        std::ostringstream name;
        name << "t1 b=" << t.b << " q=" << t.q << " N=" << t.N << " m=" << t.m << " n=" << t.n
             << " k=" << t.k;
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        records1[i] = {name.str(), "-", failures == 0 ? "pass" : "fail", t1.draws, failures,
                       elapsed};
    });
    outcome.t1_tuples = static_cast<Int>(tuples1.size());
    for (auto& record : records1) {
        outcome.t1_failures += record.failures;
        outcome.records.push_back(std::move(record));
    }

    const auto tuples2 = t2_tuples(t2);
    std::vector<std::array<SweepRecord, 3>> records2(tuples2.size());
    run_indexed(tuples2.size(), threads, [&](std::size_t i) {
        const T2Tuple& t = tuples2[i];
        std::ostringstream name;
        name << "t2 b1=" << t.b1 << " b2=" << t.b2 << " q=" << t.q << " N1=" << t.N1
             << " N2=" << t.N2 << " m=" << t.m << " n=" << t.n << " k1=" << t.k1
             << " k2=" << t.k2;
        for (std::size_t s = 0; s < 3; ++s) {
            const OffsetStrategy strategy = kStrategies[s];
            const auto start = std::chrono::steady_clock::now();
            Int failures = 0;
            Int valid_draws = 0;
            for (Int draw = 0; draw < t2.draws; ++draw) {
                const Theorem2Params params = draw_t2(t, t2, draw, strategy);
                if (!validate_t2(params).ok()) continue;  // strategy rejects the tuple
                ++valid_draws;
                if (!check_gcas(build_t2_set(params)).is_gcas) ++failures;
            }
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
            const char* verdict =
                valid_draws == 0 ? "invalid" : (failures == 0 ? "pass" : "fail");
            records2[i][s] = {name.str(), to_string(strategy), verdict, valid_draws, failures,
                              elapsed};
        }
    });
    for (auto& row : records2)
        for (auto& record : row) {
            if (record.verdict != "invalid") {
                auto& stats = outcome.t2_strategy_stats[record.strategy];
                stats.first += 1;
                stats.second += record.failures;
            } else {
                outcome.t2_strategy_stats.try_emplace(record.strategy, 0, 0);
            }
            outcome.records.push_back(std::move(record));
        }

    return outcome;
}

std::string sweep_csv(const SweepOutcome& outcome) {
    std::ostringstream out;
    out << "params,strategy,verdict,draws,failures,elapsed_s\n";
    for (const auto& record : outcome.records)
        out << record.params << "," << record.strategy << "," << record.verdict << ","
            << record.draws << "," << record.failures << "," << record.elapsed_s << "\n";
    return out.str();
}

std::string sweep_summary(const SweepOutcome& outcome) {
    std::ostringstream out;
    out << "t1: " << outcome.t1_tuples << " tuples, " << outcome.t1_failures << " failures\n";
    for (const auto& [name, stats] : outcome.t2_strategy_stats)
        out << "t2 strategy " << name << ": " << stats.first << " valid tuples, "
            << stats.second << " failures\n";
    const auto passing = outcome.t2_passing_strategies();
    out << "t2 passing strategies:";
    if (passing.empty()) out << " none";
    for (const auto& name : passing) out << " " << name;
    out << "\n";
    out << "gate: " << (outcome.gate_passed() ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace gcas
