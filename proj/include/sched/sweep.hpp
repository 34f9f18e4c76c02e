#pragma once

#include "sched/offline_solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sched {

struct SweepRow {
    Rational t;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    Rational alg;
    Rational opt;
    Rational ratio;
    Rational bound;
    /// ratio >= bound, compared exactly.
    bool ok = false;
    std::uint64_t nodes = 0;
    double ms = 0;
    /// Greedy on the same instance, for comparison only.
    Rational greedy;
};

struct SweepConfig {
    std::vector<Rational> notice_levels;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    /// Instance sizes are 1 + seed % max_jobs.
    std::size_t max_jobs = 8;
    std::size_t threads = 0;  // 0: hardware concurrency
    bool record_time = true;
    SolverOptions solver;
};

/// t/(2t+1), the guarantee of A_Off.
Rational a_off_bound(const Rational& t);

/// One row per (t, seed) with seeds seed .. seed+trials-1: a random
/// proportional instance is solved offline and run online by A_Off (the row)
/// and greedy. Trials run in parallel; rows come back in (t, seed) order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Lower-bound adversary against A_Off for each t and eps; n is the number of
/// emitted jobs and seed the index of eps in the list.
std::vector<SweepRow> run_adversary_sweep(const std::vector<Rational>& notice_levels,
                                          const std::vector<Rational>& eps_values, const SolverOptions& solver = {},
                                          bool record_time = true);

inline constexpr const char* kSweepCsvHeader = "t,n,seed,alg_num,alg_den,opt_num,opt_den,ratio,bound,ok,nodes,ms";

/// Header plus one line per row; decimals carry 12 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SweepSummary {
    Rational t;
    std::size_t rows = 0;
    Rational min_ratio;
    Rational min_greedy_ratio;
    Rational bound;
    bool all_ok = true;
};

/// Per t in first-appearance order.
std::vector<SweepSummary> summarize(const std::vector<SweepRow>& rows);
std::string summary_text(const std::vector<SweepSummary>& summary);

}  // namespace sched
