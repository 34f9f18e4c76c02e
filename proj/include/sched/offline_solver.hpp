#pragma once

#include "sched/model.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>

namespace sched {

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    std::chrono::nanoseconds wall{0};
    /// The node cap stopped the search; the schedule is the best one found.
    bool node_limit_hit = false;
};

struct SolverOptions {
    std::optional<std::uint64_t> node_limit;
};

/// Reads SCHED_SOLVER_NODE_LIMIT; unset or empty means unlimited.
/// Throws MalformedInput for a value that is not a positive integer.
SolverOptions solver_options_from_environment();

struct OfflineResult {
    Schedule schedule;
    SolverStats stats;
};

/// Runs the jobs back to back in the given order, each as early as possible:
/// s_1 = max(r_1, floor), s_{k+1} = max(r_{k+1}, s_k + p_k). Returns nullopt
/// when some job would miss its deadline.
///
/// For a fixed order, moving a start earlier inside its window only moves the
/// next job's earliest possible start earlier, so any feasible schedule in
/// that order can be left-shifted into this one. Both solvers therefore only
/// enumerate orders.
std::optional<Schedule> earliest_start_schedule(std::span<const Job> order, const TimePoint& floor,
                                                const WeightModel& weights);

/// Tie-break shared by both solvers: larger value first, then the
/// lexicographically smaller sorted id set, then the lexicographically smaller
/// start vector (starts listed in increasing id order).
bool preferred_schedule(const Schedule& candidate, const Schedule& incumbent);

inline constexpr std::size_t kBruteForceJobLimit = 8;

/// Exhaustive search over every subset and every order of each subset.
/// Throws MalformedInput above kBruteForceJobLimit jobs.
Schedule brute_force_opt(std::span<const Job> jobs, const WeightModel& weights);
Schedule brute_force_opt(const Instance& instance);

/// Depth-first branch-and-bound over job orders. Each node appends one more
/// job in earliest-start form; a node is pruned when its value plus the weight
/// of every remaining job that still fits on its own cannot beat the incumbent
/// under preferred_schedule. Announcement times are ignored.
OfflineResult optimal_offline(std::span<const Job> jobs, const WeightModel& weights,
                              const SolverOptions& options = {});
OfflineResult optimal_offline(const Instance& instance, const SolverOptions& options = {});

}  // namespace sched
