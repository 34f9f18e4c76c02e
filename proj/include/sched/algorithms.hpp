#pragma once

#include "sched/offline_solver.hpp"
#include "sched/simulator.hpp"

namespace sched {

/// Replan step of A_Off: with L = max(busy_until, now), every known job gets
/// release max(r, L), jobs that no longer fit are dropped, and the optimal
/// offline schedule of the rest becomes the plan.
Plan a_off_replan(std::span<const Job> known, const TimePoint& now, const TimePoint& busy_until,
                  const WeightModel& weights, const SolverOptions& options = {}, SolverStats* stats = nullptr);

/// Reruns the offline optimum on every announcement batch and otherwise
/// follows its plan verbatim.
class AOff final : public OnlineAlgorithm {
public:
    explicit AOff(SolverOptions options = {}) : options_(options) {}

    Plan on_announce(const MachineState& state, std::span<const Job> batch) override;
    Plan on_wake(const MachineState& state) override { return *state.plan; }
    [[nodiscard]] std::string name() const override { return "a_off"; }

    /// Accumulated over every replan of the run.
    [[nodiscard]] const SolverStats& stats() const { return stats_; }

private:
    SolverOptions options_;
    SolverStats stats_;
};

/// Whenever idle, starts the heaviest pending job that can run now
/// (r <= now, now + p <= d), lowest id among equals.
class Greedy final : public OnlineAlgorithm {
public:
    Plan on_announce(const MachineState& state, std::span<const Job> batch) override;
    Plan on_wake(const MachineState& state) override;
    [[nodiscard]] std::string name() const override { return "greedy"; }
};

SimulationResult run_a_off(const Instance& instance, const SolverOptions& options = {});
SimulationResult run_greedy(const Instance& instance);

}  // namespace sched
