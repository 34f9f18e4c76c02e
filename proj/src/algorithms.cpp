#include "sched/algorithms.hpp"

namespace sched {

Plan a_off_replan(std::span<const Job> known, const TimePoint& now, const TimePoint& busy_until,
                  const WeightModel& weights, const SolverOptions& options, SolverStats* stats) {
    const TimePoint floor = busy_until > now ? busy_until : now;
    std::vector<Job> clipped;
    clipped.reserve(known.size());
    for (const Job& j : known) {
        if (j.announce > now) throw ContractViolation("a_off_replan: job " + std::to_string(j.id) + " is not announced yet");
        Job c = j;
        if (c.release < floor) c.release = floor;
        if (c.release + c.processing <= c.deadline) clipped.push_back(std::move(c));
    }
    OfflineResult offline = optimal_offline(clipped, weights, options);
    if (stats != nullptr) {
        stats->nodes += offline.stats.nodes;
        stats->prunes += offline.stats.prunes;
        stats->wall += offline.stats.wall;
        stats->node_limit_hit = stats->node_limit_hit || offline.stats.node_limit_hit;
    }
    Plan plan;
    plan.reserve(offline.schedule.entries.size());
    for (auto& e : offline.schedule.entries) plan.push_back({e.id, std::move(e.start)});
    return plan;
}

Plan AOff::on_announce(const MachineState& state, std::span<const Job>) {
    return a_off_replan(state.pending, state.now, state.busy_until, state.weights, options_, &stats_);
}

namespace {

Plan greedy_choice(const MachineState& state) {
    if (state.running) return {};
    const Job* best = nullptr;
    Weight best_weight;
    for (const Job& j : state.pending) {
        if (j.release > state.now || state.now + j.processing > j.deadline) continue;
        Weight w = weight_of(state.weights, j.processing);
        if (best == nullptr || w > best_weight || (w == best_weight && j.id < best->id)) {
            best = &j;
            best_weight = std::move(w);
        }
    }
    if (best == nullptr) return {};
    return {PlanEntry{best->id, state.now}};
}

}  // namespace

Plan Greedy::on_announce(const MachineState& state, std::span<const Job>) { return greedy_choice(state); }

Plan Greedy::on_wake(const MachineState& state) { return greedy_choice(state); }

SimulationResult run_a_off(const Instance& instance, const SolverOptions& options) {
    AOff algorithm(options);
    return simulate(instance, algorithm);
}

SimulationResult run_greedy(const Instance& instance) {
    Greedy algorithm;
    return simulate(instance, algorithm);
}

}  // namespace sched
