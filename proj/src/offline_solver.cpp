#include "sched/offline_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace sched {

SolverOptions solver_options_from_environment() {
    SolverOptions options;
    const char* raw = std::getenv("SCHED_SOLVER_NODE_LIMIT");
    if (raw == nullptr || *raw == '\0') return options;
    const std::string text(raw);
    std::size_t used = 0;
    unsigned long long limit = 0;
    try {
        limit = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || limit == 0 || text.front() == '-') {
        throw MalformedInput("SCHED_SOLVER_NODE_LIMIT must be a positive integer, got '" + text + "'");
    }
    options.node_limit = limit;
    return options;
}

std::optional<Schedule> earliest_start_schedule(std::span<const Job> order, const TimePoint& floor,
                                                const WeightModel& weights) {
    Schedule schedule{{}, weights.zero()};
    TimePoint cursor = floor;
    for (const Job& job : order) {
        TimePoint start = job.release > cursor ? job.release : cursor;
        cursor = start + job.processing;
        if (cursor > job.deadline) return std::nullopt;
        schedule.value += weight_of(weights, job.processing);
        schedule.entries.push_back({job.id, std::move(start)});
    }
    return schedule;
}

namespace {

std::vector<ScheduleEntry> sorted_by_id(const Schedule& s) {
    std::vector<ScheduleEntry> v = s.entries;
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return v;
}

std::vector<Job> sorted_jobs(std::span<const Job> jobs) {
    std::vector<Job> v(jobs.begin(), jobs.end());
    std::sort(v.begin(), v.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (v[k].id == v[k - 1].id) throw MalformedInput("duplicate job id " + std::to_string(v[k].id));
    }
    return v;
}

}  // namespace

bool preferred_schedule(const Schedule& candidate, const Schedule& incumbent) {
    const auto order = candidate.value <=> incumbent.value;
    if (order == std::partial_ordering::greater) return true;
    if (order != std::partial_ordering::equivalent) return false;

    const auto a = sorted_by_id(candidate);
    const auto b = sorted_by_id(incumbent);
    const bool a_ids_less = std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    const bool b_ids_less = std::lexicographical_compare(
        b.begin(), b.end(), a.begin(), a.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    if (a_ids_less != b_ids_less) return a_ids_less;

    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const auto& x, const auto& y) { return x.start < y.start; });
}

Schedule brute_force_opt(std::span<const Job> jobs, const WeightModel& weights) {
    if (jobs.size() > kBruteForceJobLimit) {
        throw MalformedInput("brute_force_opt: " + std::to_string(jobs.size()) + " jobs exceeds the " +
                             std::to_string(kBruteForceJobLimit) + "-job guard");
    }
    const std::vector<Job> sorted = sorted_jobs(jobs);
    const std::size_t n = sorted.size();

    Schedule best{{}, weights.zero()};
    std::vector<Job> order;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (1u << k)) members.push_back(k);
        }
        do {
            order.clear();
            for (std::size_t k : members) order.push_back(sorted[k]);
            if (auto s = earliest_start_schedule(order, TimePoint(0), weights); s && preferred_schedule(*s, best)) {
                best = std::move(*s);
            }
        } while (std::next_permutation(members.begin(), members.end()));
    }
    return best;
}

Schedule brute_force_opt(const Instance& instance) {
    return brute_force_opt(instance.jobs, instance.weights);
}

namespace {

// Jobs are indexed by ascending id, so index order is id order for every
// lexicographic comparison below.
class BranchAndBound {
public:
    BranchAndBound(std::vector<Job> jobs, const WeightModel& weights, const SolverOptions& options)
        : jobs_(std::move(jobs)),
          model_(weights),
          options_(options),
          weight_(jobs_.size()),
          placed_(jobs_.size(), 0),
          start_(jobs_.size()),
          best_placed_(jobs_.size(), 0),
          best_start_(jobs_.size()),
          best_value_(weights.zero()) {
        for (std::size_t k = 0; k < jobs_.size(); ++k) weight_[k] = weight_of(model_, jobs_[k].processing);
    }

    OfflineResult run() {
        const auto t0 = std::chrono::steady_clock::now();
        explore(TimePoint(0), model_.zero());

        OfflineResult result{{{}, best_value_}, stats_};
        std::vector<std::pair<TimePoint, std::size_t>> chosen;
        for (std::size_t k = 0; k < jobs_.size(); ++k) {
            if (best_placed_[k]) chosen.emplace_back(best_start_[k], k);
        }
        std::sort(chosen.begin(), chosen.end());
        for (auto& [s, k] : chosen) result.schedule.entries.push_back({jobs_[k].id, s});
        result.stats.wall = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - t0);
        return result;
    }

private:
    static TimePoint earliest(const Job& job, const TimePoint& cursor) {
        return job.release > cursor ? job.release : cursor;
    }

    bool fits(std::size_t k, const TimePoint& cursor) const {
        return earliest(jobs_[k], cursor) + jobs_[k].processing <= jobs_[k].deadline;
    }

    // -1: current placement is preferred to the incumbent, 0: identical, 1: worse.
    int compare_with_incumbent(const Weight& value) const {
        const auto order = value <=> best_value_;
        if (order == std::partial_ordering::greater) return -1;
        if (order != std::partial_ordering::equivalent) return 1;
        const int sets = compare_sets(placed_);
        if (sets != 0) return sets;
        for (std::size_t k = 0; k < jobs_.size(); ++k) {
            if (!placed_[k]) continue;
            const int c = cmp(start_[k], best_start_[k]);
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    }

    // Lexicographic comparison of sorted id sequences; a proper prefix is smaller.
    int compare_sets(const std::vector<char>& members) const {
        const std::size_t n = jobs_.size();
        for (std::size_t k = 0; k < n; ++k) {
            if (members[k] == best_placed_[k]) continue;
            const std::vector<char>& without = members[k] ? best_placed_ : members;
            const bool without_has_more = std::any_of(without.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                                      without.end(), [](char c) { return c != 0; });
            const bool members_smaller = members[k] ? without_has_more : !without_has_more;
            return members_smaller ? -1 : 1;
        }
        return 0;
    }

    // Called when the optimistic bound equals the incumbent value: the only
    // completion that can tie takes every remaining job that fits, so the set
    // is known and the start vector has a componentwise lower bound.
    bool tie_cannot_improve(const std::vector<char>& fitting, const TimePoint& cursor) const {
        std::vector<char> members = placed_;
        for (std::size_t k = 0; k < members.size(); ++k) members[k] = members[k] || fitting[k];
        const int sets = compare_sets(members);
        if (sets != 0) return sets > 0;
        for (std::size_t k = 0; k < jobs_.size(); ++k) {
            if (!members[k]) continue;
            if (placed_[k]) {
                const int c = cmp(start_[k], best_start_[k]);
                if (c != 0) return c > 0;
                continue;
            }
            const TimePoint lower = earliest(jobs_[k], cursor);
            return lower > best_start_[k];
        }
        return true;
    }

    void record_incumbent(const Weight& value) {
        best_value_ = value;
        best_placed_ = placed_;
        for (std::size_t k = 0; k < jobs_.size(); ++k) {
            if (placed_[k]) best_start_[k] = start_[k];
        }
        have_incumbent_ = true;
    }

    void explore(const TimePoint& cursor, const Weight& value) {
        if (options_.node_limit && stats_.nodes >= *options_.node_limit) {
            stats_.node_limit_hit = true;
            return;
        }
        ++stats_.nodes;

        if (!have_incumbent_ || compare_with_incumbent(value) < 0) record_incumbent(value);

        const std::size_t n = jobs_.size();
        std::vector<char> fitting(n, 0);
        Weight remaining = model_.zero();
        TimePoint horizon = cursor;
        std::vector<std::size_t> children;
        for (std::size_t k = 0; k < n; ++k) {
            if (placed_[k] || !fits(k, cursor)) continue;
            fitting[k] = 1;
            remaining += weight_[k];
            if (jobs_[k].deadline > horizon) horizon = jobs_[k].deadline;
            children.push_back(k);
        }
        if (children.empty()) return;

        const Weight bound = value + remaining;
        const auto vs_best = bound <=> best_value_;
        if (vs_best == std::partial_ordering::less) {
            ++stats_.prunes;
            return;
        }
        if (vs_best == std::partial_ordering::equivalent && tie_cannot_improve(fitting, cursor)) {
            ++stats_.prunes;
            return;
        }
        if (model_.kind() == WeightModel::Kind::Proportional && vs_best == std::partial_ordering::greater) {
            // Everything still to run fits inside [cursor, latest deadline).
            const Weight capacity_bound = value + Weight(Rational(horizon - cursor));
            if (capacity_bound < best_value_) {
                ++stats_.prunes;
                return;
            }
        }

        std::vector<TimePoint> child_start(n);
        for (std::size_t k : children) child_start[k] = earliest(jobs_[k], cursor);
        std::sort(children.begin(), children.end(), [&](std::size_t x, std::size_t y) {
            const int c = cmp(child_start[x], child_start[y]);
            if (c != 0) return c < 0;
            const int d = cmp(jobs_[x].deadline, jobs_[y].deadline);
            if (d != 0) return d < 0;
            return x < y;
        });

        for (std::size_t k : children) {
            placed_[k] = 1;
            start_[k] = child_start[k];
            explore(child_start[k] + jobs_[k].processing, value + weight_[k]);
            placed_[k] = 0;
            if (stats_.node_limit_hit) return;
        }
    }

    std::vector<Job> jobs_;
    WeightModel model_;
    SolverOptions options_;
    std::vector<Weight> weight_;

    std::vector<char> placed_;
    std::vector<TimePoint> start_;

    bool have_incumbent_ = false;
    std::vector<char> best_placed_;
    std::vector<TimePoint> best_start_;
    Weight best_value_;

    SolverStats stats_;
};

}  // namespace

OfflineResult optimal_offline(std::span<const Job> jobs, const WeightModel& weights, const SolverOptions& options) {
    return BranchAndBound(sorted_jobs(jobs), weights, options).run();
}

OfflineResult optimal_offline(const Instance& instance, const SolverOptions& options) {
    return optimal_offline(instance.jobs, instance.weights, options);
}

}  // namespace sched
