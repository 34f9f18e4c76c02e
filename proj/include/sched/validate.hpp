#pragma once

#include "sched/model.hpp"

#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace sched {

struct Violation {
    enum class Kind {
        NegativeTime,
        NonPositiveProcessing,
        ReleaseBeforeAnnouncement,
        InfeasibleWindow,   // r + p > d
        NoticeDeficit,      // r - a < t * p
        DuplicateId,
        UnsortedAnnouncements,
    };

    Kind kind;
    JobId job;
    /// Size of the shortfall (for NoticeDeficit: t*p - (r - a)).
    Rational amount;
    std::string message;
};

std::string to_string(Violation::Kind kind);

/// Every violated constraint of every job; empty means valid.
std::vector<Violation> validate_instance(const Instance& instance);

/// Window constraints plus pairwise-disjoint half-open execution intervals.
/// Throws MalformedInput when an entry names a job that is not in the instance.
bool is_feasible_schedule(const Instance& instance, const Schedule& schedule);

/// Total weight of a feasible schedule. Throws MalformedInput otherwise.
Weight schedule_value(const Instance& instance, const Schedule& schedule);

/// Builds a Schedule with its value from bare entries.
Schedule make_schedule(const Instance& instance, std::vector<ScheduleEntry> entries);

struct BenevolenceSample {
    Span p1;
    Span p2;
    Span eps;
};

struct BenevolenceViolation {
    enum class Condition { C1, C2, C3 };
    Condition condition;
    std::string detail;
};

using WeightFunction = std::function<Weight(const Span&)>;

/// Empirical check of f(0) = 0 and f > 0 (C1), the exchange inequality
/// f(p1) + f(p2) <= f(p1 - eps) + f(p2 + eps) (C2) and strict monotonicity on
/// the sampled points (C3). Passing is evidence, not proof. Floating point
/// models compare with a relative tolerance of 1e-12. Throws MalformedInput
/// for an empty grid or a triple outside 0 < eps <= p1 <= p2.
std::vector<BenevolenceViolation> check_c_benevolent(const WeightFunction& f,
                                                     std::span<const BenevolenceSample> grid);
std::vector<BenevolenceViolation> check_c_benevolent(const WeightModel& model,
                                                     std::span<const BenevolenceSample> grid);

}  // namespace sched
