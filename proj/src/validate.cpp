#include "sched/validate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sched {

std::string to_string(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::NegativeTime: return "negative-time";
    case Violation::Kind::NonPositiveProcessing: return "non-positive-processing";
    case Violation::Kind::ReleaseBeforeAnnouncement: return "release-before-announcement";
    case Violation::Kind::InfeasibleWindow: return "infeasible-window";
    case Violation::Kind::NoticeDeficit: return "notice-deficit";
    case Violation::Kind::DuplicateId: return "duplicate-id";
    case Violation::Kind::UnsortedAnnouncements: return "unsorted-announcements";
    }
    return "unknown";
}

std::vector<Violation> validate_instance(const Instance& instance) {
    std::vector<Violation> out;
    auto report = [&out](Violation::Kind kind, JobId id, Rational amount, std::string msg) {
        out.push_back(Violation{kind, id, std::move(amount), std::move(msg)});
    };

    std::set<JobId> seen;
    const TimePoint* previous_announce = nullptr;
    for (const Job& j : instance.jobs) {
        if (!seen.insert(j.id).second) {
            report(Violation::Kind::DuplicateId, j.id, 0, "job id appears more than once");
        }
        if (j.announce < 0 || j.release < 0 || j.deadline < 0) {
            report(Violation::Kind::NegativeTime, j.id, 0, "times must be nonnegative");
        }
        if (j.processing <= 0) {
            report(Violation::Kind::NonPositiveProcessing, j.id, Rational(-j.processing),
                   "processing time must be positive");
        }
        if (j.release < j.announce) {
            report(Violation::Kind::ReleaseBeforeAnnouncement, j.id, Rational(j.announce - j.release),
                   "released before it is announced");
        }
        if (j.release + j.processing > j.deadline) {
            report(Violation::Kind::InfeasibleWindow, j.id,
                   Rational(j.release + j.processing - j.deadline), "r + p exceeds d");
        }
        const Rational required = instance.notice_level * j.processing;
        if (j.notice() < required) {
            report(Violation::Kind::NoticeDeficit, j.id, Rational(required - j.notice()),
                   "needs r - a >= " + to_string(required) + ", has " + to_string(j.notice()));
        }
        if (previous_announce != nullptr && j.announce < *previous_announce) {
            report(Violation::Kind::UnsortedAnnouncements, j.id, Rational(*previous_announce - j.announce),
                   "announced before its predecessor in the list");
        }
        previous_announce = &j.announce;
    }
    return out;
}

bool is_feasible_schedule(const Instance& instance, const Schedule& schedule) {
    std::set<JobId> ids;
    for (const auto& e : schedule.entries) {
        const Job& j = instance.job(e.id);
        if (!ids.insert(e.id).second) return false;
        if (e.start < j.release || e.start + j.processing > j.deadline) return false;
    }
    const auto sorted = schedule.by_start();
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        const Job& prev = instance.job(sorted[k - 1].id);
        if (sorted[k - 1].start + prev.processing > sorted[k].start) return false;
    }
    return true;
}

Weight schedule_value(const Instance& instance, const Schedule& schedule) {
    if (!is_feasible_schedule(instance, schedule)) {
        throw MalformedInput("schedule_value: schedule is infeasible");
    }
    Weight total = instance.weights.zero();
    for (const auto& e : schedule.entries) {
        total += weight_of(instance.weights, instance.job(e.id).processing);
    }
    return total;
}

Schedule make_schedule(const Instance& instance, std::vector<ScheduleEntry> entries) {
    Schedule s{std::move(entries), instance.weights.zero()};
    s.value = schedule_value(instance, s);
    return s;
}

namespace {

using Condition = BenevolenceViolation::Condition;

bool positive(const Weight& w) {
    return w.is_exact() ? w.exact() > 0 : w.approx() > 0.0;
}

bool is_zero(const Weight& w) {
    return w.is_exact() ? w.exact() == 0 : w.approx() == 0.0;
}

// lhs <= rhs, with slack for rounding when the values are floating point.
bool at_most(const Weight& lhs, const Weight& rhs) {
    if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() <= rhs.exact();
    const double l = lhs.to_double();
    const double r = rhs.to_double();
    return l <= r + 1e-12 * std::max({1.0, std::abs(l), std::abs(r)});
}

}  // namespace

std::vector<BenevolenceViolation> check_c_benevolent(const WeightFunction& f,
                                                     std::span<const BenevolenceSample> grid) {
    if (grid.empty()) throw MalformedInput("check_c_benevolent: empty sample grid");
    for (const auto& s : grid) {
        if (!(0 < s.eps && s.eps <= s.p1 && s.p1 <= s.p2)) {
            throw MalformedInput("check_c_benevolent: triple must satisfy 0 < eps <= p1 <= p2, got (" +
                                 to_string(s.p1) + ", " + to_string(s.p2) + ", " + to_string(s.eps) + ")");
        }
    }

    std::vector<BenevolenceViolation> out;

    const Weight at_zero = f(Rational(0));
    if (!is_zero(at_zero)) {
        out.push_back({Condition::C1, "f(0) = " + at_zero.to_string() + " != 0"});
    }

    std::set<Rational> points;
    for (const auto& s : grid) {
        points.insert(s.p1);
        points.insert(s.p2);
        points.insert(s.p2 + s.eps);
        if (s.p1 - s.eps > 0) points.insert(s.p1 - s.eps);
    }
    for (const auto& p : points) {
        if (!positive(f(p))) out.push_back({Condition::C1, "f(" + to_string(p) + ") is not positive"});
    }

    for (const auto& s : grid) {
        const Weight lhs = f(s.p1) + f(s.p2);
        const Weight rhs = f(Rational(s.p1 - s.eps)) + f(Rational(s.p2 + s.eps));
        if (!at_most(lhs, rhs)) {
            out.push_back({Condition::C2, "f(" + to_string(s.p1) + ") + f(" + to_string(s.p2) + ") = " +
                                              lhs.to_string() + " > " + rhs.to_string() + " (eps " +
                                              to_string(s.eps) + ")"});
        }
    }

    std::optional<std::pair<Rational, Weight>> prev;
    for (const auto& p : points) {
        Weight v = f(p);
        if (prev && !(prev->second < v)) {
            out.push_back({Condition::C3, "f(" + to_string(prev->first) + ") = " + prev->second.to_string() +
                                              " >= f(" + to_string(p) + ") = " + v.to_string()});
        }
        prev.emplace(p, std::move(v));
    }
    return out;
}

std::vector<BenevolenceViolation> check_c_benevolent(const WeightModel& model,
                                                     std::span<const BenevolenceSample> grid) {
    return check_c_benevolent([&model](const Span& p) { return model.evaluate(p); }, grid);
}

}  // namespace sched
