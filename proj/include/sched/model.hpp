#pragma once

#include "sched/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sched {

using JobId = std::int64_t;

/// Input that does not describe a well-formed object (unknown ids, bad
/// parameters, unparsable files).
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A job (a, r, p, d): announced at a, startable from r, runs p without
/// interruption, must complete by d.
struct Job {
    JobId id = 0;
    TimePoint announce;
    TimePoint release;
    Span processing;
    TimePoint deadline;

    [[nodiscard]] Span notice() const { return release - announce; }
    [[nodiscard]] TimePoint latest_start() const { return deadline - processing; }

    friend bool operator==(const Job&, const Job&) = default;
};

/// Total value of a set of jobs. Exact for the proportional and unweighted
/// models, floating point for power weights. Values of different kinds never
/// mix; doing so throws std::logic_error.
class Weight {
public:
    Weight() : value_(Rational(0)) {}
    explicit Weight(Rational exact) : value_(std::move(exact)) {}
    explicit Weight(double approx) : value_(approx) {}

    [[nodiscard]] bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    [[nodiscard]] const Rational& exact() const;
    [[nodiscard]] double approx() const;
    [[nodiscard]] double to_double() const;

    Weight& operator+=(const Weight& rhs);
    friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
    Weight& operator-=(const Weight& rhs);
    friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }

    friend std::partial_ordering operator<=>(const Weight& lhs, const Weight& rhs);
    friend bool operator==(const Weight& lhs, const Weight& rhs) {
        return (lhs <=> rhs) == std::partial_ordering::equivalent;
    }

    /// lhs / rhs, exact when both are exact. rhs must be nonzero.
    friend Weight ratio(const Weight& lhs, const Weight& rhs);

    [[nodiscard]] std::string to_string() const;

private:
    std::variant<Rational, double> value_;
};

/// Weight as a function of processing time only.
class WeightModel {
public:
    enum class Kind { Proportional, Unweighted, PowerBenevolent };

    static WeightModel proportional() { return WeightModel(Kind::Proportional, 1.0); }
    static WeightModel unweighted() { return WeightModel(Kind::Unweighted, 1.0); }
    /// w(p) = p^k in floating point; requires k >= 1.
    static WeightModel power(double exponent);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] double exponent() const { return exponent_; }
    [[nodiscard]] bool is_exact() const { return kind_ != Kind::PowerBenevolent; }

    /// Zero of the right kind for accumulating values under this model.
    [[nodiscard]] Weight zero() const;

    /// f(p) for any p >= 0 (including f(0)); weight_of is the checked entry
    /// point for job weights.
    [[nodiscard]] Weight evaluate(const Span& p) const;

    [[nodiscard]] std::string name() const;

    friend bool operator==(const WeightModel&, const WeightModel&) = default;

private:
    WeightModel(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}

    Kind kind_;
    double exponent_;
};

/// w(p) under the model. Throws MalformedInput when p <= 0.
Weight weight_of(const WeightModel& model, const Span& p);

/// Jobs in announcement order plus the declared notice level t.
struct Instance {
    std::vector<Job> jobs;
    Rational notice_level{0};
    WeightModel weights = WeightModel::proportional();

    /// Looks a job up by id; throws MalformedInput for unknown ids.
    [[nodiscard]] const Job& job(JobId id) const;
    [[nodiscard]] const Job* find(JobId id) const;

    /// Stable-sorts jobs by announcement time.
    void sort_by_announcement();
};

struct ScheduleEntry {
    JobId id = 0;
    TimePoint start;

    friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// Commitments (job, start) plus their total weight.
struct Schedule {
    std::vector<ScheduleEntry> entries;
    Weight value;

    /// Entries ordered by start time.
    [[nodiscard]] std::vector<ScheduleEntry> by_start() const;
    [[nodiscard]] std::vector<JobId> ids_by_start() const;
    [[nodiscard]] std::optional<TimePoint> start_of(JobId id) const;
};

/// Multiplies every time of every job by c > 0.
Instance scale_times(const Instance& instance, const Rational& c);

}  // namespace sched
