#pragma once

#include "sched/model.hpp"
#include "sched/json_io.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sched {

/// An algorithm broke the simulator's contract (infeasible plan, start in
/// the past, reference to an unannounced job, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct PlanEntry {
    JobId id = 0;
    TimePoint start;

    friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

/// Intended future starts. Replaced wholesale each time an algorithm answers.
using Plan = std::vector<PlanEntry>;

/// What an online algorithm can see when called.
struct MachineState {
    TimePoint now;
    /// End of the running job, or now when idle.
    TimePoint busy_until;
    std::optional<JobId> running;
    /// Announced jobs that have neither started nor expired, in announcement order.
    std::span<const Job> pending;
    const Plan* plan = nullptr;
    WeightModel weights = WeightModel::proportional();
};

/// Online decision maker. Both callbacks return the full new plan; returning
/// *state.plan keeps the current one.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;
    /// Every job announced at state.now, delivered as one batch.
    virtual Plan on_announce(const MachineState& state, std::span<const Job> batch) = 0;
    /// Called at event times without announcements (finishes, releases).
    virtual Plan on_wake(const MachineState& state) = 0;
    [[nodiscard]] virtual std::string name() const = 0;
};

struct TraceEvent {
    enum class Kind { Announce, Start, Finish, Replan, Expire };

    Kind kind;
    TimePoint time;
    JobId job = 0;   // unused for Replan
    Plan plan;       // Replan only
    Job announced;   // Announce only
};

std::string to_string(TraceEvent::Kind kind);

struct SimulationTrace {
    std::vector<TraceEvent> events;
    Weight value;
};

/// One JSON object per line with a fixed field order:
/// {"time":{..},"event":"start","job":3,"start":{..}} etc.
std::string trace_to_jsonl(const SimulationTrace& trace);

/// Adaptive source of jobs. Called at time 0 and then after every change
/// (start, finish, announcement) at every event time, so it may react to a
/// start at the same instant. Returned jobs must have a >= view.now; jobs
/// with a > now are held and announced at their a.
class AnnouncementSource {
public:
    struct View {
        TimePoint now;
        /// Starts executed so far, in execution order.
        std::span<const ScheduleEntry> starts;
    };

    virtual ~AnnouncementSource() = default;
    virtual std::vector<Job> poll(const View& view) = 0;
};

/// Replays a fixed job list (sorted by announcement).
class StaticSource final : public AnnouncementSource {
public:
    explicit StaticSource(std::vector<Job> jobs) : jobs_(std::move(jobs)) {}
    std::vector<Job> poll(const View& view) override;

private:
    std::vector<Job> jobs_;
    bool delivered_ = false;
};

struct SimulationResult {
    SimulationTrace trace;
    Schedule schedule;
    /// Every job that was announced, in announcement order.
    Instance instance;
};

/// Continuous-time event loop. At each distinct event time the order is:
/// finish the running job if it ends now, expire pending jobs with
/// now + p > d, execute the planned start due now, then deliver the batch of
/// announcements due now and apply the returned plan (executing any start it
/// schedules for now). When nothing is announced at an event time the
/// algorithm gets on_wake instead. Stops when no events remain.
///
/// Throws ContractViolation when a plan is infeasible, and MalformedInput when
/// a source emits a job that violates its own notice level or arrives late.
SimulationResult simulate(AnnouncementSource& source, OnlineAlgorithm& algorithm, const Rational& notice_level,
                          const WeightModel& weights);
SimulationResult simulate(const Instance& instance, OnlineAlgorithm& algorithm);

}  // namespace sched
