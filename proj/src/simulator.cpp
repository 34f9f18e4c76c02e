#include "sched/simulator.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sched {

std::string to_string(TraceEvent::Kind kind) {
    switch (kind) {
    case TraceEvent::Kind::Announce: return "announce";
    case TraceEvent::Kind::Start: return "start";
    case TraceEvent::Kind::Finish: return "finish";
    case TraceEvent::Kind::Replan: return "replan";
    case TraceEvent::Kind::Expire: return "expire";
    }
    return "unknown";
}

std::string trace_to_jsonl(const SimulationTrace& trace) {
    std::ostringstream out;
    for (const TraceEvent& e : trace.events) {
        Json line;
        line["time"] = rational_to_json(e.time);
        line["event"] = to_string(e.kind);
        switch (e.kind) {
        case TraceEvent::Kind::Announce:
            line["job"] = e.job;
            line["a"] = rational_to_json(e.announced.announce);
            line["r"] = rational_to_json(e.announced.release);
            line["p"] = rational_to_json(e.announced.processing);
            line["d"] = rational_to_json(e.announced.deadline);
            break;
        case TraceEvent::Kind::Replan:
            line["plan"] = Json::array();
            for (const PlanEntry& p : e.plan) {
                Json entry;
                entry["job"] = p.id;
                entry["start"] = rational_to_json(p.start);
                line["plan"].push_back(std::move(entry));
            }
            break;
        default:
            line["job"] = e.job;
            break;
        }
        out << line.dump() << '\n';
    }
    Json summary;
    summary["event"] = "end";
    summary["value"] = weight_to_json(trace.value);
    out << summary.dump() << '\n';
    return out.str();
}

std::vector<Job> StaticSource::poll(const View&) {
    if (delivered_) return {};
    delivered_ = true;
    return std::move(jobs_);
}

namespace {

struct Running {
    JobId id;
    TimePoint end;
};

class EventLoop {
public:
    EventLoop(AnnouncementSource& source, OnlineAlgorithm& algorithm, const Rational& notice_level,
              const WeightModel& weights)
        : source_(source), algorithm_(algorithm) {
        result_.instance.notice_level = notice_level;
        result_.instance.weights = weights;
        result_.trace.value = weights.zero();
        result_.schedule.value = weights.zero();
    }

    SimulationResult run() {
        poll_source();
        while (auto next = next_event_time()) {
            if (started_ && *next <= now_) {
                throw std::logic_error("simulator: event time did not advance");
            }
            now_ = *next;
            started_ = true;
            process_instant();
        }
        return std::move(result_);
    }

private:
    const WeightModel& weights() const { return result_.instance.weights; }

    void emit(TraceEvent::Kind kind, JobId job) {
        result_.trace.events.push_back(TraceEvent{kind, now_, job, {}, {}});
    }

    MachineState state() const {
        MachineState s;
        s.now = now_;
        s.busy_until = running_ ? running_->end : now_;
        if (running_) s.running = running_->id;
        s.pending = pending_;
        s.plan = &plan_;
        s.weights = weights();
        return s;
    }

    std::optional<TimePoint> next_event_time() const {
        std::optional<TimePoint> best;
        auto consider = [&](const TimePoint& t) {
            if (started_ && t <= now_) return;
            if (!best || t < *best) best = t;
        };
        if (running_) consider(running_->end);
        for (const PlanEntry& p : plan_) consider(p.start);
        for (const Job& j : held_) consider(j.announce);
        for (const Job& j : pending_) consider(j.release);
        return best;
    }

    void process_instant() {
        if (running_ && running_->end == now_) {
            emit(TraceEvent::Kind::Finish, running_->id);
            running_.reset();
            poll_source();
        }

        for (auto it = pending_.begin(); it != pending_.end();) {
            if (now_ + it->processing > it->deadline) {
                emit(TraceEvent::Kind::Expire, it->id);
                it = pending_.erase(it);
            } else {
                ++it;
            }
        }

        bool announced = false;
        bool woke = false;
        while (true) {
            if (execute_due_start()) poll_source();

            std::vector<Job> batch;
            for (auto it = held_.begin(); it != held_.end();) {
                if (it->announce == now_) {
                    batch.push_back(std::move(*it));
                    it = held_.erase(it);
                } else {
                    ++it;
                }
            }
            if (!batch.empty()) {
                for (const Job& j : batch) {
                    result_.trace.events.push_back(TraceEvent{TraceEvent::Kind::Announce, now_, j.id, {}, j});
                    pending_.push_back(j);
                    result_.instance.jobs.push_back(j);
                }
                Plan next = algorithm_.on_announce(state(), batch);
                check_plan(next);
                plan_ = std::move(next);
                result_.trace.events.push_back(TraceEvent{TraceEvent::Kind::Replan, now_, 0, plan_, {}});
                announced = true;
                poll_source();
                continue;
            }
            if (!announced && !woke) {
                woke = true;
                Plan next = algorithm_.on_wake(state());
                check_plan(next);
                if (next != plan_) {
                    plan_ = std::move(next);
                    result_.trace.events.push_back(TraceEvent{TraceEvent::Kind::Replan, now_, 0, plan_, {}});
                    continue;
                }
            }
            break;
        }
    }

    bool execute_due_start() {
        auto due = std::find_if(plan_.begin(), plan_.end(), [&](const PlanEntry& p) { return p.start == now_; });
        if (due == plan_.end()) return false;
        if (running_) throw std::logic_error("simulator: planned start while busy");
        auto job = std::find_if(pending_.begin(), pending_.end(), [&](const Job& j) { return j.id == due->id; });
        if (job == pending_.end()) throw std::logic_error("simulator: planned job is no longer pending");

        running_ = Running{job->id, now_ + job->processing};
        result_.schedule.entries.push_back({job->id, now_});
        const Weight w = weight_of(weights(), job->processing);
        result_.schedule.value += w;
        result_.trace.value += w;
        emit(TraceEvent::Kind::Start, job->id);
        pending_.erase(job);
        plan_.erase(due);
        return true;
    }

    void check_plan(const Plan& plan) const {
        const TimePoint free_from = running_ ? running_->end : now_;
        std::set<JobId> ids;
        std::vector<std::pair<TimePoint, TimePoint>> intervals;
        for (const PlanEntry& e : plan) {
            const std::string where = algorithm_.name() + " plan entry (job " + std::to_string(e.id) + ", start " +
                                      to_string(e.start) + ") at time " + to_string(now_) + ": ";
            auto job = std::find_if(pending_.begin(), pending_.end(), [&](const Job& j) { return j.id == e.id; });
            if (job == pending_.end()) {
                throw ContractViolation(where + "job is not announced and pending");
            }
            if (!ids.insert(e.id).second) throw ContractViolation(where + "job planned twice");
            if (e.start < now_) throw ContractViolation(where + "start lies in the past");
            if (e.start < free_from) throw ContractViolation(where + "start lies inside the running job");
            if (e.start < job->release) throw ContractViolation(where + "start before release");
            if (e.start + job->processing > job->deadline) throw ContractViolation(where + "misses its deadline");
            intervals.emplace_back(e.start, e.start + job->processing);
        }
        std::sort(intervals.begin(), intervals.end());
        for (std::size_t k = 1; k < intervals.size(); ++k) {
            if (intervals[k - 1].second > intervals[k].first) {
                throw ContractViolation(algorithm_.name() + " plan at time " + to_string(now_) +
                                        ": overlapping entries starting at " + to_string(intervals[k - 1].first) +
                                        " and " + to_string(intervals[k].first));
            }
        }
    }

    void poll_source() {
        AnnouncementSource::View view{now_, result_.schedule.entries};
        for (Job& j : source_.poll(view)) {
            const std::string who = "job " + std::to_string(j.id) + ": ";
            if (j.announce < now_) throw MalformedInput(who + "announced after its announcement time");
            if (!(j.processing > 0)) throw MalformedInput(who + "processing time must be positive");
            if (j.release < j.announce) throw MalformedInput(who + "released before it is announced");
            if (j.release + j.processing > j.deadline) throw MalformedInput(who + "r + p exceeds d");
            if (j.notice() < result_.instance.notice_level * j.processing) {
                throw MalformedInput(who + "violates " + to_string(result_.instance.notice_level) +
                                     "-advance-notice (r - a = " + to_string(j.notice()) + ", p = " +
                                     to_string(j.processing) + ")");
            }
            if (!ids_.insert(j.id).second) throw MalformedInput(who + "duplicate id");
            held_.push_back(std::move(j));
        }
        std::stable_sort(held_.begin(), held_.end(),
                         [](const Job& a, const Job& b) { return a.announce < b.announce; });
    }

    AnnouncementSource& source_;
    OnlineAlgorithm& algorithm_;

    TimePoint now_{0};
    bool started_ = false;
    std::vector<Job> held_;
    std::vector<Job> pending_;
    Plan plan_;
    std::optional<Running> running_;
    std::set<JobId> ids_;

    SimulationResult result_;
};

}  // namespace

SimulationResult simulate(AnnouncementSource& source, OnlineAlgorithm& algorithm, const Rational& notice_level,
                          const WeightModel& weights) {
    return EventLoop(source, algorithm, notice_level, weights).run();
}

SimulationResult simulate(const Instance& instance, OnlineAlgorithm& algorithm) {
    StaticSource source(instance.jobs);
    return simulate(source, algorithm, instance.notice_level, instance.weights);
}

}  // namespace sched
