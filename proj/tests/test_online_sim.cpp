#include "sched/algorithms.hpp"
#include "sched/generator.hpp"
#include "sched/validate.hpp"
#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace sched;
using namespace sched::testing;

namespace {

/// Returns whatever the callback produces; used to provoke contract errors.
class Scripted final : public OnlineAlgorithm {
public:
    using Fn = std::function<Plan(const MachineState&)>;
    explicit Scripted(Fn fn) : fn_(std::move(fn)) {}
    Plan on_announce(const MachineState& s, std::span<const Job>) override { return fn_(s); }
    Plan on_wake(const MachineState& s) override { return *s.plan; }
    [[nodiscard]] std::string name() const override { return "scripted"; }

private:
    Fn fn_;
};

Instance random_case(std::uint64_t seed, std::size_t max_jobs, const Rational& t) {
    RandomInstanceConfig config;
    config.jobs = 1 + seed % max_jobs;
    config.notice_level = t;
    config.horizon = Rational(static_cast<long>(config.jobs), 2) + 2;
    config.processing = {make_rational(1, 10), Rational(2)};
    config.slack = {Rational(0), make_rational(3, 2)};
    config.seed = seed;
    return random_instance(config);
}

void check_trace_invariants(const Instance& inst, const SimulationResult& run) {
    std::map<JobId, TimePoint> started;
    std::map<JobId, TimePoint> announced;
    std::optional<JobId> running;
    TimePoint last(0);
    for (const TraceEvent& e : run.trace.events) {
        CHECK(e.time >= last);
        last = e.time;
        switch (e.kind) {
        case TraceEvent::Kind::Announce:
            announced[e.job] = e.time;
            CHECK(e.announced.announce == e.time);
            break;
        case TraceEvent::Kind::Start:
            CHECK_FALSE(running.has_value());
            CHECK(announced.count(e.job) == 1);
            running = e.job;
            started[e.job] = e.time;
            break;
        case TraceEvent::Kind::Finish:
            REQUIRE(running.has_value());
            CHECK(*running == e.job);
            CHECK(e.time == started[e.job] + inst.job(e.job).processing);
            running.reset();
            break;
        case TraceEvent::Kind::Replan:
            for (const PlanEntry& p : e.plan) {
                REQUIRE(announced.count(p.id) == 1);
                CHECK(announced[p.id] <= e.time);
                CHECK(p.start >= e.time);
            }
            break;
        case TraceEvent::Kind::Expire:
            CHECK(started.count(e.job) == 0);
            break;
        }
    }
    CHECK_FALSE(running.has_value());
    CHECK(is_feasible_schedule(inst, run.schedule));
    CHECK(schedule_value(inst, run.schedule) == run.trace.value);
    CHECK(run.schedule.value == run.trace.value);
}

}  // namespace

TEST_CASE("simulate basics") {
    SUBCASE("empty instance") {
        const auto run = run_a_off(instance({}, "1"));
        CHECK(run.trace.events.empty());
        CHECK(run.schedule.value == Weight(Rational(0)));
    }
    SUBCASE("single job under A_Off, golden trace") {
        const Instance inst = instance({job(0, "0", "1", "1", "2")}, "1");
        const auto run = run_a_off(inst);
        CHECK(run.schedule.entries == std::vector<ScheduleEntry>{{0, q("1")}});
        CHECK(run.trace.value == Weight(Rational(1)));
        check_trace_invariants(inst, run);
        CHECK(trace_to_jsonl(run.trace) ==
              R"({"time":{"num":0,"den":1},"event":"announce","job":0,"a":{"num":0,"den":1},"r":{"num":1,"den":1},"p":{"num":1,"den":1},"d":{"num":2,"den":1}}
{"time":{"num":0,"den":1},"event":"replan","plan":[{"job":0,"start":{"num":1,"den":1}}]}
{"time":{"num":1,"den":1},"event":"start","job":0}
{"time":{"num":2,"den":1},"event":"finish","job":0}
{"event":"end","value":{"num":1,"den":1}}
)");
    }
    SUBCASE("single job value is w(p) for both algorithms") {
        const Instance inst = instance({job(4, "0", "1/2", "3/2", "5")}, "1/3");
        CHECK(run_a_off(inst).trace.value == Weight(make_rational(3, 2)));
        CHECK(run_greedy(inst).trace.value == Weight(make_rational(3, 2)));
    }
    SUBCASE("expired jobs are reported") {
        // Job 1 can only run in [0,1) but job 0 occupies [0,2) in the greedy run.
        const Instance inst = instance({job(0, "0", "0", "2", "2"), job(1, "0", "0", "1", "1")});
        const auto run = run_greedy(inst);
        CHECK(run.schedule.ids_by_start() == std::vector<JobId>{0});
        const bool expired = std::any_of(run.trace.events.begin(), run.trace.events.end(), [](const TraceEvent& e) {
            return e.kind == TraceEvent::Kind::Expire && e.job == 1;
        });
        CHECK(expired);
        check_trace_invariants(inst, run);
    }
}

TEST_CASE("a_off_replan") {
    const auto prop = WeightModel::proportional();
    CHECK(a_off_replan({}, q("0"), q("0"), prop).empty());

    const std::vector one{job(0, "0", "3", "2", "10")};
    CHECK(a_off_replan(one, q("4"), q("5"), prop) == Plan{{0, q("5")}});

    const std::vector two{job(0, "0", "0", "2", "2"), job(1, "0", "0", "1", "4")};
    const Plan plan = a_off_replan(two, q("0"), q("0"), prop);
    CHECK(plan == Plan{{0, q("0")}, {1, q("2")}});

    // Clipping to L drops jobs that no longer fit.
    const std::vector tight{job(0, "0", "0", "2", "3"), job(1, "0", "0", "1", "9")};
    CHECK(a_off_replan(tight, q("2"), q("2"), prop) == Plan{{1, q("2")}});

    const std::vector future{job(0, "5", "5", "1", "9")};
    CHECK_THROWS_AS(a_off_replan(future, q("1"), q("1"), prop), ContractViolation);
}

TEST_CASE("greedy takes the heaviest startable job") {
    const Instance inst = instance({job(0, "0", "0", "1", "1"), job(1, "0", "0", "2", "2")});
    const auto run = run_greedy(inst);
    CHECK(run.schedule.ids_by_start() == std::vector<JobId>{1});
    CHECK(run.trace.value == Weight(Rational(2)));
    CHECK(run_greedy(instance({})).trace.value == Weight(Rational(0)));

    // Ties go to the lower id; later releases wake the machine.
    const Instance later = instance({job(2, "0", "1", "1", "3"), job(1, "0", "1", "1", "3")});
    CHECK(run_greedy(later).schedule.entries == std::vector<ScheduleEntry>{{1, q("1")}, {2, q("2")}});
}

TEST_CASE("plans that break the contract abort the simulation") {
    const Instance inst = instance({job(0, "0", "0", "2", "10"), job(1, "0", "0", "1", "10"),
                                    job(2, "1", "1", "1", "10")});
    auto expect_violation = [&](Scripted::Fn fn, const char* fragment) {
        Scripted algorithm(std::move(fn));
        CHECK_THROWS_WITH_AS(simulate(inst, algorithm), doctest::Contains(fragment), ContractViolation);
    };
    expect_violation([](const MachineState&) { return Plan{{0, q("0")}, {1, q("1")}}; }, "overlapping");
    expect_violation([](const MachineState& s) { return s.now == 0 ? Plan{{0, q("0")}} : Plan{{1, q("1")}}; },
                     "inside the running job");
    expect_violation([](const MachineState& s) { return s.now == 0 ? Plan{{0, q("5")}} : Plan{{0, q("0")}}; },
                     "in the past");
    expect_violation([](const MachineState&) { return Plan{{2, q("3")}}; }, "not announced");
    expect_violation([](const MachineState&) { return Plan{{0, q("9")}}; }, "deadline");
    expect_violation([](const MachineState&) { return Plan{{1, q("3")}, {1, q("5")}}; }, "twice");
}

TEST_CASE("simultaneous announcements arrive as one batch") {
    const Instance inst = instance({job(0, "0", "1", "1", "5"), job(1, "0", "1", "1", "5"),
                                    job(2, "1/2", "1", "1/2", "5")});
    int calls = 0;
    std::vector<std::size_t> sizes;
    Scripted algorithm([&](const MachineState& s) {
        ++calls;
        sizes.push_back(s.pending.size());
        return Plan{};
    });
    simulate(inst, algorithm);
    CHECK(calls == 2);
    CHECK(sizes == std::vector<std::size_t>{2, 3});
}

TEST_CASE("A_Off never beats the offline optimum and meets t/(2t+1)") {
    for (std::uint64_t seed = 0; seed < 240; ++seed) {
        const Rational t = seed % 3 == 0 ? make_rational(1, 4) : seed % 3 == 1 ? make_rational(1, 2) : Rational(1);
        const Instance inst = random_case(seed, 8, t);
        const auto run = run_a_off(inst);
        const Rational opt = brute_force_opt(inst).value.exact();
        const Rational alg = run.trace.value.exact();
        INFO("seed " << seed);
        CHECK(alg <= opt);
        CHECK(alg * (2 * t + 1) >= t * opt);
        check_trace_invariants(inst, run);

        const auto greedy = run_greedy(inst);
        CHECK(greedy.trace.value.exact() <= opt);
        check_trace_invariants(inst, greedy);
    }
}

TEST_CASE("runs are deterministic and scale invariant") {
    const Rational c = make_rational(3, 7);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Instance inst = random_case(seed + 77, 10, make_rational(1, 2));
        const auto first = run_a_off(inst);
        const auto second = run_a_off(inst);
        CHECK(trace_to_jsonl(first.trace) == trace_to_jsonl(second.trace));

        const auto scaled = run_a_off(scale_times(inst, c));
        CHECK(scaled.schedule.ids_by_start() == first.schedule.ids_by_start());
        CHECK(scaled.trace.value.exact() == first.trace.value.exact() * c);
    }
}
