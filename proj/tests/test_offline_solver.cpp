#include "sched/generator.hpp"
#include "sched/offline_solver.hpp"
#include "sched/validate.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace sched;
using namespace sched::testing;

namespace {

std::vector<ScheduleEntry> sorted_entries(const Schedule& s) {
    auto v = s.entries;
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return v;
}

std::vector<JobId> id_set(const Schedule& s) {
    std::vector<JobId> ids;
    for (const auto& e : sorted_entries(s)) ids.push_back(e.id);
    return ids;
}

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

}  // namespace

TEST_CASE("earliest_start_schedule") {
    const auto prop = WeightModel::proportional();
    SUBCASE("empty order") {
        auto s = earliest_start_schedule({}, q("0"), prop);
        REQUIRE(s);
        CHECK(s->entries.empty());
        CHECK(s->value == Weight(Rational(0)));
    }
    SUBCASE("single job starts at its release") {
        const std::vector jobs{job(0, "0", "1", "2", "5")};
        auto s = earliest_start_schedule(jobs, q("0"), prop);
        REQUIRE(s);
        CHECK(s->entries == std::vector<ScheduleEntry>{{0, q("1")}});
    }
    SUBCASE("chain") {
        const std::vector jobs{job(0, "0", "0", "1", "1"), job(1, "0", "0", "2", "4")};
        auto s = earliest_start_schedule(jobs, q("0"), prop);
        REQUIRE(s);
        CHECK(s->entries == std::vector<ScheduleEntry>{{0, q("0")}, {1, q("1")}});
        CHECK(s->value == Weight(Rational(3)));
    }
    SUBCASE("floor delays the first job and can make the order infeasible") {
        const std::vector jobs{job(0, "0", "0", "1", "3"), job(1, "0", "0", "2", "4")};
        auto s = earliest_start_schedule(jobs, q("1/2"), prop);
        REQUIRE(s);
        CHECK(s->entries == std::vector<ScheduleEntry>{{0, q("1/2")}, {1, q("3/2")}});
        CHECK_FALSE(earliest_start_schedule(jobs, q("2"), prop));
    }
}

TEST_CASE("brute_force_opt") {
    CHECK(brute_force_opt(instance({})).value == Weight(Rational(0)));
    const Instance two = instance({job(0, "0", "0", "1", "1"), job(1, "0", "0", "2", "4")});
    const Schedule best = brute_force_opt(two);
    CHECK(best.value == Weight(Rational(3)));
    CHECK(sorted_entries(best) == std::vector<ScheduleEntry>{{0, q("0")}, {1, q("1")}});

    Instance nine;
    for (int k = 0; k < 9; ++k) nine.jobs.push_back(Job{k, 0, 0, 1, 100});
    CHECK_THROWS_WITH_AS(brute_force_opt(nine), doctest::Contains("8-job guard"), MalformedInput);
}

TEST_CASE("optimal_offline basics") {
    SUBCASE("empty instance explores the root only") {
        const auto result = optimal_offline(instance({}));
        CHECK(result.schedule.value == Weight(Rational(0)));
        CHECK(result.stats.nodes == 1);
    }
    SUBCASE("single job runs at its release") {
        const auto result = optimal_offline(instance({job(5, "0", "3", "7/2", "9")}));
        CHECK(result.schedule.entries == std::vector<ScheduleEntry>{{5, q("3")}});
        CHECK(result.schedule.value == Weight(make_rational(7, 2)));
    }
    SUBCASE("unweighted prefers more jobs") {
        const Instance inst = instance(
            {job(0, "0", "0", "3", "3"), job(1, "0", "0", "1", "1"), job(2, "0", "1", "1", "2")}, "0",
            WeightModel::unweighted());
        const auto result = optimal_offline(inst);
        CHECK(result.schedule.value == Weight(Rational(2)));
        CHECK(id_set(result.schedule) == std::vector<JobId>{1, 2});
    }
}

TEST_CASE("tie-break: smallest id set, then earliest start vector") {
    SUBCASE("equal value, disjoint alternatives") {
        const Instance inst = instance({job(3, "0", "0", "1", "1"), job(1, "0", "0", "1", "1")});
        CHECK(id_set(optimal_offline(inst).schedule) == std::vector<JobId>{1});
        CHECK(id_set(brute_force_opt(inst)) == std::vector<JobId>{1});
    }
    SUBCASE("same set, two orders") {
        const Instance inst = instance({job(0, "0", "0", "1", "3"), job(1, "0", "0", "1", "3")});
        const auto result = optimal_offline(inst);
        CHECK(sorted_entries(result.schedule) == std::vector<ScheduleEntry>{{0, q("0")}, {1, q("1")}});
    }
    SUBCASE("later id first when the deadline forces it") {
        const Instance inst = instance({job(0, "0", "0", "1", "3"), job(1, "0", "0", "1", "1")});
        CHECK(sorted_entries(optimal_offline(inst).schedule) ==
              std::vector<ScheduleEntry>{{0, q("1")}, {1, q("0")}});
    }
}

TEST_CASE("optimal_offline matches the brute-force oracle schedule for schedule") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Rational t = seed % 3 == 0 ? make_rational(1, 4) : seed % 3 == 1 ? make_rational(1, 2) : Rational(1);
        const Instance inst = random_case(seed, 8, t);
        const Schedule oracle = brute_force_opt(inst);
        const auto result = optimal_offline(inst);
        INFO("seed " << seed);
        CHECK(result.schedule.value == oracle.value);
        CHECK(sorted_entries(result.schedule) == sorted_entries(oracle));
        CHECK(is_feasible_schedule(inst, result.schedule));
        CHECK(schedule_value(inst, result.schedule) == result.schedule.value);
    }
}

TEST_CASE("optimal_offline agrees with the oracle under unweighted weights") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_case(seed + 1000, 8, Rational(1));
        inst.weights = WeightModel::unweighted();
        INFO("seed " << seed);
        CHECK(sorted_entries(optimal_offline(inst).schedule) == sorted_entries(brute_force_opt(inst)));
    }
}

TEST_CASE("value is monotone under job addition") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance inst = random_case(seed + 500, 10, make_rational(1, 2));
        Instance prefix{{}, inst.notice_level, inst.weights};
        Weight previous(Rational(0));
        for (const Job& j : inst.jobs) {
            prefix.jobs.push_back(j);
            const Weight v = optimal_offline(prefix).schedule.value;
            CHECK(v >= previous);
            previous = v;
        }
    }
}

TEST_CASE("scaling all times scales the value and keeps the chosen set") {
    const Rational c = make_rational(3, 7);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance inst = random_case(seed + 2000, 10, Rational(1));
        const auto base = optimal_offline(inst);
        const auto scaled = optimal_offline(scale_times(inst, c));
        CHECK(scaled.schedule.value.exact() == base.schedule.value.exact() * c);
        CHECK(id_set(scaled.schedule) == id_set(base.schedule));
    }
}

TEST_CASE("node limit stops the search") {
    const Instance inst = random_case(3, 8, Rational(1));
    SolverOptions options;
    options.node_limit = 1;
    const auto result = optimal_offline(inst, options);
    CHECK(result.stats.node_limit_hit);
    CHECK(result.stats.nodes == 1);
    CHECK(is_feasible_schedule(inst, result.schedule));

    setenv("SCHED_SOLVER_NODE_LIMIT", "25", 1);
    CHECK(solver_options_from_environment().node_limit == 25u);
    setenv("SCHED_SOLVER_NODE_LIMIT", "many", 1);
    CHECK_THROWS_AS(solver_options_from_environment(), MalformedInput);
    unsetenv("SCHED_SOLVER_NODE_LIMIT");
    CHECK_FALSE(solver_options_from_environment().node_limit.has_value());
}
