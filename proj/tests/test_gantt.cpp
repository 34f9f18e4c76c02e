#include "sched/adversaries.hpp"
#include "sched/algorithms.hpp"
#include "sched/gantt.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sched;
using namespace sched::testing;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("empty schedule draws the axis only") {
    const std::string svg = gantt_svg(instance({}), {{"ALG", Schedule{}}});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count(svg, "class=\"axis\"") == 1);
    CHECK(count(svg, "<rect x=") == 0);
    CHECK(gantt_text(instance({}), {{"ALG", Schedule{}}}).find("(empty)") != std::string::npos);
}

TEST_CASE("lower-bound run renders both lanes deterministically") {
    const auto adversary = proportional_lb_adversary(Rational(1), make_rational(3, 100));
    AOff algorithm;
    const auto outcome = run_against_adversary(algorithm, *adversary);
    const std::vector<GanttLane> lanes{{"ALG", outcome.run.schedule}, {"OPT", outcome.opt_schedule}};
    const auto report = build_charging(outcome.instance, outcome.opt_schedule, outcome.run.schedule);
    GanttOptions options;
    options.charges = &report;

    const std::string svg = gantt_svg(outcome.instance, lanes, options);
    CHECK(svg == gantt_svg(outcome.instance, lanes, options));
    const std::size_t boxes = outcome.run.schedule.entries.size() + outcome.opt_schedule.entries.size();
    CHECK(count(svg, "<rect x=") == boxes);
    CHECK(count(svg, "class=\"announce\"") == boxes);
    CHECK(count(svg, "class=\"release\"") == boxes);
    CHECK(count(svg, "marker-end") == outcome.opt_schedule.entries.size());

    const std::string text = gantt_text(outcome.instance, lanes);
    CHECK(text.find("ALG  |") == 0);
    CHECK(text.find("job 1 [1/1, 2/1)") != std::string::npos);
    CHECK_THROWS_AS(gantt_text(outcome.instance, lanes, 0), MalformedInput);
}

TEST_CASE("labels are escaped") {
    const Instance inst = instance({job(0, "0", "0", "1", "1")});
    const std::string svg = gantt_svg(inst, {{"<a&b>", Schedule{{{0, q("0")}}, {}}}});
    CHECK(svg.find("&lt;a&amp;b&gt;") != std::string::npos);
}
