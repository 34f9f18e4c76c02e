// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [ID...]   (IDs 1, 2, 3a, 3b, 4 .. 8; default all)
#include "sched/adversaries.hpp"
#include "sched/algorithms.hpp"
#include "sched/charging.hpp"
#include "sched/generator.hpp"
#include "sched/validate.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace sched;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string q(const Rational& r) { return to_string(r); }

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

const std::vector<Rational> kNoticeLevels = {make_rational(1, 4), make_rational(1, 2), Rational(1)};

void add_time(Verdict& v, double elapsed, double limit) {
    std::ostringstream out;
    out.precision(3);
    out << "; " << elapsed << " s (limit " << limit << " s)";
    v.detail += out.str();
    if (elapsed >= limit) v.pass = false;
}

Verdict oracle_equivalence() {
    const auto t0 = Clock::now();
    int equal = 0;
    std::string first_mismatch;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Instance inst = random_case(10'000 + seed, 8, kNoticeLevels[seed % 3]);
        const Weight fast = optimal_offline(inst).schedule.value;
        const Weight oracle = brute_force_opt(inst).value;
        if (fast == oracle) {
            ++equal;
        } else if (first_mismatch.empty()) {
            first_mismatch = "; first mismatch seed " + std::to_string(10'000 + seed);
        }
    }
    Verdict v{equal == 500, std::to_string(equal) + "/500 equal" + first_mismatch};
    add_time(v, seconds_since(t0), 60);
    return v;
}

Verdict ratio_guarantee() {
    const auto t0 = Clock::now();
    int checked = 0;
    int violations = 0;
    std::optional<Rational> worst;
    std::string first;
    for (const Rational& t : kNoticeLevels) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const Instance inst = random_case(20'000 + seed, 10, t);
            const Rational alg = run_a_off(inst).schedule.value.exact();
            const Rational opt = optimal_offline(inst).schedule.value.exact();
            ++checked;
            if (alg * (2 * t + 1) < t * opt) {
                ++violations;
                if (first.empty()) first = "; first violation t=" + q(t) + " seed " + std::to_string(20'000 + seed);
            }
            if (opt > 0) {
                const Rational over_bound = alg / opt * (2 * t + 1) / t;
                if (!worst || over_bound < *worst) worst = over_bound;
            }
        }
    }
    Verdict v{violations == 0, std::to_string(checked) + " instances, " + std::to_string(violations) +
                                   " violations, min ratio/bound " + to_decimal(worst.value_or(Rational(1)), 6) + first};
    add_time(v, seconds_since(t0), 300);
    return v;
}

Verdict lower_bound_case(const Rational& t, const Rational& eps, const Rational& expected_opt) {
    const auto t0 = Clock::now();
    const auto adversary = proportional_lb_adversary(t, eps);
    AOff algorithm;
    const AdversaryOutcome out = run_against_adversary(algorithm, *adversary);
    const Rational alg = out.alg.exact();
    const Rational opt = out.opt.exact();
    const Rational bound = t / (2 * t + 1);
    const Rational ratio = out.ratio.exact();
    Verdict v;
    v.pass = alg == 1 && opt == expected_opt && ratio >= bound && ratio <= bound + eps &&
             validate_instance(out.instance).empty();
    v.detail = "t=" + q(t) + " eps=" + q(eps) + ": ALG=" + q(alg) + " OPT=" + q(opt) + " (expected " +
               q(expected_opt) + ", closed form (2t+1)/t-(2+t)gamma/t = " + q(lb_opt_value(t, eps)) +
               ") ratio=" + q(ratio) + " in [" + q(bound) + ", " + q(Rational(bound + eps)) + "]";
    add_time(v, seconds_since(t0), 1);
    return v;
}

Verdict unweighted_case() {
    const auto t0 = Clock::now();
    const auto adversary = unweighted_adversary(Rational(1), 50);
    AOff algorithm;
    const AdversaryOutcome out = run_against_adversary(algorithm, *adversary);
    Verdict v;
    v.pass = out.alg == Weight(Rational(1)) && out.opt == Weight(Rational(50)) &&
             out.ratio == Weight(make_rational(1, 50)) && validate_instance(out.instance).empty();
    v.detail = "ALG=" + out.alg.to_string() + " OPT=" + out.opt.to_string() + " ratio=" + out.ratio.to_string();
    add_time(v, seconds_since(t0), 1);
    return v;
}

Verdict c_benevolent_case() {
    const auto t0 = Clock::now();
    const auto adversary = c_benevolent_adversary(make_rational(1, 2), 100, make_rational(1, 10));
    AOff algorithm;
    const AdversaryOutcome out = run_against_adversary(algorithm, *adversary);
    const double ratio = out.ratio.approx();

    std::vector<BenevolenceSample> grid;
    for (long k = 1; k <= 20; ++k) {
        const Rational p1 = make_rational(k, 10);
        grid.push_back({p1, p1, p1 / 2});
        grid.push_back({p1, p1 + make_rational(1, 3), p1 / 4});
        grid.push_back({p1, p1 + 1, p1});
        grid.push_back({p1, 2 * p1, p1 / 3});
        grid.push_back({p1, p1 + 5, p1 / 2});
    }
    const auto violations = check_c_benevolent(out.instance.weights, grid);

    Verdict v;
    v.pass = std::abs(ratio - 0.01) <= 1e-6 && violations.empty() && grid.size() == 100;
    std::ostringstream detail;
    detail.precision(12);
    detail << "k=" << out.instance.weights.exponent() << " ratio=" << ratio << " |ratio-0.01|="
           << std::abs(ratio - 0.01) << " (tol 1e-6), " << grid.size() << "-triple grid: " << violations.size()
           << " violations";
    v.detail = detail.str();
    add_time(v, seconds_since(t0), 1);
    return v;
}

Verdict charging_soundness() {
    const auto t0 = Clock::now();
    int conserved = 0;
    int aggregate = 0;
    int warnings = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Rational& t = kNoticeLevels[seed % 3];
        const std::uint64_t instance_seed = 30'000 + seed;
        const Instance inst = random_case(instance_seed, 10, t);
        const Schedule alg = run_a_off(inst).schedule;
        const Schedule opt = optimal_offline(inst).schedule;
        const ChargeReport report = build_charging(inst, opt, alg);
        if (report.charged_total() == opt.value.exact()) ++conserved;
        for (const ClaimViolation& cv : check_claims(report, t)) {
            if (cv.claim == ClaimViolation::Claim::Aggregate || cv.claim == ClaimViolation::Claim::Total) {
                ++aggregate;
            }
            if (!cv.hard()) {
                ++warnings;
                std::cerr << "  warning " << to_string(cv.claim) << " job " << cv.job << ": " << q(cv.lhs) << " > "
                          << q(cv.rhs) << " (reproduce: random_case seed " << instance_seed << ", n <= 10, t=" << q(t)
                          << ")\n";
            }
        }
    }
    Verdict v{conserved == 200 && aggregate == 0, std::to_string(conserved) + "/200 conserve charge, " +
                                                      std::to_string(aggregate) + " aggregate violations, " +
                                                      std::to_string(warnings) + " per-set warnings logged"};
    add_time(v, seconds_since(t0), 120);
    return v;
}

Verdict scale_invariance() {
    const Rational c = make_rational(3, 7);
    int good = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Instance inst = random_case(40'000 + seed, 10, kNoticeLevels[seed % 3]);
        const auto first = run_a_off(inst);
        const auto again = run_a_off(inst);
        const auto scaled = run_a_off(scale_times(inst, c));
        const bool deterministic = trace_to_jsonl(first.trace) == trace_to_jsonl(again.trace);
        if (deterministic && scaled.schedule.ids_by_start() == first.schedule.ids_by_start() &&
            scaled.schedule.value.exact() == first.schedule.value.exact() * c) {
            ++good;
        }
    }
    return {good == 50, std::to_string(good) + "/50 deterministic, same id sequence, value scaled by exactly 3/7"};
}

Verdict asymptotic_trend() {
    std::vector<Rational> ratios;
    std::string detail;
    for (long den : {10, 100, 1000}) {
        const auto adversary = proportional_lb_adversary(Rational(1), make_rational(1, den));
        AOff algorithm;
        ratios.push_back(run_against_adversary(algorithm, *adversary).ratio.exact());
        detail += (detail.empty() ? "" : ", ") + std::string("eps=1/") + std::to_string(den) + ": " +
                  q(ratios.back()) + " (" + to_decimal(ratios.back(), 6) + ")";
    }
    const Rational third = make_rational(1, 3);
    const bool pass = ratios[0] > ratios[1] && ratios[1] > ratios[2] && ratios[2] > third;
    return {pass, detail + "; strictly decreasing and > 1/3"};
}

struct Criterion {
    std::string id;
    std::string name;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {"1", "oracle equivalence", oracle_equivalence},
        {"2", "t/(2t+1) guarantee of A_Off", ratio_guarantee},
        {"3a", "lower-bound adversary, t=1 eps=3/100, OPT=297/100",
         [] { return lower_bound_case(Rational(1), make_rational(3, 100), make_rational(297, 100)); }},
        {"3b", "lower-bound adversary, t=1/2 eps=1/100, OPT=199/50",
         [] { return lower_bound_case(make_rational(1, 2), make_rational(1, 100), make_rational(199, 50)); }},
        {"4", "unweighted adversary, t=1 N=50", unweighted_case},
        {"5", "c-benevolent adversary, t=1/2 eps=1/10 N=100", c_benevolent_case},
        {"6", "charging soundness", charging_soundness},
        {"7", "determinism and scale invariance", scale_invariance},
        {"8", "ratio trend as eps shrinks", asymptotic_trend},
    };

    std::vector<std::string> wanted(argv + 1, argv + argc);
    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " -- " << v.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
