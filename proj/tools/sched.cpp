// Command-line front end: solve, simulate, adversary, sweep, gantt, charge.
#include "sched/adversaries.hpp"
#include "sched/algorithms.hpp"
#include "sched/charging.hpp"
#include "sched/gantt.hpp"
#include "sched/json_io.hpp"
#include "sched/offline_solver.hpp"
#include "sched/sweep.hpp"
#include "sched/validate.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <memory>

using namespace sched;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct Options {
    std::string instance;
    std::string algo = "a_off";
    std::vector<std::string> t{"1"};
    std::vector<std::string> eps{"1/100"};
    std::int64_t n = 8;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string kind = "proportional";
    std::string alg_schedule_out;
    std::string opt_schedule_out;
    std::vector<std::string> schedules;
    bool text = false;
    bool charges = false;
    bool adversary_sweep = false;
    bool no_timing = false;
    std::size_t threads = 0;
};

Rational single(const std::vector<std::string>& values, const char* name) {
    if (values.size() != 1) throw CLI::ValidationError(std::string("--") + name, "expects a single value here");
    return parse_rational(values.front());
}

std::vector<Rational> list(const std::vector<std::string>& values) {
    std::vector<Rational> out;
    for (const std::string& v : values) out.push_back(parse_rational(v));
    return out;
}

std::string exact_and_decimal(const Weight& w) {
    if (w.is_exact()) return to_string(w.exact()) + " (" + to_decimal(w.exact()) + ")";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", w.approx());
    return buf;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

Instance load_instance(const std::string& path) {
    if (path.empty()) throw CLI::RequiredError("--instance");
    Instance inst = instance_from_json(read_json_file(path));
    const auto violations = validate_instance(inst);
    if (!violations.empty()) {
        std::string message = path + ": invalid instance";
        for (const Violation& v : violations) message += "\n  " + v.message;
        throw MalformedInput(message);
    }
    return inst;
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, const SolverOptions& solver) {
    if (name == "a_off") return std::make_unique<AOff>(solver);
    if (name == "greedy") return std::make_unique<Greedy>();
    throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
}

std::unique_ptr<Adversary> make_adversary(const Options& o) {
    const Rational t = single(o.t, "t");
    if (o.kind == "proportional") return proportional_lb_adversary(t, single(o.eps, "eps"));
    if (o.kind == "unweighted") return unweighted_adversary(t, o.n);
    if (o.kind == "c-benevolent") return c_benevolent_adversary(t, o.n, single(o.eps, "eps"));
    throw CLI::ValidationError("--kind", "unknown adversary '" + o.kind + "'");
}

std::string target_text(const Adversary& adversary) {
    return exact_and_decimal(adversary.target_ratio());
}

void warn_node_limit(const SolverStats& stats) {
    if (stats.node_limit_hit) {
        std::cerr << "warning: SCHED_SOLVER_NODE_LIMIT reached after " << stats.nodes
                  << " nodes; the offline value is only a lower bound\n";
    }
}

int cmd_solve(const Options& o) {
    const Instance inst = load_instance(o.instance);
    const OfflineResult result = optimal_offline(inst, solver_options_from_environment());
    warn_node_limit(result.stats);
    if (!is_feasible_schedule(inst, result.schedule)) throw std::logic_error("solver returned an infeasible schedule");
    std::cout << "value " << exact_and_decimal(result.schedule.value) << "\n";
    for (const ScheduleEntry& e : result.schedule.by_start()) {
        std::cout << "  job " << e.id << " start " << to_string(e.start) << "\n";
    }
    std::cout << "nodes " << result.stats.nodes << " prunes " << result.stats.prunes << "\n";
    if (!o.out.empty()) write_text_file(o.out, schedule_to_json(inst, result.schedule).dump(2) + "\n");
    return kOk;
}

int cmd_simulate(const Options& o) {
    const Instance inst = load_instance(o.instance);
    auto algorithm = make_algorithm(o.algo, solver_options_from_environment());
    const SimulationResult run = simulate(inst, *algorithm);
    emit(o.out, trace_to_jsonl(run.trace));
    if (!o.alg_schedule_out.empty()) {
        write_text_file(o.alg_schedule_out, schedule_to_json(inst, run.schedule).dump(2) + "\n");
    }
    std::cerr << algorithm->name() << " value " << exact_and_decimal(run.schedule.value) << "\n";
    return kOk;
}

int cmd_adversary(const Options& o) {
    const SolverOptions solver = solver_options_from_environment();
    auto adversary = make_adversary(o);
    auto algorithm = make_algorithm(o.algo, solver);
    const AdversaryOutcome outcome = run_against_adversary(*algorithm, *adversary, solver);
    warn_node_limit(outcome.opt_stats);
    std::cout << "adversary " << adversary->name() << " vs " << algorithm->name() << "\n";
    std::cout << "jobs " << outcome.instance.jobs.size() << "\n";
    std::cout << "ALG " << exact_and_decimal(outcome.alg) << "\n";
    std::cout << "OPT " << exact_and_decimal(outcome.opt) << "\n";
    if (outcome.unbounded) {
        std::cout << "ratio unbounded (algorithm earned nothing)\n";
    } else {
        std::cout << "ratio " << exact_and_decimal(outcome.ratio) << "\n";
    }
    std::cout << "target " << target_text(*adversary) << "\n";
    if (!o.out.empty()) write_text_file(o.out, instance_to_json(outcome.instance).dump(2) + "\n");
    if (!o.alg_schedule_out.empty()) {
        write_text_file(o.alg_schedule_out, schedule_to_json(outcome.instance, outcome.run.schedule).dump(2) + "\n");
    }
    if (!o.opt_schedule_out.empty()) {
        write_text_file(o.opt_schedule_out, schedule_to_json(outcome.instance, outcome.opt_schedule).dump(2) + "\n");
    }
    return kOk;
}

int cmd_sweep(const Options& o) {
    const SolverOptions solver = solver_options_from_environment();
    std::vector<SweepRow> rows;
    if (o.adversary_sweep) {
        rows = run_adversary_sweep(list(o.t), list(o.eps), solver, !o.no_timing);
    } else {
        if (o.n < 1) throw CLI::ValidationError("--n", "must be at least 1");
        SweepConfig config;
        config.notice_levels = list(o.t);
        config.trials = o.trials;
        config.seed = o.seed;
        config.max_jobs = static_cast<std::size_t>(o.n);
        config.threads = o.threads;
        config.record_time = !o.no_timing;
        config.solver = solver;
        rows = run_sweep(config);
    }
    emit(o.out, sweep_csv(rows));
    std::cerr << summary_text(summarize(rows));
    return kOk;
}

int cmd_gantt(const Options& o) {
    if (o.schedules.empty() || o.schedules.size() > 2) {
        throw CLI::ValidationError("--schedule", "give one or two schedule files (ALG first, OPT second)");
    }
    Instance jobs;
    std::vector<GanttLane> lanes;
    const char* names[] = {"ALG", "OPT"};
    for (std::size_t k = 0; k < o.schedules.size(); ++k) {
        ScheduleFile file = schedule_from_json(read_json_file(o.schedules[k]));
        for (const Job& j : file.jobs.jobs) {
            if (const Job* known = jobs.find(j.id)) {
                if (!(*known == j)) throw MalformedInput(o.schedules[k] + ": job " + std::to_string(j.id) +
                                                         " differs from the other schedule file");
            } else {
                jobs.jobs.push_back(j);
            }
        }
        jobs.weights = file.jobs.weights;
        if (!is_feasible_schedule(file.jobs, file.schedule)) {
            throw MalformedInput(o.schedules[k] + ": schedule is infeasible");
        }
        lanes.push_back({names[k], std::move(file.schedule)});
    }
    if (o.text) {
        emit(o.out, gantt_text(jobs, lanes));
        return kOk;
    }
    GanttOptions options;
    ChargeReport report;
    if (o.charges) {
        if (lanes.size() != 2) throw CLI::ValidationError("--charges", "needs both ALG and OPT schedules");
        jobs.notice_level = single(o.t, "t");
        report = build_charging(jobs, lanes[1].schedule, lanes[0].schedule);
        options.charges = &report;
    }
    emit(o.out, gantt_svg(jobs, lanes, options));
    return kOk;
}

int cmd_charge(const Options& o) {
    const SolverOptions solver = solver_options_from_environment();
    Instance inst;
    Schedule alg;
    Schedule opt;
    if (!o.instance.empty()) {
        inst = load_instance(o.instance);
        AOff algorithm(solver);
        alg = simulate(inst, algorithm).schedule;
        const OfflineResult result = optimal_offline(inst, solver);
        warn_node_limit(result.stats);
        opt = result.schedule;
    } else {
        auto adversary = make_adversary(o);
        AOff algorithm(solver);
        const AdversaryOutcome outcome = run_against_adversary(algorithm, *adversary, solver);
        inst = outcome.instance;
        alg = outcome.run.schedule;
        opt = outcome.opt_schedule;
    }
    const ChargeReport report = build_charging(inst, opt, alg);
    const auto violations = check_claims(report, inst.notice_level);
    if (!o.out.empty()) write_text_file(o.out, charge_report_to_json(report, violations).dump(2) + "\n");

    std::cout << "OPT " << to_string(report.opt_total) << " charged " << to_string(report.charged_total())
              << " ALG " << to_string(report.alg_total) << "\n";
    for (const ChargeBucket& b : report.buckets) {
        std::cout << "  job " << b.alg_job << " p=" << to_string(b.processing) << " total=" << to_string(b.total());
        for (const Charge& c : b.charges) {
            std::cout << " " << to_string(c.label) << ":" << c.opt_job << "=" << to_string(c.span);
        }
        std::cout << "\n";
    }
    bool hard = false;
    for (const ClaimViolation& v : violations) {
        hard = hard || v.hard();
        std::cout << (v.hard() ? "VIOLATION " : "warning ") << to_string(v.claim) << " job " << v.job << ": "
                  << to_string(v.lhs) << " > " << to_string(v.rhs) << "\n";
    }
    return hard ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online throughput scheduling with advance notice"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--t", o.t, "notice level(s), e.g. 1/2")->delimiter(',');
        sub->add_option("--out", o.out, "output path (default stdout)");
    };
    auto add_adversary = [&](CLI::App* sub) {
        sub->add_option("--kind", o.kind, "proportional | unweighted | c-benevolent")
            ->check(CLI::IsMember({"proportional", "unweighted", "c-benevolent"}));
        sub->add_option("--eps", o.eps, "epsilon(s)")->delimiter(',');
        sub->add_option("--n", o.n, "N for the unweighted and c-benevolent adversaries");
    };

    auto* solve = app.add_subcommand("solve", "optimal offline schedule of an instance");
    solve->add_option("--instance", o.instance, "instance JSON")->required();
    solve->add_option("--out", o.out, "write the schedule JSON here");

    auto* sim = app.add_subcommand("simulate", "run an online algorithm, print the JSONL trace");
    sim->add_option("--instance", o.instance, "instance JSON")->required();
    sim->add_option("--algo", o.algo, "a_off | greedy")->check(CLI::IsMember({"a_off", "greedy"}));
    sim->add_option("--out", o.out, "trace path (default stdout)");
    sim->add_option("--schedule-out", o.alg_schedule_out, "write the online schedule JSON here");

    auto* adv = app.add_subcommand("adversary", "run a lower-bound adversary");
    add_common(adv);
    add_adversary(adv);
    adv->add_option("--algo", o.algo, "a_off | greedy")->check(CLI::IsMember({"a_off", "greedy"}));
    adv->add_option("--alg-schedule", o.alg_schedule_out, "write the online schedule JSON here");
    adv->add_option("--opt-schedule", o.opt_schedule_out, "write the optimal schedule JSON here");

    auto* sweep = app.add_subcommand("sweep", "CSV of competitive ratios over seeds and notice levels");
    add_common(sweep);
    sweep->add_option("--trials", o.trials, "trials per t");
    sweep->add_option("--seed", o.seed, "first seed");
    sweep->add_option("--n", o.n, "maximum jobs per instance");
    sweep->add_option("--threads", o.threads, "worker threads (default: all cores)");
    sweep->add_option("--eps", o.eps, "epsilon list for --adversary")->delimiter(',');
    sweep->add_flag("--adversary", o.adversary_sweep, "sweep the proportional lower-bound adversary instead");
    sweep->add_flag("--no-timing", o.no_timing, "write 0 in the ms column for byte-identical output");

    auto* gantt = app.add_subcommand("gantt", "render schedules as SVG or text");
    gantt->add_option("--schedule", o.schedules, "schedule JSON (ALG, then optionally OPT)")->required();
    gantt->add_option("--out", o.out, "output path (default stdout)");
    gantt->add_option("--t", o.t, "notice level for --charges")->delimiter(',');
    gantt->add_flag("--text", o.text, "plain-text output");
    gantt->add_flag("--charges", o.charges, "draw charge arrows from OPT to ALG");

    auto* charge = app.add_subcommand("charge", "charging diagnostic for A_Off against OPT");
    add_common(charge);
    add_adversary(charge);
    charge->add_option("--instance", o.instance, "instance JSON (otherwise an adversary run)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return cmd_solve(o);
        if (*sim) return cmd_simulate(o);
        if (*adv) return cmd_adversary(o);
        if (*sweep) return cmd_sweep(o);
        if (*gantt) return cmd_gantt(o);
        if (*charge) return cmd_charge(o);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
