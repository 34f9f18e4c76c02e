#include "sched/sweep.hpp"

#include "sched/adversaries.hpp"
#include "sched/algorithms.hpp"
#include "sched/generator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace sched {

namespace {

Rational ratio_of(const Rational& alg, const Rational& opt) { return opt == 0 ? Rational(1) : Rational(alg / opt); }

SweepRow random_row(const SweepConfig& config, const Rational& t, std::uint64_t seed) {
    RandomInstanceConfig gen;
    gen.jobs = 1 + static_cast<std::size_t>(seed % config.max_jobs);
    gen.notice_level = t;
    gen.horizon = Rational(static_cast<long>(gen.jobs), 2) + 2;
    gen.processing = {make_rational(1, 10), Rational(2)};
    gen.slack = {Rational(0), make_rational(3, 2)};
    gen.seed = seed;
    const Instance inst = random_instance(gen);

    const auto t0 = std::chrono::steady_clock::now();
    AOff a_off(config.solver);
    const SimulationResult run = simulate(inst, a_off);
    const OfflineResult opt = optimal_offline(inst, config.solver);
    const auto t1 = std::chrono::steady_clock::now();
    Greedy greedy;
    const SimulationResult greedy_run = simulate(inst, greedy);

    SweepRow row;
    row.t = t;
    row.n = gen.jobs;
    row.seed = seed;
    row.alg = run.schedule.value.exact();
    row.opt = opt.schedule.value.exact();
    row.ratio = ratio_of(row.alg, row.opt);
    row.bound = a_off_bound(t);
    row.ok = row.ratio >= row.bound;
    row.nodes = a_off.stats().nodes + opt.stats.nodes;
    if (config.record_time) row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.greedy = greedy_run.schedule.value.exact();
    return row;
}

std::string decimal(const Rational& q) { return to_decimal(q, 12); }

std::string decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

Rational a_off_bound(const Rational& t) { return Rational(t / (2 * t + 1)); }

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    if (config.max_jobs == 0) throw MalformedInput("sweep: max_jobs must be positive");
    for (const Rational& t : config.notice_levels) {
        if (!(t > 0)) throw MalformedInput("sweep: t must be positive, got " + to_string(t));
    }
    const std::size_t total = config.notice_levels.size() * config.trials;
    std::vector<SweepRow> rows(total);
    std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(total, 1));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k = next++; k < total; k = next++) {
            try {
                rows[k] = random_row(config, config.notice_levels[k / config.trials], config.seed + k % config.trials);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<SweepRow> run_adversary_sweep(const std::vector<Rational>& notice_levels,
                                          const std::vector<Rational>& eps_values, const SolverOptions& solver,
                                          bool record_time) {
    std::vector<SweepRow> rows;
    for (const Rational& t : notice_levels) {
        for (std::size_t k = 0; k < eps_values.size(); ++k) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto adversary = proportional_lb_adversary(t, eps_values[k]);
            AOff a_off(solver);
            const AdversaryOutcome outcome = run_against_adversary(a_off, *adversary, solver);
            const auto t1 = std::chrono::steady_clock::now();

            SweepRow row;
            row.t = t;
            row.n = outcome.instance.jobs.size();
            row.seed = k;
            row.alg = outcome.alg.exact();
            row.opt = outcome.opt.exact();
            row.ratio = ratio_of(row.alg, row.opt);
            row.bound = a_off_bound(t);
            row.ok = row.ratio >= row.bound;
            row.nodes = a_off.stats().nodes + outcome.opt_stats.nodes;
            if (record_time) row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            row.greedy = row.alg;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << to_string(r.t) << ',' << r.n << ',' << r.seed << ',' << r.alg.get_num().get_str() << ','
            << r.alg.get_den().get_str() << ',' << r.opt.get_num().get_str() << ',' << r.opt.get_den().get_str()
            << ',' << decimal(r.ratio) << ',' << decimal(r.bound) << ',' << (r.ok ? "true" : "false") << ','
            << r.nodes << ',' << decimal(r.ms) << '\n';
    }
    return out.str();
}

std::vector<SweepSummary> summarize(const std::vector<SweepRow>& rows) {
    std::vector<SweepSummary> out;
    for (const SweepRow& r : rows) {
        auto it = std::find_if(out.begin(), out.end(), [&](const SweepSummary& s) { return s.t == r.t; });
        const Rational greedy_ratio = ratio_of(r.greedy, r.opt);
        if (it == out.end()) {
            out.push_back(SweepSummary{r.t, 1, r.ratio, greedy_ratio, r.bound, r.ok});
            continue;
        }
        ++it->rows;
        it->min_ratio = std::min(it->min_ratio, r.ratio);
        it->min_greedy_ratio = std::min(it->min_greedy_ratio, greedy_ratio);
        it->all_ok = it->all_ok && r.ok;
    }
    return out;
}

std::string summary_text(const std::vector<SweepSummary>& summary) {
    std::ostringstream out;
    for (const SweepSummary& s : summary) {
        out << "t=" << to_string(s.t) << " rows=" << s.rows << " min_ratio=" << to_string(s.min_ratio) << " ("
            << decimal(s.min_ratio) << ") bound=" << to_string(s.bound) << " (" << decimal(s.bound)
            << ") greedy_min=" << decimal(s.min_greedy_ratio) << (s.all_ok ? " ok" : " VIOLATED") << '\n';
    }
    return out.str();
}

}  // namespace sched
