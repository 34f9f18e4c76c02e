#pragma once

#include "sched/offline_solver.hpp"
#include "sched/simulator.hpp"

#include <memory>

namespace sched {

/// Adaptive job source. It sees only the starts the algorithm has committed
/// to, and every job it emits must respect its declared notice level.
class Adversary : public AnnouncementSource {
public:
    [[nodiscard]] virtual Rational notice_level() const = 0;
    [[nodiscard]] virtual WeightModel weights() const = 0;
    [[nodiscard]] virtual std::string name() const = 0;
    /// Ratio the construction is designed to force on a committed algorithm.
    [[nodiscard]] virtual Weight target_ratio() const = 0;
};

struct AdversaryOutcome {
    /// Every job the adversary emitted, in announcement order.
    Instance instance;
    SimulationResult run;
    Schedule opt_schedule;
    SolverStats opt_stats;
    Weight alg;
    Weight opt;
    /// alg / opt; 1 when nothing worth anything was emitted, 0 when unbounded.
    Weight ratio;
    /// The algorithm earned nothing although jobs with value were offered.
    bool unbounded = false;
};

/// Drives the algorithm against the adversary until no events remain, then
/// solves the emitted instance offline. Throws MalformedInput when the
/// adversary breaks its own notice level.
AdversaryOutcome run_against_adversary(OnlineAlgorithm& algorithm, Adversary& adversary,
                                       const SolverOptions& options = {});

/// Proportional weights, 0 < t <= 1. With gamma = eps*t*(2t+1)/(2+t) and
/// beta = gamma/(2t+1): J1 = (0, t, 1, D) with D large. Once J1 starts at s,
/// at time s+gamma the adversary announces J2 released at s+1-beta with
/// p = (1-gamma-beta)/t and a tight window, plus a chain of tight jobs that
/// tiles [s+gamma+beta, s+1-beta) and that no algorithm busy with J1 can run.
/// Each link is as long as its notice allows, so the chain is short. A
/// committed algorithm earns 1 while OPT = (2t+1)/t - (2+t)*gamma/t.
/// Requires gamma < 1/4.
std::unique_ptr<Adversary> proportional_lb_adversary(const Rational& t, const Rational& eps);

/// Unit weights, t > 0. J1 = (0, t, 1, t+1); once it starts, N unit jobs with
/// tight, pairwise disjoint windows strictly inside (t, t+1) follow.
std::unique_ptr<Adversary> unweighted_adversary(const Rational& t, std::int64_t n);

/// Weights p^k with k = ln N / ln((1-eps)/t). J1 = (0, t, 1, t+1); when it
/// starts, J2 with p = (1-eps)/t, worth N, arrives with a window the busy
/// machine cannot reach. Requires 0 < t < 1, (1-eps)/t > 1 and k >= 1.
std::unique_ptr<Adversary> c_benevolent_adversary(const Rational& t, std::int64_t n, const Rational& eps);

/// gamma used by proportional_lb_adversary.
Rational lb_gamma(const Rational& t, const Rational& eps);
/// OPT of the proportional lower-bound instance: (2t+1)/t - (2+t)*gamma/t.
Rational lb_opt_value(const Rational& t, const Rational& eps);

}  // namespace sched
