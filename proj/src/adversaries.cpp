#include "sched/adversaries.hpp"

#include <cmath>

namespace sched {

namespace {

std::optional<TimePoint> start_of(const AnnouncementSource::View& view, JobId id) {
    for (const ScheduleEntry& e : view.starts) {
        if (e.id == id) return e.start;
    }
    return std::nullopt;
}

/// Announces J1 at time 0 and reacts once to its start.
class FirstJobAdversary : public Adversary {
public:
    std::vector<Job> poll(const View& view) override {
        if (!announced_) {
            announced_ = true;
            return {first_job()};
        }
        if (reacted_) return {};
        auto s1 = start_of(view, 1);
        if (!s1) return {};
        reacted_ = true;
        return react(*s1);
    }

protected:
    virtual Job first_job() const = 0;
    virtual std::vector<Job> react(const TimePoint& s1) const = 0;

private:
    bool announced_ = false;
    bool reacted_ = false;
};

class ProportionalLb final : public FirstJobAdversary {
public:
    ProportionalLb(Rational t, Rational eps) : t_(std::move(t)), gamma_(lb_gamma(t_, eps)) {
        beta_ = gamma_ / (2 * t_ + 1);
        const Rational long_job = (1 - gamma_ - beta_) / t_;
        const Rational chain = 1 - gamma_ - 2 * beta_;
        deadline_ = t_ + 1 + long_job + chain + 10;
    }

    Rational notice_level() const override { return t_; }
    WeightModel weights() const override { return WeightModel::proportional(); }
    std::string name() const override { return "proportional_lb"; }
    Weight target_ratio() const override { return Weight(Rational(t_ / (2 * t_ + 1))); }

protected:
    Job first_job() const override { return Job{1, Rational(0), t_, Rational(1), deadline_}; }

    std::vector<Job> react(const TimePoint& s1) const override {
        const TimePoint a = s1 + gamma_;
        const TimePoint r2 = s1 + 1 - beta_;
        const Span p2 = (1 - gamma_ - beta_) / t_;
        std::vector<Job> jobs{Job{2, a, r2, p2, r2 + p2}};
        JobId id = 3;
        for (TimePoint r = a + beta_; r < r2;) {
            const Span cap = (r - a) / t_;
            const Span rest = r2 - r;
            const Span p = cap < rest ? cap : rest;
            jobs.push_back(Job{id++, a, r, p, r + p});
            r += p;
        }
        return jobs;
    }

private:
    Rational t_;
    Rational gamma_;
    Rational beta_;
    TimePoint deadline_;
};

class Unweighted final : public FirstJobAdversary {
public:
    Unweighted(Rational t, std::int64_t n) : t_(std::move(t)), n_(n) {}

    Rational notice_level() const override { return t_; }
    WeightModel weights() const override { return WeightModel::unweighted(); }
    std::string name() const override { return "unweighted"; }
    Weight target_ratio() const override { return Weight(make_rational(1, static_cast<long>(n_))); }

protected:
    Job first_job() const override { return Job{1, Rational(0), t_, Rational(1), t_ + 1}; }

    // Slot i is [s1 + (i-1)/N, s1 + i/N]. Each job is centred in its slot and
    // uses exactly (t+1)u of the (t+2)u available, so a margin of u/2 remains
    // on each side.
    std::vector<Job> react(const TimePoint& s1) const override {
        const Rational n(static_cast<long>(n_));
        const Span u = 1 / (n * (t_ + 2));
        std::vector<Job> jobs;
        for (std::int64_t i = 1; i <= n_; ++i) {
            const TimePoint a = s1 + Rational(static_cast<long>(i - 1)) / n + u / 2;
            const TimePoint r = a + t_ * u;
            jobs.push_back(Job{i + 1, a, r, u, r + u});
        }
        return jobs;
    }

private:
    Rational t_;
    std::int64_t n_;
};

class CBenevolent final : public FirstJobAdversary {
public:
    CBenevolent(Rational t, std::int64_t n, Rational eps, double k)
        : t_(std::move(t)), n_(n), eps_(std::move(eps)), model_(WeightModel::power(k)) {}

    Rational notice_level() const override { return t_; }
    WeightModel weights() const override { return model_; }
    std::string name() const override { return "c_benevolent"; }
    Weight target_ratio() const override { return Weight(1.0 / static_cast<double>(n_)); }

protected:
    Job first_job() const override { return Job{1, Rational(0), t_, Rational(1), t_ + 1}; }

    // J2 is released eps before J1 ends and has exactly the minimum notice,
    // so it is announced the instant J1 starts.
    std::vector<Job> react(const TimePoint& s1) const override {
        const Span p2 = (1 - eps_) / t_;
        const TimePoint r2 = s1 + 1 - eps_;
        return {Job{2, r2 - t_ * p2, r2, p2, r2 + p2}};
    }

private:
    Rational t_;
    std::int64_t n_;
    Rational eps_;
    WeightModel model_;
};

}  // namespace

Rational lb_gamma(const Rational& t, const Rational& eps) {
    return Rational(eps * t * (2 * t + 1) / (2 + t));
}

Rational lb_opt_value(const Rational& t, const Rational& eps) {
    return Rational((2 * t + 1) / t - (2 + t) * lb_gamma(t, eps) / t);
}

std::unique_ptr<Adversary> proportional_lb_adversary(const Rational& t, const Rational& eps) {
    if (!(t > 0) || t > 1) throw MalformedInput("proportional_lb_adversary: t must lie in (0, 1]");
    if (!(eps > 0)) throw MalformedInput("proportional_lb_adversary: eps must be positive");
    if (lb_gamma(t, eps) >= make_rational(1, 4)) {
        throw MalformedInput("proportional_lb_adversary: eps too large (gamma = " + to_string(lb_gamma(t, eps)) +
                             " must stay below 1/4)");
    }
    return std::make_unique<ProportionalLb>(t, eps);
}

std::unique_ptr<Adversary> unweighted_adversary(const Rational& t, std::int64_t n) {
    if (!(t > 0)) throw MalformedInput("unweighted_adversary: t must be positive");
    if (n < 1) throw MalformedInput("unweighted_adversary: N must be at least 1");
    return std::make_unique<Unweighted>(t, n);
}

std::unique_ptr<Adversary> c_benevolent_adversary(const Rational& t, std::int64_t n, const Rational& eps) {
    if (!(t > 0) || !(t < 1)) throw MalformedInput("c_benevolent_adversary: t must lie in (0, 1)");
    if (!(eps > 0)) throw MalformedInput("c_benevolent_adversary: eps must be positive");
    const Rational base = (1 - eps) / t;
    if (!(base > 1)) throw MalformedInput("c_benevolent_adversary: (1 - eps)/t must exceed 1");
    if (n < 1) throw MalformedInput("c_benevolent_adversary: N must be at least 1");
    const double k = std::log(static_cast<double>(n)) / std::log(base.get_d());
    if (!(k >= 1)) {
        throw MalformedInput("c_benevolent_adversary: exponent ln N / ln((1-eps)/t) = " + std::to_string(k) +
                             " is below 1; increase N");
    }
    return std::make_unique<CBenevolent>(t, n, eps, k);
}

AdversaryOutcome run_against_adversary(OnlineAlgorithm& algorithm, Adversary& adversary,
                                       const SolverOptions& options) {
    AdversaryOutcome outcome;
    outcome.run = simulate(adversary, algorithm, adversary.notice_level(), adversary.weights());
    outcome.instance = outcome.run.instance;
    const OfflineResult opt = optimal_offline(outcome.instance, options);
    outcome.opt_schedule = opt.schedule;
    outcome.opt_stats = opt.stats;
    outcome.alg = outcome.run.schedule.value;
    outcome.opt = opt.schedule.value;

    const WeightModel& model = outcome.instance.weights;
    if (outcome.opt <= model.zero()) {
        outcome.ratio = outcome.opt.is_exact() ? Weight(Rational(1)) : Weight(1.0);
    } else if (outcome.alg <= model.zero()) {
        outcome.unbounded = true;
        outcome.ratio = model.zero();
    } else {
        outcome.ratio = ratio(outcome.alg, outcome.opt);
    }
    return outcome;
}

}  // namespace sched
