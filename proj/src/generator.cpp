#include "sched/generator.hpp"

#include <random>

namespace sched {

namespace {

// Uniform on [0, bound], without the implementation-defined behaviour of
// std::uniform_int_distribution.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == std::numeric_limits<std::uint64_t>::max()) return rng();
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % range;
}

mpz_class ceil_scaled(const Rational& x) {
    Rational s = x * kGeneratorResolution;
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return out;
}

mpz_class floor_scaled(const Rational& x) {
    Rational s = x * kGeneratorResolution;
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return out;
}

// A multiple of 1/resolution drawn uniformly from [lo, hi].
Rational draw_on_grid(std::mt19937_64& rng, const Rational& lo, const Rational& hi, const char* what) {
    const mpz_class first = ceil_scaled(lo);
    const mpz_class last = floor_scaled(hi);
    if (last < first) {
        throw MalformedInput(std::string("random_instance: ") + what + " range contains no grid point");
    }
    const mpz_class width = last - first;
    if (!width.fits_ulong_p()) throw MalformedInput(std::string("random_instance: ") + what + " range too wide");
    const mpz_class pick = first + mpz_class(uniform_index(rng, width.get_ui()));
    return make_rational(pick, mpz_class(kGeneratorResolution));
}

}  // namespace

Instance random_instance(const RandomInstanceConfig& config) {
    if (config.notice_level < 0) throw MalformedInput("random_instance: notice level must be nonnegative");
    if (config.processing.lo <= 0 || config.processing.hi < config.processing.lo) {
        throw MalformedInput("random_instance: processing range must be positive and nonempty");
    }
    if (config.slack.lo < 0 || config.slack.hi < config.slack.lo) {
        throw MalformedInput("random_instance: slack range must be nonnegative and nonempty");
    }
    if (config.horizon < config.notice_level * config.processing.hi) {
        throw MalformedInput("random_instance: horizon shorter than the notice t * p_max");
    }

    std::mt19937_64 rng(config.seed);
    Instance instance{{}, config.notice_level, config.weights};
    instance.jobs.reserve(config.jobs);
    for (std::size_t k = 0; k < config.jobs; ++k) {
        Rational p = draw_on_grid(rng, config.processing.lo, config.processing.hi, "processing");
        const Rational notice = config.notice_level * p;
        Rational offset = draw_on_grid(rng, Rational(0), Rational(config.horizon - notice), "release");
        Rational slack = draw_on_grid(rng, config.slack.lo, config.slack.hi, "slack");
        Rational release = offset + notice;
        Rational deadline = release + p + slack;
        instance.jobs.push_back(Job{static_cast<JobId>(k), offset, std::move(release), std::move(p),
                                    std::move(deadline)});
    }
    instance.sort_by_announcement();
    for (std::size_t k = 0; k < instance.jobs.size(); ++k) instance.jobs[k].id = static_cast<JobId>(k);
    return instance;
}

}  // namespace sched
