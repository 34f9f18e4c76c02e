#pragma once

#include "sched/model.hpp"

#include <cstdint>

namespace sched {

/// Closed interval [lo, hi] of rationals.
struct RationalRange {
    Rational lo;
    Rational hi;
};

struct RandomInstanceConfig {
    std::size_t jobs = 0;
    Rational notice_level{1};
    TimePoint horizon{10};
    RationalRange processing{Rational(1, 10), Rational(2)};
    RationalRange slack{Rational(0), Rational(2)};
    std::uint64_t seed = 0;
    WeightModel weights = WeightModel::proportional();
};

/// Grid on which processing times, slacks and release offsets are drawn.
inline constexpr long kGeneratorResolution = 1000;

/// Draws p uniformly from the multiples of 1/1000 inside the processing range,
/// r - t*p uniformly from the multiples of 1/1000 inside [0, horizon - t*p],
/// and the slack d - r - p likewise. Every job gets exactly the minimum notice:
/// a = r - t*p. The output is identical for identical configs on every platform
/// (mt19937_64 with rejection sampling). Jobs are ids 0..n-1 sorted by
/// announcement. Throws MalformedInput for empty or non-positive ranges.
Instance random_instance(const RandomInstanceConfig& config);

}  // namespace sched
