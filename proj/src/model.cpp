#include "sched/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sched {

const Rational& Weight::exact() const {
    if (!is_exact()) throw std::logic_error("weight is not exact");
    return std::get<Rational>(value_);
}

double Weight::approx() const {
    if (is_exact()) throw std::logic_error("weight is exact");
    return std::get<double>(value_);
}

double Weight::to_double() const {
    return is_exact() ? std::get<Rational>(value_).get_d() : std::get<double>(value_);
}

Weight& Weight::operator+=(const Weight& rhs) {
    if (is_exact() != rhs.is_exact()) throw std::logic_error("mixing exact and float weights");
    if (is_exact()) {
        std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
    } else {
        std::get<double>(value_) += std::get<double>(rhs.value_);
    }
    return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
    if (is_exact() != rhs.is_exact()) throw std::logic_error("mixing exact and float weights");
    if (is_exact()) {
        std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
    } else {
        std::get<double>(value_) -= std::get<double>(rhs.value_);
    }
    return *this;
}

std::partial_ordering operator<=>(const Weight& lhs, const Weight& rhs) {
    if (lhs.is_exact() != rhs.is_exact()) throw std::logic_error("comparing exact and float weights");
    if (lhs.is_exact()) {
        const int c = cmp(std::get<Rational>(lhs.value_), std::get<Rational>(rhs.value_));
        if (c < 0) return std::partial_ordering::less;
        if (c > 0) return std::partial_ordering::greater;
        return std::partial_ordering::equivalent;
    }
    return std::get<double>(lhs.value_) <=> std::get<double>(rhs.value_);
}

Weight ratio(const Weight& lhs, const Weight& rhs) {
    if (lhs.is_exact() != rhs.is_exact()) throw std::logic_error("dividing exact and float weights");
    if (lhs.is_exact()) {
        if (rhs.exact() == 0) throw std::domain_error("ratio with zero denominator");
        return Weight(Rational(lhs.exact() / rhs.exact()));
    }
    if (rhs.approx() == 0.0) throw std::domain_error("ratio with zero denominator");
    return Weight(lhs.approx() / rhs.approx());
}

std::string Weight::to_string() const {
    if (is_exact()) return sched::to_string(exact());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", approx());
    return buf;
}

WeightModel WeightModel::power(double exponent) {
    if (!(exponent >= 1.0) || !std::isfinite(exponent)) {
        throw MalformedInput("power weight exponent must be a finite value >= 1");
    }
    return WeightModel(Kind::PowerBenevolent, exponent);
}

Weight WeightModel::zero() const {
    return is_exact() ? Weight(Rational(0)) : Weight(0.0);
}

Weight WeightModel::evaluate(const Span& p) const {
    switch (kind_) {
    case Kind::Proportional:
        return Weight(p);
    case Kind::Unweighted:
        return Weight(Rational(1));
    case Kind::PowerBenevolent:
        return Weight(std::pow(p.get_d(), exponent_));
    }
    throw std::logic_error("unknown weight model");
}

std::string WeightModel::name() const {
    switch (kind_) {
    case Kind::Proportional:
        return "proportional";
    case Kind::Unweighted:
        return "unweighted";
    case Kind::PowerBenevolent: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "power(k=%.12g)", exponent_);
        return buf;
    }
    }
    return "unknown";
}

Weight weight_of(const WeightModel& model, const Span& p) {
    if (p <= 0) throw MalformedInput("weight_of: processing time must be positive, got " + to_string(p));
    return model.evaluate(p);
}

const Job* Instance::find(JobId id) const {
    auto it = std::find_if(jobs.begin(), jobs.end(), [id](const Job& j) { return j.id == id; });
    return it == jobs.end() ? nullptr : &*it;
}

const Job& Instance::job(JobId id) const {
    if (const Job* j = find(id)) return *j;
    throw MalformedInput("unknown job id " + std::to_string(id));
}

void Instance::sort_by_announcement() {
    std::stable_sort(jobs.begin(), jobs.end(),
                     [](const Job& a, const Job& b) { return a.announce < b.announce; });
}

std::vector<ScheduleEntry> Schedule::by_start() const {
    std::vector<ScheduleEntry> sorted = entries;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ScheduleEntry& a, const ScheduleEntry& b) { return a.start < b.start; });
    return sorted;
}

std::vector<JobId> Schedule::ids_by_start() const {
    std::vector<JobId> ids;
    for (const auto& e : by_start()) ids.push_back(e.id);
    return ids;
}

std::optional<TimePoint> Schedule::start_of(JobId id) const {
    for (const auto& e : entries) {
        if (e.id == id) return e.start;
    }
    return std::nullopt;
}

Instance scale_times(const Instance& instance, const Rational& c) {
    if (c <= 0) throw MalformedInput("scale factor must be positive");
    Instance scaled = instance;
    for (Job& j : scaled.jobs) {
        j.announce *= c;
        j.release *= c;
        j.processing *= c;
        j.deadline *= c;
    }
    return scaled;
}

}  // namespace sched
