#pragma once

#include "sched/model.hpp"

#include <initializer_list>
#include <string>

namespace sched::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline Job job(JobId id, const char* a, const char* r, const char* p, const char* d) {
    return Job{id, q(a), q(r), q(p), q(d)};
}

inline Instance instance(std::initializer_list<Job> jobs, const char* t = "0",
                         WeightModel weights = WeightModel::proportional()) {
    Instance inst{std::vector<Job>(jobs), q(t), weights};
    return inst;
}

}  // namespace sched::testing
