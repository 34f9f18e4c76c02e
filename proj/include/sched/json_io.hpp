#pragma once

#include "sched/model.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace sched {

using Json = nlohmann::ordered_json;

/// {"num": N, "den": D}, normalized. Integers beyond 64 bits are written as
/// decimal strings; both forms are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Exact weights as rationals, float weights as plain numbers.
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json weight_model_to_json(const WeightModel& model);
WeightModel weight_model_from_json(const Json& j);

Json job_to_json(const Job& job);
Job job_from_json(const Json& j);

/// {"t": q, "weights": ..., "jobs": [...]}
Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

/// Self-contained schedule file: every entry carries its job's (a, r, p, d) so
/// the file can be rendered without the instance.
Json schedule_to_json(const Instance& instance, const Schedule& schedule);

struct ScheduleFile {
    Instance jobs;  // only the scheduled jobs
    Schedule schedule;
};
ScheduleFile schedule_from_json(const Json& j);

/// Parses text, reporting syntax errors with line and column.
/// Throws MalformedInput.
Json parse_json_text(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sched
