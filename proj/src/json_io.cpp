#include "sched/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace sched {

namespace {

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j, const char* field) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) {
            throw MalformedInput(std::string("non-integer string in field '") + field + "'");
        }
        return z;
    }
    throw MalformedInput(std::string("field '") + field + "' must be an integer");
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object()) throw MalformedInput(std::string("expected an object containing '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

Json rational_to_json(const Rational& q) {
    Json j;
    j["num"] = integer_to_json(q.get_num());
    j["den"] = integer_to_json(q.get_den());
    return j;
}

Rational rational_from_json(const Json& j) {
    mpz_class num = integer_from_json(require(j, "num"), "num");
    mpz_class den = integer_from_json(require(j, "den"), "den");
    if (den == 0) throw MalformedInput("rational with zero denominator");
    return make_rational(num, den);
}

Json weight_to_json(const Weight& w) {
    if (w.is_exact()) return rational_to_json(w.exact());
    return Json(w.approx());
}

Weight weight_from_json(const Json& j) {
    if (j.is_number()) return Weight(j.get<double>());
    return Weight(rational_from_json(j));
}

Json weight_model_to_json(const WeightModel& model) {
    switch (model.kind()) {
    case WeightModel::Kind::Proportional:
        return "proportional";
    case WeightModel::Kind::Unweighted:
        return "unweighted";
    case WeightModel::Kind::PowerBenevolent: {
        Json j;
        j["power"]["k"] = model.exponent();
        return j;
    }
    }
    throw std::logic_error("unknown weight model");
}

WeightModel weight_model_from_json(const Json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "proportional") return WeightModel::proportional();
        if (s == "unweighted") return WeightModel::unweighted();
        throw MalformedInput("unknown weight model '" + s + "'");
    }
    const Json& k = require(require(j, "power"), "k");
    if (!k.is_number()) throw MalformedInput("power exponent must be a number");
    return WeightModel::power(k.get<double>());
}

Json job_to_json(const Job& job) {
    Json j;
    j["id"] = job.id;
    j["a"] = rational_to_json(job.announce);
    j["r"] = rational_to_json(job.release);
    j["p"] = rational_to_json(job.processing);
    j["d"] = rational_to_json(job.deadline);
    return j;
}

Job job_from_json(const Json& j) {
    const Json& id = require(j, "id");
    if (!id.is_number_integer()) throw MalformedInput("job id must be an integer");
    return Job{id.get<JobId>(), rational_from_json(require(j, "a")), rational_from_json(require(j, "r")),
               rational_from_json(require(j, "p")), rational_from_json(require(j, "d"))};
}

Json instance_to_json(const Instance& instance) {
    Json j;
    j["t"] = rational_to_json(instance.notice_level);
    j["weights"] = weight_model_to_json(instance.weights);
    j["jobs"] = Json::array();
    for (const Job& job : instance.jobs) j["jobs"].push_back(job_to_json(job));
    return j;
}

Instance instance_from_json(const Json& j) {
    Instance instance;
    instance.notice_level = rational_from_json(require(j, "t"));
    instance.weights = weight_model_from_json(require(j, "weights"));
    const Json& jobs = require(j, "jobs");
    if (!jobs.is_array()) throw MalformedInput("'jobs' must be an array");
    for (const Json& job : jobs) instance.jobs.push_back(job_from_json(job));
    return instance;
}

Json schedule_to_json(const Instance& instance, const Schedule& schedule) {
    Json j;
    j["weights"] = weight_model_to_json(instance.weights);
    j["value"] = weight_to_json(schedule.value);
    j["entries"] = Json::array();
    for (const auto& e : schedule.entries) {
        Json entry = job_to_json(instance.job(e.id));
        entry["start"] = rational_to_json(e.start);
        j["entries"].push_back(std::move(entry));
    }
    return j;
}

ScheduleFile schedule_from_json(const Json& j) {
    ScheduleFile file;
    file.jobs.weights = weight_model_from_json(require(j, "weights"));
    const Json& entries = require(j, "entries");
    if (!entries.is_array()) throw MalformedInput("'entries' must be an array");
    for (const Json& e : entries) {
        Job job = job_from_json(e);
        file.schedule.entries.push_back({job.id, rational_from_json(require(e, "start"))});
        file.jobs.jobs.push_back(std::move(job));
    }
    file.jobs.sort_by_announcement();
    file.schedule.value = weight_from_json(require(j, "value"));
    return file;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < limit; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw MalformedInput(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": JSON syntax error");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace sched
