#include "sched/charging.hpp"

#include "sched/validate.hpp"

#include <algorithm>

namespace sched {

namespace {

const TimePoint& max_of(const TimePoint& a, const TimePoint& b) { return a < b ? b : a; }
const TimePoint& min_of(const TimePoint& a, const TimePoint& b) { return a < b ? a : b; }

Span overlap(const TimePoint& s1, const TimePoint& e1, const TimePoint& s2, const TimePoint& e2) {
    const Span len = min_of(e1, e2) - max_of(s1, s2);
    return len > 0 ? len : Span(0);
}

}  // namespace

bool conflicts(const Job& opt_job, const TimePoint& opt_start, const Job& alg_job, const TimePoint& alg_start) {
    return opt_start < alg_start + alg_job.processing && alg_start < opt_start + opt_job.processing;
}

std::string to_string(ChargeLabel label) {
    switch (label) {
    case ChargeLabel::A: return "A";
    case ChargeLabel::B: return "B";
    case ChargeLabel::C: return "C";
    case ChargeLabel::D: return "D";
    case ChargeLabel::E: return "E";
    }
    return "?";
}

Span ChargeBucket::total() const {
    Span sum(0);
    for (const Charge& c : charges) sum += c.span;
    return sum;
}

Span ChargeBucket::total(ChargeLabel label) const {
    Span sum(0);
    for (const Charge& c : charges) {
        if (c.label == label) sum += c.span;
    }
    return sum;
}

Span ChargeReport::charged_total() const {
    Span sum(0);
    for (const ChargeBucket& b : buckets) sum += b.total();
    for (const Charge& c : unassigned) sum += c.span;
    return sum;
}

ChargeReport build_charging(const Instance& instance, const Schedule& opt, const Schedule& alg) {
    if (instance.weights.kind() != WeightModel::Kind::Proportional) {
        throw MalformedInput("build_charging: only proportional weights are supported, got " +
                             instance.weights.name());
    }
    if (!is_feasible_schedule(instance, opt)) throw MalformedInput("build_charging: OPT schedule is infeasible");
    if (!is_feasible_schedule(instance, alg)) throw MalformedInput("build_charging: ALG schedule is infeasible");

    ChargeReport report;
    report.notice_level = instance.notice_level;
    report.opt_total = Span(0);
    report.alg_total = Span(0);
    for (const ScheduleEntry& e : alg.by_start()) {
        const Job& j = instance.job(e.id);
        report.buckets.push_back(ChargeBucket{e.id, e.start, j.processing, {}});
        report.alg_total += j.processing;
    }
    auto bucket_of = [&](JobId id) -> ChargeBucket* {
        for (ChargeBucket& b : report.buckets) {
            if (b.alg_job == id) return &b;
        }
        return nullptr;
    };

    for (const ScheduleEntry& oe : opt.by_start()) {
        const Job& job = instance.job(oe.id);
        const TimePoint opt_end = oe.start + job.processing;
        report.opt_total += job.processing;

        std::vector<ChargeBucket*> hits;
        for (ChargeBucket& b : report.buckets) {
            if (conflicts(job, oe.start, instance.job(b.alg_job), b.start)) hits.push_back(&b);
        }

        if (hits.empty()) {
            Charge charge{job.id, job.processing, ChargeLabel::A};
            if (ChargeBucket* own = bucket_of(job.id)) {
                own->charges.push_back(charge);
            } else {
                report.unassigned.push_back(charge);
            }
            continue;
        }

        auto end_of = [](const ChargeBucket& b) { return b.start + b.processing; };
        if (hits.size() == 1 && oe.start >= hits[0]->start && opt_end <= end_of(*hits[0])) {
            hits[0]->charges.push_back({job.id, job.processing, ChargeLabel::B});
            continue;
        }
        auto during = std::find_if(hits.begin(), hits.end(), [&](const ChargeBucket* b) {
            return job.announce >= b->start && job.announce < end_of(*b);
        });
        if (during != hits.end()) {
            (*during)->charges.push_back({job.id, job.processing, ChargeLabel::C});
            continue;
        }
        if (hits.size() == 1) {
            hits[0]->charges.push_back({job.id, job.processing, ChargeLabel::D});
            continue;
        }

        std::vector<Span> overlaps;
        Span covered(0);
        for (const ChargeBucket* b : hits) {
            overlaps.push_back(overlap(oe.start, opt_end, b->start, end_of(*b)));
            covered += overlaps.back();
        }
        for (std::size_t k = 0; k < hits.size(); ++k) {
            const bool inside = hits[k]->start >= oe.start && end_of(*hits[k]) <= opt_end;
            hits[k]->charges.push_back(
                {job.id, Span(job.processing * overlaps[k] / covered), inside ? ChargeLabel::B : ChargeLabel::E});
        }
    }
    return report;
}

bool ClaimViolation::hard() const {
    return claim == Claim::Aggregate || claim == Claim::Total || claim == Claim::Conservation;
}

std::string to_string(ClaimViolation::Claim claim) {
    using C = ClaimViolation::Claim;
    switch (claim) {
    case C::SingleCharge: return "single-charge";
    case C::AnnouncedDuring: return "announced-during";
    case C::NonContained: return "non-contained";
    case C::Contained: return "contained";
    case C::Aggregate: return "aggregate";
    case C::Total: return "total";
    case C::Conservation: return "conservation";
    case C::Unmatched: return "unmatched";
    }
    return "?";
}

std::vector<ClaimViolation> check_claims(const ChargeReport& report, const Rational& notice_level) {
    using C = ClaimViolation::Claim;
    if (!(notice_level > 0)) throw MalformedInput("check_claims: t must be positive");
    std::vector<ClaimViolation> out;
    auto require = [&](bool ok, C claim, JobId job, const Rational& lhs, const Rational& rhs) {
        if (!ok) out.push_back({claim, job, lhs, rhs});
    };
    const Rational inv_t = 1 / notice_level;

    for (const ChargeBucket& b : report.buckets) {
        const Span& p = b.processing;
        for (const Charge& c : b.charges) {
            if (c.label == ChargeLabel::A || c.label == ChargeLabel::D || c.label == ChargeLabel::E) {
                require(c.span <= p, C::SingleCharge, b.alg_job, c.span, p);
            } else if (c.label == ChargeLabel::C) {
                require(c.span <= p * inv_t, C::AnnouncedDuring, b.alg_job, c.span, Rational(p * inv_t));
            }
        }
        const Span non_contained = b.total() - b.total(ChargeLabel::B);
        require(non_contained <= (inv_t + 1) * p, C::NonContained, b.alg_job, non_contained,
                Rational((inv_t + 1) * p));
        require(b.total(ChargeLabel::B) <= p, C::Contained, b.alg_job, b.total(ChargeLabel::B), p);
        require(b.total() <= (2 + inv_t) * p, C::Aggregate, b.alg_job, b.total(), Rational((2 + inv_t) * p));
    }
    for (const Charge& c : report.unassigned) out.push_back({C::Unmatched, c.opt_job, c.span, Rational(0)});

    require(report.charged_total() == report.opt_total, C::Conservation, 0, report.charged_total(),
            report.opt_total);
    require(report.opt_total <= (2 + inv_t) * report.alg_total, C::Total, 0, report.opt_total,
            Rational((2 + inv_t) * report.alg_total));
    return out;
}

Json charge_report_to_json(const ChargeReport& report, const std::vector<ClaimViolation>& violations) {
    Json out;
    out["t"] = rational_to_json(report.notice_level);
    out["opt_total"] = rational_to_json(report.opt_total);
    out["alg_total"] = rational_to_json(report.alg_total);
    out["charged_total"] = rational_to_json(report.charged_total());
    auto charge_json = [](const Charge& c) {
        Json j;
        j["opt_job"] = c.opt_job;
        j["span"] = rational_to_json(c.span);
        j["label"] = to_string(c.label);
        return j;
    };
    out["buckets"] = Json::array();
    for (const ChargeBucket& b : report.buckets) {
        Json bucket;
        bucket["alg_job"] = b.alg_job;
        bucket["start"] = rational_to_json(b.start);
        bucket["p"] = rational_to_json(b.processing);
        bucket["total"] = rational_to_json(b.total());
        bucket["charges"] = Json::array();
        for (const Charge& c : b.charges) bucket["charges"].push_back(charge_json(c));
        out["buckets"].push_back(std::move(bucket));
    }
    out["unassigned"] = Json::array();
    for (const Charge& c : report.unassigned) out["unassigned"].push_back(charge_json(c));
    out["violations"] = Json::array();
    for (const ClaimViolation& v : violations) {
        Json j;
        j["claim"] = to_string(v.claim);
        j["job"] = v.job;
        j["lhs"] = rational_to_json(v.lhs);
        j["rhs"] = rational_to_json(v.rhs);
        j["hard"] = v.hard();
        out["violations"].push_back(std::move(j));
    }
    return out;
}

}  // namespace sched
