#pragma once

#include "sched/json_io.hpp"
#include "sched/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sched {

/// True iff [opt_start, opt_start + opt.p) and [alg_start, alg_start + alg.p)
/// intersect.
bool conflicts(const Job& opt_job, const TimePoint& opt_start, const Job& alg_job, const TimePoint& alg_start);

enum class ChargeLabel { A, B, C, D, E };
std::string to_string(ChargeLabel label);

struct Charge {
    JobId opt_job = 0;
    Span span;
    ChargeLabel label = ChargeLabel::A;
};

/// Everything charged to one job of the online schedule.
struct ChargeBucket {
    JobId alg_job = 0;
    TimePoint start;
    Span processing;
    std::vector<Charge> charges;

    [[nodiscard]] Span total() const;
    [[nodiscard]] Span total(ChargeLabel label) const;
};

struct ChargeReport {
    Rational notice_level;
    /// One bucket per job the online schedule ran, in start order.
    std::vector<ChargeBucket> buckets;
    /// Conflict-free OPT jobs the online schedule never ran; they have no
    /// job of their own to be charged to.
    std::vector<Charge> unassigned;
    Span opt_total;
    Span alg_total;

    [[nodiscard]] Span charged_total() const;
};

/// Classifies every job of `opt` against `alg`, first matching rule wins:
///   A  no conflict: charged to the online run of the same job;
///   B  exactly one conflict and contained in it;
///   C  announced while the conflicting online job runs;
///   D  exactly one conflict;
///   E  several conflicts: p is split in proportion to the overlap lengths.
///      A fragment whose online job lies wholly inside the OPT job's
///      interval is labelled B instead.
/// Throws MalformedInput unless the instance uses proportional weights or
/// when either schedule is infeasible.
ChargeReport build_charging(const Instance& instance, const Schedule& opt, const Schedule& alg);

struct ClaimViolation {
    enum class Claim {
        SingleCharge,    // every A/D/E charge <= p_i
        AnnouncedDuring, // every C charge <= p_i / t
        NonContained,    // A + C + D + E <= (1/t + 1) p_i
        Contained,       // B <= p_i
        Aggregate,       // everything charged to J_i <= (2 + 1/t) p_i
        Total,           // OPT <= (2 + 1/t) ALG
        Conservation,    // charged span == OPT value
        Unmatched,       // conflict-free OPT job the online schedule skipped
    };

    Claim claim;
    JobId job = 0;
    Rational lhs;
    Rational rhs;
    /// Only Aggregate, Total and Conservation are hard failures; the rest are
    /// diagnostics.
    [[nodiscard]] bool hard() const;
};

std::string to_string(ClaimViolation::Claim claim);

/// Evaluates every claim exactly and returns each failure with both sides.
std::vector<ClaimViolation> check_claims(const ChargeReport& report, const Rational& notice_level);

Json charge_report_to_json(const ChargeReport& report, const std::vector<ClaimViolation>& violations);

}  // namespace sched
