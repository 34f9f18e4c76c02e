#pragma once

#include "sched/charging.hpp"
#include "sched/model.hpp"

#include <string>
#include <vector>

namespace sched {

struct GanttLane {
    std::string label;
    Schedule schedule;
};

struct GanttOptions {
    double pixels_per_unit = 120.0;
    /// Draws announcement (hollow) and release (solid) ticks under each job.
    bool ticks = true;
    /// Optional layer: arrows from each OPT job (second lane) to the online
    /// job it is charged to (first lane).
    const ChargeReport* charges = nullptr;
};

/// Horizontal time axis with one lane per schedule, jobs drawn as [s, s+p)
/// boxes labelled by id. Job parameters come from `jobs`. Output bytes are a
/// pure function of the inputs.
std::string gantt_svg(const Instance& jobs, const std::vector<GanttLane>& lanes, const GanttOptions& options = {});

/// Same picture as text: one row per lane plus an exact listing.
std::string gantt_text(const Instance& jobs, const std::vector<GanttLane>& lanes, int columns_per_unit = 20);

}  // namespace sched
