#include "sched/gantt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace sched {

namespace {

constexpr double kMargin = 40.0;
constexpr double kLabelWidth = 60.0;
constexpr double kLaneHeight = 50.0;
constexpr double kBoxHeight = 28.0;

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

TimePoint horizon_of(const Instance& jobs, const std::vector<GanttLane>& lanes) {
    TimePoint end(1);
    for (const GanttLane& lane : lanes) {
        for (const ScheduleEntry& e : lane.schedule.entries) {
            const TimePoint finish = e.start + jobs.job(e.id).processing;
            if (finish > end) end = finish;
        }
    }
    return end;
}

long axis_step(double horizon) {
    return std::max(1L, static_cast<long>(std::ceil(horizon / 20.0)));
}

}  // namespace

std::string gantt_svg(const Instance& jobs, const std::vector<GanttLane>& lanes, const GanttOptions& options) {
    const double horizon = horizon_of(jobs, lanes).get_d();
    const double scale = options.pixels_per_unit;
    const double width = kMargin * 2 + kLabelWidth + horizon * scale;
    const double axis_y = kMargin + kLaneHeight * static_cast<double>(lanes.size()) + 10;
    const double height = axis_y + 30 + kMargin / 2;
    auto x_of = [&](const TimePoint& t) { return kMargin + kLabelWidth + t.get_d() * scale; };
    auto lane_top = [&](std::size_t k) { return kMargin + kLaneHeight * static_cast<double>(k); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
        << "\" font-family=\"monospace\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double x0 = x_of(TimePoint(0));
    const double x1 = x_of(TimePoint(0)) + horizon * scale;
    svg << "<g class=\"axis\" stroke=\"black\">\n";
    svg << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(axis_y) << "\" x2=\"" << fixed(x1) << "\" y2=\""
        << fixed(axis_y) << "\"/>\n";
    const long step = axis_step(horizon);
    for (long t = 0; static_cast<double>(t) <= horizon; t += step) {
        const double x = x_of(TimePoint(t));
        svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(axis_y) << "\" x2=\"" << fixed(x) << "\" y2=\""
            << fixed(axis_y + 5) << "\"/>\n";
        svg << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(axis_y + 18) << "\" stroke=\"none\" text-anchor=\"middle\">"
            << t << "</text>\n";
    }
    svg << "</g>\n";

    // Box centres for the charge layer, keyed by (lane, job).
    std::map<std::pair<std::size_t, JobId>, std::pair<double, double>> centres;
    for (std::size_t k = 0; k < lanes.size(); ++k) {
        const double top = lane_top(k);
        svg << "<g class=\"lane\">\n";
        svg << "<text x=\"" << fixed(kMargin) << "\" y=\"" << fixed(top + kBoxHeight / 2 + 4) << "\">"
            << escape(lanes[k].label) << "</text>\n";
        for (const ScheduleEntry& e : lanes[k].schedule.by_start()) {
            const Job& j = jobs.job(e.id);
            const double x = x_of(e.start);
            const double w = j.processing.get_d() * scale;
            centres[{k, e.id}] = {x + w / 2, top + kBoxHeight / 2};
            svg << "<rect x=\"" << fixed(x) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(w) << "\" height=\""
                << fixed(kBoxHeight) << "\" fill=\"" << (k == 0 ? "#9ecae1" : "#fdd0a2")
                << "\" stroke=\"black\"><title>job " << e.id << " [" << to_string(e.start) << ", "
                << to_string(Rational(e.start + j.processing)) << ")</title></rect>\n";
            svg << "<text x=\"" << fixed(x + w / 2) << "\" y=\"" << fixed(top + kBoxHeight / 2 + 4)
                << "\" text-anchor=\"middle\">" << e.id << "</text>\n";
            if (options.ticks) {
                const double base = top + kBoxHeight;
                svg << "<circle class=\"announce\" cx=\"" << fixed(x_of(j.announce)) << "\" cy=\"" << fixed(base + 6)
                    << "\" r=\"3\" fill=\"none\" stroke=\"black\"/>\n";
                svg << "<line class=\"release\" x1=\"" << fixed(x_of(j.release)) << "\" y1=\"" << fixed(base)
                    << "\" x2=\"" << fixed(x_of(j.release)) << "\" y2=\"" << fixed(base + 10)
                    << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            }
        }
        svg << "</g>\n";
    }

    if (options.charges != nullptr && lanes.size() >= 2) {
        svg << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
               "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#d62728\"/></marker></defs>\n";
        svg << "<g class=\"charges\" stroke=\"#d62728\">\n";
        for (const ChargeBucket& b : options.charges->buckets) {
            const auto to = centres.find({0, b.alg_job});
            if (to == centres.end()) continue;
            for (const Charge& c : b.charges) {
                const auto from = centres.find({1, c.opt_job});
                if (from == centres.end()) continue;
                svg << "<line x1=\"" << fixed(from->second.first) << "\" y1=\"" << fixed(from->second.second)
                    << "\" x2=\"" << fixed(to->second.first) << "\" y2=\"" << fixed(to->second.second)
                    << "\" marker-end=\"url(#arrow)\"><title>" << to_string(c.label) << " " << to_string(c.span)
                    << "</title></line>\n";
            }
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string gantt_text(const Instance& jobs, const std::vector<GanttLane>& lanes, int columns_per_unit) {
    if (columns_per_unit < 1) throw MalformedInput("gantt_text: columns per unit must be positive");
    const double horizon = horizon_of(jobs, lanes).get_d();
    const auto columns = static_cast<std::size_t>(std::ceil(horizon * columns_per_unit));
    std::size_t label_width = 4;
    for (const GanttLane& lane : lanes) label_width = std::max(label_width, lane.label.size());
    auto column_of = [&](const TimePoint& t) {
        return static_cast<std::size_t>(std::llround(t.get_d() * columns_per_unit));
    };

    std::ostringstream out;
    for (const GanttLane& lane : lanes) {
        std::string row(columns, '.');
        for (const ScheduleEntry& e : lane.schedule.by_start()) {
            const std::size_t from = std::min(column_of(e.start), columns);
            const std::size_t to = std::min(column_of(e.start + jobs.job(e.id).processing), columns);
            for (std::size_t c = from; c < to; ++c) row[c] = '=';
            const std::string id = std::to_string(e.id);
            if (from < to) row[from] = '[';
            for (std::size_t c = 0; c < id.size() && from + 1 + c < to; ++c) row[from + 1 + c] = id[c];
        }
        out << lane.label << std::string(label_width - lane.label.size(), ' ') << " |" << row << "|\n";
    }
    std::string axis(columns + 1, ' ');
    const long step = axis_step(horizon);
    for (long t = 0; static_cast<double>(t) <= horizon; t += step) {
        const std::string mark = std::to_string(t);
        const std::size_t at = column_of(TimePoint(t));
        for (std::size_t c = 0; c < mark.size() && at + c < axis.size(); ++c) axis[at + c] = mark[c];
    }
    out << std::string(label_width, ' ') << "  " << axis << "\n";
    for (const GanttLane& lane : lanes) {
        out << lane.label << ":";
        if (lane.schedule.entries.empty()) out << " (empty)";
        out << "\n";
        for (const ScheduleEntry& e : lane.schedule.by_start()) {
            const Job& j = jobs.job(e.id);
            out << "  job " << e.id << " [" << to_string(e.start) << ", " << to_string(Rational(e.start + j.processing))
                << ")  a=" << to_string(j.announce) << " r=" << to_string(j.release) << " d=" << to_string(j.deadline)
                << "\n";
        }
    }
    return out.str();
}

}  // namespace sched
