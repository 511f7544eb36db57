#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shakekit/detail/numeric.hpp"
#include "shakekit/detector.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/trace_io.hpp"
#include "shakekit/types.hpp"

namespace shakekit {

/// Matching tolerance applied when none is given explicitly.
inline constexpr double kDefaultTolerance = 0.1; // seconds

/// Detection quality of one event list against ground truth.
///
/// precision = TP/(TP+FP) and recall = TP/(TP+FN), both 1.0 when the
/// denominator is zero (no mistakes possible). mean_latency averages
/// event.t - burst.start_t over matched pairs and is absent when nothing
/// matched. direction_accuracy is the matched fraction whose directions
/// agree, 1.0 when there are no matched pairs.
struct EvalReport {
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    double precision = 1.0;
    double recall = 1.0;
    std::optional<double> mean_latency;
    double direction_accuracy = 1.0;

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Score events against labeled bursts by greedy chronological one-to-one
/// matching: each event takes the earliest unmatched label whose window
/// [start_t, start_t + duration + tolerance] contains it. Leftover events
/// are false positives, leftover labels false negatives. A matched pair
/// with disagreeing directions still counts as detected; it only lowers
/// direction_accuracy. Both inputs must be sorted by time.
inline EvalReport match_events(std::span<const ShakeEvent> events,
                               std::span<const LabeledBurst> labels,
                               double tolerance = kDefaultTolerance) {
    if (!std::isfinite(tolerance) || tolerance < 0.0)
        throw config_error("match tolerance must be finite and >= 0");
    for (std::size_t i = 1; i < events.size(); ++i)
        if (events[i].t <= events[i - 1].t)
            throw ordering_error("events not sorted by strictly increasing time");
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i].start_t <= labels[i - 1].start_t)
            throw ordering_error("labels not sorted by strictly increasing start_t");

    std::vector<bool> matched(labels.size(), false);
    std::size_t tp = 0, fp = 0, direction_hits = 0;
    double latency_sum = 0.0;

    for (const ShakeEvent& e : events) {
        bool found = false;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (matched[j]) continue;
            if (e.t < labels[j].start_t) break; // later labels start later still
            if (e.t <= labels[j].end_t() + tolerance) {
                matched[j] = true;
                ++tp;
                latency_sum += e.t - labels[j].start_t;
                if (e.direction == labels[j].direction) ++direction_hits;
                found = true;
                break;
            }
        }
        if (!found) ++fp;
    }

    EvalReport r;
    r.true_positives = tp;
    r.false_positives = fp;
    r.false_negatives = labels.size() - tp;
    r.precision = (tp + fp == 0) ? 1.0
                                 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    r.recall = (tp + r.false_negatives == 0)
                   ? 1.0
                   : static_cast<double>(tp) / static_cast<double>(labels.size());
    if (tp > 0) r.mean_latency = latency_sum / static_cast<double>(tp);
    r.direction_accuracy =
        (tp == 0) ? 1.0 : static_cast<double>(direction_hits) / static_cast<double>(tp);
    return r;
}

/// One point of a parameter sweep.
struct SweepCell {
    double threshold = 0.0;
    double delay = 0.0;
    EvalReport report;

    friend bool operator==(const SweepCell&, const SweepCell&) = default;
};

/// Evaluate every (threshold, delay) pair of the grids against one trace,
/// row-major: all delays for the first threshold, then the next.
/// Deterministic for identical inputs.
inline std::vector<SweepCell> sweep(const TraceDocument& trace,
                                    std::span<const LabeledBurst> labels,
                                    std::span<const double> thresholds,
                                    std::span<const double> delays,
                                    double tolerance = kDefaultTolerance) {
    if (thresholds.empty() || delays.empty())
        throw config_error("sweep grids must be non-empty");
    for (double threshold : thresholds)
        if (!std::isfinite(threshold) || threshold <= 0.0)
            throw config_error("sweep threshold values must be finite and > 0");
    for (double delay : delays)
        if (!std::isfinite(delay) || delay < 0.0)
            throw config_error("sweep delay values must be finite and >= 0");

    std::vector<SweepCell> cells;
    cells.reserve(thresholds.size() * delays.size());
    for (double threshold : thresholds) {
        for (double delay : delays) {
            const DetectorConfig config{threshold, delay};
            const auto events = process_trace(trace.samples, config);
            cells.push_back({threshold, delay, match_events(events, labels, tolerance)});
        }
    }
    return cells;
}

/// Exact header line of the sweep CSV format.
inline constexpr std::string_view kSweepHeader =
    "threshold,delay,tp,fp,fn,precision,recall,mean_latency,direction_accuracy";

/// Serialize sweep cells as CSV with 6-decimal numbers; an absent
/// mean_latency becomes an empty field.
inline std::string write_sweep_csv(std::span<const SweepCell> cells) {
    std::string out{kSweepHeader};
    out += '\n';
    for (const SweepCell& c : cells) {
        out += detail::format_fixed6(c.threshold);
        out += ',';
        out += detail::format_fixed6(c.delay);
        out += ',';
        out += std::to_string(c.report.true_positives);
        out += ',';
        out += std::to_string(c.report.false_positives);
        out += ',';
        out += std::to_string(c.report.false_negatives);
        out += ',';
        out += detail::format_fixed6(c.report.precision);
        out += ',';
        out += detail::format_fixed6(c.report.recall);
        out += ',';
        if (c.report.mean_latency) out += detail::format_fixed6(*c.report.mean_latency);
        out += ',';
        out += detail::format_fixed6(c.report.direction_accuracy);
        out += '\n';
    }
    return out;
}

/// Parse a sweep CSV document written by write_sweep_csv.
inline std::vector<SweepCell> parse_sweep_csv(std::string_view text) {
    std::vector<SweepCell> cells;
    bool saw_header = false;
    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (line_no == 1) {
            if (line != kSweepHeader)
                throw format_error("sweep line 1: expected header \"" +
                                   std::string(kSweepHeader) + "\"");
            saw_header = true;
            return;
        }
        std::string_view fields[9];
        std::size_t n_fields = 0;
        detail::split_fields(line, fields, 9, n_fields);
        if (n_fields != 9)
            throw parse_error("sweep line " + std::to_string(line_no) +
                                  ": expected 9 comma-separated fields, got " +
                                  std::to_string(n_fields),
                              line_no);

        auto number = [&](int i, const char* name, double lo, double hi) {
            const auto v = detail::parse_finite_double(fields[i]);
            if (!v || *v < lo || *v > hi)
                throw parse_error("sweep line " + std::to_string(line_no) +
                                      ": field '" + name + "' out of range",
                                  line_no);
            return *v;
        };
        auto count = [&](int i, const char* name) {
            const auto v = detail::parse_count(fields[i]);
            if (!v)
                throw parse_error("sweep line " + std::to_string(line_no) +
                                      ": field '" + name +
                                      "' is not a non-negative integer",
                                  line_no);
            return *v;
        };

        constexpr double kInf = std::numeric_limits<double>::infinity();
        SweepCell c;
        c.threshold = number(0, "threshold", 0.0, kInf);
        c.delay = number(1, "delay", 0.0, kInf);
        c.report.true_positives = count(2, "tp");
        c.report.false_positives = count(3, "fp");
        c.report.false_negatives = count(4, "fn");
        c.report.precision = number(5, "precision", 0.0, 1.0);
        c.report.recall = number(6, "recall", 0.0, 1.0);
        if (!fields[7].empty())
            c.report.mean_latency = number(7, "mean_latency", -kInf, kInf);
        c.report.direction_accuracy = number(8, "direction_accuracy", 0.0, 1.0);
        cells.push_back(c);
    });
    if (!saw_header)
        throw format_error("sweep line 1: expected header \"" +
                           std::string(kSweepHeader) + "\"");
    return cells;
}

/// Render a report as one line of JSON with fixed key order, 6-decimal
/// ratios, and null for an absent mean latency.
inline std::string write_report_json(const EvalReport& r) {
    std::string out = "{\"true_positives\":";
    out += std::to_string(r.true_positives);
    out += ",\"false_positives\":";
    out += std::to_string(r.false_positives);
    out += ",\"false_negatives\":";
    out += std::to_string(r.false_negatives);
    out += ",\"precision\":";
    out += detail::format_fixed6(r.precision);
    out += ",\"recall\":";
    out += detail::format_fixed6(r.recall);
    out += ",\"mean_latency\":";
    out += r.mean_latency ? detail::format_fixed6(*r.mean_latency) : "null";
    out += ",\"direction_accuracy\":";
    out += detail::format_fixed6(r.direction_accuracy);
    out += "}";
    return out;
}

} // namespace shakekit
