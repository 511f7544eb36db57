#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shakekit/detail/numeric.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/types.hpp"

namespace shakekit {

/// Exact header line of the trace CSV format.
inline constexpr std::string_view kTraceHeader = "t,ax,ay,az";

/// An ordered accelerometer trace plus a note on where it came from
/// (file path or "synthetic"). The source is not serialized.
struct TraceDocument {
    std::vector<AccelSample> samples;
    std::string source;
};

/// Events produced by one detector run. The config is in-memory metadata
/// only; the JSONL wire format carries just the events, so a document
/// read back from disk has no config.
struct EventDocument {
    std::vector<ShakeEvent> events;
    std::optional<DetectorConfig> config;
};

namespace detail {

inline double require_number_field(const nlohmann::json& obj, const char* key,
                                   const char* what, std::size_t line) {
    if (!obj.contains(key))
        throw parse_error(std::string(what) + " line " + std::to_string(line) +
                              ": missing key \"" + key + "\"",
                          line);
    const nlohmann::json& v = obj.at(key);
    if (!v.is_number())
        throw parse_error(std::string(what) + " line " + std::to_string(line) +
                              ": key \"" + key + "\" is not a number",
                          line);
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw parse_error(std::string(what) + " line " + std::to_string(line) +
                              ": key \"" + key + "\" is not finite",
                          line);
    return d;
}

inline ShakeDirection require_direction_field(const nlohmann::json& obj,
                                              const char* key, const char* what,
                                              std::size_t line) {
    if (!obj.contains(key) || !obj.at(key).is_string())
        throw parse_error(std::string(what) + " line " + std::to_string(line) +
                              ": missing or non-string \"" + key + "\"",
                          line);
    const std::string s = obj.at(key).get<std::string>();
    const auto dir = direction_from_string(s);
    if (!dir)
        throw parse_error(std::string(what) + " line " + std::to_string(line) +
                              ": unknown direction \"" + s + "\"",
                          line);
    return *dir;
}

inline nlohmann::json parse_json_line(std::string_view line, const char* what,
                                      std::size_t line_no, std::size_t n_keys) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
        throw parse_error(std::string(what) + " line " + std::to_string(line_no) +
                              ": malformed JSON",
                          line_no);
    }
    if (!obj.is_object() || obj.size() != n_keys)
        throw parse_error(std::string(what) + " line " + std::to_string(line_no) +
                              ": expected an object with " + std::to_string(n_keys) +
                              " keys",
                          line_no);
    return obj;
}

} // namespace detail

/// Parse a trace CSV document. The header must be exactly "t,ax,ay,az";
/// every row must hold four finite numbers; timestamps must strictly
/// increase. Errors carry the 1-based line (header is line 1). Nothing is
/// returned on error; there are no partial documents.
inline TraceDocument parse_trace(std::string_view text, std::string source = "") {
    TraceDocument doc;
    doc.source = std::move(source);

    bool saw_header = false;
    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (line_no == 1) {
            if (line != kTraceHeader)
                throw format_error("trace line 1: expected header \"" +
                                   std::string(kTraceHeader) + "\"");
            saw_header = true;
            return;
        }
        std::string_view fields[4];
        std::size_t n_fields = 0;
        detail::split_fields(line, fields, 4, n_fields);
        if (n_fields != 4)
            throw parse_error("trace line " + std::to_string(line_no) +
                                  ": expected 4 comma-separated fields, got " +
                                  std::to_string(n_fields),
                              line_no);
        static constexpr const char* kNames[4] = {"t", "ax", "ay", "az"};
        double values[4];
        for (int i = 0; i < 4; ++i) {
            const auto v = detail::parse_finite_double(fields[i]);
            if (!v)
                throw parse_error("trace line " + std::to_string(line_no) +
                                      ": field '" + kNames[i] +
                                      "' is not a finite number",
                                  line_no);
            values[i] = *v;
        }
        if (!doc.samples.empty() && values[0] <= doc.samples.back().t)
            throw ordering_error("trace line " + std::to_string(line_no) +
                                     ": timestamp not strictly increasing",
                                 line_no);
        doc.samples.push_back({values[0], values[1], values[2], values[3]});
    });
    if (!saw_header)
        throw format_error("trace line 1: expected header \"" +
                           std::string(kTraceHeader) + "\"");
    return doc;
}

/// Serialize a trace document: header plus one 6-decimal CSV row per
/// sample, UNIX newlines. Byte-deterministic.
inline std::string write_trace(const TraceDocument& doc) {
    std::string out{kTraceHeader};
    out += '\n';
    for (const AccelSample& s : doc.samples) {
        out += detail::format_fixed6(s.t);
        out += ',';
        out += detail::format_fixed6(s.ax);
        out += ',';
        out += detail::format_fixed6(s.ay);
        out += ',';
        out += detail::format_fixed6(s.az);
        out += '\n';
    }
    return out;
}

/// Serialize events as JSONL, one compact object per line with fixed key
/// order and 6-decimal numbers. An empty event list yields empty output.
inline std::string write_events(const EventDocument& doc) {
    std::string out;
    for (const ShakeEvent& e : doc.events) {
        out += "{\"t\":";
        out += detail::format_fixed6(e.t);
        out += ",\"direction\":\"";
        out += to_string(e.direction);
        out += "\",\"magnitude\":";
        out += detail::format_fixed6(e.magnitude);
        out += ",\"ax\":";
        out += detail::format_fixed6(e.ax);
        out += ",\"ay\":";
        out += detail::format_fixed6(e.ay);
        out += "}\n";
    }
    return out;
}

/// Parse an event JSONL document. Each line must be an object holding
/// exactly {t, direction, magnitude, ax, ay}; magnitudes must equal
/// max(|ax|, |ay|); timestamps must strictly increase. The returned
/// document has no config (the wire format does not carry one).
inline EventDocument read_events(std::string_view text) {
    EventDocument doc;
    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const nlohmann::json obj = detail::parse_json_line(line, "events", line_no, 5);
        ShakeEvent e;
        e.t = detail::require_number_field(obj, "t", "events", line_no);
        e.direction = detail::require_direction_field(obj, "direction", "events", line_no);
        e.magnitude = detail::require_number_field(obj, "magnitude", "events", line_no);
        e.ax = detail::require_number_field(obj, "ax", "events", line_no);
        e.ay = detail::require_number_field(obj, "ay", "events", line_no);
        if (e.magnitude != std::max(std::fabs(e.ax), std::fabs(e.ay)))
            throw parse_error("events line " + std::to_string(line_no) +
                                  ": magnitude does not equal max(|ax|, |ay|)",
                              line_no);
        if (!doc.events.empty() && e.t <= doc.events.back().t)
            throw parse_error("events line " + std::to_string(line_no) +
                                  ": timestamp not strictly increasing",
                              line_no);
        doc.events.push_back(e);
    });
    return doc;
}

/// Serialize ground-truth bursts as JSONL with fixed key order and
/// 6-decimal numbers.
inline std::string write_labels(std::span<const LabeledBurst> labels) {
    std::string out;
    for (const LabeledBurst& b : labels) {
        out += "{\"start_t\":";
        out += detail::format_fixed6(b.start_t);
        out += ",\"direction\":\"";
        out += to_string(b.direction);
        out += "\",\"amplitude\":";
        out += detail::format_fixed6(b.amplitude);
        out += ",\"duration\":";
        out += detail::format_fixed6(b.duration);
        out += "}\n";
    }
    return out;
}

/// Parse a label JSONL document. Each line must be an object holding
/// exactly {start_t, direction, amplitude, duration}; the direction may
/// not be "unknown"; amplitude and duration must be positive; start times
/// must strictly increase.
inline std::vector<LabeledBurst> read_labels(std::string_view text) {
    std::vector<LabeledBurst> labels;
    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const nlohmann::json obj = detail::parse_json_line(line, "labels", line_no, 4);
        LabeledBurst b;
        b.start_t = detail::require_number_field(obj, "start_t", "labels", line_no);
        b.direction = detail::require_direction_field(obj, "direction", "labels", line_no);
        b.amplitude = detail::require_number_field(obj, "amplitude", "labels", line_no);
        b.duration = detail::require_number_field(obj, "duration", "labels", line_no);
        if (b.direction == ShakeDirection::Unknown)
            throw parse_error("labels line " + std::to_string(line_no) +
                                  ": direction may not be \"unknown\"",
                              line_no);
        if (b.amplitude <= 0.0)
            throw parse_error("labels line " + std::to_string(line_no) +
                                  ": amplitude must be > 0",
                              line_no);
        if (b.duration <= 0.0)
            throw parse_error("labels line " + std::to_string(line_no) +
                                  ": duration must be > 0",
                              line_no);
        if (!labels.empty() && b.start_t <= labels.back().start_t)
            throw parse_error("labels line " + std::to_string(line_no) +
                                  ": start_t not strictly increasing",
                              line_no);
        labels.push_back(b);
    });
    return labels;
}

} // namespace shakekit
