#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "shakekit/direction.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/types.hpp"

namespace shakekit {

/// Brute-force reference detector.
///
/// Recomputes the accepted-event set by a non-incremental scan: a sample
/// is accepted iff its planar magnitude strictly exceeds the threshold and
/// no previously accepted event lies within the delay (the gap must be
/// strictly greater). Deliberately independent of detect_step and
/// process_trace, sharing only classify_direction, so the two routes can
/// verify each other on arbitrary traces.
inline std::vector<ShakeEvent> oracle_detect(std::span<const AccelSample> samples,
                                             const DetectorConfig& config) {
    if (!std::isfinite(config.threshold) || config.threshold <= 0.0)
        throw config_error("oracle_detect: threshold must be finite and > 0");
    if (!std::isfinite(config.delay) || config.delay < 0.0)
        throw config_error("oracle_detect: delay must be finite and >= 0");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!samples[i].is_finite())
            throw invalid_sample_error("sample " + std::to_string(i) +
                                       ": non-finite field");
        if (i > 0 && samples[i].t <= samples[i - 1].t)
            throw ordering_error("sample " + std::to_string(i) +
                                 ": timestamp not strictly increasing");
    }

    std::vector<ShakeEvent> accepted;
    for (const AccelSample& s : samples) {
        const double magnitude = std::max(std::fabs(s.ax), std::fabs(s.ay));
        if (!(magnitude > config.threshold)) continue;

        // Scan newest-first; the most recent accepted event is the binding
        // constraint, so a blocked sample is rejected on the first probe.
        bool blocked = false;
        for (auto it = accepted.rbegin(); it != accepted.rend(); ++it) {
            if (!(s.t - it->t > config.delay)) {
                blocked = true;
                break;
            }
        }
        if (blocked) continue;

        ShakeEvent event;
        event.t = s.t;
        event.direction = classify_direction(s.ax, s.ay);
        event.magnitude = magnitude;
        event.ax = s.ax;
        event.ay = s.ay;
        accepted.push_back(event);
    }
    return accepted;
}

} // namespace shakekit
