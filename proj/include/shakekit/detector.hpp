#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shakekit/direction.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/types.hpp"

namespace shakekit {

/// True when a sample's planar acceleration strictly exceeds the
/// threshold: max(|ax|, |ay|) > threshold. Ignores az and t.
inline bool shake_predicate(const AccelSample& sample, double threshold) {
    if (!sample.is_finite())
        throw invalid_sample_error("shake_predicate: non-finite sample field");
    if (!std::isfinite(threshold) || threshold <= 0.0)
        throw config_error("shake_predicate: threshold must be finite and > 0");
    return std::max(std::fabs(sample.ax), std::fabs(sample.ay)) > threshold;
}

/// Advance the detector by one sample.
///
/// Emits an event iff the sample satisfies shake_predicate and either no
/// event has fired yet or strictly more than config.delay seconds have
/// elapsed since the last one. Both comparisons are strict; equality never
/// fires. A qualifying first sample always fires. On emission the state
/// advances to the triggering timestamp; otherwise it is left untouched.
///
/// The state remembers only the last emitted event, so this function can
/// reject regressions behind that event but not between quiet samples;
/// ShakeDetector and process_trace enforce full monotonicity.
inline std::optional<ShakeEvent> detect_step(DetectorState& state,
                                             const AccelSample& sample,
                                             const DetectorConfig& config) {
    config.validate();
    if (!sample.is_finite())
        throw invalid_sample_error("detect_step: non-finite sample field");
    if (state.last_event_t && sample.t <= *state.last_event_t)
        throw ordering_error("detect_step: sample time " + std::to_string(sample.t) +
                             " not after last event at " +
                             std::to_string(*state.last_event_t));

    if (!shake_predicate(sample, config.threshold)) return std::nullopt;
    if (state.last_event_t && !(sample.t - *state.last_event_t > config.delay))
        return std::nullopt;

    ShakeEvent event;
    event.t = sample.t;
    event.direction = classify_direction(sample.ax, sample.ay);
    event.magnitude = std::max(std::fabs(sample.ax), std::fabs(sample.ay));
    event.ax = sample.ax;
    event.ay = sample.ay;
    state.last_event_t = sample.t;
    return event;
}

/// Streaming front end over detect_step for one ordered sample feed.
///
/// push() returns the emitted event, if any, for each incoming sample:
/// the point where a caller would hand the event to its application. One
/// instance must be fed by one logical writer in timestamp order;
/// independent instances are unrelated and may run concurrently.
class ShakeDetector {
public:
    ShakeDetector() = default;

    explicit ShakeDetector(DetectorConfig config) : config_(config) {
        config_.validate();
    }

    std::optional<ShakeEvent> push(const AccelSample& sample) {
        if (!sample.is_finite())
            throw invalid_sample_error("ShakeDetector: non-finite sample field");
        if (last_seen_t_ && sample.t <= *last_seen_t_)
            throw ordering_error("ShakeDetector: sample time " +
                                 std::to_string(sample.t) +
                                 " not strictly after previous sample at " +
                                 std::to_string(*last_seen_t_));
        last_seen_t_ = sample.t;
        return detect_step(state_, sample, config_);
    }

    const DetectorConfig& config() const { return config_; }
    const DetectorState& state() const { return state_; }

    /// Forget all history; the next qualifying sample fires immediately.
    void reset() {
        state_ = {};
        last_seen_t_.reset();
    }

private:
    DetectorConfig config_{};
    DetectorState state_{};
    std::optional<double> last_seen_t_{};
};

/// Run the detector over a whole trace: a left fold of detect_step from
/// the empty state. Samples must be finite and strictly increasing in t;
/// violations report the zero-based sample index.
inline std::vector<ShakeEvent> process_trace(std::span<const AccelSample> samples,
                                             const DetectorConfig& config) {
    config.validate();
    std::vector<ShakeEvent> events;
    DetectorState state;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const AccelSample& s = samples[i];
        if (!s.is_finite())
            throw invalid_sample_error("sample " + std::to_string(i) +
                                       ": non-finite field");
        if (i > 0 && s.t <= samples[i - 1].t)
            throw ordering_error("sample " + std::to_string(i) +
                                 ": timestamp not strictly increasing");
        if (auto event = detect_step(state, s, config)) events.push_back(*event);
    }
    return events;
}

} // namespace shakekit
