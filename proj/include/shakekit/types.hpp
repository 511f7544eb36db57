#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>

#include "shakekit/errors.hpp"

namespace shakekit {

/// Direction of a shake in the device's x/y plane.
enum class ShakeDirection { Up, Down, Left, Right, Unknown };

constexpr std::string_view to_string(ShakeDirection d) {
    switch (d) {
        case ShakeDirection::Up: return "up";
        case ShakeDirection::Down: return "down";
        case ShakeDirection::Left: return "left";
        case ShakeDirection::Right: return "right";
        case ShakeDirection::Unknown: return "unknown";
    }
    return "unknown";
}

constexpr std::optional<ShakeDirection> direction_from_string(std::string_view s) {
    if (s == "up") return ShakeDirection::Up;
    if (s == "down") return ShakeDirection::Down;
    if (s == "left") return ShakeDirection::Left;
    if (s == "right") return ShakeDirection::Right;
    if (s == "unknown") return ShakeDirection::Unknown;
    return std::nullopt;
}

/// One timestamped accelerometer reading. Times are seconds, accelerations
/// gravity-normalized (g). Detection uses only ax/ay; az is carried so
/// real-world logs survive a round trip untouched.
struct AccelSample {
    double t = 0.0;
    double ax = 0.0;
    double ay = 0.0;
    double az = 0.0;

    bool is_finite() const {
        return std::isfinite(t) && std::isfinite(ax) && std::isfinite(ay) &&
               std::isfinite(az);
    }

    friend bool operator==(const AccelSample&, const AccelSample&) = default;
};

/// Named sensitivity presets, lightest to hardest. Each maps to the
/// threshold (g) a sample's planar acceleration must exceed to register.
enum class Sensibility { Lightest, Light, Normal, Hard, Hardest };

struct SensibilityPreset {
    Sensibility level;
    std::string_view name;
    double threshold; // g
};

/// Preset table, strictly increasing in threshold.
inline constexpr std::array<SensibilityPreset, 5> kSensibilityPresets{{
    {Sensibility::Lightest, "lightest", 0.6},
    {Sensibility::Light, "light", 0.9},
    {Sensibility::Normal, "normal", 1.2},
    {Sensibility::Hard, "hard", 1.5},
    {Sensibility::Hardest, "hardest", 1.8},
}};

constexpr double sensibility_threshold(Sensibility s) {
    return kSensibilityPresets[static_cast<std::size_t>(s)].threshold;
}

constexpr std::string_view to_string(Sensibility s) {
    return kSensibilityPresets[static_cast<std::size_t>(s)].name;
}

constexpr std::optional<Sensibility> sensibility_from_string(std::string_view name) {
    for (const SensibilityPreset& p : kSensibilityPresets)
        if (p.name == name) return p.level;
    return std::nullopt;
}

/// Debounce delay applied when none is given explicitly.
inline constexpr double kDefaultDelay = 0.5; // seconds

/// Detector parameters: threshold in g (> 0) and debounce delay in
/// seconds (>= 0). A second shake fires only strictly more than `delay`
/// seconds after the previous emitted event.
struct DetectorConfig {
    double threshold = sensibility_threshold(Sensibility::Normal);
    double delay = kDefaultDelay;

    static constexpr DetectorConfig from_sensibility(Sensibility s,
                                                     double delay = kDefaultDelay) {
        return {sensibility_threshold(s), delay};
    }

    void validate() const {
        if (!std::isfinite(threshold) || threshold <= 0.0)
            throw config_error("detector threshold must be finite and > 0");
        if (!std::isfinite(delay) || delay < 0.0)
            throw config_error("detector delay must be finite and >= 0");
    }

    friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

/// Incremental detector state: the timestamp of the most recently emitted
/// event, absent until the first one fires.
struct DetectorState {
    std::optional<double> last_event_t;
};

/// A detected shake. `magnitude` is max(|ax|, |ay|) of the triggering
/// sample and `direction` its classification; ax/ay are the triggering
/// coordinates themselves.
struct ShakeEvent {
    double t = 0.0;
    ShakeDirection direction = ShakeDirection::Unknown;
    double magnitude = 0.0;
    double ax = 0.0;
    double ay = 0.0;

    friend bool operator==(const ShakeEvent&, const ShakeEvent&) = default;
};

/// Ground-truth annotation for one synthetic shake burst: a pulse of the
/// given peak amplitude (g) on the axis implied by `direction`, starting
/// at `start_t` and lasting `duration` seconds.
struct LabeledBurst {
    double start_t = 0.0;
    ShakeDirection direction = ShakeDirection::Right; // never Unknown
    double amplitude = 0.0;
    double duration = 0.0;

    double end_t() const { return start_t + duration; }

    friend bool operator==(const LabeledBurst&, const LabeledBurst&) = default;
};

} // namespace shakekit
