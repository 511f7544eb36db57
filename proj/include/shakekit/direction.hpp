#pragma once

#include <cmath>

#include "shakekit/errors.hpp"
#include "shakekit/types.hpp"

namespace shakekit {

/// Classify the direction of an (ax, ay) acceleration pair.
///
/// The dominant axis wins: x dominance gives Right (ax > 0) or Left
/// (ax < 0), y dominance gives Down (ay > 0) or Up (ay < 0). An exact tie
/// |ax| == |ay|, including the origin, is Unknown; there is no epsilon
/// band. Pure and stateless.
inline ShakeDirection classify_direction(double ax, double ay) {
    if (!std::isfinite(ax) || !std::isfinite(ay))
        throw invalid_sample_error("classify_direction: non-finite acceleration");
    const double mx = std::fabs(ax);
    const double my = std::fabs(ay);
    if (mx > my) return ax > 0.0 ? ShakeDirection::Right : ShakeDirection::Left;
    if (mx < my) return ay > 0.0 ? ShakeDirection::Down : ShakeDirection::Up;
    return ShakeDirection::Unknown;
}

} // namespace shakekit
