#include "lifecycle/growth.hpp"

#include "lifecycle/errors.hpp"

namespace lifecycle {

const char* to_string(GrowthState state) {
    switch (state) {
        case GrowthState::Growth: return "growth";
        case GrowthState::Stable: return "stable";
        case GrowthState::Decline: return "decline";
    }
    return "unknown";
}

GrowthIndicators classify_growth(double t, double x, double epsilon) {
    if (!(t > 0.0)) {
        throw NonPositiveTime("classify_growth: t must be positive");
    }
    GrowthIndicators result;
    result.t = t;
    result.x = x;
    result.rate = x / t;
    result.acceleration = result.rate / t;
    if (result.rate > epsilon) {
        result.state = GrowthState::Growth;
    } else if (result.rate < -epsilon) {
        result.state = GrowthState::Decline;
    } else {
        result.state = GrowthState::Stable;
    }
    return result;
}

}  // namespace lifecycle
