#pragma once

namespace lifecycle {

enum class GrowthState { Growth, Stable, Decline };

const char* to_string(GrowthState state);

// Growth-rate classification of a stock-price value x observed at time t.
struct GrowthIndicators {
    double t = 0.0;
    double x = 0.0;
    double rate = 0.0;          // x / t
    double acceleration = 0.0;  // rate / t
    GrowthState state = GrowthState::Stable;
};

// rate > epsilon means Growth, rate < -epsilon means Decline, Stable
// otherwise. Throws NonPositiveTime unless t > 0.
GrowthIndicators classify_growth(double t, double x, double epsilon = 1e-12);

}  // namespace lifecycle
