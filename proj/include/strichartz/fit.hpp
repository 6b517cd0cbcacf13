#pragma once

#include <cstddef>
#include <vector>

namespace strichartz {

/// Log-log least-squares fit of samples (R, value): value ~ C R^slope.
/// The fit drops the smallest-R sample when its residual exceeds three
/// times the worst of the rest (pre-asymptotic contamination) and records
/// that it did.
struct ScalingFit {
    struct Sample {
        double R;
        double value;
    };

    std::vector<Sample> samples;
    double slope = 0.0;
    double intercept = 0.0;      // log2 of the constant
    double max_residual = 0.0;   // in log2 units, over the fitted samples
    bool dropped_first = false;
};

/// Requires >= 4 samples with positive R and value, R strictly increasing.
ScalingFit fit_scaling(const std::vector<ScalingFit::Sample>& samples);

} // namespace strichartz
