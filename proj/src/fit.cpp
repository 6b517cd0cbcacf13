#include "strichartz/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace strichartz {

namespace {

struct LineFit {
    double slope, intercept, max_residual;
    std::size_t worst_index;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y)
{
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit f{};
    f.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / m;
    f.max_residual = 0.0;
    f.worst_index = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double res = std::abs(y[i] - (f.slope * x[i] + f.intercept));
        if (res > f.max_residual) {
            f.max_residual = res;
            f.worst_index = i;
        }
    }
    return f;
}

} // namespace

ScalingFit fit_scaling(const std::vector<ScalingFit::Sample>& samples)
{
    if (samples.size() < 4) throw std::invalid_argument("fit_scaling: need >= 4 samples");
    std::vector<double> x, y;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].R > 0.0) || !(samples[i].value > 0.0))
            throw std::invalid_argument("fit_scaling: samples must be positive");
        if (i > 0 && !(samples[i].R > samples[i - 1].R))
            throw std::invalid_argument("fit_scaling: R must be strictly increasing");
        x.push_back(std::log2(samples[i].R));
        y.push_back(std::log2(samples[i].value));
    }

    ScalingFit fit;
    fit.samples = samples;
    LineFit full = fit_line(x, y);

    // Residual of the smallest-R sample against the others' worst.
    double res_first = std::abs(y[0] - (full.slope * x[0] + full.intercept));
    double res_rest = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        res_rest = std::max(res_rest, std::abs(y[i] - (full.slope * x[i] + full.intercept)));

    if (samples.size() > 4 && res_first > 3.0 * res_rest) {
        std::vector<double> x2(x.begin() + 1, x.end());
        std::vector<double> y2(y.begin() + 1, y.end());
        LineFit reduced = fit_line(x2, y2);
        fit.slope = reduced.slope;
        fit.intercept = reduced.intercept;
        fit.max_residual = reduced.max_residual;
        fit.dropped_first = true;
    } else {
        fit.slope = full.slope;
        fit.intercept = full.intercept;
        fit.max_residual = full.max_residual;
    }
    return fit;
}

} // namespace strichartz
