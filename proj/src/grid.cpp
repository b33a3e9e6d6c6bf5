#include "omfwm/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace omfwm {

FrequencyGrid::FrequencyGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("FrequencyGrid: empty grid");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]))
            throw std::invalid_argument("FrequencyGrid: non-finite grid point");
        if (i > 0 && !(points_[i] > points_[i - 1]))
            throw std::invalid_argument("FrequencyGrid: grid must be strictly increasing");
    }
}

FrequencyGrid FrequencyGrid::linspace(double from, double to, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("FrequencyGrid::linspace: steps must be > 0");
    if (steps == 1) return FrequencyGrid({from});
    std::vector<double> pts(steps);
    const double h = (to - from) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) pts[i] = from + h * static_cast<double>(i);
    pts.back() = to;
    return FrequencyGrid(std::move(pts));
}

FrequencyGrid FrequencyGrid::logspace(double from, double to, std::size_t steps) {
    if (!(from > 0.0) || !(to > 0.0))
        throw std::invalid_argument("FrequencyGrid::logspace: bounds must be > 0");
    if (steps == 0) throw std::invalid_argument("FrequencyGrid::logspace: steps must be > 0");
    if (steps == 1) return FrequencyGrid({from});
    std::vector<double> pts(steps);
    const double lf = std::log(from);
    const double h = (std::log(to) - lf) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) pts[i] = std::exp(lf + h * static_cast<double>(i));
    pts.front() = from;
    pts.back() = to;
    return FrequencyGrid(std::move(pts));
}

std::string to_string(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::gain_signal: return "gain_signal";
        case SpectrumKind::gain_fwm: return "gain_fwm";
        case SpectrumKind::noise_db: return "noise_db";
        case SpectrumKind::noise_raw: return "noise_raw";
    }
    return "unknown";
}

}  // namespace omfwm
