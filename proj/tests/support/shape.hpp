// shape.hpp — Peak location and width extraction on sampled series

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace omfwm::test {

inline std::size_t argmax(std::span<const double> v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

// Full width at half of (peak - baseline), linearly interpolated between samples.
inline double fwhm(std::span<const double> x, std::span<const double> y, double baseline = 0.0) {
    const std::size_t k = argmax(y);
    const double half = baseline + 0.5 * (y[k] - baseline);
    std::size_t lo = k, hi = k;
    while (lo > 0 && y[lo] > half) --lo;
    while (hi + 1 < y.size() && y[hi] > half) ++hi;
    if (y[lo] > half || y[hi] > half) throw std::runtime_error("peak not resolved on grid");
    auto cross = [&](std::size_t a, std::size_t b) {
        return x[a] + (half - y[a]) * (x[b] - x[a]) / (y[b] - y[a]);
    };
    return cross(hi - 1, hi) - cross(lo, lo + 1);
}

}  // namespace omfwm::test
