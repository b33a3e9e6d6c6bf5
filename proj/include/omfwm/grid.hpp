// grid.hpp — Frequency grids and computed spectrum series

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "omfwm/params.hpp"

namespace omfwm {

// Strictly increasing, finite sequence of angular frequencies (rad/s).
class FrequencyGrid {
public:
    FrequencyGrid() = default;
    explicit FrequencyGrid(std::vector<double> points);

    static FrequencyGrid linspace(double from, double to, std::size_t steps);
    // Geometric spacing; requires from, to > 0.
    static FrequencyGrid logspace(double from, double to, std::size_t steps);

    std::span<const double> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

private:
    std::vector<double> points_;
};

enum class SpectrumKind { gain_signal, gain_fwm, noise_db, noise_raw };

std::string to_string(SpectrumKind kind);

struct SpectrumSeries {
    FrequencyGrid grid;
    std::vector<double> values;
    SpectrumKind kind{SpectrumKind::noise_raw};
    SystemParams params_snapshot;
};

}  // namespace omfwm
