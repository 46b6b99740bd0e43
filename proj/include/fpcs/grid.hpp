#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "fpcs/error.hpp"

namespace fpcs {

/// Uniform 1D grid with FFT point convention: n_points samples at
/// q_min + j h, j = 0..n-1, h = (q_max - q_min) / n_points.
struct Grid {
    double q_min;
    double q_max;
    int n_points;

    Grid(double q_min_, double q_max_, int n_points_)
        : q_min(q_min_), q_max(q_max_), n_points(n_points_) {
        if (!(std::isfinite(q_min) && std::isfinite(q_max) && q_max > q_min)) {
            throw invalid_input("Grid: require finite q_max > q_min");
        }
        if (n_points < 2) {
            throw invalid_input("Grid: require n_points >= 2");
        }
    }

    double spacing() const noexcept { return (q_max - q_min) / n_points; }
    double point(int i) const noexcept { return q_min + i * spacing(); }

    bool is_power_of_two() const noexcept {
        return n_points > 0 && (n_points & (n_points - 1)) == 0;
    }

    /// Spectral operations need a power-of-two grid with at least 16 points.
    void require_spectral() const {
        if (n_points < 16 || !is_power_of_two()) {
            throw invalid_input("Grid: spectral operations need a power-of-two grid, n >= 16");
        }
    }
};

/// Complex wavefunction samples on a Grid at a fixed time.
struct WaveField {
    Grid grid;
    double tau;
    std::vector<std::complex<double>> values;
};

/// Sample psi(q, tau) on every grid point.
template <class Psi>
WaveField sample(const Grid& grid, double tau, Psi&& psi) {
    WaveField field{grid, tau, {}};
    field.values.resize(static_cast<std::size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i) {
        field.values[static_cast<std::size_t>(i)] = psi(grid.point(i));
    }
    return field;
}

}  // namespace fpcs
