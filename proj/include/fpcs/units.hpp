#pragma once

#include <cmath>
#include <string>

#include "fpcs/error.hpp"

namespace fpcs {

namespace constants {
inline constexpr double electron_mass_kg = 9.10938e-31;
inline constexpr double hbar_Js = 1.05457e-34;
}  // namespace constants

/// Scales (m, hbar, l) fixing the map between dimensional and dimensionless
/// variables:
///
///   q = x / l,   tau = hbar t / (m l^2),   p = l p_x / hbar,
///   psi(q, tau) = sqrt(l) Psi(l q, m l^2 tau / hbar).
///
/// l is a free modeling choice; there is no default for it.
class UnitSystem {
public:
    UnitSystem(double mass_kg, double hbar_Js, double length_m)
        : mass_kg_(mass_kg), hbar_Js_(hbar_Js), length_m_(length_m) {
        if (!(std::isfinite(mass_kg) && mass_kg > 0.0) ||
            !(std::isfinite(hbar_Js) && hbar_Js > 0.0) ||
            !(std::isfinite(length_m) && length_m > 0.0)) {
            throw invalid_input("UnitSystem: mass, hbar and length must be finite and > 0");
        }
    }

    /// Electron-mass system with the SI value of hbar.
    static UnitSystem electron(double length_m) {
        return UnitSystem(constants::electron_mass_kg, constants::hbar_Js, length_m);
    }

    double mass_kg() const noexcept { return mass_kg_; }
    double hbar_Js() const noexcept { return hbar_Js_; }
    double length_m() const noexcept { return length_m_; }

    /// tau per second: hbar / (m l^2).
    double tau_per_second() const noexcept {
        return hbar_Js_ / (mass_kg_ * length_m_ * length_m_);
    }

private:
    double mass_kg_;
    double hbar_Js_;
    double length_m_;
};

struct DimensionlessState {
    double q;
    double tau;
    double p;
};

struct DimensionalState {
    double x;    // [m]
    double t;    // [s]
    double p_x;  // [kg m/s]
};

namespace detail {
inline void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw invalid_input(std::string(name) + " must be finite");
    }
}
}  // namespace detail

inline DimensionlessState to_dimensionless(double x, double t, double p_x,
                                           const UnitSystem& u) {
    detail::require_finite(x, "x");
    detail::require_finite(t, "t");
    detail::require_finite(p_x, "p_x");
    return {x / u.length_m(), t * u.tau_per_second(),
            u.length_m() * p_x / u.hbar_Js()};
}

inline DimensionalState to_dimensional(double q, double tau, double p,
                                       const UnitSystem& u) {
    detail::require_finite(q, "q");
    detail::require_finite(tau, "tau");
    detail::require_finite(p, "p");
    return {q * u.length_m(), tau / u.tau_per_second(),
            p * u.hbar_Js() / u.length_m()};
}

}  // namespace fpcs
