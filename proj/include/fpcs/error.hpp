#pragma once

#include <stdexcept>
#include <string>

namespace fpcs {

/// Base class for all fpcs errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite or out-of-domain argument.
class invalid_input : public error {
public:
    using error::error;
};

/// Family constraint 2 Re(c1* c2) = 1 violated; carries the computed delta.
class constraint_violation : public error {
public:
    constraint_violation(const std::string& what, double delta)
        : error(what), delta_(delta) {}
    double delta() const noexcept { return delta_; }

private:
    double delta_;
};

/// g(tau) vanished (degenerate coefficients; impossible when delta = 1).
class singular_family : public error {
public:
    using error::error;
};

/// Requested quantum number exceeds the configured n_max.
class capacity_error : public error {
public:
    using error::error;
};

/// Field carries non-negligible probability at the grid edges; spectral and
/// quadrature results would be untrustworthy.
class boundary_mass_error : public error {
public:
    using error::error;
};

/// Integrand not decayed at the truncation boundary of a z-plane integral.
class truncation_error : public error {
public:
    using error::error;
};

/// Spatial grid too coarse for the finite-difference residual (step-halving
/// changed the discrete Hamiltonian estimate by more than 10x).
class grid_too_coarse : public error {
public:
    using error::error;
};

}  // namespace fpcs
