#pragma once

#include <cmath>
#include <complex>
#include <sstream>

#include "fpcs/error.hpp"

namespace fpcs {

using complexd = std::complex<double>;

/// Commutator normalization delta = 2 Re(c1* c2) of the linear integral of
/// motion A(tau) = c1 q + i g(tau) p with g(tau) = c2 + i c1 tau.
inline double family_delta(complexd c1, complexd c2) {
    return 2.0 * std::real(std::conj(c1) * c2);
}

inline constexpr double kDeltaTolerance = 1e-12;

/// Two-complex-parameter family of generalized (squeezed) coherent states.
/// Invariant: delta = 2 Re(c1* c2) = 1 within 1e-12 and c1, c2 != 0.
/// Constructed through make_generalized().
class GeneralizedFamily {
public:
    complexd c1() const noexcept { return c1_; }
    complexd c2() const noexcept { return c2_; }

    /// Phases mu_i = arg c_i of the defining constants.
    double mu1() const noexcept { return std::arg(c1_); }
    double mu2() const noexcept { return std::arg(c2_); }

    friend GeneralizedFamily make_generalized(complexd c1, complexd c2);

private:
    GeneralizedFamily(complexd c1, complexd c2) : c1_(c1), c2_(c2) {}
    complexd c1_;
    complexd c2_;
};

inline GeneralizedFamily make_generalized(complexd c1, complexd c2) {
    if (!std::isfinite(c1.real()) || !std::isfinite(c1.imag()) ||
        !std::isfinite(c2.real()) || !std::isfinite(c2.imag())) {
        throw invalid_input("family constants must be finite");
    }
    if (std::abs(c1) == 0.0 || std::abs(c2) == 0.0) {
        throw invalid_input("family constants must be nonzero");
    }
    const double delta = family_delta(c1, c2);
    if (std::abs(delta - 1.0) > kDeltaTolerance) {
        std::ostringstream msg;
        msg << "family constraint 2 Re(c1* c2) = 1 violated: delta = " << delta;
        throw constraint_violation(msg.str(), delta);
    }
    return GeneralizedFamily(c1, c2);
}

/// One-real-parameter coherent-state family: c1 = 1/(2 sigma_q), c2 = sigma_q,
/// both real (phases mu1 = mu2 = 0). sigma_q is the coordinate standard
/// deviation at tau = 0.
class CSFamily {
public:
    double sigma_q() const noexcept { return sigma_q_; }
    double sigma_p() const noexcept { return 1.0 / (2.0 * sigma_q_); }

    GeneralizedFamily generalized() const {
        return make_generalized(complexd(sigma_p(), 0.0), complexd(sigma_q_, 0.0));
    }

    friend CSFamily make_cs_family(double sigma_q);

private:
    explicit CSFamily(double sigma_q) : sigma_q_(sigma_q) {}
    double sigma_q_;
};

inline CSFamily make_cs_family(double sigma_q) {
    if (!(std::isfinite(sigma_q) && sigma_q > 0.0)) {
        throw invalid_input("sigma_q must be finite and > 0");
    }
    return CSFamily(sigma_q);
}

/// Complex quantum number labeling one state within a family.
struct CSLabel {
    complexd z;
};

/// g(tau) = c2 + i c1 tau. Never vanishes while delta = 1.
inline complexd g_of_tau(const GeneralizedFamily& fam, double tau) {
    return fam.c2() + complexd(0.0, 1.0) * fam.c1() * tau;
}

inline complexd g_of_tau(const CSFamily& fam, double tau) {
    return complexd(fam.sigma_q(), tau / (2.0 * fam.sigma_q()));
}

/// z = c1 q0 + i c2 p.
inline CSLabel z_from_initial(double q0, double p, const GeneralizedFamily& fam) {
    return CSLabel{fam.c1() * q0 + complexd(0.0, 1.0) * fam.c2() * p};
}

/// z = q0/(2 sigma_q) + i sigma_q p.
inline CSLabel z_from_initial(double q0, double p, const CSFamily& fam) {
    return CSLabel{complexd(q0 / (2.0 * fam.sigma_q()), fam.sigma_q() * p)};
}

struct InitialData {
    double q0;
    double p;
};

/// Inverse of z_from_initial; uses delta = 1 so that q0 = 2 Re(c2* z) and
/// p = 2 Im(c1* z).
inline InitialData initial_from_z(const CSLabel& label, const GeneralizedFamily& fam) {
    return {2.0 * std::real(std::conj(fam.c2()) * label.z),
            2.0 * std::imag(std::conj(fam.c1()) * label.z)};
}

inline InitialData initial_from_z(const CSLabel& label, const CSFamily& fam) {
    return {2.0 * fam.sigma_q() * label.z.real(), label.z.imag() / fam.sigma_q()};
}

}  // namespace fpcs
