#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "fpcs/error.hpp"
#include "fpcs/families.hpp"
#include "fpcs/grid.hpp"

namespace fpcs {

/// First and second moments of q and p in a state at a fixed tau.
/// For every valid family, sigma_q^2 sigma_p^2 - sigma_qp^2 = 1/4.
struct Moments {
    double mean_q;
    double mean_p;
    double sigma_q;
    double sigma_p;
    double sigma_qp;
};

namespace detail {

/// Continuous logarithm of g(tau) = c2 + i c1 tau along tau, anchored at
/// g(0) = c2. g traces a straight line that never crosses the origin while
/// delta = 1, so arg(g/c2) stays in (-pi, pi) and the branch below is the
/// continuous one.
inline complexd log_g(const GeneralizedFamily& fam, double tau) {
    const complexd g = g_of_tau(fam, tau);
    const double mag = std::abs(g);
    if (mag == 0.0) {
        throw singular_family("g(tau) = 0: degenerate family coefficients");
    }
    return complexd(std::log(mag), std::arg(fam.c2()) + std::arg(g / fam.c2()));
}

inline constexpr double inv_fourth_root_two_pi() {
    // (2 pi)^(-1/4)
    return 0.63161877774606470;
}

}  // namespace detail

/// Generalized CS wavefunction
///   (sqrt(2 pi) g(tau))^{-1/2} exp{ i(p q - p^2 tau / 2)
///                                   - c1/g(tau) (q - q(tau))^2 / 2 },
/// q(tau) = q0 + p tau, with (q0, p) recovered from the label. The square
/// root of g is taken on the branch continuous in tau from g(0) = c2.
inline complexd eval_generalized_cs(double q, double tau, const CSLabel& label,
                                    const GeneralizedFamily& fam) {
    const complexd g = g_of_tau(fam, tau);
    const auto [q0, p] = initial_from_z(label, fam);
    const double qt = q0 + p * tau;
    const complexd exponent =
        -0.5 * detail::log_g(fam, tau) +
        complexd(0.0, p * q - 0.5 * p * p * tau) -
        0.5 * (fam.c1() / g) * (q - qt) * (q - qt);
    return detail::inv_fourth_root_two_pi() * std::exp(exponent);
}

/// CS of a free particle, evaluated through the sigma_q-parameterized closed
/// form (an independent code path from eval_generalized_cs; both agree to
/// 1e-14 on the embedding c1 = 1/(2 sigma_q), c2 = sigma_q).
inline complexd eval_cs(double q, double tau, const CSLabel& label,
                        const CSFamily& fam) {
    const double s = fam.sigma_q();
    const auto [q0, p] = initial_from_z(label, fam);
    const double qt = q0 + p * tau;
    const complexd g(s, tau / (2.0 * s));
    // Re g = sigma_q > 0, so the principal square root is the continuous one.
    const complexd denom = std::sqrt(g * std::sqrt(2.0 * std::numbers::pi));
    const complexd exponent =
        complexd(0.0, p * q - 0.5 * p * p * tau) -
        (q - qt) * (q - qt) / (4.0 * complexd(s * s, 0.5 * tau));
    return std::exp(exponent) / denom;
}

/// Wavefunction in the displacement-operator phase convention,
/// D(z)|0,tau> in the q representation. Differs from eval_generalized_cs by
/// the constant phase exp(-i p q0 / 2); this is the convention in which the
/// overlap <z1,tau|z2,tau> = exp(z1* z2 - (|z1|^2 + |z2|^2)/2) holds exactly.
inline complexd eval_glauber_cs(double q, double tau, const CSLabel& label,
                                const GeneralizedFamily& fam) {
    const auto [q0, p] = initial_from_z(label, fam);
    return eval_generalized_cs(q, tau, label, fam) *
           std::exp(complexd(0.0, -0.5 * p * q0));
}

inline complexd eval_glauber_cs(double q, double tau, const CSLabel& label,
                                const CSFamily& fam) {
    return eval_glauber_cs(q, tau, label, fam.generalized());
}

/// Probability density (2 pi)^{-1/2} |g|^{-1} exp{-(q - q(tau))^2 / (2|g|^2)}.
inline double density(double q, double tau, const CSLabel& label,
                      const GeneralizedFamily& fam) {
    const complexd g = g_of_tau(fam, tau);
    const auto [q0, p] = initial_from_z(label, fam);
    const double qt = q0 + p * tau;
    const double var = std::norm(g);
    return std::exp(-(q - qt) * (q - qt) / (2.0 * var)) /
           (std::sqrt(2.0 * std::numbers::pi * var));
}

inline double density(double q, double tau, const CSLabel& label,
                      const CSFamily& fam) {
    const double s = fam.sigma_q();
    const auto [q0, p] = initial_from_z(label, fam);
    const double qt = q0 + p * tau;
    const double var = s * s + tau * tau / (4.0 * s * s);
    return std::exp(-0.5 * (q - qt) * (q - qt) / var) /
           std::sqrt(2.0 * std::numbers::pi * var);
}

/// mean_q = q0 + p tau, mean_p = p, sigma_q = |g|, sigma_p = |c1|,
/// sigma_qp = i [1/2 - g(tau) c1*] (real for every valid family).
inline Moments moments(double tau, const CSLabel& label, const GeneralizedFamily& fam) {
    const complexd g = g_of_tau(fam, tau);
    const auto [q0, p] = initial_from_z(label, fam);
    const complexd qp = complexd(0.0, 1.0) * (0.5 - g * std::conj(fam.c1()));
    if (std::abs(qp.imag()) > 1e-12) {
        throw error("moments: sigma_qp acquired an imaginary part; family invalid");
    }
    return {q0 + p * tau, p, std::abs(g), std::abs(fam.c1()), qp.real()};
}

inline Moments moments(double tau, const CSLabel& label, const CSFamily& fam) {
    return moments(tau, label, fam.generalized());
}

/// Robertson-Schroedinger product sigma_q^2 sigma_p^2 - sigma_qp^2.
/// Identically 1/4 for every valid family and tau.
inline double rs_product(double tau, const GeneralizedFamily& fam) {
    const Moments m = moments(tau, CSLabel{complexd(0.0, 0.0)}, fam);
    return m.sigma_q * m.sigma_q * m.sigma_p * m.sigma_p - m.sigma_qp * m.sigma_qp;
}

inline double rs_product(double tau, const CSFamily& fam) {
    return rs_product(tau, fam.generalized());
}

/// Heisenberg product sigma_q(tau) sigma_p = |g(tau)| |c1| >= 1/2.
inline double heisenberg_product(double tau, const GeneralizedFamily& fam) {
    return std::abs(g_of_tau(fam, tau)) * std::abs(fam.c1());
}

/// CS specialization (1/2) sqrt(1 + tau^2 / (4 sigma_q^4)).
inline double heisenberg_product(double tau, const CSFamily& fam) {
    const double s2 = fam.sigma_q() * fam.sigma_q();
    return 0.5 * std::sqrt(1.0 + tau * tau / (4.0 * s2 * s2));
}

/// <z1,tau|z2,tau> = exp(z1* z2 - (|z1|^2 + |z2|^2)/2); tau-independent.
inline complexd overlap(const CSLabel& z1, const CSLabel& z2) {
    return std::exp(std::conj(z1.z) * z2.z -
                    0.5 * (std::norm(z1.z) + std::norm(z2.z)));
}

inline constexpr int kDefaultFockCapacity = 128;

namespace detail {

/// Coefficients (ascending powers of q) of the polynomials P_n with
/// <q|n,tau> = P_n(q) <q|0,tau>, from the creation operator
/// A^dag = c1* q - g* d/dq acting on the vacuum:
///   P_{n+1} = [ (q/g) P_n - g* P_n' ] / sqrt(n+1),   P_0 = 1
/// (the q coefficient collapses to 1/g because 2 Re(c1 g*) = 1).
inline std::vector<std::vector<complexd>> fock_polynomials(
    const GeneralizedFamily& fam, double tau, int n_top) {
    const complexd g = g_of_tau(fam, tau);
    const complexd inv_g = 1.0 / g;
    const complexd gc = std::conj(g);
    std::vector<std::vector<complexd>> polys;
    polys.reserve(static_cast<std::size_t>(n_top) + 1);
    polys.push_back({complexd(1.0, 0.0)});
    for (int n = 0; n < n_top; ++n) {
        const auto& pn = polys.back();
        std::vector<complexd> next(pn.size() + 1, complexd(0.0, 0.0));
        const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n + 1));
        for (std::size_t k = 0; k < pn.size(); ++k) {
            next[k + 1] += inv_g * pn[k] * inv_sqrt;            // (q/g) P_n
        }
        for (std::size_t k = 1; k < pn.size(); ++k) {
            next[k - 1] -= gc * (static_cast<double>(k) * pn[k]) * inv_sqrt;  // g* P_n'
        }
        polys.push_back(std::move(next));
    }
    return polys;
}

inline complexd horner(const std::vector<complexd>& coeffs, double q) {
    complexd acc(0.0, 0.0);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * q + coeffs[k];
    }
    return acc;
}

}  // namespace detail

/// <q|n,tau> = P_n(q) <q|0,tau>, exact polynomial-coefficient recurrence.
inline complexd fock_state(int n, double q, double tau, const GeneralizedFamily& fam,
                           int n_max = kDefaultFockCapacity) {
    if (n < 0) {
        throw invalid_input("fock_state: n must be >= 0");
    }
    if (n > n_max) {
        throw capacity_error("fock_state: n exceeds n_max = " + std::to_string(n_max));
    }
    const auto polys = detail::fock_polynomials(fam, tau, n);
    const complexd vac = eval_generalized_cs(q, tau, CSLabel{complexd(0.0, 0.0)}, fam);
    return detail::horner(polys[static_cast<std::size_t>(n)], q) * vac;
}

inline complexd fock_state(int n, double q, double tau, const CSFamily& fam,
                           int n_max = kDefaultFockCapacity) {
    return fock_state(n, q, tau, fam.generalized(), n_max);
}

/// Truncated Glauber expansion e^{-|z|^2/2} sum_{n<=N} z^n/sqrt(n!) <q|n,tau>.
/// Converges to eval_glauber_cs; equals eval_generalized_cs up to the
/// q-independent phase exp(-i p q0 / 2).
inline complexd glauber_sum(const CSLabel& label, double q, double tau,
                            const GeneralizedFamily& fam, int n_trunc,
                            int n_max = kDefaultFockCapacity) {
    if (n_trunc < 0) {
        throw invalid_input("glauber_sum: n_trunc must be >= 0");
    }
    if (n_trunc > n_max) {
        throw capacity_error("glauber_sum: n_trunc exceeds n_max = " +
                             std::to_string(n_max));
    }
    const auto polys = detail::fock_polynomials(fam, tau, n_trunc);
    const complexd vac = eval_generalized_cs(q, tau, CSLabel{complexd(0.0, 0.0)}, fam);
    complexd weight = std::exp(complexd(-0.5 * std::norm(label.z), 0.0));
    complexd sum(0.0, 0.0);
    for (int n = 0; n <= n_trunc; ++n) {
        if (n > 0) {
            weight *= label.z / std::sqrt(static_cast<double>(n));
        }
        sum += weight * detail::horner(polys[static_cast<std::size_t>(n)], q);
    }
    return sum * vac;
}

inline complexd glauber_sum(const CSLabel& label, double q, double tau,
                            const CSFamily& fam, int n_trunc,
                            int n_max = kDefaultFockCapacity) {
    return glauber_sum(label, q, tau, fam.generalized(), n_trunc, n_max);
}

/// Tail bound e^{-|z|^2/2} |z|^{N+1} / sqrt((N+1)!) on the truncation error
/// of glauber_sum, for choosing n_trunc.
inline double glauber_tail_bound(double abs_z, int n_trunc) {
    if (abs_z == 0.0) return 0.0;
    double log_term = -0.5 * abs_z * abs_z + (n_trunc + 1) * std::log(abs_z);
    log_term -= 0.5 * std::lgamma(static_cast<double>(n_trunc) + 2.0);
    return std::exp(log_term);
}

/// Plane wave (2 pi)^{-1/2} exp[i(p q - p^2 tau / 2)]. Solves the same
/// equation but is not square-integrable; crests move at p/2, not p.
inline complexd plane_wave(double q, double tau, double p) {
    return std::exp(complexd(0.0, p * q - 0.5 * p * p * tau)) /
           std::sqrt(2.0 * std::numbers::pi);
}

/// Sample a CS wavefunction on a grid.
inline WaveField cs_field(const GeneralizedFamily& fam, const CSLabel& label,
                          double tau, const Grid& grid) {
    return sample(grid, tau, [&](double q) { return eval_generalized_cs(q, tau, label, fam); });
}

inline WaveField cs_field(const CSFamily& fam, const CSLabel& label, double tau,
                          const Grid& grid) {
    return sample(grid, tau, [&](double q) { return eval_cs(q, tau, label, fam); });
}

}  // namespace fpcs
