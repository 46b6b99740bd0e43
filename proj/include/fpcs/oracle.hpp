#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "fpcs/analytic.hpp"
#include "fpcs/error.hpp"
#include "fpcs/families.hpp"
#include "fpcs/fft.hpp"
#include "fpcs/grid.hpp"

namespace fpcs {

/// Outcome of the finite-difference Schroedinger residual check.
struct ResidualReport {
    double max_abs_residual;
    double rel_residual;   // relative to max |H psi|
    double grid_spacing;   // h of the grid the residual was formed on
    double dt;             // temporal half-step
};

inline constexpr double kBoundaryMassThreshold = 1e-12;

namespace detail {

inline void require_boundary_negligible(const WaveField& field,
                                        double threshold = kBoundaryMassThreshold) {
    const auto& v = field.values;
    for (const auto& x : v) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw invalid_input("field contains non-finite samples");
        }
    }
    const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
    if (!(edge < threshold)) {
        throw boundary_mass_error("field not negligible at grid edges: |psi| = " +
                                  std::to_string(edge));
    }
}

/// 4th-order central second difference on the interior; first and last two
/// entries are left untouched (zero).
inline std::vector<complexd> second_difference(const std::vector<complexd>& f,
                                               double h) {
    const std::size_t n = f.size();
    std::vector<complexd> d2(n, complexd(0.0, 0.0));
    const double inv = 1.0 / (12.0 * h * h);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d2[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] -
                 f[i + 2]) * inv;
    }
    return d2;
}

inline double max_abs(const std::vector<complexd>& v) {
    double m = 0.0;
    for (const auto& x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double xi = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (xi * p0 - p1) / (xi * xi - 1.0);
            const double step = p0 / dp;
            xi -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -xi;
        x[static_cast<std::size_t>(n - 1 - i)] = xi;
        const double weight = 2.0 / ((1.0 - xi * xi) * dp * dp);
        w[static_cast<std::size_t>(i)] = weight;
        w[static_cast<std::size_t>(n - 1 - i)] = weight;
    }
    return {x, w};
}

}  // namespace detail

/// Evaluate r = i d(psi)/dtau + (1/2) D2 psi on the grid interior, with the
/// time derivative from a symmetric difference at tau +- dt and D2 the
/// 4th-order central second difference. psi is any callable (q, tau) ->
/// complex. The discrete Hamiltonian is re-estimated at half the grid step;
/// a >10x disagreement marks the grid as too coarse to measure anything.
template <class Psi>
ResidualReport schrodinger_residual(Psi&& psi, const Grid& grid, double tau,
                                    double dt) {
    if (!(std::isfinite(dt) && dt > 0.0)) {
        throw invalid_input("schrodinger_residual: dt must be finite and > 0");
    }
    const int n = grid.n_points;
    const double h = grid.spacing();
    std::vector<complexd> f0(static_cast<std::size_t>(n));
    std::vector<complexd> fp(static_cast<std::size_t>(n));
    std::vector<complexd> fm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double q = grid.point(i);
        f0[static_cast<std::size_t>(i)] = psi(q, tau);
        fp[static_cast<std::size_t>(i)] = psi(q, tau + dt);
        fm[static_cast<std::size_t>(i)] = psi(q, tau - dt);
    }
    const auto d2 = detail::second_difference(f0, h);

    // Half-step re-estimate of H psi for the coarseness guard.
    std::vector<complexd> fh(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        fh[static_cast<std::size_t>(i)] = psi(grid.q_min + 0.5 * h * i, tau);
    }
    const auto d2h = detail::second_difference(fh, 0.5 * h);
    const double ham_coarse = 0.5 * detail::max_abs(d2);
    const double ham_fine = 0.5 * detail::max_abs(d2h);
    if (ham_fine == 0.0) {
        throw invalid_input("schrodinger_residual: field vanishes on the grid");
    }
    if (ham_coarse > 10.0 * ham_fine || ham_fine > 10.0 * ham_coarse) {
        throw grid_too_coarse("schrodinger_residual: H psi estimates at h and h/2 "
                              "disagree by more than 10x");
    }

    double max_res = 0.0;
    for (int i = 2; i + 2 < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const complexd r = complexd(0.0, 1.0) * (fp[k] - fm[k]) / (2.0 * dt) +
                           0.5 * d2[k];
        max_res = std::max(max_res, std::abs(r));
    }
    return {max_res, max_res / ham_fine, h, dt};
}

/// Exact free evolution: each Fourier mode k picks up e^{-i k^2 (tau1-tau0)/2}.
/// No splitting error exists for the free particle; the only requirements are
/// a power-of-two grid and negligible boundary mass (wrap-around aliasing).
inline WaveField propagate_spectral(const WaveField& field, double tau1) {
    field.grid.require_spectral();
    detail::require_boundary_negligible(field);
    const double dtau = tau1 - field.tau;
    if (dtau == 0.0) {
        return field;
    }
    std::vector<complexd> v = field.values;
    detail::fft_inplace(v, false);
    const auto k = detail::fft_wavenumbers(v.size(), field.grid.q_max - field.grid.q_min);
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] *= std::exp(complexd(0.0, -0.5 * k[j] * k[j] * dtau));
    }
    detail::fft_inplace(v, true);
    return {field.grid, tau1, std::move(v)};
}

/// Composite quadrature of |psi|^2 (uniform weights; the field must vanish at
/// the edges, so this is trapezoid-exact).
inline double quadrature_norm(const WaveField& field) {
    detail::require_boundary_negligible(field);
    double acc = 0.0;
    for (const auto& x : field.values) {
        acc += std::norm(x);
    }
    return acc * field.grid.spacing();
}

/// Position moments by quadrature, momentum moments by spectral
/// differentiation, sigma_qp from the symmetrized product
/// Re <(q - <q>) psi | (p - <p>) psi>.
inline Moments quadrature_moments(const WaveField& field) {
    field.grid.require_spectral();
    detail::require_boundary_negligible(field);
    const double h = field.grid.spacing();
    const std::size_t n = field.values.size();

    std::vector<complexd> dpsi = field.values;
    detail::fft_inplace(dpsi, false);
    const auto k = detail::fft_wavenumbers(n, field.grid.q_max - field.grid.q_min);
    for (std::size_t j = 0; j < n; ++j) {
        dpsi[j] *= complexd(0.0, k[j]);
    }
    dpsi[n / 2] = complexd(0.0, 0.0);  // drop the unmatched Nyquist mode
    detail::fft_inplace(dpsi, true);

    double norm = 0.0, mq = 0.0, mq2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = field.grid.point(static_cast<int>(i));
        const double w = std::norm(field.values[i]);
        norm += w;
        mq += q * w;
        mq2 += q * q * w;
    }
    norm *= h;
    mq *= h / norm;
    mq2 *= h / norm;

    double mp = 0.0, mp2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mp += std::imag(std::conj(field.values[i]) * dpsi[i]);  // Re(conj(f) * -i f')
        mp2 += std::norm(dpsi[i]);
    }
    mp *= h / norm;
    mp2 *= h / norm;

    double qp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = field.grid.point(static_cast<int>(i));
        const complexd dp = complexd(0.0, -1.0) * dpsi[i] - mp * field.values[i];
        qp += (q - mq) * std::real(std::conj(field.values[i]) * dp);
    }
    qp *= h / norm;

    return {mq, mp, std::sqrt(mq2 - mq * mq), std::sqrt(mp2 - mp * mp), qp};
}

/// Quadrature of conj(psi_z1) psi_z2 in the displacement-operator phase
/// convention, so the result is comparable with analytic overlap() directly.
inline complexd overlap_quadrature(const CSLabel& z1, const CSLabel& z2, double tau,
                                   const GeneralizedFamily& fam, const Grid& grid) {
    const WaveField f1 = sample(grid, tau, [&](double q) {
        return eval_glauber_cs(q, tau, z1, fam);
    });
    const WaveField f2 = sample(grid, tau, [&](double q) {
        return eval_glauber_cs(q, tau, z2, fam);
    });
    detail::require_boundary_negligible(f1);
    detail::require_boundary_negligible(f2);
    complexd acc(0.0, 0.0);
    for (std::size_t i = 0; i < f1.values.size(); ++i) {
        acc += std::conj(f1.values[i]) * f2.values[i];
    }
    return acc * grid.spacing();
}

inline complexd overlap_quadrature(const CSLabel& z1, const CSLabel& z2, double tau,
                                   const CSFamily& fam, const Grid& grid) {
    return overlap_quadrature(z1, z2, tau, fam.generalized(), grid);
}

/// Smeared completeness test of (1/pi) integral |z,tau><z,tau| d^2z = 1:
/// applies the resolution of identity to the Gaussian test function
/// f(q') = exp(-(q' - q_prime)^2 / (2 test_width^2)) and returns
/// |F(q) - f(q)|. The z integral runs over a disk of the given radius with
/// Gauss-Legendre x trapezoid (polar) tensor quadrature; the q' integral over
/// a uniform grid wide enough to exhaust f. Throws truncation_error when the
/// integrand has not decayed to 1e-12 (relative) on the disk boundary.
inline double completeness_check(double q, double q_prime, double tau,
                                 const CSFamily& fam, double test_width,
                                 double radius, int n_radial,
                                 double boundary_threshold = 1e-12) {
    if (!(std::isfinite(test_width) && test_width > 0.0)) {
        throw invalid_input("completeness_check: test_width must be > 0");
    }
    if (!(std::isfinite(radius) && radius > 0.0)) {
        throw invalid_input("completeness_check: radius must be > 0");
    }
    if (n_radial < 4) {
        throw invalid_input("completeness_check: n_radial must be >= 4");
    }
    const GeneralizedFamily gen = fam.generalized();
    const int n_angular = 4 * n_radial;

    const double half = std::abs(q_prime) + 10.0 * std::max(test_width, 1.0);
    const int n_inner = 1024;
    const Grid inner(q_prime - half, q_prime + half, n_inner);
    const double hq = inner.spacing();
    std::vector<double> f_test(static_cast<std::size_t>(n_inner));
    for (int i = 0; i < n_inner; ++i) {
        const double d = inner.point(i) - q_prime;
        f_test[static_cast<std::size_t>(i)] = std::exp(-0.5 * d * d / (test_width * test_width));
    }

    const auto evaluate = [&](const complexd& z) {
        const CSLabel label{z};
        complexd inner_acc(0.0, 0.0);
        for (int i = 0; i < n_inner; ++i) {
            inner_acc += std::conj(eval_generalized_cs(inner.point(i), tau, label, gen)) *
                         f_test[static_cast<std::size_t>(i)];
        }
        return eval_generalized_cs(q, tau, label, gen) * inner_acc * hq;
    };

    const auto [nodes, weights] = detail::gauss_legendre(n_radial);
    const double dtheta = 2.0 * std::numbers::pi / n_angular;
    complexd acc(0.0, 0.0);
    double max_val = 0.0;
    for (int i = 0; i < n_radial; ++i) {
        const double r = 0.5 * radius * (nodes[static_cast<std::size_t>(i)] + 1.0);
        const double wr = 0.5 * radius * weights[static_cast<std::size_t>(i)];
        for (int j = 0; j < n_angular; ++j) {
            const complexd z = std::polar(r, dtheta * j);
            const complexd val = evaluate(z);
            max_val = std::max(max_val, std::abs(val));
            acc += val * r * wr * dtheta;
        }
    }

    double max_boundary = 0.0;
    for (int j = 0; j < n_angular; ++j) {
        max_boundary = std::max(max_boundary,
                                std::abs(evaluate(std::polar(radius, dtheta * j))));
    }
    if (!(max_boundary < boundary_threshold * max_val)) {
        throw truncation_error("completeness_check: integrand not decayed at disk "
                               "boundary; enlarge the radius");
    }

    const double expected = std::exp(-0.5 * (q - q_prime) * (q - q_prime) /
                                     (test_width * test_width));
    return std::abs(acc / std::numbers::pi - expected);
}

/// Default truncation radius for completeness_check: 8 plus the label radius
/// of a packet started at the test-function center.
inline double completeness_default_radius(double q_prime, const CSFamily& fam) {
    return 8.0 + std::abs(q_prime) / (2.0 * fam.sigma_q());
}

}  // namespace fpcs
