#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpcs/analytic.hpp"
#include "fpcs/families.hpp"
#include "fpcs/grid.hpp"
#include "fpcs/oracle.hpp"

namespace fpcs::checks {

struct CheckResult {
    std::string name;
    double value;       // the computed deviation / margin
    double tolerance;   // pass when |value| <= tolerance unless noted in detail
    bool pass;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    double q_half_width = 40.0;
    int n_points = 4096;
    std::string filter;   // run only checks whose name contains this
    double tau0 = 0.0;    // spectral propagation window
    double tau1 = 1.0;
    int n_trunc = 40;     // Glauber truncation
};

namespace detail {

/// Uniform draw helpers; each check derives its own engine from the seed so
/// filtering a subset never shifts another check's draws.
inline std::mt19937_64 engine(const VerifyOptions& opt, std::uint64_t salt) {
    return std::mt19937_64(opt.seed * 0x9e3779b97f4a7c15ULL + salt);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random family with exact delta = 1: draw c1 freely, pick
/// c1* c2 = 1/2 + i s.
inline GeneralizedFamily random_generalized(std::mt19937_64& rng) {
    const double r1 = uniform(rng, 0.3, 3.0);
    const double mu1 = uniform(rng, -std::numbers::pi, std::numbers::pi);
    const double s = uniform(rng, -2.0, 2.0);
    const complexd c1 = std::polar(r1, mu1);
    const complexd c2 = complexd(0.5, s) / std::conj(c1);
    return make_generalized(c1, c2);
}

/// Narrow variant for grid-based checks: keeps sigma_q(tau) small enough that
/// a [-40, 40] grid holds the boundary mass below 1e-12 for tau <= 1.
inline GeneralizedFamily random_generalized_compact(std::mt19937_64& rng) {
    const double rho = uniform(rng, 0.6, 1.2);
    const double mu2 = uniform(rng, -std::numbers::pi, std::numbers::pi);
    const double s = uniform(rng, -0.75, 0.75);
    const complexd c2 = std::polar(rho, mu2);
    const complexd c1 = std::conj(complexd(0.5, s) / c2);
    return make_generalized(c1, c2);
}

inline CheckResult bounded(std::string name, double value, double tolerance,
                           std::string detail = {}) {
    const bool ok = std::isfinite(value) && std::abs(value) <= tolerance;
    return {std::move(name), value, tolerance, ok, std::move(detail)};
}

}  // namespace detail

inline CheckResult check_rs_saturation(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 1);
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double tau = detail::uniform(rng, -5.0, 5.0);
        double value;
        if (i % 2 == 0) {
            value = rs_product(tau, make_cs_family(detail::uniform(rng, 0.3, 3.0)));
        } else {
            value = rs_product(tau, detail::random_generalized(rng));
        }
        worst = std::max(worst, std::abs(value - 0.25));
    }
    return detail::bounded("rs_saturation", worst, 1e-12,
                           "max |sigma_q^2 sigma_p^2 - sigma_qp^2 - 1/4| over random families");
}

inline CheckResult check_heisenberg_cs_tau0(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 2);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CSFamily fam = make_cs_family(detail::uniform(rng, 0.3, 3.0));
        worst = std::max(worst, std::abs(heisenberg_product(0.0, fam) - 0.5));
    }
    return detail::bounded("heisenberg_cs_tau0", worst, 1e-14,
                           "CS families minimize sigma_q sigma_p = 1/2 at tau = 0");
}

inline CheckResult check_heisenberg_squeezed_tau0(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 3);
    double min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20; ++i) {
        GeneralizedFamily fam = detail::random_generalized(rng);
        if (std::abs(std::sin(fam.mu2() - fam.mu1())) < 1e-3) {
            continue;  // want mu1 != mu2
        }
        min_margin = std::min(min_margin, heisenberg_product(0.0, fam) - 0.5);
    }
    const bool ok = min_margin > 0.0;
    return {"heisenberg_squeezed_tau0", min_margin, 0.0, ok,
            "mu1 != mu2 families must exceed 1/2 at tau = 0 (value = min margin, pass when > 0)"};
}

inline CheckResult check_schrodinger_residual_cs(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 4);
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const CSFamily fam = make_cs_family(detail::uniform(rng, 0.6, 1.4));
        const CSLabel z{complexd(detail::uniform(rng, -1.0, 1.0),
                                 detail::uniform(rng, -1.0, 1.0))};
        const double tau = detail::uniform(rng, 0.1, 1.5);
        const auto report = schrodinger_residual(
            [&](double q, double t) { return eval_cs(q, t, z, fam); }, grid, tau, 1e-4);
        worst = std::max(worst, report.rel_residual);
    }
    return detail::bounded("schrodinger_residual_cs", worst, 1e-6,
                           "finite-difference |S psi| / max|H psi| for eval_cs");
}

inline CheckResult check_residual_negative_control(const VerifyOptions& opt) {
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    const auto report = schrodinger_residual(
        [](double q, double) { return complexd(std::exp(-0.5 * q * q), 0.0); },
        grid, 0.5, 1e-4);
    const bool ok = report.rel_residual > 0.5;
    return {"residual_negative_control", report.rel_residual, 0.5, ok,
            "a static Gaussian is not a solution; residual must be O(1) (pass when > 0.5)"};
}

inline double residual_loglog_slope(const std::vector<double>& steps,
                                    const std::vector<double>& errs) {
    const std::size_t n = steps.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(steps[i]);
        const double y = std::log(errs[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline CheckResult check_residual_slope_dt(const VerifyOptions&) {
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const CSLabel z = z_from_initial(0.0, 2.0, fam);
    const Grid grid(-40.0, 40.0, 4096);
    const std::vector<double> dts{0.02, 0.01, 0.005, 0.0025};
    std::vector<double> errs;
    for (const double dt : dts) {
        errs.push_back(schrodinger_residual(
            [&](double q, double t) { return eval_cs(q, t, z, fam); }, grid, 0.5, dt)
                .rel_residual);
    }
    const double slope = residual_loglog_slope(dts, errs);
    return detail::bounded("residual_slope_dt", slope - 2.0, 0.2,
                           "time-difference convergence order (nominal 2)");
}

inline CheckResult check_residual_slope_h(const VerifyOptions&) {
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const CSLabel z = z_from_initial(0.0, 2.0, fam);
    std::vector<double> hs, errs;
    for (const int n : {256, 512, 1024, 2048}) {
        const Grid grid(-40.0, 40.0, n);
        hs.push_back(grid.spacing());
        errs.push_back(schrodinger_residual(
            [&](double q, double t) { return eval_cs(q, t, z, fam); }, grid, 0.5, 1e-5)
                .rel_residual);
    }
    const double slope = residual_loglog_slope(hs, errs);
    return detail::bounded("residual_slope_h", slope - 4.0, 0.2,
                           "space-difference convergence order (nominal 4)");
}

inline CheckResult check_propagate(const VerifyOptions& opt) {
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const CSLabel z = z_from_initial(0.0, 2.0, fam);
    const WaveField start = cs_field(fam, z, opt.tau0, grid);
    const WaveField evolved = propagate_spectral(start, opt.tau1);
    double l2 = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
        l2 += std::norm(evolved.values[static_cast<std::size_t>(i)] -
                        eval_cs(grid.point(i), opt.tau1, z, fam));
    }
    l2 = std::sqrt(l2 * grid.spacing());
    return detail::bounded("propagate", l2, 1e-8,
                           "spectral free evolution vs closed form, L2 over the grid");
}

inline CheckResult check_propagate_unitarity(const VerifyOptions& opt) {
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const CSLabel z = z_from_initial(0.5, 1.0, fam);
    const WaveField start = cs_field(fam, z, 0.0, grid);
    const WaveField forth = propagate_spectral(start, 1.0);
    const WaveField back = propagate_spectral(forth, 0.0);
    double l2 = 0.0;
    for (std::size_t i = 0; i < start.values.size(); ++i) {
        l2 += std::norm(back.values[i] - start.values[i]);
    }
    l2 = std::sqrt(l2 * grid.spacing());
    const double norm_drift = std::abs(quadrature_norm(forth) - quadrature_norm(start));
    return detail::bounded("propagate_unitarity", std::max(l2, norm_drift), 1e-12,
                           "round-trip reproduces the field and preserves the norm");
}

inline CheckResult check_quadrature_norm(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 5);
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const GeneralizedFamily fam = detail::random_generalized_compact(rng);
        const CSLabel z{complexd(detail::uniform(rng, -0.8, 0.8),
                                 detail::uniform(rng, -0.8, 0.8))};
        const double tau = detail::uniform(rng, 0.0, 1.0);
        worst = std::max(worst,
                         std::abs(quadrature_norm(cs_field(fam, z, tau, grid)) - 1.0));
    }
    return detail::bounded("quadrature_norm", worst, 1e-10,
                           "closed-form states are normalized");
}

inline CheckResult check_quadrature_moments(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 6);
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const CSFamily fam = make_cs_family(detail::uniform(rng, 0.6, 1.4));
        const CSLabel z{complexd(detail::uniform(rng, -1.0, 1.0),
                                 detail::uniform(rng, -1.0, 1.0))};
        const double tau = detail::uniform(rng, 0.0, 1.5);
        const Moments numeric = quadrature_moments(cs_field(fam, z, tau, grid));
        const Moments exact = moments(tau, z, fam);
        worst = std::max({worst, std::abs(numeric.mean_q - exact.mean_q),
                          std::abs(numeric.mean_p - exact.mean_p),
                          std::abs(numeric.sigma_q - exact.sigma_q),
                          std::abs(numeric.sigma_p - exact.sigma_p),
                          std::abs(numeric.sigma_qp - exact.sigma_qp)});
    }
    return detail::bounded("quadrature_moments", worst, 1e-8,
                           "quadrature moments vs analytic formulas");
}

inline CheckResult check_overlap_quadrature(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 7);
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const CSLabel z1{complexd(detail::uniform(rng, -1.5, 1.5),
                                  detail::uniform(rng, -1.5, 1.5))};
        const CSLabel z2{complexd(detail::uniform(rng, -1.5, 1.5),
                                  detail::uniform(rng, -1.5, 1.5))};
        for (const double tau : {0.0, 1.0}) {
            worst = std::max(worst, std::abs(overlap_quadrature(z1, z2, tau, fam, grid) -
                                             overlap(z1, z2)));
        }
    }
    return detail::bounded("overlap_quadrature", worst, 1e-8,
                           "quadrature overlap vs exp(z1* z2 - (|z1|^2 + |z2|^2)/2)");
}

inline CheckResult check_overlap_sigma_independence(const VerifyOptions& opt) {
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    const CSLabel z1{complexd(0.4, -0.7)};
    const CSLabel z2{complexd(-0.3, 1.1)};
    double worst = 0.0;
    for (const double sigma : {0.3, 1.0, 3.0}) {
        const complexd value = overlap_quadrature(z1, z2, 0.5, make_cs_family(sigma), grid);
        worst = std::max(worst, std::abs(value - overlap(z1, z2)));
    }
    return detail::bounded("overlap_sigma_independence", worst, 1e-8,
                           "overlap carries no sigma_q dependence");
}

inline CheckResult check_completeness(const VerifyOptions&) {
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const double dev = completeness_check(0.0, 0.0, 0.0, fam, 1.0, 8.0, 32);
    return detail::bounded("completeness", dev, 1e-6,
                           "smeared resolution of identity at tau = 0, radius 8");
}

inline CheckResult check_glauber_convergence(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 8);
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const double angle = detail::uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const CSLabel z{std::polar(detail::uniform(rng, 0.5, 2.0), angle)};
    const double tau = detail::uniform(rng, 0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double q = -10.0 + 0.05 * i;
        worst = std::max(worst, std::abs(std::abs(glauber_sum(z, q, tau, fam, opt.n_trunc)) -
                                         std::abs(eval_cs(q, tau, z, fam))));
    }
    return detail::bounded("glauber_convergence", worst, 1e-8,
                           "truncated Glauber expansion vs closed form, |.| pointwise");
}

inline CheckResult check_glauber_phase_constancy(const VerifyOptions& opt) {
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const CSLabel z{complexd(1.2, -0.8)};
    const double tau = 0.7;
    std::vector<double> args;
    double max_mag = 0.0;
    std::vector<std::pair<double, complexd>> samples;
    for (int i = 0; i <= 400; ++i) {
        const double q = -10.0 + 0.05 * i;
        const complexd closed = eval_cs(q, tau, z, fam);
        max_mag = std::max(max_mag, std::abs(closed));
        samples.emplace_back(std::abs(closed),
                             glauber_sum(z, q, tau, fam, opt.n_trunc) / closed);
    }
    complexd ref(0.0, 0.0);
    for (const auto& [mag, ratio] : samples) {
        if (mag == max_mag) ref = ratio;
    }
    for (const auto& [mag, ratio] : samples) {
        if (mag >= 1e-6 * max_mag) {
            args.push_back(std::arg(ratio / ref));
        }
    }
    double mean = 0.0;
    for (const double a : args) mean += a;
    mean /= static_cast<double>(args.size());
    double var = 0.0;
    for (const double a : args) var += (a - mean) * (a - mean);
    const double stddev = std::sqrt(var / static_cast<double>(args.size()));
    return detail::bounded("glauber_phase_constancy", stddev, 1e-8,
                           "arg(sum / closed form) is constant across q");
}

inline CheckResult check_fock_orthonormality(const VerifyOptions& opt) {
    const Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const double tau = 0.3;
    std::vector<std::vector<complexd>> states;
    for (int n = 0; n <= 6; ++n) {
        std::vector<complexd> f(static_cast<std::size_t>(grid.n_points));
        for (int i = 0; i < grid.n_points; ++i) {
            f[static_cast<std::size_t>(i)] = fock_state(n, grid.point(i), tau, fam);
        }
        states.push_back(std::move(f));
    }
    double worst = 0.0;
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
            complexd acc(0.0, 0.0);
            for (std::size_t i = 0; i < states[0].size(); ++i) {
                acc += std::conj(states[static_cast<std::size_t>(m)][i]) *
                       states[static_cast<std::size_t>(n)][i];
            }
            acc *= grid.spacing();
            worst = std::max(worst, std::abs(acc - (m == n ? 1.0 : 0.0)));
        }
    }
    return detail::bounded("fock_orthonormality", worst, 1e-8,
                           "<m|n> = delta_mn by quadrature, m, n <= 6");
}

inline CheckResult check_density_consistency(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 9);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const GeneralizedFamily fam = detail::random_generalized(rng);
        const CSLabel z{complexd(detail::uniform(rng, -1.0, 1.0),
                                 detail::uniform(rng, -1.0, 1.0))};
        const double tau = detail::uniform(rng, -2.0, 2.0);
        const auto [q0, p] = initial_from_z(z, fam);
        const double q = q0 + p * tau + detail::uniform(rng, -2.0, 2.0);
        worst = std::max(worst, std::abs(density(q, tau, z, fam) -
                                         std::norm(eval_generalized_cs(q, tau, z, fam))));
    }
    return detail::bounded("density_consistency", worst, 1e-13,
                           "density equals |wavefunction|^2");
}

inline CheckResult check_eval_paths_agree(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 10);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CSFamily fam = make_cs_family(detail::uniform(rng, 0.4, 2.0));
        const GeneralizedFamily gen = fam.generalized();
        const CSLabel z{complexd(detail::uniform(rng, -1.0, 1.0),
                                 detail::uniform(rng, -1.0, 1.0))};
        const double tau = detail::uniform(rng, -2.0, 2.0);
        const auto [q0, p] = initial_from_z(z, fam);
        const double q = q0 + p * tau + detail::uniform(rng, -3.0, 3.0);
        const complexd a = eval_cs(q, tau, z, fam);
        const complexd b = eval_generalized_cs(q, tau, z, gen);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    return detail::bounded("eval_paths_agree", worst, 1e-14,
                           "sigma_q closed form vs generalized form, relative");
}

inline CheckResult check_peak_velocity(const VerifyOptions&) {
    const CSFamily fam = make_cs_family(std::sqrt(0.5));
    const CSLabel z = z_from_initial(0.4, 2.0, fam);
    const double tau = 0.7;
    const int n = 2001;
    const double q_min = -8.0, q_max = 12.0;
    const double h = (q_max - q_min) / (n - 1);
    double best_q = q_min, best_rho = -1.0;
    for (int i = 0; i < n; ++i) {
        const double q = q_min + i * h;
        const double rho = density(q, tau, z, fam);
        if (rho > best_rho) {
            best_rho = rho;
            best_q = q;
        }
    }
    const double expected = 0.4 + 2.0 * tau;
    return detail::bounded("peak_velocity", best_q - expected, h,
                           "density maximum sits at q0 + p tau (within one grid step)");
}

inline CheckResult check_plane_wave_phase_velocity(const VerifyOptions&) {
    const double p = 2.0;
    std::vector<double> taus, crests;
    for (int i = 0; i <= 10; ++i) {
        const double tau = 0.1 * i;
        const double center = 0.5 * p * tau;
        double lo = center - 0.9 * std::numbers::pi / p;
        double hi = center + 0.9 * std::numbers::pi / p;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            (std::arg(plane_wave(mid, tau, p)) < 0.0 ? lo : hi) = mid;
        }
        taus.push_back(tau);
        crests.push_back(0.5 * (lo + hi));
    }
    double st = 0.0, sc = 0.0, stt = 0.0, stc = 0.0;
    const auto n = static_cast<double>(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
        st += taus[i]; sc += crests[i]; stt += taus[i] * taus[i]; stc += taus[i] * crests[i];
    }
    const double slope = (n * stc - st * sc) / (n * stt - st * st);
    return detail::bounded("plane_wave_phase_velocity", slope - 0.5 * p, 1e-10,
                           "crest tracked by root-finding on the phase moves at p/2");
}

inline CheckResult check_mu_phase_invariance(const VerifyOptions& opt) {
    auto rng = detail::engine(opt, 11);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const GeneralizedFamily fam = detail::random_generalized(rng);
        const double mu = detail::uniform(rng, -std::numbers::pi, std::numbers::pi);
        const complexd rot = std::polar(1.0, mu);
        const GeneralizedFamily fam_rot = make_generalized(rot * fam.c1(), rot * fam.c2());
        const CSLabel z{complexd(detail::uniform(rng, -1.0, 1.0),
                                 detail::uniform(rng, -1.0, 1.0))};
        const CSLabel z_rot{rot * z.z};
        const double tau = detail::uniform(rng, -1.0, 1.0);
        const double q = detail::uniform(rng, -3.0, 3.0);
        worst = std::max(worst, std::abs(std::abs(eval_generalized_cs(q, tau, z_rot, fam_rot)) -
                                         std::abs(eval_generalized_cs(q, tau, z, fam))));
        const Moments a = moments(tau, z_rot, fam_rot);
        const Moments b = moments(tau, z, fam);
        worst = std::max({worst, std::abs(a.mean_q - b.mean_q), std::abs(a.mean_p - b.mean_p),
                          std::abs(a.sigma_q - b.sigma_q), std::abs(a.sigma_p - b.sigma_p),
                          std::abs(a.sigma_qp - b.sigma_qp)});
    }
    return detail::bounded("mu_phase_invariance", worst, 1e-12,
                           "rotating (c1, c2, z) by e^{i mu} changes nothing observable");
}

inline std::vector<CheckResult> run_verify_suite(const VerifyOptions& opt) {
    using Check = std::function<CheckResult(const VerifyOptions&)>;
    const std::vector<std::pair<std::string, Check>> all{
        {"rs_saturation", check_rs_saturation},
        {"heisenberg_cs_tau0", check_heisenberg_cs_tau0},
        {"heisenberg_squeezed_tau0", check_heisenberg_squeezed_tau0},
        {"schrodinger_residual_cs", check_schrodinger_residual_cs},
        {"residual_negative_control", check_residual_negative_control},
        {"residual_slope_dt", check_residual_slope_dt},
        {"residual_slope_h", check_residual_slope_h},
        {"propagate", check_propagate},
        {"propagate_unitarity", check_propagate_unitarity},
        {"quadrature_norm", check_quadrature_norm},
        {"quadrature_moments", check_quadrature_moments},
        {"overlap_quadrature", check_overlap_quadrature},
        {"overlap_sigma_independence", check_overlap_sigma_independence},
        {"completeness", check_completeness},
        {"glauber_convergence", check_glauber_convergence},
        {"glauber_phase_constancy", check_glauber_phase_constancy},
        {"fock_orthonormality", check_fock_orthonormality},
        {"density_consistency", check_density_consistency},
        {"eval_paths_agree", check_eval_paths_agree},
        {"peak_velocity", check_peak_velocity},
        {"plane_wave_phase_velocity", check_plane_wave_phase_velocity},
        {"mu_phase_invariance", check_mu_phase_invariance},
    };
    std::vector<CheckResult> results;
    for (const auto& [name, check] : all) {
        if (!opt.filter.empty() && name.find(opt.filter) == std::string::npos) {
            continue;
        }
        results.push_back(check(opt));
    }
    if (results.empty()) {
        throw invalid_input("no check matches filter '" + opt.filter + "'");
    }
    return results;
}

inline bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

inline nlohmann::json report_json(const std::vector<CheckResult>& results,
                                  const VerifyOptions& opt) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        checks.push_back({{"name", r.name},
                          {"value", r.value},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass},
                          {"detail", r.detail}});
    }
    return {{"seed", opt.seed}, {"checks", checks}, {"all_pass", all_pass(results)}};
}

}  // namespace fpcs::checks
