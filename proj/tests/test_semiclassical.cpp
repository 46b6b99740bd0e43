#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "fpcs/analytic.hpp"
#include "fpcs/families.hpp"
#include "fpcs/semiclassical.hpp"
#include "fpcs/units.hpp"

using fpcs::DimensionalPacket;
using fpcs::UnitSystem;

namespace {
const double kMe = fpcs::constants::electron_mass_kg;
const double kHbar = fpcs::constants::hbar_Js;
}  // namespace

TEST_CASE("sigma_x_of_t spreading law") {
    const UnitSystem u = UnitSystem::electron(1e-7);
    const DimensionalPacket packet(0.0, 0.0, 5e-8, u);

    SECTION("no spreading at t = 0") {
        REQUIRE(fpcs::sigma_x_of_t(packet, 0.0) == 5e-8);
    }

    SECTION("sqrt(2) sigma at the symmetry point hbar t / (2 m sigma) = sigma") {
        const double t_star = 2.0 * kMe * 5e-8 * 5e-8 / kHbar;
        const double expected = std::sqrt(2.0) * 5e-8;
        REQUIRE(std::abs(fpcs::sigma_x_of_t(packet, t_star) - expected) < 1e-12 * expected);
    }

    SECTION("agrees with the dimensionless sigma_q(tau) through the unit map (property)") {
        std::mt19937_64 rng(67);
        std::uniform_real_distribution<double> t_dist(-2e-10, 2e-10);
        const double l = 1e-7;
        const UnitSystem units = UnitSystem::electron(l);
        const double sigma_x = 4.2e-8;
        const DimensionalPacket pk(0.0, 0.0, sigma_x, units);
        const auto fam = fpcs::make_cs_family(sigma_x / l);
        for (int i = 0; i < 50; ++i) {
            const double t = t_dist(rng);
            const double tau = fpcs::to_dimensionless(0.0, t, 0.0, units).tau;
            const double via_family = l * std::abs(fpcs::g_of_tau(fam, tau));
            const double direct = fpcs::sigma_x_of_t(pk, t);
            REQUIRE(std::abs(direct - via_family) <= 1e-12 * direct);
        }
    }
}

TEST_CASE("eval_dimensional") {
    const UnitSystem u = UnitSystem::electron(1e-7);
    const double sigma_x = 5e-8;
    const double v = 1e3;
    const DimensionalPacket packet(1e-8, kMe * v, sigma_x, u);

    SECTION("density peak value at the moving center") {
        for (const double t : {0.0, 4e-11, 1.2e-10}) {
            const double xt = 1e-8 + v * t;
            const auto value = fpcs::eval_dimensional(packet, xt, t);
            const double st = fpcs::sigma_x_of_t(packet, t);
            const double expected = 1.0 / std::sqrt(2.0 * std::numbers::pi * st * st);
            REQUIRE(std::abs(value.rho - expected) <= 1e-13 * expected);
        }
    }

    SECTION("peak at t = 0 is (2 pi sigma_x^2)^{-1/2}") {
        const auto value = fpcs::eval_dimensional(packet, 1e-8, 0.0);
        const double expected = 1.0 / std::sqrt(2.0 * std::numbers::pi * sigma_x * sigma_x);
        REQUIRE(std::abs(value.rho - expected) <= 1e-13 * expected);
    }

    SECTION("rho equals |Psi|^2") {
        for (const double t : {0.0, 5e-11}) {
            for (double dx = -1.5e-7; dx <= 1.5e-7; dx += 3e-8) {
                const double x = 1e-8 + v * t + dx;
                const auto value = fpcs::eval_dimensional(packet, x, t);
                REQUIRE(std::abs(value.rho - std::norm(value.psi)) <=
                        1e-13 * (value.rho + 1e-300));
            }
        }
    }

    SECTION("density integrates to one") {
        const double t = 6e-11;
        const double xt = 1e-8 + v * t;
        const double st = fpcs::sigma_x_of_t(packet, t);
        const int n = 4000;
        const double a = xt - 12.0 * st, b = xt + 12.0 * st;
        const double h = (b - a) / n;
        double total = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double w = (i == 0 || i == n) ? 0.5 : 1.0;
            total += w * fpcs::eval_dimensional(packet, a + i * h, t).rho;
        }
        total *= h;
        REQUIRE(std::abs(total - 1.0) < 1e-9);
    }

    SECTION("matches l^{-1/2} psi(q, tau) through the unit map (property)") {
        std::mt19937_64 rng(71);
        std::uniform_real_distribution<double> x_dist(-2e-7, 3e-7);
        std::uniform_real_distribution<double> t_dist(0.0, 1.5e-10);
        const double l = 1e-7;
        const UnitSystem units = UnitSystem::electron(l);
        const DimensionalPacket pk(2e-8, kMe * 1e3, 4e-8, units);
        const auto fam = fpcs::make_cs_family(4e-8 / l);
        for (int i = 0; i < 50; ++i) {
            const double x = x_dist(rng);
            const double t = t_dist(rng);
            const auto s = fpcs::to_dimensionless(x, t, pk.p_x, units);
            const auto label = fpcs::z_from_initial(pk.x0 / l, s.p, fam);
            const std::complex<double> psi_dimless = fpcs::eval_cs(s.q, s.tau, label, fam);
            const std::complex<double> expected = psi_dimless / std::sqrt(l);
            const std::complex<double> actual = fpcs::eval_dimensional(pk, x, t).psi;
            REQUIRE(std::abs(actual - expected) <= 1e-12 * std::abs(expected));
        }
    }
}

TEST_CASE("classify") {
    const UnitSystem u = UnitSystem::electron(1e-7);

    SECTION("cyclotron electrons (v = 1e3 m/s, 2 sigma_x = 1e-7 m) are marginal") {
        const DimensionalPacket packet(0.0, kMe * 1e3, 5e-8, u);
        const auto report = fpcs::classify(packet);
        REQUIRE(std::abs(report.wavelength - 7.27e-7) < 1e-2 * 7.27e-7);
        REQUIRE(std::abs(report.bound - 6.28e-7) < 1e-2 * 6.28e-7);
        REQUIRE(std::abs(report.ratio - 1.16) < 0.01);
        REQUIRE(report.verdict == fpcs::Verdict::marginal);
    }

    SECTION("fast electrons (v = 1e6 m/s) are semiclassical") {
        const DimensionalPacket packet(0.0, kMe * 1e6, 5e-8, u);
        const auto report = fpcs::classify(packet);
        REQUIRE(std::abs(report.ratio - 1.16e-3) < 1e-2 * 1.16e-3);
        REQUIRE(report.verdict == fpcs::Verdict::semiclassical);
    }

    SECTION("p_x = 0 is quantum with an infinite-ratio sentinel") {
        const DimensionalPacket packet(0.0, 0.0, 5e-8, u);
        const auto report = fpcs::classify(packet);
        REQUIRE(report.verdict == fpcs::Verdict::quantum);
        REQUIRE(std::isinf(report.ratio));
        REQUIRE(std::isinf(report.wavelength));
        REQUIRE(report.bound > 0.0);
    }

    SECTION("ratio depends only on p_x sigma_x (property)") {
        std::mt19937_64 rng(73);
        std::uniform_real_distribution<double> alpha_dist(0.1, 10.0);
        const double p0 = kMe * 2e3, s0 = 3e-8;
        const double base = fpcs::classify(DimensionalPacket(0.0, p0, s0, u)).ratio;
        for (int i = 0; i < 50; ++i) {
            const double alpha = alpha_dist(rng);
            const double scaled =
                fpcs::classify(DimensionalPacket(0.0, alpha * p0, s0 / alpha, u)).ratio;
            REQUIRE(std::abs(scaled - base) <= 1e-12 * base);
        }
    }

    SECTION("ratio equals hbar / (2 p_x sigma_x)") {
        const DimensionalPacket packet(0.0, kMe * 1e3, 5e-8, u);
        const auto report = fpcs::classify(packet);
        const double direct = kHbar / (2.0 * packet.p_x * packet.sigma_x);
        REQUIRE(std::abs(report.ratio - direct) <= 1e-12 * direct);
    }

    SECTION("the two criterion forms coincide, independently of t (property)") {
        // (hbar^2 t^2 / (4 m^2 sigma_x^2)) / (p_x t / m)^2 == (lambda / (4 pi sigma_x))^2
        std::mt19937_64 rng(79);
        std::uniform_real_distribution<double> v_dist(1e2, 1e7);
        std::uniform_real_distribution<double> s_dist(1e-9, 1e-6);
        std::uniform_real_distribution<double> t_dist(1e-12, 1e-8);
        for (int i = 0; i < 50; ++i) {
            const double p = kMe * v_dist(rng);
            const double s = s_dist(rng);
            const double t = t_dist(rng);
            const double spreading = std::pow(kHbar * t / (2.0 * kMe * s), 2);
            const double travelled = std::pow(p * t / kMe, 2);
            const double form_a = spreading / travelled;
            const auto report = fpcs::classify(DimensionalPacket(0.0, p, s, u));
            const double form_b = report.ratio * report.ratio;
            REQUIRE(std::abs(form_a - form_b) <= 1e-12 * form_b);
        }
    }

    SECTION("invalid sigma_x rejected") {
        REQUIRE_THROWS_AS(DimensionalPacket(0.0, 1e-27, 0.0, u), fpcs::invalid_input);
        REQUIRE_THROWS_AS(DimensionalPacket(0.0, 1e-27, -1e-8, u), fpcs::invalid_input);
    }
}
