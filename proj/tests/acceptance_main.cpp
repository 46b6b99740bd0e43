// Acceptance suite: runs every shipped criterion at its stated tolerance and
// prints one [PASS]/[FAIL] line per criterion. Exits nonzero if any fails.
//
// Usage: fpcs_acceptance <path-to-fpcs-cli>
// (the CLI path is needed for the determinism / exit-code criterion)

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fpcs/fpcs.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace {

using fpcs::complexd;
using fpcs::CSLabel;
using fpcs::Grid;

int g_failed_criteria = 0;

struct Criterion {
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok_ = false;
            std::cerr << "    failed: " << what << "\n";
        }
    }

    void check_close(double value, double expected, double tol, const std::string& what) {
        if (!(std::isfinite(value) && std::abs(value - expected) <= tol)) {
            ok_ = false;
            std::cerr << "    failed: " << what << " value=" << value
                      << " expected=" << expected << " tol=" << tol << "\n";
        }
    }

    ~Criterion() {
        std::cout << (ok_ ? "[PASS] " : "[FAIL] ") << name_ << "\n";
        if (!ok_) ++g_failed_criteria;
    }

    std::string name_;
    bool ok_ = true;
};

fpcs::GeneralizedFamily random_generalized(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> r1(0.3, 3.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> skew(-2.0, 2.0);
    const complexd c1 = std::polar(r1(rng), angle(rng));
    return fpcs::make_generalized(c1, complexd(0.5, skew(rng)) / std::conj(c1));
}

void criterion_1_rs_saturation() {
    Criterion c("criterion 1: Robertson-Schrodinger product = 1/4 for 100 random "
                "families, tau in [-5, 5], within 1e-12");
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> tau_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> sig_dist(0.3, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double tau = tau_dist(rng);
        const double value = (i % 2 == 0)
                                 ? fpcs::rs_product(tau, fpcs::make_cs_family(sig_dist(rng)))
                                 : fpcs::rs_product(tau, random_generalized(rng));
        c.check_close(value, 0.25, 1e-12, "rs_product at tau=" + std::to_string(tau));
    }
}

void criterion_2_heisenberg_tau0() {
    Criterion c("criterion 2: Heisenberg product at tau = 0 is 0.5 (CS, 1e-14) and "
                "> 0.5 for mu1 != mu2 families");
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> sig_dist(0.3, 3.0);
    for (int i = 0; i < 50; ++i) {
        c.check_close(fpcs::heisenberg_product(0.0, fpcs::make_cs_family(sig_dist(rng))),
                      0.5, 1e-14, "CS family minimum");
    }
    int tested = 0;
    while (tested < 50) {
        const auto fam = random_generalized(rng);
        if (std::abs(std::sin(fam.mu2() - fam.mu1())) < 1e-3) continue;
        ++tested;
        c.check(fpcs::heisenberg_product(0.0, fam) > 0.5,
                "squeezed family must exceed 1/2 at tau = 0");
    }
}

void criterion_3_schrodinger_residual() {
    Criterion c("criterion 3: finite-difference residual < 1e-6 at 10 random points; "
                "convergence orders 2 (dt) and 4 (h) within 0.2");
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> sig_dist(0.6, 1.4);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    std::uniform_real_distribution<double> tau_dist(0.1, 1.5);
    const Grid reference(-40.0, 40.0, 4096);
    for (int i = 0; i < 10; ++i) {
        const auto fam = fpcs::make_cs_family(sig_dist(rng));
        const CSLabel z{complexd(comp(rng), comp(rng))};
        const double tau = tau_dist(rng);
        const auto report = fpcs::schrodinger_residual(
            [&](double q, double t) { return fpcs::eval_cs(q, t, z, fam); }, reference,
            tau, 1e-4);
        c.check(report.rel_residual < 1e-6,
                "rel_residual " + std::to_string(report.rel_residual) + " at point " +
                    std::to_string(i));
    }

    const auto fam = fpcs::make_cs_family(std::sqrt(0.5));
    const CSLabel z = fpcs::z_from_initial(0.0, 2.0, fam);
    const auto psi = [&](double q, double t) { return fpcs::eval_cs(q, t, z, fam); };

    std::vector<double> dts{0.02, 0.01, 0.005, 0.0025}, dt_errs;
    for (const double dt : dts) {
        dt_errs.push_back(fpcs::schrodinger_residual(psi, reference, 0.5, dt).rel_residual);
    }
    c.check_close(fpcs::checks::residual_loglog_slope(dts, dt_errs), 2.0, 0.2,
                  "dt convergence order");

    std::vector<double> hs, h_errs;
    for (const int n : {256, 512, 1024, 2048}) {
        const Grid grid(-40.0, 40.0, n);
        hs.push_back(grid.spacing());
        h_errs.push_back(fpcs::schrodinger_residual(psi, grid, 0.5, 1e-5).rel_residual);
    }
    c.check_close(fpcs::checks::residual_loglog_slope(hs, h_errs), 4.0, 0.2,
                  "h convergence order");
}

void criterion_4_propagation() {
    Criterion c("criterion 4: spectral evolution to tau = 1 matches the closed form, "
                "L2 < 1e-8, for sigma_q in {0.5, 2^-1/2, 2} x p in {0, 2}");
    const Grid grid(-40.0, 40.0, 4096);
    for (const double sigma : {0.5, std::sqrt(0.5), 2.0}) {
        for (const double p : {0.0, 2.0}) {
            const auto fam = fpcs::make_cs_family(sigma);
            const CSLabel z = fpcs::z_from_initial(0.0, p, fam);
            const auto evolved = fpcs::propagate_spectral(fpcs::cs_field(fam, z, 0.0, grid), 1.0);
            double l2 = 0.0;
            for (int i = 0; i < grid.n_points; ++i) {
                l2 += std::norm(evolved.values[static_cast<std::size_t>(i)] -
                                fpcs::eval_cs(grid.point(i), 1.0, z, fam));
            }
            l2 = std::sqrt(l2 * grid.spacing());
            c.check(l2 < 1e-8, "L2 = " + std::to_string(l2) + " at sigma=" +
                                   std::to_string(sigma) + " p=" + std::to_string(p));
        }
    }
}

void criterion_5_density_evolution() {
    Criterion c("criterion 5: density evolution (sigma = 2^-1/2, p = 2, q0 = 0): "
                "peaks (0, 0.56419) and (2, 0.39894) within 1e-3; sigma_q(1) = 1 "
                "within 1e-8");
    fpcs::RunConfig config;
    config.sigma_q = std::sqrt(0.5);
    config.q0 = 0.0;
    config.p = 2.0;
    const auto fam = fpcs::resolve_family(config);
    const auto label = fpcs::resolve_label(config, fam);
    const auto qs = fpcs::linspace_points(fpcs::parse_grid_spec("-8:8:1601"));

    const auto peak_of = [&](double tau) {
        const auto rows = fpcs::field_rows(fam, label, tau, qs);
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].rho > rows[best].rho) best = i;
        }
        return rows[best];
    };

    const auto peak0 = peak_of(0.0);
    c.check_close(peak0.q, 0.0, 1e-9, "peak position at tau = 0");
    c.check_close(peak0.rho, 0.56419, 1e-3, "peak density at tau = 0");

    const auto peak1 = peak_of(1.0);
    c.check_close(peak1.q, 2.0, 1e-9, "peak position at tau = 1");
    c.check_close(peak1.rho, 0.39894, 1e-3, "peak density at tau = 1");

    const auto m = fpcs::moments(1.0, label, std::get<fpcs::CSFamily>(fam));
    c.check_close(m.sigma_q, 1.0, 1e-8, "sigma_q(1)");
}

void criterion_6_overlap_completeness() {
    Criterion c("criterion 6: quadrature overlap matches the closed form (20 random "
                "pairs, tau in {0, 1}, 1e-8); smeared completeness < 1e-6");
    std::mt19937_64 rng(106);
    std::uniform_real_distribution<double> comp(-1.5, 1.5);
    const Grid grid(-40.0, 40.0, 4096);
    const auto fam = fpcs::make_cs_family(std::sqrt(0.5));
    for (int i = 0; i < 20; ++i) {
        const CSLabel z1{complexd(comp(rng), comp(rng))};
        const CSLabel z2{complexd(comp(rng), comp(rng))};
        for (const double tau : {0.0, 1.0}) {
            const complexd quad = fpcs::overlap_quadrature(z1, z2, tau, fam, grid);
            const complexd exact = fpcs::overlap(z1, z2);
            c.check(std::abs(quad - exact) < 1e-8,
                    "overlap pair " + std::to_string(i) + " at tau " + std::to_string(tau) +
                        ": |diff| = " + std::to_string(std::abs(quad - exact)));
        }
    }
    const double radius = fpcs::completeness_default_radius(0.0, fam);
    const double dev0 = fpcs::completeness_check(0.0, 0.0, 0.0, fam, 1.0, radius, 48);
    c.check(dev0 < 1e-6, "completeness deviation at tau = 0: " + std::to_string(dev0));
    const double dev2 = fpcs::completeness_check(0.0, 0.0, 2.0, fam, 1.0, 14.0, 64);
    c.check(dev2 < 1e-6, "completeness deviation at tau = 2: " + std::to_string(dev2));
}

void criterion_7_glauber() {
    Criterion c("criterion 7: 40-term Glauber sum matches the closed form up to a "
                "constant phase (|.| error < 1e-8, |z| <= 2); Fock orthonormality 1e-8");
    const auto fam = fpcs::make_cs_family(std::sqrt(0.5));
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> tau_dist(0.0, 1.0);

    std::vector<complexd> labels;
    for (int i = 0; i < 4; ++i) {
        labels.push_back(std::polar(2.0, angle(rng)));  // the worst case |z| = 2
    }
    labels.push_back(complexd(1.0, 1.0));

    for (const complexd& zval : labels) {
        const CSLabel z{zval};
        const double tau = tau_dist(rng);
        double worst_mag = 0.0;
        std::vector<std::pair<double, complexd>> samples;
        double max_mag = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double q = -10.0 + 0.05 * i;
            const complexd closed = fpcs::eval_cs(q, tau, z, fam);
            const complexd sum = fpcs::glauber_sum(z, q, tau, fam, 40);
            worst_mag = std::max(worst_mag, std::abs(std::abs(sum) - std::abs(closed)));
            max_mag = std::max(max_mag, std::abs(closed));
            samples.emplace_back(std::abs(closed), sum / closed);
        }
        c.check(worst_mag < 1e-8, "pointwise modulus error " + std::to_string(worst_mag));

        complexd ref(0.0, 0.0);
        for (const auto& [mag, ratio] : samples) {
            if (mag == max_mag) ref = ratio;
        }
        double mean = 0.0;
        std::vector<double> args;
        for (const auto& [mag, ratio] : samples) {
            if (mag >= 1e-6 * max_mag) args.push_back(std::arg(ratio / ref));
        }
        for (const double a : args) mean += a;
        mean /= static_cast<double>(args.size());
        double var = 0.0;
        for (const double a : args) var += (a - mean) * (a - mean);
        const double stddev = std::sqrt(var / static_cast<double>(args.size()));
        c.check(stddev < 1e-8, "phase constancy stddev " + std::to_string(stddev));
    }

    const Grid grid(-40.0, 40.0, 4096);
    const double tau = 0.3;
    std::vector<std::vector<complexd>> states;
    for (int n = 0; n <= 6; ++n) {
        std::vector<complexd> f(static_cast<std::size_t>(grid.n_points));
        for (int i = 0; i < grid.n_points; ++i) {
            f[static_cast<std::size_t>(i)] = fpcs::fock_state(n, grid.point(i), tau, fam);
        }
        states.push_back(std::move(f));
    }
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
            complexd acc(0.0, 0.0);
            for (std::size_t i = 0; i < states[0].size(); ++i) {
                acc += std::conj(states[static_cast<std::size_t>(m)][i]) *
                       states[static_cast<std::size_t>(n)][i];
            }
            acc *= grid.spacing();
            c.check(std::abs(acc - (m == n ? 1.0 : 0.0)) < 1e-8,
                    "orthonormality <" + std::to_string(m) + "|" + std::to_string(n) + ">");
        }
    }
}

void criterion_8_moments() {
    Criterion c("criterion 8: quadrature moments agree with the analytic formulas to "
                "1e-8 at 10 random points");
    std::mt19937_64 rng(108);
    std::uniform_real_distribution<double> sig_dist(0.6, 1.4);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    std::uniform_real_distribution<double> tau_dist(0.0, 1.5);
    const Grid grid(-40.0, 40.0, 4096);
    for (int i = 0; i < 10; ++i) {
        const auto fam = fpcs::make_cs_family(sig_dist(rng));
        const CSLabel z{complexd(comp(rng), comp(rng))};
        const double tau = tau_dist(rng);
        const auto numeric = fpcs::quadrature_moments(fpcs::cs_field(fam, z, tau, grid));
        const auto exact = fpcs::moments(tau, z, fam);
        c.check_close(numeric.mean_q, exact.mean_q, 1e-8, "mean_q");
        c.check_close(numeric.mean_p, exact.mean_p, 1e-8, "mean_p");
        c.check_close(numeric.sigma_q, exact.sigma_q, 1e-8, "sigma_q");
        c.check_close(numeric.sigma_p, exact.sigma_p, 1e-8, "sigma_p");
        c.check_close(numeric.sigma_qp, exact.sigma_qp, 1e-8, "sigma_qp");
    }
}

void criterion_9_semiclassicality() {
    Criterion c("criterion 9: cyclotron example (v = 1e3 m/s, 2 sigma_x = 1e-7 m) "
                "gives ratio 1.16 +- 0.01, verdict marginal");
    const fpcs::UnitSystem u = fpcs::UnitSystem::electron(1e-7);
    const fpcs::DimensionalPacket cyclotron(
        0.0, fpcs::constants::electron_mass_kg * 1e3, 5e-8, u);
    const auto report = fpcs::classify(cyclotron);
    c.check_close(report.ratio, 1.16, 0.01, "cyclotron ratio");
    c.check(report.verdict == fpcs::Verdict::marginal, "cyclotron verdict is marginal");
    const double direct = fpcs::constants::hbar_Js /
                          (2.0 * cyclotron.p_x * cyclotron.sigma_x);
    c.check(std::abs(report.ratio - direct) <= 1e-12 * direct,
            "ratio consistent with hbar / (2 p_x sigma_x)");

    const fpcs::DimensionalPacket fast(0.0, fpcs::constants::electron_mass_kg * 1e6,
                                       5e-8, u);
    c.check(fpcs::classify(fast).verdict == fpcs::Verdict::semiclassical,
            "v = 1e6 m/s electrons classify as semiclassical");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_cli(const std::string& command) {
    const int status = std::system(command.c_str());
#ifdef __unix__
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
#else
    return status;
#endif
}

void criterion_10_determinism(const std::string& cli) {
    Criterion c("criterion 10: byte-identical repeated runs of verify and field; "
                "documented exit codes");
    namespace fs = std::filesystem;
    const fs::path dir = fs::path("acceptance_tmp");
    fs::create_directories(dir);
    const std::string quiet = " > /dev/null 2>&1";

    const std::string verify_cmd = cli + " verify --seed 7 --out ";
    c.check(run_cli(verify_cmd + (dir / "v1.json").string() + quiet) == 0,
            "verify run 1 exits 0 (all checks pass)");
    c.check(run_cli(verify_cmd + (dir / "v2.json").string() + quiet) == 0,
            "verify run 2 exits 0 (all checks pass)");
    const std::string v1 = read_file(dir / "v1.json");
    c.check(!v1.empty() && v1 == read_file(dir / "v2.json"),
            "verify reports byte-identical");

    const std::string field_cmd = cli +
        " field --sigma-q 0.70710678118654752 --q0 0 --p 2 --tau 0,1 --grid -8:8:1601 --out ";
    c.check(run_cli(field_cmd + (dir / "f1.csv").string() + quiet) == 0,
            "field run 1 exits 0");
    c.check(run_cli(field_cmd + (dir / "f2.csv").string() + quiet) == 0,
            "field run 2 exits 0");
    const std::string f1 = read_file(dir / "f1.csv");
    c.check(!f1.empty() && f1 == read_file(dir / "f2.csv"), "field CSVs byte-identical");
    c.check(read_file(dir / "f1.csv.meta.json") == read_file(dir / "f2.csv.meta.json"),
            "sidecars byte-identical");

    c.check(run_cli(cli + " verify --c1 1,0 --c2 1,0" + quiet) == 1,
            "corrupted family (delta = 2) exits 1");
    c.check(run_cli(cli + " field --sigma-q 1 --tau 0 --grid -8:8:17 --out "
                    "/nonexistent_dir_fpcs/x.csv" + quiet) == 2,
            "unwritable output path exits 2");
    c.check(run_cli(cli + " field --sigma-q 1 --z 1,0 --q0 3 --p 0 --tau 0 "
                    "--grid -8:8:17 --out " + (dir / "bad.csv").string() + quiet) == 1,
            "inconsistent z vs (q0, p) exits 1");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: fpcs_acceptance <path-to-fpcs-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion_1_rs_saturation();
    criterion_2_heisenberg_tau0();
    criterion_3_schrodinger_residual();
    criterion_4_propagation();
    criterion_5_density_evolution();
    criterion_6_overlap_completeness();
    criterion_7_glauber();
    criterion_8_moments();
    criterion_9_semiclassicality();
    criterion_10_determinism(cli);

    if (g_failed_criteria == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failed_criteria << " acceptance criteria failed\n";
    return 1;
}
