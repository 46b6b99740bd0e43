// fpcs: command-line front end for the free-particle coherent-state library.
// Subcommands: field, moments, verify, classify, completeness.
// Exit codes: 0 success, 1 config error, 2 I/O error, 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpcs/fpcs.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerifyFailed = 3;

struct Flags {
    std::string config_path;
    std::string out;
    std::string sigma_q, c1, c2, z, q0, p;
    std::string grid, tau;
    bool split = false;
    bool with_oracle = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    // classify
    std::string mass_kg, velocity_ms, sigma_x_m;
    // completeness
    std::string q_at, q_prime, test_width, radius, n_radial;
    // verify
    std::string check, tau0, tau1, n_trunc, half_width, n_points;
};

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file; flags override it");
    cmd->add_option("--out", flags.out, "output path (default: stdout where sensible)");
    cmd->add_option("--seed", flags.seed, "seed for randomized checks")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
}

void add_family(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--sigma-q", flags.sigma_q, "CS family parameter sigma_q > 0");
    cmd->add_option("--c1", flags.c1, "generalized family c1 as re,im");
    cmd->add_option("--c2", flags.c2, "generalized family c2 as re,im");
}

void add_label(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--z", flags.z, "quantum number z as re,im");
    cmd->add_option("--q0", flags.q0, "initial mean position");
    cmd->add_option("--p", flags.p, "mean momentum");
}

/// File config first, then flags on top.
fpcs::RunConfig build_config(const Flags& flags) {
    fpcs::RunConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) {
            throw fpcs::invalid_input("cannot open config file: " + flags.config_path);
        }
        nlohmann::json j;
        in >> j;
        fpcs::apply_config_json(config, j);
    }
    if (!flags.sigma_q.empty()) {
        config.sigma_q = fpcs::parse_double(flags.sigma_q);
        config.c1.reset();
        config.c2.reset();
    }
    if (!flags.c1.empty()) config.c1 = fpcs::parse_complex(flags.c1);
    if (!flags.c2.empty()) config.c2 = fpcs::parse_complex(flags.c2);
    if (!flags.c1.empty() || !flags.c2.empty()) config.sigma_q.reset();
    if (!flags.z.empty()) config.z = fpcs::parse_complex(flags.z);
    if (!flags.q0.empty()) config.q0 = fpcs::parse_double(flags.q0);
    if (!flags.p.empty()) config.p = fpcs::parse_double(flags.p);
    if (!flags.grid.empty()) config.grid = fpcs::parse_grid_spec(flags.grid);
    if (!flags.tau.empty()) config.tau = fpcs::parse_list(flags.tau);
    if (!flags.out.empty()) config.out = flags.out;
    if (flags.seed_set) config.seed = flags.seed;
    if (flags.split) config.split = true;
    if (flags.with_oracle) config.with_oracle = true;
    if (!flags.mass_kg.empty()) config.mass_kg = fpcs::parse_double(flags.mass_kg);
    if (!flags.velocity_ms.empty()) config.velocity_ms = fpcs::parse_double(flags.velocity_ms);
    if (!flags.sigma_x_m.empty()) config.sigma_x_m = fpcs::parse_double(flags.sigma_x_m);
    if (!flags.q_at.empty()) config.q_at = fpcs::parse_double(flags.q_at);
    if (!flags.q_prime.empty()) config.q_prime = fpcs::parse_double(flags.q_prime);
    if (!flags.test_width.empty()) config.test_width = fpcs::parse_double(flags.test_width);
    if (!flags.radius.empty()) config.radius = fpcs::parse_double(flags.radius);
    if (!flags.n_radial.empty()) {
        config.n_radial = static_cast<int>(fpcs::parse_double(flags.n_radial));
    }
    if (!flags.check.empty()) config.check = flags.check;
    if (!flags.tau0.empty()) config.tau0 = fpcs::parse_double(flags.tau0);
    if (!flags.tau1.empty()) config.tau1 = fpcs::parse_double(flags.tau1);
    if (!flags.n_trunc.empty()) {
        config.n_trunc = static_cast<int>(fpcs::parse_double(flags.n_trunc));
    }
    return config;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::ios_base::failure("cannot open output file: " + path);
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    auto out = open_output(path);
    out << text;
    if (!out) {
        throw std::ios_base::failure("write failed: " + path);
    }
}

std::string split_path(const std::string& base, std::size_t index) {
    const auto dot = base.find_last_of('.');
    const auto slash = base.find_last_of('/');
    const bool has_ext = dot != std::string::npos &&
                         (slash == std::string::npos || dot > slash);
    const std::string stem = has_ext ? base.substr(0, dot) : base;
    const std::string ext = has_ext ? base.substr(dot) : std::string(".csv");
    return stem + "_tau" + std::to_string(index) + ext;
}

int cmd_field(const Flags& flags) {
    const fpcs::RunConfig config = build_config(flags);
    const fpcs::FamilySpec fam = fpcs::resolve_family(config);
    const fpcs::CSLabel label = fpcs::resolve_label(config, fam);
    if (!config.grid) {
        throw fpcs::invalid_input("field: --grid min:max:count is required");
    }
    if (config.tau.empty()) {
        throw fpcs::invalid_input("field: --tau list is required");
    }
    if (config.out.empty()) {
        throw fpcs::invalid_input("field: --out path is required");
    }
    const auto qs = fpcs::linspace_points(*config.grid);
    std::vector<std::vector<fpcs::FieldRow>> per_tau;
    per_tau.reserve(config.tau.size());
    for (const double tau : config.tau) {
        per_tau.push_back(fpcs::field_rows(fam, label, tau, qs));
    }
    if (config.split) {
        for (std::size_t t = 0; t < config.tau.size(); ++t) {
            auto out = open_output(split_path(config.out, t));
            fpcs::write_field_csv(out, per_tau[t]);
            if (!out) throw std::ios_base::failure("write failed");
        }
    } else {
        auto out = open_output(config.out);
        fpcs::write_field_csv_long(out, config.tau, per_tau);
        if (!out) throw std::ios_base::failure("write failed");
    }
    write_text_file(config.out + ".meta.json",
                    fpcs::field_sidecar(fam, label, config.tau, *config.grid).dump(2) + "\n");
    return kExitOk;
}

int cmd_moments(const Flags& flags) {
    const fpcs::RunConfig config = build_config(flags);
    const fpcs::FamilySpec fam = fpcs::resolve_family(config);
    const fpcs::CSLabel label = fpcs::resolve_label(config, fam);
    if (config.tau.empty()) {
        throw fpcs::invalid_input("moments: --tau list is required");
    }
    const fpcs::GridSpec oracle_spec =
        config.grid.value_or(fpcs::GridSpec{-40.0, 40.0, 4096});

    std::ostringstream os;
    os << "tau,mean_q,mean_p,sigma_q,sigma_p,sigma_qp,rs_product,heisenberg";
    if (config.with_oracle) {
        os << ",quad_mean_q,quad_mean_p,quad_sigma_q,quad_sigma_p,quad_sigma_qp";
    }
    os << '\n';
    for (const double tau : config.tau) {
        const auto visit_moments = [&](const auto& f) { return fpcs::moments(tau, label, f); };
        const auto visit_rs = [&](const auto& f) { return fpcs::rs_product(tau, f); };
        const auto visit_h = [&](const auto& f) { return fpcs::heisenberg_product(tau, f); };
        const fpcs::Moments m = std::visit(visit_moments, fam);
        os << fpcs::format_double(tau) << ',' << fpcs::format_double(m.mean_q) << ','
           << fpcs::format_double(m.mean_p) << ',' << fpcs::format_double(m.sigma_q) << ','
           << fpcs::format_double(m.sigma_p) << ',' << fpcs::format_double(m.sigma_qp) << ','
           << fpcs::format_double(std::visit(visit_rs, fam)) << ','
           << fpcs::format_double(std::visit(visit_h, fam));
        if (config.with_oracle) {
            const fpcs::Grid grid(oracle_spec.q_min, oracle_spec.q_max, oracle_spec.count);
            const fpcs::WaveField field =
                fpcs::cs_field(fpcs::as_generalized(fam), label, tau, grid);
            const fpcs::Moments numeric = fpcs::quadrature_moments(field);
            os << ',' << fpcs::format_double(numeric.mean_q) << ','
               << fpcs::format_double(numeric.mean_p) << ','
               << fpcs::format_double(numeric.sigma_q) << ','
               << fpcs::format_double(numeric.sigma_p) << ','
               << fpcs::format_double(numeric.sigma_qp);
        }
        os << '\n';
    }
    if (config.out.empty()) {
        std::cout << os.str();
    } else {
        write_text_file(config.out, os.str());
    }
    return kExitOk;
}

int cmd_verify(const Flags& flags) {
    const fpcs::RunConfig config = build_config(flags);
    fpcs::checks::VerifyOptions opt;
    opt.seed = config.seed;
    opt.filter = config.check;
    opt.tau0 = config.tau0;
    opt.tau1 = config.tau1;
    opt.n_trunc = config.n_trunc;
    if (!flags.half_width.empty()) opt.q_half_width = fpcs::parse_double(flags.half_width);
    if (!flags.n_points.empty()) {
        opt.n_points = static_cast<int>(fpcs::parse_double(flags.n_points));
    }

    nlohmann::json report;
    // Raw-constants escape hatch: an explicitly given family is validated up
    // front, so a corrupted one fails here with a constructor error.
    if (config.sigma_q || (config.c1 && config.c2)) {
        report["family"] = fpcs::family_json(fpcs::resolve_family(config));
    }
    const auto results = fpcs::checks::run_verify_suite(opt);
    report.update(fpcs::checks::report_json(results, opt));
    {
        // full ResidualReport for the canonical CS at the configured resolution
        const auto fam = fpcs::make_cs_family(std::sqrt(0.5));
        const fpcs::CSLabel z = fpcs::z_from_initial(0.0, 2.0, fam);
        const fpcs::Grid grid(-opt.q_half_width, opt.q_half_width, opt.n_points);
        report["residual_report"] = fpcs::residual_json(fpcs::schrodinger_residual(
            [&](double q, double t) { return fpcs::eval_cs(q, t, z, fam); }, grid, 0.5,
            1e-4));
    }
    const std::string text = report.dump(2) + "\n";
    if (config.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(config.out, text);
    }
    return fpcs::checks::all_pass(results) ? kExitOk : kExitVerifyFailed;
}

int cmd_classify(const Flags& flags) {
    const fpcs::RunConfig config = build_config(flags);
    const double mass = config.mass_kg.value_or(
        config.units ? config.units->mass_kg() : fpcs::constants::electron_mass_kg);
    const double hbar = config.units ? config.units->hbar_Js() : fpcs::constants::hbar_Js;
    if (!config.velocity_ms) {
        throw fpcs::invalid_input("classify: --velocity-ms is required");
    }
    if (!config.sigma_x_m) {
        throw fpcs::invalid_input("classify: --sigma-x-m is required");
    }
    const fpcs::UnitSystem units(mass, hbar, config.units ? config.units->length_m() : 1.0);
    const fpcs::DimensionalPacket packet(0.0, mass * (*config.velocity_ms),
                                         *config.sigma_x_m, units);
    const auto report = fpcs::classify(packet);
    const std::string text = fpcs::classify_json(packet, report).dump(2) + "\n";
    if (config.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(config.out, text);
    }
    return kExitOk;
}

int cmd_completeness(const Flags& flags) {
    const fpcs::RunConfig config = build_config(flags);
    if (!config.sigma_q) {
        throw fpcs::invalid_input("completeness: --sigma-q is required");
    }
    const fpcs::CSFamily fam = fpcs::make_cs_family(*config.sigma_q);
    const double tau = config.tau.empty() ? 0.0 : config.tau.front();
    const double radius =
        config.radius.value_or(fpcs::completeness_default_radius(config.q_prime, fam));
    const double deviation =
        fpcs::completeness_check(config.q_at, config.q_prime, tau, fam,
                                 config.test_width, radius, config.n_radial);
    nlohmann::json j{{"q", config.q_at},
                     {"q_prime", config.q_prime},
                     {"tau", tau},
                     {"sigma_q", fam.sigma_q()},
                     {"test_width", config.test_width},
                     {"radius", radius},
                     {"n_radial", config.n_radial},
                     {"deviation", deviation}};
    const std::string text = j.dump(2) + "\n";
    if (config.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(config.out, text);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free-particle coherent states: evaluate, verify, classify"};
    app.require_subcommand(1);

    Flags flags;

    CLI::App* field = app.add_subcommand("field", "evaluate a CS field to CSV");
    add_common(field, flags);
    add_family(field, flags);
    add_label(field, flags);
    field->add_option("--grid", flags.grid, "grid spec min:max:count (inclusive samples)");
    field->add_option("--tau", flags.tau, "comma-separated tau list");
    field->add_flag("--split", flags.split, "one file per tau instead of a long-format file");

    CLI::App* moments = app.add_subcommand("moments", "analytic moments per tau to CSV");
    add_common(moments, flags);
    add_family(moments, flags);
    add_label(moments, flags);
    moments->add_option("--tau", flags.tau, "comma-separated tau list");
    moments->add_option("--grid", flags.grid, "oracle grid spec (with --with-oracle)");
    moments->add_flag("--with-oracle", flags.with_oracle,
                      "append quadrature moments columns");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite, JSON report");
    add_common(verify, flags);
    add_family(verify, flags);
    verify->add_option("--check", flags.check, "run only checks whose name contains this");
    verify->add_option("--tau0", flags.tau0, "propagation start time");
    verify->add_option("--tau1", flags.tau1, "propagation end time");
    verify->add_option("--n-trunc", flags.n_trunc, "Glauber truncation order");
    verify->add_option("--half-width", flags.half_width, "reference grid half width");
    verify->add_option("--n-points", flags.n_points, "reference grid points (power of two)");

    CLI::App* classify = app.add_subcommand("classify", "semiclassicality report, JSON");
    add_common(classify, flags);
    classify->add_option("--mass-kg", flags.mass_kg, "particle mass (default: electron)");
    classify->add_option("--velocity-ms", flags.velocity_ms, "particle velocity [m/s]");
    classify->add_option("--sigma-x-m", flags.sigma_x_m, "initial sigma_x [m]");

    CLI::App* completeness = app.add_subcommand("completeness",
                                                "smeared completeness deviation, JSON");
    add_common(completeness, flags);
    completeness->add_option("--sigma-q", flags.sigma_q, "CS family parameter");
    completeness->add_option("--tau", flags.tau, "time instant (single value)");
    completeness->add_option("--q", flags.q_at, "evaluation point");
    completeness->add_option("--q-prime", flags.q_prime, "test-function center");
    completeness->add_option("--test-width", flags.test_width, "test-function width");
    completeness->add_option("--radius", flags.radius, "z-plane truncation radius");
    completeness->add_option("--n-radial", flags.n_radial, "radial quadrature order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (field->parsed()) return cmd_field(flags);
        if (moments->parsed()) return cmd_moments(flags);
        if (verify->parsed()) return cmd_verify(flags);
        if (classify->parsed()) return cmd_classify(flags);
        if (completeness->parsed()) return cmd_completeness(flags);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fpcs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
