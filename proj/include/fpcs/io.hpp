#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fpcs/analytic.hpp"
#include "fpcs/error.hpp"
#include "fpcs/families.hpp"
#include "fpcs/oracle.hpp"
#include "fpcs/semiclassical.hpp"
#include "fpcs/units.hpp"

namespace fpcs {

/// Locale-independent float formatting, equivalent to printf "%.17g":
/// 17 significant decimal digits round-trip any double exactly.
inline std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw error("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

inline double parse_double(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw invalid_input("not a number: '" + text + "'");
    }
    return value;
}

/// "re,im" -> complex.
inline complexd parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return complexd(parse_double(text), 0.0);
    }
    return complexd(parse_double(text.substr(0, comma)),
                    parse_double(text.substr(comma + 1)));
}

struct GridSpec {
    double q_min;
    double q_max;
    int count;
};

/// "min:max:count". count is the number of samples, endpoints included when
/// sampled with linspace_points().
inline GridSpec parse_grid_spec(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw invalid_input("grid spec must be min:max:count, got '" + text + "'");
    }
    GridSpec spec{};
    spec.q_min = parse_double(text.substr(0, first));
    spec.q_max = parse_double(text.substr(first + 1, second - first - 1));
    const double count = parse_double(text.substr(second + 1));
    spec.count = static_cast<int>(count);
    if (spec.count != count || spec.count < 2 || !(spec.q_max > spec.q_min)) {
        throw invalid_input("grid spec must have integer count >= 2 and max > min");
    }
    return spec;
}

/// Inclusive uniform samples over [q_min, q_max].
inline std::vector<double> linspace_points(const GridSpec& spec) {
    std::vector<double> qs(static_cast<std::size_t>(spec.count));
    const double h = (spec.q_max - spec.q_min) / (spec.count - 1);
    for (int i = 0; i < spec.count; ++i) {
        qs[static_cast<std::size_t>(i)] = spec.q_min + i * h;
    }
    qs.back() = spec.q_max;
    return qs;
}

inline std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string::npos ? text.size() : comma;
        values.push_back(parse_double(text.substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) {
        throw invalid_input("empty list");
    }
    return values;
}

using FamilySpec = std::variant<CSFamily, GeneralizedFamily>;

inline GeneralizedFamily as_generalized(const FamilySpec& fam) {
    if (const auto* cs = std::get_if<CSFamily>(&fam)) {
        return cs->generalized();
    }
    return std::get<GeneralizedFamily>(fam);
}

/// Resolved CLI/JSON configuration. Flag values override file values.
struct RunConfig {
    std::optional<double> sigma_q;
    std::optional<complexd> c1;
    std::optional<complexd> c2;
    std::optional<complexd> z;
    std::optional<double> q0;
    std::optional<double> p;
    std::optional<GridSpec> grid;
    std::vector<double> tau;
    std::optional<UnitSystem> units;
    std::string out;
    bool split = false;
    bool with_oracle = false;
    std::uint64_t seed = 0;
    // classify inputs
    std::optional<double> mass_kg;
    std::optional<double> velocity_ms;
    std::optional<double> sigma_x_m;
    // completeness inputs
    double q_at = 0.0;
    double q_prime = 0.0;
    double test_width = 1.0;
    std::optional<double> radius;
    int n_radial = 48;
    // verify inputs
    std::string check;
    double tau0 = 0.0;
    double tau1 = 1.0;
    int n_trunc = 40;
};

inline complexd json_complex(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw invalid_input(where + " must be a [re, im] pair");
    }
    return complexd(j[0].get<double>(), j[1].get<double>());
}

/// Merge a JSON config file into config. CLI flags are applied afterwards and
/// therefore win.
inline void apply_config_json(RunConfig& config, const nlohmann::json& j) {
    if (!j.is_object()) {
        throw invalid_input("config must be a JSON object");
    }
    if (j.contains("family")) {
        const auto& fam = j.at("family");
        if (fam.contains("sigma_q")) {
            config.sigma_q = fam.at("sigma_q").get<double>();
        } else if (fam.contains("c1") && fam.contains("c2")) {
            config.c1 = json_complex(fam.at("c1"), "family.c1");
            config.c2 = json_complex(fam.at("c2"), "family.c2");
        } else {
            throw invalid_input("family needs sigma_q or c1+c2");
        }
    }
    if (j.contains("z")) config.z = json_complex(j.at("z"), "z");
    if (j.contains("q0")) config.q0 = j.at("q0").get<double>();
    if (j.contains("p")) config.p = j.at("p").get<double>();
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (g.is_string()) {
            config.grid = parse_grid_spec(g.get<std::string>());
        } else {
            config.grid = GridSpec{g.at("q_min").get<double>(), g.at("q_max").get<double>(),
                                   g.at("n_points").get<int>()};
        }
    }
    if (j.contains("tau")) {
        config.tau.clear();
        if (j.at("tau").is_array()) {
            for (const auto& t : j.at("tau")) config.tau.push_back(t.get<double>());
        } else {
            config.tau.push_back(j.at("tau").get<double>());
        }
    }
    if (j.contains("units")) {
        const auto& u = j.at("units");
        config.units = UnitSystem(u.at("mass_kg").get<double>(),
                                  u.at("hbar_Js").get<double>(),
                                  u.at("length_m").get<double>());
    }
    if (j.contains("out")) config.out = j.at("out").get<std::string>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("split")) config.split = j.at("split").get<bool>();
    if (j.contains("with_oracle")) config.with_oracle = j.at("with_oracle").get<bool>();
    if (j.contains("mass_kg")) config.mass_kg = j.at("mass_kg").get<double>();
    if (j.contains("velocity_ms")) config.velocity_ms = j.at("velocity_ms").get<double>();
    if (j.contains("sigma_x_m")) config.sigma_x_m = j.at("sigma_x_m").get<double>();
    if (j.contains("test_width")) config.test_width = j.at("test_width").get<double>();
    if (j.contains("radius")) config.radius = j.at("radius").get<double>();
    if (j.contains("n_radial")) config.n_radial = j.at("n_radial").get<int>();
    if (j.contains("n_trunc")) config.n_trunc = j.at("n_trunc").get<int>();
}

/// Family from config; sigma_q wins over raw constants when both are present.
inline FamilySpec resolve_family(const RunConfig& config) {
    if (config.sigma_q) {
        return make_cs_family(*config.sigma_q);
    }
    if (config.c1 && config.c2) {
        return make_generalized(*config.c1, *config.c2);
    }
    throw invalid_input("no family given: need --sigma-q or --c1/--c2 (or config file)");
}

/// Label from config. When both z and (q0, p) are given they must agree.
inline CSLabel resolve_label(const RunConfig& config, const FamilySpec& fam) {
    const bool has_initial = config.q0.has_value() || config.p.has_value();
    std::optional<CSLabel> from_initial;
    if (has_initial) {
        const double q0 = config.q0.value_or(0.0);
        const double p = config.p.value_or(0.0);
        from_initial = z_from_initial(q0, p, as_generalized(fam));
    }
    if (config.z && from_initial) {
        const double scale = 1.0 + std::abs(*config.z);
        if (std::abs(*config.z - from_initial->z) > 1e-9 * scale) {
            throw invalid_input("label given as both z and (q0, p) but they disagree");
        }
        return CSLabel{*config.z};
    }
    if (config.z) return CSLabel{*config.z};
    if (from_initial) return *from_initial;
    return CSLabel{complexd(0.0, 0.0)};
}

inline nlohmann::json family_json(const FamilySpec& fam) {
    nlohmann::json j;
    if (const auto* cs = std::get_if<CSFamily>(&fam)) {
        j["sigma_q"] = cs->sigma_q();
    } else {
        const auto& gen = std::get<GeneralizedFamily>(fam);
        j["c1"] = {gen.c1().real(), gen.c1().imag()};
        j["c2"] = {gen.c2().real(), gen.c2().imag()};
    }
    return j;
}

struct FieldRow {
    double q;
    complexd value;
    double rho;
};

/// Closed-form field samples for one tau on inclusive linspace points.
inline std::vector<FieldRow> field_rows(const FamilySpec& fam, const CSLabel& label,
                                        double tau, const std::vector<double>& qs) {
    std::vector<FieldRow> rows;
    rows.reserve(qs.size());
    for (const double q : qs) {
        FieldRow row{};
        row.q = q;
        if (const auto* cs = std::get_if<CSFamily>(&fam)) {
            row.value = eval_cs(q, tau, label, *cs);
            row.rho = density(q, tau, label, *cs);
        } else {
            const auto& gen = std::get<GeneralizedFamily>(fam);
            row.value = eval_generalized_cs(q, tau, label, gen);
            row.rho = density(q, tau, label, gen);
        }
        rows.push_back(row);
    }
    return rows;
}

inline void write_field_csv(std::ostream& os, const std::vector<FieldRow>& rows) {
    os << "q,re,im,density\n";
    for (const auto& row : rows) {
        os << format_double(row.q) << ',' << format_double(row.value.real()) << ','
           << format_double(row.value.imag()) << ',' << format_double(row.rho) << '\n';
    }
}

inline void write_field_csv_long(std::ostream& os, const std::vector<double>& taus,
                                 const std::vector<std::vector<FieldRow>>& per_tau) {
    os << "tau,q,re,im,density\n";
    for (std::size_t t = 0; t < taus.size(); ++t) {
        for (const auto& row : per_tau[t]) {
            os << format_double(taus[t]) << ',' << format_double(row.q) << ','
               << format_double(row.value.real()) << ',' << format_double(row.value.imag())
               << ',' << format_double(row.rho) << '\n';
        }
    }
}

/// Sidecar metadata written next to field CSV output.
inline nlohmann::json field_sidecar(const FamilySpec& fam, const CSLabel& label,
                                    const std::vector<double>& taus, const GridSpec& grid) {
    nlohmann::json j;
    j["tau"] = taus;
    j["family"] = family_json(fam);
    j["z"] = {label.z.real(), label.z.imag()};
    j["grid"] = {{"q_min", grid.q_min}, {"q_max", grid.q_max}, {"n_points", grid.count}};
    return j;
}

inline nlohmann::json residual_json(const ResidualReport& report) {
    return {{"max_abs_residual", report.max_abs_residual},
            {"rel_residual", report.rel_residual},
            {"grid_spacing", report.grid_spacing},
            {"dt", report.dt}};
}

inline nlohmann::json classify_json(const DimensionalPacket& packet,
                                    const SemiclassicalityReport& report) {
    nlohmann::json j;
    j["mass_kg"] = packet.units.mass_kg();
    j["p_x_kgms"] = packet.p_x;
    j["sigma_x_m"] = packet.sigma_x;
    j["bound_m"] = report.bound;
    if (std::isfinite(report.wavelength)) {
        j["wavelength_m"] = report.wavelength;
        j["ratio"] = report.ratio;
    } else {
        j["wavelength_m"] = "inf";
        j["ratio"] = "inf";
    }
    j["verdict"] = to_string(report.verdict);
    return j;
}

}  // namespace fpcs
