#ifndef CASIFRIC_TOOLS_CLI_COMMANDS_HPP
#define CASIFRIC_TOOLS_CLI_COMMANDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "casifric/casifric.hpp"
#include "cli_config.hpp"

namespace casifric::cli {

inline constexpr long long kMaxGridPoints = 1000000;
inline constexpr double kVerifyGate = 1e-8;

// ---------------------------------------------------------------------------
// Shared pieces
// ---------------------------------------------------------------------------

struct ForceRow {
    double axis_value = 0.0;
    std::string unit;
    std::optional<double> radiation;
    std::optional<double> induced;
    std::string dominant;
    std::vector<std::string> warnings;
};

inline nlohmann::json metadata(const RunConfig& c) {
    nlohmann::json echo = nlohmann::json::object();
    for (const auto& [k, v] : c.echo) echo[k] = v;
    return {{"version", std::string(kVersion)}, {"config_echo", echo}, {"seed", c.seed}};
}

inline std::string short_number(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

inline double length_out(const RunConfig& c, double cm) { return c.gaussian ? cm : cm * 1e-2; }
inline const char* length_unit(const RunConfig& c) { return c.gaussian ? "cm" : "m"; }
inline double velocity_out(const RunConfig& c, double cm_s) { return c.gaussian ? cm_s : cm_s * 1e-2; }
inline const char* velocity_unit(const RunConfig& c) { return c.gaussian ? "cm/s" : "m/s"; }

inline Quantity force_out(const RunConfig& c, const ForceResult& r) { return c.gaussian ? r.force : r.si(); }

inline Geometry resolve_geometry(const RunConfig& c, const DrudeMetal& metal, std::optional<double> z0,
                                 std::optional<double> d) {
    if (z0 && d) throw ConfigurationError("give exactly one geometry: --z0 or --d, not both");
    if (z0) return ParticleHalfspace{*z0};
    if (!d) throw ConfigurationError("give exactly one geometry: --z0 (particle) or --d (plate-plate)");
    if (!c.rho1) throw ConfigurationError("plate-plate geometry needs --rho1");
    const auto rho2 = c.rho2 ? c.rho2 : metal.number_density();
    if (!rho2) throw ConfigurationError("plate-plate geometry needs --rho2 or a metal number density");
    return PlatePlate{*d, *c.rho1, *rho2};
}

inline FrictionScenario make_scenario(const RunConfig& c, const OscillatorParticle& p, const DrudeMetal& m,
                                      Geometry g, double v, Mechanism mech) {
    FrictionScenario s{g, v, mech, p, m, c.policy()};
    if (const auto* pp = std::get_if<PlatePlate>(&g)) s.metal = m.with_number_density(pp->rho2);
    s.d1_convention = c.d1_convention;
    if (c.d1_reference) s.d1_reference_gap = *c.d1_reference;
    return s;
}

inline ForceRow evaluate_row(const RunConfig& c, const OscillatorParticle& p, const DrudeMetal& m, Geometry g,
                             double v, double axis_value) {
    ForceRow row;
    row.axis_value = axis_value;
    for (Mechanism mech : mechanisms(c.mechanism)) {
        const auto r = friction_force(make_scenario(c, p, m, g, v, mech));
        const auto f = force_out(c, r);
        row.unit = std::string(unit_symbol(f.unit));
        (mech == Mechanism::radiation_reaction ? row.radiation : row.induced) = f.value;
        for (const auto& w : r.warnings) row.warnings.push_back(std::string(to_string(mech)) + ": " + w);
    }
    if (row.radiation && row.induced) {
        const double a = std::abs(*row.radiation), b = std::abs(*row.induced);
        row.dominant = a > b ? "radiation_reaction" : b > a ? "induced_image" : "none";
    }
    return row;
}

inline void write_force_csv(std::ostream& out, const std::vector<ForceRow>& rows) {
    out << "axis_value,unit,F_radiation_N,F_induced_N,dominant_mechanism\n";
    for (const auto& r : rows) {
        out << format_double(r.axis_value) << ',' << r.unit << ','
            << (r.radiation ? format_double(*r.radiation) : "") << ','
            << (r.induced ? format_double(*r.induced) : "") << ',' << r.dominant << '\n';
    }
}

inline void write_force_json(std::ostream& out, const RunConfig& c, const std::vector<ForceRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"axis_value", r.axis_value},
                       {"unit", r.unit},
                       {"F_radiation_N", r.radiation ? nlohmann::json(*r.radiation) : nlohmann::json()},
                       {"F_induced_N", r.induced ? nlohmann::json(*r.induced) : nlohmann::json()},
                       {"dominant_mechanism", r.dominant},
                       {"warnings", r.warnings}});
    }
    out << nlohmann::json{{"metadata", metadata(c)}, {"rows", arr}}.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// force
// ---------------------------------------------------------------------------

inline int cmd_force(const RunConfig& c, std::ostream& out) {
    const auto db = resolve_db(c);
    const auto p = resolve_particle(c);
    const auto m = resolve_metal(c, db);
    const auto g = resolve_geometry(c, m, c.z0, c.d);
    const bool particle = std::holds_alternative<ParticleHalfspace>(g);
    const double gap = particle ? std::get<ParticleHalfspace>(g).z0 : std::get<PlatePlate>(g).d;
    const auto row = evaluate_row(c, p, m, g, c.velocity, length_out(c, gap));

    if (c.format == OutputFormat::csv) {
        write_force_csv(out, {row});
        return kExitOk;
    }
    if (c.format == OutputFormat::json) {
        write_force_json(out, c, {row});
        return kExitOk;
    }

    out << "particle   " << p.label << "  alpha0 = " << short_number(p.alpha0) << " cm^3  omega0 = "
        << short_number(p.omega0) << " rad/s\n";
    out << "metal      " << m.label() << "\n";
    out << "geometry   " << (particle ? "particle-halfspace  z0 = " : "plate-plate  d = ")
        << short_number(length_out(c, gap)) << ' ' << length_unit(c) << "\n";
    out << "velocity   " << short_number(velocity_out(c, c.velocity)) << ' ' << velocity_unit(c) << "\n";
    for (Mechanism mech : mechanisms(c.mechanism)) {
        const auto e = exponents_for(particle, mech);
        const auto& v = mech == Mechanism::radiation_reaction ? row.radiation : row.induced;
        out << std::left << std::setw(20) << to_string(mech) << " F = " << format_double(*v) << ' ' << row.unit
            << "   (v^" << e.velocity_power << ", " << (particle ? "z0" : "d") << "^-" << e.gap_power << ")\n";
    }
    if (!row.dominant.empty()) {
        out << "dominant   " << row.dominant << "\n";
        if (particle) {
            const auto x = crossover_velocity(p, m, gap, c.policy());
            out << "crossover  v* = " << short_number(velocity_out(c, x.velocity.value)) << ' '
                << velocity_unit(c) << ": " << x.verdict << "\n";
        }
    }
    for (const auto& w : row.warnings) out << "warning: " << w << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

inline int cmd_sweep(const RunConfig& c, std::ostream& out) {
    if (!c.from || !c.to) throw ConfigurationError("sweep needs --from and --to");
    if (c.points < 1) throw ConfigurationError("sweep needs --points >= 1");
    if (c.points > kMaxGridPoints) throw ConfigurationError("sweep grid exceeds 1e6 points");
    if (!(*c.from > 0.0 && *c.to > 0.0)) throw DomainError("log sweep limits must be > 0");

    const auto db = resolve_db(c);
    const auto p = resolve_particle(c);
    const auto m = resolve_metal(c, db);

    std::vector<double> grid(static_cast<std::size_t>(c.points));
    for (long long i = 0; i < c.points; ++i) {
        const double t = c.points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(c.points - 1);
        grid[static_cast<std::size_t>(i)] = *c.from * std::pow(*c.to / *c.from, t);
    }
    if (c.points > 1) grid.back() = *c.to;

    std::vector<ForceRow> rows;
    rows.reserve(grid.size());
    for (double x : grid) {
        switch (c.axis) {
            case SweepAxis::v:
                rows.push_back(evaluate_row(c, p, m, resolve_geometry(c, m, c.z0, c.d), x, velocity_out(c, x)));
                break;
            case SweepAxis::z0:
                if (c.d) throw ConfigurationError("a z0 sweep cannot also take --d");
                rows.push_back(evaluate_row(c, p, m, ParticleHalfspace{x}, c.velocity, length_out(c, x)));
                break;
            case SweepAxis::d:
                if (c.z0) throw ConfigurationError("a d sweep cannot also take --z0");
                rows.push_back(evaluate_row(c, p, m, resolve_geometry(c, m, std::nullopt, x), c.velocity,
                                            length_out(c, x)));
                break;
        }
    }

    if (c.format == OutputFormat::json) {
        write_force_json(out, c, rows);
    } else if (c.format == OutputFormat::csv) {
        write_force_csv(out, rows);
    } else {
        const char* axis_unit = c.axis == SweepAxis::v ? velocity_unit(c) : length_unit(c);
        out << std::left << std::setw(26) << (std::string("axis [") + axis_unit + "]") << std::setw(26)
            << "radiation_reaction" << std::setw(26) << "induced_image" << "dominant\n";
        for (const auto& r : rows) {
            out << std::setw(26) << format_double(r.axis_value) << std::setw(26)
                << (r.radiation ? format_double(*r.radiation) : "-") << std::setw(26)
                << (r.induced ? format_double(*r.induced) : "-") << r.dominant << "\n";
        }
        if (!rows.empty()) out << "force unit: " << rows.front().unit << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyRow {
    int id = 0;
    std::string geometry;
    Mechanism mechanism = Mechanism::radiation_reaction;
    double velocity = 0.0;  // cm/s
    double gap = 0.0;       // cm
    double alpha0 = 0.0;    // cm^3
    double closed = 0.0;
    double oracle = 0.0;
    double relative = 0.0;
    bool pass = false;
    std::string error;
};

struct MomentCheck {
    std::string name;
    double closed;
    double quadrature;
    double relative;
    bool pass;
};

// Log-uniform draw from 53 random bits, identical on every standard library.
inline double draw_log_uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo * std::pow(hi / lo, u);
}

inline std::vector<MomentCheck> moment_checks() {
    QuadratureSpec spec;
    spec.relative_tolerance = 1e-13;
    const double pi = std::numbers::pi;
    auto check = [](std::string name, double closed, double quad) {
        const double rel = std::abs(closed - quad) / std::abs(quad);
        return MomentCheck{std::move(name), closed, quad, rel, rel <= 1e-10};
    };
    std::vector<MomentCheck> out;
    for (auto [p, r] : {std::pair{3, 1}, std::pair{1, 1}}) {
        const double q = integrate([=](double x) { return std::pow(x, p) * std::pow(1 - x, r); }, 0.0, 1.0, spec).value;
        out.push_back(check("overlap(" + std::to_string(p) + "," + std::to_string(r) + ")",
                            overlap_integral_coefficient(p, r), q));
    }
    const double ang =
        integrate([](double t) { return std::pow(std::cos(t), 6); }, 0.0, 2 * pi, spec).value / (2 * pi);
    out.push_back(check("angular(6)", angular_moment(6), ang));
    const double rad = integrate([pi](double q) { return q == 0.0 ? 0.0 : 2 * pi * std::exp(7 * std::log(q) - 2 * q); },
                                 0.0, std::numeric_limits<double>::infinity(), spec)
                           .value;
    out.push_back(check("radial(6)*angular(6) at d=1", 5.0 * 315.0 * pi / 128.0, rad * ang));
    return out;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
    if (c.samples < 1) throw ConfigurationError("--samples must be >= 1");
    const auto db = resolve_db(c);
    const auto base_particle = resolve_particle(c);
    const auto metal = resolve_metal(c, db);
    // Relative agreement does not depend on the densities; use nominal ones when absent.
    const double rho_metal = metal.number_density().value_or(1e22);
    const auto dense = metal.with_number_density(rho_metal);
    const double rho1 = c.rho1.value_or(1e21);

    OracleOptions opt;
    opt.spec = c.quadrature;
    std::mt19937_64 rng(c.seed);
    std::vector<VerifyRow> rows;
    int id = 0;
    for (bool particle : {true, false}) {
        for (Mechanism mech : {Mechanism::radiation_reaction, Mechanism::induced_image}) {
            for (int i = 0; i < c.samples; ++i) {
                VerifyRow row;
                row.id = id++;
                row.geometry = particle ? "particle_halfspace" : "plate_plate";
                row.mechanism = mech;
                row.alpha0 = draw_log_uniform(rng, 1e-24, 1e-22);
                row.velocity = draw_log_uniform(rng, 1.0, 1e6);
                row.gap = draw_log_uniform(rng, 1e-7, 1e-4);
                const OscillatorParticle p{row.alpha0, base_particle.omega0, base_particle.label};
                const Geometry g = particle ? Geometry{ParticleHalfspace{row.gap}}
                                            : Geometry{PlatePlate{row.gap, rho1, rho_metal}};
                auto s = make_scenario(c, p, dense, g, row.velocity, mech);
                s.policy = ValidityPolicy::lenient();
                if (s.d1_convention == D1Convention::fixed_reference && !c.d1_reference) s.d1_reference_gap = row.gap;
                try {
                    row.closed = friction_force(s).force.value * (1.0 + c.perturb);
                    row.oracle = force_numeric(s, opt).force.value;
                    row.relative = std::abs(row.closed - row.oracle) / std::abs(row.oracle);
                    row.pass = row.relative < kVerifyGate;
                } catch (const Error& e) {
                    row.error = e.what();
                    row.pass = false;
                }
                rows.push_back(row);
            }
        }
    }
    const auto moments = moment_checks();
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    for (const auto& m : moments) all = all && m.pass;

    if (c.format == OutputFormat::csv) {
        out << "id,geometry,mechanism,velocity_cm_s,gap_cm,alpha0_cm3,closed_form,oracle,relative_difference,pass,error\n";
        for (const auto& r : rows) {
            out << r.id << ',' << r.geometry << ',' << to_string(r.mechanism) << ',' << format_double(r.velocity)
                << ',' << format_double(r.gap) << ',' << format_double(r.alpha0) << ',' << format_double(r.closed)
                << ',' << format_double(r.oracle) << ',' << format_double(r.relative) << ','
                << (r.pass ? "true" : "false") << ',' << '"' << r.error << '"' << '\n';
        }
        for (const auto& m : moments) {
            out << "moment," << m.name << ",,,,," << format_double(m.closed) << ',' << format_double(m.quadrature)
                << ',' << format_double(m.relative) << ',' << (m.pass ? "true" : "false") << ",\n";
        }
    } else if (c.format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            arr.push_back({{"id", r.id}, {"geometry", r.geometry}, {"mechanism", to_string(r.mechanism)},
                           {"velocity_cm_s", r.velocity}, {"gap_cm", r.gap}, {"alpha0_cm3", r.alpha0},
                           {"closed_form", r.closed}, {"oracle", r.oracle}, {"relative_difference", r.relative},
                           {"pass", r.pass}, {"error", r.error}});
        }
        nlohmann::json mom = nlohmann::json::array();
        for (const auto& m : moments) {
            mom.push_back({{"name", m.name}, {"closed_form", m.closed}, {"quadrature", m.quadrature},
                           {"relative_difference", m.relative}, {"pass", m.pass}});
        }
        out << nlohmann::json{{"metadata", metadata(c)}, {"rows", arr}, {"moments", mom}, {"pass", all}}.dump(2)
            << '\n';
    } else {
        out << "closed form vs oracle, gate " << short_number(kVerifyGate) << ", seed " << c.seed << "\n";
        for (bool particle : {true, false}) {
            for (Mechanism mech : {Mechanism::radiation_reaction, Mechanism::induced_image}) {
                const std::string geom = particle ? "particle_halfspace" : "plate_plate";
                int n = 0, ok = 0;
                double worst = 0.0;
                for (const auto& r : rows) {
                    if (r.geometry != geom || r.mechanism != mech) continue;
                    ++n;
                    ok += r.pass;
                    worst = std::max(worst, r.error.empty() ? r.relative : INFINITY);
                }
                out << "  " << std::left << std::setw(20) << geom << std::setw(20) << to_string(mech) << ok << "/"
                    << n << " pass, max rel diff " << short_number(worst) << "\n";
            }
        }
        for (const auto& m : moments) {
            out << "  moment " << std::left << std::setw(32) << m.name << "rel diff " << short_number(m.relative)
                << (m.pass ? "  pass" : "  FAIL") << "\n";
        }
        for (const auto& r : rows) {
            if (!r.error.empty()) out << "  case " << r.id << ": " << r.error << "\n";
        }
        out << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? kExitOk : kExitGateFailed;
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

struct ReproduceRow {
    std::string name;
    double computed;
    double lo;
    double hi;
    std::string unit;
    std::string note;
    bool pass() const { return computed >= lo && computed <= hi; }
};

inline ReproduceRow within(std::string name, double computed, double expected, double rel, std::string unit,
                           std::string note = {}) {
    const double a = expected * (1 - rel), b = expected * (1 + rel);
    return {std::move(name), computed, std::min(a, b), std::max(a, b), std::move(unit), std::move(note)};
}

inline std::vector<ReproduceRow> reproduce_rows(const MaterialDb& db) {
    const double v = 3.4e4, z0 = 1e-6;
    const auto rb = builtin_particles().at("rubidium");
    const OscillatorParticle p{rb.alpha0_cm3, rb.omega0_rad_s, "rubidium"};
    const auto gold = db.get("gold");
    const auto si = db.get("silicon");
    const auto lenient = ValidityPolicy::lenient();
    auto force = [&](const DrudeMetal& m, Mechanism mech, double vel) {
        return friction_force(FrictionScenario{ParticleHalfspace{z0}, vel, mech, p, m, lenient}).si().value;
    };

    std::vector<ReproduceRow> rows;
    rows.push_back(within("alpha0 5.26e-39 F m^2 in A^3",
                          convert_polarizability({5.26e-39, Unit::si_polarizability}, Unit::gaussian_polarizability)
                                  .value / 1e-24,
                          47.3, 0.005, "A^3"));
    rows.push_back(within("alpha0 from 0.0794 spectroscopic coefficient",
                          atomic_polarizability_from_spectroscopic(0.0794).value, 5.26e-39, 0.005, "F m^2"));
    rows.push_back(within("omega_p from 9.0 eV", energy_to_angular_frequency({9.0, Unit::electronvolt}).value,
                          1.36e16, 0.01, "rad/s", "quoted value is rounded"));
    rows.push_back(within("nu from 35 meV", energy_to_angular_frequency({0.035, Unit::electronvolt}).value,
                          5.32e13, 0.005, "rad/s"));
    rows.push_back(within("gold coefficient A",
                          convert({closed_form::radiation_coefficient(p.alpha0, gold.damping_ratio(), v),
                                   Unit::dyne_centimeter9},
                                  Unit::newton_meter9)
                              .value,
                          1.19e-122, 0.01, "N m^9"));
    rows.push_back(within("gold radiation force, z0 = 10 nm", force(gold, Mechanism::radiation_reaction, v),
                          -1.19e-50, 0.01, "N"));
    rows.push_back(within("silicon radiation force, z0 = 10 nm", force(si, Mechanism::radiation_reaction, v),
                          -2.3e-40, 0.05, "N"));
    const double fi = force(si, Mechanism::induced_image, v);
    rows.push_back(within("silicon induced force, z0 = 10 nm", fi, -5.0e-21, 0.05, "N"));
    rows.push_back({"induced force / -1.3e-20 N", fi / -1.3e-20, 0.34, 0.42, "1", "brackets 3/8"});

    const auto x = crossover_velocity(p, gold, z0, lenient);
    rows.push_back(within("crossover v*, gold, z0 = 10 nm", x.velocity.value * 1e-2, 1.116028e7, 1e-5, "m/s",
                          x.verdict));
    const double at_vstar = force(gold, Mechanism::radiation_reaction, x.velocity.value) /
                            force(gold, Mechanism::induced_image, x.velocity.value);
    rows.push_back(within("|F_rad/F_ind| at v*", at_vstar, 1.0, 1e-10, "1"));

    ForceResult unit_force;
    unit_force.force = {-1.0, Unit::pascal};
    const auto lit = literature_comparison(unit_force);
    rows.push_back({"Volokitin-Persson / ours", lit.volokitin_persson / lit.ours, 0.5, 0.5, "1", {}});
    rows.push_back({"Pendry / ours", lit.pendry / lit.ours, 1.0 / 12.0, 1.0 / 12.0, "1", {}});
    rows.push_back({"Barton / ours", lit.barton / lit.ours, 1.0, 1.0, "1", lit.note});
    return rows;
}

inline int cmd_reproduce(const RunConfig& c, std::ostream& out) {
    const auto rows = reproduce_rows(resolve_db(c));
    bool all = true;
    for (const auto& r : rows) all = all && r.pass();

    if (c.format == OutputFormat::csv) {
        out << "quantity,computed,lower,upper,unit,pass,note\n";
        for (const auto& r : rows) {
            out << '"' << r.name << "\"," << format_double(r.computed) << ',' << format_double(r.lo) << ','
                << format_double(r.hi) << ',' << r.unit << ',' << (r.pass() ? "true" : "false") << ",\"" << r.note
                << "\"\n";
        }
    } else if (c.format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            arr.push_back({{"quantity", r.name}, {"computed", r.computed}, {"lower", r.lo}, {"upper", r.hi},
                           {"unit", r.unit}, {"pass", r.pass()}, {"note", r.note}});
        }
        out << nlohmann::json{{"metadata", metadata(c)}, {"rows", arr}, {"pass", all}}.dump(2) << '\n';
    } else {
        for (const auto& r : rows) {
            out << (r.pass() ? "[PASS] " : "[FAIL] ") << std::left << std::setw(46) << r.name << std::setw(24)
                << format_double(r.computed) << r.unit;
            if (!r.note.empty()) out << "  (" << r.note << ")";
            out << "\n";
        }
        out << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? kExitOk : kExitGateFailed;
}

// ---------------------------------------------------------------------------
// crossover
// ---------------------------------------------------------------------------

inline int cmd_crossover(const RunConfig& c, std::ostream& out) {
    if (!c.z0) throw ConfigurationError("crossover needs --z0");
    const auto p = resolve_particle(c);
    const auto m = resolve_metal(c, resolve_db(c));
    const auto x = crossover_velocity(p, m, *c.z0, c.policy());
    const double vs = velocity_out(c, x.velocity.value);
    if (c.format == OutputFormat::csv) {
        out << "axis_value,unit,v_star,nonrelativistic,verdict\n"
            << format_double(length_out(c, *c.z0)) << ',' << velocity_unit(c) << ',' << format_double(vs) << ','
            << (x.nonrelativistic ? "true" : "false") << ",\"" << x.verdict << "\"\n";
    } else if (c.format == OutputFormat::json) {
        out << nlohmann::json{{"metadata", metadata(c)},
                              {"z0", length_out(c, *c.z0)},
                              {"v_star", vs},
                              {"unit", velocity_unit(c)},
                              {"nonrelativistic", x.nonrelativistic},
                              {"verdict", x.verdict}}
                   .dump(2)
            << '\n';
    } else {
        out << "v* = " << format_double(vs) << ' ' << velocity_unit(c)
            << (x.nonrelativistic ? "" : "  (beyond the nonrelativistic guard)") << "\n"
            << x.verdict << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// materials
// ---------------------------------------------------------------------------

inline int cmd_materials(const RunConfig& c, const std::optional<std::string>& label, std::ostream& out) {
    const auto db = resolve_db(c);
    std::vector<DrudeMetal> selected;
    if (label) selected.push_back(db.get(*label));
    else selected = db.metals();

    if (c.format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : selected) arr.push_back(to_json(m));
        out << (label ? arr.front() : arr).dump(2) << '\n';
        return kExitOk;
    }
    auto opt = [](std::optional<double> x) { return x ? format_double(*x) : std::string(); };
    if (c.format == OutputFormat::csv) {
        out << "label,omega_p_rad_s,nu_rad_s,resistivity_ohm_m,number_density_cm3\n";
        for (const auto& m : selected) {
            out << m.label() << ','
                << (m.has_drude_parameters() ? format_double(m.omega_p()) : "") << ','
                << (m.has_drude_parameters() ? format_double(m.nu()) : "") << ',' << opt(m.resistivity()) << ','
                << opt(m.number_density()) << '\n';
        }
        return kExitOk;
    }
    if (!label) {
        for (const auto& m : selected) out << m.label() << "\n";
        return kExitOk;
    }
    const auto& m = selected.front();
    out << "label              " << m.label() << "\n";
    if (m.has_drude_parameters()) {
        out << "omega_p            " << format_double(m.omega_p()) << " rad/s\n";
        out << "nu                 " << format_double(m.nu()) << " rad/s\n";
    }
    if (m.resistivity()) out << "resistivity        " << format_double(*m.resistivity()) << " ohm m\n";
    out << "nu/omega_p^2       " << format_double(m.damping_ratio()) << " s\n";
    if (m.number_density()) out << "number density     " << format_double(*m.number_density()) << " cm^-3\n";
    return kExitOk;
}

}  // namespace casifric::cli

#endif
