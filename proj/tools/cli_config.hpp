#ifndef CASIFRIC_TOOLS_CLI_CONFIG_HPP
#define CASIFRIC_TOOLS_CLI_CONFIG_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "casifric/casifric.hpp"

namespace casifric::cli {

inline constexpr std::string_view kVersion = "1.0.0";

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitNumerical = 4;

enum class OutputFormat { human, csv, json };
enum class MechanismChoice { radiation, induced, both };
enum class SweepAxis { v, z0, d };
enum class ValueKind { length, velocity, frequency, polarizability, resistivity, number_density, plain };

inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

// ---------------------------------------------------------------------------
// Unit-suffixed values. Bare numbers are SI. Results are in the library's
// internal units: cm, cm/s, rad/s, Gaussian cm^3, ohm m, cm^-3.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string normalize_suffix(std::string_view raw) {
    std::string s(raw);
    const std::pair<std::string_view, std::string_view> utf8[] = {
        {"\xC3\x85", "a"},      // Å
        {"\xE2\x84\xAB", "a"},  // Angstrom sign
        {"\xC2\xB3", "3"},      // ³
        {"\xC2\xB2", "2"},      // ²
        {"\xC2\xB7", ""},       // ·
        {"\xCE\xA9", "ohm"},    // Ω
        {"\xC2\xB5", "u"},      // µ
        {"\xCE\xBC", "u"},      // μ
        {"\xE2\x81\xBB", "-"},  // superscript minus
    };
    for (auto [from, to] : utf8) {
        for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos))
            s.replace(pos, from.size(), to);
    }
    std::string out;
    for (char c : s) {
        if (c == ' ' || c == '^' || c == '*' || c == '.' || c == '_') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

inline std::string_view kind_name(ValueKind k) {
    switch (k) {
        case ValueKind::length: return "length";
        case ValueKind::velocity: return "velocity";
        case ValueKind::frequency: return "frequency";
        case ValueKind::polarizability: return "polarizability";
        case ValueKind::resistivity: return "resistivity";
        case ValueKind::number_density: return "number density";
        case ValueKind::plain: return "number";
    }
    return "value";
}

}  // namespace detail

inline double parse_value(std::string_view text, ValueKind kind) {
    const std::string original(text);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || !std::isfinite(x))
        throw ConfigurationError("cannot parse " + std::string(detail::kind_name(kind)) + " '" + original + "'");
    const std::string unit = detail::normalize_suffix(std::string_view(ptr, text.data() + text.size() - ptr));
    auto bad_unit = [&]() -> double {
        throw UnitError("unknown " + std::string(detail::kind_name(kind)) + " unit '" + unit + "' in '" +
                        original + "'");
    };

    switch (kind) {
        case ValueKind::plain:
            return unit.empty() ? x : bad_unit();
        case ValueKind::length: {
            static const std::map<std::string, double, std::less<>> scale{
                {"", 1e2}, {"m", 1e2}, {"cm", 1.0}, {"mm", 1e-1}, {"um", 1e-4}, {"nm", 1e-7}, {"a", 1e-8}};
            auto it = scale.find(unit);
            return it != scale.end() ? x * it->second : bad_unit();
        }
        case ValueKind::velocity: {
            static const std::map<std::string, double, std::less<>> scale{
                {"", 1e2}, {"m/s", 1e2}, {"cm/s", 1.0}, {"km/s", 1e5}};
            auto it = scale.find(unit);
            return it != scale.end() ? x * it->second : bad_unit();
        }
        case ValueKind::frequency:
            if (unit.empty() || unit == "rad/s") return x;
            if (unit == "ev") return energy_to_angular_frequency({x, Unit::electronvolt}).value;
            if (unit == "mev") return energy_to_angular_frequency({x * 1e-3, Unit::electronvolt}).value;
            return bad_unit();
        case ValueKind::polarizability:
            if (unit.empty() || unit == "fm2")
                return convert_polarizability({x, Unit::si_polarizability}, Unit::gaussian_polarizability).value;
            if (unit == "a3") return x * 1e-24;
            if (unit == "cm3") return x;
            return bad_unit();
        case ValueKind::resistivity:
            if (unit.empty() || unit == "ohmm") return x;
            if (unit == "ohmcm") return x * 1e-2;
            return bad_unit();
        case ValueKind::number_density:
            if (unit.empty() || unit == "m-3" || unit == "/m3") return x * 1e-6;
            if (unit == "cm-3" || unit == "/cm3") return x;
            return bad_unit();
    }
    return bad_unit();
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

struct ParticleSpec {
    double alpha0_cm3;
    double omega0_rad_s;
};

// Rubidium ground state; omega0 is the D2 resonance.
inline const std::map<std::string, ParticleSpec, std::less<>>& builtin_particles() {
    static const std::map<std::string, ParticleSpec, std::less<>> table{
        {"rubidium", {47.3e-24, 2.4142e15}},
    };
    return table;
}

struct RunConfig {
    std::optional<std::string> materials_path;
    std::string particle = "rubidium";
    std::optional<double> alpha0;  // cm^3
    std::optional<double> omega0;  // rad/s
    std::string metal = "gold";
    std::optional<double> number_density;  // cm^-3

    double velocity = 3.4e4;  // cm/s
    std::optional<double> z0;  // cm
    std::optional<double> d;   // cm
    std::optional<double> rho1;
    std::optional<double> rho2;
    MechanismChoice mechanism = MechanismChoice::both;
    D1Convention d1_convention = D1Convention::constant_at_gap;
    std::optional<double> d1_reference;  // cm

    OutputFormat format = OutputFormat::human;
    Strictness strictness = Strictness::strict;
    bool gaussian = false;
    QuadratureSpec quadrature{};

    SweepAxis axis = SweepAxis::z0;
    std::optional<double> from;
    std::optional<double> to;
    long long points = 50;

    std::uint64_t seed = 20240611;
    int samples = 100;
    double perturb = 0.0;

    // Effective settings in flag form, echoed into JSON output.
    std::map<std::string, std::string> echo;

    ValidityPolicy policy() const {
        ValidityPolicy p;
        p.strictness = strictness;
        return p;
    }
};

namespace detail {

template <typename E>
E parse_enum(std::string_view key, std::string_view value, std::initializer_list<std::pair<std::string_view, E>> table) {
    for (auto [name, e] : table)
        if (name == value) return e;
    std::string names;
    for (auto [name, e] : table) names += (names.empty() ? "" : ", ") + std::string(name);
    throw ConfigurationError("--" + std::string(key) + " must be one of {" + names + "}, got '" +
                             std::string(value) + "'");
}

inline bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw ConfigurationError("--" + std::string(key) + " expects a boolean, got '" + std::string(v) + "'");
}

}  // namespace detail

/// Flag names accepted both on the command line and as config-file keys.
inline const std::vector<std::string>& setting_keys() {
    static const std::vector<std::string> keys{
        "materials", "particle", "alpha0", "omega0", "metal", "number-density", "v", "z0", "d",
        "rho1", "rho2", "mechanism", "d1-convention", "d1-reference", "format", "strictness",
        "gaussian", "rtol", "max-subdivisions", "scheme", "axis", "from", "to", "points", "seed",
        "samples", "perturb"};
    return keys;
}

inline void apply_setting(RunConfig& c, const std::string& key, const std::string& v) {
    using detail::parse_enum;
    if (key == "materials") c.materials_path = v;
    else if (key == "particle") c.particle = v;
    else if (key == "alpha0") c.alpha0 = parse_value(v, ValueKind::polarizability);
    else if (key == "omega0") c.omega0 = parse_value(v, ValueKind::frequency);
    else if (key == "metal") c.metal = v;
    else if (key == "number-density") c.number_density = parse_value(v, ValueKind::number_density);
    else if (key == "v") c.velocity = parse_value(v, ValueKind::velocity);
    else if (key == "z0") c.z0 = parse_value(v, ValueKind::length);
    else if (key == "d") c.d = parse_value(v, ValueKind::length);
    else if (key == "rho1") c.rho1 = parse_value(v, ValueKind::number_density);
    else if (key == "rho2") c.rho2 = parse_value(v, ValueKind::number_density);
    else if (key == "mechanism")
        c.mechanism = parse_enum<MechanismChoice>(key, v, {{"radiation", MechanismChoice::radiation},
                                                           {"induced", MechanismChoice::induced},
                                                           {"both", MechanismChoice::both}});
    else if (key == "d1-convention")
        c.d1_convention = parse_enum<D1Convention>(key, v, {{"constant", D1Convention::constant_at_gap},
                                                            {"integrated", D1Convention::integrated_varying},
                                                            {"fixed", D1Convention::fixed_reference}});
    else if (key == "d1-reference") c.d1_reference = parse_value(v, ValueKind::length);
    else if (key == "format")
        c.format = parse_enum<OutputFormat>(
            key, v, {{"human", OutputFormat::human}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}});
    else if (key == "strictness")
        c.strictness = parse_enum<Strictness>(key, v, {{"strict", Strictness::strict}, {"warn", Strictness::warn}});
    else if (key == "gaussian") c.gaussian = detail::parse_bool(key, v);
    else if (key == "rtol") c.quadrature.relative_tolerance = parse_value(v, ValueKind::plain);
    else if (key == "max-subdivisions") c.quadrature.max_subdivisions = static_cast<int>(parse_value(v, ValueKind::plain));
    else if (key == "scheme")
        c.quadrature.scheme = parse_enum<QuadratureScheme>(
            key, v, {{"gauss_kronrod", QuadratureScheme::gauss_kronrod},
                     {"double_exponential", QuadratureScheme::double_exponential}});
    else if (key == "axis")
        c.axis = parse_enum<SweepAxis>(key, v, {{"v", SweepAxis::v}, {"z0", SweepAxis::z0}, {"d", SweepAxis::d}});
    else if (key == "from") c.from = parse_value(v, c.axis == SweepAxis::v ? ValueKind::velocity : ValueKind::length);
    else if (key == "to") c.to = parse_value(v, c.axis == SweepAxis::v ? ValueKind::velocity : ValueKind::length);
    else if (key == "points") c.points = static_cast<long long>(parse_value(v, ValueKind::plain));
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_value(v, ValueKind::plain));
    else if (key == "samples") c.samples = static_cast<int>(parse_value(v, ValueKind::plain));
    else if (key == "perturb") c.perturb = parse_value(v, ValueKind::plain);
    else throw ConfigurationError("unknown setting '" + key + "'");
    c.echo[key] = v;
}

/// Reads a JSON object whose keys are flag names. Numbers are taken as SI.
inline std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigurationError("config file '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw ConfigurationError("config file '" + path + "' must hold a JSON object");
    std::map<std::string, std::string> out;
    const auto& keys = setting_keys();
    for (const auto& [k, v] : j.items()) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            throw ConfigurationError("config file '" + path + "': unknown key '" + k + "'");
        if (v.is_string()) out[k] = v.get<std::string>();
        else if (v.is_boolean()) out[k] = v.get<bool>() ? "true" : "false";
        else if (v.is_number_integer()) out[k] = std::to_string(v.get<long long>());
        else if (v.is_number()) out[k] = format_double(v.get<double>());
        else throw ConfigurationError("config file '" + path + "': key '" + k + "' must be a string, number or bool");
    }
    return out;
}

/// File settings first, then flags. "axis" goes first so that from/to
/// are read with the right unit kind.
inline RunConfig build_config(const std::map<std::string, std::string>& file,
                              const std::map<std::string, std::string>& flags) {
    std::map<std::string, std::string> merged = file;
    for (const auto& [k, v] : flags) merged[k] = v;
    RunConfig c;
    if (auto it = merged.find("axis"); it != merged.end()) apply_setting(c, it->first, it->second);
    for (const auto& [k, v] : merged)
        if (k != "axis") apply_setting(c, k, v);
    c.quadrature.validate();
    return c;
}

// ---------------------------------------------------------------------------
// Resolution against the material database
// ---------------------------------------------------------------------------

/// --materials, then $CASIFRIC_MATERIALS, then the bundled records.
inline MaterialDb resolve_db(const RunConfig& c) {
    if (c.materials_path) return MaterialDb::load(*c.materials_path);
    if (const char* env = std::getenv("CASIFRIC_MATERIALS"); env && *env) return MaterialDb::load(env);
    return MaterialDb::bundled();
}

inline OscillatorParticle resolve_particle(const RunConfig& c) {
    const auto& table = builtin_particles();
    auto it = table.find(c.particle);
    if (it == table.end() && !(c.alpha0 && c.omega0))
        throw ConfigurationError("unknown particle '" + c.particle + "'; give --alpha0 and --omega0");
    const double a0 = c.alpha0 ? *c.alpha0 : it->second.alpha0_cm3;
    const double w0 = c.omega0 ? *c.omega0 : it->second.omega0_rad_s;
    return {a0, w0, c.particle};
}

inline DrudeMetal resolve_metal(const RunConfig& c, const MaterialDb& db) {
    DrudeMetal m = db.get(c.metal);
    if (c.number_density) m = m.with_number_density(*c.number_density);
    return m;
}

inline std::vector<Mechanism> mechanisms(MechanismChoice m) {
    switch (m) {
        case MechanismChoice::radiation: return {Mechanism::radiation_reaction};
        case MechanismChoice::induced: return {Mechanism::induced_image};
        case MechanismChoice::both: return {Mechanism::radiation_reaction, Mechanism::induced_image};
    }
    return {};
}

}  // namespace casifric::cli

#endif
