#ifndef CASIFRIC_TOOLS_CLI_APP_HPP
#define CASIFRIC_TOOLS_CLI_APP_HPP

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace casifric::cli {

namespace detail {

inline const std::map<std::string, std::string>& setting_help() {
    static const std::map<std::string, std::string> help{
        {"materials", "material database JSON (default: $CASIFRIC_MATERIALS, then bundled)"},
        {"particle", "built-in particle label (rubidium)"},
        {"alpha0", "static polarizability, e.g. 47.3A3 or 5.26e-39 (F m^2)"},
        {"omega0", "particle resonance, e.g. 1.59eV or 2.4e15 (rad/s)"},
        {"metal", "material label from the database"},
        {"number-density", "metal atom density, e.g. 5.9e22cm-3"},
        {"v", "velocity, e.g. 340m/s"},
        {"z0", "particle-surface distance, e.g. 10nm"},
        {"d", "plate gap, e.g. 10nm"},
        {"rho1", "dilute plate density, e.g. 1e21cm-3"},
        {"rho2", "metal plate density (default: metal number density)"},
        {"mechanism", "radiation, induced or both"},
        {"d1-convention", "plate D1 treatment: constant, integrated or fixed"},
        {"d1-reference", "distance for the fixed D1 convention"},
        {"format", "human, csv or json"},
        {"strictness", "strict or warn"},
        {"rtol", "quadrature relative tolerance"},
        {"max-subdivisions", "quadrature subdivision budget"},
        {"scheme", "gauss_kronrod or double_exponential"},
        {"axis", "sweep axis: v, z0 or d"},
        {"from", "first grid value (with unit)"},
        {"to", "last grid value (with unit)"},
        {"points", "number of log-spaced grid points"},
        {"seed", "random seed for the verification sweep"},
        {"samples", "scenarios per mechanism and geometry"},
        {"perturb", "relative perturbation applied to closed forms (gate self-test)"},
    };
    return help;
}

struct Bound {
    CLI::App* app;
    std::vector<std::pair<std::string, CLI::Option*>> options;
    CLI::Option* gaussian = nullptr;
    CLI::Option* config = nullptr;
};

}  // namespace detail

/// Parses argv-style arguments (without the program name), runs one
/// subcommand and returns its exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Zero-temperature Casimir friction near Drude metals", "casifric"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::map<std::string, std::string> values;
    std::string config_path;
    bool gaussian = false;
    std::vector<detail::Bound> bound;

    const std::vector<std::string> common{"materials", "format", "strictness"};
    const std::vector<std::string> scenario{"particle", "alpha0", "omega0", "metal", "number-density", "v",
                                            "z0", "d", "rho1", "rho2", "mechanism", "d1-convention",
                                            "d1-reference", "rtol", "max-subdivisions", "scheme"};

    auto add = [&](CLI::App* sub, std::vector<std::vector<std::string>> groups) {
        detail::Bound b{sub, {}, nullptr, nullptr};
        for (const auto& g : groups) {
            for (const auto& key : g) b.options.emplace_back(key, sub->add_option("--" + key, values[key],
                                                                                   detail::setting_help().at(key)));
        }
        b.gaussian = sub->add_flag("--gaussian", gaussian, "report Gaussian-CGS instead of SI");
        b.config = sub->add_option("--config", config_path, "JSON file of settings; flags override it");
        bound.push_back(b);
        return sub;
    };

    add(app.add_subcommand("force", "single-point friction force"), {common, scenario});
    add(app.add_subcommand("sweep", "log-grid sweep over v, z0 or d"), {common, scenario, {"axis", "from", "to", "points"}});
    add(app.add_subcommand("verify", "closed forms against the quadrature oracle"),
        {common, {"particle", "alpha0", "omega0", "metal", "number-density", "rho1", "d1-convention",
                  "d1-reference", "rtol", "max-subdivisions", "scheme", "seed", "samples", "perturb"}});
    add(app.add_subcommand("reproduce", "reference numbers with pass/fail gates"), {common});
    add(app.add_subcommand("crossover", "velocity where the two mechanisms are equal"),
        {common, {"particle", "alpha0", "omega0", "metal", "z0"}});
    auto* materials = app.add_subcommand("materials", "inspect the material database");
    materials->require_subcommand(1);
    std::string show_label;
    add(materials->add_subcommand("list", "list material labels"), {{"materials", "format"}});
    auto* show = add(materials->add_subcommand("show", "show one material"), {{"materials", "format"}});
    show->add_option("label", show_label, "material label")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const detail::Bound* chosen = nullptr;
        for (const auto& b : bound)
            if (b.app->parsed()) chosen = &b;
        std::map<std::string, std::string> flags;
        for (const auto& [key, opt] : chosen->options)
            if (opt->count() > 0) flags[key] = values[key];
        if (chosen->gaussian->count() > 0) flags["gaussian"] = gaussian ? "true" : "false";
        const auto file = chosen->config->count() > 0 ? load_config_file(config_path)
                                                      : std::map<std::string, std::string>{};
        const RunConfig cfg = build_config(file, flags);

        const std::string name = chosen->app->get_name();
        if (name == "force") return cmd_force(cfg, out);
        if (name == "sweep") return cmd_sweep(cfg, out);
        if (name == "verify") return cmd_verify(cfg, out);
        if (name == "reproduce") return cmd_reproduce(cfg, out);
        if (name == "crossover") return cmd_crossover(cfg, out);
        if (name == "list") return cmd_materials(cfg, std::nullopt, out);
        if (name == "show") return cmd_materials(cfg, show_label, out);
        err << "error: unhandled subcommand " << name << "\n";
        return kExitUsage;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ConfigurationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace casifric::cli

#endif
