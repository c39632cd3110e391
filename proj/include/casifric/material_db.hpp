#ifndef CASIFRIC_MATERIAL_DB_HPP
#define CASIFRIC_MATERIAL_DB_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "casifric/errors.hpp"
#include "casifric/materials.hpp"

namespace casifric {

// Shipped records. Gold by plasma frequency and damping, silicon by
// resistivity alone. No number densities: they cancel in every
// single-particle force.
inline constexpr std::string_view kBundledMaterials = R"json([
  {"label": "gold", "omega_p_rad_s": 1.36e16, "nu_rad_s": 5.32e13},
  {"label": "silicon", "resistivity_ohm_m": 640.0}
])json";

/// Metals keyed by label, loaded from the JSON array format
///   {label, omega_p_rad_s, nu_rad_s, resistivity_ohm_m?, number_density_cm3?}
class MaterialDb {
public:
    MaterialDb() = default;
    explicit MaterialDb(std::vector<DrudeMetal> metals) : metals_(std::move(metals)) {}

    static MaterialDb parse(std::string_view text) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigurationError(std::string("material database is not valid JSON: ") + e.what());
        }
        if (!doc.is_array()) throw ConfigurationError("material database must be a JSON array");

        std::vector<DrudeMetal> metals;
        for (const auto& rec : doc) {
            if (!rec.is_object() || !rec.contains("label") || !rec["label"].is_string())
                throw ConfigurationError("material record without a string label");
            const auto label = rec["label"].get<std::string>();
            auto opt = [&](const char* key) -> std::optional<double> {
                if (!rec.contains(key) || rec[key].is_null()) return std::nullopt;
                if (!rec[key].is_number())
                    throw ConfigurationError(label + ": field '" + key + "' must be a number");
                return rec[key].get<double>();
            };
            metals.emplace_back(label, opt("omega_p_rad_s"), opt("nu_rad_s"),
                                opt("resistivity_ohm_m"), opt("number_density_cm3"));
        }
        MaterialDb db(std::move(metals));
        for (std::size_t i = 0; i < db.metals_.size(); ++i)
            for (std::size_t j = i + 1; j < db.metals_.size(); ++j)
                if (db.metals_[i].label() == db.metals_[j].label())
                    throw ConfigurationError("duplicate material label '" + db.metals_[i].label() + "'");
        return db;
    }

    static MaterialDb load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigurationError("cannot open material database '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    static MaterialDb bundled() { return parse(kBundledMaterials); }

    const DrudeMetal& get(std::string_view label) const {
        for (const auto& m : metals_)
            if (m.label() == label) return m;
        throw ConfigurationError("unknown material '" + std::string(label) + "'");
    }

    bool contains(std::string_view label) const {
        for (const auto& m : metals_)
            if (m.label() == label) return true;
        return false;
    }

    const std::vector<DrudeMetal>& metals() const& noexcept { return metals_; }
    std::vector<DrudeMetal> metals() && { return std::move(metals_); }

private:
    std::vector<DrudeMetal> metals_;
};

inline nlohmann::json to_json(const DrudeMetal& m) {
    nlohmann::json j;
    j["label"] = m.label();
    if (m.has_drude_parameters()) {
        j["omega_p_rad_s"] = m.omega_p();
        j["nu_rad_s"] = m.nu();
    }
    if (auto r = m.resistivity()) j["resistivity_ohm_m"] = *r;
    if (auto n = m.number_density()) j["number_density_cm3"] = *n;
    return j;
}

}  // namespace casifric

#endif
