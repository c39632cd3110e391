#ifndef CASIFRIC_VALIDITY_HPP
#define CASIFRIC_VALIDITY_HPP

#include <string>
#include <utility>
#include <vector>

#include "casifric/errors.hpp"

namespace casifric {

enum class Strictness { strict, warn };

/// Controls how leading-order formulas react when used outside their window.
///
/// The defaults are strict: ω < ω₀/10 for the particle oscillator, ω < ν/10
/// for the low-frequency Drude response, v/c < 1e-3 for the kinematics.
struct ValidityPolicy {
    Strictness strictness = Strictness::strict;
    double frequency_window = 0.1;
    double max_beta = 1e-3;

    static ValidityPolicy lenient() {
        ValidityPolicy p;
        p.strictness = Strictness::warn;
        return p;
    }
};

/// A value together with any validity warnings raised while computing it.
template <typename T>
struct Checked {
    T value{};
    std::vector<std::string> warnings;

    bool clean() const noexcept { return warnings.empty(); }
};

/// Raise in strict mode, record otherwise.
inline void flag_validity(const ValidityPolicy& policy, std::vector<std::string>& warnings,
                          std::string message) {
    if (policy.strictness == Strictness::strict) throw ValidityError(message);
    warnings.push_back(std::move(message));
}

inline void append_warnings(std::vector<std::string>& into, const std::vector<std::string>& from) {
    into.insert(into.end(), from.begin(), from.end());
}

}  // namespace casifric

#endif
