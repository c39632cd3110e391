#ifndef CASIFRIC_SPECTRAL_DENSITY_HPP
#define CASIFRIC_SPECTRAL_DENSITY_HPP

#include <cmath>
#include <limits>
#include <string_view>

namespace casifric {

enum class DensityProvenance { halfspace, radiation, induced };

inline std::string_view to_string(DensityProvenance p) {
    switch (p) {
        case DensityProvenance::halfspace: return "halfspace";
        case DensityProvenance::radiation: return "radiation";
        case DensityProvenance::induced: return "induced";
    }
    return "?";
}

/// Power-law oscillator-strength distribution  alpha_I(m^2) m^2 = c m^p,
/// with m = hbar*omega in erg. Coefficients are Gaussian-CGS, so c m^p has
/// the dimension of a polarizability (cm^3).
///
/// validity_max_m is the energy below which the power law was derived; it
/// is +inf when no physical cutoff is known.
struct SpectralDensity {
    double coefficient = 0.0;
    double exponent = 1.0;
    DensityProvenance provenance = DensityProvenance::halfspace;
    double validity_max_m = std::numeric_limits<double>::infinity();

    double operator()(double m) const { return coefficient * std::pow(m, exponent); }
};

}  // namespace casifric

#endif
