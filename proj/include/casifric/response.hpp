#ifndef CASIFRIC_RESPONSE_HPP
#define CASIFRIC_RESPONSE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "casifric/errors.hpp"
#include "casifric/materials.hpp"
#include "casifric/quadrature.hpp"
#include "casifric/spectral_density.hpp"
#include "casifric/units.hpp"
#include "casifric/validity.hpp"

namespace casifric {

/// Harmonic-oscillator particle: static polarizability alpha0 (Gaussian,
/// cm^3) and resonance omega0 (rad/s).
struct OscillatorParticle {
    double alpha0 = 0.0;
    double omega0 = 0.0;
    std::string label;

    OscillatorParticle() = default;
    OscillatorParticle(double alpha0_cm3, double omega0_rad_s, std::string name = {})
        : alpha0(alpha0_cm3), omega0(omega0_rad_s), label(std::move(name)) {
        if (!(alpha0 > 0.0)) throw DomainError("particle polarizability must be > 0");
        if (!(omega0 > 0.0)) throw DomainError("particle resonance frequency must be > 0");
    }
};

// Image-dipole shift factors n_i in 1/alpha_i = 1/alpha0 + sigma n_i/(2 z0)^3.
inline constexpr std::array<double, 3> kImageShiftFactors{1.0, 1.0, 2.0};

// Weights for reducing the anisotropic image polarizability to a scalar.
// The z axis counts twice, following the diagonal (1,1,2)/2 structure of
// the TM Green's dyadic; this is what sets <n> = 3/2 and hence the 3/8
// relative to an isotropic average. Kept as a named table so the choice
// stays auditable.
inline constexpr std::array<double, 3> kFrictionAxisWeights{0.25, 0.25, 0.5};

inline constexpr double mean_image_factor() {
    double n = 0.0;
    for (std::size_t i = 0; i < 3; ++i) n += kFrictionAxisWeights[i] * kImageShiftFactors[i];
    return n;
}

inline double alpha_undamped(const OscillatorParticle& p, double omega) {
    const double x = omega / p.omega0;
    const double denom = 1.0 - x * x;
    if (denom == 0.0) throw DivergenceError("undamped polarizability has a pole at omega = omega0");
    return p.alpha0 / denom;
}

/// alpha0 / (1 + (2/3) i (omega/c)^3 alpha0), the radiation-damped
/// polarizability below resonance. Im alpha < 0 for omega > 0 in this
/// sign convention.
inline Checked<std::complex<double>> alpha_radiation_damped(const OscillatorParticle& p, double omega,
                                                            const ValidityPolicy& policy = {}) {
    if (!(omega >= 0.0)) throw DomainError("alpha_radiation_damped: omega must be >= 0");
    Checked<std::complex<double>> out;
    if (omega >= policy.frequency_window * p.omega0)
        flag_validity(policy, out.warnings, "radiation-damped polarizability used at omega >= " +
                                                std::to_string(policy.frequency_window) + " omega0");
    const double k = omega / constants::c_cgs;
    const std::complex<double> denom(1.0, (2.0 / 3.0) * k * k * k * p.alpha0);
    out.value = p.alpha0 / denom;
    return out;
}

/// B m^3 with B = 2 alpha0^2 / (3 pi (hbar c)^3).
inline SpectralDensity radiation_spectral_coefficient(const OscillatorParticle& p) {
    const double hc = constants::hbar_cgs * constants::c_cgs;
    const double b = 2.0 * p.alpha0 * p.alpha0 / (3.0 * std::numbers::pi * hc * hc * hc);
    return {b, 3.0, DensityProvenance::radiation, 0.1 * constants::hbar_cgs * p.omega0};
}

struct ImagePolarizability {
    std::array<std::complex<double>, 3> per_axis{};
    std::complex<double> weighted_exact{};
    // alpha0 - alpha0^2 sigma <n> / (2 z0)^3; empty outside the series window.
    std::optional<std::complex<double>> first_order;
    std::vector<std::string> warnings;
};

inline ImagePolarizability image_effective_polarizability(const OscillatorParticle& p,
                                                          SurfaceResponse sigma, double z0) {
    if (!(z0 > 0.0)) throw DomainError("image polarizability needs z0 > 0");
    const double r3 = std::pow(2.0 * z0, 3);

    ImagePolarizability out;
    bool series_ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::complex<double> shift = sigma.value * kImageShiftFactors[i] / r3;
        const std::complex<double> denom = 1.0 + p.alpha0 * shift;
        if (std::abs(denom) == 0.0) throw DivergenceError("image polarizability pole");
        out.per_axis[i] = p.alpha0 / denom;
        out.weighted_exact += kFrictionAxisWeights[i] * out.per_axis[i];
        if (std::abs(p.alpha0 * shift) >= 1.0) series_ok = false;
    }
    if (series_ok) {
        out.first_order = p.alpha0 - p.alpha0 * p.alpha0 * sigma.value * mean_image_factor() / r3;
    } else {
        out.warnings.push_back("image series parameter |alpha0 sigma n/(2 z0)^3| >= 1; "
                               "first-order form withheld");
    }
    return out;
}

/// D1 m with D1 = 3 alpha0^2 hbar nu / (8 pi z0^3 (hbar omega_p)^2),
/// written in terms of nu/omega_p^2 so resistivity-only metals work.
inline SpectralDensity induced_spectral_coefficient(const OscillatorParticle& p,
                                                    const DrudeMetal& metal, double z0) {
    if (!(z0 > 0.0)) throw DomainError("induced spectral coefficient needs z0 > 0");
    const double d1 = 3.0 * p.alpha0 * p.alpha0 * metal.damping_ratio() /
                      (8.0 * std::numbers::pi * z0 * z0 * z0 * constants::hbar_cgs);
    return {d1, 1.0, DensityProvenance::induced, halfspace_validity_max_m(metal)};
}

/// f(K^2) = integral of alpha_I(m^2) m^2 / (K^2 + m^2) d(m^2) over
/// 0 < m <= validity_max_m.
inline double reconstruct_f(const SpectralDensity& d, double K2, const QuadratureSpec& spec = {}) {
    if (!(K2 > 0.0)) throw DomainError("reconstruct_f needs K^2 > 0");
    const double M = d.validity_max_m;
    if (!std::isfinite(M) || !(M > 0.0))
        throw DomainError("reconstruct_f needs a finite validity cutoff on the density");
    const double kappa2 = K2 / (M * M);
    const double p = d.exponent;
    auto integrand = [&](double t) { return std::pow(t, p + 1.0) / (kappa2 + t * t); };
    const double I = integrate_or_throw(integrand, 0.0, 1.0, spec, "reconstruct_f");
    return 2.0 * d.coefficient * std::pow(M, p) * I;
}

struct PairCoupling {
    double H = 0.0;
    double C_plus = 0.0;
    double C_minus = 0.0;
    double temperature = 0.0;
};

/// Finite-temperature pair coefficients
///   H  = hbar^2 w1 w2 a1 a2 / (4 sinh(b w1/2) sinh(b w2/2)),
///   C+- = (H/hbar) sinh(b |w1 +- w2| / 2),   b = hbar/(k_B T).
/// Evaluated through coth so that low temperatures neither overflow nor
/// lose the T = 0 limit C+ = hbar w1 w2 a1 a2 / 2, C- = 0.
inline PairCoupling pair_coupling(double omega1, double alpha1, double omega2, double alpha2,
                                  double temperature) {
    if (!(temperature >= 0.0)) throw DomainError("temperature must be >= 0");
    if (!(omega1 > 0.0 && omega2 > 0.0)) throw DomainError("pair frequencies must be > 0");

    const double hbar = constants::hbar_cgs;
    const double base = hbar * omega1 * omega2 * alpha1 * alpha2 / 4.0;
    PairCoupling out;
    out.temperature = temperature;
    if (temperature == 0.0) {
        out.C_plus = 2.0 * base;
        return out;
    }
    const double beta_hbar = hbar / (constants::boltzmann_cgs * temperature);
    const double a = 0.5 * beta_hbar * omega1;
    const double b = 0.5 * beta_hbar * omega2;
    const double coth_a = 1.0 / std::tanh(a);
    const double coth_b = 1.0 / std::tanh(b);
    out.H = hbar * base / (std::sinh(a) * std::sinh(b));
    out.C_plus = base * (coth_a + coth_b);
    out.C_minus = omega1 == omega2 ? 0.0 : base * std::abs(coth_b - coth_a);
    return out;
}

}  // namespace casifric

#endif
