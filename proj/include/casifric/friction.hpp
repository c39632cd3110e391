#ifndef CASIFRIC_FRICTION_HPP
#define CASIFRIC_FRICTION_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casifric/errors.hpp"
#include "casifric/materials.hpp"
#include "casifric/response.hpp"
#include "casifric/spectral_density.hpp"
#include "casifric/units.hpp"
#include "casifric/validity.hpp"

namespace casifric {

enum class Mechanism { radiation_reaction, induced_image };
enum class Provenance { closed_form, oracle };

/// How the induced coefficient D1 ~ z^-3 is treated when particles fill a
/// whole plate: frozen at the gap d, integrated as it varies through the
/// plate (which multiplies the plate force by 6/9), or frozen at a fixed
/// reference distance so that only the explicit d^-6 remains.
enum class D1Convention { constant_at_gap, integrated_varying, fixed_reference };

inline std::string_view to_string(Mechanism m) {
    return m == Mechanism::radiation_reaction ? "radiation_reaction" : "induced_image";
}
inline std::string_view to_string(Provenance p) {
    return p == Provenance::closed_form ? "closed_form" : "oracle";
}
inline std::string_view to_string(D1Convention c) {
    switch (c) {
        case D1Convention::constant_at_gap: return "constant_at_gap";
        case D1Convention::integrated_varying: return "integrated_varying";
        case D1Convention::fixed_reference: return "fixed_reference";
    }
    return "unknown";
}

struct ParticleHalfspace {
    double z0 = 0.0;  // cm
};

struct PlatePlate {
    double d = 0.0;     // cm
    double rho1 = 0.0;  // cm^-3, dilute plate of oscillator particles
    double rho2 = 0.0;  // cm^-3, metal plate; multiplies the metal's D
};

using Geometry = std::variant<ParticleHalfspace, PlatePlate>;

/// Everything needed to evaluate one friction force. Lengths in cm,
/// velocity in cm/s.
struct FrictionScenario {
    Geometry geometry;
    double velocity = 0.0;
    Mechanism mechanism = Mechanism::radiation_reaction;
    OscillatorParticle particle;
    DrudeMetal metal;
    ValidityPolicy policy{};
    D1Convention d1_convention = D1Convention::constant_at_gap;
    double d1_reference_gap = 0.0;  // cm, read only by fixed_reference

    bool is_particle() const { return std::holds_alternative<ParticleHalfspace>(geometry); }
    double gap() const {
        return is_particle() ? std::get<ParticleHalfspace>(geometry).z0 : std::get<PlatePlate>(geometry).d;
    }
    // Distance at which a plate's D1 is evaluated.
    double d1_gap() const {
        return d1_convention == D1Convention::fixed_reference ? d1_reference_gap : gap();
    }
};

struct Exponents {
    int velocity_power = 0;
    int gap_power = 0;  // F ~ gap^-gap_power
};

/// Signed force (negative opposes the motion). Particle geometries give a
/// force in dyne; plate-plate gives force per unit area in dyn/cm^2.
struct ForceResult {
    Quantity force;
    Mechanism mechanism = Mechanism::radiation_reaction;
    Provenance provenance = Provenance::closed_form;
    Exponents exponents;
    std::vector<std::string> warnings;

    Quantity si() const {
        return convert(force, force.unit == Unit::dyne ? Unit::newton : Unit::pascal);
    }
};

inline Exponents exponents_for(bool particle, Mechanism m) {
    if (particle) return m == Mechanism::radiation_reaction ? Exponents{5, 9} : Exponents{3, 10};
    return m == Mechanism::radiation_reaction ? Exponents{5, 8} : Exponents{3, 6};
}

// ---------------------------------------------------------------------------
// Moment identities
// ---------------------------------------------------------------------------

/// Integral of x^p (1-x)^r over [0,1] = Beta(p+1, r+1).
inline double overlap_integral_coefficient(double p, double r) {
    if (!(p > -1.0 && r > -1.0)) throw DomainError("overlap exponents must exceed -1");
    return std::beta(p + 1.0, r + 1.0);
}

/// Angular average (1/2pi) of cos^n over a full turn: (n-1)!!/n!!, 0 for odd n.
inline double angular_moment(int n) {
    if (n < 0) throw DomainError("angular moment order must be >= 0");
    if (n % 2 == 1) return 0.0;
    double v = 1.0;
    for (int k = n; k > 0; k -= 2) v *= static_cast<double>(k - 1) / k;
    return v;
}

/// Integral over q of q^n e^{-2qd} 2 pi q dq = 2 pi (n+1)! / (2d)^(n+2).
inline double radial_moment(int n, double d) {
    if (n < 0) throw DomainError("radial moment order must be >= 0");
    if (!(d > 0.0)) throw DomainError("radial moment needs d > 0");
    return 2.0 * std::numbers::pi * std::tgamma(n + 2.0) / std::pow(2.0 * d, n + 2);
}

/// Closed form of J(omega)/(2 tau) for two power-law densities:
///   pi hbar^(p+r+1) c1 c2 |omega|^(p+r+2) Beta(p+1, r+1).
inline double overlap_power_closed_form(const SpectralDensity& d1, const SpectralDensity& d2,
                                        double omega) {
    const double p = d1.exponent;
    const double r = d2.exponent;
    return std::numbers::pi * std::pow(constants::hbar_cgs, p + r + 1.0) * d1.coefficient *
           d2.coefficient * std::pow(std::abs(omega), p + r + 2.0) * overlap_integral_coefficient(p, r);
}

// ---------------------------------------------------------------------------
// Closed forms on raw Gaussian-CGS numbers. No validation; velocities may be
// negative so the odd-power structure can be checked directly.
// `ratio` is nu/omega_p^2 in s.
// ---------------------------------------------------------------------------
namespace closed_form {

inline constexpr double pi = std::numbers::pi;

// A in F = -A/z0^9:  105 hbar nu alpha0^2 v^5 / (2^5 pi omega_p^2 c^3).
inline double radiation_coefficient(double alpha0, double ratio, double v) {
    const double c3 = std::pow(constants::c_cgs, 3);
    return 105.0 * constants::hbar_cgs * ratio * alpha0 * alpha0 * std::pow(v, 5) / (32.0 * pi * c3);
}

// Same A assembled from the two spectral densities, 8 rho2 (315 pi^2 hbar^5/2^9) B D v^5.
inline double radiation_coefficient_from_densities(double B, double rhoD, double v) {
    return 8.0 * 315.0 * pi * pi * std::pow(constants::hbar_cgs, 5) / 512.0 * B * rhoD * std::pow(v, 5);
}

inline double radiation_particle_force(double alpha0, double ratio, double v, double z0) {
    return -radiation_coefficient(alpha0, ratio, v) / std::pow(z0, 9);
}

// Rationalized (Heaviside-Lorentz) encoding with hbar and c restored:
//   F = -(105 / 32 pi) (alpha_HL / 4 pi)^2 (nu/omega_p^2) hbar v^5 / (c^3 z0^9).
// alpha_HL = 4 pi alpha_G, so the Gaussian form carries the 1/(4 pi)^2.
inline double radiation_particle_force_rationalized(double alpha_hl, double ratio, double v, double z0) {
    return -105.0 * alpha_hl * alpha_hl * ratio * constants::hbar_cgs * std::pow(v, 5) /
           (512.0 * pi * pi * pi * std::pow(constants::c_cgs, 3) * std::pow(z0, 9));
}

// A in F = -A/z0^7:  135 alpha0^2 (hbar nu)^2 (hbar v)^3 / (2^8 pi (hbar omega_p)^4 z0^3).
inline double induced_coefficient(double alpha0, double ratio, double v, double z0) {
    return 135.0 * alpha0 * alpha0 * ratio * ratio * constants::hbar_cgs * std::pow(v, 3) /
           (256.0 * pi * std::pow(z0, 3));
}

// Same A from the densities, 6 (15 pi^2/64) D1 rho D (hbar v)^3.
inline double induced_coefficient_from_densities(double D1, double rhoD, double v) {
    return 6.0 * 15.0 * pi * pi / 64.0 * D1 * rhoD * std::pow(constants::hbar_cgs * v, 3);
}

inline double induced_particle_force(double alpha0, double ratio, double v, double z0) {
    return -induced_coefficient(alpha0, ratio, v, z0) / std::pow(z0, 7);
}

// Rationalized encoding: F = -135 alpha_HL^2 v^3 / (4 pi^3 sigma^2 (2 z0)^10),
// sigma = omega_p^2/nu the conductivity, times hbar.
inline double induced_particle_force_rationalized(double alpha_hl, double conductivity, double v,
                                                  double z0) {
    return -constants::hbar_cgs * 135.0 * alpha_hl * alpha_hl * std::pow(v, 3) /
           (4.0 * pi * pi * pi * conductivity * conductivity * std::pow(2.0 * z0, 10));
}

// Force per area, -rho1 rho2 (315 pi^2 hbar^5 / 2^9 d^8) B D v^5.
inline double radiation_plate_force(double rho1, double B, double rho2, double D, double d, double v) {
    return -rho1 * rho2 * 315.0 * pi * pi * std::pow(constants::hbar_cgs, 5) / (512.0 * std::pow(d, 8)) *
           B * D * std::pow(v, 5);
}

// Force per area, -(15 pi^2 / 64 d^6) rho1 D1 rho2 D (hbar v)^3.
inline double induced_plate_force(double rho1, double D1, double rho2, double D, double d, double v) {
    return -15.0 * pi * pi / (64.0 * std::pow(d, 6)) * rho1 * D1 * rho2 * D *
           std::pow(constants::hbar_cgs * v, 3);
}

}  // namespace closed_form

// ---------------------------------------------------------------------------
// Scenario-level API
// ---------------------------------------------------------------------------

/// Checks kinematics and the leading-order windows. Hard errors for
/// impossible input, policy-controlled errors for window violations.
inline std::vector<std::string> validate_scenario(const FrictionScenario& s) {
    std::vector<std::string> warnings;
    const double gap = s.gap();
    if (!(gap > 0.0)) throw DomainError("gap must be > 0");
    if (!(s.velocity >= 0.0)) throw DomainError("velocity must be >= 0");
    if (const auto* pp = std::get_if<PlatePlate>(&s.geometry)) {
        if (!(pp->rho1 > 0.0 && pp->rho2 > 0.0))
            throw ConfigurationError("plate-plate geometry needs rho1 > 0 and rho2 > 0");
        if (s.d1_convention == D1Convention::fixed_reference && !(s.d1_reference_gap > 0.0))
            throw ConfigurationError("fixed_reference D1 convention needs d1_reference_gap > 0");
    }

    const auto& pol = s.policy;
    if (s.velocity / constants::c_cgs >= pol.max_beta)
        flag_validity(pol, warnings, "velocity is not small compared with c (v/c >= " +
                                         std::to_string(pol.max_beta) + ")");

    // Typical frequency probed is k_x v with k ~ 1/gap.
    const double omega = s.velocity / gap;
    if (omega >= pol.frequency_window * s.particle.omega0)
        flag_validity(pol, warnings, "probed frequency v/gap exceeds the static-polarizability window");
    if (s.metal.has_drude_parameters() && omega >= pol.frequency_window * s.metal.nu())
        flag_validity(pol, warnings, "probed frequency v/gap exceeds the low-frequency Drude window");

    if (s.mechanism == Mechanism::induced_image) {
        const double r3 = std::pow(2.0 * gap, 3);
        if (s.particle.alpha0 * kImageShiftFactors[2] / r3 >= 1.0)
            flag_validity(pol, warnings, "image series parameter alpha0 n_z/(2 gap)^3 >= 1");
    }
    return warnings;
}

inline ForceResult force_particle_radiation(const FrictionScenario& s) {
    if (!s.is_particle()) throw ConfigurationError("force_particle_radiation needs a particle geometry");
    if (s.mechanism != Mechanism::radiation_reaction)
        throw ConfigurationError("force_particle_radiation needs the radiation_reaction mechanism");
    ForceResult out;
    out.warnings = validate_scenario(s);
    const double z0 = s.gap();
    out.force = {closed_form::radiation_particle_force(s.particle.alpha0, s.metal.damping_ratio(),
                                                       s.velocity, z0),
                 Unit::dyne};
    out.mechanism = s.mechanism;
    out.exponents = exponents_for(true, s.mechanism);
    return out;
}

inline ForceResult force_particle_induced(const FrictionScenario& s) {
    if (!s.is_particle()) throw ConfigurationError("force_particle_induced needs a particle geometry");
    if (s.mechanism != Mechanism::induced_image)
        throw ConfigurationError("force_particle_induced needs the induced_image mechanism");
    ForceResult out;
    out.warnings = validate_scenario(s);
    out.force = {closed_form::induced_particle_force(s.particle.alpha0, s.metal.damping_ratio(),
                                                     s.velocity, s.gap()),
                 Unit::dyne};
    out.mechanism = s.mechanism;
    out.exponents = exponents_for(true, s.mechanism);
    return out;
}

inline ForceResult force_plate_plate(const FrictionScenario& s) {
    const auto* pp = std::get_if<PlatePlate>(&s.geometry);
    if (!pp) throw ConfigurationError("force_plate_plate needs a plate-plate geometry");
    ForceResult out;
    out.warnings = validate_scenario(s);
    const double D = halfspace_spectral_coefficient(s.metal).coefficient;
    if (s.mechanism == Mechanism::radiation_reaction) {
        const double B = radiation_spectral_coefficient(s.particle).coefficient;
        out.force = {closed_form::radiation_plate_force(pp->rho1, B, pp->rho2, D, pp->d, s.velocity),
                     Unit::dyne_per_cm2};
    } else {
        const double D1 = induced_spectral_coefficient(s.particle, s.metal, s.d1_gap()).coefficient;
        double f = closed_form::induced_plate_force(pp->rho1, D1, pp->rho2, D, pp->d, s.velocity);
        if (s.d1_convention == D1Convention::integrated_varying) f *= 6.0 / 9.0;
        out.force = {f, Unit::dyne_per_cm2};
    }
    out.mechanism = s.mechanism;
    out.exponents = exponents_for(false, s.mechanism);
    return out;
}

/// Dispatch on geometry and mechanism.
inline ForceResult friction_force(const FrictionScenario& s) {
    if (!s.is_particle()) return force_plate_plate(s);
    return s.mechanism == Mechanism::radiation_reaction ? force_particle_radiation(s)
                                                        : force_particle_induced(s);
}

inline FrictionScenario with_mechanism(FrictionScenario s, Mechanism m) {
    s.mechanism = m;
    return s;
}

// ---------------------------------------------------------------------------
// Crossover between the two mechanisms
// ---------------------------------------------------------------------------

struct CrossoverResult {
    Quantity velocity;          // cm/s; where |F_rad| = |F_ind|
    bool nonrelativistic = false;
    std::string verdict;
};

/// v*^2 = (135/840) c^3 nu / (z0 omega_p^2). Below v* the induced mechanism
/// dominates. When v* lies beyond the nonrelativistic guard the velocity is
/// still reported, but the verdict is what matters.
inline CrossoverResult crossover_velocity(const OscillatorParticle& p, const DrudeMetal& metal, double z0,
                                          const ValidityPolicy& policy = {}) {
    (void)p;  // alpha0^2 cancels in the ratio
    if (!(z0 > 0.0)) throw DomainError("crossover needs z0 > 0");
    const double vstar = std::sqrt(135.0 / 840.0 * std::pow(constants::c_cgs, 3) * metal.damping_ratio() / z0);
    CrossoverResult out;
    out.velocity = {vstar, Unit::centimeter_per_second};
    out.nonrelativistic = vstar / constants::c_cgs < policy.max_beta;
    if (out.nonrelativistic)
        out.verdict = "induced_image dominates below v*, radiation_reaction above";
    else
        out.verdict = "induced_image dominates at every nonrelativistic velocity";
    return out;
}

// ---------------------------------------------------------------------------
// Literature comparison (two half-spaces, T = 0)
// ---------------------------------------------------------------------------

// F_VP = F/2, F_Pendry = F_VP/6, F_Barton = 12 F_Pendry = F.
inline constexpr double kVolokitinPerssonRatio = 0.5;
inline constexpr double kPendryRatio = 1.0 / 12.0;
inline constexpr double kBartonRatio = 1.0;

struct LiteratureComparison {
    Quantity ours;
    Quantity volokitin_persson;
    Quantity pendry;
    Quantity barton;
    std::string note;
};

inline LiteratureComparison literature_comparison(const ForceResult& f) {
    return {f.force, f.force * kVolokitinPerssonRatio, f.force * kPendryRatio, f.force * kBartonRatio,
            "Barton's zeta(5) = 1.037 factor disregarded"};
}

}  // namespace casifric

#endif
