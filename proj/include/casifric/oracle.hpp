#ifndef CASIFRIC_ORACLE_HPP
#define CASIFRIC_ORACLE_HPP

// Independent numerical route to every friction closed form: direct
// quadrature of the frequency overlap J(omega_v), its angular average and
// the radial q integral with the e^{-2qd} evanescent factor. Nothing here
// uses Beta functions, factorials or the assembled coefficients A.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "casifric/errors.hpp"
#include "casifric/friction.hpp"
#include "casifric/quadrature.hpp"
#include "casifric/response.hpp"
#include "casifric/spectral_density.hpp"

namespace casifric {

/// Arbitrary density alpha_I(m^2) m^2 as a function of m (erg).
using DensityFunction = std::function<double(double)>;

/// Piecewise-linear density on a grid of m values, zero outside it.
struct TabulatedDensity {
    std::vector<double> m;
    std::vector<double> value;

    double operator()(double x) const {
        if (m.empty() || x < m.front() || x > m.back()) return 0.0;
        auto it = std::upper_bound(m.begin(), m.end(), x);
        if (it == m.end()) return value.back();
        const auto i = static_cast<std::size_t>(it - m.begin());
        const double t = (x - m[i - 1]) / (m[i] - m[i - 1]);
        return value[i - 1] + t * (value[i] - value[i - 1]);
    }
};

namespace detail {

// Densities normalized at a reference energy so the quadratures see O(1)
// numbers: s(m_ref y) = s(m_ref) * shape(y).
struct ScaledDensity {
    DensityFunction s;
    double m_ref = 1.0;
    double scale = 1.0;

    ScaledDensity(DensityFunction f, double ref) : s(std::move(f)), m_ref(ref) {
        const double v = s(m_ref);
        scale = (std::isfinite(v) && v != 0.0) ? v : 1.0;
    }
    double shape(double y) const { return s(m_ref * y) / scale; }
};

// g(w) = w^2 * integral_0^1 shape1(w x) shape2(w (1-x)) dx
inline double overlap_shape(const ScaledDensity& a, const ScaledDensity& b, double w,
                            const QuadratureSpec& spec) {
    if (w == 0.0) return 0.0;
    auto f = [&](double x) { return a.shape(w * x) * b.shape(w * (1.0 - x)); };
    return w * w * integrate_or_throw(f, 0.0, 1.0, spec, "oracle frequency layer");
}

// J(omega)/(2 tau) = pi omega^2 hbar * integral_0^1 s1(m x) s2(m (1-x)) dx, m = hbar |omega|.
inline double overlap_power(const DensityFunction& s1, const DensityFunction& s2, double omega,
                            const QuadratureSpec& spec) {
    const double w = std::abs(omega);
    if (w == 0.0) return 0.0;
    const double m = constants::hbar_cgs * w;
    ScaledDensity a(s1, m), b(s2, m);
    const double g = overlap_shape(a, b, 1.0, spec);
    return std::numbers::pi * constants::hbar_cgs * w * w * a.scale * b.scale * g;
}

// I_k = integral_0^U u^k e^{-u} du  integral_0^{2 pi} dphi g(|u cos phi| / 2),
// with u = 2 q gap. g depends on |cos phi| only, so the angular layer is
// four times the first quadrant, where the integrand is smooth.
inline double radial_angular_integral(const ScaledDensity& a, const ScaledDensity& b, int k,
                                      double u_max, const QuadratureSpec& spec) {
    auto angular = [&](double u) {
        auto fphi = [&](double phi) { return overlap_shape(a, b, 0.5 * u * std::cos(phi), spec); };
        return 4.0 * integrate_or_throw(fphi, 0.0, 0.5 * std::numbers::pi, spec, "oracle angular layer");
    };
    auto radial = [&](double u) {
        const double decay = std::exp(-u);
        if (decay == 0.0 || u == 0.0) return 0.0;
        return std::pow(u, k) * decay * angular(u);
    };
    return integrate_or_throw(radial, 0.0, u_max, spec, "oracle radial layer");
}

}  // namespace detail

/// J(omega_v)/(2 tau) by direct quadrature of the frequency overlap.
/// Both densities must be valid up to hbar |omega_v|.
inline double j_numeric(const SpectralDensity& d1, const SpectralDensity& d2, double omega_v,
                        const QuadratureSpec& spec = {}) {
    const double m = constants::hbar_cgs * std::abs(omega_v);
    if (m > d1.validity_max_m || m > d2.validity_max_m)
        throw ValidityError("j_numeric: hbar |omega_v| exceeds a density's validity cutoff");
    return detail::overlap_power(d1, d2, omega_v, spec);
}

/// Same, for arbitrary (e.g. tabulated) densities. No validity check.
inline double j_numeric(const DensityFunction& s1, const DensityFunction& s2, double omega_v,
                        const QuadratureSpec& spec = {}) {
    return detail::overlap_power(s1, s2, omega_v, spec);
}

struct OracleOptions {
    QuadratureSpec spec{};
    // When set, the q integral stops at q_max = q_cutoff / gap instead of infinity.
    std::optional<double> q_cutoff;
};

namespace detail {

// Power dissipated per unit area between a dilute plate of density rho1
// carrying s1 and a plate carrying s2 with density rho2, divided by v:
// i.e. minus the plate force. With derivative = true the e^{-2qd} factor
// is differentiated instead, giving minus the single-particle force (per
// rho1).
inline double oracle_layered(const DensityFunction& s1, const DensityFunction& s2, double rho1,
                             double rho2, double gap, double v, bool derivative,
                             const OracleOptions& opt) {
    const double omega_ref = std::abs(v) / gap;
    const double m_ref = constants::hbar_cgs * omega_ref;
    ScaledDensity a(s1, m_ref), b(s2, m_ref);
    const double u_max = opt.q_cutoff ? 2.0 * *opt.q_cutoff : std::numeric_limits<double>::infinity();
    const int k = derivative ? 2 : 1;
    const double I = radial_angular_integral(a, b, k, u_max, opt.spec);
    double pref = std::numbers::pi * constants::hbar_cgs * omega_ref * omega_ref * a.scale * b.scale /
                  (4.0 * gap * gap);
    if (derivative) pref /= gap;
    const double power = (derivative ? rho2 : rho1 * rho2) * pref * I;
    return power / v;
}

inline DensityFunction as_function(const SpectralDensity& d) { return [d](double m) { return d(m); }; }

}  // namespace detail

/// Friction force by the numerical route. Plate geometries come from the
/// e^{-2qd}-weighted k integral; the particle force is minus the d
/// derivative of the plate force per unit rho1, taken analytically under
/// the integral sign.
inline ForceResult force_numeric(const FrictionScenario& s, const OracleOptions& opt = {}) {
    ForceResult out;
    out.warnings = validate_scenario(s);
    out.mechanism = s.mechanism;
    out.provenance = Provenance::oracle;
    out.exponents = exponents_for(s.is_particle(), s.mechanism);
    const Unit unit = s.is_particle() ? Unit::dyne : Unit::dyne_per_cm2;
    if (s.velocity == 0.0) {
        out.force = {0.0, unit};
        return out;
    }

    const auto particle_density = [&](double gap) {
        return s.mechanism == Mechanism::radiation_reaction
                   ? radiation_spectral_coefficient(s.particle)
                   : induced_spectral_coefficient(s.particle, s.metal, gap);
    };

    double f = 0.0;
    if (const auto* ph = std::get_if<ParticleHalfspace>(&s.geometry)) {
        // rho2 D taken together: the metal's own density cancels.
        const SpectralDensity metal{halfspace_weighted_coefficient(s.metal), 1.0,
                                    DensityProvenance::halfspace};
        f = -detail::oracle_layered(detail::as_function(particle_density(ph->z0)),
                                    detail::as_function(metal), 1.0, 1.0, ph->z0, s.velocity, true, opt);
    } else {
        const auto& pp = std::get<PlatePlate>(s.geometry);
        const auto metal = detail::as_function(halfspace_spectral_coefficient(s.metal));
        if (s.mechanism == Mechanism::induced_image &&
            s.d1_convention == D1Convention::integrated_varying) {
            // rho1 * integral_d^inf F_particle(z) dz with D1 evaluated at each z.
            auto layer = [&](double y) {
                const double z = pp.d * (1.0 + y);
                return detail::oracle_layered(detail::as_function(particle_density(z)), metal, 1.0,
                                              pp.rho2, z, s.velocity, true, opt);
            };
            f = -pp.rho1 * pp.d *
                integrate_or_throw(layer, 0.0, std::numeric_limits<double>::infinity(), opt.spec,
                                   "oracle depth layer");
        } else {
            f = -detail::oracle_layered(detail::as_function(particle_density(s.d1_gap())), metal, pp.rho1,
                                        pp.rho2, pp.d, s.velocity, false, opt);
        }
    }
    out.force = {f, unit};
    return out;
}

}  // namespace casifric

#endif
