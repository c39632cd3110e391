#ifndef CASIFRIC_MATERIALS_HPP
#define CASIFRIC_MATERIALS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "casifric/errors.hpp"
#include "casifric/spectral_density.hpp"
#include "casifric/units.hpp"
#include "casifric/validity.hpp"

namespace casifric {

/// A Drude half-space.
///
/// Either the pair (omega_p, nu) or a DC resistivity must be given. A metal
/// known only by resistivity can serve every particle-force formula, since
/// those depend on nu/omega_p^2 alone, but not the permittivity itself.
/// number_density (cm^-3) is only needed where the half-space density does
/// not cancel, i.e. the bare coefficient D and plate-plate forces.
class DrudeMetal {
public:
    DrudeMetal(std::string label, std::optional<double> omega_p, std::optional<double> nu,
               std::optional<double> resistivity = std::nullopt,
               std::optional<double> number_density = std::nullopt)
        : label_(std::move(label)),
          omega_p_(omega_p),
          nu_(nu),
          resistivity_(resistivity),
          number_density_(number_density) {
        if (omega_p_.has_value() != nu_.has_value())
            throw ConfigurationError(label_ + ": omega_p and nu must be given together");
        if (omega_p_ && !(*omega_p_ > 0.0))
            throw DomainError(label_ + ": omega_p must be > 0");
        if (nu_ && !(*nu_ >= 0.0)) throw DomainError(label_ + ": nu must be >= 0");
        if (resistivity_ && !(*resistivity_ > 0.0))
            throw DomainError(label_ + ": resistivity must be > 0");
        if (number_density_ && !(*number_density_ > 0.0))
            throw DomainError(label_ + ": number density must be > 0");
        if (!omega_p_ && !resistivity_)
            throw ConfigurationError(label_ + ": need (omega_p, nu) or a resistivity");
        if (omega_p_ && resistivity_) {
            const double from_drude = *nu_ / (*omega_p_ * *omega_p_);
            const double from_rho = resistivity_to_damping_ratio({*resistivity_, Unit::ohm_meter}).value;
            if (std::abs(from_drude - from_rho) > 1e-6 * std::abs(from_rho))
                throw ConfigurationError(label_ +
                                         ": resistivity disagrees with nu/(eps0 omega_p^2)");
        }
    }

    static DrudeMetal from_resistivity(std::string label, double resistivity_ohm_m,
                                       std::optional<double> number_density = std::nullopt) {
        return DrudeMetal(std::move(label), std::nullopt, std::nullopt, resistivity_ohm_m,
                          number_density);
    }

    const std::string& label() const noexcept { return label_; }
    bool has_drude_parameters() const noexcept { return omega_p_.has_value(); }
    std::optional<double> resistivity() const noexcept { return resistivity_; }
    std::optional<double> number_density() const noexcept { return number_density_; }

    double omega_p() const {
        if (!omega_p_) throw ConfigurationError(label_ + ": omega_p is not specified");
        return *omega_p_;
    }
    double nu() const {
        if (!nu_) throw ConfigurationError(label_ + ": nu is not specified");
        return *nu_;
    }

    /// nu / omega_p^2 in seconds.
    double damping_ratio() const {
        if (omega_p_) return *nu_ / (*omega_p_ * *omega_p_);
        return resistivity_to_damping_ratio({*resistivity_, Unit::ohm_meter}).value;
    }

    DrudeMetal with_number_density(double rho) const {
        return DrudeMetal(label_, omega_p_, nu_, resistivity_, rho);
    }

    // Only valid when both are defined.
    DrudeMetal with_drude(double omega_p, double nu) const {
        return DrudeMetal(label_, omega_p, nu, std::nullopt, number_density_);
    }

private:
    std::string label_;
    std::optional<double> omega_p_;
    std::optional<double> nu_;
    std::optional<double> resistivity_;
    std::optional<double> number_density_;
};

/// sigma = (eps - 1)/(eps + 1), the electrostatic image strength.
/// Not to be confused with the conductivity omega_p^2/nu.
struct SurfaceResponse {
    std::complex<double> value;
};

/// eps(omega) = 1 + omega_p^2 / (xi (xi + nu)) with xi = -i omega.
/// This is the passive branch: Im eps > 0 for omega > 0.
inline std::complex<double> drude_permittivity(const DrudeMetal& metal, double omega) {
    const double wp = metal.omega_p();
    const double nu = metal.nu();
    if (omega == 0.0) throw DivergenceError(metal.label() + ": Drude permittivity diverges at omega = 0");
    if (std::isinf(omega)) return {1.0, 0.0};
    const std::complex<double> xi(0.0, -omega);
    return 1.0 + wp * wp / (xi * (xi + nu));
}

inline SurfaceResponse surface_response(std::complex<double> eps) {
    if (std::isinf(eps.real()) || std::isinf(eps.imag())) return {{1.0, 0.0}};
    const auto denom = eps + 1.0;
    if (std::abs(denom) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(eps)))
        throw DivergenceError("surface response has a pole at eps = -1 (surface plasmon)");
    return {(eps - 1.0) / denom};
}

/// Im sigma ~= 2 omega nu / omega_p^2, valid for omega << nu.
inline Checked<double> im_surface_response_lowfreq(const DrudeMetal& metal, double omega,
                                                   const ValidityPolicy& policy = {}) {
    if (!(omega >= 0.0)) throw DomainError("im_surface_response_lowfreq: omega must be >= 0");
    Checked<double> out;
    if (metal.has_drude_parameters()) {
        if (omega >= policy.frequency_window * metal.nu())
            flag_validity(policy, out.warnings,
                          metal.label() + ": low-frequency surface response used at omega >= " +
                              std::to_string(policy.frequency_window) + " nu");
    }
    out.value = 2.0 * omega * metal.damping_ratio();
    return out;
}

/// rho * D = hbar nu / (pi hbar omega_p)^2, the half-space coefficient with
/// its number density already multiplied in. Only nu/omega_p^2 enters.
inline double halfspace_weighted_coefficient(const DrudeMetal& metal) {
    constexpr double pi = std::numbers::pi;
    return metal.damping_ratio() / (pi * pi * constants::hbar_cgs);
}

inline double halfspace_validity_max_m(const DrudeMetal& metal) {
    if (!metal.has_drude_parameters()) return std::numeric_limits<double>::infinity();
    return 0.1 * constants::hbar_cgs * metal.nu();
}

/// alpha_I(m^2) m^2 = D m for small m, D = hbar nu / (rho (pi hbar omega_p)^2).
inline SpectralDensity halfspace_spectral_coefficient(const DrudeMetal& metal) {
    const auto rho = metal.number_density();
    if (!rho) throw ConfigurationError(metal.label() + ": number density required for D");
    return {halfspace_weighted_coefficient(metal) / *rho, 1.0, DensityProvenance::halfspace,
            halfspace_validity_max_m(metal)};
}

}  // namespace casifric

#endif
