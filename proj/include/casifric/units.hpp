#ifndef CASIFRIC_UNITS_HPP
#define CASIFRIC_UNITS_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "casifric/errors.hpp"

namespace casifric {

// CODATA 2018. The SI values of h, e, c and k_B are exact by definition.
namespace constants {

inline constexpr double hbar_si = 1.054571817e-34;      // J s
inline constexpr double hbar_cgs = 1.054571817e-27;     // erg s
inline constexpr double planck_si = 6.62607015e-34;     // J s
inline constexpr double c_si = 299792458.0;             // m/s
inline constexpr double c_cgs = 29979245800.0;          // cm/s
inline constexpr double epsilon0 = 8.8541878128e-12;    // F/m
inline constexpr double electronvolt = 1.602176634e-19; // J
inline constexpr double boltzmann_si = 1.380649e-23;    // J/K
inline constexpr double boltzmann_cgs = 1.380649e-16;   // erg/K

inline constexpr double angstrom_cm = 1e-8;
inline constexpr double nanometer_cm = 1e-7;

}  // namespace constants

/// Unit tags. Only the handful the friction formulas and their I/O need.
enum class Unit {
    dimensionless,
    newton,
    dyne,
    pascal,             // force per area, N/m^2
    dyne_per_cm2,
    meter,
    centimeter,
    meter_per_second,
    centimeter_per_second,
    rad_per_second,
    electronvolt,
    second,
    ohm_meter,
    si_polarizability,       // F m^2
    gaussian_polarizability, // cm^3
    newton_meter9,           // particle-force coefficient, F = -A/z0^9
    dyne_centimeter9,
};

enum class Dimension {
    none,
    force,
    pressure,
    length,
    velocity,
    frequency,
    energy,
    time,
    resistivity,
    polarizability,
    force_coefficient9,
};

constexpr Dimension dimension_of(Unit u) {
    switch (u) {
        case Unit::dimensionless: return Dimension::none;
        case Unit::newton:
        case Unit::dyne: return Dimension::force;
        case Unit::pascal:
        case Unit::dyne_per_cm2: return Dimension::pressure;
        case Unit::meter:
        case Unit::centimeter: return Dimension::length;
        case Unit::meter_per_second:
        case Unit::centimeter_per_second: return Dimension::velocity;
        case Unit::rad_per_second: return Dimension::frequency;
        case Unit::electronvolt: return Dimension::energy;
        case Unit::second: return Dimension::time;
        case Unit::ohm_meter: return Dimension::resistivity;
        case Unit::si_polarizability:
        case Unit::gaussian_polarizability: return Dimension::polarizability;
        case Unit::newton_meter9:
        case Unit::dyne_centimeter9: return Dimension::force_coefficient9;
    }
    return Dimension::none;
}

// Size of one unit expressed in the SI unit of its dimension.
inline double si_scale(Unit u) {
    using namespace constants;
    switch (u) {
        case Unit::dyne: return 1e-5;
        case Unit::dyne_per_cm2: return 1e-1;
        case Unit::centimeter: return 1e-2;
        case Unit::centimeter_per_second: return 1e-2;
        case Unit::dyne_centimeter9: return 1e-23;
        // alpha_G [cm^3] = alpha_SI / (4 pi eps0) [m^3] * 1e6
        case Unit::gaussian_polarizability: return 4.0 * std::numbers::pi * epsilon0 * 1e-6;
        default: return 1.0;
    }
}

inline std::string_view unit_symbol(Unit u) {
    switch (u) {
        case Unit::dimensionless: return "";
        case Unit::newton: return "N";
        case Unit::dyne: return "dyn";
        case Unit::pascal: return "N/m^2";
        case Unit::dyne_per_cm2: return "dyn/cm^2";
        case Unit::meter: return "m";
        case Unit::centimeter: return "cm";
        case Unit::meter_per_second: return "m/s";
        case Unit::centimeter_per_second: return "cm/s";
        case Unit::rad_per_second: return "rad/s";
        case Unit::electronvolt: return "eV";
        case Unit::second: return "s";
        case Unit::ohm_meter: return "Ohm m";
        case Unit::si_polarizability: return "F m^2";
        case Unit::gaussian_polarizability: return "cm^3";
        case Unit::newton_meter9: return "N m^9";
        case Unit::dyne_centimeter9: return "dyn cm^9";
    }
    return "?";
}

/// A real value carrying a unit tag.
///
/// Sums and differences require identical tags; use convert() first when
/// two quantities share a dimension but not a unit.
struct Quantity {
    double value = 0.0;
    Unit unit = Unit::dimensionless;

    friend Quantity operator+(Quantity a, Quantity b) {
        require_same(a, b, "+");
        return {a.value + b.value, a.unit};
    }
    friend Quantity operator-(Quantity a, Quantity b) {
        require_same(a, b, "-");
        return {a.value - b.value, a.unit};
    }
    friend Quantity operator-(Quantity a) { return {-a.value, a.unit}; }
    friend Quantity operator*(Quantity a, double s) { return {a.value * s, a.unit}; }
    friend Quantity operator*(double s, Quantity a) { return {a.value * s, a.unit}; }
    friend Quantity operator/(Quantity a, double s) { return {a.value / s, a.unit}; }

    // Ratio of like-tagged quantities is a plain number.
    friend double operator/(Quantity a, Quantity b) {
        require_same(a, b, "/");
        return a.value / b.value;
    }

private:
    static void require_same(const Quantity& a, const Quantity& b, const char* op) {
        if (a.unit != b.unit)
            throw UnitError(std::string("incompatible units for '") + op + "': " +
                            std::string(unit_symbol(a.unit)) + " vs " +
                            std::string(unit_symbol(b.unit)));
    }
};

/// Convert between two tags of the same dimension.
inline Quantity convert(Quantity q, Unit target) {
    if (q.unit == target) return q;
    if (dimension_of(q.unit) != dimension_of(target))
        throw UnitError("cannot convert " + std::string(unit_symbol(q.unit)) + " to " +
                        std::string(unit_symbol(target)));
    return {q.value * (si_scale(q.unit) / si_scale(target)), target};
}

inline Quantity convert_polarizability(Quantity alpha, Unit target) {
    const bool src_ok = alpha.unit == Unit::si_polarizability ||
                        alpha.unit == Unit::gaussian_polarizability;
    const bool dst_ok = target == Unit::si_polarizability ||
                        target == Unit::gaussian_polarizability;
    if (!src_ok || !dst_ok || alpha.unit == target)
        throw UnitError("polarizability conversion needs one SI and one Gaussian tag");
    return convert(alpha, target);
}

/// Static polarizability from a spectroscopic Stark coefficient quoted in
/// Hz/(V/cm)^2, multiplied by Planck's constant.
inline Quantity atomic_polarizability_from_spectroscopic(double coeff_hz_per_v_cm2) {
    if (!(coeff_hz_per_v_cm2 >= 0.0))
        throw DomainError("spectroscopic polarizability coefficient must be >= 0");
    // 1/(V/cm)^2 = 1e-4 /(V/m)^2
    return {constants::planck_si * coeff_hz_per_v_cm2 * 1e-4, Unit::si_polarizability};
}

inline Quantity energy_to_angular_frequency(Quantity e) {
    if (e.unit != Unit::electronvolt) throw UnitError("energy_to_angular_frequency expects eV");
    if (!(e.value >= 0.0)) throw DomainError("energy must be >= 0");
    return {e.value * constants::electronvolt / constants::hbar_si, Unit::rad_per_second};
}

/// nu / omega_p^2 in seconds from a DC resistivity, via rho = nu / (eps0 omega_p^2).
inline Quantity resistivity_to_damping_ratio(Quantity rho) {
    if (rho.unit != Unit::ohm_meter) throw UnitError("resistivity must be in Ohm m");
    if (!(rho.value > 0.0)) throw DomainError("resistivity must be > 0");
    return {constants::epsilon0 * rho.value, Unit::second};
}

}  // namespace casifric

#endif
