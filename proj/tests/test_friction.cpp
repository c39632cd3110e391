#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "casifric/friction.hpp"
#include "casifric/quadrature.hpp"
#include "test_support.hpp"

using namespace casifric;
using casifric::testing::gold;
using casifric::testing::log_grid;
using casifric::testing::loglog_slope;
using casifric::testing::particle_scenario;
using casifric::testing::rel_err;
using casifric::testing::rubidium;
using casifric::testing::silicon;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kV = 3.4e4;   // 340 m/s
constexpr double kZ0 = 1e-6;   // 10 nm
constexpr double kRhoGold = 5.9e22;

QuadratureSpec tight() {
    QuadratureSpec s;
    s.relative_tolerance = 1e-13;
    return s;
}

FrictionScenario plate_scenario(Mechanism m, double v, double d, double rho1 = 1e21,
                                D1Convention conv = D1Convention::constant_at_gap) {
    FrictionScenario s{PlatePlate{d, rho1, kRhoGold}, v, m, rubidium(), gold().with_number_density(kRhoGold),
                       ValidityPolicy::lenient()};
    s.d1_convention = conv;
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

TEST(OverlapCoefficient, Examples) {
    EXPECT_NEAR(overlap_integral_coefficient(3, 1), 1.0 / 20.0, 1e-15);
    EXPECT_NEAR(overlap_integral_coefficient(1, 1), 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(overlap_integral_coefficient(0, 0), 1.0, 1e-15);
    EXPECT_THROW(overlap_integral_coefficient(-1, 0), DomainError);
    EXPECT_THROW(overlap_integral_coefficient(0, -2), DomainError);
}

TEST(OverlapCoefficient, AgainstBruteForceQuadrature) {
    for (int p = 0; p <= 4; ++p) {
        for (int r = 0; r <= 4; ++r) {
            const double q = integrate([=](double x) { return std::pow(x, p) * std::pow(1 - x, r); }, 0.0, 1.0,
                                       tight())
                                 .value;
            EXPECT_LT(rel_err(overlap_integral_coefficient(p, r), q), 1e-10) << p << "," << r;
        }
    }
}

TEST(AngularMoment, Examples) {
    EXPECT_DOUBLE_EQ(angular_moment(6), 5.0 / 16.0);
    EXPECT_EQ(angular_moment(0), 1.0);
    EXPECT_DOUBLE_EQ(angular_moment(4), 3.0 / 8.0);
    EXPECT_EQ(angular_moment(5), 0.0);
    EXPECT_THROW(angular_moment(-2), DomainError);
}

TEST(AngularMoment, AgainstQuadrature) {
    for (int n = 0; n <= 12; ++n) {
        const double q =
            integrate([=](double p) { return std::pow(std::cos(p), n); }, 0.0, 2 * kPi, tight()).value / (2 * kPi);
        EXPECT_NEAR(angular_moment(n), q, 1e-12) << n;
    }
}

TEST(RadialMoment, Examples) {
    EXPECT_DOUBLE_EQ(radial_moment(0, 0.5), 2 * kPi);
    for (double d : {0.3, 1.0, 7.0}) {
        const double composite = radial_moment(6, d) * angular_moment(6);
        EXPECT_LT(rel_err(composite, 5.0 * 315.0 * kPi / (128.0 * std::pow(d, 8))), 1e-14);
    }
    EXPECT_THROW(radial_moment(2, 0.0), DomainError);
    EXPECT_THROW(radial_moment(-1, 1.0), DomainError);
}

TEST(RadialMoment, AgainstQuadrature) {
    for (int n : {0, 2, 4, 6}) {
        for (double d : {0.25, 1.0, 3.0}) {
            auto f = [=](double q) {
                return q == 0.0 ? 0.0 : 2 * kPi * std::exp((n + 1) * std::log(q) - 2 * q * d);
            };
            const double q = integrate(f, 0.0, INFINITY, tight()).value;
            EXPECT_LT(rel_err(radial_moment(n, d), q), 1e-10) << n << " " << d;
        }
    }
}

// ---------------------------------------------------------------------------
// Particle near a half-space
// ---------------------------------------------------------------------------

TEST(RadiationParticle, GoldCoefficient) {
    const double A = closed_form::radiation_coefficient(47.3e-24, gold().damping_ratio(), kV);
    EXPECT_LT(rel_err(A, 1.1952374225466488e-99), 1e-12);
    EXPECT_LT(rel_err(A, 1.19e-99), 1e-2);
    EXPECT_LT(rel_err(convert({A, Unit::dyne_centimeter9}, Unit::newton_meter9).value, 1.19e-122), 1e-2);
}

TEST(RadiationParticle, CoefficientFromDensities) {
    const double B = radiation_spectral_coefficient(rubidium()).coefficient;
    const double rhoD = halfspace_weighted_coefficient(gold());
    EXPECT_LT(rel_err(closed_form::radiation_coefficient_from_densities(B, rhoD, kV),
                      closed_form::radiation_coefficient(47.3e-24, gold().damping_ratio(), kV)),
              1e-12);
}

TEST(RadiationParticle, GoldForce) {
    const auto r = force_particle_radiation(particle_scenario(Mechanism::radiation_reaction, gold(), kV, kZ0));
    EXPECT_EQ(r.force.unit, Unit::dyne);
    EXPECT_EQ(r.si().unit, Unit::newton);
    EXPECT_LT(rel_err(r.si().value, -1.1952374225466488e-50), 1e-12);
    EXPECT_LT(rel_err(r.si().value, -1.19e-50), 1e-2);
    EXPECT_TRUE(r.warnings.empty());
    EXPECT_EQ(r.exponents.velocity_power, 5);
    EXPECT_EQ(r.exponents.gap_power, 9);
}

TEST(RadiationParticle, SiliconForce) {
    const auto r = force_particle_radiation(particle_scenario(Mechanism::radiation_reaction, silicon(), kV, kZ0));
    EXPECT_LT(rel_err(r.si().value, -2.3547731253611723e-40), 1e-12);
    EXPECT_LT(rel_err(r.si().value, -2.3e-40), 5e-2);
}

TEST(RadiationParticle, RationalizedEncodingAgrees) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 500; ++i) {
        const double a0 = casifric::testing::log_uniform(rng, 1e-24, 1e-22);
        const double ratio = casifric::testing::log_uniform(rng, 1e-21, 1e-7);
        const double v = casifric::testing::log_uniform(rng, 1.0, 1e6);
        const double z0 = casifric::testing::log_uniform(rng, 1e-7, 1e-4);
        ASSERT_LT(rel_err(closed_form::radiation_particle_force_rationalized(4 * kPi * a0, ratio, v, z0),
                          closed_form::radiation_particle_force(a0, ratio, v, z0)),
                  1e-10);
    }
}

TEST(InducedParticle, SiliconForce) {
    const auto r = force_particle_induced(particle_scenario(Mechanism::induced_image, silicon(), kV, kZ0));
    EXPECT_LT(rel_err(r.si().value, -4.9984635748931484e-21), 1e-12);
    EXPECT_LT(rel_err(r.si().value, -5.0e-21), 5e-2);
    const double ratio = r.si().value / -1.3e-20;
    EXPECT_GE(ratio, 0.34);
    EXPECT_LE(ratio, 0.42);
    EXPECT_EQ(r.exponents.velocity_power, 3);
    EXPECT_EQ(r.exponents.gap_power, 10);
}

TEST(InducedParticle, CoefficientFromDensities) {
    const auto p = rubidium();
    const auto si = silicon();
    const double D1 = induced_spectral_coefficient(p, si, kZ0).coefficient;
    const double rhoD = halfspace_weighted_coefficient(si);
    EXPECT_LT(rel_err(closed_form::induced_coefficient_from_densities(D1, rhoD, kV),
                      closed_form::induced_coefficient(p.alpha0, si.damping_ratio(), kV, kZ0)),
              1e-12);
}

TEST(InducedParticle, RationalizedEncodingAgrees) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const double a0 = casifric::testing::log_uniform(rng, 1e-24, 1e-22);
        const double ratio = casifric::testing::log_uniform(rng, 1e-21, 1e-7);
        const double v = casifric::testing::log_uniform(rng, 1.0, 1e6);
        const double z0 = casifric::testing::log_uniform(rng, 1e-7, 1e-4);
        ASSERT_LT(rel_err(closed_form::induced_particle_force_rationalized(4 * kPi * a0, 1.0 / ratio, v, z0),
                          closed_form::induced_particle_force(a0, ratio, v, z0)),
                  1e-10);
    }
}

TEST(ParticleForces, VelocityDoubling) {
    const double ratio = gold().damping_ratio();
    EXPECT_LT(rel_err(closed_form::induced_particle_force(47.3e-24, ratio, 2 * kV, kZ0),
                      8 * closed_form::induced_particle_force(47.3e-24, ratio, kV, kZ0)),
              1e-14);
    EXPECT_LT(rel_err(closed_form::radiation_particle_force(47.3e-24, ratio, 2 * kV, kZ0),
                      32 * closed_form::radiation_particle_force(47.3e-24, ratio, kV, kZ0)),
              1e-14);
}

TEST(ParticleForces, SignAndZeroVelocity) {
    for (auto m : {Mechanism::radiation_reaction, Mechanism::induced_image}) {
        for (double v : {1e-3, 1.0, kV, 1e6}) {
            EXPECT_LT(friction_force(particle_scenario(m, gold(), v, kZ0, ValidityPolicy::lenient())).force.value,
                      0.0);
        }
        EXPECT_EQ(friction_force(particle_scenario(m, gold(), 0.0, kZ0)).force.value, 0.0);
    }
}

TEST(ParticleForces, OddInVelocity) {
    const double ratio = silicon().damping_ratio();
    for (double v : {1.0, 3e2, 4e5}) {
        EXPECT_EQ(closed_form::radiation_particle_force(47.3e-24, ratio, -v, kZ0),
                  -closed_form::radiation_particle_force(47.3e-24, ratio, v, kZ0));
        EXPECT_EQ(closed_form::induced_particle_force(47.3e-24, ratio, -v, kZ0),
                  -closed_form::induced_particle_force(47.3e-24, ratio, v, kZ0));
    }
}

TEST(ParticleForces, IndependentOfNumberDensity) {
    for (auto m : {Mechanism::radiation_reaction, Mechanism::induced_image}) {
        const double plain = friction_force(particle_scenario(m, gold(), kV, kZ0)).force.value;
        for (double rho : {1e18, 5.9e22, 1e25}) {
            EXPECT_EQ(friction_force(particle_scenario(m, gold().with_number_density(rho), kV, kZ0)).force.value,
                      plain);
        }
    }
}

TEST(ParticleForces, OnlyResistivityMatters) {
    for (auto m : {Mechanism::radiation_reaction, Mechanism::induced_image}) {
        const double base = friction_force(particle_scenario(m, gold(), kV, kZ0)).force.value;
        for (double k : {0.5, 3.0, 10.0}) {
            const DrudeMetal scaled("scaled", k * 1.36e16, k * k * 5.32e13);
            EXPECT_LT(rel_err(friction_force(particle_scenario(m, scaled, kV, kZ0)).force.value, base), 1e-14);
        }
    }
}

// ---------------------------------------------------------------------------
// Scaling laws over three decades
// ---------------------------------------------------------------------------

struct SlopeCase {
    bool particle;
    Mechanism mechanism;
    double gap_slope;
    double velocity_slope;
};

class ScalingLaws : public ::testing::TestWithParam<SlopeCase> {};

TEST_P(ScalingLaws, LogLogSlopes) {
    const auto c = GetParam();
    // Plate D1 is held at a fixed reference distance; see PlatePlate.InducedNetGapScaling.
    auto make = [&](double v, double gap) {
        if (c.particle) return particle_scenario(c.mechanism, gold(), v, gap, ValidityPolicy::lenient());
        auto s = plate_scenario(c.mechanism, v, gap, 1e21, D1Convention::fixed_reference);
        s.d1_reference_gap = kZ0;
        return s;
    };
    const auto gaps = log_grid(1e-7, 1e-4, 31);
    std::vector<double> fg;
    for (double g : gaps) fg.push_back(friction_force(make(kV, g)).force.value);
    EXPECT_NEAR(loglog_slope(gaps, fg), c.gap_slope, 0.01);

    const auto vs = log_grid(1e2, 1e5, 31);
    std::vector<double> fv;
    for (double v : vs) fv.push_back(friction_force(make(v, kZ0)).force.value);
    EXPECT_NEAR(loglog_slope(vs, fv), c.velocity_slope, 0.01);
}

INSTANTIATE_TEST_SUITE_P(AllConfigurations, ScalingLaws,
                         ::testing::Values(SlopeCase{true, Mechanism::radiation_reaction, -9, 5},
                                           SlopeCase{true, Mechanism::induced_image, -10, 3},
                                           SlopeCase{false, Mechanism::radiation_reaction, -8, 5},
                                           SlopeCase{false, Mechanism::induced_image, -6, 3}));

// ---------------------------------------------------------------------------
// Plate-plate
// ---------------------------------------------------------------------------

TEST(PlatePlate, RadiationIsIntegratedParticleForce) {
    for (double d : {1e-7, 1e-6, 3e-5}) {
        const auto s = plate_scenario(Mechanism::radiation_reaction, kV, d);
        const double A = closed_form::radiation_coefficient(47.3e-24, gold().damping_ratio(), kV);
        // rho1 * integral_d^inf -A z^-9 dz = -rho1 A / (8 d^8)
        const double expected = -1e21 * A / (8 * std::pow(d, 8));
        EXPECT_LT(rel_err(force_plate_plate(s).force.value, expected), 1e-12) << d;
    }
}

TEST(PlatePlate, RadiationMatchesQuadratureOfParticleForce) {
    const double d = 2e-6;
    const double ratio = gold().damping_ratio();
    auto f = [&](double y) {
        const double z = d * (1.0 + y);
        return closed_form::radiation_particle_force(47.3e-24, ratio, kV, z) * d;
    };
    const double integral = 1e21 * integrate(f, 0.0, INFINITY, tight()).value;
    EXPECT_LT(rel_err(force_plate_plate(plate_scenario(Mechanism::radiation_reaction, kV, d)).force.value, integral),
              1e-10);
}

TEST(PlatePlate, InducedConventions) {
    const double d = 2e-6;
    const double ratio = gold().damping_ratio();
    const double D1d = induced_spectral_coefficient(rubidium(), gold(), d).coefficient;
    const double rhoD = halfspace_weighted_coefficient(gold());
    // Particle force with D1 frozen at d, and with D1 following z.
    auto frozen = [&](double y) {
        const double z = d * (1.0 + y);
        return -closed_form::induced_coefficient_from_densities(D1d, rhoD, kV) / std::pow(z, 7) * d;
    };
    auto varying = [&](double y) {
        const double z = d * (1.0 + y);
        return closed_form::induced_particle_force(47.3e-24, ratio, kV, z) * d;
    };
    const double constant_case =
        force_plate_plate(plate_scenario(Mechanism::induced_image, kV, d)).force.value;
    const double varying_case =
        force_plate_plate(plate_scenario(Mechanism::induced_image, kV, d, 1e21, D1Convention::integrated_varying))
            .force.value;
    EXPECT_LT(rel_err(constant_case, 1e21 * integrate(frozen, 0.0, INFINITY, tight()).value), 1e-10);
    EXPECT_LT(rel_err(varying_case, 1e21 * integrate(varying, 0.0, INFINITY, tight()).value), 1e-10);
    EXPECT_LT(rel_err(varying_case / constant_case, 6.0 / 9.0), 1e-14);
}

// With D1 evaluated at the gap itself, its z^-3 adds to the explicit d^-6.
TEST(PlatePlate, InducedNetGapScaling) {
    const auto gaps = log_grid(1e-7, 1e-4, 31);
    std::vector<double> f;
    for (double g : gaps) f.push_back(force_plate_plate(plate_scenario(Mechanism::induced_image, kV, g)).force.value);
    EXPECT_NEAR(loglog_slope(gaps, f), -9.0, 1e-9);

    auto fixed = plate_scenario(Mechanism::induced_image, kV, 2e-6, 1e21, D1Convention::fixed_reference);
    fixed.d1_reference_gap = 2e-6;
    EXPECT_EQ(force_plate_plate(fixed).force.value,
              force_plate_plate(plate_scenario(Mechanism::induced_image, kV, 2e-6)).force.value);
    fixed.d1_reference_gap = 0.0;
    EXPECT_THROW(force_plate_plate(fixed), ConfigurationError);
}

TEST(PlatePlate, GapDoubling) {
    const double a = force_plate_plate(plate_scenario(Mechanism::radiation_reaction, kV, 1e-6)).force.value;
    const double b = force_plate_plate(plate_scenario(Mechanism::radiation_reaction, kV, 2e-6)).force.value;
    EXPECT_LT(rel_err(b, a / 256), 1e-14);
}

TEST(PlatePlate, UnitsAndExponents) {
    const auto r = force_plate_plate(plate_scenario(Mechanism::induced_image, kV, 1e-6));
    EXPECT_EQ(r.force.unit, Unit::dyne_per_cm2);
    EXPECT_EQ(r.si().unit, Unit::pascal);
    EXPECT_EQ(r.exponents.velocity_power, 3);
    EXPECT_EQ(r.exponents.gap_power, 6);
}

TEST(PlatePlate, ConfigurationErrors) {
    auto s = plate_scenario(Mechanism::radiation_reaction, kV, 1e-6);
    s.metal = gold();
    EXPECT_THROW(force_plate_plate(s), ConfigurationError);
    s = plate_scenario(Mechanism::radiation_reaction, kV, 1e-6, 0.0);
    EXPECT_THROW(force_plate_plate(s), ConfigurationError);
    EXPECT_THROW(force_plate_plate(particle_scenario(Mechanism::radiation_reaction, gold(), kV, kZ0)),
                 ConfigurationError);
}

// ---------------------------------------------------------------------------
// Validation and dispatch
// ---------------------------------------------------------------------------

TEST(ScenarioValidation, DomainErrors) {
    EXPECT_THROW(friction_force(particle_scenario(Mechanism::radiation_reaction, gold(), kV, 0.0)), DomainError);
    EXPECT_THROW(friction_force(particle_scenario(Mechanism::radiation_reaction, gold(), -1.0, kZ0)), DomainError);
}

TEST(ScenarioValidation, WindowsAreStrictByDefault) {
    // v/c above 1e-3
    EXPECT_THROW(friction_force(particle_scenario(Mechanism::radiation_reaction, gold(), 1e8, 1.0)), ValidityError);
    // v/z0 beyond nu/10 for gold
    EXPECT_THROW(friction_force(particle_scenario(Mechanism::radiation_reaction, gold(), 1e6, 1e-7)), ValidityError);
    // image series: alpha0 * 2 / (2 z0)^3 >= 1
    EXPECT_THROW(friction_force(particle_scenario(Mechanism::induced_image, gold(), 1.0, 2e-8)), ValidityError);

    auto r = friction_force(particle_scenario(Mechanism::radiation_reaction, gold(), 1e6, 1e-7,
                                              ValidityPolicy::lenient()));
    EXPECT_FALSE(r.warnings.empty());
    EXPECT_LT(r.force.value, 0.0);
}

TEST(ScenarioValidation, SiliconSkipsDrudeWindow) {
    auto r = friction_force(particle_scenario(Mechanism::induced_image, silicon(), 1e6, 1e-7));
    EXPECT_TRUE(r.warnings.empty());
}

TEST(ScenarioValidation, DispatchMismatch) {
    EXPECT_THROW(force_particle_radiation(particle_scenario(Mechanism::induced_image, gold(), kV, kZ0)),
                 ConfigurationError);
    EXPECT_THROW(force_particle_induced(particle_scenario(Mechanism::radiation_reaction, gold(), kV, kZ0)),
                 ConfigurationError);
    EXPECT_THROW(force_particle_induced(plate_scenario(Mechanism::induced_image, kV, kZ0)), ConfigurationError);
}

// ---------------------------------------------------------------------------
// Crossover
// ---------------------------------------------------------------------------

TEST(Crossover, GoldAtTenNanometres) {
    const auto c = crossover_velocity(rubidium(), gold(), kZ0);
    EXPECT_LT(rel_err(c.velocity.value, 1116028289.4657773), 1e-12);
    EXPECT_EQ(c.velocity.unit, Unit::centimeter_per_second);
    EXPECT_FALSE(c.nonrelativistic);
    EXPECT_NE(c.verdict.find("every nonrelativistic velocity"), std::string::npos);

    const double ratio = gold().damping_ratio();
    const double vs = c.velocity.value;
    EXPECT_NEAR(closed_form::radiation_particle_force(47.3e-24, ratio, vs, kZ0) /
                    closed_form::induced_particle_force(47.3e-24, ratio, vs, kZ0),
                1.0, 1e-10);
}

TEST(Crossover, InducedDominatesBelow) {
    const double ratio = gold().damping_ratio();
    for (double z0 : {1e-7, 1e-6, 1e-5, 1.0}) {
        const double vs = crossover_velocity(rubidium(), gold(), z0).velocity.value;
        for (double v : log_grid(1e-3, vs * (1 - 1e-9), 200)) {
            ASSERT_GT(std::abs(closed_form::induced_particle_force(47.3e-24, ratio, v, z0)),
                      std::abs(closed_form::radiation_particle_force(47.3e-24, ratio, v, z0)))
                << z0 << " " << v;
        }
        const double above = vs * 1.01;
        EXPECT_LT(std::abs(closed_form::induced_particle_force(47.3e-24, ratio, above, z0)),
                  std::abs(closed_form::radiation_particle_force(47.3e-24, ratio, above, z0)));
    }
}

TEST(Crossover, QuarteringGapHalvesVelocity) {
    const double a = crossover_velocity(rubidium(), silicon(), 1e-6).velocity.value;
    const double b = crossover_velocity(rubidium(), silicon(), 4e-6).velocity.value;
    EXPECT_LT(rel_err(b, a / 2), 1e-14);
}

TEST(Crossover, NonrelativisticAtLargeGap) {
    const auto c = crossover_velocity(rubidium(), gold(), 1.0);
    EXPECT_TRUE(c.nonrelativistic);
    EXPECT_NE(c.verdict.find("below v*"), std::string::npos);
    EXPECT_THROW(crossover_velocity(rubidium(), gold(), 0.0), DomainError);
}

// ---------------------------------------------------------------------------
// Literature ratios
// ---------------------------------------------------------------------------

TEST(Literature, Ratios) {
    ForceResult f;
    f.force = {-12.0, Unit::newton};
    const auto t = literature_comparison(f);
    EXPECT_EQ(t.ours.value, -12.0);
    EXPECT_EQ(t.volokitin_persson.value, -6.0);
    EXPECT_EQ(t.pendry.value, -1.0);
    EXPECT_EQ(t.barton.value, -12.0);
    EXPECT_EQ(t.barton / t.ours, 1.0);
    EXPECT_EQ(t.volokitin_persson / t.ours, 0.5);
    EXPECT_EQ(t.pendry / t.ours, 1.0 / 12.0);
    EXPECT_FALSE(t.note.empty());
}

TEST(Literature, ZeroStaysZero) {
    ForceResult f;
    f.force = {0.0, Unit::pascal};
    const auto t = literature_comparison(f);
    EXPECT_EQ(t.volokitin_persson.value, 0.0);
    EXPECT_EQ(t.pendry.value, 0.0);
    EXPECT_EQ(t.barton.value, 0.0);
}
