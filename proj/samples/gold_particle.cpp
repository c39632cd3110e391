// A rubidium atom 10 nm above gold at 340 m/s: both friction mechanisms,
// the quadrature cross-check and the crossover velocity.

#include <cmath>
#include <cstdio>

#include "casifric/casifric.hpp"

int main() {
    using namespace casifric;

    const OscillatorParticle rubidium{47.3e-24, 2.4142e15, "rubidium"};
    const DrudeMetal gold = MaterialDb::bundled().get("gold");
    const double z0 = 1e-6;  // cm
    const double v = 3.4e4;  // cm/s

    for (Mechanism m : {Mechanism::radiation_reaction, Mechanism::induced_image}) {
        const FrictionScenario s{ParticleHalfspace{z0}, v, m, rubidium, gold};
        const ForceResult closed = friction_force(s);
        const ForceResult numeric = force_numeric(s);
        const double diff = std::abs(closed.force.value - numeric.force.value) / std::abs(closed.force.value);
        std::printf("%-20s F = %.6e N  (v^%d, z0^-%d)  oracle rel diff %.1e\n", std::string(to_string(m)).c_str(),
                    closed.si().value, closed.exponents.velocity_power, closed.exponents.gap_power, diff);
        if (diff > 1e-8) return 1;
    }

    const CrossoverResult x = crossover_velocity(rubidium, gold, z0);
    std::printf("crossover v* = %.6e m/s\n%s\n", x.velocity.value * 1e-2, x.verdict.c_str());
    return 0;
}
