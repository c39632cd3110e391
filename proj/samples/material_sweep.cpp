#include <cmath>
#include <cstdio>

#include "casifric/casifric.hpp"

// Plate-plate friction per area across a gap sweep, for every bundled
// material, as gnuplot-ready columns.
int main() {
    using namespace casifric;

    const OscillatorParticle rubidium{47.3e-24, 2.4142e15, "rubidium"};
    const double rho1 = 1e21;  // dilute plate, cm^-3
    const double rho2 = 5.9e22;
    const double v = 3.4e4;

    const MaterialDb db = MaterialDb::bundled();
    for (const DrudeMetal& metal : db.metals()) {
        std::printf("# %s\n# d_m  F_radiation_Pa  F_induced_Pa\n", metal.label().c_str());
        for (int i = 0; i <= 8; ++i) {
            const double d = 1e-7 * std::pow(10.0, i / 4.0);
            double f[2];
            int k = 0;
            for (Mechanism m : {Mechanism::radiation_reaction, Mechanism::induced_image}) {
                FrictionScenario s{PlatePlate{d, rho1, rho2}, v, m, rubidium, metal.with_number_density(rho2),
                                   ValidityPolicy::lenient()};
                f[k++] = friction_force(s).si().value;
            }
            std::printf("%.6e  %.6e  %.6e\n", d * 1e-2, f[0], f[1]);
        }
        std::printf("\n\n");
    }
    return 0;
}
