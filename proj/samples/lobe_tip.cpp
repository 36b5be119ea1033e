// lobe_tip.cpp — Prints the first Mott lobe and its tip at zero detuning,
// next to exact diagonalization of a four-site ring.

#include <cstdio>
#include <vector>

#include "jchm/jchm.hpp"

int main() {
    const std::vector<double> grid{0.0, 0.05, 0.10, 0.15, 0.19};
    const auto curve = jchm::boundary_curve(0.0, 1, grid);

    std::printf("%8s %12s %12s %12s %12s\n", "J/g", "muP ansatz", "muH ansatz", "muP ED", "muH ED");
    for (const auto& s : curve.samples) {
        jchm::ed::ChainSpec chain;
        chain.J = s.J_over_g;
        const auto ed = jchm::ed::chemical_potentials_ed(chain);
        std::printf("%8.3f %12.6f %12.6f %12.6f %12.6f\n", s.J_over_g, s.mu_upper, s.mu_lower, ed.mu_particle,
                    ed.mu_hole);
    }

    const auto tip = jchm::critical_hopping(0.0, 1);
    std::printf("lobe tip: J_c/g = %.6f, (mu - w_c)/g = %.6f\n", tip.jc_over_g, tip.mu_at_crossing);
}
