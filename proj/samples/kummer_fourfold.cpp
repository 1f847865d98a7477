// Discriminant degree of the Lagrangian fibration on the generalized Kummer
// four-fold K_2, computed three ways.

#include <iostream>

#include "lagfib/lagfib.hpp"

int main() {
    using namespace lagfib;

    // (b2, b3) = (7, 8)
    const FourfoldInvariants inv = invariants_from_betti({7, 8});
    std::cout << "c2^2 = " << inv.c2_squared << ", c4 = " << inv.c4 << ", sqrtAhat = " << to_string(inv.sqrt_ahat)
              << '\n';

    const PolarizationType pol({1, 3});
    std::cout << "closed form:     " << to_string(deg_delta_polarized(2, pol, inv.sqrt_ahat)) << '\n';

    const DegreeResult r = master_equation_solve({2, pol.product(), inv.sqrt_ahat, 1});
    std::cout << "master equation: " << to_string(r.deg_delta) << "  (b_theta = " << to_string(r.b_theta) << ")\n";

    std::cout << "pencil on A x P^1: " << pencil_degree(SurfaceData::abelian(2)) << '\n';
}
