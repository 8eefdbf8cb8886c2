#pragma once

#include "mfc/modular.hpp"

#include <string>
#include <vector>

namespace mfc {

ModularDatum trivial_datum();
ModularDatum sl2_level_k(long k);
ModularDatum sl2_adjoint(long p);
ModularDatum fibonacci();
ModularDatum pointed_cyclic(long p, const QuadraticForm& eta);
ModularDatum pointed_cyclic(long p, long e);

struct RhoSParameters {
    long p = 7;
    long a = 4;              // coprime to p
    int mu1 = 1, mu2 = 1;
    std::vector<int> lambda; // d-1 signs, d = (p+1)/2
    // a = -(p-1)/2 mod p, mu = +1, lambda_k = (-1)^k
    static RhoSParameters condensation(long p);
};

long legendre(long a, long p);
CycNum sqrt_pstar(long p);  // quadratic Gauss sum, squares to (-1)^((p-1)/2) p
Matrix rho_s_matrix(const RhoSParameters& params);

ModularDatum sl2_condensation_A0(long p);
// theta_X / theta_(V+-): the normalized twists for the cube root zeta_p^((p^2-1)/8)
std::vector<CycNum> condensation_twist_ratios(long p);
CycNum condensation_stated_cube_root(long p);

// Cube root of xi giving the smallest level of the normalized twists.
CycNum choose_cube_root(const ModularDatum& md);

// sl2:k, sl2-ad:p, sl2-a0:p, pointed-zp:p:e, fib, trivial
ModularDatum from_category_id(const std::string& id);

}  // namespace mfc
