#pragma once

#include "modj/moebius.hpp"
#include "modj/multipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace modj {
namespace polyalg {

// Generic SL2(Z)-transform: Gamma(p)(Z,W,C,Y) = p(Z, Y0, W^2 Y1, W^4 Y2 + 2 C W^3 Y1).
// Input must use only X, Y0, Y1, Y2; X is renamed to Z in the output.
MultiPoly gamma_transform(const MultiPoly& p);

// Left inverse of the transform: Gamma(p)(X, 1, 0, Y) = p.
MultiPoly gamma_specialize_identity(const MultiPoly& gp);

// p^gamma(X,Y) = (cX+d)^n Gamma(p)((aX+b)/(cX+d), cX+d, c, Y), n = deg_X(p).
// Satisfies p(gz, jet(gz)) = p^gamma(z, jet(z)) / (cz+d)^n pointwise.
MultiPoly slash(const MultiPoly& p, const Moebius& g);

// deg_T of F(X, Y0, T^2 Y1, T^4 Y2); -1 for the zero polynomial.
int j_degree(const MultiPoly& F);
bool is_j_homogeneous(const MultiPoly& F);

// Maximum power of T dividing F(X, Y0, T^2 Y1, T^3 Y2).
int j_order(const MultiPoly& F);

// Gamma(F) = sum_k p_k(Z,C,Y) W^k.
struct WDecomposition {
    int N = -1;                      // j-degree = deg_W Gamma(F)
    std::map<int, MultiPoly> p;      // nonzero coefficients only
    int k0 = -1;                     // least k with p_k != 0 (= Jord(F))
    int ell = -1;                    // Y1-homogeneity exponent of p_{k0} when F is j-homogeneous
    const MultiPoly& at(int k) const;
};
WDecomposition w_decomposition(const MultiPoly& F);

// p(X, T*Y) = sum_k T^k p_k with p_k homogeneous of Y-degree k.
std::vector<std::pair<int, MultiPoly>> homog_decompose_cusp(const MultiPoly& p);

// Leading part of p(X, T^mu Y0 + u, T^(mu-1) Y1) at T = 0.  Requires p free
// of Y2 and (mu, u) in {(3, 0), (2, 1728)}.
struct RamifiedLeading {
    int nu;
    MultiPoly p_nu;
};
RamifiedLeading ramified_expansion(const MultiPoly& p, int mu, long u);

// Verifies the transform specialization identity
//   Gamma(p)(X, a^-1 U1, a (U2 - a^-4 b U1^4) / (2 U1^3), Y0, a^2, b)
//     = p(X, Y0, U1^2, U2)
// as rational functions (cleared of U1 denominators).  alpha must be a unit.
bool specialization_check(const MultiPoly& p, const PiScalar& alpha, const PiScalar& beta);

// Admissibility gate for the density pipeline: admissible iff F is not in
// C[X] and not
// divisible by Y0, Y0 - 1728, or Y1.
struct GateResult {
    bool admissible;
    std::string reason;  // empty when admissible
};
GateResult gate_hypotheses(const MultiPoly& F);

// Seeded random polynomial in the given variables, Pi-monomial coefficients.
MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg,
                      int max_terms, bool with_pi = false);

}  // namespace polyalg
}  // namespace modj
