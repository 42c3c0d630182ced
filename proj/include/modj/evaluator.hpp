#pragma once

#include "modj/moebius.hpp"
#include "modj/multipoly.hpp"
#include "modj/qseries.hpp"

namespace modj {

// Jet of (j, j', j'', j''') at any point of H: the point is reduced to the
// standard fundamental domain, the q-series is evaluated there, and the jet
// is transported back along the cocycle.  This keeps the series argument at
// im >= sqrt(3)/2 regardless of the input height.
JetValue jet_anywhere(const UHPoint& z, unsigned max_order, unsigned prec);

// F(z, j(z), j'(z), j''(z)) with a propagated error ball.  F in X,Y0,Y1,Y2.
CBall eval_poly_in_j(const MultiPoly& F, const UHPoint& z, unsigned prec);

// Same value from an already computed jet (avoids re-reduction on contours).
CBall eval_poly_at_jet(const MultiPoly& F, const Complex& z, const JetValue& jet);

// Value plus the term-magnitude scale max(1, sum |c_m z^a j^b ...|).  Residuals
// quoted relative to this scale are meaningful even where the monomials are
// astronomically large (high in the cusp regions).
std::pair<CBall, Real> eval_poly_scaled(const MultiPoly& F, const Complex& z,
                                        const JetValue& jet);

// d/dz F(z, jet(z)) = F_X + F_Y0 j' + F_Y1 j'' + F_Y2 j'''.
CBall eval_dz_poly_in_j(const MultiPoly& F, const UHPoint& z, unsigned prec);

}  // namespace modj
