#pragma once

#include "modj/evaluator.hpp"
#include "modj/orders.hpp"

#include <memory>
#include <string>
#include <vector>

namespace modj {
namespace locate {

// Search region.  A Shifted region maps a base region by z -> m + gamma z;
// contours are always sampled in the base coordinates, where the series
// evaluation is well conditioned, and transported by the jet cocycle.
struct RegionSpec {
    enum class Kind { Disc, Rectangle, Shifted };
    Kind kind = Kind::Disc;

    Complex center;  // disc
    Real radius;

    Real x0, x1, y0, y1;  // rectangle

    std::shared_ptr<const RegionSpec> base;  // shifted
    long m = 0;
    Moebius gamma;
    double E0 = 0;  // rectangle growth parameters, kept for reporting
    double E1 = 0;
    int M = 0;

    static RegionSpec disc(Complex c, Real r);
    static RegionSpec rectangle(Real x0, Real x1, Real y0, Real y1);
    static RegionSpec shifted(RegionSpec base, long m, Moebius g);

    // Point of H for boundary parameter t in [0,1), in base coordinates.
    Complex boundary_point(double t) const;
    // Final coordinates of a base point (applies shift maps outward).
    Complex map_point(const Complex& base_pt) const;
    const RegionSpec& innermost() const;

    std::string describe() const;
};

struct RootRec {
    Complex z;          // final coordinates
    Real error_radius;
    Real residual;      // |F(z, jet z)|
};

struct ZeroCertificate {
    RegionSpec region;
    long count = 0;
    double winding_residual = 1;
    std::vector<RootRec> roots;
    unsigned precision_used = 0;
    long expected = -1;  // -1 when the search carries no prediction
    std::string note;
};

// Counts zeros of F(w, jet w) for w in the (mapped) region via the argument
// principle; with_roots also isolates and Newton-refines them.
ZeroCertificate count_zeros(const MultiPoly& F, const RegionSpec& region, unsigned prec,
                            bool with_roots = false, long max_roots = 16);

// Pole-shift search: discs m + D around a pole z0 of a coefficient ratio.
std::vector<ZeroCertificate> pole_shift_search(const MultiPoly& F, const UHPoint& z0, long m_lo,
                                               long m_hi, unsigned prec, bool with_roots = true);

// Growth-rectangle search: regions m + gamma * Xi_m under the cusp of the
// fundamental domain gamma * F.
std::vector<ZeroCertificate> cusp_growth_search(const MultiPoly& F, const Moebius& g, long m_lo,
                                                long m_hi, unsigned prec, bool with_roots = true);

// Rouche existence search along a cusp-approach sequence; returns the first
// certificate containing a refined root.
ZeroCertificate rouche_existence(const MultiPoly& F, const CuspTarget& u, long k_lo, long k_hi,
                                 unsigned prec);

// Newton refinement with certified error radius (winding count 1 on the
// final disc).  Falls back to winding-guided disc shrinking when the
// derivative is degenerate at the start point.
std::pair<UHPoint, Real> refine_root(const MultiPoly& F, const UHPoint& z0, unsigned prec);

}  // namespace locate
}  // namespace modj
