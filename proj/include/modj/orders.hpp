#pragma once

#include "modj/evaluator.hpp"
#include "modj/growth.hpp"
#include "modj/polyalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modj {
namespace orders {

// Predicted vanishing order of p(z, jet(z)).
struct OrderPrediction {
    enum class Location { Unramified, EllipticRho, EllipticI, Cusp };
    Location location;
    int order = -1;    // point predictions; lower bound at non-generic conjugates
    bool generic = true;  // exact on a Zariski-dense set of conjugates
    // cusp prediction: order (-e, -M) at the cusp, 0 <= M <= M_upper
    long e = 0;
    int M = -1;
    int M_upper = -1;
};

// s = max power of (Y0 - j(tau)) dividing p; requires j(tau) not in {0, 1728}.
OrderPrediction predict_unramified(const MultiPoly& p, const PiScalar& jtau);

// nu from the T-grading at mu = 3 (rho) or mu = 2 (i); p must be Y2-free.
OrderPrediction predict_elliptic(const MultiPoly& p, bool at_rho);

// e = deg_T p(X, T Y); generic M = deg_W Gamma(p_e)(.., 1, -2 pi i, -4 pi^2).
OrderPrediction predict_cusp(const MultiPoly& p);

// Measured vanishing order of F(z, jet(z)) at tau: winding number around a
// small circle, computed after reducing tau so the series stays well above
// the evaluation floor.  Certified by winding residual < 0.25.
int measure_order(const MultiPoly& F, const UHPoint& tau, double radius, unsigned prec);

// Pole-or-growth scan of the coefficient ratios p_k / p_n (Cor-style criteria).
struct RatioReport {
    int k;
    enum class Verdict { PoleAtPoint, ExponentialGrowth, Inconclusive } verdict =
        Verdict::Inconclusive;
    Complex pole_point;   // witness for PoleAtPoint
    int pole_order = 0;
    Moebius growth_domain;  // witness for ExponentialGrowth
    long growth_e = 0;
    std::string note;
};

struct ScanResult {
    int n = -1;  // top X-degree with nonzero coefficient
    std::vector<RatioReport> reports;
    std::optional<RatioReport> first_hit;
};

ScanResult scan_ratio_criteria(const MultiPoly& F, unsigned prec = 128,
                               std::uint64_t seed = 1);

}  // namespace orders
}  // namespace modj
