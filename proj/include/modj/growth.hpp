#pragma once

#include "modj/moebius.hpp"
#include "modj/multipoly.hpp"
#include "modj/qseries.hpp"

#include <functional>
#include <map>
#include <optional>

namespace modj {
namespace growth {

// Element of P[w]: sum of 1-periodic q-series times powers of w, stored as
// one exact double expansion  sum_k q^k ( sum_d coef[k][d] w^d ).
struct PeriodicPolyFunction {
    std::map<long, std::map<int, PiScalar>> coef;
    long cutoff = 0;  // exact through q^cutoff

    void add(long qexp, int wdeg, const PiScalar& c);
    bool empty_through_cutoff() const { return coef.empty(); }
};

// Order at i infinity in the stored convention: f ~ alpha * w^d * q^e.
// (The classical convention writes f ~ alpha w^{-d} q^e; that pair equals
// (e, -d) in this storage.)
struct GrowthOrder {
    long e;
    int d;
    PiScalar alpha;

    bool operator<(const GrowthOrder& o) const {
        if (e != o.e) return e < o.e;
        return d > o.d;  // larger w-growth = smaller order
    }
};

// Builds F(w, jet(w)) as an element of P[w].  F in X, Y0, Y1, Y2; X becomes w.
// Depth policy: series carried to q-order (min possible order) + guard.
PeriodicPolyFunction to_periodic(const MultiPoly& F, int guard_terms = 10);

// Leading term of the double expansion.  Throws inconclusive_error if
// every coefficient vanishes through the inspected depth.
GrowthOrder order_at_infinity(const PeriodicPolyFunction& f);

// Order of F(z, jet(z)) in the fundamental domain gamma*F at its cusp,
// computed exactly through the slash transform.
GrowthOrder order_in_domain(const MultiPoly& F, const Moebius& g, int guard_terms = 10);

// e < 0 in order_in_domain.
bool has_exponential_growth(const MultiPoly& F, const Moebius& g);

// Order of the ratio num/den in gamma*F: componentwise difference of orders.
// alpha is carried only when the denominator's alpha is invertible.
GrowthOrder ratio_order_in_domain(const MultiPoly& num, const MultiPoly& den, const Moebius& g,
                                  int guard_terms = 10);

// Heuristic numeric confirmation of a candidate order along a vertical ray.
// Returns true when |f(w)/(alpha w^d q^e) - 1| decreases below 0.1.
bool numeric_order_check(const std::function<Complex(const UHPoint&)>& f, long e, int d,
                         const Complex& alpha, unsigned prec = 128);

}  // namespace growth
}  // namespace modj
