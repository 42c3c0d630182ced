#pragma once

#include "modj/qseries.hpp"
#include "modj/real.hpp"

#include <array>
#include <random>
#include <vector>

namespace modj {

// Element of SL2(Z).  Determinant is checked at construction.
struct Moebius {
    BigInt a, b, c, d;

    Moebius() : a(1), b(0), c(0), d(1) {}
    Moebius(BigInt a_, BigInt b_, BigInt c_, BigInt d_);

    static Moebius identity() { return {}; }
    static Moebius translation(long n) { return {BigInt(1), BigInt(n), BigInt(0), BigInt(1)}; }
    static Moebius inversion() { return {BigInt(0), BigInt(-1), BigInt(1), BigInt(0)}; }

    Moebius inverse() const { return {d, -b, -c, a}; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    bool is_translation() const { return c == 0; }

    friend Moebius operator*(const Moebius& g, const Moebius& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
                g.c * h.b + g.d * h.d};
    }
    bool operator==(const Moebius& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    std::string str() const;
};

// Cusp a/c in lowest terms; (1,0) encodes infinity.
struct CuspTarget {
    BigInt num, den;

    CuspTarget(BigInt a, BigInt c);
    static CuspTarget infinity() { return {BigInt(1), BigInt(0)}; }
    bool is_infinity() const { return den == 0; }
};

// gz = (az+b)/(cz+d)
UHPoint act(const Moebius& g, const UHPoint& z);
Complex act(const Moebius& g, const Complex& z);

// cz+d
Complex cocycle_factor(const Moebius& g, const Complex& z);

struct Reduction {
    UHPoint zred;
    Moebius gamma;      // z = gamma * zred
    bool on_boundary;   // within tolerance of the fundamental-domain boundary
};

// Reduces z into the standard fundamental domain
//   -1/2 <= Re < 1/2, |z| >= 1, (|z| = 1 -> Re <= 0),
// applied within a tolerance band of width 2^(-prec/2).
Reduction reduce(const UHPoint& z);

// Cusp-approach sequence: gamma_k = (a, l + k a; c, m + k c) with a m - c l = 1,
// |l| minimal (ties toward |m| minimal).  act(gamma_k, z) -> a/c as k grows.
Moebius cusp_sequence(const CuspTarget& u, long k);

// Jet cocycle along the action:
//   j(gz)    = j(z)
//   j'(gz)   = (cz+d)^2 j'(z)
//   j''(gz)  = (cz+d)^4 j''(z) + 2c (cz+d)^3 j'(z)
//   j'''(gz) = (cz+d)^6 j'''(z) + 6c (cz+d)^5 j''(z) + 6c^2 (cz+d)^4 j'(z)
// Components above jet.max_order are left unset.
JetValue transform_jet(const Moebius& g, const UHPoint& z, const JetValue& jet);

// Uniformly seeded random words in the two generators, rejected until all
// entries are bounded by max_entry.
Moebius random_element(std::mt19937_64& rng, unsigned max_word_len = 12, long max_entry = 20);

}  // namespace modj
