#pragma once

#include "modj/real.hpp"

#include <map>
#include <string>

namespace modj {

// Element of Q(i): re + im*i with exact rational parts.
struct GaussRat {
    Rational re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRat(long v) : re(v), im(0) {}
    explicit GaussRat(const Rational& r) : re(r), im(0) {}

    static GaussRat unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    GaussRat inverse() const;  // throws on zero

    Complex to_complex() const { return {Real(re), Real(im)}; }
};

inline GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
inline GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
inline GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
inline GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
inline GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
inline bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

std::string to_string(const GaussRat& g);

// Exact scalar: finite sum of c_k * Pi^k with c_k in Q(i), k in Z.
// Pi is a formal symbol standing for the circle constant; carrying it exactly
// lets cancellations like 4*Pi^2*j + j'' be decided symbolically.
class PiScalar {
public:
    PiScalar() = default;
    explicit PiScalar(GaussRat c, int pi_power = 0) {
        if (!c.is_zero()) terms_[pi_power] = std::move(c);
    }
    explicit PiScalar(long v) : PiScalar(GaussRat(v)) {}
    explicit PiScalar(const Rational& v) : PiScalar(GaussRat(v)) {}

    static PiScalar zero() { return PiScalar(); }
    static PiScalar one() { return PiScalar(1); }
    // 2*pi*i
    static PiScalar two_pi_i() { return PiScalar(GaussRat(Rational(0), Rational(2)), 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<int, GaussRat>& terms() const { return terms_; }

    PiScalar& operator+=(const PiScalar& o);
    PiScalar& operator-=(const PiScalar& o);
    PiScalar operator*(const PiScalar& o) const;
    PiScalar operator-() const;

    // Exact inverse; only defined for single-term scalars (units of the ring).
    PiScalar inverse() const;

    PiScalar pow(unsigned n) const;

    Complex to_complex() const;  // at the current working precision

    bool operator==(const PiScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const PiScalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<int, GaussRat> terms_;
};

inline PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
inline PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }

}  // namespace modj
