#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace modj {

// Arbitrary-precision real, variable precision (MPFR-backed).
using Real = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Requested precision cannot be achieved (point too low, table exhausted, ...).
struct precision_error : error {
    using error::error;
};
// A configured resource ceiling (table size, subdivision depth, budget) was hit.
struct resource_error : error {
    using error::error;
};
// A contour passed through (or indistinguishably close to) a zero.
struct contour_error : error {
    using error::error;
};
// An exact computation could not decide the answer at the configured depth.
struct inconclusive_error : error {
    using error::error;
};

unsigned digits10_for_bits(unsigned bits);

// Current working precision in bits (thread-wide, set by ScopedPrecision).
unsigned work_bits();

// RAII guard: sets the default MPFR precision for all Reals constructed in scope.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned bits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned prev_digits_;
    unsigned prev_bits_;
};

// pi computed at the current working precision (never cached across scopes).
Real pi_value();

// 2^e as a Real.
Real pow2(long e);

// Complex number over Real.  Hand-rolled: no MPC backend is available.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(0) {}
    explicit Complex(long v) : re(v), im(0) {}
    explicit Complex(double v) : re(v), im(0) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
inline Complex operator*(const Real& s, Complex a) {
    a.re *= s;
    a.im *= s;
    return a;
}
inline Complex operator*(Complex a, const Real& s) { return s * a; }
inline Complex operator/(Complex a, const Real& s) {
    a.re /= s;
    a.im /= s;
    return a;
}
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real abs(const Complex& z);
inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z);            // atan2(im, re), in (-pi, pi]
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);        // principal branch
Complex pow_int(Complex z, long n);    // n may be negative
Complex inv(const Complex& z);

std::string to_string(const Complex& z, unsigned digits = 0);

// Midpoint-radius enclosure used for propagated error bounds.  The radius
// arithmetic is outward-sloppy: every operation adds an ulp-scale cushion at
// the current working precision, so enclosures stay valid across rounding.
struct CBall {
    Complex mid;
    Real rad;

    CBall() : rad(0) {}
    explicit CBall(Complex m) : mid(std::move(m)), rad(0) {}
    CBall(Complex m, Real r) : mid(std::move(m)), rad(std::move(r)) {}

    bool contains_zero() const { return abs(mid) <= rad; }
};

CBall operator+(const CBall& a, const CBall& b);
CBall operator-(const CBall& a, const CBall& b);
CBall operator-(const CBall& a);
CBall operator*(const CBall& a, const CBall& b);
CBall operator*(const Complex& c, const CBall& a);
CBall pow_int(const CBall& a, long n);  // n >= 0

}  // namespace modj
