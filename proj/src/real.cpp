#include "modj/real.hpp"

#include <cmath>
#include <sstream>

namespace modj {

namespace {
thread_local unsigned t_work_bits = 128;
}

unsigned digits10_for_bits(unsigned bits) {
    // 1 bit ~ log10(2) digits; round up and pad one digit.
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

unsigned work_bits() { return t_work_bits; }

ScopedPrecision::ScopedPrecision(unsigned bits) {
    if (bits < 53) bits = 53;
    prev_digits_ = Real::default_precision();
    prev_bits_ = t_work_bits;
    Real::default_precision(digits10_for_bits(bits));
    t_work_bits = bits;
}

ScopedPrecision::~ScopedPrecision() {
    Real::default_precision(prev_digits_);
    t_work_bits = prev_bits_;
}

Real pi_value() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real pow2(long e) {
    Real r(1);
    return ldexp(r, static_cast<int>(e));
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
    Complex r = a;
    r *= b;
    return r;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

Complex operator/(const Complex& a, const Complex& b) {
    Complex r = a;
    r /= b;
    return r;
}

Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex sqrt(const Complex& z) {
    Real r = abs(z);
    if (r == 0) return Complex(0L);
    // principal branch via half-angle
    Real a = sqrt((r + z.re) / 2);
    Real b = sqrt((r - z.re) / 2);
    if (z.im < 0) b = -b;
    return {a, b};
}

Complex inv(const Complex& z) {
    Real d = norm2(z);
    return {z.re / d, -z.im / d};
}

Complex pow_int(Complex z, long n) {
    if (n < 0) {
        z = inv(z);
        n = -n;
    }
    Complex acc(1L);
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

std::string to_string(const Complex& z, unsigned digits) {
    std::ostringstream os;
    if (digits) os.precision(digits);
    os << z.re;
    if (z.im >= 0)
        os << "+" << z.im << "i";
    else
        os << z.im << "i";
    return os.str();
}

namespace {
// Outward cushion: a few ulps of the magnitude at working precision.
Real slop(const Complex& m) {
    return (abs(m) + 1) * pow2(-static_cast<long>(t_work_bits) + 4);
}
}  // namespace

CBall operator+(const CBall& a, const CBall& b) {
    Complex m = a.mid + b.mid;
    return {m, a.rad + b.rad + slop(m)};
}

CBall operator-(const CBall& a, const CBall& b) {
    Complex m = a.mid - b.mid;
    return {m, a.rad + b.rad + slop(m)};
}

CBall operator-(const CBall& a) { return {-a.mid, a.rad}; }

CBall operator*(const CBall& a, const CBall& b) {
    Complex m = a.mid * b.mid;
    Real r = abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad + slop(m);
    return {m, r};
}

CBall operator*(const Complex& c, const CBall& a) {
    Complex m = c * a.mid;
    return {m, abs(c) * a.rad + slop(m)};
}

CBall pow_int(const CBall& a, long n) {
    CBall acc{Complex(1L)};
    CBall base = a;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

}  // namespace modj
