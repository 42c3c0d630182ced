#include "modj/moebius.hpp"

#include <sstream>

namespace modj {

Moebius::Moebius(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw error("Moebius: determinant must be 1");
}

std::string Moebius::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << ";" << c << "," << d << ")";
    return os.str();
}

CuspTarget::CuspTarget(BigInt a, BigInt c) : num(std::move(a)), den(std::move(c)) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = gcd(num, den);
    if (g != 1) throw error("CuspTarget: numerator and denominator must be coprime");
    if (den == 0 && num != 1) throw error("CuspTarget: infinity is (1,0)");
}

Complex act(const Moebius& g, const Complex& z) {
    Complex num = Real(g.a) * z + Complex(Real(g.b));
    Complex den = Real(g.c) * z + Complex(Real(g.d));
    return num / den;
}

UHPoint act(const Moebius& g, const UHPoint& z) {
    ScopedPrecision work(z.prec + 16);
    Complex w = act(g, z.value());
    return UHPoint{w.re, w.im, z.prec};
}

Complex cocycle_factor(const Moebius& g, const Complex& z) {
    return Real(g.c) * z + Complex(Real(g.d));
}

Reduction reduce(const UHPoint& z) {
    unsigned prec = z.prec;
    ScopedPrecision work(prec + 32);
    Real tol = pow2(-static_cast<long>(prec) / 2);

    Complex w = z.value();
    Moebius g;  // accumulates the step product: w = g * z_original ... inverted at the end
    double imlog = std::max(0.0, -log(z.im).convert_to<double>());
    long max_steps = 10 * (1 + static_cast<long>(imlog) + 1);
    bool on_boundary = false;

    long steps = 0;
    for (;; ++steps) {
        if (steps > max_steps)
            throw precision_error("reduce: step guard exceeded, precision insufficient");
        // center the real part
        Real n = floor(w.re + Real(1) / 2);
        if (n != 0) {
            long shift;
            if (abs(n) > Real(1000000000L)) throw precision_error("reduce: translation overflow");
            shift = n.convert_to<long>();
            w.re -= Real(shift);
            g = Moebius::translation(-shift) * g;
        }
        Real r2 = norm2(w);
        if (r2 > 1 + tol) break;
        if (r2 >= 1 - tol) {
            // on the unit circle band: fold to the left half per the convention
            on_boundary = true;
            if (w.re > tol) {
                w = -inv(w);
                g = Moebius::inversion() * g;
            }
            break;
        }
        w = -inv(w);
        g = Moebius::inversion() * g;
    }
    // half-open vertical boundary: Re = 1/2 maps to Re = -1/2
    if (abs(w.re - Real(1) / 2) <= tol) {
        on_boundary = true;
        w.re -= 1;
        g = Moebius::translation(-1) * g;
    } else if (abs(w.re + Real(1) / 2) <= tol) {
        on_boundary = true;
    }
    return Reduction{UHPoint{w.re, w.im, prec}, g.inverse(), on_boundary};
}

Moebius cusp_sequence(const CuspTarget& u, long k) {
    if (u.is_infinity()) throw error("cusp_sequence: target must be a finite cusp");
    const BigInt& a = u.num;
    const BigInt& c = u.den;
    // solve a m - c l = 1
    BigInt g, m0, t0;
    mpz_gcdext(g.backend().data(), m0.backend().data(), t0.backend().data(),
               a.backend().data(), c.backend().data());
    // a*m0 + c*t0 = 1  ->  l0 = -t0
    BigInt l0 = -t0;
    // general solution: (m, l) = (m0 + t c, l0 + t a); minimize |l|, ties by |m|
    BigInt m = m0, l = l0;
    if (a != 0) {
        // t = -round(l0 / a)
        BigInt q = l0 / a;
        for (const BigInt& t : {BigInt(-q - 1), BigInt(-q), BigInt(-q + 1)}) {
            BigInt lc = l0 + t * a, mc = m0 + t * c;
            if (abs(lc) < abs(l) || (abs(lc) == abs(l) && abs(mc) < abs(m))) {
                l = lc;
                m = mc;
            }
        }
    } else {
        // l fixed; minimize |m|
        BigInt t = -m0 / c;
        for (const BigInt& tt : {BigInt(t - 1), BigInt(t), BigInt(t + 1)}) {
            BigInt mc = m0 + tt * c;
            if (abs(mc) < abs(m)) m = mc;
        }
    }
    return Moebius{a, l + k * a, c, m + k * c};
}

JetValue transform_jet(const Moebius& g, const UHPoint& z, const JetValue& jet) {
    ScopedPrecision work(z.prec + 32);
    CBall f{cocycle_factor(g, z.value())};
    Complex c2{Real(g.c) * 2, Real(0)};
    JetValue out;
    out.max_order = jet.max_order;
    out.v[0] = jet.v[0];
    if (jet.max_order >= 1) out.v[1] = pow_int(f, 2) * jet.v[1];
    if (jet.max_order >= 2)
        out.v[2] = pow_int(f, 4) * jet.v[2] + c2 * (pow_int(f, 3) * jet.v[1]);
    if (jet.max_order >= 3) {
        Complex c6{Real(g.c) * 6, Real(0)};
        Complex c6sq{Real(g.c) * Real(g.c) * 6, Real(0)};
        out.v[3] = pow_int(f, 6) * jet.v[3] + c6 * (pow_int(f, 5) * jet.v[2]) +
                   c6sq * (pow_int(f, 4) * jet.v[1]);
    }
    return out;
}

Moebius random_element(std::mt19937_64& rng, unsigned max_word_len, long max_entry) {
    std::uniform_int_distribution<int> len_dist(1, static_cast<int>(max_word_len));
    std::uniform_int_distribution<int> gen_dist(0, 3);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Moebius g;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) {
            switch (gen_dist(rng)) {
                case 0: g = g * Moebius::translation(1); break;
                case 1: g = g * Moebius::translation(-1); break;
                case 2: g = g * Moebius::inversion(); break;
                case 3: g = g * Moebius::inversion().inverse(); break;
            }
        }
        BigInt bound(max_entry);
        if (abs(g.a) <= bound && abs(g.b) <= bound && abs(g.c) <= bound && abs(g.d) <= bound)
            return g;
    }
    return Moebius::identity();
}

}  // namespace modj
