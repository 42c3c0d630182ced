#include "modj/qseries.hpp"

#include <algorithm>
#include <cmath>

namespace modj {

UHPoint UHPoint::unit_i(unsigned prec) {
    ScopedPrecision work(prec);
    return {Real(0), Real(1), prec};
}

UHPoint UHPoint::rho(unsigned prec) {
    ScopedPrecision work(prec + 8);
    Real half(1);
    half /= 2;
    return {-half, sqrt(Real(3)) / 2, prec};
}

ExactSeries jet_series_exact(unsigned order, long cutoff) {
    if (order > 3) throw error("jet_series_exact: order must be 0..3");
    ExactSeries s;
    if (cutoff < -1) return s;
    auto table = TableProvider::instance().get(cutoff < 1 ? 1 : static_cast<std::size_t>(cutoff));
    // factor (2 pi i k)^order on the q^k coefficient
    PiScalar two_pi_i = PiScalar::two_pi_i();
    auto coef = [&](long k, const GaussRat& a) {
        PiScalar c(a);
        if (order > 0) {
            PiScalar kf{GaussRat(k)};
            c = c * two_pi_i.pow(order) * kf.pow(order);
        }
        return c;
    };
    s.set(-1, coef(-1, GaussRat(1)));
    if (order == 0) s.set(0, PiScalar(744));
    for (long k = 1; k <= cutoff; ++k) {
        GaussRat a{Rational(table->a(static_cast<std::size_t>(k))), Rational(0)};
        s.set(k, coef(k, a));
    }
    s.normalize();
    return s;
}

// ----- FloatSeries -----------------------------------------------------------

Real FloatSeries::coeff_abs_sum() const {
    Real acc(0);
    for (long k = s.min_exp(); k <= s.max_exp(); ++k) {
        Real w = pow(qmax, static_cast<int>(k));
        acc += abs(s.at(k)) * w;
    }
    return acc;
}

FloatSeries FloatSeries::add(const FloatSeries& o) const {
    FloatSeries r;
    r.qmax = std::min(qmax, o.qmax);
    long cutoff = std::min(s.max_exp(), o.s.max_exp());
    r.s = (s.truncated(cutoff) + o.s.truncated(cutoff));
    r.tail_bound = tail_bound + o.tail_bound;
    // dropped explicit terms join the tail
    for (const FloatSeries* f : {this, &o})
        for (long k = cutoff + 1; k <= f->s.max_exp(); ++k)
            r.tail_bound += abs(f->s.at(k)) * pow(r.qmax, static_cast<int>(k));
    r.tail_bound += pow2(-static_cast<long>(work_bits()) + 8) * (r.coeff_abs_sum() + 1);
    return r;
}

FloatSeries FloatSeries::mul(const FloatSeries& o) const {
    FloatSeries r;
    r.qmax = std::min(qmax, o.qmax);
    long cutoff = std::min(s.max_exp(), o.s.max_exp());
    Series<Complex> full = s.mul(o.s, s.max_exp() + o.s.max_exp());
    r.s = full.truncated(cutoff);
    Real sup_a = coeff_abs_sum() + tail_bound;
    Real sup_b = o.coeff_abs_sum() + o.tail_bound;
    r.tail_bound = sup_a * o.tail_bound + sup_b * tail_bound + tail_bound * o.tail_bound;
    for (long k = cutoff + 1; k <= full.max_exp(); ++k)
        r.tail_bound += abs(full.at(k)) * pow(r.qmax, static_cast<int>(k));
    r.tail_bound += pow2(-static_cast<long>(work_bits()) + 8) * (sup_a * sup_b + 1);
    return r;
}

FloatSeries FloatSeries::q_ddq() const {
    FloatSeries r;
    r.s = s.q_ddq();
    r.qmax = qmax / 2;
    long K = std::max<long>(s.max_exp(), 1);
    // Cauchy bound on the differentiated tail, valid for |q| <= qmax/2
    r.tail_bound = tail_bound * Real(K + 2) * pow2(-K + 1);
    return r;
}

Complex FloatSeries::eval(const Complex& q) const {
    if (s.is_zero()) return Complex(0L);
    Complex acc = s.at(s.max_exp());
    for (long k = s.max_exp() - 1; k >= s.min_exp(); --k) {
        acc = acc * q + s.at(k);
    }
    return acc * pow_int(q, s.min_exp());
}

FloatSeries jet_series_float(unsigned order, std::size_t K, unsigned prec, const Real& qmax) {
    if (order > 3) throw error("jet_series_float: order must be 0..3");
    if (!(qmax > 0 && qmax < 1)) throw error("jet_series_float: need 0 < qmax < 1");
    ScopedPrecision work(prec + 32);
    auto table = TableProvider::instance().get(K + 1);
    Real pi = pi_value();
    Complex tpi{Real(0), 2 * pi};  // 2 pi i
    Complex fac = pow_int(tpi, static_cast<long>(order));

    FloatSeries f;
    f.qmax = qmax;
    Real sign((order % 2 == 0) ? 1 : -1);
    f.s.set(-1, fac * Complex{sign, Real(0)});
    if (order == 0) f.s.set(0, Complex(744L));
    for (std::size_t k = 1; k <= K; ++k) {
        Real kr(static_cast<long>(k));
        Real kpow(1);
        for (unsigned t = 0; t < order; ++t) kpow *= kr;
        f.s.set(static_cast<long>(k), fac * Complex{Real(table->a(k)) * kpow, Real(0)});
    }
    // geometric tail from the first dropped term
    Real t1 = Real(table->a(K + 1)) * pow(qmax, static_cast<int>(K + 1));
    for (unsigned t = 0; t < order; ++t) t1 *= Real(static_cast<long>(K + 1));
    t1 *= pow(2 * pi, static_cast<int>(order));
    Real ratio = qmax * exp(2 * pi / sqrt(Real(static_cast<long>(K)))) *
                 pow(1 + 1 / Real(static_cast<long>(K)), static_cast<int>(order));
    if (ratio >= 1)
        throw precision_error("jet_series_float: truncation too short for qmax");
    f.tail_bound = t1 / (1 - ratio);
    return f;
}

// ----- direct evaluation ------------------------------------------------------

namespace {

struct Truncation {
    std::size_t K;
    long peak_bits;  // log2 of the largest term magnitude along the sum
};

// Picks K so that |a_K| |q|^K / (1-|q|) < 2^-(target_bits), tracking the
// largest term for cancellation headroom.
Truncation select_truncation(const Real& lq2 /* log2|q| < 0 */, long target_bits,
                             std::size_t max_terms) {
    auto& prov = TableProvider::instance();
    double l = lq2.convert_to<double>();
    if (l >= -1e-6) throw precision_error("eval_jet: |q| too close to 1");
    long peak = static_cast<long>(-l) + 1;  // the q^-1 term
    std::size_t K = 0;
    std::shared_ptr<const FourierTable> table = prov.get(64);
    double prev_bits = 1e300;
    for (std::size_t k = 1;; ++k) {
        if (k > max_terms)
            throw precision_error(
                "eval_jet: cannot reach requested precision within the table ceiling; "
                "reduce z to the fundamental domain first");
        if (k > table->size()) {
            if (table->size() >= max_terms)
                throw precision_error(
                    "eval_jet: cannot reach requested precision within the table ceiling; "
                    "reduce z to the fundamental domain first");
            table = prov.get(std::min(max_terms, table->size() * 2));
        }
        double bits = static_cast<double>(table->log2_abs(k)) + static_cast<double>(k) * l;
        peak = std::max(peak, static_cast<long>(bits) + 1);
        // stop at the first term below target once terms are shrinking
        if (bits < static_cast<double>(-target_bits) && bits <= prev_bits) {
            K = k;
            break;
        }
        prev_bits = bits;
    }
    return {K, peak};
}

}  // namespace

JetValue eval_jet(const UHPoint& z, unsigned max_order, unsigned prec, const EvalOptions& opt) {
    if (max_order > 3) throw error("eval_jet: max_order must be 0..3");
    if (prec < 53) prec = 53;
    if (z.im < Real(opt.im_floor))
        throw precision_error("eval_jet: im(z) below evaluation floor; reduce first");

    // survey pass: magnitude of q and truncation length
    long wprec = static_cast<long>(prec) + 64;
    Truncation tr{};
    {
        ScopedPrecision survey(64);
        Real ln2 = log(Real(2));
        Real lq2 = -2 * pi_value() * z.im / ln2;
        tr = select_truncation(lq2, wprec + 16, opt.max_terms);
        wprec += std::max(0L, tr.peak_bits) + 8 * static_cast<long>(max_order + 1);
        tr = select_truncation(lq2, wprec + 16, opt.max_terms);
    }

    ScopedPrecision work(static_cast<unsigned>(wprec));
    auto table = TableProvider::instance().get(tr.K);
    Real pi = pi_value();
    Real two_pi = 2 * pi;
    // q = exp(2 pi i z)
    Real mod = exp(-two_pi * z.im);
    Real ang = two_pi * z.re;
    Complex q{mod * cos(ang), mod * sin(ang)};

    std::array<Complex, 4> sums{};  // sum k^r a_k q^k, r = 0..max_order
    Complex qk(1L);
    for (std::size_t k = 1; k <= tr.K; ++k) {
        qk *= q;
        Complex term = Real(table->a(k)) * qk;
        Real kr(static_cast<long>(k));
        Real kpow(1);
        for (unsigned r = 0; r <= max_order; ++r) {
            sums[r] += kpow * term;
            kpow *= kr;
        }
    }

    Complex qinv = inv(q);
    Complex tpi{Real(0), two_pi};
    JetValue out;
    out.max_order = max_order;
    Real eps = pow2(-static_cast<long>(prec) - 8);
    for (unsigned r = 0; r <= max_order; ++r) {
        Complex v = sums[r];
        if (r == 0)
            v += qinv + Complex(744L);
        else if (r % 2 == 0)
            v += qinv;
        else
            v -= qinv;
        v = pow_int(tpi, r) * v;
        out.v[r] = CBall{v, eps * (1 + abs(v))};
    }
    return out;
}

CBall eval_jppp(const UHPoint& z, unsigned prec, const EvalOptions& opt) {
    return eval_jet(z, 3, prec, opt).v[3];
}

}  // namespace modj
