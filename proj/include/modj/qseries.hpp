#pragma once

#include "modj/fourier.hpp"
#include "modj/rational.hpp"
#include "modj/real.hpp"

#include <array>
#include <vector>

namespace modj {

// Point of the complex upper half-plane with its working precision in bits.
struct UHPoint {
    Real re, im;
    unsigned prec;

    UHPoint(Real r, Real i, unsigned p) : re(std::move(r)), im(std::move(i)), prec(p) {
        if (im <= 0) throw error("UHPoint: im(z) must be positive");
    }

    Complex value() const { return {re, im}; }

    static UHPoint from(const Complex& z, unsigned p) { return {z.re, z.im, p}; }
    static UHPoint unit_i(unsigned prec);
    static UHPoint rho(unsigned prec);  // exp(2 pi i/3) = -1/2 + sqrt(3)/2 i
};

// Truncated Laurent series sum_{k=m0}^{K} c_k q^k over an exact or floating
// coefficient domain.  Normalized: the coefficient at m0 is nonzero (exact
// domain); an empty series represents 0.
template <class Coef>
class Series {
public:
    Series() : m0_(0) {}
    Series(long m0, std::vector<Coef> coeffs) : m0_(m0), coeffs_(std::move(coeffs)) {}

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return m0_; }
    long max_exp() const { return m0_ + static_cast<long>(coeffs_.size()) - 1; }

    const Coef& at(long k) const {
        static const Coef zero{};
        if (k < m0_ || k > max_exp()) return zero;
        return coeffs_[static_cast<std::size_t>(k - m0_)];
    }

    void set(long k, Coef v) {
        if (k < m0_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(m0_ - k), Coef{});
            m0_ = k;
        } else if (k > max_exp()) {
            coeffs_.resize(static_cast<std::size_t>(k - m0_) + 1, Coef{});
        }
        coeffs_[static_cast<std::size_t>(k - m0_)] = std::move(v);
    }

    // Drop terms with exponent > cutoff.
    Series truncated(long cutoff) const {
        Series r = *this;
        if (r.max_exp() > cutoff) {
            long keep = cutoff - r.m0_ + 1;
            if (keep <= 0)
                r.coeffs_.clear();
            else
                r.coeffs_.resize(static_cast<std::size_t>(keep));
        }
        r.normalize();
        return r;
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.front() == Coef{}) {
            coeffs_.erase(coeffs_.begin());
            ++m0_;
        }
        while (!coeffs_.empty() && coeffs_.back() == Coef{}) coeffs_.pop_back();
        if (coeffs_.empty()) m0_ = 0;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r = a;
        for (long k = b.m0_; k <= b.max_exp(); ++k) {
            Coef c = r.at(k);
            c += b.at(k);
            r.set(k, std::move(c));
        }
        r.normalize();
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    // Product truncated at 'cutoff' (both operands assumed valid to cutoff).
    Series mul(const Series& b, long cutoff) const {
        Series r;
        if (is_zero() || b.is_zero()) return r;
        r.m0_ = m0_ + b.m0_;
        long top = std::min(cutoff, max_exp() + b.max_exp());
        if (top < r.m0_) return Series();
        r.coeffs_.assign(static_cast<std::size_t>(top - r.m0_) + 1, Coef{});
        for (long i = m0_; i <= max_exp(); ++i) {
            if (at(i) == Coef{}) continue;
            for (long j = b.m0_; j <= b.max_exp() && i + j <= top; ++j) {
                Coef p = at(i) * b.at(j);
                std::size_t idx = static_cast<std::size_t>(i + j - r.m0_);
                r.coeffs_[idx] += p;
            }
        }
        r.normalize();
        return r;
    }

    // q * d/dq: multiplies the q^k coefficient by k.
    Series q_ddq() const {
        Series r = *this;
        for (long k = r.m0_; k <= r.max_exp(); ++k) {
            Coef c = r.at(k);
            r.set(k, c * Coef(k));
        }
        r.normalize();
        return r;
    }

    Series scaled(const Coef& s) const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        r.normalize();
        return r;
    }

    bool operator==(const Series& o) const { return m0_ == o.m0_ && coeffs_ == o.coeffs_; }

private:
    long m0_;
    std::vector<Coef> coeffs_;
};

using ExactSeries = Series<PiScalar>;

// q-expansion of the order-th derivative of j over the exact ring, carried to
// q^cutoff inclusive.  order in 0..3.
ExactSeries jet_series_exact(unsigned order, long cutoff);

// Floating q-series with a certified tail bound:
//   |f(q) - sum_{m0..K} c_k q^k| <= tail_bound   whenever |q| <= qmax.
struct FloatSeries {
    Series<Complex> s;
    Real tail_bound;
    Real qmax;

    FloatSeries add(const FloatSeries& o) const;
    FloatSeries mul(const FloatSeries& o) const;
    FloatSeries q_ddq() const;  // halves qmax to keep the tail summable
    Complex eval(const Complex& q) const;
    Real coeff_abs_sum() const;  // sum |c_k| qmax^k, a sup bound on the main part
};

// Float-domain q-expansion of the order-th derivative of j with K stored terms
// (exponents -1..K), valid for |q| <= qmax.
FloatSeries jet_series_float(unsigned order, std::size_t K, unsigned prec, const Real& qmax);

// ----- direct evaluation ----------------------------------------------------

struct JetValue {
    std::array<CBall, 4> v;  // j, j', j'', j''' (entries beyond max_order unset)
    unsigned max_order = 0;
};

struct EvalOptions {
    double im_floor = 0.05;   // below this, callers must reduce first
    std::size_t max_terms = FourierTable::kDefaultMaxTerms;
};

// Evaluates j and its derivatives up to max_order (0..3) at z with certified
// error balls.  Throws precision_error when im(z) is under the floor or the
// coefficient table cannot reach the required truncation.
JetValue eval_jet(const UHPoint& z, unsigned max_order, unsigned prec,
                  const EvalOptions& opt = {});

// j'''(z), from the differentiated q-series (not from the ODE).
CBall eval_jppp(const UHPoint& z, unsigned prec, const EvalOptions& opt = {});

}  // namespace modj
