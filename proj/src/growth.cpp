#include "modj/growth.hpp"

#include "modj/polyalg.hpp"

#include <tuple>

namespace modj {
namespace growth {

void PeriodicPolyFunction::add(long qexp, int wdeg, const PiScalar& c) {
    if (c.is_zero()) return;
    auto& row = coef[qexp];
    auto it = row.find(wdeg);
    if (it == row.end()) {
        row[wdeg] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) row.erase(it);
    }
    if (coef[qexp].empty()) coef.erase(qexp);
}

PeriodicPolyFunction to_periodic(const MultiPoly& F, int guard_terms) {
    for (Var v : F.vars_used())
        if (v != Var::X && v != Var::Y0 && v != Var::Y1 && v != Var::Y2)
            throw error("to_periodic: input must use only X, Y0, Y1, Y2");

    int max_ydeg = 0;
    for (const auto& [m, c] : F.terms())
        max_ydeg = std::max(max_ydeg, m.deg(Var::Y0) + m.deg(Var::Y1) + m.deg(Var::Y2));
    long cutoff = -static_cast<long>(max_ydeg) + guard_terms;

    ExactSeries j0 = jet_series_exact(0, cutoff + max_ydeg);
    ExactSeries j1 = jet_series_exact(1, cutoff + max_ydeg);
    ExactSeries j2 = jet_series_exact(2, cutoff + max_ydeg);

    PeriodicPolyFunction out;
    out.cutoff = cutoff;
    std::map<std::tuple<int, int, int>, ExactSeries> cache;
    cache[{0, 0, 0}] = ExactSeries(0, {PiScalar(1)});
    auto product = [&](int a, int b, int c) -> const ExactSeries& {
        auto key = std::make_tuple(a, b, c);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        ExactSeries s;
        if (c > 0)
            s = cache.at(std::make_tuple(a, b, c - 1)).mul(j2, cutoff);
        else if (b > 0)
            s = cache.at(std::make_tuple(a, b - 1, 0)).mul(j1, cutoff);
        else
            s = cache.at(std::make_tuple(a - 1, 0, 0)).mul(j0, cutoff);
        return cache.emplace(key, std::move(s)).first->second;
    };
    // fill the cache bottom-up so product() lookups always hit
    for (const auto& [m, c] : F.terms()) {
        int a = m.deg(Var::Y0), b = m.deg(Var::Y1), cc = m.deg(Var::Y2);
        for (int i = 0; i <= a; ++i) product(i, 0, 0);
        for (int i = 0; i <= b; ++i) product(a, i, 0);
        for (int i = 0; i <= cc; ++i) product(a, b, i);
        const ExactSeries& s = product(a, b, cc);
        for (long k = s.min_exp(); k <= std::min(s.max_exp(), cutoff); ++k)
            out.add(k, m.deg(Var::X), c * s.at(k));
    }
    return out;
}

GrowthOrder order_at_infinity(const PeriodicPolyFunction& f) {
    if (f.coef.empty())
        throw inconclusive_error(
            "order_at_infinity: all coefficients vanish through the inspected depth");
    const auto& [e, row] = *f.coef.begin();
    int d = row.rbegin()->first;
    return {e, d, row.rbegin()->second};
}

GrowthOrder order_in_domain(const MultiPoly& F, const Moebius& g, int guard_terms) {
    MultiPoly fg = polyalg::slash(F, g);
    GrowthOrder ord = order_at_infinity(to_periodic(fg, guard_terms));
    int n = std::max(F.degree(Var::X), 0);
    // divide by ord((cz+d)^n)
    if (g.c != 0) {
        ord.d -= n;
        ord.alpha = ord.alpha * PiScalar(GaussRat(Rational(g.c))).inverse().pow(
                                    static_cast<unsigned>(n));
    } else if (n > 0) {
        ord.alpha =
            ord.alpha * PiScalar(GaussRat(Rational(g.d))).inverse().pow(static_cast<unsigned>(n));
    }
    return ord;
}

bool has_exponential_growth(const MultiPoly& F, const Moebius& g) {
    return order_in_domain(F, g).e < 0;
}

GrowthOrder ratio_order_in_domain(const MultiPoly& num, const MultiPoly& den, const Moebius& g,
                                  int guard_terms) {
    GrowthOrder on = order_in_domain(num, g, guard_terms);
    GrowthOrder od = order_in_domain(den, g, guard_terms);
    GrowthOrder r{on.e - od.e, on.d - od.d, PiScalar(1)};
    if (od.alpha.is_monomial()) r.alpha = on.alpha * od.alpha.inverse();
    return r;
}

bool numeric_order_check(const std::function<Complex(const UHPoint&)>& f, long e, int d,
                         const Complex& alpha, unsigned prec) {
    if (abs(alpha) == 0) return false;
    ScopedPrecision work(prec + 32);
    Real x0(137);
    x0 /= 1000;
    Real prev_dev(-1);
    bool ok = true;
    for (long y : {2L, 4L, 8L}) {
        UHPoint w{x0, Real(y), prec};
        Complex wv = w.value();
        Complex q = exp(Complex{Real(0), 2 * pi_value()} * wv);
        Complex model = alpha * pow_int(wv, d) * pow_int(q, e);
        Complex val = f(w);
        Real dev = abs(val / model - Complex(1L));
        Real floor = pow2(-static_cast<long>(prec) / 2);
        if (prev_dev >= 0 && dev > prev_dev && dev > floor) ok = false;
        prev_dev = dev;
    }
    return ok && prev_dev < Real(1) / 10;
}

}  // namespace growth
}  // namespace modj
