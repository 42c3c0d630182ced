#include "modj/locate.hpp"

#include "modj/contour.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace modj {
namespace locate {

// ----- regions ----------------------------------------------------------------

RegionSpec RegionSpec::disc(Complex c, Real r) {
    RegionSpec s;
    s.kind = Kind::Disc;
    s.center = std::move(c);
    s.radius = std::move(r);
    return s;
}

RegionSpec RegionSpec::rectangle(Real x0, Real x1, Real y0, Real y1) {
    RegionSpec s;
    s.kind = Kind::Rectangle;
    s.x0 = std::move(x0);
    s.x1 = std::move(x1);
    s.y0 = std::move(y0);
    s.y1 = std::move(y1);
    return s;
}

RegionSpec RegionSpec::shifted(RegionSpec base, long m, Moebius g) {
    RegionSpec s;
    s.kind = Kind::Shifted;
    s.base = std::make_shared<RegionSpec>(std::move(base));
    s.m = m;
    s.gamma = std::move(g);
    return s;
}

const RegionSpec& RegionSpec::innermost() const {
    return kind == Kind::Shifted ? base->innermost() : *this;
}

Complex RegionSpec::boundary_point(double t) const {
    switch (kind) {
        case Kind::Disc: {
            Real ang = 2 * pi_value() * Real(t);
            return center + Complex{radius * cos(ang), radius * sin(ang)};
        }
        case Kind::Rectangle: {
            // counterclockwise: bottom, right, top, left
            Real w = x1 - x0, h = y1 - y0;
            double s = t * 4;
            if (s < 1) return {x0 + w * Real(s), y0};
            if (s < 2) return {x1, y0 + h * Real(s - 1)};
            if (s < 3) return {x1 - w * Real(s - 2), y1};
            return {x0, y1 - h * Real(s - 3)};
        }
        case Kind::Shifted: return base->boundary_point(t);
    }
    throw error("RegionSpec: bad kind");
}

Complex RegionSpec::map_point(const Complex& base_pt) const {
    if (kind != Kind::Shifted) return base_pt;
    Complex w = base->map_point(base_pt);
    Complex num = Real(gamma.a) * w + Complex(Real(gamma.b));
    Complex den = Real(gamma.c) * w + Complex(Real(gamma.d));
    return num / den + Complex(Real(m));
}

std::string RegionSpec::describe() const {
    std::ostringstream os;
    os.precision(6);
    switch (kind) {
        case Kind::Disc:
            os << "disc(center=" << to_string(center, 6) << ", radius=" << radius << ")";
            break;
        case Kind::Rectangle:
            os << "rect(re in [" << x0 << "," << x1 << "], im in [" << y0 << "," << y1 << "])";
            break;
        case Kind::Shifted:
            os << base->describe() << " mapped by z -> " << m << " + " << gamma.str() << "z";
            break;
    }
    return os.str();
}

// ----- evaluation through a region map -----------------------------------------

namespace {

struct MappedValue {
    Complex w;       // final coordinates
    JetValue jet;    // jet at w
    Complex dw_dz;   // derivative of the region map at the base point
};

MappedValue jet_through(const RegionSpec& region, const UHPoint& z, unsigned max_order,
                        unsigned prec) {
    if (region.kind != RegionSpec::Kind::Shifted) {
        return {z.value(), jet_anywhere(z, max_order, prec), Complex(1L)};
    }
    MappedValue inner = jet_through(*region.base, z, max_order, prec);
    UHPoint wi = UHPoint::from(inner.w, prec);
    JetValue jet = transform_jet(region.gamma, wi, inner.jet);
    Complex den = cocycle_factor(region.gamma, inner.w);
    Complex w = act(region.gamma, inner.w) + Complex(Real(region.m));
    Complex dw = inner.dw_dz / (den * den);
    return {w, jet, dw};
}

CBall region_value(const MultiPoly& F, const RegionSpec& region, const Complex& z,
                   unsigned prec) {
    MappedValue mv = jet_through(region, UHPoint::from(z, prec), 2, prec);
    return eval_poly_at_jet(F, mv.w, mv.jet);
}

struct ValueDeriv {
    CBall v;
    Complex dv;  // d(value)/d(base z)
    Real scale;  // term-magnitude scale of the value
};

ValueDeriv region_value_deriv(const MultiPoly& F, const RegionSpec& region, const Complex& z,
                              unsigned prec) {
    MappedValue mv = jet_through(region, UHPoint::from(z, prec), 3, prec);
    auto [v, scale] = eval_poly_scaled(F, mv.w, mv.jet);
    CBall d = eval_poly_at_jet(F.derivative(Var::X), mv.w, mv.jet);
    MultiPoly fy0 = F.derivative(Var::Y0);
    if (!fy0.is_zero()) d = d + eval_poly_at_jet(fy0, mv.w, mv.jet) * mv.jet.v[1];
    MultiPoly fy1 = F.derivative(Var::Y1);
    if (!fy1.is_zero()) d = d + eval_poly_at_jet(fy1, mv.w, mv.jet) * mv.jet.v[2];
    MultiPoly fy2 = F.derivative(Var::Y2);
    if (!fy2.is_zero()) d = d + eval_poly_at_jet(fy2, mv.w, mv.jet) * mv.jet.v[3];
    return {v, d.mid * mv.dw_dz, scale};
}

WindingResult wind_region(const MultiPoly& F, const RegionSpec& region, unsigned prec) {
    ScopedPrecision work(prec + 32);
    auto fn = [&](double t) -> CBall {
        Complex z = region.boundary_point(t);
        return region_value(F, region, z, prec);
    };
    return winding_number(fn);
}

// Winding over an axis-aligned box in base coordinates of `region`.
WindingResult wind_box(const MultiPoly& F, const RegionSpec& region, const Complex& lo,
                       const Complex& hi, unsigned prec) {
    ScopedPrecision work(prec + 32);
    Real w = hi.re - lo.re, h = hi.im - lo.im;
    auto fn = [&](double t) -> CBall {
        double s = t * 4;
        Complex z;
        if (s < 1)
            z = {lo.re + w * Real(s), lo.im};
        else if (s < 2)
            z = {hi.re, lo.im + h * Real(s - 1)};
        else if (s < 3)
            z = {hi.re - w * Real(s - 2), hi.im};
        else
            z = {lo.re, hi.im - h * Real(s - 3)};
        return region_value(F, region, z, prec);
    };
    return winding_number(fn);
}

// Newton iteration in base coordinates; returns final root in final coords.
// Residuals are quoted relative to the term-magnitude scale; convergence also
// accepts the evaluation noise floor (the value ball radius).
std::optional<RootRec> newton_in_region(const MultiPoly& F, const RegionSpec& region,
                                        Complex z, unsigned prec) {
    ScopedPrecision work(prec + 32);
    // polish to just above the evaluation noise floor, well past the
    // 2^(-prec/2) contract, so downstream identities get full slack
    Real target = pow2(-static_cast<long>(prec) + 24);
    Real last_step(0);
    for (int it = 0; it < 60; ++it) {
        if (z.im <= 0) return std::nullopt;
        auto [v, dv, scale] = region_value_deriv(F, region, z, prec);
        if (abs(v.mid) < target * scale || (it > 2 && abs(v.mid) < 8 * v.rad)) {
            // certify: winding 1 on a small base disc around z
            Real rb = std::max(Real(8) * last_step, pow2(-static_cast<long>(prec) / 2 + 4));
            for (int grow = 0; grow < 4; ++grow) {
                RegionSpec cert = region;
                RegionSpec* inner = &cert;
                while (inner->kind == RegionSpec::Kind::Shifted) {
                    auto next = std::make_shared<RegionSpec>(*inner->base);
                    inner->base = next;
                    inner = const_cast<RegionSpec*>(inner->base.get());
                }
                *inner = RegionSpec::disc(z, rb);
                try {
                    WindingResult wr = wind_region(F, cert, prec);
                    if (wr.count >= 1 && wr.residual < 0.25) {
                        MappedValue mv = jet_through(region, UHPoint::from(z, prec), 2, prec);
                        Real jac = abs(mv.dw_dz);
                        return RootRec{mv.w, rb * jac * 2, (abs(v.mid) + v.rad) / scale};
                    }
                } catch (const contour_error&) {
                }
                rb *= 4;  // certification disc too tight: widen
            }
            return std::nullopt;
        }
        if (abs(dv) == 0) return std::nullopt;
        Complex step = v.mid / dv;
        Real sl = abs(step);
        if (sl > Real(1)) step = step / sl;  // damp wild steps
        z = z - step;
        last_step = abs(step);
    }
    return std::nullopt;
}

// Subdivision harvest of roots inside a base-coordinate box.
void harvest_box(const MultiPoly& F, const RegionSpec& region, Complex lo, Complex hi,
                 unsigned prec, long max_roots, std::vector<RootRec>& out, int depth = 0) {
    if (out.size() >= static_cast<std::size_t>(max_roots) || depth > 24) return;
    WindingResult wr;
    bool counted = false;
    for (int jitter = 0; jitter < 3 && !counted; ++jitter) {
        try {
            wr = wind_box(F, region, lo, hi, prec);
            counted = true;
        } catch (const contour_error&) {
            Real bump = (hi.re - lo.re) * Real(0.37e-2 * (jitter + 1));
            lo = {lo.re - bump, lo.im - bump / 2};
            hi = {hi.re + bump, hi.im + bump};
            if (lo.im <= 0) lo.im = (hi.im) / 1000;
        }
    }
    if (!counted || wr.count <= 0) return;

    double diam = (hi.re - lo.re + hi.im - lo.im).convert_to<double>();
    if (wr.count == 1 || diam < 1e-3) {
        Complex mid{(lo.re + hi.re) / 2, (lo.im + hi.im) / 2};
        auto root = newton_in_region(F, region, mid, prec);
        if (root) {
            for (const auto& r : out)
                if (abs(r.z - root->z) < r.error_radius + root->error_radius) return;
            out.push_back(*root);
            if (wr.count > 1 && diam >= 1e-6) {
                // more zeros may remain: split anyway
            } else {
                return;
            }
        } else if (wr.count == 1 && diam < 1e-6) {
            return;  // cannot refine further
        }
    }
    // split the long dimension; quarter only near-square boxes
    Real w = hi.re - lo.re, h = hi.im - lo.im;
    Complex mid{(lo.re + hi.re) / 2, (lo.im + hi.im) / 2};
    if (w > 2 * h) {
        harvest_box(F, region, lo, {mid.re, hi.im}, prec, max_roots, out, depth + 1);
        harvest_box(F, region, {mid.re, lo.im}, hi, prec, max_roots, out, depth + 1);
    } else if (h > 2 * w) {
        harvest_box(F, region, lo, {hi.re, mid.im}, prec, max_roots, out, depth + 1);
        harvest_box(F, region, {lo.re, mid.im}, hi, prec, max_roots, out, depth + 1);
    } else {
        harvest_box(F, region, lo, mid, prec, max_roots, out, depth + 1);
        harvest_box(F, region, {mid.re, lo.im}, {hi.re, mid.im}, prec, max_roots, out, depth + 1);
        harvest_box(F, region, {lo.re, mid.im}, {mid.re, hi.im}, prec, max_roots, out, depth + 1);
        harvest_box(F, region, mid, hi, prec, max_roots, out, depth + 1);
    }
}

// Newton iteration on F(z, jet z) / (z - c)^k, which removes a known zero of
// order k at c so the iteration can converge to the nearby deflated zero.
std::optional<RootRec> newton_deflated(const MultiPoly& F, const Complex& c, int k,
                                       Complex z, unsigned prec) {
    ScopedPrecision work(prec + 32);
    Real target = pow2(-static_cast<long>(prec) + 24);
    Real last_step(0);
    for (int it = 0; it < 80; ++it) {
        if (z.im <= 0) return std::nullopt;
        Complex d = z - c;
        if (abs(d) == 0) return std::nullopt;
        UHPoint zp = UHPoint::from(z, prec);
        JetValue jet = jet_anywhere(zp, 3, prec);
        auto [v, scale] = eval_poly_scaled(F, z, jet);
        CBall dv = eval_poly_at_jet(F.derivative(Var::X), z, jet);
        MultiPoly fy0 = F.derivative(Var::Y0);
        if (!fy0.is_zero()) dv = dv + eval_poly_at_jet(fy0, z, jet) * jet.v[1];
        MultiPoly fy1 = F.derivative(Var::Y1);
        if (!fy1.is_zero()) dv = dv + eval_poly_at_jet(fy1, z, jet) * jet.v[2];
        MultiPoly fy2 = F.derivative(Var::Y2);
        if (!fy2.is_zero()) dv = dv + eval_poly_at_jet(fy2, z, jet) * jet.v[3];

        // H = F/(z-c)^k: step = H/H' = F d / (F' d - k F)
        Complex denom = dv.mid * d - Real(k) * v.mid;
        if (abs(v.mid) < target * scale || (it > 2 && abs(v.mid) < 8 * v.rad)) {
            // certify: small disc around z, excluding the deflation center
            Real rb = std::max(Real(8) * last_step, pow2(-static_cast<long>(prec) / 2 + 4));
            rb = std::min(rb, abs(d) / 3);
            for (int grow = 0; grow < 4; ++grow) {
                try {
                    ZeroCertificate cc =
                        count_zeros(F, RegionSpec::disc(z, rb), prec, false);
                    if (cc.count >= 1 && cc.winding_residual < 0.25)
                        return RootRec{z, rb * 2, (abs(v.mid) + v.rad) / scale};
                } catch (const contour_error&) {
                }
                rb = std::min(Real(rb * 4), Real(abs(d) / 3));
            }
            return std::nullopt;
        }
        if (abs(denom) == 0) return std::nullopt;
        Complex step = v.mid * d / denom;
        Real sl = abs(step);
        if (sl > Real(1) / 4) step = step / (4 * sl);
        z = z - step;
        last_step = abs(step);
    }
    return std::nullopt;
}

std::pair<Complex, Complex> bounding_box(const RegionSpec& base) {
    if (base.kind == RegionSpec::Kind::Disc) {
        return {Complex{base.center.re - base.radius, base.center.im - base.radius},
                Complex{base.center.re + base.radius, base.center.im + base.radius}};
    }
    if (base.kind == RegionSpec::Kind::Rectangle) {
        return {Complex{base.x0, base.y0}, Complex{base.x1, base.y1}};
    }
    throw error("bounding_box: shifted base");
}

bool point_in_base(const RegionSpec& base, const Complex& z) {
    if (base.kind == RegionSpec::Kind::Disc) return abs(z - base.center) <= base.radius;
    if (base.kind == RegionSpec::Kind::Rectangle)
        return z.re >= base.x0 && z.re <= base.x1 && z.im >= base.y0 && z.im <= base.y1;
    return true;
}

}  // namespace

// ----- public operations --------------------------------------------------------

ZeroCertificate count_zeros(const MultiPoly& F, const RegionSpec& region, unsigned prec,
                            bool with_roots, long max_roots) {
    ZeroCertificate cert;
    cert.region = region;

    unsigned p = prec;
    RegionSpec reg = region;
    for (int attempt = 0;; ++attempt) {
        try {
            WindingResult wr = wind_region(F, reg, p);
            if (wr.residual >= 0.25) throw contour_error("winding residual too large");
            cert.count = wr.count;
            cert.winding_residual = wr.residual;
            cert.precision_used = p;
            break;
        } catch (const contour_error& e) {
            if (attempt < 3) {
                // perturb the innermost region slightly
                RegionSpec* inner = &reg;
                while (inner->kind == RegionSpec::Kind::Shifted) {
                    auto next = std::make_shared<RegionSpec>(*inner->base);
                    inner->base = next;
                    inner = const_cast<RegionSpec*>(inner->base.get());
                }
                ScopedPrecision work(p + 32);
                if (inner->kind == RegionSpec::Kind::Disc) {
                    inner->radius = inner->radius * Real(1.0 + 0.0171 * (attempt + 1));
                } else {
                    Real bump = (inner->x1 - inner->x0) * Real(0.0057 * (attempt + 1));
                    inner->x0 -= bump;
                    inner->x1 += bump;
                    inner->y1 += bump;
                }
            } else if (p < prec * 16) {
                p *= 2;  // escalate precision
            } else {
                throw contour_error(std::string("count_zeros: gave up: ") + e.what());
            }
        }
    }

    if (with_roots && cert.count > 0) {
        ScopedPrecision work(p + 32);
        const RegionSpec& base = reg.innermost();
        auto [lo, hi] = bounding_box(base);
        harvest_box(F, reg, lo, hi, p, max_roots, cert.roots);
        if (static_cast<long>(cert.roots.size()) != cert.count)
            cert.note = "harvested " + std::to_string(cert.roots.size()) + " of " +
                        std::to_string(cert.count) + " counted zeros";
    }
    return cert;
}

std::vector<ZeroCertificate> pole_shift_search(const MultiPoly& F, const UHPoint& z0, long m_lo,
                                               long m_hi, unsigned prec, bool with_roots) {
    auto parts = F.coeffs_in(Var::X);
    if (parts.size() < 2) throw error("pole_shift_search: F must depend on X");
    int n = parts.rbegin()->first;

    // pole order ell of the worst coefficient ratio at z0
    std::map<int, int> ord;
    for (const auto& [k, pk] : parts)
        if (!pk.is_zero()) ord[k] = orders::measure_order(pk, z0, 0.03, prec);
    int ell = 0;
    for (const auto& [k, o] : ord)
        if (k != n) ell = std::max(ell, ord[n] - o);
    if (ell <= 0)
        throw error("pole_shift_search: no coefficient ratio has a pole at the given point");

    // disc auto-sizing: coefficients must have no further zeros inside
    ScopedPrecision work(prec + 32);
    Real radius(1);
    radius /= 10;
    Complex c0 = z0.value();
    for (int halving = 0; halving < 10; ++halving) {
        bool clean = true;
        for (const auto& [k, pk] : parts) {
            if (pk.is_zero()) continue;
            try {
                WindingResult wr =
                    wind_region(pk, RegionSpec::disc(c0, radius), prec);
                if (wr.count != ord[k]) {
                    clean = false;
                    break;
                }
            } catch (const contour_error&) {
                clean = false;
                break;
            }
        }
        if (clean) break;
        radius /= 2;
        if (halving == 9)
            throw error("pole_shift_search: could not isolate the pole point (conflicting "
                        "nearby zero)");
    }

    // The shifted pole point z0 + m is itself a zero of F(., jet) of order
    // min_k ord(p_k) (the coefficient functions are 1-periodic, so the orders
    // measured at z0 transfer; the z-powers do not vanish there, and for
    // generic m no cross-term cancellation raises the order).  Measuring F
    // directly at the center would be fooled by the solutions, which
    // accumulate at the pole point as m grows.
    int center_ord = ord.begin()->second;
    for (const auto& [k, o] : ord) center_ord = std::min(center_ord, o);

    std::vector<ZeroCertificate> out;
    for (long m = m_lo; m <= m_hi; ++m) {
        Complex cm = c0 + Complex(Real(m));
        RegionSpec region = RegionSpec::shifted(RegionSpec::disc(c0, radius), m,
                                                Moebius::identity());
        ZeroCertificate cert = count_zeros(F, region, prec, false);
        cert.count -= center_ord;
        if (center_ord > 0)
            cert.note = "punctured: zero of order " + std::to_string(center_ord) +
                        " at the shifted pole point";
        cert.expected = ell;

        if (with_roots && cert.count > 0) {
            ScopedPrecision work2(prec + 32);
            for (int angle = 0; angle < 8 && static_cast<long>(cert.roots.size()) < cert.count;
                 ++angle) {
                Real ang = pi_value() * Real(angle) / 4;
                Complex start = cm + Complex{radius / 2 * cos(ang), radius / 2 * sin(ang)};
                auto root = newton_deflated(F, cm, center_ord, start, prec);
                if (!root) continue;
                if (abs(root->z - cm) >= radius) continue;
                bool dup = false;
                for (const auto& r : cert.roots)
                    if (abs(r.z - root->z) < r.error_radius + root->error_radius) dup = true;
                if (!dup) cert.roots.push_back(*root);
            }
            if (static_cast<long>(cert.roots.size()) != cert.count)
                cert.note += (cert.note.empty() ? "" : "; ") + std::string("harvested ") +
                             std::to_string(cert.roots.size()) + " of " +
                             std::to_string(cert.count) + " punctured zeros";
        }
        out.push_back(std::move(cert));
    }
    return out;
}

std::vector<ZeroCertificate> cusp_growth_search(const MultiPoly& F, const Moebius& g, long m_lo,
                                                long m_hi, unsigned prec, bool with_roots) {
    auto parts = F.coeffs_in(Var::X);
    if (parts.size() < 2) throw error("cusp_growth_search: F must depend on X");
    int n = parts.rbegin()->first;
    const MultiPoly& pn = parts.rbegin()->second;

    long e = 0;
    std::vector<std::pair<int, long>> growth_rates;  // (k, e_k < 0)
    for (const auto& [k, pk] : parts) {
        if (k == n || pk.is_zero()) continue;
        try {
            growth::GrowthOrder go = growth::ratio_order_in_domain(pk, pn, g);
            e = std::min(e, go.e);
            if (go.e < 0) growth_rates.emplace_back(k, go.e);
        } catch (const inconclusive_error&) {
        }
    }
    if (e >= 0)
        throw error("cusp_growth_search: no coefficient ratio has exponential growth in the "
                    "given domain");

    std::vector<ZeroCertificate> out;
    for (long m = m_lo; m <= m_hi; ++m) {
        ZeroCertificate cert;
        bool done = false;
        for (int M = 2; M <= 4 && !done; ++M) {
            ScopedPrecision work(prec + 32);
            double E0 = 1.0 / (4 * 3.14159265358979 * static_cast<double>(-e));
            Real y_lo = Real(E0) * log(Real(m));
            Real y_hi = exp(log(Real(m)) / M);
            if (!(y_lo < y_hi * Real(0.9))) {
                if (M == 2)
                    throw error("cusp_growth_search: region degenerate, m too small");
                break;
            }
            Real x0(137);
            x0 /= 1000;
            RegionSpec rect = RegionSpec::rectangle(x0, x0 + 1, y_lo, y_hi);
            rect.E0 = E0;
            rect.E1 = 4 * E0;
            rect.M = M;
            RegionSpec region = RegionSpec::shifted(rect, m, g);
            cert = count_zeros(F, region, prec, false);
            cert.expected = -e;
            if (cert.count == -e) done = true;

            if (with_roots && cert.count > 0) {
                // the sought zeros sit near the root-balance heights
                // im = (n - k) log(m) / (2 pi |e_k|); harvest a band over them
                // first, far cheaper than full-region subdivision
                Real lo_h = y_hi, hi_h = y_lo;
                for (auto [k, ek] : growth_rates) {
                    Real h = Real(n - k) * log(Real(m)) / (2 * pi_value() * Real(-ek));
                    lo_h = std::min(lo_h, h);
                    hi_h = std::max(hi_h, h);
                }
                Real b_lo = std::max(y_lo, lo_h - Real(2));
                Real b_hi = std::min(y_hi, hi_h + Real(2));
                if (b_lo < b_hi) {
                    RegionSpec band = RegionSpec::rectangle(x0, x0 + 1, b_lo, b_hi);
                    RegionSpec band_region = RegionSpec::shifted(band, m, g);
                    try {
                        ZeroCertificate bc =
                            count_zeros(F, band_region, prec, true, -e + 4);
                        cert.roots = std::move(bc.roots);
                    } catch (const error&) {
                    }
                }
                if (cert.roots.empty())
                    cert.note = "band harvest found no roots; count retained from the "
                                "full region";
            }
        }
        out.push_back(std::move(cert));
    }
    return out;
}

ZeroCertificate rouche_existence(const MultiPoly& F, const CuspTarget& u, long k_lo, long k_hi,
                                 unsigned prec) {
    polyalg::GateResult basic = polyalg::gate_hypotheses(F);
    if (F.is_zero() || (!F.uses(Var::Y0) && !F.uses(Var::Y1) && !F.uses(Var::Y2)))
        throw error("rouche_existence: F must depend on Y0, Y1 or Y2");
    (void)basic;

    if (!F.uses(Var::Y1) && !F.uses(Var::Y2)) {
        // delegated path: Newton on F(z, j(z)) from a coarse grid
        ScopedPrecision work(prec + 32);
        for (double im : {1.0, 0.9, 1.3, 1.7, 2.2}) {
            for (double re = -0.45; re < 0.5; re += 0.15) {
                RegionSpec whole = RegionSpec::disc(Complex{Real(re), Real(im)}, Real(1));
                auto root = newton_in_region(
                    F, RegionSpec::disc(Complex{Real(re), Real(im)}, Real(1)),
                    Complex{Real(re), Real(im)}, prec);
                (void)whole;
                if (root && root->z.im > 0) {
                    ZeroCertificate cert;
                    cert.region = RegionSpec::disc(root->z, root->error_radius);
                    cert.count = 1;
                    cert.winding_residual = 0;
                    cert.precision_used = prec;
                    cert.roots.push_back(*root);
                    cert.note = "delegated path (no Y1/Y2 dependence): Newton on F(z, j(z))";
                    return cert;
                }
            }
        }
        throw resource_error("rouche_existence: delegated Newton search found no root");
    }

    // main path: G = F - F(X,0,0,0) vanishes at rho; Rouche along gamma_k
    MultiPoly r_poly;
    for (const auto& [m, c] : F.terms()) {
        if (m.deg(Var::Y0) == 0 && m.deg(Var::Y1) == 0 && m.deg(Var::Y2) == 0)
            r_poly.add_term(m, c);
    }

    // H = leading coefficient of G(X, Y0, T^2 Y1, T^4 Y2) in T
    MultiPoly G = F - r_poly;
    int jd = polyalg::j_degree(G);
    MultiPoly H;
    for (const auto& [m, c] : G.terms())
        if (2 * m.deg(Var::Y1) + 4 * m.deg(Var::Y2) == jd) H.add_term(m, c);
    PiScalar u_val{GaussRat(Rational(u.num, u.den == 0 ? BigInt(1) : u.den))};
    MultiPoly H_at_u = H.substitute_scalar(Var::X, u_val);

    unsigned p = prec;
    ScopedPrecision work(p + 32);
    UHPoint rho = UHPoint::rho(p);
    Complex rho_c = rho.value();
    Real radius(8);
    radius /= 100;
    if (!H_at_u.is_zero()) {
        for (int shrink = 0; shrink < 6; ++shrink) {
            bool ok = true;
            for (int s = 0; s < 24; ++s) {
                Real ang = 2 * pi_value() * Real(s) / 24;
                Complex z = rho_c + Complex{radius * cos(ang), radius * sin(ang)};
                CBall v = eval_poly_in_j(H_at_u, UHPoint::from(z, p), p);
                if (v.contains_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
            radius /= 2;
        }
    }

    for (long k = std::max(k_lo, 0L); k <= k_hi; ++k) {
        Moebius gk = cusp_sequence(u, k);
        RegionSpec region = RegionSpec::shifted(RegionSpec::disc(rho_c, radius), 0, gk);
        ZeroCertificate cert;
        try {
            cert = count_zeros(F, region, p, true, 8);
        } catch (const contour_error&) {
            continue;
        } catch (const precision_error&) {
            continue;
        }
        if (cert.count >= 1 && !cert.roots.empty()) {
            cert.note = "rouche search at k=" + std::to_string(k) +
                        ", gamma_k=" + gk.str();
            return cert;
        }
    }
    throw resource_error("rouche_existence: budget exhausted without a certified zero");
}

std::pair<UHPoint, Real> refine_root(const MultiPoly& F, const UHPoint& z0, unsigned prec) {
    ScopedPrecision work(prec + 32);
    CBall d0 = eval_dz_poly_in_j(F, z0, prec);
    bool degenerate = d0.contains_zero();

    if (!degenerate) {
        RegionSpec id = RegionSpec::disc(z0.value(), Real(1));
        auto root = newton_in_region(F, id, z0.value(), prec);
        if (root) return {UHPoint::from(root->z, prec), root->error_radius};
        degenerate = true;  // Newton diverged: fall back
    }

    // winding-guided disc shrink around z0
    Complex center = z0.value();
    Real radius(1);
    radius /= 50;
    Real target = pow2(-static_cast<long>(prec) / 4);
    RegionSpec probe = RegionSpec::disc(center, radius);
    ZeroCertificate c0 = count_zeros(F, probe, prec, false);
    if (c0.count < 1)
        throw error("refine_root: no zero inside the fallback disc");
    while (radius > target) {
        bool advanced = false;
        Real half = radius / 2;
        for (int q = 0; q < 5; ++q) {
            Complex cand = center;
            if (q == 1) cand = center + Complex{half / 2, half / 2};
            if (q == 2) cand = center + Complex{-half / 2, half / 2};
            if (q == 3) cand = center + Complex{half / 2, -half / 2};
            if (q == 4) cand = center + Complex{-half / 2, -half / 2};
            if (cand.im - half <= 0) continue;
            try {
                ZeroCertificate cc = count_zeros(F, RegionSpec::disc(cand, half), prec, false);
                if (cc.count >= 1) {
                    center = cand;
                    radius = half;
                    advanced = true;
                    break;
                }
            } catch (const contour_error&) {
            }
        }
        if (!advanced)
            throw contour_error("refine_root: fallback subdivision stalled");
    }
    return {UHPoint::from(center, prec), radius * 2};
}

}  // namespace locate
}  // namespace modj
