#include "modj/orders.hpp"

#include "modj/contour.hpp"

namespace modj {
namespace orders {

OrderPrediction predict_unramified(const MultiPoly& p, const PiScalar& jtau) {
    if (jtau == PiScalar(0) || jtau == PiScalar(1728))
        throw error("predict_unramified: j(tau) in {0, 1728} is ramified; use the elliptic "
                    "prediction instead");
    if (p.is_zero()) throw error("predict_unramified: zero polynomial");
    MultiPoly divisor = MultiPoly::variable(Var::Y0) - MultiPoly::constant(jtau);
    MultiPoly q = p;
    int s = 0;
    while (q.substitute_scalar(Var::Y0, jtau).is_zero()) {
        auto next = q.divide_exact(divisor);
        if (!next) break;
        q = *next;
        ++s;
    }
    return {OrderPrediction::Location::Unramified, s, true};
}

OrderPrediction predict_elliptic(const MultiPoly& p, bool at_rho) {
    auto lead = polyalg::ramified_expansion(p, at_rho ? 3 : 2, at_rho ? 0 : 1728);
    return {at_rho ? OrderPrediction::Location::EllipticRho : OrderPrediction::Location::EllipticI,
            lead.nu, true};
}

OrderPrediction predict_cusp(const MultiPoly& p) {
    if (p.is_zero()) throw error("predict_cusp: zero polynomial");
    auto parts = polyalg::homog_decompose_cusp(p);
    int e = parts.back().first;
    const MultiPoly& pe = parts.back().second;
    MultiPoly r = polyalg::gamma_transform(pe);
    r = r.substitute_scalar(Var::Y0, PiScalar(1));
    r = r.substitute_scalar(Var::Y1, PiScalar(GaussRat(Rational(0), Rational(-2)), 1));
    r = r.substitute_scalar(Var::Y2, PiScalar(GaussRat(Rational(-4)), 2));
    OrderPrediction out{OrderPrediction::Location::Cusp, -1, true};
    out.e = e;
    out.M = r.is_zero() ? -1 : std::max(r.degree(Var::W), 0);
    out.M_upper = std::max(polyalg::gamma_transform(p).degree(Var::W), 0);
    return out;
}

namespace {

long wind_circle(const MultiPoly& G, const Complex& center, double r, unsigned prec) {
    unsigned p = prec;
    for (int attempt = 0; attempt < 8; ++attempt) {
        ScopedPrecision work(p + 32);
        Real rr(r);
        Real two_pi = 2 * pi_value();
        auto fn = [&](double t) -> CBall {
            Real ang = two_pi * Real(t);
            Complex z = center + Complex{rr * cos(ang), rr * sin(ang)};
            UHPoint zp{z.re, z.im, p};
            JetValue jet = jet_anywhere(zp, 2, p);
            return eval_poly_at_jet(G, z, jet);
        };
        try {
            WindingResult w = winding_number(fn);
            if (w.residual < 0.25) return w.count;
            p *= 2;
        } catch (const contour_error&) {
            r *= 0.93;  // nudge off a zero hugging the circle
            if (attempt >= 5) p *= 2;
        }
        if (p > prec * 16) break;
    }
    throw precision_error("measure_order: could not certify a winding count");
}

}  // namespace

int measure_order(const MultiPoly& F, const UHPoint& tau, double radius, unsigned prec) {
    if (F.is_zero()) throw error("measure_order: zero polynomial");
    Reduction red = reduce(tau);
    MultiPoly G = red.gamma.is_identity() ? F : polyalg::slash(F, red.gamma);
    // ord at tau of F(., jet) equals ord at the reduced point of the slashed
    // polynomial: the cocycle factor has no zero near the reduced point.
    Complex center = red.zred.value();

    // Order 0 is decidable from the center value alone, and the point test is
    // immune to unrelated zeros nearby.  The margin scale * 2^(-prec/2) leaves
    // room for the center itself being stored to finite precision (a special
    // point like rho carries ~2^-prec of placement error, which a nearby true
    // zero amplifies through the derivative).
    {
        ScopedPrecision work(prec + 32);
        JetValue jet = jet_anywhere(red.zred, 2, prec);
        auto [v, scale] = eval_poly_scaled(G, center, jet);
        if (abs(v.mid) > v.rad + scale * pow2(-static_cast<long>(prec) / 2)) return 0;
    }

    // The winding count sees every zero inside the circle, not only the one
    // at the center; halve the radius until the count survives three
    // consecutive halvings.  A distinct zero inside the final radius
    // (2^-30 of the start) would still be attributed to the center, so the
    // result is an upper estimate that is exact in all non-adversarial cases.
    long count = wind_circle(G, center, radius, prec);
    int stable = 0;
    for (int halving = 0; halving < 30 && stable < 3; ++halving) {
        radius /= 2;
        long next = wind_circle(G, center, radius, prec);
        if (next == count) {
            ++stable;
        } else {
            count = next;
            stable = 0;
        }
    }
    if (stable < 3)
        throw contour_error("measure_order: count never stabilized under radius halving");
    return static_cast<int>(count);
}

namespace {

// measured pole order of num/den at tau (positive when a pole exists)
int measured_pole_order(const MultiPoly& num, const MultiPoly& den, const UHPoint& tau,
                        unsigned prec) {
    int on = measure_order(den, tau, 0.04, prec);
    if (on == 0) return 0;
    int ok = measure_order(num, tau, 0.04, prec);
    return on - ok;
}

}  // namespace

ScanResult scan_ratio_criteria(const MultiPoly& F, unsigned prec, std::uint64_t seed) {
    ScanResult out;
    auto parts = F.coeffs_in(Var::X);
    if (parts.empty()) return out;
    out.n = parts.rbegin()->first;
    const MultiPoly& pn = parts.rbegin()->second;
    if (out.n == 0) return out;  // no ratios to scan

    std::mt19937_64 rng(seed);
    std::vector<Moebius> domains{Moebius::identity(), Moebius::inversion()};
    for (int t = 0; t < 4; ++t) domains.push_back(random_element(rng, 8, 12));
    std::vector<std::pair<bool, UHPoint>> elliptic{
        {true, UHPoint::rho(prec)}, {false, UHPoint::unit_i(prec)}};

    for (const auto& [k, pk] : parts) {
        if (k == out.n || pk.is_zero()) continue;
        RatioReport rep;
        rep.k = k;

        bool both_y2_free = !pk.uses(Var::Y2) && !pn.uses(Var::Y2);
        for (const auto& [at_rho, tau] : elliptic) {
            int predicted_gap = 0;
            if (both_y2_free) {
                int nu_n = predict_elliptic(pn, at_rho).order;
                int nu_k = predict_elliptic(pk, at_rho).order;
                predicted_gap = nu_n - nu_k;
                if (predicted_gap <= 0) continue;  // no pole predicted at this point
            }
            // certify (or discover, in the Y2 case) by direct measurement
            int gap = measured_pole_order(pk, pn, tau, prec);
            if (gap > 0) {
                rep.verdict = RatioReport::Verdict::PoleAtPoint;
                rep.pole_point = tau.value();
                rep.pole_order = gap;
                rep.note = at_rho ? "pole at rho" : "pole at i";
                break;
            }
            if (predicted_gap > 0) {
                // the specific point was non-generic; try random conjugates
                for (int t = 0; t < 20 && rep.verdict != RatioReport::Verdict::PoleAtPoint;
                     ++t) {
                    Moebius g = random_element(rng, 8, 20);
                    UHPoint gt = act(g, tau);
                    int ggap = measured_pole_order(pk, pn, gt, prec);
                    if (ggap > 0) {
                        rep.verdict = RatioReport::Verdict::PoleAtPoint;
                        rep.pole_point = gt.value();
                        rep.pole_order = ggap;
                        rep.note = "pole at a conjugate";
                    }
                }
                if (rep.verdict == RatioReport::Verdict::PoleAtPoint) break;
            }
        }
        if (rep.verdict == RatioReport::Verdict::Inconclusive) {
            for (const Moebius& g : domains) {
                try {
                    growth::GrowthOrder go = growth::ratio_order_in_domain(pk, pn, g);
                    if (go.e < 0) {
                        rep.verdict = RatioReport::Verdict::ExponentialGrowth;
                        rep.growth_domain = g;
                        rep.growth_e = go.e;
                        rep.note = "exponential growth in gamma*F";
                        break;
                    }
                } catch (const inconclusive_error&) {
                    // depth-limited cancellation in this domain; try the next
                }
            }
        }
        if (rep.verdict != RatioReport::Verdict::Inconclusive && !out.first_hit)
            out.first_hit = rep;
        out.reports.push_back(std::move(rep));
    }
    return out;
}

}  // namespace orders
}  // namespace modj
