#include "modj/evaluator.hpp"

namespace modj {

JetValue jet_anywhere(const UHPoint& z, unsigned max_order, unsigned prec) {
    Reduction red = reduce(UHPoint{z.re, z.im, prec});
    if (red.gamma.is_identity()) return eval_jet(red.zred, max_order, prec);
    JetValue base = eval_jet(red.zred, max_order, prec + 32);
    ScopedPrecision work(prec + 32);
    return transform_jet(red.gamma, red.zred, base);
}

CBall eval_poly_at_jet(const MultiPoly& F, const Complex& z, const JetValue& jet) {
    return eval_poly_scaled(F, z, jet).first;
}

std::pair<CBall, Real> eval_poly_scaled(const MultiPoly& F, const Complex& z,
                                        const JetValue& jet) {
    CBall zi{z};
    CBall out;
    Real scale(1);
    for (const auto& [m, c] : F.terms()) {
        CBall term{c.to_complex()};
        if (int k = m.deg(Var::X); k > 0) term = term * pow_int(zi, k);
        if (int k = m.deg(Var::Y0); k > 0) term = term * pow_int(jet.v[0], k);
        if (int k = m.deg(Var::Y1); k > 0) term = term * pow_int(jet.v[1], k);
        if (int k = m.deg(Var::Y2); k > 0) term = term * pow_int(jet.v[2], k);
        scale = std::max(scale, abs(term.mid));
        out = out + term;
    }
    return {out, scale};
}

namespace {
unsigned jet_order_needed(const MultiPoly& F) {
    unsigned n = 0;
    if (F.uses(Var::Y0)) n = std::max(n, 0u);
    if (F.uses(Var::Y1)) n = std::max(n, 1u);
    if (F.uses(Var::Y2)) n = std::max(n, 2u);
    return n;
}
}  // namespace

CBall eval_poly_in_j(const MultiPoly& F, const UHPoint& z, unsigned prec) {
    for (Var v : F.vars_used())
        if (v != Var::X && v != Var::Y0 && v != Var::Y1 && v != Var::Y2)
            throw error("eval_poly_in_j: input must use only X, Y0, Y1, Y2");
    JetValue jet = jet_anywhere(z, jet_order_needed(F), prec);
    ScopedPrecision work(prec + 32);
    return eval_poly_at_jet(F, z.value(), jet);
}

CBall eval_dz_poly_in_j(const MultiPoly& F, const UHPoint& z, unsigned prec) {
    unsigned ord = jet_order_needed(F);
    JetValue jet = jet_anywhere(z, std::min(3u, ord + 1), prec);
    ScopedPrecision work(prec + 32);
    Complex zv = z.value();
    CBall out = eval_poly_at_jet(F.derivative(Var::X), zv, jet);
    MultiPoly fy0 = F.derivative(Var::Y0);
    if (!fy0.is_zero()) out = out + eval_poly_at_jet(fy0, zv, jet) * jet.v[1];
    MultiPoly fy1 = F.derivative(Var::Y1);
    if (!fy1.is_zero()) out = out + eval_poly_at_jet(fy1, zv, jet) * jet.v[2];
    MultiPoly fy2 = F.derivative(Var::Y2);
    if (!fy2.is_zero()) out = out + eval_poly_at_jet(fy2, zv, jet) * jet.v[3];
    return out;
}

}  // namespace modj
