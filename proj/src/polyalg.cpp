#include "modj/polyalg.hpp"

namespace modj {
namespace polyalg {

namespace {

void require_xy(const MultiPoly& p, const char* who) {
    for (Var v : p.vars_used())
        if (v != Var::X && v != Var::Y0 && v != Var::Y1 && v != Var::Y2)
            throw error(std::string(who) + ": input must use only X, Y0, Y1, Y2");
}

std::vector<MultiPoly> powers_of(const MultiPoly& p, int up_to) {
    std::vector<MultiPoly> pw(static_cast<std::size_t>(up_to) + 1);
    pw[0] = MultiPoly::constant(1);
    for (int k = 1; k <= up_to; ++k) pw[static_cast<std::size_t>(k)] = pw[k - 1] * p;
    return pw;
}

}  // namespace

MultiPoly gamma_transform(const MultiPoly& p) {
    require_xy(p, "gamma_transform");
    MultiPoly w = MultiPoly::variable(Var::W);
    MultiPoly sub_y1 = w.pow(2) * MultiPoly::variable(Var::Y1);
    MultiPoly sub_y2 = w.pow(4) * MultiPoly::variable(Var::Y2) +
                       MultiPoly::constant(2) * MultiPoly::variable(Var::C) * w.pow(3) *
                           MultiPoly::variable(Var::Y1);
    auto pw1 = powers_of(sub_y1, std::max(p.degree(Var::Y1), 0));
    auto pw2 = powers_of(sub_y2, std::max(p.degree(Var::Y2), 0));

    // The two substitutions interlock (the Y2 image reintroduces Y1), so the
    // expansion is done jointly, monomial by monomial.
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Mono rest;
        rest.set(Var::Z, m.deg(Var::X));
        rest.set(Var::Y0, m.deg(Var::Y0));
        MultiPoly piece;
        piece.add_term(rest, c);
        piece = piece * pw1[static_cast<std::size_t>(m.deg(Var::Y1))];
        piece = piece * pw2[static_cast<std::size_t>(m.deg(Var::Y2))];
        out += piece;
    }
    return out;
}

MultiPoly gamma_specialize_identity(const MultiPoly& gp) {
    MultiPoly r = gp.substitute_scalar(Var::W, PiScalar(1));
    r = r.substitute_scalar(Var::C, PiScalar(0));
    return r.substitute(Var::Z, MultiPoly::variable(Var::X));
}

MultiPoly slash(const MultiPoly& p, const Moebius& g) {
    require_xy(p, "slash");
    MultiPoly gp = gamma_transform(p);
    int n = std::max(p.degree(Var::X), 0);

    MultiPoly x = MultiPoly::variable(Var::X);
    MultiPoly axb = x.scaled(PiScalar(GaussRat(Rational(g.a)))) +
                    MultiPoly::constant(PiScalar(GaussRat(Rational(g.b))));
    MultiPoly cxd = x.scaled(PiScalar(GaussRat(Rational(g.c)))) +
                    MultiPoly::constant(PiScalar(GaussRat(Rational(g.d))));
    PiScalar cs{GaussRat(Rational(g.c))};

    auto pw_axb = powers_of(axb, n);
    auto pw_cxd = powers_of(cxd, n + std::max(gp.degree(Var::W), 0));

    // (cX+d)^n Gamma(p)((aX+b)/(cX+d), cX+d, c, Y): since deg_Z Gamma(p) = n,
    // every monomial clears its denominator exactly.
    MultiPoly out;
    for (const auto& [m, coef] : gp.terms()) {
        int kz = m.deg(Var::Z);
        int kw = m.deg(Var::W);
        int kc = m.deg(Var::C);
        Mono rest = m;
        rest.set(Var::Z, 0);
        rest.set(Var::W, 0);
        rest.set(Var::C, 0);
        MultiPoly piece;
        piece.add_term(rest, coef * cs.pow(static_cast<unsigned>(kc)));
        piece = piece * pw_axb[static_cast<std::size_t>(kz)];
        piece = piece * pw_cxd[static_cast<std::size_t>(n - kz + kw)];
        out += piece;
    }
    return out;
}

int j_degree(const MultiPoly& F) {
    int d = -1;
    for (const auto& [m, c] : F.terms())
        d = std::max(d, 2 * m.deg(Var::Y1) + 4 * m.deg(Var::Y2));
    return d;
}

bool is_j_homogeneous(const MultiPoly& F) {
    int d = -2;
    for (const auto& [m, c] : F.terms()) {
        int t = 2 * m.deg(Var::Y1) + 4 * m.deg(Var::Y2);
        if (d == -2)
            d = t;
        else if (t != d)
            return false;
    }
    return true;
}

int j_order(const MultiPoly& F) {
    if (F.is_zero()) return -1;
    int d = -1;
    for (const auto& [m, c] : F.terms()) {
        int t = 2 * m.deg(Var::Y1) + 3 * m.deg(Var::Y2);
        d = (d == -1) ? t : std::min(d, t);
    }
    return d;
}

const MultiPoly& WDecomposition::at(int k) const {
    static const MultiPoly zero;
    auto it = p.find(k);
    return it == p.end() ? zero : it->second;
}

WDecomposition w_decomposition(const MultiPoly& F) {
    require_xy(F, "w_decomposition");
    WDecomposition out;
    if (F.is_zero()) return out;
    MultiPoly gf = gamma_transform(F);
    for (auto& [k, q] : gf.coeffs_in(Var::W)) {
        if (!q.is_zero()) out.p[k] = q;
    }
    out.N = out.p.rbegin()->first;
    out.k0 = out.p.begin()->first;
    if (is_j_homogeneous(F)) {
        const MultiPoly& pk0 = out.p.begin()->second;
        int lo = -1, hi = -1;
        for (const auto& [m, c] : pk0.terms()) {
            int e = m.deg(Var::Y1);
            if (lo == -1) lo = hi = e;
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        if (lo == hi) out.ell = lo;
    }
    return out;
}

std::vector<std::pair<int, MultiPoly>> homog_decompose_cusp(const MultiPoly& p) {
    require_xy(p, "homog_decompose_cusp");
    std::map<int, MultiPoly> parts;
    for (const auto& [m, c] : p.terms()) {
        int k = m.deg(Var::Y0) + m.deg(Var::Y1) + m.deg(Var::Y2);
        parts[k].add_term(m, c);
    }
    std::vector<std::pair<int, MultiPoly>> out;
    for (auto& [k, q] : parts) out.emplace_back(k, std::move(q));
    return out;
}

RamifiedLeading ramified_expansion(const MultiPoly& p, int mu, long u) {
    require_xy(p, "ramified_expansion");
    if (p.uses(Var::Y2))
        throw error(
            "ramified_expansion: input depends on Y2; the T-grading estimate breaks there "
            "(the substitution does not commute with the transform), so elliptic orders "
            "for Y2-dependent polynomials must be measured, not predicted");
    if (!((mu == 3 && u == 0) || (mu == 2 && u == 1728)))
        throw error("ramified_expansion: (mu, u) must be (3, 0) or (2, 1728)");
    if (p.is_zero()) throw error("ramified_expansion: zero polynomial");

    MultiPoly sub_y0 = MultiPoly::variable(Var::T, mu) * MultiPoly::variable(Var::Y0) +
                       MultiPoly::constant(u);
    MultiPoly sub_y1 = MultiPoly::variable(Var::T, mu - 1) * MultiPoly::variable(Var::Y1);
    MultiPoly q = p.substitute(Var::Y0, sub_y0).substitute(Var::Y1, sub_y1);

    for (const auto& [k, part] : q.coeffs_in(Var::T))
        if (!part.is_zero()) return {k, part};
    throw error("ramified_expansion: vanished identically");
}

bool specialization_check(const MultiPoly& p, const PiScalar& alpha, const PiScalar& beta) {
    require_xy(p, "specialization_check");
    if (alpha.is_zero()) throw error("specialization_check: alpha must be nonzero");
    if (!alpha.is_monomial()) throw error("specialization_check: alpha must be a unit (Pi-monomial)");

    // Move the Z slot back to X so that Z and T are free to act as U2 and U1.
    MultiPoly gp = gamma_transform(p).substitute(Var::Z, MultiPoly::variable(Var::X));
    MultiPoly u1 = MultiPoly::variable(Var::T);
    MultiPoly u2 = MultiPoly::variable(Var::Z);

    PiScalar a_inv = alpha.inverse();
    MultiPoly w_sub = u1.scaled(a_inv);
    // C -> alpha (U2 - alpha^-4 beta U1^4) / (2 U1^3), cleared of denominators
    MultiPoly c_num = (u2 - u1.pow(4).scaled(a_inv.pow(4) * beta)).scaled(alpha);
    MultiPoly c_den = u1.pow(3).scaled(PiScalar(2));

    int gc = std::max(gp.degree(Var::C), 0);
    auto pw_w = powers_of(w_sub, std::max(gp.degree(Var::W), 0));
    auto pw_cn = powers_of(c_num, gc);
    auto pw_cd = powers_of(c_den, gc);

    MultiPoly lhs;
    for (const auto& [m, coef] : gp.terms()) {
        int kc = m.deg(Var::C);
        int kw = m.deg(Var::W);
        Mono rest = m;
        rest.set(Var::C, 0);
        rest.set(Var::W, 0);
        MultiPoly piece;
        piece.add_term(rest, coef);
        piece = piece * pw_w[static_cast<std::size_t>(kw)];
        piece = piece * pw_cn[static_cast<std::size_t>(kc)];
        piece = piece * pw_cd[static_cast<std::size_t>(gc - kc)];
        lhs += piece;
    }
    lhs = lhs.substitute_scalar(Var::Y1, alpha * alpha);
    lhs = lhs.substitute_scalar(Var::Y2, beta);

    MultiPoly rhs = p.substitute(Var::Y1, u1.pow(2)).substitute(Var::Y2, u2);
    rhs = rhs * pw_cd[static_cast<std::size_t>(gc)];
    return lhs == rhs;
}

GateResult gate_hypotheses(const MultiPoly& F) {
    require_xy(F, "gate_hypotheses");
    if (F.is_zero()) return {false, "zero polynomial"};
    bool only_x = true;
    for (Var v : F.vars_used())
        if (v != Var::X) only_x = false;
    if (only_x || F.is_constant()) return {false, "polynomial lies in C[X]"};

    bool div_y0 = true, div_y1 = true;
    for (const auto& [m, c] : F.terms()) {
        if (m.deg(Var::Y0) == 0) div_y0 = false;
        if (m.deg(Var::Y1) == 0) div_y1 = false;
    }
    if (div_y0) return {false, "divisible by Y0"};
    if (div_y1) return {false, "divisible by Y1"};
    if (F.substitute_scalar(Var::Y0, PiScalar(1728)).is_zero())
        return {false, "divisible by Y0 - 1728"};
    return {true, ""};
}

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg,
                      int max_terms, bool with_pi) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expd(0, max_deg);
    std::uniform_int_distribution<long> coefd(-9, 9);
    std::uniform_int_distribution<int> pid(-1, 1);
    MultiPoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Mono m;
        int budget = max_deg;
        for (Var v : vars) {
            int e = expd(rng);
            e = std::min(e, budget);
            budget -= e;
            m.set(v, e);
        }
        long re = coefd(rng);
        long im = coefd(rng);
        if (re == 0 && im == 0) re = 1;
        int pk = with_pi ? pid(rng) : 0;
        p.add_term(m, PiScalar(GaussRat(Rational(re), Rational(im)), pk));
    }
    return p;
}

}  // namespace polyalg
}  // namespace modj
