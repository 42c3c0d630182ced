#include "modj/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace modj {

const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "X";
        case Var::Y0: return "Y0";
        case Var::Y1: return "Y1";
        case Var::Y2: return "Y2";
        case Var::Z: return "Z";
        case Var::W: return "W";
        case Var::C: return "C";
        case Var::T: return "T";
    }
    return "?";
}

std::optional<Var> var_from_name(const std::string& s) {
    for (int i = 0; i < kNumVars; ++i)
        if (s == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
    return std::nullopt;
}

MultiPoly MultiPoly::constant(PiScalar c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_[Mono{}] = std::move(c);
    return p;
}

MultiPoly MultiPoly::variable(Var v, int power) {
    MultiPoly p;
    if (power < 0) throw error("MultiPoly: negative variable power");
    Mono m;
    m.set(v, power);
    p.terms_[m] = PiScalar(1);
    return p;
}

bool MultiPoly::uses(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m.deg(v) > 0) return true;
    return false;
}

std::set<Var> MultiPoly::vars_used() const {
    std::set<Var> s;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] > 0) s.insert(static_cast<Var>(i));
    return s;
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(v));
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

PiScalar MultiPoly::constant_term() const { return coeff(Mono{}); }

PiScalar MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? PiScalar() : it->second;
}

void MultiPoly::add_term(const Mono& m, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly MultiPoly::scaled(const PiScalar& s) const {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) {
        PiScalar p = c * s;
        if (!p.is_zero()) r.terms_[m] = std::move(p);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly acc = constant(1);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::map<int, MultiPoly> MultiPoly::coeffs_in(Var v) const {
    std::map<int, MultiPoly> parts;
    for (const auto& [m, c] : terms_) {
        int k = m.deg(v);
        Mono stripped = m;
        stripped.set(v, 0);
        parts[k].add_term(stripped, c);
    }
    return parts;
}

MultiPoly MultiPoly::from_coeffs_in(Var v, const std::map<int, MultiPoly>& parts) {
    MultiPoly r;
    for (const auto& [k, p] : parts) {
        MultiPoly vk = variable(v, k);
        r += p * vk;
    }
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    auto parts = coeffs_in(v);
    MultiPoly r;
    MultiPoly power = constant(1);
    int cur = 0;
    for (const auto& [k, p] : parts) {
        while (cur < k) {
            power = power * value;
            ++cur;
        }
        r += p * power;
    }
    return r;
}

MultiPoly MultiPoly::substitute_scalar(Var v, const PiScalar& value) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Mono stripped = m;
        stripped.set(v, 0);
        r.add_term(stripped, c * value.pow(static_cast<unsigned>(m.deg(v))));
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        int k = m.deg(v);
        if (k == 0) continue;
        Mono m2 = m;
        m2.set(v, k - 1);
        r.add_term(m2, c * PiScalar(k));
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw error("MultiPoly: division by zero polynomial");
    const auto& lead = *divisor.terms_.rbegin();
    if (!lead.second.is_monomial()) return std::nullopt;
    PiScalar lead_inv = lead.second.inverse();

    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (!rlead.first.divisible_by(lead.first)) return std::nullopt;
        Mono qm = rlead.first.divided_by(lead.first);
        PiScalar qc = rlead.second * lead_inv;
        MultiPoly t;
        t.terms_[qm] = qc;
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

std::string MultiPoly::str() const { return print_poly(*this); }

}  // namespace modj
