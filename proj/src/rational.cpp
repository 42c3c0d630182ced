#include "modj/rational.hpp"

#include <sstream>

namespace modj {

GaussRat GaussRat::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw error("GaussRat: division by zero");
    return {re / n, -im / n};
}

std::string to_string(const GaussRat& g) {
    std::ostringstream os;
    auto rat = [](const Rational& r) {
        std::ostringstream s;
        s << r;
        return s.str();
    };
    if (g.im == 0) return rat(g.re);
    if (g.re == 0) {
        if (g.im == 1) return "i";
        if (g.im == -1) return "-i";
        return rat(g.im) + "*i";
    }
    os << rat(g.re);
    if (g.im > 0)
        os << "+" << (g.im == 1 ? "i" : rat(g.im) + "*i");
    else
        os << "-" << (g.im == -1 ? "i" : rat(-g.im) + "*i");
    return os.str();
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PiScalar PiScalar::operator*(const PiScalar& o) const {
    PiScalar r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            GaussRat p = c1 * c2;
            auto it = r.terms_.find(k1 + k2);
            if (it == r.terms_.end()) {
                if (!p.is_zero()) r.terms_[k1 + k2] = p;
            } else {
                it->second += p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

PiScalar PiScalar::operator-() const {
    PiScalar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

PiScalar PiScalar::inverse() const {
    if (terms_.size() != 1)
        throw error("PiScalar: inverse only defined for Pi-monomials, got " + str());
    const auto& [k, c] = *terms_.begin();
    PiScalar r;
    r.terms_[-k] = c.inverse();
    return r;
}

PiScalar PiScalar::pow(unsigned n) const {
    PiScalar acc = one();
    PiScalar base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Complex PiScalar::to_complex() const {
    Complex out;
    if (terms_.empty()) return out;
    Real pi = pi_value();
    for (const auto& [k, c] : terms_) {
        Real pk(1);
        long kk = k;
        Real base = pi;
        if (kk < 0) {
            base = 1 / pi;
            kk = -kk;
        }
        while (kk > 0) {
            if (kk & 1) pk *= base;
            base *= base;
            kk >>= 1;
        }
        Complex cc = c.to_complex();
        out += Complex{cc.re * pk, cc.im * pk};
    }
    return out;
}

std::string PiScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string cs = to_string(c);
        bool neg = cs.size() && cs[0] == '-';
        if (!first) os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        if (neg) cs = cs.substr(1);
        bool need_paren = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (k == 0) {
            os << (need_paren ? "(" + cs + ")" : cs);
        } else {
            if (cs == "1")
                ;  // coefficient 1 omitted
            else
                os << (need_paren ? "(" + cs + ")" : cs) << "*";
            os << "pi";
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace modj
