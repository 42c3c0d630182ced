#include "modj/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace modj {

// ----- printing ---------------------------------------------------------------

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Prints a Gauss rational assumed "positive" in the canonical sign convention
// (re > 0, or re == 0 and im > 0).  paren_sum: wrap a+bi sums for product use.
std::string gauss_str(const GaussRat& g, bool paren_sum) {
    if (g.im == 0) return rat_str(g.re);
    if (g.re == 0) {
        if (g.im == 1) return "i";
        return rat_str(g.im) + "*i";
    }
    std::string s = rat_str(g.re);
    if (g.im > 0)
        s += " + " + (g.im == 1 ? std::string("i") : rat_str(g.im) + "*i");
    else
        s += " - " + (g.im == -1 ? std::string("i") : rat_str(-g.im) + "*i");
    return paren_sum ? "(" + s + ")" : s;
}

bool gauss_negative(const GaussRat& g) { return g.re < 0 || (g.re == 0 && g.im < 0); }

std::string pi_pow_str(int k) {
    if (k == 1) return "pi";
    return "pi^" + std::to_string(k);
}

// One Pi-term of a coefficient, magnitude only (sign handled by caller).
std::string pi_term_str(int k, const GaussRat& g, bool with_var) {
    bool unit = (g.re == 1 && g.im == 0);
    if (k == 0) {
        if (unit && with_var) return {};
        return gauss_str(g, with_var);
    }
    if (unit) return pi_pow_str(k);
    return gauss_str(g, true) + "*" + pi_pow_str(k);
}

std::string mono_str(const Mono& m) {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        int e = m.e[i];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<Var>(i));
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

// Term = coefficient * monomial, returned with an explicit sign flag.
std::pair<bool, std::string> term_str(const PiScalar& c, const Mono& m) {
    std::string vars = mono_str(m);
    bool with_var = !vars.empty();
    bool neg = false;
    std::string cs;
    if (c.terms().size() == 1) {
        auto [k, g] = *c.terms().begin();
        if (k == 0 && !with_var && g.re != 0 && g.im != 0) {
            // lone mixed constant: parenthesize instead of splitting the sign
            cs = "(" + gauss_str(g, false) + ")";
        } else {
            GaussRat gg = g;
            if (gauss_negative(gg)) {
                neg = true;
                gg = -gg;
            }
            cs = pi_term_str(k, gg, with_var);
        }
    } else {
        // multi-term coefficient: parenthesized sum
        std::string inner;
        bool first = true;
        for (const auto& [k, g] : c.terms()) {
            GaussRat gg = g;
            bool tneg = gauss_negative(gg);
            if (tneg) gg = -gg;
            std::string piece = (k == 0) ? gauss_str(gg, true) : pi_term_str(k, gg, false);
            if (piece.empty()) piece = "1";
            if (first)
                inner += (tneg ? "-" : "") + piece;
            else
                inner += (tneg ? " - " : " + ") + piece;
            first = false;
        }
        cs = "(" + inner + ")";
    }
    std::string body;
    if (cs.empty())
        body = vars;
    else if (vars.empty())
        body = cs;
    else
        body = cs + "*" + vars;
    return {neg, body};
}

}  // namespace

std::string print_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [neg, body] = term_str(it->second, it->first);
        if (first) {
            out += (neg ? "-" : "") + body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
        first = false;
    }
    return out;
}

// ----- parsing ----------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return BigInt(s.substr(start, pos - start));
    }

    long parse_exponent() {
        skip_ws();
        bool neg = accept('-');
        BigInt v = parse_integer();
        if (v > 1000) throw parse_error("exponent too large", pos);
        long e = v.convert_to<long>();
        return neg ? -e : e;
    }

    MultiPoly parse_primary() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MultiPoly inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = parse_integer();
            if (accept('/')) {
                std::size_t dpos = pos;
                BigInt den = parse_integer();
                if (den == 0) throw parse_error("zero denominator", dpos);
                return MultiPoly::constant(PiScalar(GaussRat(Rational(num, den))));
            }
            return MultiPoly::constant(PiScalar(GaussRat(Rational(num))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos]))))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "i")
                return MultiPoly::constant(PiScalar(GaussRat::unit_i()));
            if (name == "pi") return MultiPoly::constant(PiScalar(GaussRat(1), 1));
            if (auto v = var_from_name(name)) return MultiPoly::variable(*v);
            throw parse_error("unknown symbol '" + name + "'", start);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }

    MultiPoly parse_factor() {
        std::size_t base_pos = pos;
        MultiPoly base = parse_primary();
        skip_ws();
        if (accept('^')) {
            long e = parse_exponent();
            if (e >= 0) return base.pow(static_cast<unsigned>(e));
            if (!base.is_constant())
                throw parse_error("negative power requires a constant base", base_pos);
            PiScalar c = base.constant_term();
            if (!c.is_monomial())
                throw parse_error("negative power requires an invertible constant", base_pos);
            return MultiPoly::constant(c.inverse().pow(static_cast<unsigned>(-e)));
        }
        return base;
    }

    MultiPoly parse_term() {
        MultiPoly r = parse_factor();
        while (accept('*')) r = r * parse_factor();
        return r;
    }

    MultiPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        MultiPoly r = parse_term();
        if (neg) r = -r;
        for (;;) {
            skip_ws();
            if (accept('+'))
                r += parse_term();
            else if (accept('-'))
                r -= parse_term();
            else
                break;
        }
        return r;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text) {
    Parser p(text);
    MultiPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    return r;
}

}  // namespace modj
