#pragma once

#include "modj/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace modj {

// Variable universe.  X is the upper-half-plane coordinate; Y0, Y1, Y2 carry
// j, j', j''; Z, W, C are the generic-transform slots; T the grading variable.
enum class Var : int { X = 0, Y0, Y1, Y2, Z, W, C, T };
constexpr int kNumVars = 8;
const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& s);

struct Mono {
    std::array<std::int16_t, kNumVars> e{};

    int deg(Var v) const { return e[static_cast<int>(v)]; }
    void set(Var v, int k) { e[static_cast<int>(v)] = static_cast<std::int16_t>(k); }
    int total() const {
        int t = 0;
        for (auto x : e) t += x;
        return t;
    }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
        return r;
    }
    bool divisible_by(const Mono& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }
    Mono divided_by(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
        return r;
    }
    auto operator<=>(const Mono&) const = default;
};

// Sparse multivariate polynomial over Q(i)[Pi, Pi^-1].  No zero coefficients
// are stored; value semantics throughout.
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly zero() { return {}; }
    static MultiPoly constant(PiScalar c);
    static MultiPoly constant(long c) { return constant(PiScalar(c)); }
    static MultiPoly variable(Var v, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, PiScalar>& terms() const { return terms_; }

    bool uses(Var v) const;
    std::set<Var> vars_used() const;
    int degree(Var v) const;    // -1 for the zero polynomial
    int total_degree() const;   // over all variables; -1 for zero
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{}); }
    PiScalar constant_term() const;
    PiScalar coeff(const Mono& m) const;

    void add_term(const Mono& m, const PiScalar& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const PiScalar& s) const;
    MultiPoly pow(unsigned n) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // Collects coefficients by the power of v; entries are free of v.
    std::map<int, MultiPoly> coeffs_in(Var v) const;
    static MultiPoly from_coeffs_in(Var v, const std::map<int, MultiPoly>& parts);

    MultiPoly substitute(Var v, const MultiPoly& value) const;
    MultiPoly substitute_scalar(Var v, const PiScalar& value) const;

    // d/dv
    MultiPoly derivative(Var v) const;

    // Exact division; nullopt when not divisible.  Requires the divisor's
    // leading coefficient to be a Pi-monomial (a unit of the ring).
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    std::string str() const;

private:
    std::map<Mono, PiScalar> terms_;
};

inline MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
inline MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

// Thrown by the text-form parser with a 0-based input position.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Canonical text form.  Grammar: variables X Y0 Y1 Y2 (plus Z W C T), integer
// and rational (a/b) literals, symbols i and pi, operators + - * ^, parens.
// Implicit multiplication is not accepted.  parse(print(p)) == p exactly.
MultiPoly parse_poly(const std::string& text);
std::string print_poly(const MultiPoly& p);

}  // namespace modj
