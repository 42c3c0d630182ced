#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modj/multipoly.hpp"
#include "modj/polyalg.hpp"

#include <random>

using namespace modj;

TEST_CASE("parses the worked polynomials") {
    MultiPoly h = parse_poly("Y1^2 - Y0*Y2");
    CHECK(h == MultiPoly::variable(Var::Y1, 2) -
                   MultiPoly::variable(Var::Y0) * MultiPoly::variable(Var::Y2));

    MultiPoly p = parse_poly("4*pi^2*Y0 + Y2");
    MultiPoly expect = MultiPoly::variable(Var::Y0).scaled(PiScalar(GaussRat(4), 2)) +
                       MultiPoly::variable(Var::Y2);
    CHECK(p == expect);

    MultiPoly c = parse_poly("Y0*Y2 - (2/3)*Y1^2");
    MultiPoly ce = MultiPoly::variable(Var::Y0) * MultiPoly::variable(Var::Y2) -
                   MultiPoly::variable(Var::Y1, 2).scaled(PiScalar(Rational(2, 3)));
    CHECK(c == ce);
}

TEST_CASE("rationals, i, pi, negative pi powers") {
    CHECK(parse_poly("1/2") == MultiPoly::constant(PiScalar(Rational(1, 2))));
    CHECK(parse_poly("i*i") == MultiPoly::constant(-1));
    CHECK(parse_poly("pi^-1 * pi") == MultiPoly::constant(1));
    // '/' only forms rational literals; general division is not in the grammar
    CHECK_THROWS_AS(parse_poly("2/(1+1)"), parse_error);
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_poly("Y0 + "), parse_error);
    CHECK_THROWS_AS(parse_poly("2 X"), parse_error);       // implicit multiplication
    CHECK_THROWS_AS(parse_poly("Q1 + 2"), parse_error);    // unknown symbol
    CHECK_THROWS_AS(parse_poly("X^-1"), parse_error);      // negative variable power
    CHECK_THROWS_AS(parse_poly("(Y0"), parse_error);
    try {
        parse_poly("Y0 + @");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("print/parse round-trip on random polynomials") {
    std::mt19937_64 rng(211);
    const std::vector<Var> vars{Var::X, Var::Y0, Var::Y1, Var::Y2};
    for (int t = 0; t < 200; ++t) {
        MultiPoly p = polyalg::random_poly(rng, vars, 5, 6, true);
        std::string s = print_poly(p);
        MultiPoly q = parse_poly(s);
        CHECK(q == p);
    }
    CHECK(print_poly(MultiPoly::zero()) == "0");
    CHECK(parse_poly("0") == MultiPoly::zero());
}
