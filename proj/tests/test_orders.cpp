#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modj/orders.hpp"

#include <random>

using namespace modj;
using namespace modj::orders;

namespace {
MultiPoly var(Var v, int p = 1) { return MultiPoly::variable(v, p); }
MultiPoly cst(long c) { return MultiPoly::constant(c); }
constexpr unsigned kPrec = 128;
}  // namespace

TEST_CASE("unramified order prediction") {
    MultiPoly p = (var(Var::Y0) - cst(2)).pow(3);
    CHECK(predict_unramified(p, PiScalar(2)).order == 3);
    CHECK(predict_unramified(p * var(Var::Y1) + MultiPoly::zero(), PiScalar(2)).order == 3);
    CHECK(predict_unramified(var(Var::Y1), PiScalar(2)).order == 0);
    CHECK_THROWS_AS(predict_unramified(var(Var::Y0) - cst(1728), PiScalar(1728)), error);
    CHECK_THROWS_AS(predict_unramified(var(Var::Y0), PiScalar(0)), error);
}

TEST_CASE("elliptic order predictions") {
    CHECK(predict_elliptic(var(Var::Y0), true).order == 3);
    CHECK(predict_elliptic(var(Var::Y1), false).order == 1);
    CHECK(predict_elliptic(var(Var::Y1), true).order == 2);
    CHECK(predict_elliptic(var(Var::Y0) - cst(1728), false).order == 2);
    MultiPoly bad = var(Var::Y0) * var(Var::Y2) - var(Var::Y1, 2).scaled(PiScalar(Rational(2, 3)));
    CHECK_THROWS_AS(predict_elliptic(bad, true), error);
}

TEST_CASE("cusp order predictions") {
    OrderPrediction a = predict_cusp(var(Var::Y0));
    CHECK(a.e == 1);
    CHECK(a.M == 0);

    OrderPrediction b = predict_cusp(var(Var::Y0).scaled(PiScalar(GaussRat(4), 2)) + var(Var::Y2));
    CHECK(b.e == 1);
    CHECK(b.M == 4);
    CHECK(b.M_upper == 4);

    OrderPrediction c = predict_cusp(var(Var::Y1, 2) - var(Var::Y0) * var(Var::Y2));
    CHECK(c.e == 2);
    CHECK(c.M == 3);  // the q^-2 cancellation knocks W^4 out of r
    CHECK(c.M_upper == 4);
}

TEST_CASE("measured orders at the elliptic points") {
    UHPoint rho = UHPoint::rho(kPrec);
    UHPoint ii = UHPoint::unit_i(kPrec);
    CHECK(measure_order(var(Var::Y1), rho, 0.05, kPrec) == 2);
    CHECK(measure_order(var(Var::Y1), ii, 0.05, kPrec) == 1);
    CHECK(measure_order(var(Var::Y0), rho, 0.05, kPrec) == 3);
    CHECK(measure_order(var(Var::Y0) - cst(1728), ii, 0.05, kPrec) == 2);
    CHECK(measure_order(var(Var::Y2), rho, 0.05, kPrec) == 1);
    CHECK(measure_order(var(Var::Y0), ii, 0.05, kPrec) == 0);

    // radius-halving stability
    CHECK(measure_order(var(Var::Y1), rho, 0.025, kPrec) == 2);
    CHECK(measure_order(var(Var::Y1), rho, 0.0125, kPrec) == 2);
}

TEST_CASE("the Y2 counterexample: prediction 4, measured at least 5") {
    MultiPoly p = var(Var::Y0) * var(Var::Y2) -
                  var(Var::Y1, 2).scaled(PiScalar(Rational(2, 3)));
    // T-substitution bound would give 4
    MultiPoly sub = p.substitute(Var::Y0, var(Var::T, 3) * var(Var::Y0))
                        .substitute(Var::Y1, var(Var::T, 2) * var(Var::Y1))
                        .substitute(Var::Y2, var(Var::T, 1) * var(Var::Y2));
    CHECK(sub.coeffs_in(Var::T).begin()->first == 4);
    int measured = measure_order(p, UHPoint::rho(kPrec), 0.05, kPrec);
    CHECK(measured >= 5);
}

TEST_CASE("genericity at conjugates: measured >= predicted, equality somewhere") {
    std::mt19937_64 rng(401);
    const std::vector<Var> vars{Var::X, Var::Y0, Var::Y1};
    UHPoint rho = UHPoint::rho(kPrec);
    for (int t = 0; t < 3; ++t) {
        MultiPoly p = polyalg::random_poly(rng, vars, 2, 3, false);
        int nu = predict_elliptic(p, true).order;
        bool attained = false;
        for (int s = 0; s < 8; ++s) {
            Moebius g = random_element(rng, 8, 20);
            UHPoint tau = act(g, rho);
            int m = measure_order(p, tau, 0.04, kPrec);
            CHECK(m >= nu);
            if (m == nu) attained = true;
        }
        CHECK(attained);
    }
}

TEST_CASE("cusp prediction matches the exact domain order generically") {
    std::mt19937_64 rng(409);
    const std::vector<Var> vars{Var::Y0, Var::Y1, Var::Y2};
    for (int t = 0; t < 5; ++t) {
        MultiPoly p = polyalg::random_poly(rng, vars, 2, 3, false);
        OrderPrediction cp = predict_cusp(p);
        bool d_attained = false;
        int tried = 0;
        for (int s = 0; s < 12 && tried < 6; ++s) {
            Moebius g = random_element(rng, 8, 15);
            if (g.c == 0) continue;
            ++tried;
            growth::GrowthOrder go = growth::order_in_domain(p, g);
            CHECK(go.e >= -cp.e);  // order at the cusp is at least (-e, *)
            if (go.e == -cp.e && go.d == cp.M) d_attained = true;
        }
        CHECK(tried >= 1);
        CHECK(d_attained);
    }
}

TEST_CASE("ratio scan: the intro example has a pole at rho") {
    MultiPoly F = var(Var::X, 4) * var(Var::Y1, 2) +
                  var(Var::Y0) * (var(Var::Y0) - cst(1728));
    ScanResult r = scan_ratio_criteria(F, kPrec);
    CHECK(r.n == 4);
    REQUIRE(r.first_hit.has_value());
    CHECK(r.first_hit->verdict == RatioReport::Verdict::PoleAtPoint);
    CHECK(r.first_hit->pole_order == 1);
    // the witness is rho itself
    UHPoint rho = UHPoint::rho(kPrec);
    CHECK(abs(r.first_hit->pole_point - rho.value()) < 0.01);
}

TEST_CASE("ratio scan: the squared variant grows instead") {
    MultiPoly F = var(Var::X, 4) * var(Var::Y1, 2) +
                  var(Var::Y0, 2) * (var(Var::Y0) - cst(1728));
    ScanResult r = scan_ratio_criteria(F, kPrec);
    REQUIRE(r.first_hit.has_value());
    CHECK(r.first_hit->verdict == RatioReport::Verdict::ExponentialGrowth);
    CHECK(r.first_hit->growth_e < 0);
}

TEST_CASE("ratio scan: vacuous when only the leading coefficient exists") {
    MultiPoly F = var(Var::X) * var(Var::Y1);
    ScanResult r = scan_ratio_criteria(F, kPrec);
    CHECK(r.n == 1);
    CHECK(!r.first_hit.has_value());
    CHECK(r.reports.empty());
}
