#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modj/moebius.hpp"

#include <random>

using namespace modj;

TEST_CASE("determinant checked") {
    CHECK_THROWS_AS(Moebius(BigInt(1), BigInt(1), BigInt(1), BigInt(1)), error);
    CHECK_NOTHROW(Moebius(BigInt(2), BigInt(1), BigInt(1), BigInt(1)));
}

TEST_CASE("action basics") {
    unsigned prec = 128;
    ScopedPrecision work(prec);
    UHPoint i = UHPoint::unit_i(prec);
    UHPoint r1 = act(Moebius::translation(1), i);
    CHECK(r1.re == 1);
    CHECK(r1.im == 1);
    UHPoint r2 = act(Moebius::inversion(), i);
    CHECK(abs(r2.value() - Complex{Real(0), Real(1)}) < pow2(-100));
}

TEST_CASE("im identity and group action law") {
    unsigned prec = 128;
    ScopedPrecision work(prec + 16);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xd(-3, 3), yd(0.1, 4.0);
    for (int t = 0; t < 50; ++t) {
        Moebius g = random_element(rng);
        UHPoint z{Real(xd(rng)), Real(yd(rng)), prec};
        UHPoint gz = act(g, z);
        Complex den = cocycle_factor(g, z.value());
        // im(gz) |cz+d|^2 = im(z)
        CHECK(abs(gz.im * norm2(den) - z.im) < pow2(-90) * (1 + norm2(den)));

        Moebius h = random_element(rng);
        UHPoint lhs = act(g, act(h, z));
        UHPoint rhs = act(g * h, z);
        CHECK(abs(lhs.value() - rhs.value()) < pow2(-80) * (1 + abs(rhs.value())));
    }
}

TEST_CASE("reduce basics") {
    unsigned prec = 128;
    ScopedPrecision work(prec + 16);
    // z = i + 5 -> (i, (1,5;0,1))
    Reduction r = reduce(UHPoint{Real(5), Real(1), prec});
    CHECK(abs(r.zred.value() - Complex{Real(0), Real(1)}) < pow2(-100));
    CHECK(r.gamma == Moebius::translation(5));

    // z = -1/(rho+3) reduces back to rho
    UHPoint rho = UHPoint::rho(prec);
    Complex w = -inv(rho.value() + Complex(Real(3)));
    Reduction r2 = reduce(UHPoint::from(w, prec));
    CHECK(abs(r2.zred.value() - rho.value()) < pow2(-90));
}

TEST_CASE("reduce lands in the fundamental domain and inverts") {
    unsigned prec = 128;
    ScopedPrecision work(prec + 16);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> xd(-8, 8), yd(0.02, 5.0);
    for (int t = 0; t < 100; ++t) {
        UHPoint z{Real(xd(rng)), Real(yd(rng)), prec};
        Reduction r = reduce(z);
        Real tol = pow2(-static_cast<long>(prec) / 2);
        CHECK(r.zred.re >= Real(-1) / 2 - tol);
        CHECK(r.zred.re < Real(1) / 2 + tol);
        CHECK(norm2(r.zred.value()) >= 1 - tol * 4);
        UHPoint back = act(r.gamma, r.zred);
        CHECK(abs(back.value() - z.value()) < pow2(-70) * (1 + abs(z.value())));
        // idempotent
        Reduction rr = reduce(r.zred);
        CHECK(abs(rr.zred.value() - r.zred.value()) < pow2(-90));
    }
}

TEST_CASE("j-invariance under reduction") {
    unsigned prec = 128;
    ScopedPrecision work(prec + 16);
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> xd(-3, 3), yd(0.35, 3.0);
    for (int t = 0; t < 25; ++t) {
        UHPoint z{Real(xd(rng)), Real(yd(rng)), prec};
        Reduction r = reduce(z);
        JetValue a = eval_jet(z, 0, prec);
        JetValue b = eval_jet(r.zred, 0, prec);
        CHECK(abs(a.v[0].mid - b.v[0].mid) <= (a.v[0].rad + b.v[0].rad) * 4);
    }
}

TEST_CASE("cusp sequence") {
    // u = 0/1: gamma_k = (0, -1; 1, k)
    CuspTarget zero{BigInt(0), BigInt(1)};
    for (long k = 0; k < 5; ++k) {
        Moebius g = cusp_sequence(zero, k);
        CHECK(g.a == 0);
        CHECK(g.b == -1);
        CHECK(g.c == 1);
        CHECK(g.d == k);
        CHECK(g.a * g.d - g.b * g.c == 1);
    }

    unsigned prec = 128;
    ScopedPrecision work(prec);
    CuspTarget u{BigInt(2), BigInt(5)};
    UHPoint i = UHPoint::unit_i(prec);
    Real target = Real(2) / 5;
    Real prev(-1);
    for (long k = 1; k <= 20; ++k) {
        Moebius g = cusp_sequence(u, k);
        CHECK(g.a * g.d - g.b * g.c == 1);
        Real dist = abs(act(g, i).value() - Complex(target));
        if (k > 1) CHECK(dist < prev);
        prev = dist;
    }
}

TEST_CASE("jet cocycle vs direct evaluation") {
    unsigned prec = 128;
    ScopedPrecision work(prec + 16);

    // gamma = S at a sample point: j' component is z^2 j'(z)
    UHPoint z{Real(1) / 5, Real(13) / 10, prec};
    JetValue jet = eval_jet(z, 2, prec);
    JetValue tj = transform_jet(Moebius::inversion(), z, jet);
    Complex zv = z.value();
    CHECK(abs(tj.v[1].mid - zv * zv * jet.v[1].mid) < pow2(-90) * abs(tj.v[1].mid));
    Complex expected2 = zv * zv * zv * zv * jet.v[2].mid +
                        Real(2) * zv * zv * zv * jet.v[1].mid;
    CHECK(abs(tj.v[2].mid - expected2) < pow2(-90) * (1 + abs(expected2)));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> xd(-1, 1), yd(0.5, 1.8);
    for (int t = 0; t < 60; ++t) {
        Moebius g = random_element(rng, 10, 10);
        UHPoint w{Real(xd(rng)), Real(yd(rng)), prec};
        UHPoint gw = act(g, w);
        if (gw.im < Real(6) / 100) continue;
        JetValue base = eval_jet(w, 3, prec);
        JetValue moved = transform_jet(g, w, base);
        JetValue direct = eval_jet(gw, 3, prec);
        for (unsigned r = 0; r <= 3; ++r) {
            Real err = abs(moved.v[r].mid - direct.v[r].mid);
            Real scale = abs(direct.v[r].mid) + 1;
            CHECK(err / scale < Real("1e-18"));
        }
    }
}

TEST_CASE("cocycle composes") {
    unsigned prec = 128;
    ScopedPrecision work(prec + 16);
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> xd(-1, 1), yd(0.6, 1.5);
    for (int t = 0; t < 30; ++t) {
        Moebius g = random_element(rng, 6, 8);
        Moebius h = random_element(rng, 6, 8);
        UHPoint z{Real(xd(rng)), Real(yd(rng)), prec};
        JetValue jet = eval_jet(z, 2, prec);
        JetValue one = transform_jet(g * h, z, jet);
        JetValue two = transform_jet(g, act(h, z), transform_jet(h, z, jet));
        for (unsigned r = 0; r <= 2; ++r) {
            Real scale = abs(one.v[r].mid) + 1;
            CHECK(abs(one.v[r].mid - two.v[r].mid) / scale < Real("1e-18"));
        }
    }
}
