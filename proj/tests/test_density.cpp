#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modj/density.hpp"

using namespace modj;
using namespace modj::density;

namespace {
MultiPoly var(Var v, int p = 1) { return MultiPoly::variable(v, p); }
MultiPoly cst(long c) { return MultiPoly::constant(c); }

Witness fake_witness(double re, double im, double j) {
    Witness w;
    w.z = Complex{Real(re), Real(im)};
    w.j = Complex{Real(j), Real(0)};
    w.jp = Complex{Real(1), Real(0)};
    w.jpp = Complex{Real(1), Real(0)};
    w.residual = Real(0);
    w.reduced = w.z;
    w.orbit_key = w.j;
    return w;
}
}  // namespace

TEST_CASE("distinct orbits by j-value") {
    unsigned prec = 128;
    std::vector<Witness> ws;
    ws.push_back(fake_witness(0, 1, 2.0));
    ws.push_back(fake_witness(5, 1, 2.0));  // same fiber
    ws.push_back(fake_witness(0, 2, 3.0));
    auto groups = distinct_orbits(ws, prec);
    CHECK(groups.size() == 2);

    // keys within tolerance merge conservatively
    ws.push_back(fake_witness(1, 1, 3.0 + 1e-30));
    groups = distinct_orbits(ws, prec);
    CHECK(groups.size() == 2);
}

TEST_CASE("independence check degenerate cases") {
    unsigned prec = 128;
    MultiPoly F = var(Var::Y0) - cst(2);
    std::vector<Witness> one{fake_witness(0, 1, 2.0)};
    RankCheck rc = independence_check(one, F, 1, prec);
    CHECK(!rc.passed);  // insufficient witnesses for expected rank 4

    // duplicated witnesses: rank deficit must be reported
    std::vector<Witness> dup(8, fake_witness(0, 1, 2.0));
    RankCheck rc2 = independence_check(dup, F, 1, prec);
    CHECK(rc2.expected == 4);
    CHECK(rc2.rank < rc2.expected);
    CHECK(!rc2.passed);
}

TEST_CASE("pipeline rejects the excluded divisors") {
    for (const char* txt : {"Y1", "Y0", "Y0 - 1728", "X^3 + 2",
                            "Y1^2*Y0 - 1728*Y1^2" /* (Y0-1728)*Y1^2 */}) {
        DensityReport rep = run_pipeline(parse_poly(txt));
        CHECK(rep.verdict == DensityReport::Verdict::Rejected);
        CHECK(!rep.reason.empty());
    }
}

TEST_CASE("pipeline on Y0 - 2: the fiber path") {
    PipelineOptions opt;
    opt.seed = 7;
    DensityReport rep = run_pipeline(parse_poly("Y0 - 2"), opt);
    CHECK(rep.verdict == DensityReport::Verdict::DenseWitnessed);
    CHECK(rep.single_fiber);
    CHECK(rep.witnesses.size() >= 10);
    for (const auto& w : rep.witnesses) {
        CHECK(abs(w.orbit_key - Complex(2L)) < pow2(-30));
        CHECK(w.residual < pow2(-32));
    }
    CHECK(rep.rank.degree == 2);
    CHECK(rep.rank.expected == 10);
    CHECK(rep.rank.passed);

    // fixed seed reproduces the report
    DensityReport rep2 = run_pipeline(parse_poly("Y0 - 2"), opt);
    REQUIRE(rep2.witnesses.size() == rep.witnesses.size());
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
        CHECK(rep2.witnesses[i].z == rep.witnesses[i].z);
}

TEST_CASE("pipeline on Y2: multi-orbit harvest") {
    PipelineOptions opt;
    opt.seed = 7;
    DensityReport rep = run_pipeline(var(Var::Y2), opt);
    CHECK(rep.verdict == DensityReport::Verdict::DenseWitnessed);
    CHECK(!rep.single_fiber);
    CHECK(rep.witnesses.size() >= 5);
    CHECK(rep.orbit_count >= 5);
    // pairwise distinct orbit keys, none near the ramified values
    for (std::size_t i = 0; i < rep.orbit_keys.size(); ++i) {
        CHECK(abs(rep.orbit_keys[i]) > Real("1e-10"));
        CHECK(abs(rep.orbit_keys[i] - Complex(1728L)) > Real("1e-10"));
        for (std::size_t k = i + 1; k < rep.orbit_keys.size(); ++k)
            CHECK(abs(rep.orbit_keys[i] - rep.orbit_keys[k]) > pow2(-32));
    }
    CHECK(rep.rank.passed);
    // the witnesses solve j''(z) = 0
    for (const auto& w : rep.witnesses) CHECK(w.residual < pow2(-32));
}

TEST_CASE("j''' case study") {
    CaseStudyReport cs = jppp_case_study();
    CHECK(cs.report.verdict == DensityReport::Verdict::DenseWitnessed);
    CHECK(cs.report.orbit_count >= 3);
    CHECK(cs.jppp_all_small);
    for (const auto& a : cs.jppp_abs) CHECK(a < Real("1e-15"));
    CHECK(cs.accumulation_ok);
    for (const auto& m : cs.accum_modulus) CHECK(m < Real(1) / 5);
    // none of the witnesses lies in the orbit of rho or i
    for (const auto& k : cs.report.orbit_keys) {
        CHECK(abs(k) > Real(1) / 100);
        CHECK(abs(k - Complex(1728L)) > Real(1) / 100);
    }
}
