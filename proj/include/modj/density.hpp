#pragma once

#include "modj/locate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modj {
namespace density {

struct Witness {
    Complex z;
    Complex j, jp, jpp;     // jet at z
    Real residual;          // |F(z, jet z)|
    Complex reduced;        // fundamental-domain representative
    Complex orbit_key;      // j at the reduced representative
    std::string origin;
};

struct RankCheck {
    int degree = 0;
    int rank = 0;
    int expected = 0;
    bool passed = false;
};

struct DensityReport {
    std::string input;
    enum class Verdict { DenseWitnessed, Rejected, Inconclusive } verdict =
        Verdict::Inconclusive;
    std::string reason;
    std::vector<Witness> witnesses;
    std::vector<locate::ZeroCertificate> certificates;
    std::vector<Complex> orbit_keys;  // one representative j-value per orbit
    int orbit_count = 0;
    RankCheck rank;
    unsigned precision = 0;
    std::uint64_t seed = 0;
    // all witnesses lie in a single j-fiber by construction (j(z) = u case);
    // the orbit-count minimum does not apply there
    bool single_fiber = false;
    std::string dispatch;  // which proof case drove the harvest
};

struct PipelineOptions {
    unsigned prec = 128;
    std::uint64_t seed = 7;
    int degree_D = 2;
    int min_orbits = 5;
    std::size_t target_witnesses = 18;
    long m_start = 5;
};

DensityReport run_pipeline(const MultiPoly& F, const PipelineOptions& opt = {});

// Groups witness indices by orbit key agreement within 2^(-prec/4).
// Conservative: near-ties merge, so the orbit count never overshoots.
std::vector<std::vector<std::size_t>> distinct_orbits(const std::vector<Witness>& ws,
                                                      unsigned prec);

// Finite Zariski-density surrogate: numerical rank of the monomial evaluation
// matrix at the witnesses, degree <= D.  Expected rank is
// #monomials(<=D) - #monomials(<=D - deg F).
RankCheck independence_check(const std::vector<Witness>& ws, const MultiPoly& F, int D,
                             unsigned prec);

// The j''' = 0 case study: runs the pipeline on
//   3 Y0^2 (Y0-1728)^2 Y2^2 - (Y0^2 - 1968 Y0 + 2654208) Y1^4
// and verifies |j'''| at the witnesses plus the accumulation of -1/(tau+m).
struct CaseStudyReport {
    DensityReport report;
    std::vector<Real> jppp_abs;       // |j'''| at each witness
    std::vector<Real> accum_modulus;  // |witness| for the accumulation claim
    bool jppp_all_small = false;
    bool accumulation_ok = false;
};
CaseStudyReport jppp_case_study(const PipelineOptions& opt = {});

MultiPoly jppp_polynomial();  // the case-study input

}  // namespace density
}  // namespace modj
