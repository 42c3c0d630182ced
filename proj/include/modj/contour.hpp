#pragma once

#include "modj/real.hpp"

#include <functional>
#include <vector>

namespace modj {

// Closed-contour winding computation.  The caller supplies the composite
// map t in [0,1) -> f(z(t)) as value balls; the engine samples adaptively,
// halving steps until consecutive argument increments are below pi/2, which
// pins the branch of the logarithm at every step.
struct WindingResult {
    long count;      // nearest integer to total_arg / 2 pi
    double residual; // |total_arg / 2 pi - count|
    Real min_abs;    // smallest |f| seen along the contour
    std::size_t evaluations;
};

struct WindingOptions {
    std::size_t initial_samples = 32;
    std::size_t max_evaluations = 600000;
    double min_step = 1e-9;
};

// Throws contour_error if a value ball on the contour contains zero or the
// refinement budget is exhausted before the increments settle.
WindingResult winding_number(const std::function<CBall(double)>& f,
                             const WindingOptions& opt = {});

}  // namespace modj
