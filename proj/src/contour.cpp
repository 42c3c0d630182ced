#include "modj/contour.hpp"

#include <cmath>
#include <deque>

namespace modj {

namespace {

struct Sample {
    double t;
    Complex v;
};

}  // namespace

WindingResult winding_number(const std::function<CBall(double)>& f, const WindingOptions& opt) {
    std::size_t evals = 0;
    auto value_at = [&](double t) {
        CBall b = f(t);
        ++evals;
        if (b.contains_zero())
            throw contour_error("winding_number: contour passes through a value ball at 0");
        return b.mid;
    };

    // doubly linked walk over samples; wrap the final edge to t=1 == t=0
    std::deque<Sample> pts;
    for (std::size_t k = 0; k < opt.initial_samples; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(opt.initial_samples);
        pts.push_back({t, value_at(t)});
    }
    pts.push_back({1.0, pts.front().v});

    Real total(0);
    Real half_pi = pi_value() / 2;
    std::size_t i = 0;
    while (i + 1 < pts.size()) {
        if (evals > opt.max_evaluations)
            throw contour_error("winding_number: refinement budget exhausted");
        const Complex& a = pts[i].v;
        const Complex& b = pts[i + 1].v;
        // Edge accepted when the argument increment is small AND the modulus
        // moves by a bounded factor; the latter guards against phase aliasing
        // when a coarse edge hops across several fundamental domains.
        Real da = arg(b / a);
        Real ra = abs(a), rb = abs(b);
        bool mod_ok = (rb < 8 * ra) && (ra < 8 * rb);
        if (abs(da) < half_pi && (mod_ok || pts[i + 1].t - pts[i].t < opt.min_step * 64)) {
            total += da;
            ++i;
            continue;
        }
        double tm = (pts[i].t + pts[i + 1].t) / 2;
        if (pts[i + 1].t - pts[i].t < opt.min_step)
            throw contour_error("winding_number: argument jump persists at minimal step");
        pts.insert(pts.begin() + static_cast<long>(i) + 1, {tm, value_at(tm)});
    }

    Real two_pi = 2 * pi_value();
    Real w = total / two_pi;
    long count = llround(w.convert_to<double>());
    double residual = std::abs((w - Real(count)).convert_to<double>());

    Real min_abs = abs(pts.front().v);
    for (const auto& s : pts) min_abs = std::min(min_abs, abs(s.v));
    return {count, residual, min_abs, evals};
}

}  // namespace modj
