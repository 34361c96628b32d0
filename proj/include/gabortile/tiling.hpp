#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gabortile/interval.hpp"
#include "gabortile/shift_set.hpp"
#include "gabortile/step_window.hpp"

namespace gabortile {

// Pointwise-evaluable nonnegative function together with the analytic data a
// truncated tiling sum needs: either an exact compact support, or a decay
// constant c2 with phi(x) <= c2 / x^2 away from the origin.
struct TileFunction {
    std::function<double(double)> eval;
    std::optional<Interval> support;  // exact compact support, when known
    double decay_constant = 0.0;      // c2 for the 1/x^2 envelope (decay kind)
    double integral = 0.0;            // best available value of Integral phi
    double integral_tail = 0.0;       // bound on mass missed by that value
    std::string label;

    // phi = w(x) for a step window with real nonnegative values (e.g. |g|^2).
    static TileFunction from_step(const StepWindow& w);
    // phi(xi) = |w^(xi)|^2; integral by quadrature over [-radius, radius]
    // plus a decay tail bound.
    static TileFunction spectrum_of(const StepWindow& w, double radius = 100.0,
                                    double quad_tol = 1e-9);
};

struct TilingReport {
    std::string grid_description;
    double level_target = 0.0;
    double max_abs_deviation = 0.0;
    double truncation_tail_bound = 0.0;
    double worst_x = 0.0;
    double trunc = 0.0;
    double tolerance = 0.0;
    bool verdict = false;  // max_abs_deviation + truncation_tail_bound <= tolerance
};

// Bound on sum_{|p| > trunc, p in s} c2 / dist(x - p)^2 over x in grid_range:
// enumerates the set to a large radius and closes with an integral remainder
// at the observed minimal gap.
double lattice_decay_tail(double c2, const ShiftSet& s, double trunc, Interval grid_range);

// sum_{|t| <= trunc} phi(x - t) at every grid point, in grid order.
std::vector<double> tiling_profile(const TileFunction& phi, const ShiftSet& t_set,
                                   const GridSpec& grid, double trunc);

// Evaluates sum_{|t| <= trunc} phi(x - t) over the grid and reports the worst
// deviation from level plus the truncation tail bound.  For compact tiles the
// tail is 0 when the truncation encloses every contributing shift (infinity
// otherwise); for decaying tiles the excluded lattice points are summed
// through the exact evaluator out to a wider radius, with the c2 / dist^2
// envelope closing the remainder.
TilingReport tiling_sum(const TileFunction& phi, const ShiftSet& t_set, const GridSpec& grid,
                        double trunc, double level, double tol);

// level / Integral phi: the density any level-`level` tiling set of phi must
// have. Throws when the integral is not positive.
double density_from_tiling(const TileFunction& phi, double level);

// Structure recovery for tiling sets: single detected period first, then a
// greedy peel of full arithmetic progressions, up to 32 of them.
std::optional<std::vector<ArithmeticProgression>> ap_decomposition(std::span<const double> points,
                                                                   double support_diam, double tol);

struct SupNormReport {
    double sup_time = 0.0;        // max |g|, exact
    double bound_time = 0.0;      // sqrt(density_time)
    double slack_time = 0.0;      // bound_time - sup_time
    bool time_ok = false;
    double sup_freq_grid = 0.0;   // max |g^| over the grid
    double freq_lipschitz = 0.0;  // derivative bound 2 pi Integral |x w(x)| dx
    double sup_freq_upper = 0.0;  // grid max + lipschitz * step / 2
    double bound_freq = 0.0;      // sqrt(density_freq)
    double slack_freq = 0.0;
    bool freq_ok = false;
    std::string grid_description;
};

// Checks sup|g| <= sqrt(density_time) exactly and sup|g^| <= sqrt(density_freq)
// on the grid, with a Lipschitz bound between grid nodes.
SupNormReport sup_norm_check(const StepWindow& g, double density_time, double density_freq,
                             const GridSpec& freq_grid);

}  // namespace gabortile
