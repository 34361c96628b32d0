#pragma once

#include <vector>

#include "gabortile/interval.hpp"
#include "gabortile/shift_set.hpp"
#include "gabortile/step_window.hpp"
#include "gabortile/tiling.hpp"

namespace gabortile {

struct TimeFreqAtom {
    double time = 0.0;
    double freq = 0.0;
};

// The family {g(x - t) e^{2 pi i s x} : t in time_shifts, s in freq_shifts},
// with the truncation radii all finite computations use by default.
struct GaborSystem {
    StepWindow window;
    ShiftSet time_shifts;
    ShiftSet freq_shifts;
    double trunc_time = 6.0;
    double trunc_freq = 6.0;
};

// <g_a, g_b> = Integral g(x - a.time) conj(g(x - b.time)) e^{2 pi i (a.freq - b.freq) x} dx,
// in closed form.
cplx inner_product(const StepWindow& g, const TimeFreqAtom& a, const TimeFreqAtom& b);

// <f, g_atom> = Integral f(x) conj(g(x - atom.time)) e^{-2 pi i atom.freq x} dx.
cplx gabor_coefficient(const StepWindow& f, const StepWindow& g, const TimeFreqAtom& atom);

struct GramReport {
    std::size_t atoms = 0;
    std::size_t pairs_evaluated = 0;
    std::size_t pairs_skipped_disjoint = 0;
    double max_off_diagonal = 0.0;
    double max_diagonal_deviation = 0.0;  // max | <g_a, g_a> - 1 |
    TimeFreqAtom worst_a;
    TimeFreqAtom worst_b;
    double trunc_time = 0.0;
    double trunc_freq = 0.0;
};

// Evaluates all Gram pairs over the truncated atom grid, skipping pairs whose
// time offsets make the supports disjoint (|t - t'| >= diam supp g). Throws
// when fewer than 2 time or 2 frequency shifts fall inside the truncation.
GramReport gram_report(const GaborSystem& sys);

// ||f||^2 - sum_{atoms} |<f, g_atom>|^2 over the truncated atom grid, with
// terms accumulated in (t ascending, s ascending) order. Throws when f is
// identically zero.
double parseval_defect(const GaborSystem& sys, const StepWindow& f);

// Doubles the frequency truncation until the defect changes by less than
// rel_change * ||f||^2 between rounds; reports the radius used on request.
double parseval_defect_adaptive(const GaborSystem& sys, const StepWindow& f,
                                double rel_change = 1e-4, double* freq_trunc_used = nullptr);

// H(xi) = ||f||^{-2} sum_t |h_t^(xi)|^2 with h_t(x) = f(x) g(x - t); only the
// finitely many t with overlapping supports contribute.
class HFunction {
public:
    HFunction(std::vector<StepWindow> terms, double norm_f_sq);

    double operator()(double xi) const;
    std::vector<double> sample(const GridSpec& grid) const;
    // c2 such that H(xi) <= c2 / xi^2: sum of per-term jump envelopes.
    double decay_constant() const;

    const std::vector<StepWindow>& terms() const { return terms_; }
    double norm_f_sq() const { return norm_f_sq_; }

private:
    std::vector<StepWindow> terms_;
    double norm_f_sq_ = 0.0;
};

HFunction build_h_function(const StepWindow& f, const StepWindow& g, const ShiftSet& time_set);

// Checks sum_s H(xi - s) = 1 over the grid with shifts from [-s_trunc, s_trunc]
// and a lattice decay tail for the rest.
TilingReport verify_h_tiling(const HFunction& h, const ShiftSet& freq_set, const GridSpec& grid,
                             double s_trunc, double tol = 0.02);

// Wraps H as a tile function: quadrature integral over [-radius, radius] plus
// the decay tail, so density_from_tiling can be applied to it.
TileFunction tile_from_h(const HFunction& h, double radius = 100.0, double quad_tol = 1e-9);

}  // namespace gabortile
