#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabortile/interval.hpp"
#include "gabortile/shift_set.hpp"
#include "gabortile/step_window.hpp"
#include "gabortile/tiling.hpp"

namespace gabortile {

// Verdict for one of the two pair properties of (Omega, set):
//   tiling:   the translates Omega + t cover the line exactly once;
//   spectral: the exponentials with frequencies in the set form an
//             orthogonal basis of L^2(Omega).
struct PairReport {
    enum class Kind { tiling, spectral };
    Kind kind = Kind::tiling;
    bool verdict = false;
    double max_violation = 0.0;       // tiling: sum deviation; spectral: worst |1_Omega^| on a difference
    double witness = 0.0;             // abscissa achieving max_violation
    double density_ratio = 0.0;       // spectral only: D(set) / mes(Omega), 1 for a true pair
    double completeness_defect = 0.0; // spectral only: worst relative Parseval defect
    double trunc = 0.0;
    std::string detail;
};

// (Omega, t_set) tiling pair: indicator tiling sum at level 1 over the grid.
PairReport tiling_pair_check(const SupportSet& omega, const ShiftSet& t_set, const GridSpec& grid,
                             double trunc, double tol = 1e-12);

struct SpectralOptions {
    double trunc = 40.0;             // initial frequency truncation / difference window radius
    double ortho_tol = 1e-10;        // zero test for 1_Omega^ on nonzero differences
    double density_tol = 0.02;       // |D(set) / mes(Omega) - 1| budget
    double completeness_tol = 0.02;  // relative Parseval defect budget
    double density_radius = 200.0;   // window radius for the density estimate
    int max_doublings = 10;          // truncation doublings for the defect
};

// (Omega, lambda) spectral pair, checked three ways: 1_Omega^ vanishes on all
// nonzero differences of lambda; D(lambda) = mes(Omega); and narrow indicator
// test functions have small Parseval defect against the normalized
// exponentials.
PairReport spectral_pair_check(const SupportSet& omega, const ShiftSet& lambda,
                               const SpectralOptions& opts = {});

struct LiuWangOptions {
    double modulus_tol = 1e-9;       // |g| constancy on the support
    GridSpec time_grid{-2.0, 2.0, 1.0 / 128.0};
    double tiling_trunc = 40.0;
    double tiling_tol = 1e-12;
    SpectralOptions spectral;
};

struct LiuWangReport {
    bool modulus_constant = false;   // (i) |g| = (mes Omega)^{-1/2} on Omega
    double modulus_deviation = 0.0;
    double modulus_target = 0.0;     // (mes Omega)^{-1/2}
    PairReport tiling;               // (ii)
    PairReport spectral;             // (iii)
    bool verdict = false;
};

// The three conditions for G(g, T, S) to be an orthonormal basis when |g| is a
// normalized indicator: constant modulus, tiling pair, spectral pair.
LiuWangReport liu_wang_conditions(const StepWindow& g, const ShiftSet& t_set,
                                  const ShiftSet& s_set, const LiuWangOptions& opts = {});

struct NonnegativeStructureOptions {
    double value_tol = 1e-12;        // reality / nonnegativity of the window values
    double trunc = 40.0;             // time-shift truncation for disjointness
    double level_tol = 1e-9;         // | |g|^2 - D(T) | on the support
    double product_tol = 1e-9;       // | D(T) * mes(Omega) - 1 |
    double density_radius = 200.0;
    double detect_max_period = 10.0;
    SpectralOptions spectral;
};

struct NonnegativeStructureReport {
    bool translates_disjoint = false;
    std::optional<Interval> overlap_witness;  // set when two translates overlap
    double density_time = 0.0;                // D(T), exact when a period is detected
    bool density_exact = false;
    double level_deviation = 0.0;             // max | |g(x)|^2 - D(T) | on Omega
    bool level_ok = false;
    double density_product = 0.0;             // D(T) * mes(Omega)
    bool product_ok = false;
    PairReport spectral;                      // (Omega, S) spectral pair
    bool verdict = false;
};

// Structure forced on an orthonormal G(g, T, S) with g >= 0: disjoint support
// translates, |g|^2 locked to D(T) on the support, D(T) mes(Omega) = 1, and
// (Omega, S) a spectral pair. Throws when g has complex or negative values.
NonnegativeStructureReport nonnegative_structure(const StepWindow& g, const ShiftSet& t_set,
                                                 const ShiftSet& s_set,
                                                 const NonnegativeStructureOptions& opts = {});

struct ZeroSetReport {
    std::size_t differences_checked = 0;
    double max_abs_value = 0.0;      // worst |(|g|^2)^| over the differences
    double worst_difference = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
};

// Necessary condition on the frequency set: the transform of |g|^2 must vanish
// on every nonzero difference s - s'.
ZeroSetReport difference_zero_set_check(const StepWindow& g, const ShiftSet& s_set,
                                        Interval window, double tol = 1e-10);

}  // namespace gabortile
