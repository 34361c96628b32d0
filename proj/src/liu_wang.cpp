#include "gabortile/liu_wang.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gabortile/summation.hpp"

namespace gabortile {

namespace {

// Worst relative Parseval defect of narrow indicator test functions against
// the normalized exponentials e_l / sqrt(mes Omega), l in lambda. The
// frequency truncation doubles until the defect stabilizes.
double completeness_defect(const SupportSet& omega, const ShiftSet& lambda,
                           const SpectralOptions& opts) {
    const double mes = omega.measure();
    double shortest = omega.intervals.front().length();
    for (const Interval& iv : omega.intervals) shortest = std::min(shortest, iv.length());
    const double w = shortest / 64.0;

    std::vector<StepWindow> tests;
    for (const Interval& iv : omega.intervals) {
        tests.push_back(StepWindow::indicator(iv.lo, iv.lo + w));
        tests.push_back(StepWindow::indicator(iv.midpoint() - 0.5 * w, iv.midpoint() + 0.5 * w));
        tests.push_back(StepWindow::indicator(iv.hi - w, iv.hi));
    }

    auto defect_at = [&](const StepWindow& f, double r) {
        Interval window{-r, r};
        if (auto vw = lambda.valid_window()) {
            window.lo = std::max(window.lo, vw->lo);
            window.hi = std::min(window.hi, vw->hi);
        }
        const auto ls = lambda.enumerate(window);
        std::vector<double> terms;
        terms.reserve(ls.size());
        for (double l : ls) terms.push_back(std::norm(f.fourier(l)) / mes);
        return (f.norm_sq() - pairwise_sum(terms)) / f.norm_sq();
    };

    double worst = 0.0;
    for (const StepWindow& f : tests) {
        double r = opts.trunc;
        double prev = defect_at(f, r);
        for (int round = 0; round < opts.max_doublings; ++round) {
            const double next = defect_at(f, 2.0 * r);
            const bool settled = std::abs(next - prev) <= 0.05 * opts.completeness_tol;
            r *= 2.0;
            prev = next;
            if (settled) break;
        }
        worst = std::max(worst, std::abs(prev));
    }
    return worst;
}

}  // namespace

PairReport tiling_pair_check(const SupportSet& omega, const ShiftSet& t_set, const GridSpec& grid,
                             double trunc, double tol) {
    const StepWindow ind = StepWindow::from_support(omega);
    const TilingReport tr = tiling_sum(TileFunction::from_step(ind), t_set, grid, trunc, 1.0, tol);

    PairReport rep;
    rep.kind = PairReport::Kind::tiling;
    rep.verdict = tr.verdict;
    rep.max_violation = tr.max_abs_deviation;
    rep.witness = tr.worst_x;
    rep.trunc = trunc;
    std::ostringstream os;
    os << "indicator tiling sum on " << tr.grid_description << ", max deviation "
       << tr.max_abs_deviation << ", tail bound " << tr.truncation_tail_bound;
    rep.detail = os.str();
    return rep;
}

PairReport spectral_pair_check(const SupportSet& omega, const ShiftSet& lambda,
                               const SpectralOptions& opts) {
    if (omega.intervals.empty()) {
        throw std::invalid_argument("spectral_pair_check: empty support");
    }
    const StepWindow ind = StepWindow::from_support(omega);

    PairReport rep;
    rep.kind = PairReport::Kind::spectral;
    rep.trunc = opts.trunc;

    // Orthogonality: 1_Omega^ must vanish on every nonzero difference.
    Interval diff_window{-opts.trunc, opts.trunc};
    if (auto vw = lambda.valid_window()) {
        diff_window.lo = std::max(diff_window.lo, vw->lo);
        diff_window.hi = std::min(diff_window.hi, vw->hi);
    }
    const auto diffs = difference_set(lambda, diff_window, 1e-9);
    double worst = -1.0;
    for (double d : diffs) {
        const double mag = std::abs(ind.fourier(d));
        if (mag > worst) {
            worst = mag;
            rep.witness = d;
        }
    }
    rep.max_violation = worst;
    const bool ortho_ok = worst <= opts.ortho_tol;

    // Density: a spectrum must have as many points per unit length as the set
    // has measure, i.e. D(lambda) = mes(Omega).
    const ResolvedDensity dens = resolved_density(lambda, opts.density_radius, 10.0);
    const bool exact = dens.exact;
    rep.density_ratio = dens.value / omega.measure();
    const bool density_ok = std::abs(rep.density_ratio - 1.0) <= opts.density_tol;

    // Completeness: Parseval defect of narrow indicators.
    rep.completeness_defect = completeness_defect(omega, lambda, opts);
    const bool complete_ok = rep.completeness_defect <= opts.completeness_tol;

    rep.verdict = ortho_ok && density_ok && complete_ok;
    std::ostringstream os;
    os << "orthogonality max |1_Omega^| = " << worst << " at d = " << rep.witness
       << (ortho_ok ? " (ok)" : " (violated)") << "; density ratio D/mes = " << rep.density_ratio
       << (exact ? " [exact density]" : " [estimated density]")
       << (density_ok ? " (ok)" : " (violated)")
       << "; completeness defect = " << rep.completeness_defect
       << (complete_ok ? " (ok)" : " (violated)");
    rep.detail = os.str();
    return rep;
}

LiuWangReport liu_wang_conditions(const StepWindow& g, const ShiftSet& t_set,
                                  const ShiftSet& s_set, const LiuWangOptions& opts) {
    const SupportSet omega = g.support();
    const double mes = omega.measure();

    LiuWangReport rep;
    rep.modulus_target = 1.0 / std::sqrt(mes);

    // (i) |g| is constant (mes Omega)^{-1/2} wherever g is nonzero.
    double dev = 0.0;
    const auto& vals = g.values();
    for (const cplx& v : vals) {
        const double mag = std::abs(v);
        if (mag <= 1e-12) continue;  // gap cell, not part of the support
        dev = std::max(dev, std::abs(mag - rep.modulus_target));
    }
    rep.modulus_deviation = dev;
    rep.modulus_constant = dev <= opts.modulus_tol;

    // (ii) (Omega, T) tiling pair.
    rep.tiling = tiling_pair_check(omega, t_set, opts.time_grid, opts.tiling_trunc, opts.tiling_tol);

    // (iii) (Omega, S) spectral pair.
    rep.spectral = spectral_pair_check(omega, s_set, opts.spectral);

    rep.verdict = rep.modulus_constant && rep.tiling.verdict && rep.spectral.verdict;
    return rep;
}

NonnegativeStructureReport nonnegative_structure(const StepWindow& g, const ShiftSet& t_set,
                                                 const ShiftSet& s_set,
                                                 const NonnegativeStructureOptions& opts) {
    for (const cplx& v : g.values()) {
        if (std::abs(v.imag()) > opts.value_tol) {
            throw std::invalid_argument("nonnegative_structure: window has non-real values");
        }
        if (v.real() < -opts.value_tol) {
            throw std::invalid_argument("nonnegative_structure: window has negative values");
        }
    }
    const SupportSet omega = g.support();

    NonnegativeStructureReport rep;

    // Disjointness of Omega + t over the truncated set, checked with exact
    // interval arithmetic; only offsets below the diameter can collide. Pairs
    // are visited outward from the origin so a reported overlap sits in
    // canonical position rather than at the truncation edge.
    const auto ts = t_set.enumerate({-opts.trunc, opts.trunc});
    const double diam = omega.hi() - omega.lo();
    rep.translates_disjoint = true;
    std::vector<std::size_t> order(ts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ma = std::abs(ts[a]);
        const double mb = std::abs(ts[b]);
        if (ma != mb) return ma < mb;
        return ts[a] < ts[b];
    });
    for (std::size_t rank = 0; rank < order.size() && rep.translates_disjoint; ++rank) {
        const std::size_t i = order[rank];
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (ts[j] - ts[i] >= diam) break;  // ts ascending: later j only farther
            Interval witness;
            if (omega.translated(ts[i]).overlaps(omega.translated(ts[j]), &witness)) {
                rep.translates_disjoint = false;
                rep.overlap_witness = witness;
                break;
            }
        }
    }

    // D(T), exact when the set is recognizably periodic.
    const ResolvedDensity dens = resolved_density(t_set, opts.density_radius, opts.detect_max_period);
    rep.density_time = dens.value;
    rep.density_exact = dens.exact;

    // |g|^2 = D(T) on the support. When only an estimated density is
    // available, its error band widens the acceptance.
    const double slack = dens.exact ? 0.0 : dens.estimate.error_band;
    double dev = 0.0;
    for (const cplx& v : g.values()) {
        const double sq = std::norm(v);
        if (sq <= opts.value_tol) continue;
        dev = std::max(dev, std::abs(sq - rep.density_time));
    }
    rep.level_deviation = dev;
    rep.level_ok = dev <= opts.level_tol + slack;

    rep.density_product = rep.density_time * omega.measure();
    rep.product_ok =
        std::abs(rep.density_product - 1.0) <= opts.product_tol + slack * omega.measure();

    rep.spectral = spectral_pair_check(omega, s_set, opts.spectral);

    rep.verdict = rep.translates_disjoint && rep.level_ok && rep.product_ok && rep.spectral.verdict;
    return rep;
}

ZeroSetReport difference_zero_set_check(const StepWindow& g, const ShiftSet& s_set,
                                        Interval window, double tol) {
    const StepWindow sq = g.square_modulus();
    const auto diffs = difference_set(s_set, window, 1e-9);

    ZeroSetReport rep;
    rep.tolerance = tol;
    rep.differences_checked = diffs.size();
    double worst = -1.0;
    for (double d : diffs) {
        const double mag = std::abs(sq.fourier(d));
        if (mag > worst) {
            worst = mag;
            rep.worst_difference = d;
        }
    }
    rep.max_abs_value = std::max(worst, 0.0);
    rep.verdict = rep.max_abs_value <= tol;
    return rep;
}

}  // namespace gabortile
