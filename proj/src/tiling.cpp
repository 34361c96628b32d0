#include "gabortile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gabortile/quadrature.hpp"
#include "gabortile/summation.hpp"

namespace gabortile {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral_a^b |x| dx, handling a sign change inside the interval.
double abs_moment(double a, double b) {
    auto prim = [](double x) { return 0.5 * x * std::abs(x); };  // antiderivative of |x|
    return prim(b) - prim(a);
}

}  // namespace

TileFunction TileFunction::from_step(const StepWindow& w) {
    for (const cplx& v : w.values()) {
        if (std::abs(v.imag()) > 1e-12 || v.real() < -1e-12) {
            throw std::invalid_argument("from_step: window values must be real and nonnegative");
        }
    }
    TileFunction phi;
    StepWindow copy = w;
    phi.eval = [copy](double x) { return copy(x).real(); };
    phi.support = Interval{w.support_lo(), w.support_hi()};
    phi.decay_constant = 0.0;
    phi.integral = w.integral().real();
    phi.integral_tail = 0.0;
    phi.label = "step";
    return phi;
}

TileFunction TileFunction::spectrum_of(const StepWindow& w, double radius, double quad_tol) {
    if (w.is_zero(1e-15)) throw std::invalid_argument("spectrum_of: window is identically zero");
    if (radius <= 0.0) throw std::invalid_argument("spectrum_of: radius must be positive");
    StepWindow copy = w;
    auto eval = [copy](double xi) { return std::norm(copy.fourier(xi)); };

    const double tv = w.total_jump();
    const double c2 = (tv / (2.0 * kPi)) * (tv / (2.0 * kPi));

    // Quadrature over [-radius, radius], segmented at the oscillation scale of
    // |w^|^2 (period ~ 1/diam) so each piece is smooth for Simpson.
    const double diam = std::max(w.diameter(), 1e-9);
    const double seg = std::max(0.25 / diam, 1e-3);
    std::vector<double> cuts;
    cuts.push_back(-radius);
    for (double x = -radius + seg; x < radius - 0.5 * seg; x += seg) cuts.push_back(x);
    cuts.push_back(radius);
    const double integral = adaptive_simpson_segmented(eval, cuts, quad_tol);

    TileFunction phi;
    phi.eval = eval;
    phi.support = std::nullopt;
    phi.decay_constant = c2;
    phi.integral = integral;
    phi.integral_tail = 2.0 * c2 / radius;  // Integral_{|x|>R} c2/x^2 dx
    phi.label = "spectrum";
    return phi;
}

double lattice_decay_tail(double c2, const ShiftSet& s, double trunc, Interval grid_range) {
    if (c2 == 0.0) return 0.0;
    const double extent = std::max(std::abs(grid_range.lo), std::abs(grid_range.hi));
    if (trunc <= extent) return std::numeric_limits<double>::infinity();

    double big = std::max(5000.0, 50.0 * trunc);
    Interval wide{-big, big};
    bool clamped = false;
    if (auto vw = s.valid_window()) {
        wide.lo = std::max(wide.lo, vw->lo);
        wide.hi = std::min(wide.hi, vw->hi);
        clamped = (wide.lo > -big || wide.hi < big);
        big = std::max(std::abs(wide.lo), std::abs(wide.hi));
    }
    if (wide.lo > wide.hi) return 0.0;

    const std::vector<double> pts = s.enumerate(wide);
    std::vector<double> terms;
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) min_gap = std::min(min_gap, pts[i] - pts[i - 1]);
        if (std::abs(pts[i]) <= trunc) continue;
        const double d = grid_range.distance(pts[i]);
        if (d <= 0.0) return std::numeric_limits<double>::infinity();
        terms.push_back(1.0 / (d * d));
    }
    std::sort(terms.begin(), terms.end());  // ascending: small terms first
    double sum = pairwise_sum(terms);

    // Remainder for points beyond the enumerated radius: a set with minimal
    // gap delta has counting measure <= dx/delta, so
    //   sum_{|p|>big} 1/dist(p)^2 <= 2/(delta * (big - extent)).
    if (!clamped) {
        const double delta = std::isfinite(min_gap) ? min_gap : 2.0 * big;
        sum += 2.0 / (delta * (big - extent));
    }
    return c2 * sum;
}

namespace {

// Upper bound on sup_x over the grid of the mass dropped by the truncation:
// the dropped lattice points out to a wider radius go through the exact
// evaluator, and only the points beyond that radius fall back to the decay
// envelope c2 / dist^2 with the integral remainder of lattice_decay_tail.
double evaluated_truncation_tail(const TileFunction& phi, const ShiftSet& t_set, double trunc,
                                 const GridSpec& grid) {
    const Interval range = grid.range();
    const double extent = std::max(std::abs(range.lo), std::abs(range.hi));
    if (trunc <= extent) return std::numeric_limits<double>::infinity();

    double big = std::max({1000.0, 4.0 * trunc, extent + 100.0});
    Interval wide{-big, big};
    bool clamped = false;
    if (auto vw = t_set.valid_window()) {
        wide.lo = std::max(wide.lo, vw->lo);
        wide.hi = std::min(wide.hi, vw->hi);
        clamped = (wide.lo > -big || wide.hi < big);
        big = std::max(std::abs(wide.lo), std::abs(wide.hi));
    }
    if (wide.lo > wide.hi) return 0.0;

    // Set difference against the profile's own enumeration, so the tail sums
    // exactly the terms the profile excluded, whatever the window edge slack.
    const std::vector<double> all = t_set.enumerate(wide);
    const std::vector<double> kept = t_set.enumerate({-trunc, trunc});
    std::vector<double> far;
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (i > 0) min_gap = std::min(min_gap, all[i] - all[i - 1]);
        const auto it = std::lower_bound(kept.begin(), kept.end(), all[i] - 1e-9);
        if (it != kept.end() && std::abs(*it - all[i]) <= 1e-9) continue;
        far.push_back(all[i]);
    }

    double worst = 0.0;
    std::vector<double> terms(far.size());
    for (double x : grid.points()) {
        for (std::size_t i = 0; i < far.size(); ++i) terms[i] = phi.eval(x - far[i]);
        std::sort(terms.begin(), terms.end());
        worst = std::max(worst, pairwise_sum(terms));
    }

    if (clamped) return worst;  // the set has no points beyond the enumeration
    if (!(phi.decay_constant > 0.0)) return std::numeric_limits<double>::infinity();
    const double delta = std::isfinite(min_gap) ? min_gap : 2.0 * big;
    return worst + phi.decay_constant * 2.0 / (delta * (big - extent));
}

}  // namespace

std::vector<double> tiling_profile(const TileFunction& phi, const ShiftSet& t_set,
                                   const GridSpec& grid, double trunc) {
    if (!phi.eval) throw std::invalid_argument("tiling_profile: tile function has no evaluator");
    if (trunc <= 0.0) throw std::invalid_argument("tiling_profile: trunc must be positive");

    const std::vector<double> shifts = t_set.enumerate({-trunc, trunc});
    const std::vector<double> xs = grid.points();
    if (xs.empty()) throw std::invalid_argument("tiling_profile: empty grid");

    std::vector<double> out;
    out.reserve(xs.size());
    std::vector<double> terms;
    for (double x : xs) {
        terms.clear();
        if (phi.support) {
            // Only t with x - t inside the support contribute: t in [x - hi, x - lo].
            const auto first = std::lower_bound(shifts.begin(), shifts.end(),
                                                x - phi.support->hi - 1e-12);
            const auto last = std::upper_bound(shifts.begin(), shifts.end(),
                                               x - phi.support->lo + 1e-12);
            for (auto it = first; it != last; ++it) terms.push_back(phi.eval(x - *it));
        } else {
            for (double t : shifts) terms.push_back(phi.eval(x - t));
        }
        out.push_back(pairwise_sum(terms));
    }
    return out;
}

TilingReport tiling_sum(const TileFunction& phi, const ShiftSet& t_set, const GridSpec& grid,
                        double trunc, double level, double tol) {
    const std::vector<double> values = tiling_profile(phi, t_set, grid, trunc);
    const std::vector<double> xs = grid.points();

    TilingReport rep;
    rep.grid_description = grid.describe();
    rep.level_target = level;
    rep.trunc = trunc;
    rep.tolerance = tol;

    double worst = -1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dev = std::abs(values[i] - level);
        if (dev > worst) {
            worst = dev;
            rep.worst_x = xs[i];
        }
    }
    rep.max_abs_deviation = worst;

    if (phi.support) {
        // All contributing shifts lie in [grid.lo - hi, grid.hi - lo]; the sum
        // is exact as soon as the truncation window encloses that range.
        const bool enclosed = (-trunc <= grid.lo - phi.support->hi + 1e-12) &&
                              (trunc >= grid.hi - phi.support->lo - 1e-12);
        rep.truncation_tail_bound = enclosed ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
        rep.truncation_tail_bound = evaluated_truncation_tail(phi, t_set, trunc, grid);
    }
    rep.verdict = (rep.max_abs_deviation + rep.truncation_tail_bound) <= tol;
    return rep;
}

double density_from_tiling(const TileFunction& phi, double level) {
    if (!(phi.integral > 0.0)) {
        throw std::domain_error("density_from_tiling: tile integral is not positive");
    }
    if (!(level > 0.0)) throw std::invalid_argument("density_from_tiling: level must be positive");
    return level / phi.integral;
}

namespace {

// All distinct positive pairwise differences of a prefix of `pts`, restricted
// to (tol, cap], ascending.
std::vector<double> period_candidates(std::span<const double> pts, double cap, double tol) {
    const std::size_t m = std::min<std::size_t>(pts.size(), 100);
    std::vector<double> cand;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = pts[j] - pts[i];
            if (d > tol && d <= cap) cand.push_back(d);
        }
    }
    std::sort(cand.begin(), cand.end());
    std::vector<double> out;
    for (double d : cand) {
        if (out.empty() || d - out.back() > tol) out.push_back(d);
    }
    return out;
}

bool contains_approx(const std::vector<double>& sorted, double x, double tol) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x - tol);
    return it != sorted.end() && std::abs(*it - x) <= tol;
}

}  // namespace

std::optional<std::vector<ArithmeticProgression>> ap_decomposition(std::span<const double> points,
                                                                   double support_diam,
                                                                   double tol) {
    if (points.size() < 4) throw std::invalid_argument("ap_decomposition: need at least 4 points");
    if (!(support_diam > 0.0)) {
        throw std::invalid_argument("ap_decomposition: support diameter must be positive");
    }
    std::vector<double> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    const double span = pts.back() - pts.front();
    if (span < 10.0 * support_diam) {
        throw std::invalid_argument("ap_decomposition: point window shorter than 10 support diameters");
    }

    const double cap = std::min(4.0 * support_diam, span / 4.0);

    // Work on the central half-window so truncation edges cannot break a
    // progression.
    const double core_lo = pts.front() + span / 4.0;
    const double core_hi = pts.back() - span / 4.0;
    std::vector<double> core;
    for (double p : pts) {
        if (p >= core_lo - tol && p <= core_hi + tol) core.push_back(p);
    }
    if (core.size() < 4) throw std::invalid_argument("ap_decomposition: too few central points");

    // Single-period fast path.
    if (auto pf = detect_periodic_form(pts, cap, tol)) {
        std::vector<ArithmeticProgression> out;
        for (double o : pf->offsets) out.push_back({pf->period, o});
        return out;
    }

    const std::vector<double> candidates = period_candidates(core, cap, tol);
    std::vector<double> remaining = core;
    std::vector<ArithmeticProgression> found;

    bool progress = true;
    while (!remaining.empty() && progress) {
        progress = false;
        for (double a : candidates) {
            if (remaining.empty()) break;
            // Cluster residues of the remaining points mod a; try to peel each
            // full progression.
            std::vector<double> residues;
            residues.reserve(remaining.size());
            for (double p : remaining) {
                double r = std::fmod(p, a);
                if (r < 0.0) r += a;
                residues.push_back(r);
            }
            const std::vector<double> offsets =
                circular_residue_clusters(std::move(residues), a, tol);
            for (double o : offsets) {
                // Regenerate aZ + o over the core span and require every
                // regenerated point to be present.
                const long long k_lo = static_cast<long long>(std::ceil((core_lo - o - tol) / a));
                const long long k_hi = static_cast<long long>(std::floor((core_hi - o + tol) / a));
                if (k_hi - k_lo + 1 < 2) continue;
                bool full = true;
                std::vector<double> regen;
                for (long long k = k_lo; k <= k_hi; ++k) {
                    const double x = a * static_cast<double>(k) + o;
                    if (!contains_approx(remaining, x, tol)) {
                        full = false;
                        break;
                    }
                    regen.push_back(x);
                }
                if (!full) continue;
                // Peel.
                std::vector<double> rest;
                std::size_t ri = 0;
                for (double p : remaining) {
                    if (ri < regen.size() && std::abs(p - regen[ri]) <= tol) {
                        ++ri;
                    } else {
                        rest.push_back(p);
                    }
                }
                remaining = std::move(rest);
                double o_norm = std::fmod(o, a);
                if (o_norm < 0.0) o_norm += a;
                found.push_back({a, o_norm});
                progress = true;
                if (found.size() > 32) return std::nullopt;
            }
        }
    }
    if (!remaining.empty()) return std::nullopt;
    std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
        return l.period != r.period ? l.period < r.period : l.offset < r.offset;
    });
    return found;
}

SupNormReport sup_norm_check(const StepWindow& g, double density_time, double density_freq,
                             const GridSpec& freq_grid) {
    if (!(density_time > 0.0) || !(density_freq > 0.0)) {
        throw std::invalid_argument("sup_norm_check: densities must be positive");
    }
    SupNormReport rep;
    rep.grid_description = freq_grid.describe();

    rep.sup_time = g.max_abs_value();
    rep.bound_time = std::sqrt(density_time);
    rep.slack_time = rep.bound_time - rep.sup_time;
    rep.time_ok = rep.sup_time <= rep.bound_time + 1e-12;

    double grid_max = 0.0;
    for (double xi : freq_grid.points()) {
        grid_max = std::max(grid_max, std::abs(g.fourier(xi)));
    }
    rep.sup_freq_grid = grid_max;

    // |d/dxi g^(xi)| <= 2 pi Integral |x g(x)| dx, computed exactly per interval.
    double moment = 0.0;
    const auto& bps = g.breakpoints();
    const auto& vals = g.values();
    for (std::size_t k = 0; k < vals.size(); ++k) {
        moment += std::abs(vals[k]) * abs_moment(bps[k], bps[k + 1]);
    }
    rep.freq_lipschitz = 2.0 * kPi * moment;
    rep.sup_freq_upper = grid_max + rep.freq_lipschitz * freq_grid.step / 2.0;

    rep.bound_freq = std::sqrt(density_freq);
    rep.slack_freq = rep.bound_freq - rep.sup_freq_grid;
    rep.freq_ok = rep.sup_freq_grid <= rep.bound_freq + 1e-12;
    return rep;
}

}  // namespace gabortile
