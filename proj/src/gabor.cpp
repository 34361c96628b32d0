#include "gabortile/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gabortile/quadrature.hpp"
#include "gabortile/summation.hpp"

namespace gabortile {

namespace {

constexpr double kPi = std::numbers::pi;

// Time shifts that can make g(. - t) overlap supp f: t in [f_lo - g_hi, f_hi - g_lo].
Interval overlap_shift_range(const StepWindow& f, const StepWindow& g) {
    return {f.support_lo() - g.support_hi(), f.support_hi() - g.support_lo()};
}

}  // namespace

cplx inner_product(const StepWindow& g, const TimeFreqAtom& a, const TimeFreqAtom& b) {
    const StepWindow p = product(g.translated(a.time), g.translated(b.time), /*conjugate_b=*/true);
    if (p.is_zero(0.0)) return {0.0, 0.0};
    // Integral p(x) e^{2 pi i (a.freq - b.freq) x} dx = p^(-(a.freq - b.freq))
    return p.fourier(b.freq - a.freq);
}

cplx gabor_coefficient(const StepWindow& f, const StepWindow& g, const TimeFreqAtom& atom) {
    const StepWindow p = product(f, g.translated(atom.time), /*conjugate_b=*/true);
    if (p.is_zero(0.0)) return {0.0, 0.0};
    return p.fourier(atom.freq);
}

GramReport gram_report(const GaborSystem& sys) {
    const auto ts = sys.time_shifts.enumerate({-sys.trunc_time, sys.trunc_time});
    const auto ss = sys.freq_shifts.enumerate({-sys.trunc_freq, sys.trunc_freq});
    if (ts.size() < 2 || ss.size() < 2) {
        throw std::invalid_argument(
            "gram_report: truncation leaves fewer than 2 time or 2 frequency shifts");
    }
    const double diam = sys.window.diameter();

    GramReport rep;
    rep.atoms = ts.size() * ss.size();
    rep.trunc_time = sys.trunc_time;
    rep.trunc_freq = sys.trunc_freq;

    auto consider_off = [&rep](double mag, const TimeFreqAtom& a, const TimeFreqAtom& b) {
        if (mag > rep.max_off_diagonal) {
            rep.max_off_diagonal = mag;
            rep.worst_a = a;
            rep.worst_b = b;
        }
    };

    const std::size_t ns = ss.size();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i; j < ts.size(); ++j) {
            if (i != j && std::abs(ts[i] - ts[j]) >= diam - 1e-15) {
                rep.pairs_skipped_disjoint += ns * ns;
                continue;
            }
            // One product window per time pair; each frequency pair is then a
            // single closed-form transform of it.
            const StepWindow p = product(sys.window.translated(ts[i]),
                                         sys.window.translated(ts[j]), /*conjugate_b=*/true);
            if (i == j) {
                const double diag = p.fourier(0.0).real();  // = ||g||^2, same for every s
                for (std::size_t k = 0; k < ns; ++k) {
                    rep.max_diagonal_deviation =
                        std::max(rep.max_diagonal_deviation, std::abs(diag - 1.0));
                    ++rep.pairs_evaluated;
                    for (std::size_t l = k + 1; l < ns; ++l) {
                        const cplx v = p.fourier(ss[l] - ss[k]);
                        consider_off(std::abs(v), {ts[i], ss[k]}, {ts[j], ss[l]});
                        ++rep.pairs_evaluated;
                    }
                }
            } else {
                for (std::size_t k = 0; k < ns; ++k) {
                    for (std::size_t l = 0; l < ns; ++l) {
                        const cplx v = p.fourier(ss[l] - ss[k]);
                        consider_off(std::abs(v), {ts[i], ss[k]}, {ts[j], ss[l]});
                        ++rep.pairs_evaluated;
                    }
                }
            }
        }
    }
    return rep;
}

namespace {

double parseval_defect_at(const GaborSystem& sys, const StepWindow& f, double freq_trunc) {
    const double norm_sq = f.norm_sq();
    const Interval t_range = overlap_shift_range(f, sys.window);
    const Interval t_window{std::max(-sys.trunc_time, t_range.lo),
                            std::min(sys.trunc_time, t_range.hi)};
    std::vector<double> ts;
    if (t_window.lo <= t_window.hi) ts = sys.time_shifts.enumerate(t_window);
    const auto ss = sys.freq_shifts.enumerate({-freq_trunc, freq_trunc});

    std::vector<double> terms;
    terms.reserve(ts.size() * ss.size());
    for (double t : ts) {
        const StepWindow p = product(f, sys.window.translated(t), /*conjugate_b=*/true);
        if (p.is_zero(0.0)) continue;
        for (double s : ss) terms.push_back(std::norm(p.fourier(s)));
    }
    return norm_sq - pairwise_sum(terms);
}

}  // namespace

double parseval_defect(const GaborSystem& sys, const StepWindow& f) {
    if (f.is_zero(1e-15)) throw std::invalid_argument("parseval_defect: f is identically zero");
    return parseval_defect_at(sys, f, sys.trunc_freq);
}

double parseval_defect_adaptive(const GaborSystem& sys, const StepWindow& f, double rel_change,
                                double* freq_trunc_used) {
    if (f.is_zero(1e-15)) throw std::invalid_argument("parseval_defect: f is identically zero");
    const double scale = f.norm_sq();
    double r = sys.trunc_freq;
    double prev = parseval_defect_at(sys, f, r);
    for (int round = 0; round < 8; ++round) {
        const double next_r = 2.0 * r;
        const double next = parseval_defect_at(sys, f, next_r);
        if (std::abs(next - prev) <= rel_change * scale) {
            if (freq_trunc_used) *freq_trunc_used = next_r;
            return next;
        }
        r = next_r;
        prev = next;
    }
    if (freq_trunc_used) *freq_trunc_used = r;
    return prev;
}

HFunction::HFunction(std::vector<StepWindow> terms, double norm_f_sq)
    : terms_(std::move(terms)), norm_f_sq_(norm_f_sq) {
    if (!(norm_f_sq_ > 0.0)) throw std::invalid_argument("HFunction: ||f||^2 must be positive");
}

double HFunction::operator()(double xi) const {
    std::vector<double> parts;
    parts.reserve(terms_.size());
    for (const StepWindow& h : terms_) parts.push_back(std::norm(h.fourier(xi)));
    return pairwise_sum(parts) / norm_f_sq_;
}

std::vector<double> HFunction::sample(const GridSpec& grid) const {
    std::vector<double> out;
    const auto xs = grid.points();
    out.reserve(xs.size());
    for (double x : xs) out.push_back((*this)(x));
    return out;
}

double HFunction::decay_constant() const {
    std::vector<double> parts;
    parts.reserve(terms_.size());
    for (const StepWindow& h : terms_) {
        const double tv = h.total_jump();
        parts.push_back((tv / (2.0 * kPi)) * (tv / (2.0 * kPi)));
    }
    return pairwise_sum(parts) / norm_f_sq_;
}

HFunction build_h_function(const StepWindow& f, const StepWindow& g, const ShiftSet& time_set) {
    if (f.is_zero(1e-15)) throw std::invalid_argument("build_h_function: f is identically zero");
    if (g.is_zero(1e-15)) throw std::invalid_argument("build_h_function: g is identically zero");
    const Interval t_range = overlap_shift_range(f, g);
    const auto ts = time_set.enumerate(t_range);
    std::vector<StepWindow> terms;
    for (double t : ts) {
        StepWindow h = product(f, g.translated(t), /*conjugate_b=*/false);
        if (h.is_zero(0.0)) continue;
        terms.push_back(std::move(h));
    }
    if (terms.empty()) {
        throw std::invalid_argument("build_h_function: no time shift overlaps the support of f");
    }
    return HFunction(std::move(terms), f.norm_sq());
}

TilingReport verify_h_tiling(const HFunction& h, const ShiftSet& freq_set, const GridSpec& grid,
                             double s_trunc, double tol) {
    TileFunction phi;
    phi.eval = [&h](double xi) { return h(xi); };
    phi.support = std::nullopt;
    phi.decay_constant = h.decay_constant();
    phi.label = "h-function";
    return tiling_sum(phi, freq_set, grid, s_trunc, 1.0, tol);
}

TileFunction tile_from_h(const HFunction& h, double radius, double quad_tol) {
    if (radius <= 0.0) throw std::invalid_argument("tile_from_h: radius must be positive");
    HFunction copy = h;
    auto eval = [copy](double xi) { return copy(xi); };

    double diam = 1.0;
    for (const StepWindow& term : copy.terms()) diam = std::max(diam, term.diameter());
    const double seg = std::max(0.25 / diam, 1e-3);
    std::vector<double> cuts;
    cuts.push_back(-radius);
    for (double x = -radius + seg; x < radius - 0.5 * seg; x += seg) cuts.push_back(x);
    cuts.push_back(radius);

    TileFunction phi;
    phi.eval = eval;
    phi.support = std::nullopt;
    phi.decay_constant = copy.decay_constant();
    phi.integral = adaptive_simpson_segmented(eval, cuts, quad_tol);
    phi.integral_tail = 2.0 * phi.decay_constant / radius;
    phi.label = "h-function";
    return phi;
}

}  // namespace gabortile
