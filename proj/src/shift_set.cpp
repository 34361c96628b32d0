#include "gabortile/shift_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace gabortile {

namespace {

constexpr double kDedupTol = 1e-12;

void sort_dedup(std::vector<double>& pts, double tol) {
    std::sort(pts.begin(), pts.end());
    if (tol <= 0.0) return;
    std::vector<double> out;
    out.reserve(pts.size());
    for (double p : pts) {
        if (out.empty() || p - out.back() > tol) out.push_back(p);
    }
    pts = std::move(out);
}

// splitmix64; turns the bit pattern of a point into a uniform deviate
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double displacement(const DisplacementRule& rule, double p) {
    switch (rule.kind) {
        case DisplacementRule::Kind::jitter: {
            const auto bits = std::bit_cast<std::uint64_t>(p) ^ rule.seed;
            const double u = static_cast<double>(mix64(bits) >> 11) * 0x1.0p-53;
            return rule.amplitude * (2.0 * u - 1.0);
        }
        case DisplacementRule::Kind::alternating: {
            const auto k = std::llround(p / rule.reference_spacing);
            return (k % 2 == 0) ? rule.amplitude : -rule.amplitude;
        }
    }
    return 0.0;
}

void append_progression(std::vector<double>& out, double period, double offset, Interval window,
                        double slack) {
    const auto k_lo = static_cast<long long>(std::ceil((window.lo - offset) / period - 1e-9));
    const auto k_hi = static_cast<long long>(std::floor((window.hi - offset) / period + 1e-9));
    for (long long k = k_lo; k <= k_hi; ++k) {
        const double p = offset + static_cast<double>(k) * period;
        if (p >= window.lo - slack && p <= window.hi + slack) out.push_back(p);
    }
}

double window_slack(Interval window) {
    return kDedupTol * std::max({1.0, std::abs(window.lo), std::abs(window.hi)});
}

}  // namespace

ShiftSet ShiftSet::periodic(double period, std::vector<double> offsets) {
    if (!(period > 0.0)) throw std::invalid_argument("ShiftSet::periodic: period must be > 0");
    if (offsets.empty()) throw std::invalid_argument("ShiftSet::periodic: need at least one offset");
    std::sort(offsets.begin(), offsets.end());
    for (double o : offsets) {
        if (o < 0.0 || o >= period) {
            throw std::invalid_argument("ShiftSet::periodic: offsets must lie in [0, period)");
        }
    }
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
        if (offsets[i + 1] - offsets[i] <= kDedupTol) {
            throw std::invalid_argument("ShiftSet::periodic: offsets must be distinct");
        }
    }
    return ShiftSet(Periodic{period, std::move(offsets)});
}

ShiftSet ShiftSet::progressions(std::vector<ArithmeticProgression> items) {
    if (items.empty()) {
        throw std::invalid_argument("ShiftSet::progressions: need at least one progression");
    }
    for (const auto& ap : items) {
        if (!(ap.period > 0.0)) {
            throw std::invalid_argument("ShiftSet::progressions: periods must be > 0");
        }
    }
    return ShiftSet(Progressions{std::move(items)});
}

ShiftSet ShiftSet::explicit_points(std::vector<double> points, Interval valid_window) {
    if (!(valid_window.lo < valid_window.hi)) {
        throw std::invalid_argument("ShiftSet::explicit_points: invalid validity window");
    }
    sort_dedup(points, kDedupTol);
    return ShiftSet(Explicit{std::move(points), valid_window});
}

ShiftSet ShiftSet::perturbed(ShiftSet base, DisplacementRule rule) {
    auto holder = std::make_shared<const ShiftSet>(std::move(base));
    return ShiftSet(Perturbed{std::move(holder), rule});
}

std::optional<Interval> ShiftSet::valid_window() const {
    if (is_explicit()) return as_explicit().valid_window;
    if (is_perturbed()) {
        auto base = as_perturbed().base->valid_window();
        if (!base) return std::nullopt;
        const double amp = std::abs(as_perturbed().rule.amplitude);
        return Interval{base->lo + amp, base->hi - amp};
    }
    return std::nullopt;
}

std::vector<double> ShiftSet::enumerate(Interval window) const {
    if (!(window.lo <= window.hi)) {
        throw std::invalid_argument("ShiftSet::enumerate: window must satisfy lo <= hi");
    }
    const double slack = window_slack(window);
    std::vector<double> pts;

    if (is_periodic()) {
        const auto& rep = as_periodic();
        for (double o : rep.offsets) append_progression(pts, rep.period, o, window, slack);
        sort_dedup(pts, kDedupTol);
        return pts;
    }

    if (is_progressions()) {
        const auto& rep = as_progressions();
        std::vector<std::vector<double>> per_ap;
        per_ap.reserve(rep.items.size());
        for (const auto& ap : rep.items) {
            std::vector<double> one;
            append_progression(one, ap.period, ap.offset, window, slack);
            per_ap.push_back(std::move(one));
        }
        std::size_t total = 0;
        for (const auto& v : per_ap) total += v.size();
        pts.reserve(total);
        for (const auto& v : per_ap) pts.insert(pts.end(), v.begin(), v.end());
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i + 1] - pts[i] <= kDedupTol) {
                throw std::invalid_argument(
                    "ShiftSet: progressions are not disjoint near " + std::to_string(pts[i]));
            }
        }
        return pts;
    }

    if (is_explicit()) {
        const auto& rep = as_explicit();
        if (window.lo < rep.valid_window.lo - slack || window.hi > rep.valid_window.hi + slack) {
            throw std::out_of_range("ShiftSet::enumerate: window exceeds the declared validity range");
        }
        for (double p : rep.points) {
            if (p >= window.lo - slack && p <= window.hi + slack) pts.push_back(p);
        }
        return pts;
    }

    const auto& rep = as_perturbed();
    const double amp = std::abs(rep.rule.amplitude);
    auto base_pts = rep.base->enumerate({window.lo - amp, window.hi + amp});
    pts.reserve(base_pts.size());
    for (double p : base_pts) {
        const double q = p + displacement(rep.rule, p);
        if (q >= window.lo - slack && q <= window.hi + slack) pts.push_back(q);
    }
    sort_dedup(pts, kDedupTol);
    return pts;
}

DensityEstimate uniform_density(const ShiftSet& s, std::span<const double> r_list, int x_samples) {
    if (r_list.empty()) throw std::invalid_argument("uniform_density: r_list must be nonempty");
    if (x_samples < 1) throw std::invalid_argument("uniform_density: x_samples must be >= 1");
    std::vector<double> rs(r_list.begin(), r_list.end());
    std::sort(rs.begin(), rs.end());
    if (!(rs.front() > 0.0)) throw std::invalid_argument("uniform_density: radii must be > 0");

    const double r_max = rs.back();
    const auto pts = s.enumerate({-r_max, r_max});

    double max_gap = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        max_gap = std::max(max_gap, pts[i + 1] - pts[i]);
    }
    if (pts.size() < 2) max_gap = 2.0 * r_max;  // no interior gap observed

    DensityEstimate out;
    out.max_gap = max_gap;
    for (double r : rs) {
        double lo_ratio = std::numeric_limits<double>::infinity();
        double hi_ratio = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < x_samples; ++j) {
            const double x = (x_samples == 1)
                                 ? -0.5 * r
                                 : -r + static_cast<double>(j) * r / static_cast<double>(x_samples - 1);
            const auto first = std::lower_bound(pts.begin(), pts.end(), x);
            const auto last = std::upper_bound(pts.begin(), pts.end(), x + r);
            const double ratio = static_cast<double>(last - first) / r;
            lo_ratio = std::min(lo_ratio, ratio);
            hi_ratio = std::max(hi_ratio, ratio);
        }
        out.samples.push_back({r, lo_ratio, hi_ratio});
    }
    const auto& top = out.samples.back();
    out.estimate = 0.5 * (top.min_ratio + top.max_ratio);
    out.error_band = 0.5 * (top.max_ratio - top.min_ratio) + 2.0 * max_gap / r_max;
    return out;
}

double min_gap(const ShiftSet& s, Interval window) {
    const auto pts = s.enumerate(window);
    if (pts.size() < 2) throw std::invalid_argument("min_gap: need at least 2 points in the window");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        best = std::min(best, pts[i + 1] - pts[i]);
    }
    return best;
}

FlcResult flc_check(const ShiftSet& s, Interval window, double gap_tol, int max_distinct) {
    const auto pts = s.enumerate(window);
    if (pts.size() < 3) throw std::invalid_argument("flc_check: need at least 3 points in the window");
    std::vector<double> gaps(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) gaps[i] = pts[i + 1] - pts[i];
    std::sort(gaps.begin(), gaps.end());

    FlcResult out;
    double cluster_sum = gaps.front();
    std::size_t cluster_n = 1;
    double cluster_last = gaps.front();
    for (std::size_t i = 1; i < gaps.size(); ++i) {
        if (gaps[i] - cluster_last <= gap_tol) {
            cluster_sum += gaps[i];
            ++cluster_n;
        } else {
            out.gap_values.push_back(cluster_sum / static_cast<double>(cluster_n));
            cluster_sum = gaps[i];
            cluster_n = 1;
        }
        cluster_last = gaps[i];
    }
    out.gap_values.push_back(cluster_sum / static_cast<double>(cluster_n));
    out.verdict = out.gap_values.size() <= static_cast<std::size_t>(max_distinct);
    return out;
}

std::vector<double> circular_residue_clusters(std::vector<double> residues, double period,
                                              double tol) {
    if (residues.empty()) return {};
    std::sort(residues.begin(), residues.end());
    // chain-merge on the line first
    std::vector<double> reps;
    double sum = residues.front();
    std::size_t count = 1;
    double last = residues.front();
    for (std::size_t i = 1; i < residues.size(); ++i) {
        if (residues[i] - last <= tol) {
            sum += residues[i];
            ++count;
        } else {
            reps.push_back(sum / static_cast<double>(count));
            sum = residues[i];
            count = 1;
        }
        last = residues[i];
    }
    reps.push_back(sum / static_cast<double>(count));
    // wraparound: merge the first and last cluster across 0 == period
    if (reps.size() >= 2 && (period - (reps.back() - reps.front())) <= tol) {
        const double merged = reps.front();  // representative near zero
        reps.back() = merged;
        reps.erase(reps.begin());
    }
    for (auto& r : reps) {
        if (r >= period) r -= period;
        if (r < 0.0) r += period;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::optional<PeriodicForm> detect_periodic_form(std::span<const double> points, double max_period,
                                                 double tol) {
    if (!(max_period > 0.0)) throw std::invalid_argument("detect_periodic_form: max_period must be > 0");
    if (points.size() < 4) throw std::invalid_argument("detect_periodic_form: need at least 4 points");
    const double span = points.back() - points.front();
    if (span < 4.0 * max_period) {
        throw std::invalid_argument("detect_periodic_form: points must span at least 4 * max_period");
    }

    // central half of the span
    const double core_lo = points.front() + 0.25 * span;
    const double core_hi = points.back() - 0.25 * span;
    std::vector<double> core;
    for (double p : points) {
        if (p >= core_lo && p <= core_hi) core.push_back(p);
    }
    if (core.size() < 2) return std::nullopt;

    // candidate periods from pairwise differences of the first quarter
    const std::size_t m = (points.size() + 3) / 4;
    std::vector<double> candidates;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = points[j] - points[i];
            if (d > tol && d <= max_period + tol) candidates.push_back(d);
        }
    }
    if (candidates.empty()) return std::nullopt;
    std::sort(candidates.begin(), candidates.end());
    std::vector<double> dedup;
    for (double c : candidates) {
        if (dedup.empty() || c - dedup.back() > tol) dedup.push_back(c);
    }

    for (double a : dedup) {
        std::vector<double> residues;
        residues.reserve(core.size());
        for (double p : core) {
            double r = std::fmod(p, a);
            if (r < 0.0) r += a;
            residues.push_back(r);
        }
        const auto offsets = circular_residue_clusters(std::move(residues), a, tol);

        // regenerate over the core span and demand an exact match
        std::vector<double> regen;
        for (double o : offsets) {
            append_progression(regen, a, o, {core.front() - tol, core.back() + tol}, 0.0);
        }
        std::sort(regen.begin(), regen.end());
        if (regen.size() != core.size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < core.size(); ++i) {
            if (std::abs(regen[i] - core[i]) > tol) {
                match = false;
                break;
            }
        }
        if (match) return PeriodicForm{a, offsets};
    }
    return std::nullopt;
}

std::vector<double> difference_set(const ShiftSet& s, Interval window, double dedup_tol) {
    const auto pts = s.enumerate(window);
    if (pts.size() < 2) {
        throw std::invalid_argument("difference_set: need at least 2 points in the window");
    }
    std::vector<double> diffs;
    if (dedup_tol > 0.0) {
        // quantized dedup keeps memory at distinct-difference scale
        std::unordered_map<long long, double> bins;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const double d = pts[j] - pts[i];
                if (d <= dedup_tol) continue;
                const auto key = static_cast<long long>(std::llround(d / dedup_tol));
                bins.emplace(key, d);
            }
        }
        diffs.reserve(2 * bins.size());
        for (const auto& [key, d] : bins) {
            diffs.push_back(d);
            diffs.push_back(-d);
        }
        std::sort(diffs.begin(), diffs.end());
        std::vector<double> merged;
        for (double d : diffs) {
            if (merged.empty() || d - merged.back() > dedup_tol) merged.push_back(d);
        }
        return merged;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            const double d = pts[j] - pts[i];
            if (std::abs(d) > dedup_tol) diffs.push_back(d);
        }
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return diffs;
}

ResolvedDensity resolved_density(const ShiftSet& s, double radius, double detect_max_period) {
    if (!(radius > 0.0)) throw std::invalid_argument("resolved_density: radius must be > 0");
    Interval window{-radius, radius};
    if (auto vw = s.valid_window()) {
        window.lo = std::max(window.lo, vw->lo);
        window.hi = std::min(window.hi, vw->hi);
    }
    // uniform_density slides its windows across [-r, r], so the usable radius
    // is limited by both ends of the validity window.
    const double r_max = std::min(-window.lo, window.hi);
    if (!(r_max > 0.0)) {
        throw std::invalid_argument("resolved_density: validity window must straddle 0");
    }
    const std::vector<double> radii = {r_max / 8.0, r_max / 4.0, r_max / 2.0, r_max};

    ResolvedDensity out;
    out.estimate = uniform_density(s, radii, 64);
    out.value = out.estimate.estimate;

    const auto pts = s.enumerate({-r_max, r_max});
    if (pts.size() >= 4 && pts.back() - pts.front() >= 4.0 * detect_max_period) {
        out.form = detect_periodic_form(pts, detect_max_period, 1e-9);
        if (out.form) {
            out.exact = true;
            out.value = out.form->density();
        }
    }
    return out;
}

StructureReport analyze_structure(const ShiftSet& s, const StructureOptions& opts) {
    StructureReport out;
    out.density = uniform_density(s, opts.r_list, opts.x_samples);
    out.delta_min_gap = min_gap(s, opts.window);
    const auto flc = flc_check(s, opts.window, opts.gap_tol, opts.max_distinct);
    out.flc_verdict = flc.verdict;
    out.gap_values = flc.gap_values;
    const auto pts = s.enumerate(opts.window);
    const double span = pts.empty() ? 0.0 : pts.back() - pts.front();
    if (pts.size() >= 4 && span >= 4.0 * opts.detect_max_period) {
        out.detected_period = detect_periodic_form(pts, opts.detect_max_period, opts.detect_tol);
    }
    return out;
}

}  // namespace gabortile
