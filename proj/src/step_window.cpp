#include "gabortile/step_window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gabortile/summation.hpp"

namespace gabortile {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin(z)/z with a Taylor fallback once 2|z| drops below 1e-4 (i.e. the
// |2 pi theta L| threshold used by oscillatory_segment_integral).
double sinc_stable(double z) {
    if (std::abs(z) < 5e-5) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
    }
    return std::sin(z) / z;
}

}  // namespace

double SupportSet::measure() const {
    double total = 0.0;
    for (const auto& iv : intervals) total += iv.length();
    return total;
}

SupportSet SupportSet::translated(double shift) const {
    SupportSet out = *this;
    for (auto& iv : out.intervals) {
        iv.lo += shift;
        iv.hi += shift;
    }
    return out;
}

bool SupportSet::overlaps(const SupportSet& other, Interval* witness) const {
    for (const auto& a : intervals) {
        for (const auto& b : other.intervals) {
            const double lo = std::max(a.lo, b.lo);
            const double hi = std::min(a.hi, b.hi);
            if (hi > lo) {
                if (witness) *witness = {lo, hi};
                return true;
            }
        }
    }
    return false;
}

StepWindow::StepWindow(std::vector<double> breakpoints, std::vector<cplx> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty() && values_.empty()) return;
    if (breakpoints_.size() != values_.size() + 1) {
        throw std::invalid_argument("StepWindow: need exactly one more breakpoint than values");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1])) {
            throw std::invalid_argument("StepWindow: breakpoints must be strictly increasing");
        }
    }
}

StepWindow StepWindow::indicator(double lo, double hi, cplx value) {
    if (!(lo < hi)) throw std::invalid_argument("StepWindow::indicator: need lo < hi");
    return StepWindow({lo, hi}, {value});
}

StepWindow StepWindow::from_support(const SupportSet& omega, cplx value) {
    std::vector<double> bps;
    std::vector<cplx> vals;
    for (std::size_t i = 0; i < omega.intervals.size(); ++i) {
        const auto& iv = omega.intervals[i];
        if (!bps.empty() && iv.lo <= bps.back()) {
            if (iv.lo == bps.back()) {
                // shared endpoint: extend without a zero gap
                bps.push_back(iv.hi);
                vals.push_back(value);
                continue;
            }
            throw std::invalid_argument("StepWindow::from_support: intervals must be disjoint and sorted");
        }
        if (!bps.empty()) {
            // zero-valued gap between intervals
            bps.push_back(iv.lo);
            vals.push_back(cplx{0.0, 0.0});
            bps.push_back(iv.hi);
            vals.push_back(value);
        } else {
            bps.push_back(iv.lo);
            bps.push_back(iv.hi);
            vals.push_back(value);
        }
    }
    return StepWindow(std::move(bps), std::move(vals));
}

cplx StepWindow::operator()(double x) const {
    if (empty()) return {0.0, 0.0};
    if (x < breakpoints_.front() || x >= breakpoints_.back()) return {0.0, 0.0};
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const auto idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return values_[idx];
}

cplx oscillatory_segment_integral(double a, double b, double theta) {
    const double len = b - a;
    const double mid = 0.5 * (a + b);
    const double z = std::numbers::pi * theta * len;
    const double phase = kTwoPi * theta * mid;
    return len * sinc_stable(z) * cplx{std::cos(phase), std::sin(phase)};
}

cplx StepWindow::fourier(double xi) const {
    if (empty()) return {0.0, 0.0};
    std::vector<cplx> terms;
    terms.reserve(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] == cplx{0.0, 0.0}) continue;
        terms.push_back(values_[k] *
                        oscillatory_segment_integral(breakpoints_[k], breakpoints_[k + 1], -xi));
    }
    return pairwise_sum(terms);
}

StepWindow StepWindow::square_modulus() const {
    std::vector<cplx> vals(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) {
        vals[k] = cplx{std::norm(values_[k]), 0.0};
    }
    return StepWindow(breakpoints_, std::move(vals));
}

StepWindow StepWindow::translated(double shift) const {
    std::vector<double> bps(breakpoints_);
    for (auto& b : bps) b += shift;
    return StepWindow(std::move(bps), values_);
}

StepWindow StepWindow::scaled(cplx factor) const {
    std::vector<cplx> vals(values_);
    for (auto& v : vals) v *= factor;
    return StepWindow(breakpoints_, std::move(vals));
}

StepWindow StepWindow::simplified(double tol) const {
    if (empty()) return {};
    std::vector<double> bps;
    std::vector<cplx> vals;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!vals.empty() && std::abs(vals.back() - values_[k]) <= tol) {
            bps.back() = breakpoints_[k + 1];
            continue;
        }
        if (bps.empty()) bps.push_back(breakpoints_[k]);
        bps.push_back(breakpoints_[k + 1]);
        vals.push_back(values_[k]);
    }
    // trim zero-valued end intervals
    while (!vals.empty() && std::abs(vals.back()) <= tol) {
        vals.pop_back();
        bps.pop_back();
    }
    while (!vals.empty() && std::abs(vals.front()) <= tol) {
        vals.erase(vals.begin());
        bps.erase(bps.begin());
    }
    if (vals.empty()) return {};
    return StepWindow(std::move(bps), std::move(vals));
}

SupportSet StepWindow::support(double tol) const {
    if (tol < 0.0) throw std::invalid_argument("StepWindow::support: tol must be >= 0");
    SupportSet out;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (std::abs(values_[k]) <= tol) continue;
        const double lo = breakpoints_[k];
        const double hi = breakpoints_[k + 1];
        if (!out.intervals.empty() && out.intervals.back().hi == lo) {
            out.intervals.back().hi = hi;
        } else {
            out.intervals.push_back({lo, hi});
        }
    }
    if (out.intervals.empty()) {
        throw std::domain_error("StepWindow::support: window is zero at this tolerance");
    }
    return out;
}

double StepWindow::norm_sq() const {
    std::vector<double> terms;
    terms.reserve(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) {
        terms.push_back(std::norm(values_[k]) * (breakpoints_[k + 1] - breakpoints_[k]));
    }
    return pairwise_sum(terms);
}

cplx StepWindow::integral() const {
    std::vector<cplx> terms;
    terms.reserve(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) {
        terms.push_back(values_[k] * (breakpoints_[k + 1] - breakpoints_[k]));
    }
    return pairwise_sum(terms);
}

double StepWindow::abs_integral() const {
    std::vector<double> terms;
    terms.reserve(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) {
        terms.push_back(std::abs(values_[k]) * (breakpoints_[k + 1] - breakpoints_[k]));
    }
    return pairwise_sum(terms);
}

double StepWindow::max_abs_value() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

double StepWindow::total_jump() const {
    if (empty()) return 0.0;
    double total = std::abs(values_.front());
    for (std::size_t k = 1; k < values_.size(); ++k) {
        total += std::abs(values_[k] - values_[k - 1]);
    }
    total += std::abs(values_.back());
    return total;
}

double StepWindow::support_lo() const {
    if (empty()) throw std::domain_error("StepWindow: zero window has no support");
    return breakpoints_.front();
}

double StepWindow::support_hi() const {
    if (empty()) throw std::domain_error("StepWindow: zero window has no support");
    return breakpoints_.back();
}

double StepWindow::diameter() const { return support_hi() - support_lo(); }

bool StepWindow::is_zero(double tol) const {
    for (const auto& v : values_) {
        if (std::abs(v) > tol) return false;
    }
    return true;
}

StepWindow product(const StepWindow& a, const StepWindow& b, bool conjugate_b) {
    if (a.empty() || b.empty()) return {};
    const double lo = std::max(a.support_lo(), b.support_lo());
    const double hi = std::min(a.support_hi(), b.support_hi());
    if (!(lo < hi)) return {};

    std::vector<double> cuts;
    cuts.push_back(lo);
    auto add_cuts = [&](const std::vector<double>& bps) {
        for (double x : bps) {
            if (x > lo && x < hi) cuts.push_back(x);
        }
    };
    add_cuts(a.breakpoints());
    add_cuts(b.breakpoints());
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<cplx> vals;
    vals.reserve(cuts.size() - 1);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        cplx vb = b(mid);
        if (conjugate_b) vb = std::conj(vb);
        vals.push_back(a(mid) * vb);
    }
    return StepWindow(std::move(cuts), std::move(vals)).simplified(0.0);
}

}  // namespace gabortile
