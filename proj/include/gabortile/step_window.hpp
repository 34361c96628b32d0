#pragma once

#include <complex>
#include <vector>

#include "gabortile/interval.hpp"

namespace gabortile {

using cplx = std::complex<double>;

// Finite union of disjoint positive-length intervals. Represents the set
// where a window is nonzero.
struct SupportSet {
    std::vector<Interval> intervals;  // sorted, pairwise disjoint up to endpoints

    double measure() const;
    double lo() const { return intervals.front().lo; }
    double hi() const { return intervals.back().hi; }
    SupportSet translated(double shift) const;

    // First positive-length intersection between this and other, if any.
    // Intervals touching only at endpoints do not count.
    bool overlaps(const SupportSet& other, Interval* witness = nullptr) const;
};

// Compactly supported piecewise-constant complex function on the line.
// Intervals follow the half-open convention [a, b): at a breakpoint the
// value of the interval to the right applies. Outside the breakpoint range
// the function is zero. A default-constructed window is identically zero.
class StepWindow {
public:
    StepWindow() = default;
    StepWindow(std::vector<double> breakpoints, std::vector<cplx> values);

    static StepWindow indicator(double lo, double hi, cplx value = cplx{1.0, 0.0});
    static StepWindow from_support(const SupportSet& omega, cplx value = cplx{1.0, 0.0});

    bool empty() const { return values_.empty(); }
    std::size_t interval_count() const { return values_.size(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<cplx>& values() const { return values_; }

    // Pointwise evaluation with the [a, b) convention.
    cplx operator()(double x) const;

    // Closed-form Fourier transform  w^(xi) = Integral w(x) e^{-2 pi i xi x} dx.
    cplx fourier(double xi) const;

    StepWindow square_modulus() const;
    StepWindow translated(double shift) const;
    StepWindow scaled(cplx factor) const;

    // Merges adjacent intervals whose values agree within tol and drops
    // zero-valued intervals at the ends of the representation.
    StepWindow simplified(double tol = 0.0) const;

    // Union of intervals where |value| > tol, merged across shared
    // endpoints. Throws std::domain_error when nothing exceeds tol.
    SupportSet support(double tol = 1e-12) const;

    double norm_sq() const;       // Integral |w|^2
    cplx integral() const;        // Integral w
    double abs_integral() const;  // Integral |w|
    double max_abs_value() const;

    // Sum of the jump magnitudes at all breakpoints, counting the implicit
    // zero outside the support. Governs the decay |w^(xi)| <= total_jump / (2 pi |xi|).
    double total_jump() const;

    double support_lo() const;
    double support_hi() const;
    double diameter() const;

    bool is_zero(double tol = 0.0) const;

private:
    std::vector<double> breakpoints_;  // strictly increasing; size = values_.size() + 1
    std::vector<cplx> values_;
};

// Pointwise product a(x) * b(x), or a(x) * conj(b(x)), realized on the common
// refinement of the two breakpoint lists restricted to the support overlap.
StepWindow product(const StepWindow& a, const StepWindow& b, bool conjugate_b = false);

// Integral_a^b e^{2 pi i theta x} dx with a series-stabilized evaluation of
// the removable singularity at theta = 0.
cplx oscillatory_segment_integral(double a, double b, double theta);

}  // namespace gabortile
