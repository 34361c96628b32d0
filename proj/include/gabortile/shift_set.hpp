#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gabortile/interval.hpp"

namespace gabortile {

struct ArithmeticProgression {
    double period = 1.0;  // > 0
    double offset = 0.0;
};

// Deterministic displacement applied on top of a base set. The rule is a
// function of the base point value only, so enumeration windows compose.
struct DisplacementRule {
    enum class Kind { jitter, alternating };
    Kind kind = Kind::jitter;
    double amplitude = 0.0;
    std::uint64_t seed = 0;          // jitter: hash salt
    double reference_spacing = 1.0;  // alternating: parity of round(p / spacing)
};

// Symbolic generator of a countable point set on the line. Immutable.
class ShiftSet {
public:
    struct Periodic {
        double period;                 // > 0
        std::vector<double> offsets;   // distinct, inside [0, period)
    };
    struct Progressions {
        std::vector<ArithmeticProgression> items;  // disjoint within any bounded window
    };
    struct Explicit {
        std::vector<double> points;  // sorted strictly increasing
        Interval valid_window;
    };
    struct Perturbed {
        std::shared_ptr<const ShiftSet> base;
        DisplacementRule rule;
    };

    static ShiftSet periodic(double period, std::vector<double> offsets);
    static ShiftSet progressions(std::vector<ArithmeticProgression> items);
    static ShiftSet explicit_points(std::vector<double> points, Interval valid_window);
    static ShiftSet perturbed(ShiftSet base, DisplacementRule rule);

    // Points of the set inside the closed interval [window.lo, window.hi],
    // sorted, duplicates collapsed with tolerance 1e-12.
    std::vector<double> enumerate(Interval window) const;

    // Declared validity window for explicit lists; nullopt when unbounded.
    std::optional<Interval> valid_window() const;

    bool is_periodic() const { return std::holds_alternative<Periodic>(repr_); }
    bool is_progressions() const { return std::holds_alternative<Progressions>(repr_); }
    bool is_explicit() const { return std::holds_alternative<Explicit>(repr_); }
    bool is_perturbed() const { return std::holds_alternative<Perturbed>(repr_); }
    const Periodic& as_periodic() const { return std::get<Periodic>(repr_); }
    const Progressions& as_progressions() const { return std::get<Progressions>(repr_); }
    const Explicit& as_explicit() const { return std::get<Explicit>(repr_); }
    const Perturbed& as_perturbed() const { return std::get<Perturbed>(repr_); }

private:
    using Repr = std::variant<Periodic, Progressions, Explicit, Perturbed>;
    explicit ShiftSet(Repr repr) : repr_(std::move(repr)) {}
    Repr repr_;
};

struct DensitySample {
    double r = 0.0;
    double min_ratio = 0.0;  // min over window positions of count / r
    double max_ratio = 0.0;
};

struct DensityEstimate {
    double estimate = 0.0;    // midpoint of the band at the largest r
    double error_band = 0.0;  // (max-min)/2 + 2 * max_gap / r_largest
    double max_gap = 0.0;
    std::vector<DensitySample> samples;
};

// Sliding-window density estimate: for each r the count/r ratio is evaluated
// at x_samples window positions spread over [-r, 0], so the windows jointly
// cover [-r, r].
DensityEstimate uniform_density(const ShiftSet& s, std::span<const double> r_list, int x_samples);

// Minimum successive gap of the enumerated points; throws with fewer than 2.
double min_gap(const ShiftSet& s, Interval window);

struct FlcResult {
    bool verdict = false;
    std::vector<double> gap_values;  // cluster representatives
};

// Clusters successive gaps with tolerance gap_tol; true iff the number of
// distinct clusters stays within max_distinct.
FlcResult flc_check(const ShiftSet& s, Interval window, double gap_tol, int max_distinct);

struct PeriodicForm {
    double period = 0.0;
    std::vector<double> offsets;  // normalized into [0, period)
    double density() const { return static_cast<double>(offsets.size()) / period; }
};

// Searches for the minimal period a <= max_period such that the central half
// of the points coincides with aZ + offsets to within tol. Candidate periods
// come from pairwise differences of the first quarter of the points and are
// tested smallest-first. Returns nullopt when no candidate fits.
std::optional<PeriodicForm> detect_periodic_form(std::span<const double> points, double max_period,
                                                 double tol);

// Clusters residues on the circle of circumference `period` (chain-merge with
// tol, wraparound merge across 0 == period) and returns representatives
// normalized into [0, period), ascending.
std::vector<double> circular_residue_clusters(std::vector<double> residues, double period,
                                              double tol);

struct ResolvedDensity {
    double value = 0.0;  // exact count/period when a periodic form was detected, else the estimate
    bool exact = false;
    DensityEstimate estimate;  // sliding-window estimate, always computed
    std::optional<PeriodicForm> form;
};

// Density with the best available provenance: detect_periodic_form first (any
// period up to detect_max_period), falling back to uniform_density over
// [-radius, radius] clamped to the validity window.
ResolvedDensity resolved_density(const ShiftSet& s, double radius = 200.0,
                                 double detect_max_period = 10.0);

// All pairwise differences of the enumerated points, excluding the zero
// class |d| <= dedup_tol, deduplicated. Throws with fewer than 2 points.
std::vector<double> difference_set(const ShiftSet& s, Interval window, double dedup_tol);

struct StructureOptions {
    std::vector<double> r_list = {25.0, 50.0, 100.0, 200.0};
    int x_samples = 64;
    Interval window = {-100.0, 100.0};  // gap / FLC / detection window
    double gap_tol = 1e-9;
    int max_distinct = 64;
    double detect_max_period = 10.0;
    double detect_tol = 1e-9;
};

struct StructureReport {
    DensityEstimate density;
    double delta_min_gap = 0.0;
    bool flc_verdict = false;
    std::vector<double> gap_values;
    std::optional<PeriodicForm> detected_period;
};

StructureReport analyze_structure(const ShiftSet& s, const StructureOptions& opts = {});

}  // namespace gabortile
