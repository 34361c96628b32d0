#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fixtures.hpp"
#include "gabortile/shift_set.hpp"
#include "oracles.hpp"

using gabortile::ArithmeticProgression;
using gabortile::DisplacementRule;
using gabortile::Interval;
using gabortile::ShiftSet;

TEST_CASE("periodic shift set validates period and offsets") {
    CHECK_THROWS_AS(ShiftSet::periodic(0.0, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftSet::periodic(-1.0, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftSet::periodic(1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftSet::periodic(1.0, {0.0, 1.5}), std::invalid_argument);  // outside [0, a)
    CHECK_THROWS_AS(ShiftSet::periodic(1.0, {0.2, 0.2}), std::invalid_argument);  // duplicate
}

TEST_CASE("enumeration over a closed window includes both endpoints") {
    ShiftSet z = fixtures::integer_lattice();
    auto pts = z.enumerate({-3.0, 3.0});
    REQUIRE(pts.size() == 7);
    CHECK(pts.front() == doctest::Approx(-3.0));
    CHECK(pts.back() == doctest::Approx(3.0));

    // Cross-check counting against brute force on a wide enumeration.
    auto wide = fixtures::two_offset_lattice().enumerate({-20.0, 20.0});
    for (double hi : {0.5, 7.0, 19.9}) {
        auto sub = fixtures::two_offset_lattice().enumerate({-1.0, hi});
        CHECK(sub.size() == oracle::count_in(wide, -1.0, hi));
    }
}

TEST_CASE("progression sets reject overlapping progressions") {
    CHECK_THROWS_AS(ShiftSet::progressions({}), std::invalid_argument);
    CHECK_THROWS_AS(ShiftSet::progressions({ArithmeticProgression{-1.0, 0.0}}),
                    std::invalid_argument);
    ShiftSet overlapping =
        ShiftSet::progressions({ArithmeticProgression{1.0, 0.0}, ArithmeticProgression{2.0, 0.0}});
    CHECK_THROWS_AS(overlapping.enumerate({0.0, 4.0}), std::invalid_argument);
    // Disjoint union 2Z and 3Z + 0.5 is fine and enumerates as the merge.
    ShiftSet u =
        ShiftSet::progressions({ArithmeticProgression{2.0, 0.0}, ArithmeticProgression{3.0, 0.5}});
    auto pts = u.enumerate({0.0, 6.0});
    std::vector<double> expect = {0.0, 0.5, 2.0, 3.5, 4.0, 6.0};
    REQUIRE(pts.size() == expect.size());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i] == doctest::Approx(expect[i]));
}

TEST_CASE("explicit sets enforce their validity window") {
    ShiftSet e = ShiftSet::explicit_points({0.0, 1.0, 2.5}, {-1.0, 3.0});
    CHECK(e.enumerate({0.5, 2.6}).size() == 2);
    CHECK_THROWS_AS(e.enumerate({0.0, 10.0}), std::out_of_range);
    REQUIRE(e.valid_window().has_value());
    CHECK(e.valid_window()->hi == doctest::Approx(3.0));
}

TEST_CASE("perturbed sets displace deterministically and stay within amplitude") {
    DisplacementRule rule;
    rule.kind = DisplacementRule::Kind::jitter;
    rule.amplitude = 0.1;
    rule.seed = 42;
    ShiftSet p = ShiftSet::perturbed(fixtures::integer_lattice(), rule);
    auto a = p.enumerate({-10.0, 10.0});
    auto b = p.enumerate({-10.0, 10.0});
    REQUIRE(a.size() >= 19);
    CHECK(a == b);  // reproducible
    auto base = fixtures::integer_lattice().enumerate({-11.0, 11.0});
    for (double x : a) {
        double nearest = 1e9;
        for (double t : base) nearest = std::min(nearest, std::abs(x - t));
        CHECK(nearest <= 0.1 + 1e-12);
    }
    // A different seed moves at least one point.
    rule.seed = 43;
    auto c = ShiftSet::perturbed(fixtures::integer_lattice(), rule).enumerate({-10.0, 10.0});
    bool any_diff = false;
    for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) {
        if (std::abs(a[i] - c[i]) > 1e-12) any_diff = true;
    }
    CHECK(any_diff);

    DisplacementRule alt;
    alt.kind = DisplacementRule::Kind::alternating;
    alt.amplitude = 0.2;
    alt.reference_spacing = 1.0;
    auto d = ShiftSet::perturbed(fixtures::integer_lattice(), alt).enumerate({-4.0, 4.0});
    for (double x : d) {
        double frac = std::abs(x - std::round(x));
        CHECK(frac == doctest::Approx(0.2));
    }
}

TEST_CASE("uniform density of the integers is 1 with a small band") {
    std::vector<double> radii = {25.0, 50.0, 100.0, 200.0};
    auto est = gabortile::uniform_density(fixtures::integer_lattice(), radii, 64);
    CHECK(est.estimate == doctest::Approx(1.0).epsilon(0.01));
    CHECK(est.error_band <= 0.05);
    CHECK(est.max_gap == doctest::Approx(1.0));
    REQUIRE(est.samples.size() == 4);
    CHECK(est.samples.back().r == doctest::Approx(200.0));
}

TEST_CASE("min gap and FLC gap clustering") {
    CHECK(gabortile::min_gap(fixtures::two_offset_lattice(), {-10.0, 10.0}) ==
          doctest::Approx(0.5));

    auto flc = gabortile::flc_check(fixtures::two_offset_lattice(), {-50.0, 50.0}, 1e-9, 64);
    CHECK(flc.verdict);
    REQUIRE(flc.gap_values.size() == 2);
    CHECK(flc.gap_values[0] == doctest::Approx(0.5));
    CHECK(flc.gap_values[1] == doctest::Approx(1.5));

    // {n + 1/(n+2)} has pairwise-distinct successive gaps, far more than 64.
    auto pts = fixtures::non_flc_points();
    ShiftSet nf = ShiftSet::explicit_points(pts, {-1.0, 202.0});
    auto bad = gabortile::flc_check(nf, {-1.0, 202.0}, 1e-9, 64);
    CHECK_FALSE(bad.verdict);
    CHECK(oracle::distinct_gaps(pts, 1e-9).size() == 200);
}

TEST_CASE("periodic form detection round-trips the lattice generators") {
    struct Case {
        ShiftSet set;
        double period;
        std::vector<double> offsets;
    };
    const Case cases[] = {
        {fixtures::integer_lattice(), 1.0, {0.0}},
        {ShiftSet::periodic(2.0, {0.0}), 2.0, {0.0}},
        {ShiftSet::periodic(0.5, {0.0}), 0.5, {0.0}},
        {fixtures::two_offset_lattice(), 2.0, {0.0, 0.5}},
    };
    for (const auto& c : cases) {
        auto pts = c.set.enumerate({-40.0, 40.0});
        auto form = gabortile::detect_periodic_form(pts, 10.0, 1e-9);
        REQUIRE(form.has_value());
        CHECK(std::abs(form->period - c.period) <= 1e-9);
        REQUIRE(form->offsets.size() == c.offsets.size());
        for (std::size_t i = 0; i < c.offsets.size(); ++i) {
            CHECK(std::abs(form->offsets[i] - c.offsets[i]) <= 1e-9);
        }
        CHECK(form->density() == doctest::Approx(c.offsets.size() / c.period));
        // The detected form regenerates the data exactly (oracle regeneration).
        auto regen = oracle::regenerate(form->period, form->offsets, pts.front() - 1e-9,
                                        pts.back() + 1e-9);
        REQUIRE(regen.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(std::abs(regen[i] - pts[i]) <= 1e-9);
    }
}

TEST_CASE("periodic form detection rejects jittered points") {
    DisplacementRule rule;
    rule.kind = DisplacementRule::Kind::jitter;
    rule.amplitude = 0.05;
    rule.seed = 7;
    auto pts = ShiftSet::perturbed(fixtures::integer_lattice(), rule).enumerate({-40.0, 40.0});
    auto form = gabortile::detect_periodic_form(pts, 10.0, 1e-9);
    CHECK_FALSE(form.has_value());
}

TEST_CASE("difference set matches the quadratic brute force") {
    ShiftSet s = fixtures::two_offset_lattice();
    auto diffs = gabortile::difference_set(s, {-6.0, 6.0}, 1e-9);
    auto pts = s.enumerate({-6.0, 6.0});
    std::vector<double> brute;
    for (double a : pts) {
        for (double b : pts) {
            double d = a - b;
            if (std::abs(d) <= 1e-9) continue;
            bool seen = false;
            for (double e : brute) {
                if (std::abs(e - d) <= 1e-9) {
                    seen = true;
                    break;
                }
            }
            if (!seen) brute.push_back(d);
        }
    }
    std::sort(brute.begin(), brute.end());
    REQUIRE(diffs.size() == brute.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) CHECK(diffs[i] == doctest::Approx(brute[i]));
}

TEST_CASE("circular residue clustering merges across the wrap point") {
    // Residues mod 2 near 0 and near 2 belong to one cluster.
    auto reps = gabortile::circular_residue_clusters({0.0, 1.9999999995, 1.0, 1.0000000002}, 2.0,
                                                     1e-8);
    REQUIRE(reps.size() == 2);
    CHECK(std::abs(reps[0] - 0.0) <= 1e-8);
    CHECK(std::abs(reps[1] - 1.0) <= 1e-8);
}

TEST_CASE("resolved density recognizes the exact lattices") {
    auto check_exact = [](const ShiftSet& s, double expect) {
        auto rd = gabortile::resolved_density(s, 200.0, 10.0);
        CHECK(rd.exact);
        REQUIRE(rd.form.has_value());
        CHECK(rd.value == doctest::Approx(expect));
        CHECK(rd.estimate.estimate == doctest::Approx(expect).epsilon(0.02));
    };
    check_exact(fixtures::integer_lattice(), 1.0);
    check_exact(ShiftSet::periodic(2.0, {0.0}), 0.5);
    check_exact(ShiftSet::periodic(0.5, {0.0}), 2.0);
    check_exact(fixtures::two_offset_lattice(), 1.0);

    // Jittered data falls back to the sliding-window estimate.
    DisplacementRule rule;
    rule.kind = DisplacementRule::Kind::jitter;
    rule.amplitude = 0.05;
    rule.seed = 11;
    auto rd = gabortile::resolved_density(ShiftSet::perturbed(fixtures::integer_lattice(), rule),
                                          200.0, 10.0);
    CHECK_FALSE(rd.exact);
    CHECK(rd.value == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("structure report combines density, gaps and detection") {
    auto rep = gabortile::analyze_structure(fixtures::two_offset_lattice());
    CHECK(rep.density.estimate == doctest::Approx(1.0).epsilon(0.02));
    CHECK(rep.delta_min_gap == doctest::Approx(0.5));
    CHECK(rep.flc_verdict);
    REQUIRE(rep.detected_period.has_value());
    CHECK(rep.detected_period->period == doctest::Approx(2.0));
}
