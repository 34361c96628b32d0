// Liu-Wang pipeline: tiling/spectral pair checks, the three orthonormal-basis
// conditions for constant-modulus windows, the structure forced on nonnegative
// windows, and the difference zero-set necessary condition.
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "fixtures.hpp"
#include "gabortile/liu_wang.hpp"
#include "oracles.hpp"

using namespace gabortile;

namespace {
constexpr double PI = std::numbers::pi;
}

TEST_CASE("tiling_pair_check accepts the unit interval against Z") {
    const SupportSet omega = fixtures::f1_window().support();
    const PairReport rep = tiling_pair_check(omega, fixtures::integer_lattice(),
                                             GridSpec{-2.0, 2.0, 1.0 / 128.0}, 40.0);
    CHECK(rep.kind == PairReport::Kind::tiling);
    CHECK(rep.verdict);
    CHECK(rep.max_violation == 0.0);  // indicator sums hit the level exactly
    CHECK(rep.trunc == 40.0);
    CHECK_FALSE(rep.detail.empty());
}

TEST_CASE("tiling_pair_check flags the gaps of a sparse lattice") {
    const SupportSet omega = fixtures::f1_window().support();
    const PairReport rep = tiling_pair_check(omega, ShiftSet::periodic(2.0, {0.0}),
                                             GridSpec{-2.0, 2.0, 1.0 / 128.0}, 40.0);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.max_violation == doctest::Approx(1.0));  // sum 0 against level 1
    // The witness must sit in a gap: residue mod 2 in [1, 2).
    const double residue = std::fmod(std::fmod(rep.witness, 2.0) + 2.0, 2.0);
    CHECK(residue >= 1.0 - 1e-9);
}

TEST_CASE("spectral_pair_check certifies the three reference pairs") {
    SUBCASE("unit interval with Z") {
        const PairReport rep =
            spectral_pair_check(fixtures::f1_window().support(), fixtures::integer_lattice());
        CHECK(rep.kind == PairReport::Kind::spectral);
        CHECK(rep.verdict);
        CHECK(rep.max_violation <= 1e-10);
        CHECK(rep.density_ratio == doctest::Approx(1.0));
        CHECK(rep.completeness_defect <= 0.02);
        CHECK(rep.detail.find("[exact density]") != std::string::npos);
    }
    SUBCASE("doubled interval with the half-integer lattice") {
        // D(lambda) = 2 and mes(Omega) = 2: the pair is spectral because the
        // densities match, not because their product is 1.
        const PairReport rep = spectral_pair_check(fixtures::f2_window().support(),
                                                   ShiftSet::periodic(0.5, {0.0}));
        CHECK(rep.verdict);
        CHECK(rep.max_violation <= 1e-10);
        CHECK(rep.density_ratio == doctest::Approx(1.0));
        CHECK(rep.completeness_defect <= 0.02);
    }
    SUBCASE("split support with the two-offset lattice") {
        const PairReport rep =
            spectral_pair_check(fixtures::f3_window().support(), fixtures::two_offset_lattice());
        CHECK(rep.verdict);
        CHECK(rep.max_violation <= 1e-10);
        CHECK(rep.density_ratio == doctest::Approx(1.0));
        CHECK(rep.completeness_defect <= 0.02);
    }
}

TEST_CASE("spectral_pair_check rejects a sparse frequency set") {
    const PairReport rep =
        spectral_pair_check(fixtures::f1_window().support(), ShiftSet::periodic(1.5, {0.0}));
    CHECK_FALSE(rep.verdict);
    CHECK(std::abs(rep.max_violation - 2.0 / (3.0 * PI)) <= 1e-9);
    CHECK(std::abs(std::abs(rep.witness) - 1.5) <= 1e-9);
    CHECK(rep.density_ratio == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("spectral_pair_check rejects an empty support") {
    CHECK_THROWS_AS(spectral_pair_check(SupportSet{}, fixtures::integer_lattice()),
                    std::invalid_argument);
}

TEST_CASE("liu_wang_conditions passes the three reference systems") {
    SUBCASE("unit window over Z x Z") {
        const LiuWangReport rep = liu_wang_conditions(
            fixtures::f1_window(), fixtures::integer_lattice(), fixtures::integer_lattice());
        CHECK(rep.verdict);
        CHECK(rep.modulus_constant);
        CHECK(rep.modulus_deviation <= 1e-12);
        CHECK(rep.modulus_target == doctest::Approx(1.0));
        CHECK(rep.tiling.verdict);
        CHECK(rep.spectral.verdict);
    }
    SUBCASE("normalized double window over 2Z x (1/2)Z") {
        const LiuWangReport rep =
            liu_wang_conditions(fixtures::f2_window(), ShiftSet::periodic(2.0, {0.0}),
                                ShiftSet::periodic(0.5, {0.0}));
        CHECK(rep.verdict);
        CHECK(rep.modulus_constant);
        CHECK(rep.modulus_deviation <= 1e-12);  // one rounding of 1/sqrt(2)
        CHECK(rep.modulus_target == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(rep.tiling.verdict);
        CHECK(rep.spectral.verdict);
    }
    SUBCASE("split window over the two-offset lattice") {
        const LiuWangReport rep = liu_wang_conditions(
            fixtures::f3_window(), fixtures::two_offset_lattice(), fixtures::two_offset_lattice());
        CHECK(rep.verdict);
        CHECK(rep.modulus_constant);
        CHECK(rep.modulus_target == doctest::Approx(1.0));
        CHECK(rep.tiling.verdict);
        CHECK(rep.spectral.verdict);
    }
}

TEST_CASE("liu_wang_conditions flags a window with two moduli") {
    // Values 1 and 1/2 on adjacent unit intervals: the pairs are fine but the
    // modulus is not constant, so the overall verdict fails on (i) alone.
    const StepWindow g({0.0, 1.0, 2.0}, {{1.0, 0.0}, {0.5, 0.0}});
    const LiuWangReport rep =
        liu_wang_conditions(g, ShiftSet::periodic(2.0, {0.0}), ShiftSet::periodic(0.5, {0.0}));
    CHECK_FALSE(rep.modulus_constant);
    CHECK(rep.modulus_deviation == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
    CHECK(rep.tiling.verdict);
    CHECK(rep.spectral.verdict);
    CHECK_FALSE(rep.verdict);
}

TEST_CASE("nonnegative_structure certifies the first two reference systems") {
    SUBCASE("unit window") {
        const NonnegativeStructureReport rep = nonnegative_structure(
            fixtures::f1_window(), fixtures::integer_lattice(), fixtures::integer_lattice());
        CHECK(rep.verdict);
        CHECK(rep.translates_disjoint);
        CHECK_FALSE(rep.overlap_witness.has_value());
        CHECK(rep.density_exact);
        CHECK(rep.density_time == doctest::Approx(1.0));
        CHECK(rep.level_ok);
        CHECK(rep.level_deviation == 0.0);
        CHECK(rep.density_product == doctest::Approx(1.0));
        CHECK(rep.product_ok);
        CHECK(rep.spectral.verdict);
    }
    SUBCASE("normalized double window") {
        const NonnegativeStructureReport rep =
            nonnegative_structure(fixtures::f2_window(), ShiftSet::periodic(2.0, {0.0}),
                                  ShiftSet::periodic(0.5, {0.0}));
        CHECK(rep.verdict);
        CHECK(rep.translates_disjoint);
        CHECK(rep.density_exact);
        CHECK(rep.density_time == doctest::Approx(0.5));
        CHECK(rep.level_ok);
        CHECK(rep.level_deviation <= 1e-12);  // |1/sqrt(2)|^2 is one ulp off 1/2
        CHECK(rep.density_product == doctest::Approx(1.0));
        CHECK(rep.spectral.verdict);
        CHECK(rep.spectral.density_ratio == doctest::Approx(1.0));
    }
}

TEST_CASE("nonnegative_structure reports the canonical overlap for a crowded lattice") {
    const NonnegativeStructureReport rep = nonnegative_structure(
        fixtures::f1_window(), ShiftSet::periodic(0.5, {0.0}), fixtures::integer_lattice());
    CHECK_FALSE(rep.translates_disjoint);
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.overlap_witness.has_value());
    CHECK(rep.overlap_witness->lo == doctest::Approx(0.5));
    CHECK(rep.overlap_witness->hi == doctest::Approx(1.0));
}

TEST_CASE("nonnegative_structure rejects complex and negative windows") {
    const ShiftSet z = fixtures::integer_lattice();
    CHECK_THROWS_AS(nonnegative_structure(StepWindow({0.0, 1.0}, {{0.5, 0.5}}), z, z),
                    std::invalid_argument);
    CHECK_THROWS_AS(nonnegative_structure(StepWindow({0.0, 1.0}, {{-1.0, 0.0}}), z, z),
                    std::invalid_argument);
}

TEST_CASE("difference_zero_set_check accepts Z for the unit window") {
    const ZeroSetReport rep = difference_zero_set_check(fixtures::f1_window(),
                                                        fixtures::integer_lattice(),
                                                        Interval{-6.0, 6.0});
    CHECK(rep.verdict);
    CHECK(rep.max_abs_value <= 1e-10);
    CHECK(rep.differences_checked == 24);  // +-1 .. +-12 from 13 lattice points
    CHECK(rep.tolerance == 1e-10);
}

TEST_CASE("difference_zero_set_check flags a sparse frequency set") {
    const ZeroSetReport rep = difference_zero_set_check(
        fixtures::f1_window(), ShiftSet::periodic(1.5, {0.0}), Interval{-6.0, 6.0});
    CHECK_FALSE(rep.verdict);
    CHECK(std::abs(rep.max_abs_value - 2.0 / (3.0 * PI)) <= 1e-9);
    CHECK(std::abs(std::abs(rep.worst_difference) - 1.5) <= 1e-9);

    // The reported worst magnitude must agree with direct quadrature of the
    // squared modulus at the worst difference.
    const StepWindow sq = fixtures::f1_window().square_modulus();
    const std::complex<double> direct = oracle::fourier(sq, rep.worst_difference);
    CHECK(std::abs(std::abs(direct) - rep.max_abs_value) <= 1e-9);
}
