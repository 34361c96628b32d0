#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "gabortile/step_window.hpp"
#include "oracles.hpp"

using gabortile::cplx;
using gabortile::Interval;
using gabortile::StepWindow;
using gabortile::SupportSet;

namespace {
constexpr double PI = 3.14159265358979323846;
}

TEST_CASE("step window evaluates half-open cells") {
    StepWindow w({0.0, 0.5, 1.0}, {{2.0, 0.0}, {-1.0, 0.0}});
    CHECK(w(-0.1) == cplx{0.0, 0.0});
    CHECK(w(0.0) == cplx{2.0, 0.0});
    CHECK(w(0.25) == cplx{2.0, 0.0});
    CHECK(w(0.5) == cplx{-1.0, 0.0});   // left-closed at the interior breakpoint
    CHECK(w(0.999) == cplx{-1.0, 0.0});
    CHECK(w(1.0) == cplx{0.0, 0.0});    // right-open at the last breakpoint
}

TEST_CASE("step window constructor validates its inputs") {
    CHECK_THROWS_AS(StepWindow({0.0, 1.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(StepWindow({0.0, 1.0}, {{1.0, 0.0}, {2.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(StepWindow({1.0, 0.0}, {{1.0, 0.0}}), std::invalid_argument);  // not increasing
    CHECK_THROWS_AS(StepWindow({0.0, 0.0}, {{1.0, 0.0}}), std::invalid_argument);  // zero-width cell
}

TEST_CASE("support of the zero window throws") {
    StepWindow z({0.0, 1.0}, {{0.0, 0.0}});
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.support(), std::domain_error);
}

TEST_CASE("support merges touching cells and skips zero cells") {
    StepWindow w({0.0, 0.5, 1.0, 2.0, 3.0}, {{1.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    SupportSet s = w.support();
    REQUIRE(s.intervals.size() == 2);
    CHECK(s.intervals[0].lo == doctest::Approx(0.0));
    CHECK(s.intervals[0].hi == doctest::Approx(1.0));
    CHECK(s.intervals[1].lo == doctest::Approx(2.0));
    CHECK(s.intervals[1].hi == doctest::Approx(3.0));
    CHECK(s.measure() == doctest::Approx(2.0));
}

TEST_CASE("fourier transform matches quadrature on random windows") {
    oracle::Rng rng(20240817u);
    for (int trial = 0; trial < 30; ++trial) {
        StepWindow w = rng.window();
        for (double xi : {0.0, 0.3, -1.7, 4.25, rng.uniform(-6.0, 6.0)}) {
            cplx closed = w.fourier(xi);
            cplx quad = oracle::fourier(w, xi);
            CHECK(std::abs(closed - quad) <= 1e-10);
        }
    }
}

TEST_CASE("fourier transform is stable through the sinc singularity") {
    StepWindow w = StepWindow::indicator(0.0, 1.0);
    // Exact transform of 1_[0,1]: e^{-pi i xi} sinc(pi xi).
    for (double xi : {1e-12, 1e-9, 1e-7, 5e-5, 1e-4}) {
        cplx got = w.fourier(xi);
        double mag = std::abs(got);
        double expect = std::abs(std::sin(PI * xi) / (PI * xi));
        CHECK(mag == doctest::Approx(expect).epsilon(1e-12));
        // Continuity toward xi = 0.
        CHECK(std::abs(got - w.fourier(0.0)) <= 8.0 * xi);
    }
    CHECK(w.fourier(0.0) == cplx{1.0, 0.0});
}

TEST_CASE("product agrees with pointwise multiplication and quadrature") {
    oracle::Rng rng(777u);
    for (int trial = 0; trial < 20; ++trial) {
        StepWindow a = rng.window();
        StepWindow b = rng.window();
        StepWindow p = gabortile::product(a, b, /*conjugate_b=*/true);
        // Pointwise check at cell midpoints of the product partition.
        const auto& bp = p.breakpoints();
        for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
            double x = 0.5 * (bp[k] + bp[k + 1]);
            cplx expect = a(x) * std::conj(b(x));
            CHECK(std::abs(p(x) - expect) <= 1e-14);
        }
        // Transform of the product vs direct quadrature of a * conj(b) * phase.
        double xi = rng.uniform(-3.0, 3.0);
        cplx closed = p.empty() ? cplx{0.0, 0.0} : p.fourier(xi);
        std::vector<double> cuts;
        oracle::append_cuts(cuts, a, 0.0);
        oracle::append_cuts(cuts, b, 0.0);
        cplx quad = oracle::integrate_cut(
            [&](double x) { return a(x) * std::conj(b(x)) * std::exp(cplx{0.0, -2.0 * PI * xi * x}); },
            cuts, 1e-12);
        CHECK(std::abs(closed - quad) <= 1e-9);
    }
}

TEST_CASE("square modulus drops the phase") {
    StepWindow w({0.0, 1.0, 2.0}, {{0.6, 0.8}, {0.0, -0.5}});
    StepWindow sq = w.square_modulus();
    CHECK(sq(0.5).real() == doctest::Approx(1.0));
    CHECK(sq(0.5).imag() == 0.0);
    CHECK(sq(1.5).real() == doctest::Approx(0.25));
    CHECK(sq(1.5).imag() == 0.0);
    CHECK(sq.integral().real() == doctest::Approx(w.norm_sq()));
    CHECK(sq.integral().imag() == doctest::Approx(0.0));
}

TEST_CASE("translation and scaling act as expected") {
    StepWindow w = StepWindow::indicator(0.0, 1.0);
    StepWindow t = w.translated(2.5);
    CHECK(t(2.5) == cplx{1.0, 0.0});
    CHECK(t(0.5) == cplx{0.0, 0.0});
    // Modulation theorem: translate by t multiplies the transform by e^{-2 pi i xi t}.
    double xi = 0.37;
    cplx expect = w.fourier(xi) * std::exp(cplx{0.0, -2.0 * PI * xi * 2.5});
    CHECK(std::abs(t.fourier(xi) - expect) <= 1e-14);

    StepWindow s = w.scaled({0.0, 2.0});
    CHECK(s(0.5) == cplx{0.0, 2.0});
    CHECK(s.norm_sq() == doctest::Approx(4.0));
}

TEST_CASE("norm, integral and total jump are exact on a known window") {
    StepWindow w({0.0, 0.5, 1.5}, {{2.0, 0.0}, {-1.0, 0.0}});
    CHECK(w.norm_sq() == doctest::Approx(0.5 * 4.0 + 1.0 * 1.0));
    CHECK(w.integral().real() == doctest::Approx(0.5 * 2.0 - 1.0));
    CHECK(w.abs_integral() == doctest::Approx(0.5 * 2.0 + 1.0));
    // Jumps: |2-0| at 0, |-1-2| at 0.5, |0-(-1)| at 1.5.
    CHECK(w.total_jump() == doctest::Approx(2.0 + 3.0 + 1.0));
    CHECK(w.max_abs_value() == doctest::Approx(2.0));
    CHECK(w.support_lo() == doctest::Approx(0.0));
    CHECK(w.support_hi() == doctest::Approx(1.5));
    CHECK(w.diameter() == doctest::Approx(1.5));
}

TEST_CASE("simplified trims zero margins and merges equal neighbours") {
    StepWindow w({-1.0, 0.0, 0.5, 1.0, 2.0}, {{0.0, 0.0}, {3.0, 0.0}, {3.0, 0.0}, {0.0, 0.0}});
    StepWindow s = w.simplified();
    CHECK(s.interval_count() == 1);
    CHECK(s.support_lo() == doctest::Approx(0.0));
    CHECK(s.support_hi() == doctest::Approx(1.0));
    CHECK(s(0.75) == cplx{3.0, 0.0});
}

TEST_CASE("support overlap reports a witness interval") {
    SupportSet a{{Interval{0.0, 1.0}}};
    SupportSet b{{Interval{0.8, 2.0}}};
    Interval wit{};
    CHECK(a.overlaps(b, &wit));
    CHECK(wit.lo == doctest::Approx(0.8));
    CHECK(wit.hi == doctest::Approx(1.0));
    SupportSet c{{Interval{1.5, 2.0}}};
    CHECK_FALSE(a.overlaps(c, nullptr));
}
