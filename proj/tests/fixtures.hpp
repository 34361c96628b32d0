// Certified fixtures used across the suite: three orthonormal systems and the
// negative controls.
#pragma once

#include <cmath>
#include <vector>

#include "gabortile/gabor.hpp"
#include "gabortile/shift_set.hpp"
#include "gabortile/step_window.hpp"

namespace fixtures {

using gabortile::GaborSystem;
using gabortile::ShiftSet;
using gabortile::StepWindow;

// F1: g = 1_[0,1], T = S = Z.
inline StepWindow f1_window() { return StepWindow::indicator(0.0, 1.0); }
inline ShiftSet integer_lattice() { return ShiftSet::periodic(1.0, {0.0}); }
inline GaborSystem f1_system() {
    return {f1_window(), integer_lattice(), integer_lattice(), 6.0, 6.0};
}

// F2: g = (1/sqrt 2) 1_[0,2], T = 2Z, S = (1/2)Z.
inline StepWindow f2_window() {
    return StepWindow::indicator(0.0, 2.0, {1.0 / std::sqrt(2.0), 0.0});
}
inline GaborSystem f2_system() {
    return {f2_window(), ShiftSet::periodic(2.0, {0.0}), ShiftSet::periodic(0.5, {0.0}), 6.0, 6.0};
}

// F3: g = 1_Omega with Omega = [0, 1/2] u [1, 3/2], T = S = 2Z + {0, 1/2}.
inline StepWindow f3_window() {
    return StepWindow({0.0, 0.5, 1.0, 1.5}, {{1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
}
inline ShiftSet two_offset_lattice() { return ShiftSet::periodic(2.0, {0.0, 0.5}); }
inline GaborSystem f3_system() {
    return {f3_window(), two_offset_lattice(), two_offset_lattice(), 6.0, 6.0};
}

// Negative control: frequency lattice too sparse (S = 1.5Z with g = 1_[0,1]).
inline GaborSystem bad_freq_system() {
    return {f1_window(), integer_lattice(), ShiftSet::periodic(1.5, {0.0}), 6.0, 6.0};
}

// Negative control: time lattice too dense (T = (1/2)Z with g = 1_[0,1]),
// so support translates overlap.
inline GaborSystem bad_time_system() {
    return {f1_window(), ShiftSet::periodic(0.5, {0.0}), integer_lattice(), 6.0, 6.0};
}

// Non-FLC point list {n + 1/(n+2), n = 0..200}: all 200 successive gaps differ.
inline std::vector<double> non_flc_points() {
    std::vector<double> pts;
    for (int n = 0; n <= 200; ++n) {
        pts.push_back(static_cast<double>(n) + 1.0 / (static_cast<double>(n) + 2.0));
    }
    return pts;
}

}  // namespace fixtures
