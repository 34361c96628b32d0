#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gabortile {

// Pairwise (cascade) summation. Deterministic for a fixed term order and
// keeps the rounding error at O(eps * log n) instead of O(eps * n).
template <typename T>
T pairwise_sum(std::span<const T> terms) {
    const std::size_t n = terms.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = terms[0];
        for (std::size_t i = 1; i < n; ++i) acc += terms[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(terms.subspan(0, half)) + pairwise_sum(terms.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& terms) {
    return pairwise_sum(std::span<const double>(terms));
}

inline std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& terms) {
    return pairwise_sum(std::span<const std::complex<double>>(terms));
}

}  // namespace gabortile
