#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace gabortile {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
    // distance from x to the interval; 0 if inside
    double distance(double x) const {
        if (x < lo) return lo - x;
        if (x > hi) return x - hi;
        return 0.0;
    }
};

// Uniform evaluation grid over the half-open cell [lo, hi).
struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    double step = 1.0 / 128.0;

    std::vector<double> points() const {
        std::vector<double> xs;
        if (step <= 0.0 || hi <= lo) return xs;
        const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step * (1.0 + 1e-12)));
        xs.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double x = lo + static_cast<double>(k) * step;
            if (x >= hi) break;
            xs.push_back(x);
        }
        return xs;
    }

    Interval range() const { return {lo, hi}; }

    std::string describe() const {
        std::ostringstream os;
        os << "[" << lo << "," << hi << ") step " << step;
        return os.str();
    }
};

}  // namespace gabortile
