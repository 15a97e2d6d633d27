#pragma once

#include <cassert>
#include <cmath>
#include <span>

namespace cogdist {

// Neumaier-compensated accumulator. Fixed iteration order plus compensation
// keeps sums reproducible to the tolerances the result tables are printed at.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) {
    KahanSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

inline double compensated_dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    KahanSum acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    return acc.value();
}

}  // namespace cogdist
