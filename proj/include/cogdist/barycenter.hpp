#pragma once

#include <span>
#include <vector>

#include "cogdist/model.hpp"

namespace cogdist {

struct Point2D {
    double c1 = 0.0;
    double c2 = 0.0;
};

// Publication-weighted mean of the base-map coordinates,
// C_k = sum_j m_j L_jk / T. Zero counts are allowed and contribute nothing;
// the result is invariant under scaling of the counts.
Point2D barycenter_2d(const DenseProfileVector& m, const BaseMap& map);

// Weighted barycenter of arbitrary same-dimension points. All weights must
// be strictly positive; with unit weights this is the plain centroid.
std::vector<double> generalized_barycenter(std::span<const double> weights,
                                           const std::vector<std::vector<double>>& points);

}  // namespace cogdist
