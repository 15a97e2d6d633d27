#include "cogdist/barycenter.hpp"

#include "cogdist/numeric.hpp"

namespace cogdist {

Point2D barycenter_2d(const DenseProfileVector& m, const BaseMap& map) {
    if (!same_catalog(m.catalog(), map.catalog())) {
        throw Error(errc::catalog_mismatch,
                    "profile '" + m.entity_id() + "' and base map use different catalogs");
    }
    if (!(m.total() > 0.0)) {
        throw Error(errc::zero_total, "profile '" + m.entity_id() + "' has zero total");
    }
    // Accumulate in catalog index order with compensation.
    KahanSum c1;
    KahanSum c2;
    for (std::size_t j = 0; j < m.size(); ++j) {
        c1.add(m[j] * map.coord(j)[0]);
        c2.add(m[j] * map.coord(j)[1]);
    }
    return {c1.value() / m.total(), c2.value() / m.total()};
}

std::vector<double> generalized_barycenter(std::span<const double> weights,
                                           const std::vector<std::vector<double>>& points) {
    if (weights.empty() || points.empty()) {
        throw Error(errc::empty_input, "barycenter of an empty set is undefined");
    }
    if (weights.size() != points.size()) {
        throw Error(errc::length_mismatch, std::to_string(weights.size()) + " weights for " +
                                               std::to_string(points.size()) + " points");
    }
    std::size_t dim = points[0].size();
    KahanSum total;
    for (std::size_t n = 0; n < weights.size(); ++n) {
        if (!(weights[n] > 0.0)) {
            throw Error(errc::non_positive_weight,
                        "weight " + std::to_string(weights[n]) + " at position " + std::to_string(n));
        }
        if (points[n].size() != dim) {
            throw Error(errc::length_mismatch,
                        "point " + std::to_string(n) + " has dimension " +
                            std::to_string(points[n].size()) + ", expected " + std::to_string(dim));
        }
        total.add(weights[n]);
    }
    double t = total.value();
    std::vector<double> result(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
        KahanSum acc;
        for (std::size_t n = 0; n < weights.size(); ++n) {
            acc.add(weights[n] * points[n][k]);
        }
        result[k] = acc.value() / t;
    }
    return result;
}

}  // namespace cogdist
