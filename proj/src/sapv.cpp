#include "cogdist/sapv.hpp"

#include <cassert>

#include "cogdist/numeric.hpp"

namespace cogdist {

namespace {

void check_inputs(const SimilarityMatrix& s, const DenseProfileVector& m) {
    if (!same_catalog(s.catalog(), m.catalog())) {
        throw Error(errc::catalog_mismatch,
                    "profile '" + m.entity_id() + "' and similarity matrix use different catalogs");
    }
    if (!(m.total() > 0.0)) {
        throw Error(errc::zero_total, "profile '" + m.entity_id() + "' has zero total");
    }
}

std::vector<double> matrix_product(const SimilarityMatrix& s, const DenseProfileVector& m) {
    std::size_t n = s.size();
    std::vector<double> result(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        result[k] = compensated_dot(s.row(k), m.values());
    }
    return result;
}

}  // namespace

SapvVector similarity_adapted(const SimilarityMatrix& s, const DenseProfileVector& m) {
    check_inputs(s, m);
    return SapvVector{m.catalog(), m.entity_id(), matrix_product(s, m),
                      SapvNormalization::Unnormalized};
}

SapvVector sapv_l1(const SimilarityMatrix& s, const DenseProfileVector& m) {
    check_inputs(s, m);
    std::vector<double> values = matrix_product(s, m);
    // All entries are nonnegative (nonnegative matrix times nonnegative
    // vector), so the L1 norm is the plain coordinate sum. The unit diagonal
    // and positive total make it strictly positive.
    double denom = compensated_sum(values);
    assert(denom > 0.0 && "L1 norm of S*M must be positive");
    for (double& v : values) v /= denom;
    return SapvVector{m.catalog(), m.entity_id(), std::move(values), SapvNormalization::L1};
}

SapvVector sapv_legacy(const SimilarityMatrix& s, const DenseProfileVector& m) {
    check_inputs(s, m);
    std::vector<double> values = matrix_product(s, m);
    double t = m.total();
    for (double& v : values) v /= t;
    return SapvVector{m.catalog(), m.entity_id(), std::move(values), SapvNormalization::LegacyByT};
}

}  // namespace cogdist
