#pragma once

#include <string>
#include <vector>

#include "cogdist/model.hpp"

namespace cogdist {

enum class SapvNormalization { Unnormalized, LegacyByT, L1 };

// A publication vector smeared by inter-category similarity. Unnormalized
// values equal S * M entrywise; the L1 variant sums to 1.
struct SapvVector {
    CatalogPtr catalog;
    std::string entity_id;
    std::vector<double> values;
    SapvNormalization normalization = SapvNormalization::Unnormalized;
};

// The raw similarity-adapted publication vector S * M.
SapvVector similarity_adapted(const SimilarityMatrix& s, const DenseProfileVector& m);

// S * M divided by its own L1 norm. Entries sum to 1, and the result is
// invariant under scaling of M because normalization happens after the
// matrix product.
SapvVector sapv_l1(const SimilarityMatrix& s, const DenseProfileVector& m);

// Deprecated: the pre-correction variant dividing S * M by T = sum_j m_j.
// Its output norm depends on how much similarity spreads the counts, so
// vectors of different entities are not on a common scale. Retained for
// comparative analysis only; prefer sapv_l1.
SapvVector sapv_legacy(const SimilarityMatrix& s, const DenseProfileVector& m);

}  // namespace cogdist
