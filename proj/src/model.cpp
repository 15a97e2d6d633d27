#include "cogdist/model.hpp"

#include <algorithm>
#include <cmath>

#include "cogdist/numeric.hpp"

namespace cogdist {

CategoryCatalog::CategoryCatalog(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error(errc::invalid_catalog, "catalog must contain at least one category");
    }
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) {
            throw Error(errc::invalid_catalog, "empty category label at index " + std::to_string(i));
        }
        auto [it, inserted] = index_.emplace(labels_[i], i);
        if (!inserted) {
            throw Error(errc::duplicate_label, "category '" + labels_[i] + "' appears twice");
        }
    }
}

std::optional<std::size_t> CategoryCatalog::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_catalog(const CatalogPtr& a, const CatalogPtr& b) {
    if (a == b) return a != nullptr;
    if (!a || !b) return false;
    return *a == *b;
}

const char* entity_kind_name(EntityKind kind) {
    switch (kind) {
        case EntityKind::ResearchGroup: return "group";
        case EntityKind::PanelMember: return "panel_member";
        case EntityKind::AggregateGroups: return "aggregate_groups";
        case EntityKind::AggregatePanel: return "aggregate_panel";
    }
    return "unknown";
}

bool is_aggregate(EntityKind kind) {
    return kind == EntityKind::AggregateGroups || kind == EntityKind::AggregatePanel;
}

double PublicationProfile::total() const {
    KahanSum acc;
    for (const auto& [label, count] : counts) acc.add(count);
    return acc.value();
}

bool PublicationProfile::has_positive_count() const {
    return std::any_of(counts.begin(), counts.end(),
                       [](const auto& kv) { return kv.second > 0.0; });
}

DenseProfileVector::DenseProfileVector(CatalogPtr catalog, std::string entity_id, EntityKind kind,
                                       std::vector<double> values)
    : catalog_(std::move(catalog)),
      entity_id_(std::move(entity_id)),
      kind_(kind),
      values_(std::move(values)) {
    if (!catalog_) {
        throw Error(errc::invalid_vector, "profile vector requires a catalog");
    }
    if (values_.size() != catalog_->size()) {
        throw Error(errc::invalid_vector,
                    "vector length " + std::to_string(values_.size()) + " does not match catalog size " +
                        std::to_string(catalog_->size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
            throw Error(errc::invalid_vector, "entry for category '" + catalog_->label(i) +
                                                  "' must be finite and nonnegative");
        }
    }
    total_ = compensated_sum(values_);
    if (total_ <= 0.0) {
        throw Error(errc::zero_total, "profile '" + entity_id_ + "' has zero total count");
    }
}

SimilarityMatrix::SimilarityMatrix(CatalogPtr catalog, std::vector<double> values,
                                   unchecked_t)
    : catalog_(std::move(catalog)), n_(catalog_ ? catalog_->size() : 0), values_(std::move(values)) {
    if (!catalog_) {
        throw Error(errc::invalid_matrix, "similarity matrix requires a catalog");
    }
    if (values_.size() != n_ * n_) {
        throw Error(errc::invalid_matrix, "expected " + std::to_string(n_ * n_) +
                                              " values, got " + std::to_string(values_.size()));
    }
}

SimilarityMatrix::SimilarityMatrix(CatalogPtr catalog, std::vector<double> values)
    : SimilarityMatrix(std::move(catalog), std::move(values), unchecked_t{}) {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            double v = values_[i * n_ + j];
            if (!std::isfinite(v)) {
                throw Error(errc::invalid_matrix, "non-finite similarity value");
            }
            if (v < -kRangeTolerance || v > 1.0 + kRangeTolerance) {
                throw Error(errc::weight_out_of_range,
                            "similarity " + std::to_string(v) + " at (" + catalog_->label(i) + ", " +
                                catalog_->label(j) + ") outside [0, 1]");
            }
            if (std::abs(v - values_[j * n_ + i]) > kSymmetryTolerance) {
                throw Error(errc::invalid_matrix, "matrix is not symmetric at (" +
                                                      catalog_->label(i) + ", " + catalog_->label(j) + ")");
            }
        }
        if (std::abs(values_[i * n_ + i] - 1.0) > kSymmetryTolerance) {
            throw Error(errc::invalid_matrix,
                        "diagonal entry for '" + catalog_->label(i) + "' must be 1");
        }
    }
}

SimilarityMatrix SimilarityMatrix::unchecked(CatalogPtr catalog, std::vector<double> values) {
    return SimilarityMatrix(std::move(catalog), std::move(values), unchecked_t{});
}

SimilarityMatrix SimilarityMatrix::identity(CatalogPtr catalog) {
    if (!catalog) throw Error(errc::invalid_matrix, "similarity matrix requires a catalog");
    std::size_t n = catalog->size();
    std::vector<double> values(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1.0;
    return SimilarityMatrix(std::move(catalog), std::move(values), unchecked_t{});
}

BaseMap::BaseMap(CatalogPtr catalog, std::vector<std::array<double, 2>> coords)
    : catalog_(std::move(catalog)), coords_(std::move(coords)) {
    if (!catalog_) {
        throw Error(errc::invalid_map, "base map requires a catalog");
    }
    if (coords_.size() != catalog_->size()) {
        throw Error(errc::invalid_map, "expected " + std::to_string(catalog_->size()) +
                                           " coordinate pairs, got " + std::to_string(coords_.size()));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i][0]) || !std::isfinite(coords_[i][1])) {
            throw Error(errc::invalid_map,
                        "non-finite coordinate for category '" + catalog_->label(i) + "'");
        }
    }
}

DenseProfileVector align_profile(const PublicationProfile& profile, const CatalogPtr& catalog,
                                 AlignmentPolicy policy, std::vector<DroppedCategory>* dropped) {
    if (!catalog) {
        throw Error(errc::invalid_catalog, "alignment requires a catalog");
    }
    if (!profile.has_positive_count()) {
        throw Error(errc::empty_profile, "profile '" + profile.entity_id + "' has no positive count");
    }
    std::vector<double> values(catalog->size(), 0.0);
    bool any_retained = false;
    for (const auto& [label, count] : profile.counts) {
        auto idx = catalog->find(label);
        if (!idx) {
            if (policy == AlignmentPolicy::Strict) {
                throw Error(errc::unknown_category, "profile '" + profile.entity_id +
                                                        "' references unknown category '" + label + "'");
            }
            if (dropped) dropped->push_back({label, count});
            continue;
        }
        values[*idx] += count;
        if (count > 0.0) any_retained = true;
    }
    if (!any_retained) {
        throw Error(errc::all_counts_dropped,
                    "all positive counts of profile '" + profile.entity_id + "' were dropped");
    }
    return DenseProfileVector(catalog, profile.entity_id, profile.kind, std::move(values));
}

PublicationProfile aggregate_profiles(const std::vector<PublicationProfile>& profiles,
                                      std::string id, EntityKind kind) {
    if (profiles.empty()) {
        throw Error(errc::empty_list, "cannot aggregate an empty list of profiles");
    }
    // Collect contributions per category and sum them in sorted order so the
    // result is independent of the input permutation.
    std::map<std::string, std::vector<double>> contributions;
    for (const auto& profile : profiles) {
        for (const auto& [label, count] : profile.counts) {
            contributions[label].push_back(count);
        }
    }
    PublicationProfile result;
    result.entity_id = std::move(id);
    result.kind = kind;
    for (auto& [label, counts] : contributions) {
        std::sort(counts.begin(), counts.end());
        KahanSum acc;
        for (double c : counts) acc.add(c);
        result.counts[label] = acc.value();
    }
    return result;
}

}  // namespace cogdist
