#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cogdist/errors.hpp"

namespace cogdist {

// Ordered list of subject-category labels; the shared index space for all
// profile vectors, the similarity matrix and the base map.
class CategoryCatalog {
public:
    explicit CategoryCatalog(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> find(const std::string& label) const;

    bool operator==(const CategoryCatalog& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

using CatalogPtr = std::shared_ptr<const CategoryCatalog>;

// Catalogs are normally shared by pointer; equal catalogs loaded twice still
// interoperate via content comparison.
bool same_catalog(const CatalogPtr& a, const CatalogPtr& b);

enum class EntityKind { ResearchGroup, PanelMember, AggregateGroups, AggregatePanel };

const char* entity_kind_name(EntityKind kind);
bool is_aggregate(EntityKind kind);

// Sparse nonnegative publication counts per category for one entity.
struct PublicationProfile {
    std::string entity_id;
    EntityKind kind = EntityKind::ResearchGroup;
    std::map<std::string, double> counts;

    double total() const;
    bool has_positive_count() const;
};

// Dense alignment of a profile onto a catalog: finite nonnegative entries
// with a positive total.
class DenseProfileVector {
public:
    DenseProfileVector(CatalogPtr catalog, std::string entity_id, EntityKind kind,
                       std::vector<double> values);

    const CatalogPtr& catalog() const { return catalog_; }
    const std::string& entity_id() const { return entity_id_; }
    EntityKind kind() const { return kind_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    // T, the L1 norm (compensated, fixed at construction).
    double total() const { return total_; }

private:
    CatalogPtr catalog_;
    std::string entity_id_;
    EntityKind kind_;
    std::vector<double> values_;
    double total_;
};

// Dense symmetric inter-category similarity matrix with unit diagonal and
// entries in [0, 1].
class SimilarityMatrix {
public:
    static constexpr double kSymmetryTolerance = 1e-9;
    static constexpr double kRangeTolerance = 1e-9;

    // Validates symmetry, value range and unit diagonal.
    SimilarityMatrix(CatalogPtr catalog, std::vector<double> values);

    // Skips the invariant checks; for diagnostics on suspect inputs.
    static SimilarityMatrix unchecked(CatalogPtr catalog, std::vector<double> values);

    static SimilarityMatrix identity(CatalogPtr catalog);

    std::size_t size() const { return n_; }
    const CatalogPtr& catalog() const { return catalog_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(values_).subspan(i * n_, n_);
    }
    std::span<const double> values() const { return values_; }

private:
    struct unchecked_t {};
    SimilarityMatrix(CatalogPtr catalog, std::vector<double> values, unchecked_t);

    CatalogPtr catalog_;
    std::size_t n_;
    std::vector<double> values_;
};

// 2D base-map coordinates, one pair per catalog entry.
class BaseMap {
public:
    BaseMap(CatalogPtr catalog, std::vector<std::array<double, 2>> coords);

    const CatalogPtr& catalog() const { return catalog_; }
    std::size_t size() const { return coords_.size(); }
    const std::array<double, 2>& coord(std::size_t i) const { return coords_[i]; }

private:
    CatalogPtr catalog_;
    std::vector<std::array<double, 2>> coords_;
};

enum class AlignmentPolicy { Strict, DropUnknown };

struct DroppedCategory {
    std::string category;
    double count;
};

// Places sparse counts at catalog indices. Under DropUnknown, categories
// missing from the catalog are skipped and reported through `dropped`.
DenseProfileVector align_profile(const PublicationProfile& profile, const CatalogPtr& catalog,
                                 AlignmentPolicy policy,
                                 std::vector<DroppedCategory>* dropped = nullptr);

// Category-wise sum of member counts, taken on raw counts before any
// normalization. Summation per category is order-independent.
PublicationProfile aggregate_profiles(const std::vector<PublicationProfile>& profiles,
                                      std::string id, EntityKind kind);

}  // namespace cogdist
