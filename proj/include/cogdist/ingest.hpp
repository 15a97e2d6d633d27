#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogdist/model.hpp"

namespace cogdist {

struct PajekVertex {
    int id = 0;  // 1-based
    std::string label;
    double x = 0.0;
    double y = 0.0;
    std::optional<double> z;  // parsed when present; the model is strictly 2D

    bool operator==(const PajekVertex&) const = default;
};

struct PajekLink {
    int from = 0;
    int to = 0;
    double weight = 0.0;

    bool operator==(const PajekLink&) const = default;
};

enum class LinkKind { Edges, Arcs };

struct PajekDocument {
    std::vector<PajekVertex> vertices;
    std::vector<PajekLink> links;
    LinkKind link_kind = LinkKind::Edges;

    bool operator==(const PajekDocument&) const = default;
};

// Parses a Pajek network: a `*Vertices N` section with lines
// `id "label" x y [z]`, then one `*Edges` or `*Arcs` section with `i j w`
// lines. Keywords are case-insensitive; blank lines and `%` comments are
// skipped. Any further section (partitions, vectors, ...) is skipped with a
// warning. Numbers use the decimal point, never a locale-dependent comma.
PajekDocument parse_pajek(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Canonical text form. Reals are printed with enough digits to re-read the
// exact same values.
std::string serialize_pajek(const PajekDocument& doc);

struct MapModel {
    CatalogPtr catalog;
    BaseMap base_map;
    SimilarityMatrix similarity;
};

struct ToModelOptions {
    // When false, link weights outside [0, 1] are accepted and the matrix is
    // built without the range/symmetry validation (diagnostic use).
    bool enforce_weight_range = true;
};

// Catalog from vertex labels in id order, base map from (x, y), similarity
// matrix from symmetrized link weights with unit diagonal and 0 for absent
// pairs.
MapModel to_model(const PajekDocument& doc, const ToModelOptions& options = {});

// CSV `entity,kind,category,count` with kind in {group, panel_member}.
// Repeated (entity, category) rows accumulate.
std::vector<PublicationProfile> parse_profiles_csv(std::string_view text);

struct Assignment {
    std::string group_id;
    std::string main_assessor_id;

    bool operator==(const Assignment&) const = default;
};

// Rows in file order. A group may appear with several assessors (contested
// assignment); identical duplicate rows are rejected.
struct AssignmentTable {
    std::vector<Assignment> rows;
};

// CSV `group,main_assessor`.
AssignmentTable parse_assignments_csv(std::string_view text);

}  // namespace cogdist
