#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogdist/ingest.hpp"
#include "cogdist/model.hpp"

namespace cogdist {

enum class Method { Barycenter2D, SapvL1, SapvLegacy, WCD };
enum class Semantics { Distance, Dissimilarity };

// CLI/file names: "barycenter", "sapv", "sapv-legacy", "wcd".
const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);
Semantics method_semantics(Method m);

// Pairwise entity-pair values for one method. Group-side entities are the
// research groups plus an optional all-groups aggregate; member-side
// entities are the panel members plus an optional whole-panel aggregate.
// Aggregates appear in the entries but are kept out of the individual id
// lists that drive rankings and correlations.
struct MethodResult {
    Method method = Method::SapvL1;
    Semantics semantics = Semantics::Distance;
    std::vector<std::string> group_ids;             // individuals, sorted
    std::vector<std::string> member_ids;            // individuals, sorted
    std::vector<std::string> aggregate_group_ids;   // sorted
    std::vector<std::string> aggregate_member_ids;  // sorted
    std::map<std::pair<std::string, std::string>, double> entries;  // (group side, member side)

    bool has(const std::string& a, const std::string& b) const;
    // Symmetric lookup; raises MissingPair when the pair was never computed.
    double value(const std::string& a, const std::string& b) const;
};

// Euclidean distance sqrt(sum (a_i - b_i)^2), compensated accumulation.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

// Pairwise table over group_side x member_side. Barycenter2D compares 2D
// barycenters on the base map, SapvL1/SapvLegacy compare the respective
// vectors, all three by Euclidean distance; WCD applies the weighted cosine
// dissimilarity to the raw aligned count vectors.
MethodResult distance_table(Method method, std::span<const DenseProfileVector> group_side,
                            std::span<const DenseProfileVector> member_side,
                            const BaseMap* base_map, const SimilarityMatrix* similarity);

struct RankedMember {
    std::string member_id;
    double value = 0.0;
    int rank = 0;  // 1-based
};

struct RankingTable {
    Method method = Method::SapvL1;
    std::size_t k = 3;
    std::vector<std::string> member_universe;  // sorted; all members ranked over
    std::map<std::string, std::vector<RankedMember>> by_group;
};

// Per group, members ascending by value with ties broken by member id;
// top k retained (fewer when fewer members exist).
RankingTable rank_members(const MethodResult& result, std::span<const std::string> groups,
                          std::span<const std::string> members, std::size_t k = 3);

// One complete resolution of the contested assignments: the chosen assessor
// per contested group, the points awarded per group and their total.
struct ScoreVariant {
    std::vector<std::pair<std::string, std::string>> resolution;
    std::map<std::string, int> group_points;
    int total = 0;
};

struct ScoreCard {
    Method method = Method::SapvL1;
    std::vector<ScoreVariant> variants;
};

// 3/2/1 points when the main assessor is ranked first/second/third, else 0.
// Groups assigned several assessors yield one variant per combination of
// choices, enumerated in assignment-row order.
ScoreCard assessor_score(const RankingTable& rankings, const AssignmentTable& assignments);

// Sample Pearson correlation. Results are clamped to [-1, 1].
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson correlation of midranks (average ranks for ties).
double spearman(std::span<const double> x, std::span<const double> y);

// 1-based ranks with ties replaced by their average rank.
std::vector<double> midranks(std::span<const double> values);

struct CorrelationCell {
    double pearson_r = 0.0;
    double spearman_rho = 0.0;
    std::size_t n_pairs = 0;
};

struct CorrelationEntry {
    Method method_a = Method::SapvL1;
    Method method_b = Method::SapvL1;
    CorrelationCell full;
    CorrelationCell filtered;
};

struct CorrelationReport {
    std::vector<std::string> excluded;      // sorted
    std::vector<CorrelationEntry> entries;  // for every i <= j over the inputs
};

// Correlations over the common individual group x member pair set, computed
// on the full set and again with every pair touching an excluded entity
// removed. Aggregates never enter the pair set.
CorrelationReport correlation_report(std::span<const MethodResult> results,
                                     const std::set<std::string>& exclude);

struct ScatterRow {
    std::string group_id;
    std::string member_id;
    double value_a = 0.0;
    double value_b = 0.0;
    bool excluded = false;
};

// One row per individual pair, flagged when the pair touches an excluded
// entity; plot-export companion to correlation_report.
std::vector<ScatterRow> scatter_data(const MethodResult& a, const MethodResult& b,
                                     const std::set<std::string>& exclude);

}  // namespace cogdist
