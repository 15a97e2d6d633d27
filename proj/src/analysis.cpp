#include "cogdist/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cogdist/barycenter.hpp"
#include "cogdist/numeric.hpp"
#include "cogdist/sapv.hpp"
#include "cogdist/wcs.hpp"

namespace cogdist {

const char* method_name(Method m) {
    switch (m) {
        case Method::Barycenter2D: return "barycenter";
        case Method::SapvL1: return "sapv";
        case Method::SapvLegacy: return "sapv-legacy";
        case Method::WCD: return "wcd";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "barycenter") return Method::Barycenter2D;
    if (name == "sapv") return Method::SapvL1;
    if (name == "sapv-legacy") return Method::SapvLegacy;
    if (name == "wcd") return Method::WCD;
    return std::nullopt;
}

Semantics method_semantics(Method m) {
    return m == Method::WCD ? Semantics::Dissimilarity : Semantics::Distance;
}

bool MethodResult::has(const std::string& a, const std::string& b) const {
    return entries.count({a, b}) > 0 || entries.count({b, a}) > 0;
}

double MethodResult::value(const std::string& a, const std::string& b) const {
    auto it = entries.find({a, b});
    if (it != entries.end()) return it->second;
    it = entries.find({b, a});
    if (it != entries.end()) return it->second;
    throw Error(errc::missing_pair, "no value for pair (" + a + ", " + b + ")");
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(errc::length_mismatch, "vectors of length " + std::to_string(a.size()) +
                                               " and " + std::to_string(b.size()));
    }
    KahanSum acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        acc.add(d * d);
    }
    return std::sqrt(acc.value());
}

namespace {

void classify(std::span<const DenseProfileVector> side, bool group_side,
              MethodResult& result) {
    for (const DenseProfileVector& v : side) {
        if (is_aggregate(v.kind())) {
            (group_side ? result.aggregate_group_ids : result.aggregate_member_ids)
                .push_back(v.entity_id());
        } else {
            (group_side ? result.group_ids : result.member_ids).push_back(v.entity_id());
        }
    }
    std::sort(result.group_ids.begin(), result.group_ids.end());
    std::sort(result.member_ids.begin(), result.member_ids.end());
    std::sort(result.aggregate_group_ids.begin(), result.aggregate_group_ids.end());
    std::sort(result.aggregate_member_ids.begin(), result.aggregate_member_ids.end());
}

}  // namespace

MethodResult distance_table(Method method, std::span<const DenseProfileVector> group_side,
                            std::span<const DenseProfileVector> member_side,
                            const BaseMap* base_map, const SimilarityMatrix* similarity) {
    MethodResult result;
    result.method = method;
    result.semantics = method_semantics(method);
    classify(group_side, true, result);
    classify(member_side, false, result);

    if (method == Method::Barycenter2D) {
        if (!base_map) {
            throw Error(errc::bad_config, "the barycenter method requires a base map");
        }
        std::vector<Point2D> g_points;
        std::vector<Point2D> m_points;
        g_points.reserve(group_side.size());
        m_points.reserve(member_side.size());
        for (const auto& v : group_side) g_points.push_back(barycenter_2d(v, *base_map));
        for (const auto& v : member_side) m_points.push_back(barycenter_2d(v, *base_map));
        for (std::size_t i = 0; i < group_side.size(); ++i) {
            for (std::size_t j = 0; j < member_side.size(); ++j) {
                std::array<double, 2> a{g_points[i].c1, g_points[i].c2};
                std::array<double, 2> b{m_points[j].c1, m_points[j].c2};
                result.entries[{group_side[i].entity_id(), member_side[j].entity_id()}] =
                    euclidean_distance(a, b);
            }
        }
        return result;
    }

    if (!similarity) {
        throw Error(errc::bad_config,
                    std::string("the ") + method_name(method) + " method requires a similarity matrix");
    }
    if (method == Method::WCD) {
        for (const auto& g : group_side) {
            for (const auto& m : member_side) {
                try {
                    result.entries[{g.entity_id(), m.entity_id()}] =
                        weighted_cosine_dissimilarity(*similarity, g, m);
                } catch (const Error& e) {
                    if (e.code() != errc::degenerate_norm) throw;
                    throw Error(errc::degenerate_norm, "pair (" + g.entity_id() + ", " +
                                                           m.entity_id() + "): " + e.what());
                }
            }
        }
        return result;
    }

    auto represent = [&](const DenseProfileVector& v) {
        return method == Method::SapvL1 ? sapv_l1(*similarity, v) : sapv_legacy(*similarity, v);
    };
    std::vector<SapvVector> g_vecs;
    std::vector<SapvVector> m_vecs;
    g_vecs.reserve(group_side.size());
    m_vecs.reserve(member_side.size());
    for (const auto& v : group_side) g_vecs.push_back(represent(v));
    for (const auto& v : member_side) m_vecs.push_back(represent(v));
    for (std::size_t i = 0; i < group_side.size(); ++i) {
        for (std::size_t j = 0; j < member_side.size(); ++j) {
            result.entries[{group_side[i].entity_id(), member_side[j].entity_id()}] =
                euclidean_distance(g_vecs[i].values, m_vecs[j].values);
        }
    }
    return result;
}

RankingTable rank_members(const MethodResult& result, std::span<const std::string> groups,
                          std::span<const std::string> members, std::size_t k) {
    RankingTable table;
    table.method = result.method;
    table.k = k;
    table.member_universe.assign(members.begin(), members.end());
    std::sort(table.member_universe.begin(), table.member_universe.end());

    for (const std::string& group : groups) {
        std::vector<RankedMember> ranked;
        ranked.reserve(members.size());
        for (const std::string& member : members) {
            ranked.push_back({member, result.value(group, member), 0});
        }
        std::sort(ranked.begin(), ranked.end(), [](const RankedMember& a, const RankedMember& b) {
            if (a.value != b.value) return a.value < b.value;
            return a.member_id < b.member_id;
        });
        if (ranked.size() > k) ranked.resize(k);
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            ranked[i].rank = static_cast<int>(i) + 1;
        }
        table.by_group[group] = std::move(ranked);
    }
    return table;
}

namespace {

int points_for_assessor(const RankingTable& rankings, const std::string& group,
                        const std::string& assessor) {
    const auto& ranked = rankings.by_group.at(group);
    for (const RankedMember& r : ranked) {
        if (r.member_id == assessor) {
            return r.rank <= 3 ? 4 - r.rank : 0;
        }
    }
    return 0;
}

}  // namespace

ScoreCard assessor_score(const RankingTable& rankings, const AssignmentTable& assignments) {
    // Assessor choices per group, in first-appearance row order.
    std::vector<std::pair<std::string, std::vector<std::string>>> per_group;
    for (const Assignment& row : assignments.rows) {
        if (rankings.by_group.find(row.group_id) == rankings.by_group.end()) {
            throw Error(errc::unknown_group, "group '" + row.group_id + "' was never ranked");
        }
        if (!std::binary_search(rankings.member_universe.begin(), rankings.member_universe.end(),
                                row.main_assessor_id)) {
            throw Error(errc::unknown_assessor,
                        "assessor '" + row.main_assessor_id + "' is not a ranked panel member");
        }
        auto it = std::find_if(per_group.begin(), per_group.end(),
                               [&](const auto& g) { return g.first == row.group_id; });
        if (it == per_group.end()) {
            per_group.push_back({row.group_id, {row.main_assessor_id}});
        } else {
            it->second.push_back(row.main_assessor_id);
        }
    }

    std::vector<std::size_t> contested;
    for (std::size_t i = 0; i < per_group.size(); ++i) {
        if (per_group[i].second.size() > 1) contested.push_back(i);
    }

    ScoreCard card;
    card.method = rankings.method;
    // Cartesian product over contested groups; earlier assignment rows vary
    // slowest so the first variant uses each group's first-listed assessor.
    std::size_t n_variants = 1;
    for (std::size_t idx : contested) n_variants *= per_group[idx].second.size();

    for (std::size_t variant = 0; variant < n_variants; ++variant) {
        std::vector<std::size_t> choice(per_group.size(), 0);
        std::size_t rem = variant;
        for (auto it = contested.rbegin(); it != contested.rend(); ++it) {
            std::size_t options = per_group[*it].second.size();
            choice[*it] = rem % options;
            rem /= options;
        }
        ScoreVariant sv;
        int total = 0;
        for (std::size_t i = 0; i < per_group.size(); ++i) {
            const std::string& group = per_group[i].first;
            const std::string& assessor = per_group[i].second[choice[i]];
            int points = points_for_assessor(rankings, group, assessor);
            sv.group_points[group] = points;
            total += points;
            if (per_group[i].second.size() > 1) {
                sv.resolution.push_back({group, assessor});
            }
        }
        sv.total = total;
        card.variants.push_back(std::move(sv));
    }
    return card;
}

std::vector<double> midranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t p = i; p <= j; ++p) ranks[order[p]] = midrank;
        i = j + 1;
    }
    return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(errc::length_mismatch, "lists of length " + std::to_string(x.size()) +
                                               " and " + std::to_string(y.size()));
    }
    if (x.size() < 2) {
        throw Error(errc::length_mismatch, "correlation needs at least 2 observations");
    }
    double n = static_cast<double>(x.size());
    double mean_x = compensated_sum(x) / n;
    double mean_y = compensated_sum(y) / n;
    KahanSum sxy;
    KahanSum sxx;
    KahanSum syy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mean_x;
        double dy = y[i] - mean_y;
        sxy.add(dx * dy);
        sxx.add(dx * dx);
        syy.add(dy * dy);
    }
    if (sxx.value() <= 0.0 || syy.value() <= 0.0) {
        throw Error(errc::zero_variance, "constant list has no correlation");
    }
    double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
    return std::clamp(r, -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(errc::length_mismatch, "lists of length " + std::to_string(x.size()) +
                                               " and " + std::to_string(y.size()));
    }
    std::vector<double> rx = midranks(x);
    std::vector<double> ry = midranks(y);
    return pearson(rx, ry);
}

namespace {

std::vector<std::pair<std::string, std::string>> common_pair_set(
    std::span<const MethodResult* const> results) {
    const MethodResult& first = *results.front();
    for (const MethodResult* r : results) {
        if (r->group_ids != first.group_ids || r->member_ids != first.member_ids) {
            throw Error(errc::pair_set_mismatch,
                        "method results cover different entity sets");
        }
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(first.group_ids.size() * first.member_ids.size());
    for (const std::string& g : first.group_ids) {
        for (const std::string& m : first.member_ids) {
            for (const MethodResult* r : results) {
                if (!r->has(g, m)) {
                    throw Error(errc::pair_set_mismatch, "method '" +
                                                             std::string(method_name(r->method)) +
                                                             "' lacks pair (" + g + ", " + m + ")");
                }
            }
            pairs.push_back({g, m});
        }
    }
    return pairs;
}

}  // namespace

CorrelationReport correlation_report(std::span<const MethodResult> results,
                                     const std::set<std::string>& exclude) {
    if (results.empty()) {
        throw Error(errc::empty_input, "no method results to correlate");
    }
    std::vector<const MethodResult*> pointers;
    pointers.reserve(results.size());
    for (const MethodResult& r : results) pointers.push_back(&r);
    auto pairs = common_pair_set(pointers);

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (exclude.count(pairs[i].first) == 0 && exclude.count(pairs[i].second) == 0) {
            kept.push_back(i);
        }
    }
    if (pairs.size() < 3 || kept.size() < 3) {
        throw Error(errc::too_few_pairs,
                    "need at least 3 pairs, have " + std::to_string(pairs.size()) + " (" +
                        std::to_string(kept.size()) + " after exclusion)");
    }

    std::vector<std::vector<double>> full(results.size());
    std::vector<std::vector<double>> filtered(results.size());
    for (std::size_t r = 0; r < results.size(); ++r) {
        full[r].reserve(pairs.size());
        for (const auto& [g, m] : pairs) full[r].push_back(results[r].value(g, m));
        filtered[r].reserve(kept.size());
        for (std::size_t i : kept) filtered[r].push_back(full[r][i]);
    }

    CorrelationReport report;
    report.excluded.assign(exclude.begin(), exclude.end());
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (std::size_t j = i; j < results.size(); ++j) {
            CorrelationEntry entry;
            entry.method_a = results[i].method;
            entry.method_b = results[j].method;
            entry.full = {pearson(full[i], full[j]), spearman(full[i], full[j]), pairs.size()};
            entry.filtered = {pearson(filtered[i], filtered[j]), spearman(filtered[i], filtered[j]),
                              kept.size()};
            report.entries.push_back(entry);
        }
    }
    return report;
}

std::vector<ScatterRow> scatter_data(const MethodResult& a, const MethodResult& b,
                                     const std::set<std::string>& exclude) {
    const MethodResult* results[2] = {&a, &b};
    auto pairs = common_pair_set(results);
    std::vector<ScatterRow> rows;
    rows.reserve(pairs.size());
    for (const auto& [g, m] : pairs) {
        rows.push_back({g, m, a.value(g, m), b.value(g, m),
                        exclude.count(g) > 0 || exclude.count(m) > 0});
    }
    return rows;
}

}  // namespace cogdist
