// cogdist: batch front end for cognitive-distance analysis between
// publication-producing entities. Subcommands:
//   check      validate a Pajek map file and report positive definiteness
//   distances  write one pairwise distance/dissimilarity CSV per method
//   rank       write top-3 rankings and optional main-assessor scores
//   compare    write cross-method correlations and scatter data
//
// Outputs are pure functions of the input bytes and flags; reruns produce
// byte-identical files.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cogdist/analysis.hpp"
#include "cogdist/barycenter.hpp"
#include "cogdist/ingest.hpp"
#include "cogdist/model.hpp"
#include "cogdist/sapv.hpp"
#include "cogdist/wcs.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNotPositiveDefinite = 3;
constexpr int kExitComputationError = 4;

constexpr const char* kSchemaVersion = "1";
constexpr const char* kAggregateGroupsId = "Groups";
constexpr const char* kAggregatePanelId = "Panel";
constexpr const char* kNonPdWarning =
    "non-PD matrix: wcd values are not a valid inner-product similarity";

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw cogdist::Error(cogdist::errc::io_error, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw cogdist::Error(cogdist::errc::io_error, "cannot write '" + path.string() + "'");
    }
}

// Fixed six decimals, diff-friendly and stable across reruns. Values that
// round to zero lose their sign so fp noise like -2e-16 prints as 0.000000.
std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::string out = buf;
    if (out == "-0.000000") out.erase(0, 1);
    return out;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_general(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct RunConfig {
    std::string map_path;
    std::string profiles_path;
    std::string assignments_path;
    std::vector<std::string> method_names{"barycenter", "sapv", "wcd"};
    std::vector<std::string> exclude;
    std::string out_dir = ".";
    std::string alignment = "strict";
    double psd_tol = cogdist::kDefaultPsdTolerance;
};

std::vector<cogdist::Method> resolve_methods(const std::vector<std::string>& names) {
    if (names.empty()) {
        throw cogdist::Error(cogdist::errc::bad_config, "at least one method must be selected");
    }
    std::vector<cogdist::Method> methods;
    for (const std::string& name : names) {
        auto m = cogdist::method_from_name(name);
        if (!m) {
            throw cogdist::Error(cogdist::errc::bad_config,
                                 "unknown method '" + name + "' (expected barycenter, sapv, "
                                 "sapv-legacy or wcd)");
        }
        if (std::find(methods.begin(), methods.end(), *m) == methods.end()) {
            methods.push_back(*m);
        }
    }
    // Canonical order keeps output files independent of flag order.
    std::sort(methods.begin(), methods.end());
    return methods;
}

// Everything the computation commands need, loaded and aligned once.
struct Workspace {
    cogdist::MapModel model;
    std::vector<cogdist::DenseProfileVector> group_side;   // groups + Groups aggregate
    std::vector<cogdist::DenseProfileVector> member_side;  // members + Panel aggregate
    std::vector<std::string> group_ids;                    // individuals, sorted
    std::vector<std::string> member_ids;                   // individuals, sorted
    std::optional<cogdist::PsdReport> psd;
};

Workspace load_workspace(const RunConfig& config, bool need_psd) {
    using namespace cogdist;
    if (config.map_path.empty()) {
        throw Error(errc::bad_config, "--map is required");
    }
    if (config.profiles_path.empty()) {
        throw Error(errc::bad_config, "--profiles is required");
    }
    std::vector<std::string> parse_warnings;
    PajekDocument doc = parse_pajek(read_file(config.map_path), &parse_warnings);
    for (const std::string& w : parse_warnings) {
        std::cerr << "warning: " << config.map_path << ": " << w << "\n";
    }
    Workspace ws{to_model(doc), {}, {}, {}, {}, std::nullopt};

    std::vector<PublicationProfile> profiles = parse_profiles_csv(read_file(config.profiles_path));
    std::vector<PublicationProfile> groups;
    std::vector<PublicationProfile> members;
    for (PublicationProfile& p : profiles) {
        if (p.entity_id == kAggregateGroupsId || p.entity_id == kAggregatePanelId) {
            throw Error(errc::bad_config, "entity id '" + p.entity_id +
                                              "' is reserved for the aggregate profiles");
        }
        (p.kind == EntityKind::ResearchGroup ? groups : members).push_back(std::move(p));
    }
    if (groups.empty() || members.empty()) {
        throw Error(errc::bad_config, "profiles must contain at least one group and one panel member");
    }
    auto by_id = [](const PublicationProfile& a, const PublicationProfile& b) {
        return a.entity_id < b.entity_id;
    };
    std::sort(groups.begin(), groups.end(), by_id);
    std::sort(members.begin(), members.end(), by_id);

    AlignmentPolicy policy =
        config.alignment == "drop" ? AlignmentPolicy::DropUnknown : AlignmentPolicy::Strict;
    auto align = [&](const PublicationProfile& p) {
        std::vector<DroppedCategory> dropped;
        DenseProfileVector v = align_profile(p, ws.model.catalog, policy, &dropped);
        for (const DroppedCategory& d : dropped) {
            std::cerr << "warning: entity '" << p.entity_id << "': category '" << d.category
                      << "' (count " << format_general(d.count) << ") not in catalog, dropped\n";
        }
        return v;
    };

    for (const PublicationProfile& p : groups) {
        ws.group_side.push_back(align(p));
        ws.group_ids.push_back(p.entity_id);
    }
    ws.group_side.push_back(
        align(aggregate_profiles(groups, kAggregateGroupsId, EntityKind::AggregateGroups)));
    for (const PublicationProfile& p : members) {
        ws.member_side.push_back(align(p));
        ws.member_ids.push_back(p.entity_id);
    }
    ws.member_side.push_back(
        align(aggregate_profiles(members, kAggregatePanelId, EntityKind::AggregatePanel)));

    if (need_psd) {
        ws.psd = psd_check(ws.model.similarity, config.psd_tol);
        if (!ws.psd->is_positive_definite) {
            std::cerr << "warning: " << kNonPdWarning << " (min eigenvalue "
                      << format_general(ws.psd->min_eigenvalue) << ")\n";
        }
    }
    return ws;
}

bool wcd_selected(const std::vector<cogdist::Method>& methods) {
    return std::find(methods.begin(), methods.end(), cogdist::Method::WCD) != methods.end();
}

bool flag_non_pd(const Workspace& ws) { return ws.psd && !ws.psd->is_positive_definite; }

cogdist::MethodResult compute_table(const Workspace& ws, cogdist::Method method) {
    return cogdist::distance_table(method, ws.group_side, ws.member_side, &ws.model.base_map,
                                   &ws.model.similarity);
}

fs::path prepare_out_dir(const RunConfig& config) {
    fs::path dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw cogdist::Error(cogdist::errc::io_error,
                             "cannot create output directory '" + dir.string() + "'");
    }
    return dir;
}

int cmd_check(const std::string& map_path, double psd_tol, bool raw) {
    using namespace cogdist;
    std::vector<std::string> warnings;
    PajekDocument doc = parse_pajek(read_file(map_path), &warnings);
    for (const std::string& w : warnings) {
        std::cerr << "warning: " << map_path << ": " << w << "\n";
    }
    MapModel model = to_model(doc, ToModelOptions{.enforce_weight_range = !raw});
    PsdReport report = psd_check(model.similarity, psd_tol);

    std::cout << "vertices: " << model.catalog->size() << "\n"
              << "symmetric: " << (report.is_symmetric ? "true" : "false") << "\n"
              << "min_eigenvalue: " << format_general(report.min_eigenvalue) << "\n"
              << "max_eigenvalue: " << format_general(report.max_eigenvalue) << "\n"
              << "positive_definite: " << (report.is_positive_definite ? "true" : "false") << "\n"
              << "positive_semidefinite: " << (report.is_positive_semidefinite ? "true" : "false")
              << "\n";
    return report.is_positive_definite ? kExitOk : kExitNotPositiveDefinite;
}

std::string render_distances_csv(const cogdist::MethodResult& table) {
    // Per group-side entity, flag the smallest value among individual
    // members; ties go to the lexicographically first member id.
    std::map<std::string, std::string> min_member;
    for (const auto& group : {table.group_ids, table.aggregate_group_ids}) {
        for (const std::string& g : group) {
            std::string best;
            double best_value = 0.0;
            for (const std::string& m : table.member_ids) {
                double v = table.value(g, m);
                if (best.empty() || v < best_value) {
                    best = m;
                    best_value = v;
                }
            }
            if (!best.empty()) min_member[g] = best;
        }
    }

    std::string out = "group,member,value,is_group_min\n";
    for (const auto& [key, value] : table.entries) {
        const auto& [g, m] = key;
        bool is_min = min_member.count(g) > 0 && min_member.at(g) == m;
        out += csv_quote(g) + "," + csv_quote(m) + "," + format_value(value) + "," +
               (is_min ? "true" : "false") + "\n";
    }
    return out;
}

int cmd_distances(const RunConfig& config) {
    std::vector<cogdist::Method> methods = resolve_methods(config.method_names);
    Workspace ws = load_workspace(config, wcd_selected(methods));
    fs::path dir = prepare_out_dir(config);
    for (cogdist::Method method : methods) {
        cogdist::MethodResult table = compute_table(ws, method);
        write_file(dir / (std::string(cogdist::method_name(method)) + "_distances.csv"),
                   render_distances_csv(table));
    }
    return kExitOk;
}

int cmd_rank(const RunConfig& config) {
    using namespace cogdist;
    std::vector<Method> methods = resolve_methods(config.method_names);
    Workspace ws = load_workspace(config, wcd_selected(methods));
    fs::path dir = prepare_out_dir(config);

    std::string csv = "method,group,rank,member,value\n";
    json scores = json::object();
    scores["schema_version"] = kSchemaVersion;
    scores["scores"] = json::array();
    if (wcd_selected(methods) && flag_non_pd(ws)) {
        scores["warnings"] = json::array({kNonPdWarning});
    }

    std::optional<AssignmentTable> assignments;
    if (!config.assignments_path.empty()) {
        assignments = parse_assignments_csv(read_file(config.assignments_path));
    }

    for (Method method : methods) {
        MethodResult table = compute_table(ws, method);
        RankingTable rankings = rank_members(table, ws.group_ids, ws.member_ids, 3);
        for (const auto& [group, ranked] : rankings.by_group) {
            for (const RankedMember& r : ranked) {
                csv += std::string(method_name(method)) + "," + csv_quote(group) + "," +
                       std::to_string(r.rank) + "," + csv_quote(r.member_id) + "," +
                       format_value(r.value) + "\n";
            }
        }
        if (assignments) {
            ScoreCard card = assessor_score(rankings, *assignments);
            json method_entry;
            method_entry["method"] = method_name(method);
            method_entry["variants"] = json::array();
            for (const ScoreVariant& variant : card.variants) {
                json v;
                v["resolution"] = json::array();
                for (const auto& [group, assessor] : variant.resolution) {
                    v["resolution"].push_back({{"group", group}, {"assessor", assessor}});
                }
                v["per_group"] = json::object();
                for (const auto& [group, points] : variant.group_points) {
                    v["per_group"][group] = points;
                }
                v["total"] = variant.total;
                method_entry["variants"].push_back(std::move(v));
            }
            scores["scores"].push_back(std::move(method_entry));
        }
    }

    write_file(dir / "rankings.csv", csv);
    if (assignments) {
        write_file(dir / "scores.json", scores.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_compare(const RunConfig& config) {
    using namespace cogdist;
    std::vector<Method> methods = resolve_methods(config.method_names);
    if (methods.size() < 2) {
        throw Error(errc::bad_config, "compare needs at least two distinct methods");
    }
    Workspace ws = load_workspace(config, wcd_selected(methods));
    fs::path dir = prepare_out_dir(config);

    std::vector<MethodResult> tables;
    tables.reserve(methods.size());
    for (Method method : methods) tables.push_back(compute_table(ws, method));

    std::set<std::string> exclude(config.exclude.begin(), config.exclude.end());
    CorrelationReport report = correlation_report(tables, exclude);

    json out;
    out["schema_version"] = kSchemaVersion;
    out["excluded_entities"] = report.excluded;
    if (wcd_selected(methods) && flag_non_pd(ws)) {
        out["warnings"] = json::array({kNonPdWarning});
    }
    out["correlations"] = json::array();
    for (const CorrelationEntry& entry : report.entries) {
        json cell;
        cell["method_a"] = method_name(entry.method_a);
        cell["method_b"] = method_name(entry.method_b);
        cell["full"] = {{"pearson", entry.full.pearson_r},
                        {"spearman", entry.full.spearman_rho},
                        {"pairs", entry.full.n_pairs}};
        cell["excluding"] = {{"pearson", entry.filtered.pearson_r},
                             {"spearman", entry.filtered.spearman_rho},
                             {"pairs", entry.filtered.n_pairs}};
        out["correlations"].push_back(std::move(cell));
    }
    write_file(dir / "correlations.json", out.dump(2) + "\n");

    for (std::size_t i = 0; i < tables.size(); ++i) {
        for (std::size_t j = i + 1; j < tables.size(); ++j) {
            std::string csv = "group,member,value_a,value_b,excluded\n";
            for (const ScatterRow& row : scatter_data(tables[i], tables[j], exclude)) {
                csv += csv_quote(row.group_id) + "," + csv_quote(row.member_id) + "," +
                       format_value(row.value_a) + "," + format_value(row.value_b) + "," +
                       (row.excluded ? "true" : "false") + "\n";
            }
            write_file(dir / ("scatter_" + std::string(method_name(tables[i].method)) + "_" +
                              std::string(method_name(tables[j].method)) + ".csv"),
                       csv);
        }
    }
    return kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& config, bool with_assignments) {
    cmd->add_option("--map", config.map_path, "Pajek base-map/similarity file")->required();
    cmd->add_option("--profiles", config.profiles_path,
                    "CSV of publication counts (entity,kind,category,count)")
        ->required();
    if (with_assignments) {
        cmd->add_option("--assignments", config.assignments_path,
                        "CSV of main assessors (group,main_assessor)");
    }
    cmd->add_option("--methods", config.method_names,
                    "Comma-separated subset of barycenter,sapv,sapv-legacy,wcd "
                    "(sapv-legacy is deprecated; kept for comparative analysis)")
        ->delimiter(',');
    cmd->add_option("--out", config.out_dir, "Output directory (created if missing)");
    cmd->add_option("--alignment", config.alignment, "Unknown-category policy")
        ->check(CLI::IsMember({"strict", "drop"}));
    cmd->add_option("--psd-tol", config.psd_tol, "Relative tolerance of the PSD check");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cognitive distance analysis between publication profiles"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a config file (flags win)");

    RunConfig config;

    std::string check_map;
    double check_tol = cogdist::kDefaultPsdTolerance;
    bool check_raw = false;
    CLI::App* check = app.add_subcommand("check", "Validate a map file and report PD status");
    check->configurable();
    check->fallthrough();
    check->add_option("--map", check_map, "Pajek base-map/similarity file")->required();
    check->add_option("--psd-tol", check_tol, "Relative tolerance of the PSD check");
    check->add_flag("--raw", check_raw, "Skip the [0, 1] weight-range validation (diagnostics)");

    CLI::App* distances =
        app.add_subcommand("distances", "Write one pairwise value CSV per method");
    distances->configurable();
    distances->fallthrough();
    add_common_options(distances, config, false);

    CLI::App* rank = app.add_subcommand("rank", "Write top-3 rankings and optional scores");
    rank->configurable();
    rank->fallthrough();
    add_common_options(rank, config, true);

    CLI::App* compare = app.add_subcommand("compare", "Write cross-method correlation report");
    compare->configurable();
    compare->fallthrough();
    add_common_options(compare, config, false);
    compare->add_option("--exclude", config.exclude,
                        "Comma-separated entity ids removed in the filtered correlations")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints message/help; 0 for --help
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check(check_map, check_tol, check_raw);
        if (distances->parsed()) return cmd_distances(config);
        if (rank->parsed()) return cmd_rank(config);
        if (compare->parsed()) return cmd_compare(config);
    } catch (const cogdist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cogdist::is_input_error(e.code()) ? kExitInputError : kExitComputationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
