#include "cogdist/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

namespace cogdist {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool parse_double(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool parse_int(std::string_view token, int& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string format_real(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// Whitespace-separated tokens; a token starting with '"' runs to the closing
// quote and may contain spaces.
std::vector<std::string> pajek_tokens(std::string_view line, std::size_t line_no) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        if (line[i] == '"') {
            std::size_t close = line.find('"', i + 1);
            if (close == std::string_view::npos) {
                throw Error(errc::unparsable_line,
                            "line " + std::to_string(line_no) + ": unterminated quote");
            }
            tokens.emplace_back(line.substr(i + 1, close - i - 1));
            i = close + 1;
        } else {
            std::size_t end = line.find_first_of(" \t", i);
            if (end == std::string_view::npos) end = line.size();
            tokens.emplace_back(line.substr(i, end - i));
            i = end;
        }
    }
    return tokens;
}

struct Line {
    std::string_view text;
    std::size_t number;
};

// Non-blank trimmed lines with their 1-based numbers; optionally drops
// %-comment lines (Pajek only).
std::vector<Line> significant_lines(std::string_view text, bool skip_comments) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = (eol == std::string_view::npos) ? text.substr(pos)
                                                               : text.substr(pos, eol - pos);
        ++line_no;
        std::string_view line = trim(raw);
        if (!line.empty() && !(skip_comments && line.front() == '%')) {
            lines.push_back({line, line_no});
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

}  // namespace

PajekDocument parse_pajek(std::string_view text, std::vector<std::string>* warnings) {
    std::vector<Line> lines = significant_lines(text, true);
    std::size_t cursor = 0;

    if (cursor >= lines.size()) {
        throw Error(errc::malformed_header, "missing *Vertices section");
    }
    auto header = pajek_tokens(lines[cursor].text, lines[cursor].number);
    if (header.size() != 2 || to_lower(header[0]) != "*vertices") {
        throw Error(errc::malformed_header,
                    "line " + std::to_string(lines[cursor].number) + ": expected '*Vertices N'");
    }
    int declared = 0;
    if (!parse_int(header[1], declared) || declared < 1) {
        throw Error(errc::malformed_header, "line " + std::to_string(lines[cursor].number) +
                                                ": invalid vertex count '" + header[1] + "'");
    }
    ++cursor;

    PajekDocument doc;
    doc.vertices.reserve(static_cast<std::size_t>(declared));
    while (cursor < lines.size() && lines[cursor].text.front() != '*') {
        const Line& line = lines[cursor];
        auto tokens = pajek_tokens(line.text, line.number);
        if (tokens.size() < 4 || tokens.size() > 5) {
            throw Error(errc::unparsable_line, "line " + std::to_string(line.number) +
                                                   ": expected 'id \"label\" x y [z]'");
        }
        PajekVertex v;
        if (!parse_int(tokens[0], v.id) || !parse_double(tokens[2], v.x) ||
            !parse_double(tokens[3], v.y)) {
            throw Error(errc::unparsable_line,
                        "line " + std::to_string(line.number) + ": bad vertex id or coordinate");
        }
        if (tokens.size() == 5) {
            double z = 0.0;
            if (!parse_double(tokens[4], z)) {
                throw Error(errc::unparsable_line,
                            "line " + std::to_string(line.number) + ": bad z coordinate");
            }
            v.z = z;
        }
        v.label = tokens[1];
        if (v.id != static_cast<int>(doc.vertices.size()) + 1) {
            throw Error(errc::vertex_count_mismatch,
                        "line " + std::to_string(line.number) + ": expected vertex id " +
                            std::to_string(doc.vertices.size() + 1) + ", found " +
                            std::to_string(v.id));
        }
        doc.vertices.push_back(std::move(v));
        ++cursor;
    }
    if (doc.vertices.size() != static_cast<std::size_t>(declared)) {
        throw Error(errc::vertex_count_mismatch,
                    "header declares " + std::to_string(declared) + " vertices, found " +
                        std::to_string(doc.vertices.size()));
    }

    if (cursor >= lines.size()) {
        throw Error(errc::malformed_header, "missing *Edges or *Arcs section");
    }
    auto section = pajek_tokens(lines[cursor].text, lines[cursor].number);
    std::string keyword = to_lower(section[0]);
    if (section.size() != 1 || (keyword != "*edges" && keyword != "*arcs")) {
        throw Error(errc::malformed_header, "line " + std::to_string(lines[cursor].number) +
                                                ": expected '*Edges' or '*Arcs'");
    }
    doc.link_kind = (keyword == "*edges") ? LinkKind::Edges : LinkKind::Arcs;
    ++cursor;

    while (cursor < lines.size() && lines[cursor].text.front() != '*') {
        const Line& line = lines[cursor];
        auto tokens = pajek_tokens(line.text, line.number);
        if (tokens.size() != 3) {
            throw Error(errc::unparsable_line,
                        "line " + std::to_string(line.number) + ": expected 'i j w'");
        }
        PajekLink link;
        if (!parse_int(tokens[0], link.from) || !parse_int(tokens[1], link.to) ||
            !parse_double(tokens[2], link.weight)) {
            throw Error(errc::unparsable_line,
                        "line " + std::to_string(line.number) + ": bad link endpoint or weight");
        }
        if (link.from < 1 || link.from > declared || link.to < 1 || link.to > declared) {
            throw Error(errc::dangling_link_endpoint,
                        "line " + std::to_string(line.number) + ": link (" +
                            std::to_string(link.from) + ", " + std::to_string(link.to) +
                            ") leaves the vertex range [1, " + std::to_string(declared) + "]");
        }
        doc.links.push_back(link);
        ++cursor;
    }

    if (cursor < lines.size() && warnings) {
        auto tokens = pajek_tokens(lines[cursor].text, lines[cursor].number);
        warnings->push_back("section '" + tokens[0] + "' at line " +
                            std::to_string(lines[cursor].number) + " skipped");
    }
    return doc;
}

std::string serialize_pajek(const PajekDocument& doc) {
    std::string out;
    out += "*Vertices " + std::to_string(doc.vertices.size()) + "\n";
    for (const PajekVertex& v : doc.vertices) {
        if (v.label.find('"') != std::string::npos) {
            throw Error(errc::bad_config,
                        "label '" + v.label + "' contains a quote, which the format cannot carry");
        }
        out += std::to_string(v.id) + " \"" + v.label + "\" " + format_real(v.x) + " " +
               format_real(v.y);
        if (v.z) {
            out += " " + format_real(*v.z);
        }
        out += "\n";
    }
    out += (doc.link_kind == LinkKind::Edges) ? "*Edges\n" : "*Arcs\n";
    for (const PajekLink& link : doc.links) {
        out += std::to_string(link.from) + " " + std::to_string(link.to) + " " +
               format_real(link.weight) + "\n";
    }
    return out;
}

MapModel to_model(const PajekDocument& doc, const ToModelOptions& options) {
    std::vector<std::string> labels;
    labels.reserve(doc.vertices.size());
    std::vector<std::array<double, 2>> coords;
    coords.reserve(doc.vertices.size());
    for (const PajekVertex& v : doc.vertices) {
        labels.push_back(v.label);
        coords.push_back({v.x, v.y});
    }
    auto catalog = std::make_shared<const CategoryCatalog>(std::move(labels));
    std::size_t n = catalog->size();

    std::vector<double> values(n * n, 0.0);
    std::vector<char> assigned(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1.0;

    for (const PajekLink& link : doc.links) {
        if (options.enforce_weight_range &&
            (link.weight < 0.0 || link.weight > 1.0 + SimilarityMatrix::kRangeTolerance)) {
            throw Error(errc::weight_out_of_range,
                        "link (" + std::to_string(link.from) + ", " + std::to_string(link.to) +
                            ") has weight " + std::to_string(link.weight) + " outside [0, 1]");
        }
        std::size_t i = static_cast<std::size_t>(link.from - 1);
        std::size_t j = static_cast<std::size_t>(link.to - 1);
        if (i == j) {
            // The diagonal is fixed at 1 (self-similarity of a category).
            if (std::abs(link.weight - 1.0) > SimilarityMatrix::kSymmetryTolerance) {
                throw Error(errc::conflicting_link_weights,
                            "self-link on vertex " + std::to_string(link.from) + " has weight " +
                                std::to_string(link.weight) + ", diagonal is fixed at 1");
            }
            continue;
        }
        if (assigned[i * n + j]) {
            if (std::abs(values[i * n + j] - link.weight) > SimilarityMatrix::kSymmetryTolerance) {
                throw Error(errc::conflicting_link_weights,
                            "links (" + std::to_string(link.from) + ", " + std::to_string(link.to) +
                                ") carry weights " + std::to_string(values[i * n + j]) + " and " +
                                std::to_string(link.weight));
            }
            continue;
        }
        values[i * n + j] = values[j * n + i] = link.weight;
        assigned[i * n + j] = assigned[j * n + i] = 1;
    }

    SimilarityMatrix similarity =
        options.enforce_weight_range
            ? SimilarityMatrix(catalog, std::move(values))
            : SimilarityMatrix::unchecked(catalog, std::move(values));
    return MapModel{catalog, BaseMap(catalog, std::move(coords)), std::move(similarity)};
}

namespace {

// One CSV record; supports double-quoted fields with "" escapes.
std::vector<std::string> csv_fields(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            if (!current.empty()) {
                throw Error(errc::unparsable_row,
                            "line " + std::to_string(line_no) + ": stray quote");
            }
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
        ++i;
    }
    if (in_quotes) {
        throw Error(errc::unparsable_row, "line " + std::to_string(line_no) + ": unterminated quote");
    }
    fields.push_back(std::move(current));
    return fields;
}

}  // namespace

std::vector<PublicationProfile> parse_profiles_csv(std::string_view text) {
    std::vector<Line> lines = significant_lines(text, false);
    if (lines.empty()) {
        throw Error(errc::bad_header, "profiles CSV is empty");
    }
    auto header = csv_fields(lines[0].text, lines[0].number);
    if (header != std::vector<std::string>{"entity", "kind", "category", "count"}) {
        throw Error(errc::bad_header, "expected header 'entity,kind,category,count'");
    }

    std::vector<PublicationProfile> profiles;  // first-appearance order
    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        auto fields = csv_fields(line.text, line.number);
        if (fields.size() != 4 || fields[0].empty()) {
            throw Error(errc::unparsable_row,
                        "line " + std::to_string(line.number) + ": expected 4 fields");
        }
        EntityKind kind;
        if (fields[1] == "group") {
            kind = EntityKind::ResearchGroup;
        } else if (fields[1] == "panel_member") {
            kind = EntityKind::PanelMember;
        } else {
            throw Error(errc::unparsable_row, "line " + std::to_string(line.number) +
                                                  ": kind must be 'group' or 'panel_member'");
        }
        double count = 0.0;
        if (!parse_double(fields[3], count)) {
            throw Error(errc::unparsable_row,
                        "line " + std::to_string(line.number) + ": bad count '" + fields[3] + "'");
        }
        if (count < 0.0) {
            throw Error(errc::negative_count, "line " + std::to_string(line.number) + ": entity '" +
                                                  fields[0] + "' has negative count");
        }

        auto [it, inserted] = by_id.emplace(fields[0], profiles.size());
        if (inserted) {
            PublicationProfile profile;
            profile.entity_id = fields[0];
            profile.kind = kind;
            profiles.push_back(std::move(profile));
        } else if (profiles[it->second].kind != kind) {
            throw Error(errc::inconsistent_kind, "line " + std::to_string(line.number) +
                                                     ": entity '" + fields[0] +
                                                     "' already declared with a different kind");
        }
        profiles[it->second].counts[fields[2]] += count;
    }
    return profiles;
}

AssignmentTable parse_assignments_csv(std::string_view text) {
    std::vector<Line> lines = significant_lines(text, false);
    if (lines.empty()) {
        throw Error(errc::bad_header, "assignments CSV is empty");
    }
    auto header = csv_fields(lines[0].text, lines[0].number);
    if (header != std::vector<std::string>{"group", "main_assessor"}) {
        throw Error(errc::bad_header, "expected header 'group,main_assessor'");
    }

    AssignmentTable table;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        auto fields = csv_fields(line.text, line.number);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw Error(errc::unparsable_row,
                        "line " + std::to_string(line.number) + ": expected 2 nonempty fields");
        }
        if (!seen.emplace(fields[0], fields[1]).second) {
            throw Error(errc::duplicate_pair, "line " + std::to_string(line.number) + ": pair (" +
                                                  fields[0] + ", " + fields[1] + ") repeated");
        }
        table.rows.push_back({fields[0], fields[1]});
    }
    return table;
}

}  // namespace cogdist
