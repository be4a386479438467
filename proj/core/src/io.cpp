#include "occwalk/io.hpp"

#include "occwalk/error.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace occwalk {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct Row {
    std::size_t line;
    std::vector<std::string_view> fields;
};

// Splits CSV text into trimmed rows, dropping comments, blank lines and a
// leading header that matches `header` (with or without the weight column).
std::vector<Row> tokenize(std::string_view text, const std::vector<std::string>& header) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::vector<Row> rows;
    std::size_t line_no = 0;
    bool first_data = true;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        Row row{line_no, {}};
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            row.fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (first_data) {
            first_data = false;
            bool is_header = row.fields.size() == header.size() || row.fields.size() == header.size() - 1;
            for (std::size_t i = 0; is_header && i < row.fields.size(); ++i) {
                is_header = lower(row.fields[i]) == header[i];
            }
            if (is_header) continue;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& reason) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason);
}

double parse_weight(const Row& row, std::string_view field) {
    double w = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, w);
    if (ec != std::errc{} || ptr != end) parse_fail(row.line, "weight '" + std::string(field) + "' is not a number");
    if (!(w > 0.0) || !std::isfinite(w)) {
        parse_fail(row.line, "weight " + std::string(field) + " must be positive and finite");
    }
    return w;
}

void add_row_edge(GraphBuilder& b, const Row& row, std::string_view source, std::string_view target,
                  std::optional<std::string_view> weight) {
    if (source.empty() || target.empty()) parse_fail(row.line, "empty node label");
    const double w = weight ? parse_weight(row, *weight) : 1.0;
    try {
        b.add_edge(source, target, w);
    } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(row.line) + ": " + e.what());
    }
}

void check_width(const Row& row, std::size_t lo, std::size_t hi) {
    if (row.fields.size() < lo || row.fields.size() > hi) {
        parse_fail(row.line, "expected " + std::to_string(lo) + " or " + std::to_string(hi) + " fields, found " +
                                 std::to_string(row.fields.size()));
    }
}

template <typename Sink>
void write_edges(const Graph& g, bool weighted, Sink&& prefix, std::string& out) {
    for (const auto& e : g.edges()) {
        prefix(out);
        out += g.label(e.u);
        out += ',';
        out += g.label(e.v);
        if (weighted) {
            out += ',';
            out += format_number(e.weight);
        }
        out += '\n';
    }
}

std::vector<std::size_t> sorted_indices(const OccupationVector& occ, SortOrder order) {
    if (order == SortOrder::Descending) return ranking_order(occ.values, *occ.labels);
    std::vector<std::size_t> idx(occ.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

}  // namespace

InputKind parse_input_kind(std::string_view text) {
    if (text == "edge-list" || text == "edgelist") return InputKind::EdgeList;
    if (text == "multilayer") return InputKind::Multilayer;
    throw Error(ErrorCode::InvalidConfig, "unknown input kind '" + std::string(text) + "'");
}

const char* to_string(InputKind kind) noexcept { return kind == InputKind::EdgeList ? "edge-list" : "multilayer"; }

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

Graph parse_edge_list(std::string_view text) {
    GraphBuilder b;
    for (const auto& row : tokenize(text, {"source", "target", "weight"})) {
        check_width(row, 2, 3);
        add_row_edge(b, row, row.fields[0], row.fields[1],
                     row.fields.size() == 3 ? std::optional(row.fields[2]) : std::nullopt);
    }
    return std::move(b).build();
}

MultilayerNetwork parse_multilayer(std::string_view text) {
    std::vector<std::string> names;
    std::map<std::string, GraphBuilder, std::less<>> builders;
    for (const auto& row : tokenize(text, {"layer", "source", "target", "weight"})) {
        check_width(row, 3, 4);
        if (row.fields[0].empty()) parse_fail(row.line, "empty layer name");
        auto it = builders.find(row.fields[0]);
        if (it == builders.end()) {
            names.emplace_back(row.fields[0]);
            it = builders.emplace(names.back(), GraphBuilder{}).first;
        }
        add_row_edge(it->second, row, row.fields[1], row.fields[2],
                     row.fields.size() == 4 ? std::optional(row.fields[3]) : std::nullopt);
    }
    std::vector<Layer> layers;
    for (const auto& name : names) layers.push_back({name, std::move(builders.at(name)).build()});
    return MultilayerNetwork(std::move(layers));
}

std::string write_edge_list(const Graph& g) {
    const bool weighted = g.is_weighted();
    std::string out = weighted ? "source,target,weight\n" : "source,target\n";
    write_edges(g, weighted, [](std::string&) {}, out);
    return out;
}

std::string write_multilayer(const MultilayerNetwork& m) {
    const bool weighted = std::any_of(m.layers().begin(), m.layers().end(),
                                      [](const Layer& l) { return l.graph.is_weighted(); });
    std::string out = weighted ? "layer,source,target,weight\n" : "layer,source,target\n";
    for (const auto& layer : m.layers()) {
        write_edges(layer.graph, weighted, [&](std::string& s) { s += layer.name + ','; }, out);
    }
    return out;
}

std::string DatasetManifest::to_json() const {
    ordered_json j;
    j["path"] = path;
    j["kind"] = occwalk::to_string(kind);
    j["sha256"] = sha256;
    j["nodes"] = nodes;
    j["edges"] = edges;
    ordered_json ls = ordered_json::array();
    for (const auto& l : layers) ls.push_back({{"name", l.name}, {"nodes", l.nodes}, {"edges", l.edges}});
    j["layers"] = ls;
    return j.dump(2);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out.flush()) throw Error(ErrorCode::IoError, "write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot rename to '" + path.string() + "': " + ec.message());
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::IoError, "SHA-256 computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xF];
    }
    return out;
}

Ingested ingest(const std::filesystem::path& path, InputKind kind) {
    const std::string text = read_file(path);
    DatasetManifest manifest;
    manifest.path = path.string();
    manifest.kind = kind;
    manifest.sha256 = sha256_hex(text);
    if (kind == InputKind::EdgeList) {
        Graph g = parse_edge_list(text);
        manifest.nodes = g.node_count();
        manifest.edges = g.edge_count();
        return {std::move(g), std::move(manifest)};
    }
    MultilayerNetwork m = parse_multilayer(text);
    manifest.nodes = m.actors().size();
    manifest.edges = m.intralayer_edge_count();
    for (const auto& l : m.layers()) manifest.layers.push_back({l.name, l.graph.node_count(), l.graph.edge_count()});
    return {std::move(m), std::move(manifest)};
}

DatasetManifest validate(const std::filesystem::path& path, InputKind kind) { return ingest(path, kind).manifest; }

std::string occupation_csv(const OccupationVector& occ, std::string_view column, SortOrder order) {
    std::string out = "node,";
    out += column;
    out += '\n';
    for (std::size_t i : sorted_indices(occ, order)) {
        out += occ.label(i) + ',' + format_number(occ.values(static_cast<Eigen::Index>(i))) + '\n';
    }
    return out;
}

std::string occupation_json(const OccupationVector& occ, SortOrder order) {
    ordered_json j = ordered_json::object();
    for (std::size_t i : sorted_indices(occ, order)) j[occ.label(i)] = occ.values(static_cast<Eigen::Index>(i));
    return j.dump(2);
}

OccupationVector parse_occupation_csv(std::string_view text, OccupationKind kind) {
    std::vector<std::string> labels;
    std::vector<double> values;
    bool first = true;
    for (const auto& row : tokenize(text, {"node", "value", ""})) {
        check_width(row, 2, 2);
        double v = 0.0;
        const auto field = row.fields[1];
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            // Any non-numeric first row is a header.
            if (first) {
                first = false;
                continue;
            }
            parse_fail(row.line, "value '" + std::string(field) + "' is not a number");
        }
        first = false;
        labels.emplace_back(row.fields[0]);
        values.push_back(v);
    }
    OccupationVector occ{kind, Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())),
                         std::make_shared<const std::vector<std::string>>(std::move(labels))};
    return occ;
}

std::string report_csv(const FullReport& report) {
    std::string out = "node,degree,op_c,op_q\n";
    for (const auto& r : report.rows) {
        out += r.node + ',' + format_number(r.degree) + ',' + format_number(r.op_c) + ',' + format_number(r.op_q) + '\n';
    }
    return out;
}

std::string ranking_csv(const Ranking& ranking) {
    std::string out = "rank,node,value\n";
    for (const auto& e : ranking.entries) {
        out += std::to_string(e.rank) + ',' + e.label + ',' + format_number(e.value) + '\n';
    }
    return out;
}

std::string scatter_csv(const ScatterSeries& series, const std::vector<std::string>& labels) {
    std::string out = series.kind == OccupationKind::Classical ? "node,degree,op_c\n" : "node,degree,op_q\n";
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        out += labels.at(i) + ',' + format_number(series.points[i].degree) + ',' +
               format_number(series.points[i].occupation) + '\n';
    }
    return out;
}

}  // namespace occwalk
