#pragma once

#include "occwalk/analysis.hpp"
#include "occwalk/graph.hpp"
#include "occwalk/occupation.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace occwalk {

// Edge-list CSV:   source,target[,weight]
// Multilayer CSV:  layer,source,target[,weight]
// The header row is optional, '#' starts a comment line, blank lines are
// skipped, fields are trimmed, LF and CRLF are both accepted.

enum class InputKind { EdgeList, Multilayer };

InputKind parse_input_kind(std::string_view text);
const char* to_string(InputKind kind) noexcept;

/// Throws ParseError (with line number), DuplicateEdge or SelfLoop.
Graph parse_edge_list(std::string_view text);
MultilayerNetwork parse_multilayer(std::string_view text);

/// Weight column is written only for weighted graphs. Numbers use the shortest
/// representation that round-trips.
std::string write_edge_list(const Graph& g);
std::string write_multilayer(const MultilayerNetwork& m);

struct LayerSummary {
    std::string name;
    std::size_t nodes;
    std::size_t edges;
};

/// Counts and checksum of one parsed input file.
struct DatasetManifest {
    std::string path;
    InputKind kind = InputKind::EdgeList;
    std::string sha256;
    std::size_t nodes = 0;  ///< actor count for multilayer input
    std::size_t edges = 0;  ///< intralayer edge count for multilayer input
    std::vector<LayerSummary> layers;

    std::string to_json() const;
};

struct Ingested {
    std::variant<Graph, MultilayerNetwork> network;
    DatasetManifest manifest;
};

/// Reads and parses a file. Throws IoError plus the parse errors above.
Ingested ingest(const std::filesystem::path& path, InputKind kind);
DatasetManifest validate(const std::filesystem::path& path, InputKind kind);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string sha256_hex(std::string_view data);

/// Shortest round-trip decimal form.
std::string format_number(double value);

enum class SortOrder { NodeOrder, Descending };

/// `node,<column>` rows.
std::string occupation_csv(const OccupationVector& occ, std::string_view column, SortOrder order);
/// `{"node": value, ...}`.
std::string occupation_json(const OccupationVector& occ, SortOrder order);
/// Reads a two-column `node,value` table (any header names).
OccupationVector parse_occupation_csv(std::string_view text, OccupationKind kind);

/// `node,degree,op_c,op_q`.
std::string report_csv(const FullReport& report);
/// `rank,node,value`.
std::string ranking_csv(const Ranking& ranking);
/// `node,degree,<op_c|op_q>`.
std::string scatter_csv(const ScatterSeries& series, const std::vector<std::string>& labels);

}  // namespace occwalk
