#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace occwalk {

using DenseMatrix = Eigen::MatrixXd;
using ComplexDenseMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Weighted degree (strength) per node: s_i = sum_j w_ij. Equals the integer
/// degree for unweighted graphs.
using DegreeVector = Eigen::VectorXd;

/// One row of an edge list before validation.
struct EdgeRecord {
    std::string source;
    std::string target;
    std::optional<double> weight;
};

/// Validated undirected edge between dense node indices.
struct Edge {
    std::size_t u;
    std::size_t v;
    double weight;
};

class GraphBuilder;

/// Undirected, labeled, positively weighted simple graph.
///
/// Nodes are indexed in first-appearance order; that order fixes every matrix
/// layout and the tie-break of rankings. Instances are immutable once built.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws UnknownNode.
    std::size_t index_of(std::string_view label) const;

    bool has_edge(std::size_t u, std::size_t v) const;
    /// True when any edge weight differs from 1.
    bool is_weighted() const noexcept;

    /// Same topology with all weights set to 1.
    Graph binarized() const;
    /// Subgraph induced by the given node indices, kept in the given order.
    Graph induced(std::span<const std::size_t> nodes) const;
    /// Removes nodes with no incident edge.
    Graph without_isolated() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend class GraphBuilder;

    static std::uint64_t pair_key(std::size_t u, std::size_t v) noexcept;

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
    std::unordered_set<std::uint64_t> pairs_;
};

/// Incremental construction with invariant checks at every insertion.
class GraphBuilder {
public:
    /// Returns the node index; existing labels are reused.
    std::size_t add_node(std::string_view label);
    /// Throws SelfLoop, DuplicateEdge or NonPositiveWeight.
    void add_edge(std::string_view source, std::string_view target, double weight = 1.0);
    bool contains_edge(std::string_view source, std::string_view target) const;

    Graph build() &&;
    Graph build() const&;

private:
    Graph graph_;
};

/// Builds a graph from an edge list; node order is first appearance.
Graph build_graph(std::span<const EdgeRecord> edges);

DenseMatrix adjacency_matrix(const Graph& g);
DegreeVector degree_vector(const Graph& g);
/// Column-stochastic M_ij = A_ij / k_j. Throws IsolatedNode.
DenseMatrix transition_matrix(const Graph& g);
/// L = D - A.
DenseMatrix laplacian(const Graph& g);
/// D^{-1/2} L D^{-1/2}. Throws IsolatedNode.
DenseMatrix normalized_laplacian(const Graph& g);

/// Connected components as label lists. Components are ordered by their first
/// node and labels inside a component keep node order.
std::vector<std::vector<std::string>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Throws IsolatedNode naming the first node with zero degree.
void require_no_isolated(const Graph& g);

struct Layer {
    std::string name;
    Graph graph;
};

/// Named layers over a shared actor universe.
class MultilayerNetwork {
public:
    MultilayerNetwork() = default;
    /// Throws InvalidConfig on duplicate layer names.
    explicit MultilayerNetwork(std::vector<Layer> layers);

    const std::vector<Layer>& layers() const noexcept { return layers_; }
    /// Union of layer labels in first-appearance order across layers.
    const std::vector<std::string>& actors() const noexcept { return actors_; }
    std::size_t intralayer_edge_count() const noexcept;

private:
    std::vector<Layer> layers_;
    std::vector<std::string> actors_;
};

enum class AggregateMode { Binary, Sum };

/// Merges all layers into one graph: an edge exists when any layer links the
/// pair. Binary mode assigns weight 1, sum mode adds the layer weights.
Graph flatten(const MultilayerNetwork& m, AggregateMode mode = AggregateMode::Binary);

}  // namespace occwalk
