#include "occwalk/graph.hpp"

#include "occwalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace occwalk {

std::uint64_t Graph::pair_key(std::size_t u, std::size_t v) noexcept {
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    return (hi << 32) | lo;
}

std::optional<std::size_t> Graph::find(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Graph::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorCode::UnknownNode, "no node labeled '" + std::string(label) + "'");
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return pairs_.contains(pair_key(u, v));
}

bool Graph::is_weighted() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight != 1.0; });
}

Graph Graph::binarized() const {
    Graph out = *this;
    for (auto& e : out.edges_) e.weight = 1.0;
    return out;
}

Graph Graph::induced(std::span<const std::size_t> nodes) const {
    GraphBuilder b;
    std::vector<std::ptrdiff_t> remap(node_count(), -1);
    for (std::size_t i : nodes) {
        remap.at(i) = static_cast<std::ptrdiff_t>(b.add_node(labels_[i]));
    }
    for (const auto& e : edges_) {
        if (remap[e.u] >= 0 && remap[e.v] >= 0) b.add_edge(labels_[e.u], labels_[e.v], e.weight);
    }
    return std::move(b).build();
}

Graph Graph::without_isolated() const {
    std::vector<bool> touched(node_count(), false);
    for (const auto& e : edges_) touched[e.u] = touched[e.v] = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < node_count(); ++i) {
        if (touched[i]) keep.push_back(i);
    }
    return induced(keep);
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
    }
    return true;
}

std::size_t GraphBuilder::add_node(std::string_view label) {
    if (label.empty()) throw Error(ErrorCode::InvalidConfig, "empty node label");
    auto [it, inserted] = graph_.index_.try_emplace(std::string(label), graph_.labels_.size());
    if (inserted) graph_.labels_.emplace_back(label);
    return it->second;
}

void GraphBuilder::add_edge(std::string_view source, std::string_view target, double weight) {
    if (source == target) {
        throw Error(ErrorCode::SelfLoop, "self-loop on '" + std::string(source) + "'");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw Error(ErrorCode::NonPositiveWeight, "edge " + std::string(source) + "-" +
                                                      std::string(target) + " has weight " +
                                                      std::to_string(weight));
    }
    const std::size_t u = add_node(source);
    const std::size_t v = add_node(target);
    if (!graph_.pairs_.insert(Graph::pair_key(u, v)).second) {
        throw Error(ErrorCode::DuplicateEdge, "edge " + std::string(source) + "-" +
                                                  std::string(target) + " appears more than once");
    }
    graph_.edges_.push_back({u, v, weight});
}

bool GraphBuilder::contains_edge(std::string_view source, std::string_view target) const {
    const auto u = graph_.find(source);
    const auto v = graph_.find(target);
    return u && v && graph_.has_edge(*u, *v);
}

Graph GraphBuilder::build() && { return std::move(graph_); }
Graph GraphBuilder::build() const& { return graph_; }

Graph build_graph(std::span<const EdgeRecord> edges) {
    GraphBuilder b;
    for (const auto& r : edges) b.add_edge(r.source, r.target, r.weight.value_or(1.0));
    return std::move(b).build();
}

DenseMatrix adjacency_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    DenseMatrix a = DenseMatrix::Zero(n, n);
    for (const auto& e : g.edges()) {
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        a(u, v) = e.weight;
        a(v, u) = e.weight;
    }
    return a;
}

DegreeVector degree_vector(const Graph& g) {
    DegreeVector k = DegreeVector::Zero(static_cast<Eigen::Index>(g.node_count()));
    for (const auto& e : g.edges()) {
        k(static_cast<Eigen::Index>(e.u)) += e.weight;
        k(static_cast<Eigen::Index>(e.v)) += e.weight;
    }
    return k;
}

void require_no_isolated(const Graph& g) {
    const DegreeVector k = degree_vector(g);
    for (Eigen::Index i = 0; i < k.size(); ++i) {
        if (k(i) == 0.0) {
            throw Error(ErrorCode::IsolatedNode,
                        "node '" + g.label(static_cast<std::size_t>(i)) + "' has no incident edge");
        }
    }
}

DenseMatrix transition_matrix(const Graph& g) {
    require_no_isolated(g);
    const DegreeVector k = degree_vector(g);
    return adjacency_matrix(g) * k.cwiseInverse().asDiagonal();
}

DenseMatrix laplacian(const Graph& g) {
    DenseMatrix l = -adjacency_matrix(g);
    l.diagonal() = degree_vector(g);
    return l;
}

DenseMatrix normalized_laplacian(const Graph& g) {
    require_no_isolated(g);
    const Vector s = degree_vector(g).cwiseSqrt().cwiseInverse();
    DenseMatrix nl = s.asDiagonal() * laplacian(g) * s.asDiagonal();
    // Exact unit diagonal and exact symmetry regardless of rounding in the scaling.
    nl.diagonal().setOnes();
    for (Eigen::Index i = 0; i < nl.rows(); ++i) {
        for (Eigen::Index j = 0; j < i; ++j) nl(j, i) = nl(i, j);
    }
    return nl;
}

std::vector<std::vector<std::string>> connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        const auto a = root(e.u);
        const auto b = root(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::size_t> slot;
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = root(i);
        auto [it, fresh] = slot.try_emplace(r, out.size());
        if (fresh) out.emplace_back();
        out[it->second].push_back(g.label(i));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

MultilayerNetwork::MultilayerNetwork(std::vector<Layer> layers) : layers_(std::move(layers)) {
    std::unordered_set<std::string> names;
    std::unordered_set<std::string> seen;
    for (const auto& layer : layers_) {
        if (!names.insert(layer.name).second) {
            throw Error(ErrorCode::InvalidConfig, "duplicate layer name '" + layer.name + "'");
        }
        for (const auto& label : layer.graph.labels()) {
            if (seen.insert(label).second) actors_.push_back(label);
        }
    }
}

std::size_t MultilayerNetwork::intralayer_edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& layer : layers_) total += layer.graph.edge_count();
    return total;
}

Graph flatten(const MultilayerNetwork& m, AggregateMode mode) {
    GraphBuilder nodes;
    for (const auto& actor : m.actors()) nodes.add_node(actor);
    const Graph actors = nodes.build();

    std::vector<std::pair<std::uint64_t, double>> order;
    std::unordered_map<std::uint64_t, std::size_t> slot;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& layer : m.layers()) {
        const Graph& lg = layer.graph;
        for (const auto& e : lg.edges()) {
            const std::size_t u = actors.index_of(lg.label(e.u));
            const std::size_t v = actors.index_of(lg.label(e.v));
            const std::uint64_t key = (static_cast<std::uint64_t>(std::max(u, v)) << 32) | std::min(u, v);
            auto [it, fresh] = slot.try_emplace(key, order.size());
            if (fresh) {
                order.emplace_back(key, mode == AggregateMode::Binary ? 1.0 : e.weight);
                ends.emplace_back(u, v);
            } else if (mode == AggregateMode::Sum) {
                order[it->second].second += e.weight;
            }
        }
    }

    GraphBuilder out;
    for (const auto& actor : m.actors()) out.add_node(actor);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.add_edge(actors.label(ends[i].first), actors.label(ends[i].second), order[i].second);
    }
    return std::move(out).build();
}

}  // namespace occwalk
