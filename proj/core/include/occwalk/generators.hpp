#pragma once

#include "occwalk/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace occwalk {

/// Barabasi-Albert growth parameters: n nodes, m edges per arriving node.
struct BAConfig {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;

    /// Throws InvalidConfig unless 1 <= m < n.
    void validate() const;
    std::size_t expected_edges() const noexcept { return (n - m) * m; }
};

/// Preferential attachment starting from m isolated nodes. Arriving node j
/// links to m distinct existing nodes drawn by degree without replacement
/// (uniformly when every remaining candidate has degree 0). Yields exactly
/// (n - m) * m edges. Labels are "0".."n-1" unless a prefix is given.
Graph barabasi_albert(const BAConfig& cfg);

/// Same process, with a labelling hook: node i gets label(i).
Graph barabasi_albert(const BAConfig& cfg, const std::vector<std::string>& labels);

class MultilayerNetwork;

struct SyntheticMultilayerConfig {
    struct Overlap {
        enum class Kind { Disjoint, SharedPrefix };
        Kind kind = Kind::Disjoint;
        std::size_t count = 0;  ///< shared labels for SharedPrefix

        static Overlap disjoint() { return {}; }
        static Overlap shared_prefix(std::size_t c) { return {Kind::SharedPrefix, c}; }
    };

    std::vector<BAConfig> layers;  ///< per-layer seeds are ignored; sub-seeds come from `seed`
    Overlap overlap;
    std::uint64_t seed = 0;

    void validate() const;
};

/// SplitMix64 finalizer; sub-seed of layer l is mix_seed(seed + l).
std::uint64_t mix_seed(std::uint64_t x) noexcept;

/// One BA layer per config entry, named "layer1".."layerN". Disjoint mode labels node
/// i of layer l as "L<l>_<i>"; shared_prefix(c) labels nodes i < c as "<i>" in
/// every layer.
MultilayerNetwork synthetic_multilayer(const SyntheticMultilayerConfig& cfg);

}  // namespace occwalk
