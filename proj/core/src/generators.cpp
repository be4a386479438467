#include "occwalk/generators.hpp"

#include "occwalk/error.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace occwalk {

namespace {

// 53 random bits mapped to [0, 1). mt19937_64 output is fixed by the standard,
// std distributions are not, so the mapping is done here.
double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void BAConfig::validate() const {
    if (m < 1 || m >= n) {
        throw Error(ErrorCode::InvalidConfig, "BA needs 1 <= m < n, got n=" + std::to_string(n) +
                                                  " m=" + std::to_string(m));
    }
}

std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Graph barabasi_albert(const BAConfig& cfg) {
    cfg.validate();
    std::vector<std::string> labels(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) labels[i] = std::to_string(i);
    return barabasi_albert(cfg, labels);
}

Graph barabasi_albert(const BAConfig& cfg, const std::vector<std::string>& labels) {
    cfg.validate();
    if (labels.size() != cfg.n) {
        throw Error(ErrorCode::InvalidConfig, "label count does not match n");
    }
    std::mt19937_64 rng(cfg.seed);
    GraphBuilder b;
    for (const auto& l : labels) b.add_node(l);

    std::vector<double> degree(cfg.n, 0.0);
    std::vector<std::size_t> targets;
    std::vector<bool> taken(cfg.n, false);
    for (std::size_t node = cfg.m; node < cfg.n; ++node) {
        targets.clear();
        for (std::size_t draw = 0; draw < cfg.m; ++draw) {
            double total = 0.0;
            std::size_t remaining = 0;
            for (std::size_t j = 0; j < node; ++j) {
                if (!taken[j]) {
                    total += degree[j];
                    ++remaining;
                }
            }
            const double u = unit_interval(rng);
            std::size_t pick = node;
            if (total > 0.0) {
                double threshold = u * total;
                for (std::size_t j = 0; j < node; ++j) {
                    if (taken[j] || degree[j] == 0.0) continue;
                    pick = j;
                    threshold -= degree[j];
                    if (threshold < 0.0) break;
                }
            } else {
                auto slot = std::min(static_cast<std::size_t>(u * static_cast<double>(remaining)), remaining - 1);
                for (std::size_t j = 0; j < node; ++j) {
                    if (taken[j]) continue;
                    if (slot-- == 0) {
                        pick = j;
                        break;
                    }
                }
            }
            taken[pick] = true;
            targets.push_back(pick);
        }
        for (std::size_t t : targets) {
            b.add_edge(labels[node], labels[t]);
            degree[t] += 1.0;
            taken[t] = false;
        }
        degree[node] += static_cast<double>(cfg.m);
    }
    return std::move(b).build();
}

void SyntheticMultilayerConfig::validate() const {
    if (layers.empty()) throw Error(ErrorCode::InvalidConfig, "no layer specs");
    std::size_t min_n = layers.front().n;
    for (const auto& l : layers) {
        l.validate();
        min_n = std::min(min_n, l.n);
    }
    if (overlap.kind == Overlap::Kind::SharedPrefix && overlap.count > min_n) {
        throw Error(ErrorCode::InvalidConfig, "shared prefix " + std::to_string(overlap.count) +
                                                  " exceeds the smallest layer (" + std::to_string(min_n) + ")");
    }
}

MultilayerNetwork synthetic_multilayer(const SyntheticMultilayerConfig& cfg) {
    cfg.validate();
    const std::size_t shared =
        cfg.overlap.kind == SyntheticMultilayerConfig::Overlap::Kind::SharedPrefix ? cfg.overlap.count : 0;
    std::vector<Layer> layers;
    for (std::size_t l = 0; l < cfg.layers.size(); ++l) {
        BAConfig layer_cfg = cfg.layers[l];
        layer_cfg.seed = mix_seed(cfg.seed + l);
        std::vector<std::string> labels(layer_cfg.n);
        for (std::size_t i = 0; i < layer_cfg.n; ++i) {
            labels[i] = i < shared ? std::to_string(i) : "L" + std::to_string(l + 1) + "_" + std::to_string(i);
        }
        layers.push_back({"layer" + std::to_string(l + 1), barabasi_albert(layer_cfg, labels)});
    }
    return MultilayerNetwork(std::move(layers));
}

}  // namespace occwalk
