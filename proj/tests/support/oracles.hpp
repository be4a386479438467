#pragma once

// Test-only reference computations. Nothing here calls the eigensolver or the
// integrators under test.

#include "occwalk/graph.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace occwalk::testing {

/// exp(m) by scaling and squaring with a truncated Taylor series.
template <typename Matrix>
Matrix taylor_exp(const Matrix& m, int terms = 30) {
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
    const Matrix a = m / std::pow(2.0, squarings);
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix term = Matrix::Identity(m.rows(), m.cols());
    for (int k = 1; k <= terms; ++k) {
        term = term * a / static_cast<double>(k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

/// Connected random graph: a random recursive tree plus Bernoulli(p) extra edges.
inline Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed, const std::string& prefix = "v") {
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_node(prefix + std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) {
        const auto parent = static_cast<std::size_t>(unit() * static_cast<double>(i));
        b.add_edge(prefix + std::to_string(parent), prefix + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string a = prefix + std::to_string(i);
            const std::string c = prefix + std::to_string(j);
            if (!b.contains_edge(a, c) && unit() < p) b.add_edge(a, c);
        }
    }
    return std::move(b).build();
}

inline Graph path_graph(std::size_t n) {
    GraphBuilder b;
    for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(std::string(1, char('a' + i)), std::string(1, char('a' + i + 1)));
    return std::move(b).build();
}

inline Graph complete_graph(std::size_t n) {
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_node("k" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.add_edge("k" + std::to_string(i), "k" + std::to_string(j));
    return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_edge("c" + std::to_string(i), "c" + std::to_string((i + 1) % n));
    return std::move(b).build();
}

/// Center "hub" first, then leaves l1..l<leaves>.
inline Graph star_graph(std::size_t leaves) {
    GraphBuilder b;
    for (std::size_t i = 1; i <= leaves; ++i) b.add_edge("hub", "l" + std::to_string(i));
    return std::move(b).build();
}

/// Same graph with node order permuted: new position i holds old node perm[i].
inline Graph permuted(const Graph& g, const std::vector<std::size_t>& perm) {
    GraphBuilder b;
    for (std::size_t i : perm) b.add_node(g.label(i));
    for (const auto& e : g.edges()) b.add_edge(g.label(e.u), g.label(e.v), e.weight);
    return std::move(b).build();
}

/// Long-time mean by brute-force time averaging of the exact propagator on a
/// uniform grid; exp(-iH dt) comes from the Taylor oracle.
inline Eigen::VectorXd time_average_oracle(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, double dt,
                                           std::size_t steps) {
    const Eigen::MatrixXcd step = taylor_exp(Eigen::MatrixXcd(std::complex<double>(0, -dt) * h.cast<std::complex<double>>()));
    Eigen::VectorXcd psi = psi0;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(h.rows());
    for (std::size_t k = 0; k < steps; ++k) {
        acc += psi.cwiseAbs2();
        psi = step * psi;
    }
    return acc / static_cast<double>(steps);
}

}  // namespace occwalk::testing
