#include "occwalk/error.hpp"
#include "occwalk/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace occwalk;

TEST_CASE("BA edge counts for the replicated layer configurations") {
    const std::vector<std::array<std::size_t, 3>> configs = {
        {101, 2, 198}, {101, 3, 294}, {100, 1, 99}, {100, 2, 196}, {25, 3, 66}, {25, 4, 84}};
    for (const auto& [n, m, edges] : configs) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Graph g = barabasi_albert({n, m, seed});
            CHECK(g.node_count() == n);
            CHECK(g.edge_count() == edges);
            CHECK(is_connected(g));
        }
    }
}

TEST_CASE("BA with m = 1 is a tree") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = barabasi_albert({100, 1, seed});
        CHECK(g.edge_count() == g.node_count() - 1);
        CHECK(is_connected(g));
    }
}

TEST_CASE("BA determinism") {
    const Graph a = barabasi_albert({101, 2, 1234});
    CHECK(a == barabasi_albert({101, 2, 1234}));
    int differing = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        differing += barabasi_albert({101, 2, 2 * s}) == barabasi_albert({101, 2, 2 * s + 1}) ? 0 : 1;
    }
    CHECK(differing == 100);
}

TEST_CASE("BA degree distribution is right-skewed") {
    int skewed = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Vector k = degree_vector(barabasi_albert({101, 2, seed}));
        skewed += k.maxCoeff() > 3.0 * k.mean() ? 1 : 0;
    }
    CHECK(skewed >= 90);
}

TEST_CASE("BA attachment is degree-proportional") {
    // n = 4, m = 1: node 2 joins 0 or 1 with probability 1/2 each; node 3 then
    // sees degrees (2,1,1) or (1,2,1), so P(3 -> 2) = 1/4 and P(3 -> 0) = 3/8.
    const int trials = 8000;
    int to_two = 0;
    int to_zero = 0;
    for (int s = 0; s < trials; ++s) {
        const Graph g = barabasi_albert({4, 1, static_cast<std::uint64_t>(s)});
        to_two += g.has_edge(3, 2) ? 1 : 0;
        to_zero += g.has_edge(3, 0) ? 1 : 0;
    }
    const double sigma_two = std::sqrt(0.25 * 0.75 / trials);
    const double sigma_zero = std::sqrt(0.375 * 0.625 / trials);
    CHECK(std::abs(to_two / double(trials) - 0.25) < 4 * sigma_two);
    CHECK(std::abs(to_zero / double(trials) - 0.375) < 4 * sigma_zero);
}

TEST_CASE("BA rejects invalid configs") {
    for (const BAConfig bad : {BAConfig{10, 0, 0}, BAConfig{5, 5, 0}, BAConfig{3, 7, 0}}) {
        try {
            barabasi_albert(bad);
            FAIL("expected InvalidConfig");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidConfig);
        }
    }
}

TEST_CASE("synthetic multilayer networks") {
    SUBCASE("disjoint layers, first configuration") {
        const auto m = synthetic_multilayer({{{101, 2, 0}, {100, 1, 0}, {25, 3, 0}}, {}, 7});
        REQUIRE(m.layers().size() == 3);
        CHECK(m.intralayer_edge_count() == 363);
        CHECK(m.actors().size() == 226);
        CHECK(m.layers()[0].name == "layer1");
        CHECK(connected_components(flatten(m)).size() == 3);
    }
    SUBCASE("disjoint layers, second configuration") {
        const auto m = synthetic_multilayer({{{101, 3, 0}, {100, 2, 0}, {25, 4, 0}}, {}, 7});
        CHECK(m.intralayer_edge_count() == 574);
    }
    SUBCASE("single layer flattens to the BA graph") {
        const auto m = synthetic_multilayer({{{40, 2, 0}}, {}, 99});
        const Graph ba = barabasi_albert({40, 2, mix_seed(99)}, m.layers()[0].graph.labels());
        CHECK(flatten(m) == ba);
    }
    SUBCASE("shared prefix") {
        const auto m = synthetic_multilayer(
            {{{101, 2, 0}, {100, 1, 0}, {25, 3, 0}}, SyntheticMultilayerConfig::Overlap::shared_prefix(25), 3});
        CHECK(m.actors().size() == 226 - 2 * 25);
        CHECK(is_connected(flatten(m)));
        CHECK_THROWS_AS(synthetic_multilayer({{{30, 2, 0}, {10, 1, 0}}, SyntheticMultilayerConfig::Overlap::shared_prefix(11), 3}),
                        Error);
    }
    SUBCASE("layers use independent sub-seeds") {
        const auto m = synthetic_multilayer({{{50, 2, 0}, {50, 2, 0}}, SyntheticMultilayerConfig::Overlap::shared_prefix(50), 1});
        CHECK_FALSE(m.layers()[0].graph == m.layers()[1].graph);
        CHECK(synthetic_multilayer({{{50, 2, 0}, {50, 2, 0}}, {}, 1}).layers()[1].graph.edges().size() == 96);
    }
}
