#include "occwalk/error.hpp"
#include "occwalk/generators.hpp"
#include "occwalk/io.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace occwalk;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_error_code(auto&& fn, std::string* message = nullptr) {
    try {
        fn();
    } catch (const Error& e) {
        if (message) *message = e.what();
        return e.code();
    }
    FAIL("expected an occwalk::Error");
    return ErrorCode::IoError;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "occwalk_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("edge-list parsing") {
    SUBCASE("headerless two-line file") {
        const Graph g = parse_edge_list("a,b\nb,c\n");
        CHECK(g.node_count() == 3);
        CHECK(g.edge_count() == 2);
    }
    SUBCASE("header, comments, whitespace and CRLF") {
        const Graph g = parse_edge_list("\xEF\xBB\xBFsource,target,weight\r\n# comment\r\n\r\n  x , y , 2.5\r\ny,z\r\n");
        CHECK(g.labels() == std::vector<std::string>{"x", "y", "z"});
        CHECK(g.edges()[0].weight == 2.5);
        CHECK(g.edges()[1].weight == 1.0);
    }
    SUBCASE("errors carry line numbers") {
        std::string msg;
        CHECK(parse_error_code([] { parse_edge_list("a,b\nb,c,-1\n"); }, &msg) == ErrorCode::ParseError);
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(parse_error_code([] { parse_edge_list("a,b,abc\n"); }) == ErrorCode::ParseError);
        CHECK(parse_error_code([] { parse_edge_list("a\n"); }) == ErrorCode::ParseError);
        CHECK(parse_error_code([] { parse_edge_list("a,b,1,2\n"); }) == ErrorCode::ParseError);
        CHECK(parse_error_code([] { parse_edge_list("a,\n"); }) == ErrorCode::ParseError);
        CHECK(parse_error_code([] { parse_edge_list("a,b\n# c\nb,a\n"); }, &msg) == ErrorCode::DuplicateEdge);
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(parse_error_code([] { parse_edge_list("a,a\n"); }) == ErrorCode::SelfLoop);
    }
}

TEST_CASE("multilayer parsing") {
    const MultilayerNetwork m = parse_multilayer(
        "layer,source,target\n"
        "meet,a,b\n"
        "call,b,c\n"
        "meet,b,c\n"
        "crime,a,d\n");
    REQUIRE(m.layers().size() == 3);
    CHECK(m.layers()[0].name == "meet");
    CHECK(m.layers()[0].graph.edge_count() == 2);
    CHECK(m.layers()[2].name == "crime");
    CHECK(m.actors() == std::vector<std::string>{"a", "b", "c", "d"});
    std::string msg;
    CHECK(parse_error_code([] { parse_multilayer("x,a,b,-2\n"); }, &msg) == ErrorCode::ParseError);
    CHECK(msg.find("line 1") != std::string::npos);
    CHECK(parse_error_code([] { parse_multilayer("x,a,b\nx,b,a\n"); }) == ErrorCode::DuplicateEdge);
    // The same pair in two layers is fine.
    CHECK(parse_multilayer("x,a,b\ny,b,a\n").intralayer_edge_count() == 2);
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GraphBuilder b;
        const Graph base = occwalk::testing::random_connected_graph(15 + seed, 0.2, seed);
        for (const auto& e : base.edges()) {
            const double w = seed % 2 == 0 ? 1.0 : 0.001 + static_cast<double>(rng() >> 11) * 0x1.0p-53 * 10.0;
            b.add_edge(base.label(e.u), base.label(e.v), w);
        }
        const Graph g = b.build();
        CHECK(parse_edge_list(write_edge_list(g)) == g);
    }
    const auto m = synthetic_multilayer({{{30, 2, 0}, {20, 1, 0}}, SyntheticMultilayerConfig::Overlap::shared_prefix(10), 4});
    const MultilayerNetwork back = parse_multilayer(write_multilayer(m));
    REQUIRE(back.layers().size() == 2);
    for (std::size_t l = 0; l < 2; ++l) {
        CHECK(back.layers()[l].name == m.layers()[l].name);
        CHECK(back.layers()[l].graph.edge_count() == m.layers()[l].graph.edge_count());
        CHECK(write_edge_list(back.layers()[l].graph) == write_edge_list(m.layers()[l].graph));
    }
}

TEST_CASE("ingest and validate") {
    const fs::path el = scratch("two.csv");
    write_file_atomic(el, "a,b\nb,c\n");
    const Ingested in = ingest(el, InputKind::EdgeList);
    CHECK(in.manifest.nodes == 3);
    CHECK(in.manifest.edges == 2);
    CHECK(in.manifest.sha256 == sha256_hex("a,b\nb,c\n"));
    CHECK(std::get<Graph>(in.network).edge_count() == 2);

    const fs::path ml = scratch("ml.csv");
    write_file_atomic(ml, "layer,source,target\nL1,a,b\nL2,b,c\nL3,c,d\nL3,a,d\n");
    const DatasetManifest man = validate(ml, InputKind::Multilayer);
    REQUIRE(man.layers.size() == 3);
    CHECK(man.layers[2].name == "L3");
    CHECK(man.layers[2].edges == 2);
    CHECK(man.nodes == 4);
    CHECK(man.edges == 4);
    CHECK(man.to_json().find("\"L2\"") != std::string::npos);

    const fs::path neg = scratch("neg.csv");
    write_file_atomic(neg, "layer,source,target,weight\nL1,a,b,1\nL1,b,c,-3\n");
    std::string msg;
    CHECK(parse_error_code([&] { validate(neg, InputKind::Multilayer); }, &msg) == ErrorCode::ParseError);
    CHECK(msg.find("line 3") != std::string::npos);

    CHECK(parse_error_code([] { ingest("/nonexistent/nowhere.csv", InputKind::EdgeList); }) == ErrorCode::IoError);
}

TEST_CASE("sha256 matches a known digest") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("occupation tables") {
    const OccupationVector occ{OccupationKind::Classical, (Vector(3) << 0.25, 0.5, 0.25).finished(),
                               std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"b", "a", "c"})};
    CHECK(occupation_csv(occ, "op_c", SortOrder::NodeOrder) == "node,op_c\nb,0.25\na,0.5\nc,0.25\n");
    CHECK(occupation_csv(occ, "op_c", SortOrder::Descending) == "node,op_c\na,0.5\nb,0.25\nc,0.25\n");
    CHECK(occupation_json(occ, SortOrder::Descending) == "{\n  \"a\": 0.5,\n  \"b\": 0.25,\n  \"c\": 0.25\n}");

    const OccupationVector back = parse_occupation_csv(occupation_csv(occ, "op_c", SortOrder::NodeOrder), OccupationKind::Classical);
    CHECK(back.values == occ.values);
    CHECK(*back.labels == *occ.labels);
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
}
