#include "occwalk/error.hpp"
#include "occwalk/io.hpp"
#include "occwalk/run.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>

using namespace occwalk;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "occwalk_run_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

double column_sum(const std::string& csv, std::size_t column) {
    double total = 0.0;
    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size()) {
        const auto end = csv.find('\n', pos);
        std::string line = csv.substr(pos, end - pos);
        for (std::size_t c = 0; c < column; ++c) line = line.substr(line.find(',') + 1);
        total += std::stod(line.substr(0, line.find(',')));
        pos = end + 1;
    }
    return total;
}

}  // namespace

TEST_CASE("generate then analyze a BA network") {
    const fs::path dir = fresh_dir("ba");
    const auto written = run_generate({{{101, 2, 0}}, {}, 17, dir / "ba.csv"});
    REQUIRE(written.size() == 2);
    const auto echo = nlohmann::json::parse(read_file(written[1]));
    CHECK(echo["seed"] == 17);
    CHECK(echo["layers"][0]["expected_edges"] == 198);
    CHECK(validate(dir / "ba.csv", InputKind::EdgeList).edges == 198);

    RunConfig cfg;
    cfg.inputs = {dir / "ba.csv"};
    cfg.output_dir = dir / "out";
    const RunResult res = run_analysis(cfg);
    REQUIRE(res.exit_code == 0);
    CHECK(res.files.size() == 10);
    const std::string report = read_file(dir / "out" / "report.csv");
    CHECK(report.starts_with("node,degree,op_c,op_q\n"));
    CHECK(std::abs(column_sum(report, 2) - 1.0) <= 1e-9);
    CHECK(std::abs(column_sum(report, 3) - 1.0) <= 1e-9);
    CHECK(read_file(dir / "out" / "ranking_op_q.csv").starts_with("rank,node,value\n1,"));

    const auto j = nlohmann::json::parse(read_file(dir / "out" / "report.json"));
    CHECK(j["version"] == version());
    CHECK(j["input"]["sha256"] == sha256_hex(read_file(dir / "ba.csv")));
    CHECK(j["config"]["leapfrog"]["dt"] == 0.01);
    CHECK(j["comparison"]["rank_correlation"] == "spearman");
    CHECK(j["top_op_c"].size() == 20);
}

TEST_CASE("identical config produces byte-identical outputs") {
    const fs::path dir = fresh_dir("determinism");
    run_generate({{{60, 2, 0}, {50, 1, 0}, {20, 3, 0}}, SyntheticMultilayerConfig::Overlap::shared_prefix(20), 5,
                  dir / "ml.csv"});
    RunConfig cfg;
    cfg.inputs = {dir / "ml.csv"};
    cfg.kind = InputKind::Multilayer;
    for (const char* out : {"one", "two"}) {
        cfg.output_dir = dir / out;
        REQUIRE(run_analysis(cfg).exit_code == 0);
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(dir / "one")) {
        const fs::path other = dir / "two" / entry.path().filename();
        std::string a = read_file(entry.path());
        std::string b = read_file(other);
        // The output directory itself is not part of the config echo.
        CHECK(a == b);
        ++compared;
    }
    CHECK(compared == 10);
}

TEST_CASE("disconnected input fails with an error record") {
    const fs::path dir = fresh_dir("disconnected");
    write_file_atomic(dir / "two.csv", "a,b\nc,d\n");
    RunConfig cfg;
    cfg.inputs = {dir / "two.csv"};
    cfg.output_dir = dir / "out";
    const RunResult res = run_analysis(cfg);
    CHECK(res.exit_code != 0);
    REQUIRE(res.error.has_value());
    CHECK(*res.error == ErrorCode::DisconnectedGraph);
    const auto err = nlohmann::json::parse(read_file(dir / "out" / "error.json"));
    CHECK(err["error"] == "DisconnectedGraph");

    cfg.per_component = true;
    cfg.output_dir = dir / "split";
    const RunResult split = run_analysis(cfg);
    REQUIRE(split.exit_code == 0);
    CHECK(fs::exists(dir / "split" / "component_01" / "report.csv"));
    CHECK(fs::exists(dir / "split" / "component_02" / "report.csv"));
}

TEST_CASE("isolated nodes and multiple inputs") {
    const fs::path dir = fresh_dir("multi");
    write_file_atomic(dir / "ml.csv", "layer,source,target\nx,a,b\nx,b,c\ny,c,a\n");
    write_file_atomic(dir / "path.csv", "a,b\nb,c\nc,d\n");
    RunConfig cfg;
    cfg.inputs = {dir / "path.csv", dir / "path.csv"};
    cfg.output_dir = dir / "out";
    CHECK(run_analysis(cfg).exit_code == 0);
    CHECK(fs::exists(dir / "out" / "path" / "report.json"));

    cfg.inputs = {dir / "ml.csv"};
    cfg.kind = InputKind::Multilayer;
    cfg.flatten_mode = AggregateMode::Sum;
    cfg.weighted = true;
    cfg.output_dir = dir / "weighted";
    REQUIRE(run_analysis(cfg).exit_code == 0);
    CHECK(read_file(dir / "weighted" / "op_c.csv") == "node,op_c\na,0.3333333333333333\nb,0.3333333333333333\nc,0.3333333333333333\n");

    cfg.inputs = {dir / "missing.csv"};
    const RunResult missing = run_analysis(cfg);
    CHECK(missing.exit_code != 0);
    CHECK(*missing.error == ErrorCode::IoError);
}

TEST_CASE("output directory resolution") {
    CHECK(resolve_output_dir(fs::path("flag")) == fs::path("flag"));
    setenv(kOutputDirEnv, "from-env", 1);
    CHECK(resolve_output_dir(std::nullopt) == fs::path("from-env"));
    unsetenv(kOutputDirEnv);
    CHECK(resolve_output_dir(std::nullopt) == fs::path("occwalk-out"));
}

TEST_CASE("flatten command") {
    const fs::path dir = fresh_dir("flatten");
    write_file_atomic(dir / "ml.csv", "layer,source,target,weight\nx,a,b,1\ny,b,a,2\ny,b,c,1\n");
    run_flatten(dir / "ml.csv", AggregateMode::Sum, dir / "flat.csv");
    CHECK(read_file(dir / "flat.csv") == "source,target,weight\na,b,3\nb,c,1\n");
    run_flatten(dir / "ml.csv", AggregateMode::Binary, dir / "flat_bin.csv");
    CHECK(read_file(dir / "flat_bin.csv") == "source,target\na,b\nb,c\n");
}

#ifdef OCCWALK_CLI_PATH
TEST_CASE("command-line tool") {
    const fs::path dir = fresh_dir("cli");
    const std::string cli = OCCWALK_CLI_PATH;
    auto run = [&](const std::string& args) {
        const std::string cmd = "\"" + cli + "\" " + args + " > \"" + (dir / "stdout.txt").string() + "\" 2> \"" +
                                (dir / "stderr.txt").string() + "\"";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    CHECK(run("generate --layer 101:2 --layer 100:1 --layer 25:3 --overlap shared:25 --seed 9 -o " + (dir / "ml.csv").string()) == 0);
    CHECK(run("validate --kind multilayer " + (dir / "ml.csv").string()) == 0);
    const auto manifest = nlohmann::json::parse(read_file(dir / "stdout.txt"));
    CHECK(manifest["edges"] == 363);
    CHECK(manifest["layers"].size() == 3);

    CHECK(run("flatten " + (dir / "ml.csv").string() + " -o " + (dir / "flat.csv").string()) == 0);
    CHECK(run("analyze " + (dir / "flat.csv").string() + " -o " + (dir / "out").string()) == 0);
    CHECK(run("compare " + (dir / "out" / "op_c.csv").string() + " " + (dir / "out" / "op_q.csv").string() +
              " --top-k 10") == 0);
    const auto cmp = nlohmann::json::parse(read_file(dir / "stdout.txt"));
    CHECK(cmp["overlap_at_k"].get<double>() >= 0.0);
    CHECK(cmp["rank_correlation"] == "spearman");

    write_file_atomic(dir / "bad.csv", "a,b\nb,c,-1\n");
    CHECK(run("validate " + (dir / "bad.csv").string()) == 2);
    const auto err = nlohmann::json::parse(read_file(dir / "stderr.txt"));
    CHECK(err["error"] == "ParseError");
    CHECK(err["message"].get<std::string>().find("line 2") != std::string::npos);
}
#endif
