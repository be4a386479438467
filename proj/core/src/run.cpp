#include "occwalk/run.hpp"

#include "occwalk/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <future>
#include <mutex>

#ifndef OCCWALK_VERSION
#define OCCWALK_VERSION "0.0.0"
#endif

namespace occwalk {

namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const char* to_string(AggregateMode m) { return m == AggregateMode::Binary ? "binary" : "sum"; }
const char* to_string(ClassicalMethod m) { return m == ClassicalMethod::ClosedForm ? "closed-form" : "euler"; }
const char* to_string(QuantumMethod m) { return m == QuantumMethod::Spectral ? "spectral" : "leapfrog"; }

ordered_json ranking_json(const Ranking& r) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : r.entries) arr.push_back({{"rank", e.rank}, {"node", e.label}, {"value", e.value}});
    return arr;
}

ordered_json integration_json(const IntegrationConfig& c) {
    return {{"dt", c.dt}, {"horizon", c.horizon}, {"tolerance", c.tolerance}};
}

struct Unit {
    fs::path dir;
    Graph graph;
    std::string name;
};

// Writes every artifact of one analysed graph and returns the paths.
std::vector<fs::path> write_unit(const Unit& unit, const RunConfig& cfg, const DatasetManifest& manifest) {
    ReportOptions opts;
    opts.top_k = cfg.top_k;
    opts.psi0 = cfg.psi0;
    opts.classical = cfg.classical;
    opts.quantum = cfg.quantum;
    opts.leapfrog = cfg.leapfrog;
    IntegrationConfig euler{0.0, cfg.euler_horizon, cfg.euler_tolerance};
    if (cfg.classical == ClassicalMethod::Euler) {
        euler.dt = cfg.euler_dt.value_or(
            default_euler_config(generator_matrix(unit.graph, GeneratorKind::Normalized)).dt);
        opts.euler = euler;
    }

    const FullReport report = full_report(unit.graph, opts);
    const auto& labels = unit.graph.labels();

    ordered_json j;
    j["tool"] = "occwalk";
    j["version"] = version();
    j["unit"] = unit.name;
    j["config"] = ordered_json::parse(cfg.to_json());
    if (cfg.classical == ClassicalMethod::Euler) j["config"]["euler"] = integration_json(euler);
    j["input"] = ordered_json::parse(manifest.to_json());
    j["graph"] = {{"nodes", unit.graph.node_count()}, {"edges", unit.graph.edge_count()}};
    j["comparison"] = {{"k", report.top_c.k},
                       {"overlap_at_k", report.comparison.overlap_at_k},
                       {"rank_correlation", kRankCorrelationName},
                       {"rank_correlation_value", report.comparison.spearman}};
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"node", r.node}, {"degree", r.degree}, {"op_c", r.op_c}, {"op_q", r.op_q},
                        {"rank_c", r.rank_c}, {"rank_q", r.rank_q}});
    }
    j["table"] = rows;
    j["top_op_c"] = ranking_json(report.top_c);
    j["top_op_q"] = ranking_json(report.top_q);

    const std::vector<std::pair<std::string, std::string>> files = {
        {"report.csv", report_csv(report)},
        {"ranking_op_c.csv", ranking_csv(report.top_c)},
        {"ranking_op_q.csv", ranking_csv(report.top_q)},
        {"scatter_op_c.csv", scatter_csv(report.classical, labels)},
        {"scatter_op_q.csv", scatter_csv(report.quantum, labels)},
        {"op_c.csv", occupation_csv(report.op_c, "op_c", SortOrder::NodeOrder)},
        {"op_q.csv", occupation_csv(report.op_q, "op_q", SortOrder::NodeOrder)},
        {"op_c.json", occupation_json(report.op_c, SortOrder::NodeOrder) + '\n'},
        {"op_q.json", occupation_json(report.op_q, SortOrder::NodeOrder) + '\n'},
        {"report.json", j.dump(2) + '\n'},
    };
    std::vector<fs::path> written;
    for (const auto& [name, contents] : files) {
        write_file_atomic(unit.dir / name, contents);
        written.push_back(unit.dir / name);
    }
    return written;
}

std::vector<fs::path> analyse_input(const fs::path& input, const fs::path& dir, const RunConfig& cfg) {
    Ingested in = ingest(input, cfg.kind);
    Graph g = std::holds_alternative<Graph>(in.network)
                  ? std::get<Graph>(std::move(in.network))
                  : flatten(std::get<MultilayerNetwork>(in.network), cfg.flatten_mode);
    if (!cfg.weighted) g = g.binarized();
    if (cfg.drop_isolated) g = g.without_isolated();

    std::vector<Unit> units;
    if (cfg.per_component) {
        const auto components = connected_components(g);
        std::size_t index = 0;
        for (const auto& comp : components) {
            if (comp.size() < 2) {
                throw Error(ErrorCode::IsolatedNode,
                            "node '" + comp.front() + "' forms a singleton component; pass --drop-isolated");
            }
        }
        for (const auto& comp : components) {
            std::vector<std::size_t> idx;
            for (const auto& label : comp) idx.push_back(g.index_of(label));
            char name[32];
            std::snprintf(name, sizeof name, "component_%02zu", ++index);
            units.push_back({dir / name, g.induced(idx), name});
        }
    } else {
        units.push_back({dir, std::move(g), input.stem().string()});
    }

    std::vector<fs::path> written;
    for (const auto& unit : units) {
        auto files = write_unit(unit, cfg, in.manifest);
        written.insert(written.end(), files.begin(), files.end());
    }
    return written;
}

}  // namespace

const char* version() noexcept { return OCCWALK_VERSION; }

fs::path resolve_output_dir(const std::optional<fs::path>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
    return "occwalk-out";
}

void RunConfig::validate() const {
    if (inputs.empty()) throw Error(ErrorCode::InvalidConfig, "no input files");
    if (top_k < 1) throw Error(ErrorCode::InvalidConfig, "top_k must be at least 1");
    if (euler_dt && !(*euler_dt > 0.0)) throw Error(ErrorCode::InvalidConfig, "euler dt must be positive");
    if (!(euler_horizon > 0.0) || !(euler_tolerance > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "euler horizon and tolerance must be positive");
    }
    leapfrog.validate();
    for (const auto& p : inputs) {
        if (!fs::exists(p)) throw Error(ErrorCode::IoError, "input '" + p.string() + "' does not exist");
    }
}

std::string RunConfig::to_json() const {
    ordered_json j;
    ordered_json in = ordered_json::array();
    for (const auto& p : inputs) in.push_back(p.string());
    j["inputs"] = in;
    j["kind"] = occwalk::to_string(kind);
    j["flatten_mode"] = to_string(flatten_mode);
    j["weighted"] = weighted;
    j["drop_isolated"] = drop_isolated;
    j["per_component"] = per_component;
    j["top_k"] = top_k;
    j["psi0"] = psi0.mode == InitialState::Mode::Uniform ? std::string("uniform") : "node:" + psi0.node;
    j["classical_method"] = to_string(classical);
    j["quantum_method"] = to_string(quantum);
    j["euler"] = {{"dt", euler_dt ? ordered_json(*euler_dt) : ordered_json("0.1/max(H_ii)")},
                  {"horizon", euler_horizon},
                  {"tolerance", euler_tolerance}};
    j["leapfrog"] = integration_json(leapfrog);
    j["degeneracy_tolerance"] = kDegeneracyTolerance;
    j["seed"] = seed;
    return j.dump();
}

std::string error_json(ErrorCode code, std::string_view message, std::string_view context) {
    ordered_json j;
    j["error"] = to_string(code);
    j["message"] = message;
    j["context"] = context;
    return j.dump(2) + '\n';
}

RunResult run_analysis(const RunConfig& cfg) {
    RunResult result;
    std::string context;
    try {
        cfg.validate();
        std::vector<std::future<std::vector<fs::path>>> jobs;
        for (const auto& input : cfg.inputs) {
            const fs::path dir = cfg.inputs.size() == 1 ? cfg.output_dir : cfg.output_dir / input.stem();
            jobs.push_back(std::async(std::launch::async, [&cfg, input, dir] { return analyse_input(input, dir, cfg); }));
        }
        std::optional<Error> first_error;
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            try {
                auto files = jobs[i].get();
                result.files.insert(result.files.end(), files.begin(), files.end());
            } catch (const Error& e) {
                if (!first_error) {
                    first_error = e;
                    context = cfg.inputs[i].string();
                }
            }
        }
        if (first_error) throw *first_error;
    } catch (const Error& e) {
        result.exit_code = 2;
        result.error = e.code();
        result.message = e.what();
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.error = ErrorCode::IoError;
        result.message = e.what();
    }
    if (result.error) {
        try {
            write_file_atomic(cfg.output_dir / "error.json", error_json(*result.error, result.message, context));
        } catch (const std::exception&) {
            // The error is still reported through the result.
        }
    }
    return result;
}

std::vector<fs::path> run_generate(const GenerateConfig& cfg) {
    if (cfg.layers.empty()) throw Error(ErrorCode::InvalidConfig, "no layer specs");
    ordered_json echo;
    echo["tool"] = "occwalk";
    echo["version"] = version();
    echo["generator"] = "barabasi-albert";
    echo["rng"] = "mt19937_64, layer sub-seed = splitmix64(seed + layer index)";
    echo["seed"] = cfg.seed;
    ordered_json specs = ordered_json::array();
    for (const auto& l : cfg.layers) specs.push_back({{"n", l.n}, {"m", l.m}, {"expected_edges", l.expected_edges()}});
    echo["layers"] = specs;

    std::string csv;
    if (cfg.layers.size() == 1) {
        BAConfig ba = cfg.layers.front();
        ba.seed = cfg.seed;
        csv = write_edge_list(barabasi_albert(ba));
        echo["format"] = "edge-list";
    } else {
        SyntheticMultilayerConfig mc{cfg.layers, cfg.overlap, cfg.seed};
        csv = write_multilayer(synthetic_multilayer(mc));
        echo["format"] = "multilayer";
        echo["overlap"] = cfg.overlap.kind == SyntheticMultilayerConfig::Overlap::Kind::Disjoint
                              ? std::string("disjoint")
                              : "shared_prefix:" + std::to_string(cfg.overlap.count);
    }
    echo["sha256"] = sha256_hex(csv);
    fs::path echo_path = cfg.output;
    echo_path += ".config.json";
    write_file_atomic(cfg.output, csv);
    write_file_atomic(echo_path, echo.dump(2) + '\n');
    return {cfg.output, echo_path};
}

void run_flatten(const fs::path& input, AggregateMode mode, const fs::path& output) {
    const MultilayerNetwork m = parse_multilayer(read_file(input));
    write_file_atomic(output, write_edge_list(flatten(m, mode)));
}

}  // namespace occwalk
