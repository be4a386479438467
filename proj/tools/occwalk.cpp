// occwalk: random-walk occupation centralities from the command line.

#include "occwalk/error.hpp"
#include "occwalk/io.hpp"
#include "occwalk/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace occwalk;

namespace {

AggregateMode parse_mode(const std::string& s) {
    if (s == "binary") return AggregateMode::Binary;
    if (s == "sum") return AggregateMode::Sum;
    throw Error(ErrorCode::InvalidConfig, "flatten mode must be binary or sum");
}

InitialState parse_psi0(const std::string& s) {
    if (s == "uniform") return InitialState::uniform();
    if (s.starts_with("node:") && s.size() > 5) return InitialState::localized(s.substr(5));
    throw Error(ErrorCode::InvalidConfig, "psi0 must be 'uniform' or 'node:<label>'");
}

BAConfig parse_layer(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidConfig, "--layer must be N:M, got '" + s + "'");
    try {
        return {std::stoul(s.substr(0, colon)), std::stoul(s.substr(colon + 1)), 0};
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidConfig, "--layer must be N:M, got '" + s + "'");
    }
}

SyntheticMultilayerConfig::Overlap parse_overlap(const std::string& s) {
    if (s == "disjoint") return SyntheticMultilayerConfig::Overlap::disjoint();
    if (s.starts_with("shared:")) {
        try {
            return SyntheticMultilayerConfig::Overlap::shared_prefix(std::stoul(s.substr(7)));
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::InvalidConfig, "overlap must be 'disjoint' or 'shared:<count>'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical and quantum random-walk occupation centralities"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Parse an input file and print its manifest");
    std::string validate_path;
    std::string validate_kind = "edge-list";
    validate_cmd->add_option("input", validate_path, "CSV file")->required();
    validate_cmd->add_option("--kind", validate_kind, "edge-list or multilayer")
        ->check(CLI::IsMember({"edge-list", "multilayer"}));

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "Generate Barabasi-Albert networks");
    std::vector<std::string> layer_specs;
    std::string overlap = "disjoint";
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    generate_cmd->add_option("--layer", layer_specs, "N:M per layer; one layer writes an edge list")->required();
    generate_cmd->add_option("--overlap", overlap, "disjoint or shared:<count>");
    generate_cmd->add_option("--seed", gen_seed, "master seed");
    generate_cmd->add_option("-o,--output", gen_output, "output CSV")->required();

    // flatten
    auto* flatten_cmd = app.add_subcommand("flatten", "Merge the layers of a multilayer CSV");
    std::string flatten_in;
    std::string flatten_out;
    std::string flatten_mode = "binary";
    flatten_cmd->add_option("input", flatten_in, "multilayer CSV")->required();
    flatten_cmd->add_option("-o,--output", flatten_out, "edge-list CSV")->required();
    flatten_cmd->add_option("--mode", flatten_mode, "binary or sum")->check(CLI::IsMember({"binary", "sum"}));

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Compute OP_c and OP_q reports");
    RunConfig run;
    std::vector<std::string> inputs;
    std::string kind = "edge-list";
    std::string mode = "binary";
    std::string psi0 = "uniform";
    std::string classical = "closed-form";
    std::string quantum = "spectral";
    std::optional<std::string> out_dir;
    double euler_dt = 0.0;
    analyze_cmd->add_option("inputs", inputs, "input CSV files (analysed concurrently)")->required();
    analyze_cmd->add_option("--kind", kind, "edge-list or multilayer")->check(CLI::IsMember({"edge-list", "multilayer"}));
    analyze_cmd->add_option("--flatten-mode", mode, "binary or sum")->check(CLI::IsMember({"binary", "sum"}));
    analyze_cmd->add_flag("--weighted", run.weighted, "use edge weights (default: binarize)");
    analyze_cmd->add_flag("--drop-isolated", run.drop_isolated, "remove nodes without edges");
    analyze_cmd->add_flag("--per-component", run.per_component, "analyse each connected component separately");
    analyze_cmd->add_option("--top-k", run.top_k, "ranking cutoff")->capture_default_str();
    analyze_cmd->add_option("--psi0", psi0, "uniform or node:<label>")->capture_default_str();
    analyze_cmd->add_option("--classical-method", classical, "closed-form or euler")
        ->check(CLI::IsMember({"closed-form", "euler"}));
    analyze_cmd->add_option("--quantum-method", quantum, "spectral or leapfrog")
        ->check(CLI::IsMember({"spectral", "leapfrog"}));
    auto* euler_dt_opt = analyze_cmd->add_option("--euler-dt", euler_dt, "Euler step (default 0.1/max H_ii)");
    analyze_cmd->add_option("--euler-horizon", run.euler_horizon)->capture_default_str();
    analyze_cmd->add_option("--euler-tolerance", run.euler_tolerance)->capture_default_str();
    analyze_cmd->add_option("--dt", run.leapfrog.dt, "leapfrog step")->capture_default_str();
    analyze_cmd->add_option("--horizon", run.leapfrog.horizon, "leapfrog horizon")->capture_default_str();
    analyze_cmd->add_option("--norm-tolerance", run.leapfrog.tolerance, "leapfrog norm-drift alarm")
        ->capture_default_str();
    analyze_cmd->add_option("--seed", run.seed, "recorded in the provenance record");
    analyze_cmd->add_option("-o,--output-dir", out_dir, std::string("output directory (default $") + kOutputDirEnv + ")");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "Compare two occupation tables");
    std::string compare_a;
    std::string compare_b;
    std::size_t compare_k = 20;
    compare_cmd->add_option("first", compare_a, "node,value CSV")->required();
    compare_cmd->add_option("second", compare_b, "node,value CSV")->required();
    compare_cmd->add_option("--top-k", compare_k)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) {
            std::cout << validate(validate_path, parse_input_kind(validate_kind)).to_json() << '\n';
        } else if (*generate_cmd) {
            GenerateConfig cfg;
            for (const auto& s : layer_specs) cfg.layers.push_back(parse_layer(s));
            cfg.overlap = parse_overlap(overlap);
            cfg.seed = gen_seed;
            cfg.output = gen_output;
            for (const auto& p : run_generate(cfg)) std::cout << p.string() << '\n';
        } else if (*flatten_cmd) {
            run_flatten(flatten_in, parse_mode(flatten_mode), flatten_out);
        } else if (*analyze_cmd) {
            for (const auto& p : inputs) run.inputs.emplace_back(p);
            run.kind = parse_input_kind(kind);
            run.flatten_mode = parse_mode(mode);
            run.psi0 = parse_psi0(psi0);
            run.classical = classical == "euler" ? ClassicalMethod::Euler : ClassicalMethod::ClosedForm;
            run.quantum = quantum == "leapfrog" ? QuantumMethod::Leapfrog : QuantumMethod::Spectral;
            if (euler_dt_opt->count() > 0) run.euler_dt = euler_dt;
            run.output_dir = resolve_output_dir(out_dir ? std::optional<fs::path>(*out_dir) : std::nullopt);
            const RunResult result = run_analysis(run);
            if (result.exit_code != 0) {
                std::cerr << error_json(*result.error, result.message, run.output_dir.string());
                return result.exit_code;
            }
            for (const auto& p : result.files) std::cout << p.string() << '\n';
        } else if (*compare_cmd) {
            const auto a = parse_occupation_csv(read_file(compare_a), OccupationKind::Classical);
            const auto b = parse_occupation_csv(read_file(compare_b), OccupationKind::Quantum);
            const RankComparison c = compare_rankings(a, b, compare_k);
            nlohmann::ordered_json j;
            j["k"] = compare_k;
            j["overlap_at_k"] = c.overlap_at_k;
            j["rank_correlation"] = kRankCorrelationName;
            j["rank_correlation_value"] = c.spearman;
            std::cout << j.dump(2) << '\n';
        }
    } catch (const Error& e) {
        std::cerr << error_json(e.code(), e.what(), "");
        return 2;
    }
    return 0;
}
