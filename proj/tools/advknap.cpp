// Command-line front end for the adversarial knapsack solvers.
//
//   advknap solve  --setting frac|01 --method <tag> --instance <file> [--seed N]
//   advknap exact  --setting frac|01 --instance <file> [--structured] [--cap N]
//   advknap bench  --config <file> --out <csv> [--plot-json <file>]
//   advknap milp   --instance <file> [--k K] [--eps E] --emit <file.lp> [--meta <file>] [--oracle] [--sweep-k]
//   advknap oracle npp --values 2,3,5
//   advknap analyze --instance <file>
//
// Exit codes: 0 success, 2 validation error, 3 enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "advknap/core.hpp"
#include "advknap/exact.hpp"
#include "advknap/frac_heur.hpp"
#include "advknap/harness.hpp"
#include "advknap/json_io.hpp"
#include "advknap/milp.hpp"

namespace {

using namespace advknap;
using nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open " + path + " for writing");
    out << text;
}

ordered_json solve(const std::string& setting, const std::string& tag, const std::string& instance_path,
                   std::uint64_t seed) {
    auto method = parse_method(tag);
    if (!method) throw ValidationError("unknown method '" + tag + "' (expected RR, BBup, BBdown, BB+, GDf2c, GDc2f, GD+)");
    Instance inst = load_instance(instance_path);
    HeuristicOutcome h = run_heuristic(*method, inst, seed);
    ordered_json out = outcome_to_json(h);
    out["setting"] = setting;
    if (setting == "01") {
        Rational value = follower_01(inst, h.weights).value;
        out["follower_value"] = rational_to_json(value);
        out["follower_value_exact"] = value.str();
    }
    return out;
}

ordered_json milp(const std::string& instance_path, std::optional<std::int64_t> k, std::optional<std::string> eps,
                  const std::string& emit_path, std::optional<std::string> meta_path, bool run_oracle, bool sweep) {
    Instance inst = load_instance(instance_path);
    MilpParams params = default_milp_params(inst);
    if (k) params.k = *k;
    if (eps) {
        params.eps = Rational::parse(*eps);
        params.big_m1 = std::max(params.big_m1, inst.follower_budget() + params.eps);
    }
    MilpModel model = build_milp(inst, params);
    write_text(emit_path, emit_lp(model));
    ordered_json meta = milp_metadata(model);
    write_text(meta_path.value_or(emit_path + ".json"), meta.dump(2) + "\n");

    ordered_json out;
    out["lp"] = emit_path;
    out["metadata"] = meta;
    auto oracle_json = [&](std::int64_t kk) {
        LocalMaxSolution s = local_max_oracle(inst, kk);
        ordered_json j = solution_to_json(s.solution);
        j["k"] = kk;
        j["selection"] = s.selection;
        j["locally_optimal"] = s.locally_optimal;
        return j;
    };
    if (sweep) {
        out["oracle"] = ordered_json::array();
        std::optional<Rational> best;
        for (std::int64_t kk = 0; kk <= static_cast<std::int64_t>(inst.size()); ++kk) {
            LocalMaxSolution s = local_max_oracle(inst, kk);
            if (!best || s.solution.objective < *best) best = s.solution.objective;
            out["oracle"].push_back(oracle_json(kk));
        }
        out["min_over_k"] = rational_to_json(*best);
    } else if (run_oracle) {
        out["oracle"] = oracle_json(params.k);
    }
    return out;
}

ordered_json npp(const std::string& csv) {
    std::vector<std::int64_t> values;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto end = csv.find(',', start);
        if (end == std::string::npos) end = csv.size();
        std::string token = csv.substr(start, end - start);
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ValidationError("bad integer '" + token + "' in --values");
        }
        start = end + 1;
    }
    ordered_json out;
    std::int64_t disc = npp_discrepancy(values);
    out["values"] = values;
    out["discrepancy"] = disc;
    std::int64_t total = 0;
    for (auto v : values) total += v;
    if (total % 2 == 0) {
        Instance inst = npp_reduction_instance(values);
        out["reduction"] = instance_to_json(inst);
        out["game_optimum"] = rational_to_json(inst.follower_budget() - Rational(disc, 2));
    }
    return out;
}

ordered_json analyze(const std::string& instance_path) {
    Instance inst = load_instance(instance_path);
    ordered_json out;
    out["instance"] = instance_to_json(inst);
    out["degenerate"] = inst.degenerate();
    WeightVector vp = vp_weights(inst);
    out["vp_weights"] = weights_to_json(vp);
    out["vp_value"] = rational_to_json(follower_fractional(inst, vp).value);
    out["prop2_bound"] = rational_to_json(prop2_bound(inst));
    BoundsReport b = bounds_01(inst);
    out["bounds_01"] = {{"k", b.k}, {"lower", rational_to_json(b.lower)}, {"upper", rational_to_json(b.upper)}};
    if (auto t = table1_value(inst))
        out["table1"] = {{"value", rational_to_json(t->value)}, {"integer_margin", rational_to_json(t->integer_margin)}};
    else
        out["table1"] = "not covered";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers for the sequential adversarial knapsack game"};
    app.require_subcommand(1);

    std::string setting = "frac", method, instance_path, config_path, out_path, emit_path, npp_values;
    std::optional<std::string> plot_path, meta_path, eps;
    std::optional<std::int64_t> k;
    std::uint64_t seed = 0, cap = kDefaultEnumerationCap;
    bool structured = false, run_oracle = false, sweep = false;

    auto* solve_cmd = app.add_subcommand("solve", "Run one leader heuristic");
    solve_cmd->add_option("--setting", setting)->check(CLI::IsMember({"frac", "01"}));
    solve_cmd->add_option("--method", method, "RR, BBup, BBdown, BB+, GDf2c, GDc2f or GD+")->required();
    solve_cmd->add_option("--instance", instance_path)->required();
    solve_cmd->add_option("--seed", seed, "RNG seed for RR");

    auto* exact_cmd = app.add_subcommand("exact", "Enumerate all integral leader strategies");
    exact_cmd->add_option("--setting", setting)->check(CLI::IsMember({"frac", "01"}));
    exact_cmd->add_option("--instance", instance_path)->required();
    exact_cmd->add_flag("--structured", structured, "0-1 only: search monotone weight vectors");
    exact_cmd->add_option("--cap", cap, "Maximum number of candidate weight vectors");

    auto* bench_cmd = app.add_subcommand("bench", "Compare heuristics against RR on random instances");
    bench_cmd->add_option("--config", config_path)->required();
    bench_cmd->add_option("--out", out_path)->required();
    bench_cmd->add_option("--plot-json", plot_path);

    auto* milp_cmd = app.add_subcommand("milp", "Emit the local-maximum MILP in LP format");
    milp_cmd->add_option("--instance", instance_path)->required();
    milp_cmd->add_option("--k", k, "Cardinality of the follower solution");
    milp_cmd->add_option("--eps", eps, "Slack for the strict capacity inequality");
    milp_cmd->add_option("--emit", emit_path)->required();
    milp_cmd->add_option("--meta", meta_path, "Metadata sidecar (default: <emit>.json)");
    milp_cmd->add_flag("--oracle", run_oracle, "Also solve the model by enumeration");
    milp_cmd->add_flag("--sweep-k", sweep, "Solve by enumeration for every k and report the minimum");

    auto* oracle_cmd = app.add_subcommand("oracle", "Reference oracles");
    oracle_cmd->require_subcommand(1);
    auto* npp_cmd = oracle_cmd->add_subcommand("npp", "Number partitioning discrepancy and its game instance");
    npp_cmd->add_option("--values", npp_values, "Comma-separated positive integers")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "VP weights, bounds and closed forms for an instance");
    analyze_cmd->add_option("--instance", instance_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        ordered_json result;
        if (*solve_cmd) {
            result = solve(setting, method, instance_path, seed);
        } else if (*exact_cmd) {
            Instance inst = load_instance(instance_path);
            result = solution_to_json(setting == "frac" ? exact_frac_discrete(inst, cap) : exact_01(inst, structured, cap));
        } else if (*bench_cmd) {
            auto rows = run_bench(load_bench_config(config_path));
            write_results(rows, out_path, plot_path ? std::optional<std::filesystem::path>(*plot_path) : std::nullopt);
            std::cout << results_csv(rows);
            return 0;
        } else if (*milp_cmd) {
            result = milp(instance_path, k, eps, emit_path, meta_path, run_oracle, sweep);
        } else if (*npp_cmd) {
            result = npp(npp_values);
        } else if (*analyze_cmd) {
            result = analyze(instance_path);
        }
        std::cout << result.dump(2) << "\n";
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
