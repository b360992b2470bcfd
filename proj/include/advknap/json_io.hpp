#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "advknap/core.hpp"
#include "advknap/exact.hpp"
#include "advknap/frac_heur.hpp"
#include "advknap/harness.hpp"
#include "advknap/milp.hpp"

namespace advknap {

// File formats:
//   instance  {"values": [..], "leader_budget": int, "follower_budget": number}
//   weights   [w1, ..., wn]
//   bench     {"ratios": [..], "instances_per_ratio", "leader_budget",
//              "total_value_multiplier", "n_range": [lo, hi], "seed", "methods"}
// Numbers may also be given as strings such as "68/3".

Rational rational_from_json(const nlohmann::json& j);
/// Exact value as a number when integral, otherwise rounded to 6 places.
nlohmann::ordered_json rational_to_json(const Rational& r);

Instance instance_from_json(const nlohmann::json& j);
nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance load_instance(const std::filesystem::path& path);

WeightVector weights_from_json(const nlohmann::json& j);
nlohmann::ordered_json weights_to_json(const WeightVector& w);

/// {weights, objective, objective_exact, method, enumerated_count}
nlohmann::ordered_json solution_to_json(const BilevelSolution& s);
/// {weights, follower_value, follower_value_exact, method}
nlohmann::ordered_json outcome_to_json(const HeuristicOutcome& h);

BenchConfig bench_config_from_json(const nlohmann::json& j);
BenchConfig load_bench_config(const std::filesystem::path& path);

/// Sidecar {n, k, M1, M2, eps, var_count, con_count}.
nlohmann::ordered_json milp_metadata(const MilpModel& model);

}  // namespace advknap
