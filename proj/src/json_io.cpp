#include "advknap/json_io.hpp"

#include <fstream>

#include <fmt/format.h>

namespace advknap {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(fmt::format("missing field \"{}\"", key));
    return j.at(key);
}

}  // namespace

Rational rational_from_json(const nlohmann::json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_number_float()) return Rational::from_double(j.get<double>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
    throw ValidationError("expected a number, got " + j.dump());
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
    if (r.is_integer()) return r.num();
    return std::stod(r.decimal(6));
}

Instance instance_from_json(const nlohmann::json& j) {
    InstanceCandidate raw;
    const auto& values = require(j, "values");
    if (!values.is_array()) throw ValidationError("\"values\" must be an array");
    for (const auto& v : values) raw.values.push_back(rational_from_json(v));
    raw.leader_budget = rational_from_json(require(j, "leader_budget"));
    raw.follower_budget = rational_from_json(require(j, "follower_budget"));
    return validate_instance(raw);
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
    nlohmann::ordered_json out;
    out["values"] = nlohmann::ordered_json::array();
    for (const auto& v : inst.values()) out["values"].push_back(v.is_integer() ? nlohmann::ordered_json(v.num()) : nlohmann::ordered_json(v.str()));
    out["leader_budget"] = inst.leader_budget();
    const auto& wf = inst.follower_budget();
    out["follower_budget"] = wf.is_integer() ? nlohmann::ordered_json(wf.num()) : nlohmann::ordered_json(wf.str());
    return out;
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json(read_json(path)); }

WeightVector weights_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ValidationError("weights must be a JSON array");
    WeightVector w;
    w.integral = true;
    for (const auto& x : j) {
        w.weights.push_back(rational_from_json(x));
        w.integral = w.integral && w.weights.back().is_integer();
    }
    return w;
}

nlohmann::ordered_json weights_to_json(const WeightVector& w) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& x : w.weights) out.push_back(rational_to_json(x));
    return out;
}

nlohmann::ordered_json solution_to_json(const BilevelSolution& s) {
    nlohmann::ordered_json out;
    out["weights"] = weights_to_json(s.weights);
    out["objective"] = rational_to_json(s.objective);
    out["objective_exact"] = s.objective.str();
    out["method"] = s.method;
    out["enumerated_count"] = s.enumerated_count;
    return out;
}

nlohmann::ordered_json outcome_to_json(const HeuristicOutcome& h) {
    nlohmann::ordered_json out;
    out["weights"] = weights_to_json(h.weights);
    out["follower_value"] = rational_to_json(h.follower_value);
    out["follower_value_exact"] = h.follower_value.str();
    out["method"] = std::string(method_name(h.method));
    return out;
}

BenchConfig bench_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("bench config must be a JSON object");
    BenchConfig cfg = default_bench_config();
    try {
        if (j.contains("ratios")) {
            cfg.ratios.clear();
            for (const auto& r : j.at("ratios")) cfg.ratios.push_back(rational_from_json(r));
        }
        if (j.contains("instances_per_ratio")) cfg.instances_per_ratio = j.at("instances_per_ratio").get<std::int64_t>();
        if (j.contains("leader_budget")) cfg.leader_budget = j.at("leader_budget").get<std::int64_t>();
        if (j.contains("total_value_multiplier"))
            cfg.total_value_multiplier = j.at("total_value_multiplier").get<std::int64_t>();
        if (j.contains("n_range")) {
            const auto& range = j.at("n_range");
            if (!range.is_array() || range.size() != 2) throw ValidationError("n_range must be [min, max]");
            cfg.n_range = {range[0].get<std::int64_t>(), range[1].get<std::int64_t>()};
        }
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("methods")) {
            cfg.methods.clear();
            for (const auto& m : j.at("methods")) {
                auto method = parse_method(m.get<std::string>());
                if (!method) throw ValidationError("unknown method " + m.dump());
                cfg.methods.push_back(*method);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(e.what());
    }
    validate_config(cfg);
    return cfg;
}

BenchConfig load_bench_config(const std::filesystem::path& path) { return bench_config_from_json(read_json(path)); }

nlohmann::ordered_json milp_metadata(const MilpModel& model) {
    nlohmann::ordered_json out;
    out["n"] = model.n();
    out["k"] = model.params.k;
    out["M1"] = rational_to_json(model.params.big_m1);
    out["M2"] = rational_to_json(model.params.big_m2);
    out["eps"] = rational_to_json(model.params.eps);
    out["var_count"] = model.variables.size();
    out["con_count"] = model.constraints.size();
    return out;
}

}  // namespace advknap
