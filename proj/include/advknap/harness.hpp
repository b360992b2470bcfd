#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "advknap/core.hpp"
#include "advknap/frac_heur.hpp"

namespace advknap {

/// Experiment grid: for every ratio W^f/W^l, `instances_per_ratio` random
/// instances whose values are a random composition of
/// V = total_value_multiplier * leader_budget.
struct BenchConfig {
    std::vector<Rational> ratios;
    std::int64_t instances_per_ratio = 100;
    std::int64_t leader_budget = 100;
    std::int64_t total_value_multiplier = 100;
    std::pair<std::int64_t, std::int64_t> n_range{10, 20};
    std::uint64_t seed = 1;
    std::vector<Method> methods;
};

/// Ratios 0.1, 0.2, ..., 0.9 and every non-RR method.
BenchConfig default_bench_config();
void validate_config(const BenchConfig& cfg);

/// n uniform in n_range; values a uniform composition of V into n positive
/// parts; W^f = round(ratio * W^l), at least 1.
Instance gen_instance(std::uint64_t seed, const BenchConfig& cfg, const Rational& ratio);

/// Seeds used for instance (stream 0) and RR draw (stream 1) of one grid cell.
std::uint64_t cell_seed(std::uint64_t base, std::size_t ratio_index, std::size_t instance_index, std::uint64_t stream);

struct ComparisonRow {
    Rational ratio;
    Method method;
    std::int64_t better = 0;
    std::int64_t same = 0;
    std::int64_t worse = 0;
    /// Means are reporting only; classification uses exact values.
    double mean_method = 0;
    double mean_rr = 0;
};

/// One row per (ratio, method), ratios outer, methods in config order.
/// "better" means a strictly lower follower value than RR on the same instance.
std::vector<ComparisonRow> run_bench(const BenchConfig& cfg);

/// Header ratio,method,better,same,worse,mean_method,mean_rr.
std::string results_csv(const std::vector<ComparisonRow>& rows);
/// Per-method stacked better/same/worse fractions by ratio.
std::string plot_data_json(const std::vector<ComparisonRow>& rows);

void write_results(const std::vector<ComparisonRow>& rows, const std::filesystem::path& csv_path,
                   const std::optional<std::filesystem::path>& plot_path = std::nullopt);

/// Decimal text with at most `places` digits and no trailing zeros.
std::string trimmed_decimal(const Rational& r, int places = 6);

}  // namespace advknap
