#include "advknap/harness.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "advknap/random.hpp"

namespace advknap {

BenchConfig default_bench_config() {
    BenchConfig cfg;
    for (std::int64_t t = 1; t <= 9; ++t) cfg.ratios.emplace_back(t, 10);
    for (Method m : all_methods())
        if (m != Method::RR) cfg.methods.push_back(m);
    return cfg;
}

void validate_config(const BenchConfig& cfg) {
    if (cfg.ratios.empty()) throw ValidationError("bench config needs at least one ratio");
    for (const auto& r : cfg.ratios)
        if (r <= 0 || r >= 1) throw ValidationError(fmt::format("ratio {} outside (0, 1)", r.str()));
    if (cfg.instances_per_ratio < 1) throw ValidationError("instances_per_ratio must be >= 1");
    if (cfg.leader_budget < 1) throw ValidationError("leader_budget must be >= 1");
    if (cfg.total_value_multiplier < 1) throw ValidationError("total_value_multiplier must be >= 1");
    auto [lo, hi] = cfg.n_range;
    if (lo < 1 || hi < lo || hi > 10'000) throw ValidationError("n_range must satisfy 1 <= min <= max <= 10000");
    if (cfg.methods.empty()) throw ValidationError("bench config needs at least one method");
}

std::uint64_t cell_seed(std::uint64_t base, std::size_t ratio_index, std::size_t instance_index, std::uint64_t stream) {
    return make_rng({base, ratio_index, instance_index, stream})();
}

Instance gen_instance(std::uint64_t seed, const BenchConfig& cfg, const Rational& ratio) {
    auto rng = make_rng({seed});
    auto [lo, hi] = cfg.n_range;
    const auto n = lo + static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    const std::int64_t total = cfg.total_value_multiplier * cfg.leader_budget;
    if (total < n) throw ValidationError(fmt::format("cannot split total value {} into {} positive parts", total, n));

    // Floyd's sampling of n-1 distinct cut points from {1, ..., V-1}.
    std::set<std::int64_t> cuts;
    for (std::int64_t j = total - n + 1; j <= total - 1; ++j) {
        auto t = 1 + static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(j)));
        cuts.insert(cuts.count(t) ? j : t);
    }
    std::vector<Rational> values;
    std::int64_t prev = 0;
    for (auto c : cuts) {
        values.emplace_back(c - prev);
        prev = c;
    }
    values.emplace_back(total - prev);

    // The fractional pipeline takes any rational W^f; the grid rounds it to an
    // integer so that the same instances also suit the 0-1 follower.
    std::int64_t follower = std::max<std::int64_t>(1, (ratio * Rational(cfg.leader_budget)).round());
    return validate_instance({std::move(values), Rational(cfg.leader_budget), Rational(follower)});
}

std::vector<ComparisonRow> run_bench(const BenchConfig& cfg) {
    validate_config(cfg);
    std::vector<ComparisonRow> rows;
    for (std::size_t r = 0; r < cfg.ratios.size(); ++r) {
        std::vector<ComparisonRow> block;
        for (Method m : cfg.methods) block.push_back({cfg.ratios[r], m, 0, 0, 0, 0.0, 0.0});

        double rr_sum = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(cfg.instances_per_ratio); ++i) {
            Instance inst = gen_instance(cell_seed(cfg.seed, r, i, 0), cfg, cfg.ratios[r]);
            Rational rr = rr_round(inst, cell_seed(cfg.seed, r, i, 1)).follower_value;
            rr_sum += rr.to_double();
            for (auto& row : block) {
                Rational value = run_heuristic(row.method, inst, cell_seed(cfg.seed, r, i, 1)).follower_value;
                row.mean_method += value.to_double();
                if (value < rr)
                    ++row.better;
                else if (value == rr)
                    ++row.same;
                else
                    ++row.worse;
            }
        }
        const auto count = static_cast<double>(cfg.instances_per_ratio);
        for (auto& row : block) {
            row.mean_method /= count;
            row.mean_rr = rr_sum / count;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string trimmed_decimal(const Rational& r, int places) {
    std::string s = r.decimal(places);
    if (s.find('.') == std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

std::string results_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    os << "ratio,method,better,same,worse,mean_method,mean_rr\n";
    for (const auto& row : rows)
        os << trimmed_decimal(row.ratio) << ',' << method_name(row.method) << ',' << row.better << ',' << row.same
           << ',' << row.worse << ',' << fmt::format("{:.6f}", row.mean_method) << ',' << fmt::format("{:.6f}", row.mean_rr) << '\n';
    return os.str();
}

std::string plot_data_json(const std::vector<ComparisonRow>& rows) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& row : rows) {
        double total = static_cast<double>(row.better + row.same + row.worse);
        auto& series = doc[std::string(method_name(row.method))];
        series.push_back({{"ratio", row.ratio.to_double()},
                          {"better", static_cast<double>(row.better) / total},
                          {"same", static_cast<double>(row.same) / total},
                          {"worse", static_cast<double>(row.worse) / total}});
    }
    return doc.dump(2) + "\n";
}

void write_results(const std::vector<ComparisonRow>& rows, const std::filesystem::path& csv_path,
                   const std::optional<std::filesystem::path>& plot_path) {
    if (rows.empty()) throw ValidationError("no result rows to write");
    auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        out << text;
        if (!out) throw std::runtime_error("failed writing " + path.string());
    };
    write(csv_path, results_csv(rows));
    if (plot_path) write(*plot_path, plot_data_json(rows));
}

}  // namespace advknap
