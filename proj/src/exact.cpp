#include "advknap/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <fmt/format.h>

namespace advknap {

namespace {

void require_within_cap(std::uint64_t count, std::uint64_t cap) {
    if (count > cap)
        throw CapExceeded(fmt::format("instance too large for exact oracle: {} candidate weight vectors, cap is {}",
                                      count == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                                         : std::to_string(count),
                                      cap));
}

std::int64_t integer_capacity(const Instance& inst) { return inst.follower_budget().floor(); }

// Keeps the smallest objective; ties go to the lexicographically smaller w.
struct Incumbent {
    std::optional<Rational> objective;
    std::vector<std::int64_t> weights;

    void offer(const Rational& value, const std::vector<std::int64_t>& w) {
        if (!objective || value < *objective || (value == *objective && w < weights)) {
            objective = value;
            weights = w;
        }
    }
};

std::vector<Rational> sorted_values(const Instance& inst) {
    std::vector<Rational> v(inst.values().begin(), inst.values().end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::uint64_t composition_count(std::int64_t total, std::size_t parts) {
    if (parts == 0) return total == 0 ? 1 : 0;
    // C(total + parts - 1, parts - 1), built incrementally so every step is exact.
    const auto sat = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 result = 1;
    const auto k = static_cast<std::uint64_t>(parts - 1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (static_cast<std::uint64_t>(total) + i) / i;
        if (result > sat) return sat;
    }
    return static_cast<std::uint64_t>(result);
}

BilevelSolution exact_frac_discrete(const Instance& inst, std::uint64_t cap) {
    const std::uint64_t count = composition_count(inst.leader_budget(), inst.size());
    require_within_cap(count, cap);

    Incumbent best;
    for_each_composition(inst.leader_budget(), inst.size(), [&](const std::vector<std::int64_t>& w) {
        best.offer(fractional_payoff(inst.values(), w, inst.follower_budget()), w);
    });
    return {WeightVector::from_integers(best.weights), *best.objective, "exact_frac_discrete", count};
}

BilevelSolution exact_01(const Instance& inst, bool use_structure, std::uint64_t cap) {
    const std::int64_t capacity = integer_capacity(inst);
    const std::size_t n = inst.size();
    Incumbent best;

    if (!use_structure) {
        const std::uint64_t count = composition_count(inst.leader_budget(), n);
        require_within_cap(count, cap);
        for_each_composition(inst.leader_budget(), n, [&](const std::vector<std::int64_t>& w) {
            best.offer(knapsack_01_value(inst.values(), w, capacity), w);
        });
        return {WeightVector::from_integers(best.weights), *best.objective, "exact_01", count};
    }

    // Items in (value, index) order, split into runs of equal value.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inst.value(a) < inst.value(b); });
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 0 || inst.value(order[k]) != inst.value(order[k - 1])) groups.emplace_back();
        groups.back().push_back(order[k]);
    }

    require_within_cap(composition_count(inst.leader_budget(), groups.size()), cap);
    std::uint64_t evaluated = 0;
    std::vector<std::int64_t> w(n);
    for_each_composition(inst.leader_budget(), groups.size(), [&](const std::vector<std::int64_t>& totals) {
        std::int64_t prev_max = 0;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            auto m = static_cast<std::int64_t>(groups[g].size());
            std::int64_t base = totals[g] / m, extra = totals[g] % m;
            if (base < prev_max) return;
            for (std::int64_t j = 0; j < m; ++j)
                w[groups[g][static_cast<std::size_t>(j)]] = base + (j >= m - extra ? 1 : 0);
            prev_max = base + (extra > 0 ? 1 : 0);
        }
        ++evaluated;
        best.offer(knapsack_01_value(inst.values(), w, capacity), w);
    });
    return {WeightVector::from_integers(best.weights), *best.objective, "exact_01_structured", evaluated};
}

BoundsReport bounds_01(const Instance& inst) {
    const auto n = static_cast<std::int64_t>(inst.size());
    Rational scaled = Rational(n) * inst.follower_budget() / Rational(inst.leader_budget());
    BoundsReport out;
    out.k = std::clamp<std::int64_t>(scaled.floor(), 0, n);
    auto v = sorted_values(inst);
    for (std::int64_t i = 0; i < out.k; ++i) {
        out.lower += v[static_cast<std::size_t>(i)];
        out.upper += v[static_cast<std::size_t>(n - 1 - i)];
    }
    return out;
}

std::optional<Table1Entry> table1_value(const Instance& inst) {
    const auto n = static_cast<std::int64_t>(inst.size());
    if (n < 2) return std::nullopt;
    const Rational ratio = inst.follower_budget() / Rational(inst.leader_budget());
    const auto v = sorted_values(inst);
    auto prefix = [&](std::int64_t k) {
        Rational s;
        for (std::int64_t i = 0; i < k; ++i) s += v[static_cast<std::size_t>(i)];
        return s;
    };

    // One row of the table: consecutive [lo, hi) cells; a missing value marks
    // an untabulated gap.
    struct Cell {
        Rational lo, hi;
        std::optional<Rational> value;
    };
    std::vector<Cell> row;
    if (n == 2) {
        row = {{0, Rational(1, 2), Rational(0)}, {Rational(1, 2), 1, v[0]}};
    } else if (n == 3) {
        row = {{0, Rational(1, 3), Rational(0)},
               {Rational(1, 3), Rational(1, 2), v[0]},
               {Rational(1, 2), Rational(2, 3), std::min(v[2], v[0] + v[1])},
               {Rational(2, 3), 1, v[0] + v[1]}};
    } else {
        row = {{0, Rational(1, n), Rational(0)},
               {Rational(1, n), Rational(1, n - 1), v[0]},
               {Rational(1, n - 1), Rational(2, 2 * n - 3), std::min(v[2], v[0] + v[1])},
               {Rational(2, 2 * n - 3), Rational(1, n - 2), std::min(v[3], v[0] + v[1])},
               {Rational(1, n - 2), Rational(n - 1, n), std::nullopt},
               {Rational(n - 1, n), 1, prefix(n - 1)}};
    }

    for (const auto& cell : row) {
        if (ratio < cell.lo || ratio >= cell.hi) continue;
        if (!cell.value) return std::nullopt;
        Rational margin = inst.follower_budget() + Rational(inst.leader_budget());
        for (const auto& c : row) {
            for (const Rational& b : {c.lo, c.hi}) {
                if (b == 0) continue;
                Rational gap = inst.follower_budget() - b * Rational(inst.leader_budget());
                margin = std::min(margin, gap < 0 ? -gap : gap);
            }
        }
        return Table1Entry{*cell.value, margin};
    }
    return std::nullopt;
}

std::int64_t npp_discrepancy(const std::vector<std::int64_t>& values) {
    std::int64_t total = 0;
    for (auto v : values) {
        if (v <= 0) throw ValidationError("number partitioning needs positive integers");
        total += v;
    }
    const auto half = static_cast<std::size_t>(total / 2);
    std::vector<char> reachable(half + 1, 0);
    reachable[0] = 1;
    for (auto v : values) {
        auto step = static_cast<std::size_t>(v);
        for (std::size_t s = half; s >= step && step <= half; --s)
            if (reachable[s - step]) reachable[s] = 1;
    }
    std::size_t best = half;
    while (!reachable[best]) --best;
    return total - 2 * static_cast<std::int64_t>(best);
}

Instance npp_reduction_instance(const std::vector<std::int64_t>& values) {
    std::int64_t total = 0;
    std::vector<Rational> v;
    for (auto x : values) {
        total += x;
        v.emplace_back(x);
    }
    if (total % 2 != 0) throw ValidationError(fmt::format("reduction needs an even value sum, got {}", total));
    return validate_instance({std::move(v), Rational(total), Rational(total / 2)});
}

std::optional<WeightVector> tightness_witness(const Instance& inst) {
    const auto n = static_cast<std::int64_t>(inst.size());
    const std::int64_t over = integer_capacity(inst) + 1;
    const std::int64_t first = inst.leader_budget() - (n - 1) * over;
    if (first < 0) return std::nullopt;
    auto cheapest = static_cast<std::size_t>(
        std::min_element(inst.values().begin(), inst.values().end()) - inst.values().begin());
    std::vector<std::int64_t> w(inst.size(), over);
    w[cheapest] = first;
    return WeightVector::from_integers(w);
}

Lemma1Audit lemma1_audit(const Instance& inst, std::uint64_t cap) {
    require_within_cap(composition_count(inst.leader_budget(), inst.size()), cap);
    const auto floors = [&] {
        std::vector<std::int64_t> f;
        for (const auto& w : vp_weights(inst).weights) f.push_back(w.floor());
        return f;
    }();
    const auto ceils = [&] {
        std::vector<std::int64_t> c;
        for (const auto& w : vp_weights(inst).weights) c.push_back(w.ceil());
        return c;
    }();

    Lemma1Audit audit;
    bool first = true;
    for_each_composition(inst.leader_budget(), inst.size(), [&](const std::vector<std::int64_t>& w) {
        Rational value = fractional_payoff(inst.values(), w, inst.follower_budget());
        bool in_box = true;
        for (std::size_t i = 0; i < w.size(); ++i) in_box = in_box && floors[i] <= w[i] && w[i] <= ceils[i];
        if (first || value < audit.optimum) {
            first = false;
            audit.optimum = value;
            audit.optimal_count = 1;
            audit.some_optimum_in_box = in_box;
            audit.all_optima_in_box = in_box;
        } else if (value == audit.optimum) {
            ++audit.optimal_count;
            audit.some_optimum_in_box = audit.some_optimum_in_box || in_box;
            audit.all_optima_in_box = audit.all_optima_in_box && in_box;
        }
    });
    return audit;
}

}  // namespace advknap
