#include "advknap/frac_heur.hpp"

#include <algorithm>
#include <numeric>

#include "advknap/random.hpp"

namespace advknap {

namespace {

HeuristicOutcome make_outcome(const Instance& inst, std::vector<std::int64_t> w, Method m) {
    Rational value = fractional_payoff(inst.values(), w, inst.follower_budget());
    return {WeightVector::from_integers(w), value, m};
}

// VP weights of the items in `items` for a residual budget.
std::vector<Rational> residual_vp(const Instance& inst, const std::vector<std::size_t>& items, const Rational& budget) {
    Rational total;
    for (auto i : items) total += inst.value(i);
    std::vector<Rational> out;
    out.reserve(items.size());
    for (auto i : items) out.push_back(inst.value(i) * budget / total);
    return out;
}

// Spreads the residual budget over the items not fixed by a BB stage.
void assign_rest(const Instance& inst, const std::vector<std::size_t>& items, const Rational& budget,
                 std::vector<std::int64_t>& w) {
    auto rounded = largest_remainder(residual_vp(inst, items, budget), budget.num());
    for (std::size_t k = 0; k < items.size(); ++k) w[items[k]] = rounded[k];
}

std::size_t argmin(const std::vector<Rational>& est) {
    return static_cast<std::size_t>(std::min_element(est.begin(), est.end()) - est.begin());
}

const HeuristicOutcome& better(const HeuristicOutcome& first, const HeuristicOutcome& second) {
    return second.follower_value < first.follower_value ? second : first;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::RR: return "RR";
        case Method::BBup: return "BBup";
        case Method::BBdown: return "BBdown";
        case Method::BBplus: return "BB+";
        case Method::GDf2c: return "GDf2c";
        case Method::GDc2f: return "GDc2f";
        case Method::GDplus: return "GD+";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view tag) {
    for (Method m : all_methods())
        if (method_name(m) == tag) return m;
    return std::nullopt;
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods{Method::RR,     Method::BBup,  Method::BBdown, Method::BBplus,
                                             Method::GDf2c, Method::GDc2f, Method::GDplus};
    return methods;
}

std::vector<std::int64_t> vp_floors(const Instance& inst) {
    std::vector<std::int64_t> out;
    for (const auto& w : vp_weights(inst).weights) out.push_back(w.floor());
    return out;
}

std::vector<std::int64_t> vp_ceilings(const Instance& inst) {
    std::vector<std::int64_t> out;
    for (const auto& w : vp_weights(inst).weights) out.push_back(w.ceil());
    return out;
}

std::vector<std::int64_t> largest_remainder(const std::vector<Rational>& target, std::int64_t total) {
    std::vector<std::int64_t> out;
    out.reserve(target.size());
    std::int64_t assigned = 0;
    for (const auto& t : target) {
        out.push_back(t.floor());
        assigned += out.back();
    }
    std::vector<std::size_t> order(target.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return target[a] - Rational(out[a]) > target[b] - Rational(out[b]);
    });
    for (std::size_t k = 0; assigned < total && k < order.size(); ++k, ++assigned) ++out[order[k]];
    return out;
}

HeuristicOutcome rr_round(const Instance& inst, std::uint64_t seed) {
    auto vp = vp_weights(inst).weights;
    std::vector<std::int64_t> w;
    std::vector<std::size_t> fractional;
    std::int64_t used = 0;
    for (std::size_t i = 0; i < vp.size(); ++i) {
        w.push_back(vp[i].floor());
        used += w.back();
        if (!vp[i].is_integer()) fractional.push_back(i);
    }
    auto surplus = static_cast<std::size_t>(inst.leader_budget() - used);

    // Partial Fisher-Yates: the first `surplus` slots form a uniform subset.
    auto rng = make_rng({seed});
    for (std::size_t k = 0; k < surplus; ++k) {
        auto pick = k + uniform_index(rng, fractional.size() - k);
        std::swap(fractional[k], fractional[pick]);
        ++w[fractional[k]];
    }
    return make_outcome(inst, std::move(w), Method::RR);
}

HeuristicOutcome bb_up(const Instance& inst) {
    std::vector<std::int64_t> w(inst.size(), 0);
    std::vector<std::size_t> items(inst.size());
    std::iota(items.begin(), items.end(), std::size_t{0});
    Rational leader(inst.leader_budget());
    Rational follower = inst.follower_budget();
    Rational fixed;

    while (items.size() > 1 && fixed < inst.follower_budget()) {
        auto vp = residual_vp(inst, items, leader);
        Rational total;
        for (auto i : items) total += inst.value(i);

        std::vector<Rational> est;
        for (std::size_t k = 0; k < items.size(); ++k) {
            const Rational& v = inst.value(items[k]);
            Rational fl(vp[k].floor());
            Rational rest = leader - fl;
            est.push_back(rest == 0 ? v : v + (follower - fl) / rest * (total - v));
        }
        std::size_t pick = argmin(est);
        std::int64_t fl = vp[pick].floor();
        w[items[pick]] = fl;
        follower -= fl;
        leader -= fl;
        fixed += fl;
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    assign_rest(inst, items, leader, w);
    return make_outcome(inst, std::move(w), Method::BBup);
}

HeuristicOutcome bb_down(const Instance& inst) {
    std::vector<std::int64_t> w(inst.size(), 0);
    std::vector<std::size_t> items(inst.size());
    std::iota(items.begin(), items.end(), std::size_t{0});
    Rational leader(inst.leader_budget());
    const Rational& follower = inst.follower_budget();

    while (items.size() > 1 && leader > follower) {
        auto vp = residual_vp(inst, items, leader);
        Rational total;
        for (auto i : items) total += inst.value(i);

        std::vector<Rational> est;
        for (std::size_t k = 0; k < items.size(); ++k) {
            const Rational& v = inst.value(items[k]);
            Rational ce(vp[k].ceil());
            Rational below = leader - ce;  // capacity under the top piece
            Rational others = total - v;
            if (follower <= below)
                est.push_back(below == 0 ? Rational(0) : follower / below * others);
            else
                est.push_back(others + (follower - below) * v / ce);
        }
        std::size_t pick = argmin(est);
        std::int64_t ce = vp[pick].ceil();
        w[items[pick]] = ce;
        leader -= ce;
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    assign_rest(inst, items, leader, w);
    return make_outcome(inst, std::move(w), Method::BBdown);
}

HeuristicOutcome bb_plus(const Instance& inst) {
    HeuristicOutcome out = better(bb_up(inst), bb_down(inst));
    out.method = Method::BBplus;
    return out;
}

HeuristicOutcome gd_f2c(const Instance& inst) {
    auto w = vp_floors(inst);
    auto ceilings = vp_ceilings(inst);
    std::int64_t surplus = inst.leader_budget() - std::accumulate(w.begin(), w.end(), std::int64_t{0});

    for (std::int64_t round = 0; round < surplus; ++round) {
        std::optional<std::size_t> best;
        Rational best_value;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] >= ceilings[i]) continue;
            ++w[i];
            Rational value = fractional_payoff(inst.values(), w, inst.follower_budget());
            --w[i];
            if (!best || value < best_value) {
                best = i;
                best_value = value;
            }
        }
        ++w[*best];
    }
    return make_outcome(inst, std::move(w), Method::GDf2c);
}

HeuristicOutcome gd_c2f(const Instance& inst) {
    auto w = vp_ceilings(inst);
    auto floors = vp_floors(inst);
    std::int64_t deficit = std::accumulate(w.begin(), w.end(), std::int64_t{0}) - inst.leader_budget();

    for (std::int64_t round = 0; round < deficit; ++round) {
        std::optional<std::size_t> best;
        Rational best_value;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] <= floors[i]) continue;
            --w[i];
            Rational value = fractional_payoff(inst.values(), w, inst.follower_budget());
            ++w[i];
            if (!best || value < best_value) {
                best = i;
                best_value = value;
            }
        }
        --w[*best];
    }
    return make_outcome(inst, std::move(w), Method::GDc2f);
}

HeuristicOutcome gd_plus(const Instance& inst) {
    HeuristicOutcome out = better(gd_f2c(inst), gd_c2f(inst));
    out.method = Method::GDplus;
    return out;
}

HeuristicOutcome run_heuristic(Method m, const Instance& inst, std::uint64_t seed) {
    switch (m) {
        case Method::RR: return rr_round(inst, seed);
        case Method::BBup: return bb_up(inst);
        case Method::BBdown: return bb_down(inst);
        case Method::BBplus: return bb_plus(inst);
        case Method::GDf2c: return gd_f2c(inst);
        case Method::GDc2f: return gd_c2f(inst);
        case Method::GDplus: return gd_plus(inst);
    }
    throw ValidationError("unknown method");
}

}  // namespace advknap
