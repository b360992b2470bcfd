#include "advknap/core.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace advknap {

namespace {

// Common denominator of the values, and the values scaled by it.
std::pair<std::int64_t, std::vector<std::int64_t>> scale_to_integers(std::span<const Rational> values) {
    std::int64_t lcm = 1;
    for (const auto& v : values) {
        Rational l = Rational(lcm / std::gcd(lcm, v.den())) * Rational(v.den());
        lcm = l.num();
    }
    std::vector<std::int64_t> scaled;
    scaled.reserve(values.size());
    for (const auto& v : values) scaled.push_back((v * Rational(lcm)).num());
    return {lcm, std::move(scaled)};
}

// True when item a goes strictly before item b in bang-for-the-buck order.
template <class Weight>
bool bb_before(const Rational& va, const Weight& wa, std::size_t a, const Rational& vb, const Weight& wb,
               std::size_t b) {
    bool za = wa == 0, zb = wb == 0;
    if (za != zb) return za;
    if (!za) {
        // va/wa vs vb/wb
        auto lhs = va * Rational(wb);
        auto rhs = vb * Rational(wa);
        if (lhs != rhs) return lhs > rhs;
    }
    if (va != vb) return va > vb;
    return a < b;
}

template <class Weight>
std::vector<std::size_t> order_by_bb(std::span<const Rational> values, std::span<const Weight> weights) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bb_before(values[a], weights[a], a, values[b], weights[b], b);
    });
    return order;
}

void require_same_size(std::size_t n, std::size_t m) {
    if (n != m) throw ValidationError(fmt::format("weight vector has {} entries, instance has {} items", m, n));
}

}  // namespace

Rational Instance::total_value() const {
    Rational total;
    for (const auto& v : values_) total += v;
    return total;
}

Instance Instance::with_follower_budget(const Rational& follower_budget) const {
    return validate_instance({values_, Rational(leader_budget_), follower_budget});
}

Instance validate_instance(const InstanceCandidate& raw) {
    if (raw.values.empty()) throw ValidationError("empty instance: at least one item value is required");
    for (std::size_t i = 0; i < raw.values.size(); ++i)
        if (raw.values[i] <= 0)
            throw ValidationError(fmt::format("non-positive value {} at item {}", raw.values[i].str(), i + 1));
    if (raw.leader_budget <= 0) throw ValidationError("non-positive budget: leader budget must be >= 1");
    if (raw.follower_budget <= 0) throw ValidationError("non-positive budget: follower budget must be > 0");
    if (!raw.leader_budget.is_integer())
        throw ValidationError(fmt::format("non-integer leader budget {}", raw.leader_budget.str()));

    Instance inst;
    inst.values_ = raw.values;
    inst.leader_budget_ = raw.leader_budget.num();
    inst.follower_budget_ = raw.follower_budget;
    return inst;
}

WeightVector WeightVector::from_integers(std::span<const std::int64_t> w) {
    WeightVector out;
    out.integral = true;
    out.weights.assign(w.begin(), w.end());
    return out;
}

Rational WeightVector::sum() const {
    Rational total;
    for (const auto& w : weights) total += w;
    return total;
}

std::vector<std::int64_t> WeightVector::as_integers() const {
    std::vector<std::int64_t> out;
    out.reserve(weights.size());
    for (const auto& w : weights) {
        if (!w.is_integer()) throw ValidationError("0-1 mode requires integer weights");
        out.push_back(w.num());
    }
    return out;
}

void check_weights(const Instance& inst, const WeightVector& w) {
    require_same_size(inst.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.weights[i] < 0) throw ValidationError(fmt::format("negative weight at item {}", i + 1));
        if (w.integral && !w.weights[i].is_integer())
            throw ValidationError(fmt::format("weight {} at item {} is not an integer", w.weights[i].str(), i + 1));
    }
    if (w.sum() > Rational(inst.leader_budget()))
        throw ValidationError(
            fmt::format("weights sum to {} which exceeds the leader budget {}", w.sum().str(), inst.leader_budget()));
}

std::vector<Rational> PiecewiseValueCurve::slopes() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        out.push_back((breakpoints[i].payoff - breakpoints[i - 1].payoff) /
                      (breakpoints[i].capacity - breakpoints[i - 1].capacity));
    return out;
}

WeightVector vp_weights(const Instance& inst) {
    Rational total = inst.total_value();
    Rational budget(inst.leader_budget());
    WeightVector w;
    w.weights.reserve(inst.size());
    for (const auto& v : inst.values()) w.weights.push_back(v * budget / total);
    w.integral = std::all_of(w.weights.begin(), w.weights.end(), [](const Rational& x) { return x.is_integer(); });
    return w;
}

std::vector<std::size_t> bb_order(std::span<const Rational> values, std::span<const Rational> weights) {
    require_same_size(values.size(), weights.size());
    return order_by_bb(values, weights);
}

std::vector<std::size_t> bb_order(const Instance& inst, const WeightVector& w) {
    return bb_order(inst.values(), w.weights);
}

FollowerResult follower_fractional(const Instance& inst, const WeightVector& w) {
    return follower_fractional(inst, w, inst.follower_budget());
}

FollowerResult follower_fractional(const Instance& inst, const WeightVector& w, const Rational& capacity) {
    require_same_size(inst.size(), w.size());
    if (capacity < 0) throw ValidationError("negative capacity");
    FollowerResult out{Rational(0), std::vector<Rational>(inst.size(), Rational(0))};
    Rational left = capacity;
    for (std::size_t i : bb_order(inst, w)) {
        const Rational& wi = w.weights[i];
        if (wi == 0) {
            out.allocation[i] = 1;
            out.value += inst.value(i);
        } else if (wi <= left) {
            out.allocation[i] = 1;
            out.value += inst.value(i);
            left -= wi;
        } else if (left > 0) {
            out.allocation[i] = left / wi;
            out.value += inst.value(i) * out.allocation[i];
            left = 0;
        }
    }
    return out;
}

PiecewiseValueCurve build_curve(std::span<const Rational> values, std::span<const Rational> weights) {
    require_same_size(values.size(), weights.size());
    auto order = order_by_bb(values, weights);

    Rational base;
    for (std::size_t i : order)
        if (weights[i] == 0) base += values[i];

    PiecewiseValueCurve curve;
    curve.breakpoints.push_back({Rational(0), base});
    Rational last_slope;
    bool have_segment = false;
    for (std::size_t i : order) {
        if (weights[i] == 0) continue;
        Rational slope = values[i] / weights[i];
        const Breakpoint& prev = curve.breakpoints.back();
        Breakpoint next{prev.capacity + weights[i], prev.payoff + values[i]};
        if (have_segment && slope == last_slope)
            curve.breakpoints.back() = next;
        else
            curve.breakpoints.push_back(next);
        last_slope = slope;
        have_segment = true;
    }
    return curve;
}

PiecewiseValueCurve build_curve(const Instance& inst, const WeightVector& w) {
    return build_curve(inst.values(), w.weights);
}

Rational eval_curve(const PiecewiseValueCurve& curve, const Rational& capacity) {
    if (capacity < 0) throw ValidationError("negative capacity");
    const auto& bp = curve.breakpoints;
    if (capacity >= bp.back().capacity) return bp.back().payoff;
    auto it = std::upper_bound(bp.begin(), bp.end(), capacity,
                               [](const Rational& c, const Breakpoint& b) { return c < b.capacity; });
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    return lo.payoff + (hi.payoff - lo.payoff) * (capacity - lo.capacity) / (hi.capacity - lo.capacity);
}

Rational fractional_payoff(std::span<const Rational> values, std::span<const std::int64_t> weights,
                           const Rational& capacity) {
    require_same_size(values.size(), weights.size());
    Rational payoff;
    Rational left = capacity;
    for (std::size_t i : order_by_bb(values, weights)) {
        Rational wi(weights[i]);
        if (wi <= left) {
            payoff += values[i];
            left -= wi;
        } else {
            if (left > 0) payoff += values[i] * left / wi;
            break;
        }
    }
    return payoff;
}

Rational knapsack_01_value(std::span<const Rational> values, std::span<const std::int64_t> weights,
                           std::int64_t capacity) {
    require_same_size(values.size(), weights.size());
    auto [scale, v] = scale_to_integers(values);
    std::int64_t total_weight = 0;
    for (auto w : weights) total_weight += w;
    std::int64_t cap = std::clamp<std::int64_t>(capacity, 0, total_weight);

    std::int64_t free_value = 0;
    std::vector<std::int64_t> best(static_cast<std::size_t>(cap) + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t w = weights[i];
        if (w == 0) {
            free_value += v[i];
            continue;
        }
        for (std::int64_t c = cap; c >= w; --c) {
            auto& slot = best[static_cast<std::size_t>(c)];
            slot = std::max(slot, best[static_cast<std::size_t>(c - w)] + v[i]);
        }
    }
    return Rational(best[static_cast<std::size_t>(cap)] + free_value, scale);
}

FollowerResult follower_01(const Instance& inst, const WeightVector& w) {
    require_same_size(inst.size(), w.size());
    auto weights = w.as_integers();
    auto [scale, v] = scale_to_integers(inst.values());
    const std::size_t n = inst.size();

    std::int64_t total_weight = 0;
    for (auto x : weights) total_weight += x;
    auto cap = static_cast<std::size_t>(std::clamp<std::int64_t>(inst.follower_budget().floor(), 0, total_weight));

    // best[i][c]: optimum over items i..n-1 with capacity c.
    std::vector<std::vector<std::int64_t>> best(n + 1, std::vector<std::int64_t>(cap + 1, 0));
    for (std::size_t i = n; i-- > 0;) {
        auto wi = static_cast<std::size_t>(weights[i]);
        for (std::size_t c = 0; c <= cap; ++c) {
            best[i][c] = best[i + 1][c];
            if (wi <= c) best[i][c] = std::max(best[i][c], best[i + 1][c - wi] + v[i]);
        }
    }

    FollowerResult out{Rational(best[0][cap], scale), std::vector<Rational>(n, Rational(0))};
    std::size_t c = cap;
    for (std::size_t i = 0; i < n; ++i) {
        if (best[i][c] == best[i + 1][c]) continue;
        out.allocation[i] = 1;
        c -= static_cast<std::size_t>(weights[i]);
    }
    return out;
}

Rational prop2_bound(const Instance& inst) {
    const Rational& wf = inst.follower_budget();
    Rational vp_value = inst.total_value() * wf / Rational(inst.leader_budget());
    return vp_value * (Rational(1) + Rational(static_cast<std::int64_t>(inst.size()) - 1) / wf);
}

}  // namespace advknap
