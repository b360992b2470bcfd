#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "advknap/rational.hpp"

namespace advknap {

/// Raised for malformed instances, weights or parameters.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration oracle would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unvalidated instance data, e.g. straight from a JSON file.
struct InstanceCandidate {
    std::vector<Rational> values;
    Rational leader_budget;
    Rational follower_budget;
};

/// The game <n, v, W^l, W^f>: item values, the leader's integer weight
/// budget and the follower's knapsack capacity. Only validate_instance
/// produces one, so every Instance satisfies n >= 1, v_i > 0, W^l >= 1 and
/// W^f > 0.
class Instance {
public:
    std::size_t size() const { return values_.size(); }
    std::span<const Rational> values() const { return values_; }
    const Rational& value(std::size_t i) const { return values_[i]; }
    std::int64_t leader_budget() const { return leader_budget_; }
    const Rational& follower_budget() const { return follower_budget_; }
    Rational total_value() const;

    /// W^f > W^l: whatever the leader does, the follower can take every item.
    bool degenerate() const { return follower_budget_ > Rational(leader_budget_); }

    /// Same values and leader budget, different follower capacity.
    Instance with_follower_budget(const Rational& follower_budget) const;

private:
    friend Instance validate_instance(const InstanceCandidate& raw);

    std::vector<Rational> values_;
    std::int64_t leader_budget_ = 0;
    Rational follower_budget_;
};

Instance validate_instance(const InstanceCandidate& raw);

/// A leader strategy. `integral` promises that every weight is an integer.
struct WeightVector {
    std::vector<Rational> weights;
    bool integral = false;

    static WeightVector from_integers(std::span<const std::int64_t> w);
    std::size_t size() const { return weights.size(); }
    Rational sum() const;
    std::vector<std::int64_t> as_integers() const;
};

/// Throws ValidationError unless |w| = n, w_i >= 0, sum(w) <= W^l and the
/// integral flag is truthful.
void check_weights(const Instance& inst, const WeightVector& w);

struct FollowerResult {
    Rational value;
    std::vector<Rational> allocation;
};

struct Breakpoint {
    Rational capacity;
    Rational payoff;
};

/// The follower payoff U_w(W) as a function of capacity: concave,
/// non-decreasing, piecewise linear. Collinear pieces are merged, so
/// value-proportional weights give a single segment.
struct PiecewiseValueCurve {
    std::vector<Breakpoint> breakpoints;

    const Rational& base_value() const { return breakpoints.front().payoff; }
    const Rational& total_weight() const { return breakpoints.back().capacity; }
    const Rational& total_value() const { return breakpoints.back().payoff; }
    /// Slope of each segment, in order.
    std::vector<Rational> slopes() const;
};

/// w_i = v_i W^l / sum(v).
WeightVector vp_weights(const Instance& inst);

/// Item indices by non-ascending v_i/w_i. Zero weights come first
/// (infinite ratio); ties go to the higher value, then the lower index.
std::vector<std::size_t> bb_order(std::span<const Rational> values, std::span<const Rational> weights);
std::vector<std::size_t> bb_order(const Instance& inst, const WeightVector& w);

/// Dantzig's greedy at capacity W^f.
FollowerResult follower_fractional(const Instance& inst, const WeightVector& w);
/// Dantzig's greedy at an arbitrary capacity.
FollowerResult follower_fractional(const Instance& inst, const WeightVector& w, const Rational& capacity);

PiecewiseValueCurve build_curve(std::span<const Rational> values, std::span<const Rational> weights);
PiecewiseValueCurve build_curve(const Instance& inst, const WeightVector& w);

/// Capacities past the last breakpoint clamp to the total value.
Rational eval_curve(const PiecewiseValueCurve& curve, const Rational& capacity);

/// U_w(capacity) for integer weights without materializing a curve.
Rational fractional_payoff(std::span<const Rational> values, std::span<const std::int64_t> weights,
                           const Rational& capacity);

/// Exact 0-1 knapsack at capacity floor(W^f) by dynamic programming over
/// capacity. Among optimal subsets returns the lexicographically smallest
/// 0/1 vector.
FollowerResult follower_01(const Instance& inst, const WeightVector& w);

/// Optimal 0-1 value only. Values may be rational; they are scaled to a
/// common denominator internally.
Rational knapsack_01_value(std::span<const Rational> values, std::span<const std::int64_t> weights,
                           std::int64_t capacity);

/// Upper bound on the integer-weight optimum:
/// (sum(v) W^f / W^l) * (1 + (n-1)/W^f).
Rational prop2_bound(const Instance& inst);

}  // namespace advknap
