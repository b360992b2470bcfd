#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advknap/core.hpp"

namespace advknap {

enum class Method { RR, BBup, BBdown, BBplus, GDf2c, GDc2f, GDplus };

/// Canonical tags: RR, BBup, BBdown, BB+, GDf2c, GDc2f, GD+.
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view tag);
const std::vector<Method>& all_methods();

/// An integral leader strategy spending the whole budget, with the
/// fractional follower's payoff U_w(W^f) under it.
struct HeuristicOutcome {
    WeightVector weights;
    Rational follower_value;
    Method method;
};

/// Random rounding of the VP weights: floors, then a uniformly random subset
/// of the fractional items is rounded up so that the budget is spent exactly.
HeuristicOutcome rr_round(const Instance& inst, std::uint64_t seed);

/// Builds U_w bottom-up: each stage fixes the item whose floor weight, taken
/// as the first piece, gives the lowest one-segment payoff estimate.
HeuristicOutcome bb_up(const Instance& inst);
/// Mirror of bb_up: fixes top pieces with ceiling weights.
HeuristicOutcome bb_down(const Instance& inst);
HeuristicOutcome bb_plus(const Instance& inst);

/// Greedy surplus distribution from the VP floors, one unit at a time.
HeuristicOutcome gd_f2c(const Instance& inst);
/// Greedy deficit removal from the VP ceilings, one unit at a time.
HeuristicOutcome gd_c2f(const Instance& inst);
HeuristicOutcome gd_plus(const Instance& inst);

/// Dispatch by tag. `seed` is only used by RR.
HeuristicOutcome run_heuristic(Method m, const Instance& inst, std::uint64_t seed = 0);

/// Per-item floor and ceiling of the VP weights.
std::vector<std::int64_t> vp_floors(const Instance& inst);
std::vector<std::int64_t> vp_ceilings(const Instance& inst);

/// Rounds `target` (non-negative, summing to the integer `total`) to integers
/// with the same sum: floors first, remaining units to the largest fractional
/// parts, ties to the lower index.
std::vector<std::int64_t> largest_remainder(const std::vector<Rational>& target, std::int64_t total);

}  // namespace advknap
