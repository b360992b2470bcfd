#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "advknap/core.hpp"

namespace advknap {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A leader strategy together with the follower's best-response payoff.
struct BilevelSolution {
    WeightVector weights;
    Rational objective;
    std::string method;
    std::uint64_t enumerated_count = 0;
};

struct BoundsReport {
    Rational lower;
    Rational upper;
    std::int64_t k = 0;
};

/// Number of ways to write `total` as an ordered sum of `parts` non-negative
/// integers, saturating at UINT64_MAX.
std::uint64_t composition_count(std::int64_t total, std::size_t parts);

/// Calls `visit` for every composition of `total` into `parts` non-negative
/// integers, in lexicographic order.
template <class Visit>
void for_each_composition(std::int64_t total, std::size_t parts, Visit&& visit) {
    std::vector<std::int64_t> c(parts, 0);
    if (parts == 0) return;
    c.back() = total;
    for (;;) {
        visit(static_cast<const std::vector<std::int64_t>&>(c));
        // Advance: find the rightmost position before the last that can grow.
        std::size_t j = parts - 1;
        while (j > 0 && c[j] == 0) --j;
        if (j == 0) return;
        // c[j] > 0: move one unit left to position j-1 and push the rest of
        // the tail back to the last slot.
        std::int64_t tail = c[j] - 1;
        c[j] = 0;
        ++c[j - 1];
        c.back() = tail;
    }
}

/// Minimum of U_w(W^f) over all integral w with sum(w) = W^l. Ties go to the
/// lexicographically smallest w. Throws CapExceeded if there are more than
/// `cap` candidate vectors.
BilevelSolution exact_frac_discrete(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

/// Minimum 0-1 follower payoff over all integral w with sum(w) = W^l.
///
/// With `use_structure`, only weight vectors that are non-decreasing in
/// (value, index) order, with equal-value items within one unit of each
/// other, are searched; one of them is always optimal. This brings the
/// 6-item (10,10,10,3,3,3) instance down to a few hundred candidates.
BilevelSolution exact_01(const Instance& inst, bool use_structure = false,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// k = floor(n W^f / W^l); lower = sum of the k smallest values, upper =
/// sum of the k largest.
BoundsReport bounds_01(const Instance& inst);

struct Table1Entry {
    Rational value;
    /// Distance in weight units from W^f to the nearest interval boundary
    /// b * W^l. The closed forms are stated for real-valued weights; the
    /// integer-weight optimum agrees once this is at least n - 1.
    Rational integer_margin;
};

/// Closed-form 0-1 optimum for tabulated (n, W^f/W^l) ranges, or nullopt
/// when the ratio falls outside every tabulated interval.
std::optional<Table1Entry> table1_value(const Instance& inst);

/// min |v(S) - v(S')| over all bipartitions, by subset-sum DP.
std::int64_t npp_discrepancy(const std::vector<std::int64_t>& values);

/// Game with W^l = sum(v) and W^f = W^l / 2; requires an even sum.
Instance npp_reduction_instance(const std::vector<std::int64_t>& values);

/// w_1 = W^l - (n-1)(W^f+1) on the smallest-value item, W^f+1 on the rest,
/// so only the cheapest item can ever fit. nullopt if w_1 would be negative.
std::optional<WeightVector> tightness_witness(const Instance& inst);

/// Where the integral optima of exact_frac_discrete sit relative to the
/// floor/ceiling box around the VP weights.
struct Lemma1Audit {
    Rational optimum;
    std::uint64_t optimal_count = 0;
    /// Some optimal w has floor(vp_i) <= w_i <= ceil(vp_i) for all i.
    bool some_optimum_in_box = false;
    /// Every optimal w lies in that box.
    bool all_optima_in_box = false;
};

Lemma1Audit lemma1_audit(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace advknap
