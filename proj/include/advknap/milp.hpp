#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "advknap/core.hpp"
#include "advknap/exact.hpp"

namespace advknap {

// MILP for minimizing the follower's value against a swap-local maximum of
// cardinality k. The neighbor y_jk of x drops item j and adds item k; with
// x fixed, sum_i w_i y_jki = sum_i z_i - z_j - z_k + w_k, where z_i = w_i x_i
// is linearized by the standard product envelope.

enum class VarKind { Integer, Binary, Continuous };

struct Variable {
    std::string name;
    VarKind kind;
    Rational lower;
    std::optional<Rational> upper;
};

struct Term {
    std::size_t var;
    Rational coef;
};

enum class Sense { LessEq, GreaterEq, Equal };

enum class RowRole { Budget, Capacity, Value, NeighborCapacity, NeighborValue, Indicator, Cardinality, Product };

struct Constraint {
    std::string name;
    RowRole role;
    std::vector<Term> terms;
    Sense sense;
    Rational rhs;
};

struct MilpParams {
    std::int64_t k = 0;
    Rational big_m1;
    Rational big_m2;
    Rational eps{1};
};

/// k = floor(n W^f / W^l), M1 = W^f + 1, M2 = sum(v), eps = 1.
MilpParams default_milp_params(const Instance& inst);

struct MilpModel {
    Instance instance;
    MilpParams params;
    std::vector<Variable> variables;
    std::vector<Constraint> constraints;
    std::size_t objective_var = 0;

    std::size_t n() const { return instance.size(); }
    std::size_t w(std::size_t i) const { return i; }
    std::size_t x(std::size_t i) const { return n() + i; }
    std::size_t z(std::size_t i) const { return 2 * n() + i; }
    /// Ordered pair j != k, packed row-major with the diagonal skipped.
    std::size_t pair_index(std::size_t j, std::size_t k) const { return j * (n() - 1) + (k < j ? k : k - 1); }
    std::size_t a(std::size_t j, std::size_t k) const { return 3 * n() + 2 * pair_index(j, k); }
    std::size_t b(std::size_t j, std::size_t k) const { return a(j, k) + 1; }
    std::size_t v() const { return objective_var; }
};

/// 3n + 2n(n-1) + 1
std::size_t milp_variable_count(std::size_t n);
/// 4 + 3n(n-1) + 3n
std::size_t milp_constraint_count(std::size_t n);

MilpModel build_milp(const Instance& inst, const MilpParams& params);

/// CPLEX LP text: objective, rows c1.., bounds, generals, binaries.
/// Deterministic for a given model.
std::string emit_lp(const MilpModel& model);

/// Variable name -> value.
using Assignment = std::map<std::string, Rational>;

/// z = w x and the smallest indicator values consistent with w, x, V:
/// a_jk = 1 iff neighbor weight < W^f + eps, b_jk = 1 iff neighbor value > V.
Assignment canonical_assignment(const MilpModel& model, const std::vector<std::int64_t>& w,
                                const std::vector<int>& x, const Rational& objective);

struct CheckReport {
    /// Names of violated rows ("c7") and of violated bounds or domains
    /// ("bound:w1", "domain:a_1_2").
    std::vector<std::string> violations;
    bool feasible = false;
    /// No neighbor y_jk is affordable (weight <= W^f) with value above v(x).
    bool locally_optimal = false;
    /// Some choice of a, b satisfies rows (6)-(8) for the given w, x, V.
    bool indicators_satisfiable = false;
};

/// Throws ValidationError if any model variable is missing.
CheckReport check_assignment(const MilpModel& model, const Assignment& assignment);

struct LocalMaxSolution {
    BilevelSolution solution;
    std::vector<int> selection;
    bool locally_optimal = false;
};

/// Exact MILP optimum by enumeration: over integral w with sum(w) <= W^l and
/// affordable k-subsets x, minimizes V = max(v(x), value of every affordable
/// neighbor). Ties go to the lexicographically smallest (w, x).
LocalMaxSolution local_max_oracle(const Instance& inst, std::int64_t k, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace advknap
