#include "advknap/milp.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

#include <fmt/format.h>

namespace advknap {

namespace {

std::string lp_number(const Rational& r) {
    if (r.is_integer()) return r.str();
    // Exact when the denominator divides a power of ten, otherwise the
    // shortest double that round-trips.
    std::int64_t d = r.den();
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    if (d == 1) {
        std::string s = r.decimal(18);
        while (s.back() == '0') s.pop_back();
        return s;
    }
    return fmt::format("{}", r.to_double());
}

std::string lp_expression(const MilpModel& model, const std::vector<Term>& terms) {
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (t.coef == 0) continue;
        Rational mag = t.coef < 0 ? -t.coef : t.coef;
        if (first)
            out += t.coef < 0 ? "- " : "";
        else
            out += t.coef < 0 ? " - " : " + ";
        if (mag != 1) out += lp_number(mag) + " ";
        out += model.variables[t.var].name;
        first = false;
    }
    return first ? "0 " + model.variables[model.objective_var].name : out;
}

std::string_view sense_text(Sense s) {
    switch (s) {
        case Sense::LessEq: return "<=";
        case Sense::GreaterEq: return ">=";
        case Sense::Equal: return "=";
    }
    return "?";
}

bool row_holds(const Rational& lhs, Sense s, const Rational& rhs) {
    switch (s) {
        case Sense::LessEq: return lhs <= rhs;
        case Sense::GreaterEq: return lhs >= rhs;
        case Sense::Equal: return lhs == rhs;
    }
    return false;
}

struct Neighbor {
    Rational weight;
    Rational value;
};

// y_jk: x with item j dropped and item k added.
template <class Weight>
Neighbor neighbor(const Instance& inst, const std::vector<Weight>& w, const std::vector<int>& x, std::size_t j,
                  std::size_t k) {
    Neighbor nb;
    for (std::size_t i = 0; i < x.size(); ++i) {
        bool in = i == k || (i != j && x[i] == 1);
        if (!in) continue;
        nb.weight += Rational(w[i]);
        nb.value += inst.value(i);
    }
    return nb;
}

}  // namespace

MilpParams default_milp_params(const Instance& inst) {
    MilpParams p;
    p.k = bounds_01(inst).k;
    p.big_m1 = inst.follower_budget() + 1;
    p.big_m2 = inst.total_value();
    p.eps = 1;
    return p;
}

std::size_t milp_variable_count(std::size_t n) { return 3 * n + 2 * n * (n - 1) + 1; }

std::size_t milp_constraint_count(std::size_t n) { return 4 + 3 * n * (n - 1) + 3 * n; }

MilpModel build_milp(const Instance& inst, const MilpParams& params) {
    const std::size_t n = inst.size();
    const Rational& wf = inst.follower_budget();
    const Rational wl(inst.leader_budget());

    if (params.k < 0 || params.k > static_cast<std::int64_t>(n))
        throw ValidationError(fmt::format("cardinality k={} outside [0, {}]", params.k, n));
    if (params.eps <= 0) throw ValidationError("eps must be positive");
    if (params.big_m1 < wf + std::max(Rational(1), params.eps))
        throw ValidationError(fmt::format("M1={} is below W^f + max(1, eps)", params.big_m1.str()));
    if (params.big_m2 < inst.total_value())
        throw ValidationError(fmt::format("M2={} is below the total value", params.big_m2.str()));

    MilpModel m{inst, params, {}, {}, 0};
    for (std::size_t i = 0; i < n; ++i) m.variables.push_back({fmt::format("w{}", i + 1), VarKind::Integer, 0, wl});
    for (std::size_t i = 0; i < n; ++i) m.variables.push_back({fmt::format("x{}", i + 1), VarKind::Binary, 0, 1});
    for (std::size_t i = 0; i < n; ++i)
        m.variables.push_back({fmt::format("z{}", i + 1), VarKind::Continuous, 0, wl});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            m.variables.push_back({fmt::format("a_{}_{}", j + 1, k + 1), VarKind::Binary, 0, 1});
            m.variables.push_back({fmt::format("b_{}_{}", j + 1, k + 1), VarKind::Binary, 0, 1});
        }
    m.objective_var = m.variables.size();
    m.variables.push_back({"V", VarKind::Continuous, 0, std::nullopt});

    auto add = [&](RowRole role, std::vector<Term> terms, Sense sense, Rational rhs) {
        m.constraints.push_back(
            {fmt::format("c{}", m.constraints.size() + 1), role, std::move(terms), sense, std::move(rhs)});
    };

    std::vector<Term> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back({m.w(i), 1});
    add(RowRole::Budget, row, Sense::LessEq, wl);

    row.clear();
    for (std::size_t i = 0; i < n; ++i) row.push_back({m.z(i), 1});
    add(RowRole::Capacity, row, Sense::LessEq, wf);

    row.clear();
    for (std::size_t i = 0; i < n; ++i) row.push_back({m.x(i), inst.value(i)});
    row.push_back({m.v(), -1});
    add(RowRole::Value, row, Sense::LessEq, 0);

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            row.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (i != j && i != k) row.push_back({m.z(i), 1});
            row.push_back({m.w(k), 1});
            row.push_back({m.a(j, k), params.big_m1});
            add(RowRole::NeighborCapacity, row, Sense::GreaterEq, wf + params.eps);

            row.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (i != j && i != k) row.push_back({m.x(i), inst.value(i)});
            row.push_back({m.v(), -1});
            row.push_back({m.b(j, k), -params.big_m2});
            add(RowRole::NeighborValue, row, Sense::LessEq, -inst.value(k));

            add(RowRole::Indicator, {{m.a(j, k), 1}, {m.b(j, k), 1}}, Sense::LessEq, 1);
        }

    row.clear();
    for (std::size_t i = 0; i < n; ++i) row.push_back({m.x(i), 1});
    add(RowRole::Cardinality, row, Sense::Equal, params.k);

    for (std::size_t i = 0; i < n; ++i) {
        add(RowRole::Product, {{m.z(i), 1}, {m.x(i), -wl}}, Sense::LessEq, 0);
        add(RowRole::Product, {{m.z(i), 1}, {m.w(i), -1}}, Sense::LessEq, 0);
        add(RowRole::Product, {{m.z(i), 1}, {m.w(i), -1}, {m.x(i), -wl}}, Sense::GreaterEq, -wl);
    }
    return m;
}

std::string emit_lp(const MilpModel& model) {
    std::ostringstream os;
    const auto& p = model.params;
    os << "\\ Adversarial knapsack: minimize the follower value against a local maximum\n";
    os << "\\ n=" << model.n() << " k=" << p.k << " M1=" << lp_number(p.big_m1) << " M2=" << lp_number(p.big_m2)
       << " eps=" << lp_number(p.eps) << "\n";
    os << "Minimize\n obj: " << model.variables[model.objective_var].name << "\n";
    os << "Subject To\n";
    for (const auto& c : model.constraints)
        os << " " << c.name << ": " << lp_expression(model, c.terms) << " " << sense_text(c.sense) << " "
           << lp_number(c.rhs) << "\n";

    os << "Bounds\n";
    for (const auto& v : model.variables) {
        if (v.kind == VarKind::Binary) continue;
        if (v.upper)
            os << " " << lp_number(v.lower) << " <= " << v.name << " <= " << lp_number(*v.upper) << "\n";
        else
            os << " " << v.name << " >= " << lp_number(v.lower) << "\n";
    }

    auto section = [&](const char* title, VarKind kind) {
        std::vector<std::string> names;
        for (const auto& v : model.variables)
            if (v.kind == kind) names.push_back(v.name);
        if (names.empty()) return;
        os << title << "\n";
        for (const auto& name : names) os << " " << name << "\n";
    };
    section("Generals", VarKind::Integer);
    section("Binaries", VarKind::Binary);
    os << "End\n";
    return os.str();
}

Assignment canonical_assignment(const MilpModel& model, const std::vector<std::int64_t>& w,
                                const std::vector<int>& x, const Rational& objective) {
    const std::size_t n = model.n();
    if (w.size() != n || x.size() != n) throw ValidationError("assignment size does not match the model");
    Assignment out;
    for (std::size_t i = 0; i < n; ++i) {
        out[model.variables[model.w(i)].name] = w[i];
        out[model.variables[model.x(i)].name] = x[i];
        out[model.variables[model.z(i)].name] = x[i] == 1 ? w[i] : 0;
    }
    const Rational threshold = model.instance.follower_budget() + model.params.eps;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            Neighbor nb = neighbor(model.instance, w, x, j, k);
            out[model.variables[model.a(j, k)].name] = nb.weight < threshold ? 1 : 0;
            out[model.variables[model.b(j, k)].name] = nb.value > objective ? 1 : 0;
        }
    out[model.variables[model.v()].name] = objective;
    return out;
}

CheckReport check_assignment(const MilpModel& model, const Assignment& assignment) {
    std::vector<Rational> value(model.variables.size());
    for (std::size_t i = 0; i < model.variables.size(); ++i) {
        auto it = assignment.find(model.variables[i].name);
        if (it == assignment.end()) throw ValidationError("missing variable " + model.variables[i].name);
        value[i] = it->second;
    }

    CheckReport report;
    for (std::size_t i = 0; i < model.variables.size(); ++i) {
        const auto& var = model.variables[i];
        if (value[i] < var.lower || (var.upper && value[i] > *var.upper)) report.violations.push_back("bound:" + var.name);
        if (var.kind != VarKind::Continuous && !value[i].is_integer())
            report.violations.push_back("domain:" + var.name);
    }
    for (const auto& c : model.constraints) {
        Rational lhs;
        for (const auto& t : c.terms) lhs += t.coef * value[t.var];
        if (!row_holds(lhs, c.sense, c.rhs)) report.violations.push_back(c.name);
    }
    report.feasible = report.violations.empty();

    // Semantic side, on w and x as given (rounded to integers where needed).
    const std::size_t n = model.n();
    const Instance& inst = model.instance;
    std::vector<Rational> w(n);
    std::vector<int> x(n);
    Rational x_value;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = value[model.w(i)];
        x[i] = value[model.x(i)] >= Rational(1, 2) ? 1 : 0;
        if (x[i] == 1) x_value += inst.value(i);
    }
    const Rational& objective = value[model.v()];
    const Rational threshold = inst.follower_budget() + model.params.eps;
    report.locally_optimal = true;
    report.indicators_satisfiable = true;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            Neighbor nb = neighbor(inst, w, x, j, k);
            if (nb.weight <= inst.follower_budget() && nb.value > x_value) report.locally_optimal = false;
            if (nb.weight < threshold && nb.value > objective) report.indicators_satisfiable = false;
        }
    return report;
}

LocalMaxSolution local_max_oracle(const Instance& inst, std::int64_t k, std::uint64_t cap) {
    const std::size_t n = inst.size();
    if (k < 0 || k > static_cast<std::int64_t>(n)) throw ValidationError(fmt::format("cardinality k={} outside [0, {}]", k, n));
    if (n > 20) throw CapExceeded("instance too large for exact oracle: local-max enumeration needs n <= 20");

    // k-subsets as bitmasks, ascending so that lexicographic 0/1 order is
    // handled by the explicit tie-break below.
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == static_cast<int>(k)) subsets.push_back(mask);

    const std::uint64_t weight_count = composition_count(inst.leader_budget(), n + 1);
    const std::uint64_t total = weight_count > cap / std::max<std::uint64_t>(subsets.size(), 1)
                                    ? cap + 1
                                    : weight_count * subsets.size();
    if (total > cap)
        throw CapExceeded(fmt::format("instance too large for exact oracle: more than {} (w, x) pairs", cap));

    const Rational& wf = inst.follower_budget();
    std::optional<Rational> best;
    std::vector<std::int64_t> best_w;
    std::vector<int> best_x;
    bool best_local = false;

    std::vector<int> x(n);
    for_each_composition(inst.leader_budget(), n + 1, [&](const std::vector<std::int64_t>& padded) {
        std::vector<std::int64_t> w(padded.begin(), padded.end() - 1);
        for (std::uint32_t mask : subsets) {
            Rational weight, value;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<int>((mask >> i) & 1u);
                if (x[i]) {
                    weight += w[i];
                    value += inst.value(i);
                }
            }
            if (weight > wf) continue;
            Rational objective = value;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t kk = 0; kk < n; ++kk) {
                    if (j == kk) continue;
                    Neighbor nb = neighbor(inst, w, x, j, kk);
                    if (nb.weight <= wf) objective = std::max(objective, nb.value);
                }
            bool take = !best || objective < *best ||
                        (objective == *best && (w < best_w || (w == best_w && x < best_x)));
            if (take) {
                best = objective;
                best_w = w;
                best_x = x;
                best_local = objective == value;
            }
        }
    });

    LocalMaxSolution out;
    out.solution = {WeightVector::from_integers(best_w), *best, "local_max_oracle", total};
    out.selection = best_x;
    out.locally_optimal = best_local;
    return out;
}

}  // namespace advknap
