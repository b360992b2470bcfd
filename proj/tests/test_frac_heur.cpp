#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "advknap/exact.hpp"
#include "advknap/frac_heur.hpp"
#include "oracles.hpp"

using namespace advknap;
using oracle::make_instance;

namespace {

using Ints = std::vector<std::int64_t>;

Ints weights_of(const HeuristicOutcome& h) { return h.weights.as_integers(); }

const std::vector<Method> kDeterministic = {Method::BBup,  Method::BBdown, Method::BBplus, Method::GDf2c,
                                            Method::GDc2f, Method::GDplus};

}  // namespace

TEST(Method, NamesRoundTrip) {
    for (Method m : all_methods()) EXPECT_EQ(parse_method(method_name(m)), m);
    EXPECT_EQ(method_name(Method::BBplus), "BB+");
    EXPECT_EQ(method_name(Method::GDplus), "GD+");
    EXPECT_FALSE(parse_method("bbup").has_value());
}

TEST(RandomRounding, TwoItemInstanceHitsBothRoundings) {
    Instance inst = make_instance({14, 26}, 4, 1);
    std::set<Ints> seen;
    for (std::uint64_t seed = 0; seed < 64; ++seed) seen.insert(weights_of(rr_round(inst, seed)));
    EXPECT_EQ(seen, (std::set<Ints>{{2, 2}, {1, 3}}));
}

TEST(RandomRounding, IntegralVpIsKept) {
    Instance inst = make_instance({1, 1, 1, 1}, 8, 3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_EQ(weights_of(rr_round(inst, seed)), (Ints{2, 2, 2, 2}));
}

TEST(RandomRounding, Deterministic) {
    Instance inst = make_instance({13, 7, 22, 5, 31, 9}, 17, 6);
    EXPECT_EQ(weights_of(rr_round(inst, 42)), weights_of(rr_round(inst, 42)));
}

TEST(BbUp, Examples) {
    auto a = bb_up(make_instance({14, 26}, 4, 1));
    EXPECT_EQ(weights_of(a), (Ints{1, 3}));
    EXPECT_EQ(a.follower_value, Rational(14));

    auto b = bb_up(make_instance({14, 26}, 4, 2));
    EXPECT_EQ(weights_of(b), (Ints{1, 3}));
    EXPECT_EQ(b.follower_value, Rational(68, 3));

    EXPECT_EQ(weights_of(bb_up(make_instance({9}, 7, 2))), (Ints{7}));
}

TEST(BbDown, Examples) {
    auto a = bb_down(make_instance({14, 26}, 4, 1));
    EXPECT_EQ(weights_of(a), (Ints{2, 2}));
    EXPECT_EQ(a.follower_value, Rational(13));

    EXPECT_EQ(weights_of(bb_down(make_instance({9}, 7, 2))), (Ints{7}));

    auto c = bb_down(make_instance({1, 1, 1, 1}, 8, 4));
    EXPECT_EQ(weights_of(c), (Ints{2, 2, 2, 2}));
    EXPECT_EQ(c.follower_value, Rational(2));
}

TEST(BbPlus, Examples) {
    EXPECT_EQ(bb_plus(make_instance({14, 26}, 4, 1)).follower_value, Rational(13));
    EXPECT_EQ(bb_plus(make_instance({14, 26}, 4, 2)).follower_value, Rational(68, 3));
    Instance sym = make_instance({3, 3, 3}, 6, 2);
    EXPECT_EQ(bb_plus(sym).follower_value, Rational(3));
}

TEST(GdF2c, Examples) {
    auto a = gd_f2c(make_instance({14, 26}, 4, 1));
    EXPECT_EQ(weights_of(a), (Ints{2, 2}));
    EXPECT_EQ(a.follower_value, Rational(13));
    auto b = gd_f2c(make_instance({14, 26}, 4, 2));
    EXPECT_EQ(weights_of(b), (Ints{1, 3}));
    EXPECT_EQ(b.follower_value, Rational(68, 3));
    EXPECT_EQ(weights_of(gd_f2c(make_instance({1, 1, 1, 1}, 8, 4))), (Ints{2, 2, 2, 2}));
}

TEST(GdC2f, Examples) {
    auto a = gd_c2f(make_instance({14, 26}, 4, 1));
    EXPECT_EQ(weights_of(a), (Ints{2, 2}));
    EXPECT_EQ(a.follower_value, Rational(13));
    EXPECT_EQ(weights_of(gd_c2f(make_instance({14, 26}, 4, 2))), (Ints{1, 3}));
    EXPECT_EQ(weights_of(gd_c2f(make_instance({1, 1, 1, 1}, 8, 4))), (Ints{2, 2, 2, 2}));
}

TEST(GdPlus, Examples) {
    EXPECT_EQ(gd_plus(make_instance({14, 26}, 4, 1)).follower_value, Rational(13));
    EXPECT_EQ(gd_plus(make_instance({14, 26}, 4, 2)).follower_value, Rational(68, 3));
    EXPECT_EQ(gd_plus(make_instance({3, 3, 3}, 6, 2)).follower_value, Rational(3));
}

TEST(LargestRemainder, TiesGoToLowerIndex) {
    EXPECT_EQ(largest_remainder({Rational(3, 2), Rational(3, 2), 1}, 4), (Ints{2, 1, 1}));
    EXPECT_EQ(largest_remainder({Rational(7, 5), Rational(13, 5)}, 4), (Ints{1, 3}));
}

TEST(Heuristics, InvariantsAndSandwich) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::draw(rng, 1, 5));
        const std::int64_t wl = oracle::draw(rng, 1, 12);
        Instance inst = make_instance(oracle::draw_values(rng, n, 1, 40), wl, Rational(oracle::draw(rng, 1, 4 * wl), 4));
        const Rational exact = oracle::game_frac(inst);
        const auto floors = vp_floors(inst);
        const auto ceils = vp_ceilings(inst);
        for (Method m : all_methods()) {
            auto h = run_heuristic(m, inst, static_cast<std::uint64_t>(trial));
            Ints w = weights_of(h);
            std::int64_t sum = 0;
            for (auto x : w) {
                EXPECT_GE(x, 0);
                sum += x;
            }
            EXPECT_EQ(sum, wl) << method_name(m);
            EXPECT_GE(h.follower_value, exact) << method_name(m);
            EXPECT_EQ(h.follower_value, follower_fractional(inst, h.weights).value);
            if (m == Method::RR || m == Method::GDf2c || m == Method::GDc2f || m == Method::GDplus)
                for (std::size_t i = 0; i < n; ++i) {
                    EXPECT_LE(floors[i], w[i]) << method_name(m);
                    EXPECT_LE(w[i], ceils[i]) << method_name(m);
                }
        }
        EXPECT_LE(bb_plus(inst).follower_value, std::min(bb_up(inst).follower_value, bb_down(inst).follower_value));
        EXPECT_LE(gd_plus(inst).follower_value, std::min(gd_f2c(inst).follower_value, gd_c2f(inst).follower_value));
    }
}

TEST(Heuristics, ValueScalingKeepsWeights) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::draw(rng, 2, 12));
        auto v = oracle::draw_values(rng, n, 1, 60);
        const std::int64_t c = oracle::draw(rng, 2, 7);
        Ints scaled;
        for (auto x : v) scaled.push_back(c * x);
        Instance a = make_instance(v, 50, oracle::draw(rng, 1, 49));
        Instance b = make_instance(scaled, 50, a.follower_budget());
        for (Method m : kDeterministic) {
            auto ha = run_heuristic(m, a);
            auto hb = run_heuristic(m, b);
            EXPECT_EQ(weights_of(ha), weights_of(hb)) << method_name(m);
            EXPECT_EQ(hb.follower_value, ha.follower_value * c) << method_name(m);
        }
    }
}

TEST(Heuristics, BenchScaleInstancesStayInBudget) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::draw(rng, 10, 20));
        Instance inst = make_instance(oracle::draw_values(rng, n, 1, 1500), 100, oracle::draw(rng, 1, 99));
        for (Method m : all_methods()) {
            auto h = run_heuristic(m, inst, 7);
            EXPECT_EQ(h.weights.sum(), Rational(100));
            EXPECT_TRUE(h.weights.integral);
        }
    }
}
