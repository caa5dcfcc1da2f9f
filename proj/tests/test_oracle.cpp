#include "support.hpp"

#include <gtest/gtest.h>

using namespace tc_test;

TEST(Toughness, Examples)
{
    ToughnessReport c4 = toughness(gen::cycle(4));
    ASSERT_FALSE(c4.infinite);
    EXPECT_EQ(c4.value, Rational(1));
    EXPECT_EQ(c4.witness.size(), 2u);
    EXPECT_EQ(components_after_removal(gen::cycle(4), c4.witness), 2);
    ToughnessReport star = toughness(gen::complete_bipartite(1, 3));
    EXPECT_EQ(star.value, Rational(1, 3));
    EXPECT_EQ(star.witness, (VertexSet{0}));
    EXPECT_TRUE(toughness(gen::complete(6)).infinite);
    EXPECT_EQ(toughness(gen::cycle(4)).variant, "classic");
    EXPECT_EQ(strong_toughness(gen::cycle(4), 2).variant, "m-strong");
}

TEST(Toughness, CapIsEnforced)
{
    EXPECT_THROW(toughness(gen::cycle(20), 14), PreconditionError);
}

TEST(Hypothesis, WalkFamilyExamples)
{
    HypothesisParams p;
    p.f.assign(4, 2);
    HypothesisVerdict star = check_hypothesis(gen::complete_bipartite(1, 3), Family::walk, p);
    ASSERT_FALSE(star.holds);
    EXPECT_EQ(star.violation->S, (VertexSet{0}));
    EXPECT_TRUE(check_hypothesis(gen::cycle(4), Family::walk, p).holds);
}

TEST(Hypothesis, EmptySetRowIsTheBaseCase)
{
    Multigraph g = make(4, {{0, 1}, {2, 3}});
    HypothesisParams p;
    p.eta.assign(4, Rational(3));
    p.lambda = Rational(1, 2);
    HypothesisRow row = evaluate_hypothesis(g, Family::improvement, p, {});
    EXPECT_EQ(row.lhs, Rational(2));
    EXPECT_EQ(row.rhs, Rational(2) - Rational(1, 2));
    EXPECT_FALSE(row.holds);
}

TEST(Hypothesis, FirstViolationInLexicographicOrder)
{
    Multigraph g = gen::complete_bipartite(2, 4);
    HypothesisParams p;
    p.f.assign(6, 2);
    HypothesisVerdict v = check_hypothesis(g, Family::walk, p);
    ASSERT_FALSE(v.holds);
    for (const VertexSet& s : all_subsets(6)) {
        if (!evaluate_hypothesis(g, Family::walk, p, s).holds) {
            EXPECT_EQ(v.violation->S, s);
            break;
        }
    }
}

TEST(Extremal, Examples)
{
    ExtremalSet k4 = extremal_set(gen::complete(4), 2);
    EXPECT_EQ(k4.value, Rational(1));
    EXPECT_TRUE(k4.structure_holds);
    ExtremalSet c5 = extremal_set(gen::cycle(5), 2);
    EXPECT_EQ(c5.value, Rational(5, 2));
    EXPECT_TRUE(c5.S.empty());
    ExtremalSet one = extremal_set(Multigraph(1), 3);
    EXPECT_TRUE(one.S.empty());
    EXPECT_EQ(one.value, Rational(1));
}

TEST(OracleProperties, ExtremalSetStructure)
{
    for (int seed = 1; seed <= 60; ++seed) {
        auto rng = rng_for(seed, 71);
        int n = uniform(rng, 1, 9);
        Multigraph g = random_connected_multigraph(rng, n, uniform(rng, 0, 2 * n));
        int m = uniform(rng, 1, 3);
        ExtremalSet x = extremal_set(g, m);
        ASSERT_TRUE(x.structure_holds) << "seed " << seed;
        for (const VertexSet& s : all_subsets(n))
            ASSERT_LE(omega_after_removal(g, s, m) - Rational(static_cast<int>(s.size()), m), x.value);
    }
}

TEST(OracleProperties, StrongToughnessBelowToughness)
{
    int compared = 0;
    for (int seed = 1; seed <= 80; ++seed) {
        auto rng = rng_for(seed, 72);
        int n = uniform(rng, 3, 10);
        Multigraph g = random_connected_multigraph(rng, n, uniform(rng, 0, 2 * n));
        ToughnessReport t = toughness(g);
        for (int m = 1; m <= 3; ++m) {
            ToughnessReport s = strong_toughness(g, m);
            if (m == 1) {
                ASSERT_EQ(s.infinite, t.infinite);
                if (!t.infinite) {
                    ASSERT_EQ(s.value, t.value);
                }
            }
            if (t.infinite || s.infinite) continue;
            ASSERT_LE(s.value, t.value) << "seed " << seed;
            ++compared;
        }
        for (const VertexSet& s : all_subsets(n))
            for (int m = 1; m < 3; ++m) ASSERT_LE(omega_after_removal(g, s, m), omega_after_removal(g, s, m + 1));
    }
    EXPECT_GT(compared, 100);
}

TEST(OracleProperties, ToughGraphsAreStronglyTough)
{
    // order >= 6 and toughness >= 5 at n <= 8: complete graphs and near-complete ones
    int checked = 0;
    for (int n = 6; n <= 8; ++n) {
        for (const Multigraph& g : {gen::complete(n), gen::cocktail_party(n / 2)}) {
            ToughnessReport t = toughness(g);
            if (!t.infinite && t.value < Rational(5)) continue;
            ToughnessReport s = strong_toughness(g, 2);
            ASSERT_TRUE(s.infinite || s.value >= Rational(2));
            ++checked;
        }
    }
    EXPECT_GE(checked, 3);
}
