#include "support.hpp"

#include <gtest/gtest.h>

using namespace tc_test;

namespace {

EdgeList hamiltonian_cycle_of_complete(const Multigraph& k)
{
    int n = k.vertex_count();
    EdgeList out;
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        Edge ed = k.edge(e);
        int gap = (ed.v - ed.u + n) % n;
        if (gap == 1 || gap == n - 1) out.push_back(e);
    }
    return out;
}

}  // namespace

TEST(ExtendFactor, TrivialFactorGivesTree)
{
    Multigraph g = gen::complete(5);
    SpanningSubgraph f(g);
    SpanningSubgraph t(g, {0, 1, 2, 3});
    ASSERT_TRUE(is_spanning_tree(t));
    Extension x = extend_factor_to_connected(f, t);
    EXPECT_EQ(x.edges, t.edges());
    EXPECT_TRUE(x.matching.empty());
}

TEST(ExtendFactor, FourCycleMatchingAndPath)
{
    Multigraph g = gen::cycle(4);
    SpanningSubgraph f(g, {0, 2});
    SpanningSubgraph t(g, {0, 1, 2});
    Extension x = extend_factor_to_connected(f, t);
    EXPECT_TRUE(extension_valid(f, t, x.matching, SpanningSubgraph(g, x.edges)));
}

TEST(ExtendFactor, HamiltonianFactorOfCompleteFour)
{
    Multigraph g = gen::complete(4);
    SpanningSubgraph f(g, hamiltonian_cycle_of_complete(g));
    for (EdgeId root = 0; root < 3; ++root) {
        SpanningSubgraph t(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (g.edge(e).u == 0 || g.edge(e).v == 0) t.insert(e);
        Extension x = extend_factor_to_connected(f, t);
        SpanningSubgraph h(g, x.edges);
        EXPECT_TRUE(extension_valid(f, t, x.matching, h));
        for (Vertex v = 0; v < 4; ++v) {
            EXPECT_GE(h.degree(v), f.degree(v));
            EXPECT_LE(h.degree(v), t.degree(v) + 1);
        }
    }
}

TEST(ExtendFactor, RandomFactorsAgainstExhaustiveSearch)
{
    for (int seed = 1; seed <= 150; ++seed) {
        auto rng = rng_for(seed, 61);
        int n = uniform(rng, 2, 8);
        Multigraph g = random_connected_multigraph(rng, n, uniform(rng, 0, n));
        SpanningSubgraph f(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (uniform(rng, 0, 2) == 0) f.insert(e);
        SpanningSubgraph t(g, suite_detail::random_spanning_tree(g, rng));
        Extension x = extend_factor_to_connected(f, t);
        ASSERT_TRUE(extension_valid(f, t, x.matching, SpanningSubgraph(g, x.edges))) << "seed " << seed;
        ASSERT_TRUE(detail::exhaustive_extension(f, t, x.matching).has_value()) << "seed " << seed;
    }
}

TEST(ConnectedFactor, ConnectedFactorStaysWithinBounds)
{
    Multigraph g = gen::complete(6);
    EdgeList ham = hamiltonian_cycle_of_complete(g);
    FactorResult r = connected_factor_from_condition(g, ham, std::vector<int>(6, 2));
    ASSERT_EQ(r.status, Outcome::solution);
    SpanningSubgraph h(g, r.edges);
    EXPECT_EQ(count_components(h), 1);
    for (Vertex v = 0; v < 6; ++v) {
        EXPECT_GE(h.degree(v), 1);
        EXPECT_LE(h.degree(v), 2 + 2 - 1);
    }
}

TEST(ConnectedFactor, ClawFreeAndRegularRoutes)
{
    int built = 0;
    for (int seed = 1; seed <= 20; ++seed) {
        Instance cf = generate("claw-free", {{"n", 5 + seed % 3}}, seed);
        Instance reg = generate("k-edge-connected", {{"n", 8 + 2 * (seed % 2)}, {"k", 2}, {"r", 4}}, seed);
        for (auto [inst, f_value] : {std::pair{&cf, 3}, std::pair{&reg, 3}}) {
            const Multigraph& g = inst->graph;
            if (g.vertex_count() > 12) continue;
            auto factor = factor_fixture(g, 1);
            if (!factor) continue;
            SpanningSubgraph fs(g, *factor);
            FactorResult r = connected_factor_from_condition(g, *factor, std::vector<int>(g.vertex_count(), f_value));
            ASSERT_EQ(r.status, Outcome::solution) << "seed " << seed;
            SpanningSubgraph h(g, r.edges);
            ASSERT_EQ(count_components(h), 1);
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                ASSERT_GE(h.degree(v), 1);
                ASSERT_LE(h.degree(v), fs.degree(v) + f_value - 1);
            }
            ++built;
        }
    }
    EXPECT_GT(built, 20);
}

TEST(PlusOne, TreeConnectedFactorIsKept)
{
    Multigraph g = gen::complete(5);
    EdgeList all;
    for (EdgeId e = 0; e < g.edge_count(); ++e) all.push_back(e);
    FactorResult r = plus_one_extension(g, all, 2, 5);
    ASSERT_EQ(r.status, Outcome::solution);
    EXPECT_EQ(r.edges, all);
}

TEST(PlusOne, TwoFactorBecomesConnectedTwoThreeFactor)
{
    Multigraph g = gen::complete(8);
    auto factor = factor_fixture(g, 2);
    ASSERT_TRUE(factor.has_value());
    for (std::optional<Vertex> u : {std::optional<Vertex>{}, std::optional<Vertex>{3}}) {
        FactorResult r = plus_one_extension(g, *factor, 1, 3, u);
        ASSERT_EQ(r.status, Outcome::solution);
        SpanningSubgraph h(g, r.edges);
        EXPECT_TRUE(is_m_tree_connected(h, 1));
        for (Vertex v = 0; v < 8; ++v) {
            EXPECT_GE(h.degree(v), 2);
            EXPECT_LE(h.degree(v), 3);
        }
        if (u) {
            EXPECT_EQ(h.degree(*u), 2);
        }
    }
}

TEST(PlusOne, TwoTreeConnectedFromFourFactor)
{
    Multigraph g = gen::complete(10);
    auto factor = factor_fixture(g, 4);
    ASSERT_TRUE(factor.has_value());
    FactorResult r = plus_one_extension(g, *factor, 2, 5);
    ASSERT_EQ(r.status, Outcome::solution) << r.note;
    SpanningSubgraph h(g, r.edges);
    EXPECT_TRUE(is_m_tree_connected(h, 2));
    for (Vertex v = 0; v < 10; ++v) EXPECT_LE(h.degree(v), 5);
}

TEST(PlusOne, RejectsSmallComponents)
{
    Multigraph g = gen::complete(6);
    EXPECT_THROW(plus_one_extension(g, {0}, 1, 3), PreconditionError);
    EXPECT_THROW(plus_one_extension(g, {}, 2, 4), PreconditionError);
}

TEST(TwoEdgeConnected, DoublingRecipe)
{
    Multigraph g = gen::complete(8);
    FactorResult r = two_edge_connected_extension(g, hamiltonian_cycle_of_complete(g), 5);
    ASSERT_EQ(r.status, Outcome::solution) << r.note;
    SpanningSubgraph h(g, r.edges);
    EXPECT_GE(edge_connectivity(as_graph(h).graph), 2);
    for (Vertex v = 0; v < 8; ++v) {
        EXPECT_GE(h.degree(v), 2);
        EXPECT_LE(h.degree(v), 3);
    }
}

TEST(LargeDegree, EvenSubgraphOfEulerianGraph)
{
    Multigraph g = gen::complete(9);
    FactorResult r = large_degree_parity_subgraph(g, 2, 2, LargeDegreeKind::tree, {});
    ASSERT_EQ(r.status, Outcome::solution);
    SpanningSubgraph h(g, r.edges);
    EXPECT_TRUE(is_m_tree_connected(h, 2));
    for (Vertex v = 0; v < 9; ++v) {
        EXPECT_EQ(h.degree(v) % 2, 0);
        EXPECT_GE(h.degree(v), 8 - 3);
    }
}

TEST(LargeDegree, OddSubgraphOfEdgeConnectedGraph)
{
    Multigraph g = gen::complete(8);
    FactorResult r = large_degree_parity_subgraph(g, 1, 2, LargeDegreeKind::edge, brute::all_vertices(8));
    ASSERT_EQ(r.status, Outcome::solution) << r.note;
    SpanningSubgraph h(g, r.edges);
    EXPECT_TRUE(is_m_tree_connected(h, 1));
    for (Vertex v = 0; v < 8; ++v) {
        EXPECT_EQ(h.degree(v) % 2, 1);
        EXPECT_GE(h.degree(v), 7 - 2 - 1);
    }
}

TEST(LargeDegree, RejectsWeakGraphs)
{
    EXPECT_THROW(large_degree_parity_subgraph(gen::cycle(6), 1, 1, LargeDegreeKind::tree, {}), PreconditionError);
    EXPECT_THROW(large_degree_parity_subgraph(gen::complete(6), 1, 1, LargeDegreeKind::tree, {0}), PreconditionError);
}

TEST(TwoFourFactor, Examples)
{
    Multigraph k5 = gen::complete(5);
    FactorResult a = connected_24_factor(k5);
    ASSERT_EQ(a.status, Outcome::solution);
    FactorResult b = connected_24_factor(gen::cycle(6));
    ASSERT_EQ(b.status, Outcome::certificate);
    EXPECT_TRUE(b.deficient.has_value());
    Multigraph k4 = gen::complete(4);
    FactorResult c = connected_24_factor(k4);
    ASSERT_EQ(c.status, Outcome::solution);
    EXPECT_EQ(c.edges.size(), 4u);
}

TEST(TwoFourFactor, OutputsHaveDegreesTwoOrFour)
{
    for (int seed = 1; seed <= 40; ++seed) {
        Instance inst = generate("dense", {{"n", 6 + seed % 5}, {"missing", seed % 7}}, seed);
        const Multigraph& g = inst.graph;
        FactorResult r = connected_24_factor(g);
        if (r.status != Outcome::solution) continue;
        SpanningSubgraph h(g, r.edges);
        ASSERT_EQ(count_components(h), 1);
        for (Vertex v = 0; v < g.vertex_count(); ++v) ASSERT_TRUE(h.degree(v) == 2 || h.degree(v) == 4);
    }
}
