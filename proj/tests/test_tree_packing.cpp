#include "support.hpp"

#include <gtest/gtest.h>

using namespace tc_test;

namespace {

bool valid_packing(const Multigraph& g, const TreePacking& p, int m)
{
    if (static_cast<int>(p.trees.size()) != m) return false;
    std::vector<int> used(g.edge_count(), 0);
    for (const EdgeList& t : p.trees) {
        if (!is_spanning_tree(SpanningSubgraph(g, t)) || static_cast<int>(t.size()) != g.vertex_count() - 1) return false;
        for (EdgeId e : t)
            if (used[e]++) return false;
    }
    return true;
}

}  // namespace

TEST(PackTrees, SingleVertexPacksEmptyTrees)
{
    PackOutcome p = pack_trees(Multigraph(1), 3);
    ASSERT_TRUE(p.packed());
    ASSERT_EQ(p.packing->trees.size(), 3u);
    for (const EdgeList& t : p.packing->trees) EXPECT_TRUE(t.empty());
}

TEST(PackTrees, CompleteFourUsesAllEdges)
{
    Multigraph g = gen::complete(4);
    PackOutcome p = pack_trees(g, 2);
    ASSERT_TRUE(p.packed());
    EXPECT_TRUE(valid_packing(g, *p.packing, 2));
    EXPECT_EQ(p.packing->trees[0].size() + p.packing->trees[1].size(), 6u);
}

TEST(PackTrees, FiveCycleIsDeficient)
{
    PackOutcome p = pack_trees(gen::cycle(5), 2);
    ASSERT_FALSE(p.packed());
    EXPECT_EQ(p.deficient->partition.size(), 5);
    EXPECT_EQ(p.deficient->crossing, 5);
    EXPECT_LT(p.deficient->crossing, 2 * (p.deficient->partition.size() - 1));
}

TEST(TreeConnected, Examples)
{
    EXPECT_TRUE(is_m_tree_connected(gen::complete(4), 2));
    EXPECT_FALSE(is_m_tree_connected(gen::cycle(5), 2));
    EXPECT_TRUE(is_m_tree_connected(gen::path(6), 1));
}

TEST(Components, FirstLevelIsConnectedComponents)
{
    Multigraph g = make(6, {{0, 1}, {1, 2}, {3, 4}});
    ComponentDecomposition d = m_components(g, 1);
    EXPECT_EQ(d.partition.size(), 3);
    EXPECT_EQ(d.omega, Rational(3));
}

TEST(Components, FiveCycleSplitsIntoSingletons)
{
    ComponentDecomposition d = m_components(gen::cycle(5), 2);
    EXPECT_EQ(d.partition.size(), 5);
    EXPECT_EQ(d.omega, Rational(5, 2));
}

TEST(Components, TwoBlocksJoinedByOneEdge)
{
    std::vector<Edge> e;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) e.push_back({base + i, base + j});
    e.push_back({0, 4});
    ComponentDecomposition d = m_components(Multigraph(8, e), 2);
    EXPECT_EQ(d.partition.size(), 2);
    EXPECT_EQ(d.omega, Rational(3, 2));
}

TEST(Omega, NullGraphIsZero)
{
    EXPECT_EQ(omega_m(Multigraph::null_graph(), 3), Rational(0));
    EXPECT_EQ(omega_m(gen::cycle(5), 2), Rational(5, 2));
}

TEST(CriticalReduce, ForestUnchanged)
{
    Multigraph g = gen::path(5);
    SpanningSubgraph f = SpanningSubgraph::full(g);
    EXPECT_EQ(m_critical_reduce(f, 1), f);
}

TEST(CriticalReduce, CompleteFourUnchanged)
{
    Multigraph g = gen::complete(4);
    SpanningSubgraph f = SpanningSubgraph::full(g);
    EXPECT_EQ(m_critical_reduce(f, 2).size(), 6);
    EXPECT_TRUE(is_m_critical(f, 2));
}

TEST(CriticalReduce, ParallelEdgeRemoved)
{
    std::vector<Edge> e = gen::complete(4).edges();
    e.push_back(e[0]);
    Multigraph g(4, e);
    SpanningSubgraph r = m_critical_reduce(SpanningSubgraph::full(g), 2);
    EXPECT_EQ(r.size(), 6);
    EXPECT_TRUE(is_m_critical(r, 2));
    EXPECT_FALSE(is_m_critical(SpanningSubgraph::full(g), 2));
}

TEST(ExchangeEdge, PathChordReplacesMarkedEdge)
{
    Multigraph g = make(3, {{0, 1}, {1, 2}, {0, 2}});
    SpanningSubgraph h(g, {0, 1});
    EXPECT_EQ(exchange_edge(h, 1, {0}, 2), 0);
}

TEST(ExchangeEdge, TreeChordHitsFundamentalCycle)
{
    Multigraph g = gen::complete(4);
    EdgeList tree;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).u == 0 || g.edge(e).v == 0) tree.push_back(e);
    SpanningSubgraph h(g, tree);
    for (EdgeId chord = 0; chord < g.edge_count(); ++chord) {
        if (h.contains(chord)) continue;
        EdgeId out = exchange_edge(h, 1, tree, chord);
        SpanningSubgraph swapped = h;
        swapped.erase(out);
        swapped.insert(chord);
        EXPECT_TRUE(is_spanning_tree(swapped));
    }
}

TEST(ExchangeEdge, ParallelCopyReplacesItsTwin)
{
    std::vector<Edge> e = gen::complete(4).edges();
    e.push_back(e[0]);
    Multigraph g(4, e);
    SpanningSubgraph h(g, {0, 1, 2, 3, 4, 5});
    EXPECT_EQ(exchange_edge(h, 2, {0}, 6), 0);
}

TEST(ExchangeEdge, RejectsChordAlreadyInH)
{
    Multigraph g = gen::complete(4);
    SpanningSubgraph h = SpanningSubgraph::full(g);
    EXPECT_THROW(exchange_edge(h, 2, {0}, 1), std::invalid_argument);
}

TEST(PackingProperties, DualityAgainstPartitions)
{
    for (int seed = 1; seed <= 200; ++seed) {
        auto rng = rng_for(seed, 21);
        int n = uniform(rng, 1, 8);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 0, 3 * n));
        int best = brute::max_tree_packing(g);
        for (int m = 1; m <= 4; ++m) {
            PackOutcome p = pack_trees(g, m);
            ASSERT_EQ(p.packed(), best >= m) << "seed " << seed << " m " << m;
            if (p.packed()) {
                ASSERT_TRUE(valid_packing(g, *p.packing, m));
            } else {
                const auto& d = *p.deficient;
                ASSERT_EQ(d.crossing, crossing_edges(g, d.partition));
                ASSERT_LT(d.crossing, m * (d.partition.size() - 1));
            }
        }
    }
}

TEST(PackingProperties, OmegaChain)
{
    for (int seed = 1; seed <= 150; ++seed) {
        auto rng = rng_for(seed, 22);
        int n = uniform(rng, 1, 10);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 0, 3 * n));
        ASSERT_EQ(omega_m(g, 1), Rational(count_components(g)));
        Rational prev = 0;
        for (int m = 1; m <= 4; ++m) {
            Rational om = omega_m(g, m);
            ASSERT_GE(om, prev);
            ASSERT_LE(om, Rational(n));
            ASSERT_EQ(om == Rational(1), is_m_tree_connected(g, m)) << "seed " << seed;
            prev = om;
        }
    }
}

TEST(PackingProperties, EdgeDeletionRaisesOmegaByZeroOrOneOverM)
{
    for (int seed = 1; seed <= 60; ++seed) {
        auto rng = rng_for(seed, 23);
        int n = uniform(rng, 2, 9);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 1, 3 * n));
        for (int m = 1; m <= 3; ++m) {
            Rational base = omega_m(g, m);
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                Rational after = omega_m(edge_subgraph_if(g, [&](EdgeId x) { return x != e; }).graph, m);
                ASSERT_TRUE(after == base || after == base + Rational(1, m)) << "seed " << seed;
            }
        }
    }
}

TEST(PackingProperties, ComponentsMatchSubsetOracle)
{
    for (int seed = 1; seed <= 120; ++seed) {
        auto rng = rng_for(seed, 24);
        int n = uniform(rng, 1, 10);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 0, 3 * n));
        for (int m = 1; m <= 3; ++m) {
            auto expected = brute::m_component_labels(g, m);
            auto got = m_components(g, m).partition.labels(n);
            ASSERT_TRUE(suite_detail::same_partition(expected, got)) << "seed " << seed << " m " << m;
            ASSERT_EQ(omega_m(g, m), brute::omega_by_partitions(g, m));
        }
    }
}

TEST(PackingProperties, EnoughEdgesGiveNontrivialComponent)
{
    for (int seed = 1; seed <= 150; ++seed) {
        auto rng = rng_for(seed, 25);
        int n = uniform(rng, 2, 10);
        int m = uniform(rng, 1, 3);
        Multigraph g = random_multigraph(rng, n, m * (n - 1) + uniform(rng, 0, n));
        ComponentDecomposition d = m_components(g, m);
        bool big = false;
        for (const VertexSet& part : d.partition.parts) big = big || part.size() >= 2;
        ASSERT_TRUE(big) << "seed " << seed;
    }
}

TEST(PackingProperties, ExchangeKeepsTreeConnectivity)
{
    int exercised = 0;
    for (int seed = 1; seed <= 150; ++seed) {
        auto rng = rng_for(seed, 26);
        int n = uniform(rng, 2, 8);
        int m = uniform(rng, 1, 3);
        Multigraph g = random_multigraph(rng, n, m * (n - 1) + uniform(rng, 1, 2 * n));
        PackOutcome p = pack_trees(g, m);
        if (!p.packed()) continue;
        SpanningSubgraph h(g);
        for (const EdgeList& t : p.packing->trees)
            for (EdgeId e : t) h.insert(e);
        EdgeList all = h.edges();
        for (EdgeId chord = 0; chord < g.edge_count(); ++chord) {
            if (h.contains(chord)) continue;
            EdgeId out = exchange_edge(h, m, all, chord);
            SpanningSubgraph swapped = h;
            swapped.erase(out);
            swapped.insert(chord);
            ASSERT_TRUE(is_m_tree_connected(swapped, m)) << "seed " << seed;
            ++exercised;
        }
    }
    EXPECT_GT(exercised, 100);
}
