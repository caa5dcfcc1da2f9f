#include "support.hpp"

#include <gtest/gtest.h>

using namespace tc_test;

TEST(RemoveVertices, EmptySetKeepsGraph)
{
    Multigraph g = gen::cycle(5);
    DerivedGraph d = remove_vertices(g, {});
    EXPECT_EQ(d.graph.vertex_count(), 5);
    EXPECT_EQ(d.graph.edge_count(), 5);
}

TEST(RemoveVertices, CompleteGraphLeavesTriangle)
{
    DerivedGraph d = remove_vertices(gen::complete(4), {0});
    EXPECT_EQ(d.graph.vertex_count(), 3);
    EXPECT_EQ(d.graph.edge_count(), 3);
    EXPECT_EQ(d.vertex_to_host, (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(d.host_to_vertex[0], -1);
}

TEST(RemoveVertices, AdjacentPairOfFiveCycleLeavesPath)
{
    DerivedGraph d = remove_vertices(gen::cycle(5), {0, 1});
    EXPECT_EQ(d.graph.vertex_count(), 3);
    EXPECT_EQ(d.graph.edge_count(), 2);
    EXPECT_EQ(count_components(d.graph), 1);
}

TEST(RemoveIncident, EmptySetKeepsEdges)
{
    Multigraph g = gen::complete(4);
    SpanningSubgraph f(g, {0, 1});
    EXPECT_EQ(remove_incident_except_forest(g, {}, f).graph.edge_count(), 6);
}

TEST(RemoveIncident, TrivialForestIsolatesS)
{
    Multigraph g = gen::complete(4);
    DerivedGraph d = remove_incident_except_forest(g, {0}, SpanningSubgraph(g));
    EXPECT_EQ(d.graph.vertex_count(), 4);
    EXPECT_EQ(d.graph.edge_count(), 3);
    EXPECT_EQ(count_components(d.graph), 2);
    EXPECT_EQ(count_components(d.graph), components_after_removal(g, {0}) + 1);
}

TEST(RemoveIncident, ForestEdgeSurvives)
{
    Multigraph g = make(3, {{0, 1}, {1, 2}});
    DerivedGraph d = remove_incident_except_forest(g, {1}, SpanningSubgraph(g, {0}));
    ASSERT_EQ(d.graph.edge_count(), 1);
    EXPECT_EQ(d.edge_to_host[0], 0);
    auto lab = component_labels(d.graph);
    EXPECT_EQ(lab[0], lab[1]);
    EXPECT_NE(lab[1], lab[2]);
}

TEST(Counts, InternalAndCrossing)
{
    Multigraph g = gen::complete(4);
    EXPECT_EQ(count_internal_edges(g, {}), 0);
    EXPECT_EQ(count_internal_edges(g, {0, 1}), 1);
    EdgeList star;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).u == 0 || g.edge(e).v == 0) star.push_back(e);
    SpanningSubgraph spanning_star(g, star), trivial(g);
    EXPECT_EQ(count_forest_crossing(g, {1, 2}, spanning_star), 0);
    EXPECT_EQ(count_forest_crossing(g, {1, 2}, trivial), 1);
    EXPECT_EQ(crossing_degree(g, 1, spanning_star), 0);
    EXPECT_EQ(crossing_degree(g, 1, trivial), 3);
}

TEST(Contract, SingletonsKeepGraph)
{
    Multigraph g = gen::complete(4);
    VertexPartition p{{{0}, {1}, {2}, {3}}};
    DerivedGraph d = contract_partition(g, p);
    EXPECT_EQ(d.graph.vertex_count(), 4);
    EXPECT_EQ(d.graph.edge_count(), 6);
}

TEST(Contract, OppositePairsOfFourCycle)
{
    DerivedGraph d = contract_partition(gen::cycle(4), VertexPartition{{{0, 2}, {1, 3}}});
    EXPECT_EQ(d.graph.vertex_count(), 2);
    EXPECT_EQ(d.graph.edge_count(), 4);
}

TEST(Contract, PairsOfCompleteGraph)
{
    DerivedGraph d = contract_partition(gen::complete(4), VertexPartition{{{0, 1}, {2, 3}}});
    EXPECT_EQ(d.graph.vertex_count(), 2);
    EXPECT_EQ(d.graph.edge_count(), 4);
}

TEST(Contract, RejectsOverlappingParts)
{
    EXPECT_THROW(contract_partition(gen::cycle(4), VertexPartition{{{0, 1}, {1, 2, 3}}}), std::invalid_argument);
}

TEST(Multigraph, RejectsLoopsAndUnknownEndpoints)
{
    EXPECT_THROW(make(2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(make(2, {{0, 2}}), std::out_of_range);
    Multigraph g = gen::path(3);
    SpanningSubgraph h(g);
    EXPECT_THROW(h.insert(5), std::out_of_range);
}

TEST(Multigraph, CutVerticesOfPath)
{
    auto cut = cut_vertices(gen::path(4));
    EXPECT_EQ(cut, (std::vector<char>{0, 1, 1, 0}));
}

TEST(GraphProperties, TrivialForestAddsS)
{
    for (int seed = 1; seed <= 150; ++seed) {
        auto rng = rng_for(seed, 11);
        int n = uniform(rng, 1, 12);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 0, 2 * n));
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (uniform(rng, 0, 2) == 0) s.push_back(v);
        SpanningSubgraph trivial(g);
        int lhs = count_components(remove_incident_except_forest(g, s, trivial).graph);
        int rhs = components_after_removal(g, s) + static_cast<int>(s.size());
        ASSERT_EQ(lhs, rhs) << "seed " << seed;
    }
}

TEST(GraphProperties, HandshakeAfterMutation)
{
    auto rng = rng_for(5, 12);
    Multigraph g = random_multigraph(rng, 9, 25);
    SpanningSubgraph h(g);
    for (int step = 0; step < 400; ++step) {
        EdgeId e = uniform(rng, 0, g.edge_count() - 1);
        if (h.contains(e)) h.erase(e);
        else h.insert(e);
        int total = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) total += h.degree(v);
        ASSERT_EQ(total, 2 * h.size());
    }
}

TEST(GraphProperties, ContractionComponentsMatchParts)
{
    for (int seed = 1; seed <= 150; ++seed) {
        auto rng = rng_for(seed, 13);
        int n = uniform(rng, 1, 10);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 0, 2 * n));
        std::vector<int> lab(n);
        int parts = uniform(rng, 1, n);
        for (Vertex v = 0; v < n; ++v) lab[v] = v < parts ? v : uniform(rng, 0, parts - 1);
        VertexPartition p = VertexPartition::from_labels(lab);
        DerivedGraph d = contract_partition(g, p);
        ASSERT_EQ(d.graph.edge_count(), crossing_edges(g, p));
        // parts joined by crossing edges, counted with union-find over the labels
        DisjointSets ds(parts);
        int joined = parts;
        for (const Edge& e : g.edges())
            if (ds.unite(lab[e.u], lab[e.v])) --joined;
        ASSERT_EQ(count_components(d.graph), joined) << "seed " << seed;
    }
}
