#include "support.hpp"

#include <treeconn/json_io.hpp>

#include <gtest/gtest.h>

using namespace tc_test;

TEST(Generate, TreeConnectedUnion)
{
    Instance inst = generate("k-tree-connected", {{"n", 6}, {"k", 2}}, 1);
    EXPECT_TRUE(is_m_tree_connected(inst.graph, 2));
    EXPECT_EQ(inst.graph.vertex_count(), 6);
}

TEST(Generate, DoubledCycle)
{
    Instance inst = generate("doubled-cycle", {{"n", 4}}, 0);
    EXPECT_EQ(inst.graph.edge_count(), 8);
    EXPECT_TRUE(is_m_tree_connected(inst.graph, 2));
}

TEST(Generate, Circulant)
{
    Instance inst = generate("circulant", {{"n", 8}, {"j1", 1}, {"j2", 2}}, 0);
    for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(inst.graph.degree(v), 4);
    EXPECT_EQ(edge_connectivity(inst.graph), 4);
}

TEST(Generate, EdgeConnectedAndRegular)
{
    for (int seed = 1; seed <= 10; ++seed) {
        Instance a = generate("k-edge-connected", {{"n", 12}, {"k", 3}}, seed);
        EXPECT_GE(edge_connectivity(a.graph), 3);
        EXPECT_TRUE(gen::is_simple(a.graph));
        Instance b = generate("random-regular", {{"n", 30}, {"r", 5}}, seed);
        for (Vertex v = 0; v < 30; ++v) ASSERT_EQ(b.graph.degree(v), 5);
        EXPECT_TRUE(gen::is_simple(b.graph));
    }
}

TEST(Generate, ClawFreeAndDense)
{
    for (int seed = 1; seed <= 10; ++seed) {
        EXPECT_TRUE(gen::is_claw_free(generate("claw-free", {{"n", 7}}, seed).graph));
        EXPECT_TRUE(is_connected(generate("dense", {{"n", 4}, {"missing", 9}}, seed).graph));
    }
}

TEST(Generate, Deterministic)
{
    for (const char* kind : {"k-edge-connected", "k-tree-connected", "random-connected", "dense", "claw-free"}) {
        std::map<std::string, int> params{{"n", 9}, {"k", 2}};
        Instance a = generate(kind, params, 17), b = generate(kind, params, 17);
        EXPECT_EQ(a.graph.edges(), b.graph.edges()) << kind;
    }
}

TEST(Generate, UnknownKindAndMissingParameter)
{
    EXPECT_THROW(generate("nope", {}, 0), std::invalid_argument);
    EXPECT_THROW(generate("cycle", {}, 0), std::invalid_argument);
    EXPECT_THROW(generate("random-regular", {{"n", 5}, {"r", 3}}, 0), std::exception);
}

TEST(Generate, ClassBlockReportsMeasurements)
{
    Json j = instance_to_json(generate("circulant", {{"n", 8}, {"j1", 1}, {"j2", 2}}, 0));
    EXPECT_EQ(j["class"]["kind"], "circulant");
    EXPECT_EQ(j["class"]["edge_connectivity"], 4);
    EXPECT_EQ(j["class"]["tree_connectivity"], 2);
    EXPECT_TRUE(j["class"]["simple"].get<bool>());
}

TEST(ExhaustivePool, CountsMatchKnownSequence)
{
    const std::vector<std::size_t> known{1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(connected_graph_codes(n).size(), known[n - 1]) << n;
}

TEST(ExhaustivePool, GraphsAreConnectedAndDistinct)
{
    std::set<std::uint64_t> codes;
    for (const Multigraph& g : connected_graphs(6)) {
        ASSERT_TRUE(is_connected(g));
        ASSERT_TRUE(gen::is_simple(g));
        canon::Adj adj{};
        for (const Edge& e : g.edges()) adj[e.u] |= 1u << e.v, adj[e.v] |= 1u << e.u;
        codes.insert(canon::canonical_code(6, adj));
    }
    EXPECT_EQ(codes.size(), 112u);
}

TEST(ExhaustivePool, CanonicalCodeIgnoresLabels)
{
    auto rng = rng_for(3, 81);
    for (int trial = 0; trial < 50; ++trial) {
        int n = uniform(rng, 2, 9);
        Multigraph g = gen::random_connected(n, uniform(rng, 0, n), rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        canon::Adj a{}, b{};
        for (const Edge& e : g.edges()) {
            a[e.u] |= 1u << e.v, a[e.v] |= 1u << e.u;
            b[perm[e.u]] |= 1u << perm[e.v], b[perm[e.v]] |= 1u << perm[e.u];
        }
        ASSERT_EQ(canon::canonical_code(n, a), canon::canonical_code(n, b));
    }
}

TEST(FactorFixture, Examples)
{
    Multigraph c4 = gen::cycle(4);
    auto a = factor_fixture(c4, 2);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a->size(), 4u);
    Multigraph k4 = gen::complete(4);
    auto b = factor_fixture(k4, 2);
    ASSERT_TRUE(b.has_value());
    SpanningSubgraph h(k4, *b);
    EXPECT_EQ(h.size(), 4);
    EXPECT_EQ(count_components(h), 1);
    EXPECT_FALSE(factor_fixture(gen::complete_bipartite(1, 3), 2).has_value());
    EXPECT_THROW(factor_fixture(gen::cycle(13), 2), std::invalid_argument);
}
