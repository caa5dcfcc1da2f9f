#include "support.hpp"

#include <gtest/gtest.h>

using namespace tc_test;

namespace {

void expect_circuit(const Multigraph& g, const ClosedTrail& t, std::size_t length)
{
    EXPECT_EQ(t.size(), length);
    EXPECT_TRUE(validate_trail(g, t).ok);
}

std::vector<int> all(int n, int x) { return std::vector<int>(n, x); }

}  // namespace

TEST(EulerCircuit, Examples)
{
    expect_circuit(gen::cycle(3), eulerian_circuit(gen::cycle(3)), 3);
    Multigraph twin = make(2, {{0, 1}, {0, 1}});
    expect_circuit(twin, eulerian_circuit(twin), 2);
    Multigraph bowtie = make(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    ClosedTrail t = eulerian_circuit(bowtie);
    expect_circuit(bowtie, t, 6);
    auto walk = trail_vertices(bowtie, t);
    ASSERT_TRUE(walk.has_value());
    EXPECT_EQ(std::count(walk->begin(), walk->end(), 0), 2);
}

TEST(EulerCircuit, RejectsOddDegrees)
{
    EXPECT_THROW(eulerian_circuit(gen::path(3)), PreconditionError);
}

TEST(SpanningEulerian, Examples)
{
    Multigraph dc4 = gen::doubled(gen::cycle(4));
    ClosedTrail a = spanning_eulerian_of_2tc(dc4);
    EXPECT_TRUE(validate_trail(dc4, a).ok);
    Multigraph k4 = gen::complete(4);
    ClosedTrail b = spanning_eulerian_of_2tc(k4);
    EXPECT_TRUE(validate_trail(k4, b).ok);
    EXPECT_EQ(b.size(), 4u);
    Multigraph k5 = gen::complete(5);
    ClosedTrail c = spanning_eulerian_of_2tc(k5);
    EXPECT_TRUE(validate_trail(k5, c).ok);
    EXPECT_EQ(c.size(), 10u);
}

TEST(FWalk, FourCycle)
{
    Multigraph g = gen::cycle(4);
    WalkResult r = f_walk(g, all(4, 2));
    ASSERT_EQ(r.status, Outcome::solution);
    EXPECT_TRUE(validate_walk(g, r.walk, all(4, 2)).ok);
}

TEST(FWalk, PathWithMatching)
{
    Multigraph g = gen::path(3);
    WalkResult r = f_walk(g, all(3, 2), {0});
    ASSERT_EQ(r.status, Outcome::solution);
    WalkReport rep = validate_walk(g, r.walk, all(3, 2), {0});
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.visits, (std::vector<int>{1, 2, 1}));
}

TEST(FWalk, StarCertificate)
{
    WalkResult r = f_walk(gen::complete_bipartite(1, 4), all(5, 2));
    ASSERT_EQ(r.status, Outcome::certificate);
    EXPECT_EQ(r.certificate->S, (VertexSet{0}));
    EXPECT_EQ(r.certificate->lhs, Rational(4));
}

TEST(FTrail, DoubledFourCycleIsHamiltonian)
{
    Multigraph g = gen::doubled(gen::cycle(4));
    TrailResult r = f_trail(g, all(4, 1));
    ASSERT_EQ(r.status, Outcome::solution) << r.note;
    EXPECT_EQ(r.trail.size(), 4u);
    EXPECT_TRUE(validate_trail(g, r.trail, all(4, 1)).ok);
}

TEST(FTrail, CompleteFive)
{
    Multigraph g = gen::complete(5);
    TrailResult r = f_trail(g, all(5, 2), Rational(1, 2));
    ASSERT_EQ(r.status, Outcome::solution);
    EXPECT_TRUE(r.note.empty());
    EXPECT_TRUE(validate_trail(g, r.trail, all(5, 2)).ok);
}

TEST(FTrail, FiveCycleIsNotTwoTreeConnected)
{
    TrailResult r = f_trail(gen::cycle(5), all(5, 1));
    ASSERT_EQ(r.status, Outcome::certificate);
    ASSERT_TRUE(r.deficient.has_value());
    EXPECT_EQ(r.deficient->partition.size(), 5);
}

TEST(FTrailIndependent, EmptySet)
{
    Multigraph g = gen::complete(5);
    TrailResult r = f_trail_on_independent_set(g, {}, all(5, 1));
    ASSERT_EQ(r.status, Outcome::solution);
    EXPECT_TRUE(validate_trail(g, r.trail).ok);
}

TEST(FTrailIndependent, DoubledFourCycleOppositePair)
{
    Multigraph g = gen::doubled(gen::cycle(4));
    TrailResult r = f_trail_on_independent_set(g, {0, 2}, all(4, 1));
    ASSERT_EQ(r.status, Outcome::solution);
    WalkReport rep = validate_trail(g, r.trail);
    ASSERT_TRUE(rep.ok);
    EXPECT_EQ(rep.visits[0], 1);
    EXPECT_EQ(rep.visits[2], 1);
}

TEST(FTrailIndependent, DoubledCompleteFourOneVertex)
{
    Multigraph g = gen::doubled(gen::complete(4));
    TrailResult r = f_trail_on_independent_set(g, {3}, all(4, 1));
    ASSERT_EQ(r.status, Outcome::solution);
    WalkReport rep = validate_trail(g, r.trail);
    ASSERT_TRUE(rep.ok);
    EXPECT_EQ(rep.visits[3], 1);
}

TEST(Validate, Examples)
{
    Multigraph c4 = gen::cycle(4);
    EXPECT_TRUE(validate_walk(c4, {0, 1, 2, 3}, all(4, 1)).ok);
    EXPECT_FALSE(validate_walk(c4, {0, 1, 2, 1}, all(4, 2)).ok);
    EXPECT_FALSE(validate_trail(c4, {0, 1, 1, 2, 3}).ok);
}

TEST(WalkProperties, WalkSupportHoldsBoundedTree)
{
    int walks = 0;
    for (int seed = 1; seed <= 150; ++seed) {
        auto rng = rng_for(seed, 51);
        int n = uniform(rng, 2, 10);
        Multigraph g = random_connected_multigraph(rng, n, uniform(rng, 0, n));
        std::vector<int> f(n);
        for (int& x : f) x = uniform(rng, 1, 3);
        WalkResult r = f_walk(g, f);
        if (r.status != Outcome::solution) continue;
        ASSERT_TRUE(validate_walk(g, r.walk, f).ok);
        // support of the walk as a simple graph on the visited pairs
        std::set<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < r.walk.size(); ++i) {
            int a = r.walk[i], b = r.walk[(i + 1) % r.walk.size()];
            if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
        }
        std::vector<Edge> support;
        for (auto [a, b] : pairs) support.push_back({a, b});
        Multigraph s(n, support);
        std::vector<int> cap(n);
        for (Vertex v = 0; v < n; ++v) cap[v] = f[v] + 1;
        auto tree = exact_bounded_tree(s, SpanningSubgraph(s), cap);
        ASSERT_TRUE(tree && *tree) << "seed " << seed;
        ++walks;
    }
    EXPECT_GT(walks, 50);
}

TEST(WalkProperties, RegularEdgeConnectedGraphsHaveTwoWalks)
{
    for (int seed = 1; seed <= 30; ++seed) {
        int r = 3 + seed % 2;
        int n = 2 * (3 + seed % 4);
        Instance inst = generate("k-edge-connected", {{"n", n}, {"k", r}, {"r", r}}, seed);
        WalkResult w = f_walk(inst.graph, all(n, 2));
        ASSERT_EQ(w.status, Outcome::solution) << "seed " << seed << ": " << w.note;
        ASSERT_TRUE(validate_walk(inst.graph, w.walk, all(n, 2)).ok);
    }
}

TEST(WalkProperties, ClawFreeGraphsHaveTwoWalks)
{
    for (int seed = 1; seed <= 30; ++seed) {
        Instance inst = generate("claw-free", {{"n", 4 + seed % 4}}, seed);
        const Multigraph& g = inst.graph;
        if (g.vertex_count() > 16) continue;
        for (const VertexSet& s : all_subsets(g.vertex_count()))
            ASSERT_LE(components_after_removal(g, s), static_cast<int>(s.size()) + 1) << "seed " << seed;
        WalkResult w = f_walk(g, all(g.vertex_count(), 2));
        ASSERT_EQ(w.status, Outcome::solution) << "seed " << seed;
    }
}

TEST(WalkProperties, JacksonWormaldSmallOrders)
{
    for (int n = 1; n <= 6; ++n) {
        SuiteReport r = run_suite("jackson-wormald", SuiteRange{n, n}, 1);
        EXPECT_TRUE(r.pass) << r.summary;
    }
}
