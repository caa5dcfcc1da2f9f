#include "support.hpp"

#include <gtest/gtest.h>

using namespace tc_test;

TEST(OddCount, Examples)
{
    Multigraph p3 = gen::path(3);
    EXPECT_EQ(odd_f_count(p3, {2, 2, 2}, {}), 0);
    EXPECT_EQ(odd_f_count(gen::path(2), {1, 1}, {}), 0);
    EXPECT_EQ(odd_f_count(p3, {1, 1, 1}, {1}), 2);
}

TEST(ParityForest, EvenCapsGiveEmptyForest)
{
    Multigraph g = gen::complete(5);
    ParityResult r = parity_forest(g, std::vector<int>(5, 2));
    ASSERT_EQ(r.status, Outcome::solution);
    EXPECT_TRUE(r.edges.empty());
}

TEST(ParityForest, SingleEdge)
{
    ParityResult r = parity_forest(gen::path(2), {1, 1}, VertexSet{0, 1});
    ASSERT_EQ(r.status, Outcome::solution);
    EXPECT_EQ(r.edges, (EdgeList{0}));
}

TEST(ParityForest, StarCertificate)
{
    ParityResult r = parity_forest(gen::complete_bipartite(1, 3), {1, 1, 1, 1}, VertexSet{0, 1, 2, 3});
    ASSERT_EQ(r.status, Outcome::certificate);
    EXPECT_EQ(r.certificate->S, (VertexSet{0}));
    EXPECT_EQ(r.certificate->lhs, Rational(3));
    EXPECT_EQ(r.certificate->rhs, Rational(1));
}

TEST(ParityForest, RejectsOddQ)
{
    EXPECT_THROW(parity_forest(gen::path(3), {1, 1, 1}, VertexSet{0}), PreconditionError);
}

TEST(TreeSubforest, Examples)
{
    Multigraph p3 = gen::path(3);
    SpanningSubgraph t = SpanningSubgraph::full(p3);
    EXPECT_TRUE(tree_parity_subforest(t, {}).empty());
    EXPECT_EQ(tree_parity_subforest(t, {0, 2}), (EdgeList{0, 1}));
    Multigraph star = gen::complete_bipartite(1, 3);
    EdgeList got = tree_parity_subforest(SpanningSubgraph::full(star), {1, 2});
    ASSERT_EQ(got.size(), 2u);
    for (EdgeId e : got) {
        Edge ed = star.edge(e);
        EXPECT_TRUE((ed.u == 1 || ed.v == 1) || (ed.u == 2 || ed.v == 2));
    }
}

TEST(BoundedParity, FourCycle)
{
    Multigraph c4 = gen::cycle(4);
    ParityResult none = bounded_parity_forest(c4, 1, ConnectivityKind::tree, {});
    ASSERT_EQ(none.status, Outcome::solution);
    EXPECT_TRUE(none.edges.empty());
    ParityResult opposite = bounded_parity_forest(c4, 1, ConnectivityKind::tree, {0, 2});
    ASSERT_EQ(opposite.status, Outcome::solution);
    SpanningSubgraph f(c4, opposite.edges);
    EXPECT_EQ(f.size(), 2);
    EXPECT_EQ(f.degree(0), 1);
    EXPECT_EQ(f.degree(2), 1);
}

TEST(BoundedParity, CompleteFourPerfectMatching)
{
    Multigraph k4 = gen::complete(4);
    ParityResult r = bounded_parity_forest(k4, 3, ConnectivityKind::edge, {0, 1, 2, 3});
    ASSERT_EQ(r.status, Outcome::solution);
    SpanningSubgraph f(k4, r.edges);
    for (Vertex v = 0; v < 4; ++v) EXPECT_LE(f.degree(v), 2);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(f.degree(v) % 2, 1);
    EXPECT_TRUE(is_forest(f));
}

TEST(ParityProperties, CountingLemma)
{
    for (int seed = 1; seed <= 200; ++seed) {
        auto rng = rng_for(seed, 41);
        int n = uniform(rng, 1, 10);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 0, 2 * n));
        std::vector<int> f(n);
        for (int& x : f) x = uniform(rng, 0, 4);
        int total = 0;
        for (int x : f) total += x;
        for (const VertexSet& s : all_subsets(n)) {
            int inside = 0;
            for (Vertex v : s) inside += f[v];
            ASSERT_EQ((odd_f_count(g, f, s) + inside) % 2, total % 2) << "seed " << seed;
        }
    }
}

TEST(ParityProperties, BranchMatchesExhaustiveSearch)
{
    int solutions = 0, certificates = 0;
    for (int seed = 1; seed <= 200; ++seed) {
        auto rng = rng_for(seed, 42);
        int n = uniform(rng, 1, 9);
        Multigraph g = random_multigraph(rng, n, uniform(rng, 0, 2 * n));
        std::vector<int> f(n);
        for (int& x : f) x = uniform(rng, 0, 3);
        ParityResult r = parity_forest(g, f);
        bool exists = brute::parity_forest_search(g, f).has_value();
        ASSERT_EQ(r.status == Outcome::solution, exists) << "seed " << seed;
        if (r.status == Outcome::solution) {
            ASSERT_TRUE(is_parity_forest(g, r.edges, f));
            ++solutions;
        } else {
            ASSERT_EQ(r.status, Outcome::certificate);
            HypothesisParams p;
            p.f = f;
            ASSERT_FALSE(evaluate_hypothesis(g, Family::parity, p, r.certificate->S).holds);
            ++certificates;
        }
    }
    EXPECT_GT(solutions, 20);
    EXPECT_GT(certificates, 20);
}
