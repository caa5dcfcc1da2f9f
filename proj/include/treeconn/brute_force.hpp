#pragma once

// Exponential reference oracles. They share no code with the constructive
// algorithms beyond graph-core, so they can be used to cross-check them.

#include "graph.hpp"
#include "rational.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace treeconn::brute {

// Multiplicity matrix of a multigraph with at most 16 vertices.
struct Counts {
    int n = 0;
    std::vector<std::vector<int>> mult;

    explicit Counts(const Multigraph& g) : n(g.vertex_count()), mult(n, std::vector<int>(n, 0))
    {
        for (const Edge& e : g.edges()) ++mult[e.u][e.v], ++mult[e.v][e.u];
    }
};

// Visits every set partition of `ground` as a label vector (restricted growth),
// with the number of edges between different blocks maintained incrementally.
// visit(labels, blocks, crossing) is called for each partition.
template <class Visit>
void for_each_partition(const Counts& c, const VertexSet& ground, Visit visit)
{
    int k = static_cast<int>(ground.size());
    std::vector<int> label(k, 0);
    std::function<void(int, int, int)> rec = [&](int i, int blocks, int crossing) {
        if (i == k) {
            visit(label, blocks, crossing);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            int add = 0;
            for (int j = 0; j < i; ++j)
                if (label[j] != b) add += c.mult[ground[i]][ground[j]];
            label[i] = b;
            rec(i + 1, std::max(blocks, b + 1), crossing + add);
        }
    };
    if (k == 0) {
        visit(label, 0, 0);
        return;
    }
    label[0] = 0;
    rec(1, 1, 0);
}

inline VertexSet all_vertices(int n)
{
    VertexSet v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// min over partitions P with |P| >= 2 of floor(e(P) / (|P| - 1)): the number
// of edge-disjoint spanning trees. A single vertex packs arbitrarily many.
inline int max_tree_packing(const Multigraph& g)
{
    Counts c(g);
    int best = std::numeric_limits<int>::max();
    for_each_partition(c, all_vertices(g.vertex_count()), [&](const std::vector<int>&, int blocks, int crossing) {
        if (blocks >= 2) best = std::min(best, crossing / (blocks - 1));
    });
    return best;
}

// Omega_m(G) as max over partitions P of |P| - e(P)/m.
inline Rational omega_by_partitions(const Multigraph& g, int m)
{
    if (g.vertex_count() == 0) return Rational(0);
    Counts c(g);
    Rational best(std::numeric_limits<std::int64_t>::min() / 4);
    for_each_partition(c, all_vertices(g.vertex_count()), [&](const std::vector<int>&, int blocks, int crossing) {
        Rational v = Rational(blocks) - Rational(crossing, m);
        if (v > best) best = v;
    });
    return best;
}

// G[X] is m-tree-connected: e(P) >= m(|P|-1) for every partition P of X.
inline bool induced_m_tree_connected(const Counts& c, const VertexSet& x, int m)
{
    bool ok = true;
    for_each_partition(c, x, [&](const std::vector<int>&, int blocks, int crossing) {
        if (crossing < m * (blocks - 1)) ok = false;
    });
    return ok;
}

// The m-tree-connected components by subset enumeration: for each vertex, the
// union of all m-tree-connected induced subgraphs through it (which must be
// m-tree-connected itself). Returns part labels per vertex.
inline std::vector<int> m_component_labels(const Multigraph& g, int m)
{
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("subset oracle supports at most 16 vertices");
    Counts c(g);
    std::uint32_t total = 1u << n;
    std::vector<char> tc(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        VertexSet x;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) x.push_back(v);
        tc[mask] = induced_m_tree_connected(c, x, m);
    }
    std::vector<std::uint32_t> hull(n, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask)
        if (tc[mask])
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) hull[v] |= mask;
    std::vector<int> label(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (!tc[hull[v]]) throw std::logic_error("union of overlapping m-tree-connected sets is not m-tree-connected");
        if (label[v] >= 0) continue;
        for (int w = 0; w < n; ++w)
            if (hull[v] >> w & 1) label[w] = next;
        ++next;
    }
    return label;
}

// Some spanning forest F with d_F <= f and d_F = f mod 2, by edge-by-edge
// search with acyclicity and degree pruning.
inline std::optional<EdgeList> parity_forest_search(const Multigraph& g, const std::vector<int>& f)
{
    int n = g.vertex_count();
    std::vector<int> deg(n, 0), left(n, 0), comp(n);
    for (Vertex v = 0; v < n; ++v) left[v] = g.degree(v), comp[v] = v;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x];
        return x;
    };
    EdgeList chosen;
    auto settled_ok = [&](Vertex v) { return left[v] > 0 || (deg[v] - f[v]) % 2 == 0; };
    std::function<bool(EdgeId)> rec = [&](EdgeId e) -> bool {
        if (e == g.edge_count()) return true;
        const Edge& ed = g.edge(e);
        --left[ed.u];
        --left[ed.v];
        bool found = false;
        int a = find(ed.u), b = find(ed.v);
        if (a != b && deg[ed.u] < f[ed.u] && deg[ed.v] < f[ed.v]) {
            comp[a] = b;
            ++deg[ed.u];
            ++deg[ed.v];
            chosen.push_back(e);
            if (settled_ok(ed.u) && settled_ok(ed.v)) found = rec(e + 1);
            if (!found) {
                chosen.pop_back();
                --deg[ed.u];
                --deg[ed.v];
                comp[a] = a;
            }
        }
        if (!found && settled_ok(ed.u) && settled_ok(ed.v)) found = rec(e + 1);
        ++left[ed.u];
        ++left[ed.v];
        return found;
    };
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0 && f[v] % 2) return std::nullopt;
    if (rec(0)) return chosen;
    return std::nullopt;
}

// Components of the spanning subgraph given by an edge list.
inline int components_of(const Multigraph& g, const EdgeList& edges)
{
    DisjointSets d(g.vertex_count());
    int c = g.vertex_count();
    for (EdgeId e : edges)
        if (d.unite(g.edge(e).u, g.edge(e).v)) --c;
    return c;
}

}  // namespace treeconn::brute
