#pragma once

#include <treeconn/brute_force.hpp>
#include <treeconn/suites.hpp>

#include <functional>

namespace tc_test {

using namespace treeconn;
using suite_detail::all_subsets;
using suite_detail::random_connected_multigraph;
using suite_detail::random_multigraph;
using suite_detail::rng_for;
using suite_detail::uniform;

inline Multigraph make(int n, std::initializer_list<std::pair<int, int>> edges)
{
    std::vector<Edge> list;
    for (auto [u, v] : edges) list.push_back({u, v});
    return Multigraph(n, list);
}

// Every spanning tree of g containing `must`, visited as an edge list.
inline void for_each_spanning_tree(const Multigraph& g, const EdgeList& must,
                                   const std::function<void(const EdgeList&)>& visit)
{
    int n = g.vertex_count();
    std::vector<char> forced(g.edge_count(), 0);
    for (EdgeId e : must) forced[e] = 1;
    EdgeList chosen;
    std::function<void(EdgeId, DisjointSets)> rec = [&](EdgeId e, DisjointSets d) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            for (EdgeId x = e; x < g.edge_count(); ++x)
                if (forced[x]) return;
            visit(chosen);
            return;
        }
        if (e == g.edge_count()) return;
        if (g.edge_count() - e < n - 1 - static_cast<int>(chosen.size())) return;
        DisjointSets with = d;
        if (with.unite(g.edge(e).u, g.edge(e).v)) {
            chosen.push_back(e);
            rec(e + 1, with);
            chosen.pop_back();
        }
        if (!forced[e]) rec(e + 1, d);
    };
    if (n <= 1) {
        if (must.empty()) visit({});
        return;
    }
    rec(0, DisjointSets(n));
}

inline int degree_in(const Multigraph& g, const EdgeList& edges, Vertex v)
{
    int d = 0;
    for (EdgeId e : edges) d += (g.edge(e).u == v) + (g.edge(e).v == v);
    return d;
}

}  // namespace tc_test
