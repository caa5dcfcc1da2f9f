#pragma once

#include "graph.hpp"
#include "tree_packing.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/one_bit_color_map.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>
#include <boost/property_map/property_map.hpp>

#include <limits>

namespace treeconn {

inline constexpr int unbounded_connectivity = std::numeric_limits<int>::max();

// Minimum number of edges whose removal disconnects g (Stoer-Wagner on edge
// multiplicities). Single-vertex graphs report unbounded_connectivity.
inline int edge_connectivity(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n <= 1) return unbounded_connectivity;
    if (!is_connected(g)) return 0;
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_weight_t, int>>;
    std::map<std::pair<int, int>, int> mult;
    for (const Edge& e : g.edges()) ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    BG bg(n);
    for (const auto& [uv, w] : mult) boost::add_edge(uv.first, uv.second, w, bg);
    return static_cast<int>(boost::stoer_wagner_min_cut(bg, boost::get(boost::edge_weight, bg)));
}

// Largest m <= cap with g m-tree-connected (cap when g has one vertex).
inline int tree_connectivity(const Multigraph& g, int cap)
{
    int best = 0;
    for (int m = 1; m <= cap; ++m) {
        if (!is_m_tree_connected(g, m)) break;
        best = m;
    }
    return best;
}

}  // namespace treeconn
