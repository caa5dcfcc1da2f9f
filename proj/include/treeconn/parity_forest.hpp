#pragma once

#include "errors.hpp"
#include "excess_search.hpp"
#include "graph.hpp"
#include "oracle.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace treeconn {

// The unique edge set of the forest t whose odd-degree vertices are exactly q.
// Each component of t must hold an even number of q-vertices.
inline EdgeList tree_parity_subforest(const SpanningSubgraph& t, const VertexSet& q)
{
    const Multigraph& g = t.host();
    if (q.size() % 2) throw PreconditionError(Violation::odd_parity_set, "|Q| is odd");
    if (!is_forest(t)) throw PreconditionError(Violation::not_forest, "T is not a forest");
    int n = g.vertex_count();
    std::vector<char> need = vertex_mask(g, q);
    std::vector<char> seen(n, 0);
    std::vector<EdgeId> up(n, -1);
    EdgeList out;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> order{root};
        seen[root] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (EdgeId e : t.incident(order[i])) {
                Vertex w = g.other(e, order[i]);
                if (seen[w]) continue;
                seen[w] = 1;
                up[w] = e;
                order.push_back(w);
            }
        for (std::size_t i = order.size(); i-- > 1;) {
            Vertex v = order[i];
            if (!need[v]) continue;
            out.push_back(up[v]);
            need[v] = 0;
            Vertex p = g.other(up[v], v);
            need[p] ^= 1;
        }
        if (need[root]) throw PreconditionError(Violation::odd_parity_set, "a component holds an odd number of Q vertices");
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ParityResult {
    Outcome status = Outcome::inconclusive;
    EdgeList edges;
    std::optional<Certificate> certificate;
    std::vector<int> target;  // f' actually enforced: caps with the required parity
};

namespace detail {

// Edge set J with d_J(v) <= f(v) and d_J(v) = f(v) mod 2, if one exists.
// Each edge uv becomes nodes e_u, e_v joined by an edge (edge unused). Vertex v
// gets f(v) mod 2 core nodes plus pairs, every gadget node seeing all e_v; a
// perfect matching uses an edge exactly when both its nodes go to gadgets.
inline std::optional<EdgeList> parity_subgraph(const Multigraph& g, const std::vector<int>& f)
{
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    int n = g.vertex_count(), m = g.edge_count();
    int nodes = 2 * m;
    std::vector<std::vector<int>> gadget(n);
    for (Vertex v = 0; v < n; ++v) {
        int q = f[v] % 2;
        int top = std::min(f[v], g.degree(v));
        if ((top - q) % 2) --top;
        int size = q + std::max(0, top - q);
        for (int i = 0; i < size; ++i) gadget[v].push_back(nodes++);
    }
    BG bg(nodes);
    for (EdgeId e = 0; e < m; ++e) boost::add_edge(2 * e, 2 * e + 1, bg);
    for (Vertex v = 0; v < n; ++v) {
        int q = f[v] % 2;
        for (std::size_t i = q; i + 1 < gadget[v].size(); i += 2) boost::add_edge(gadget[v][i], gadget[v][i + 1], bg);
        for (EdgeId e : g.incident(v)) {
            int node = g.edge(e).u == v ? 2 * e : 2 * e + 1;
            for (int x : gadget[v]) boost::add_edge(node, x, bg);
        }
    }
    std::vector<boost::graph_traits<BG>::vertex_descriptor> mate(nodes);
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    for (int x = 0; x < nodes; ++x)
        if (mate[x] == boost::graph_traits<BG>::null_vertex()) return std::nullopt;
    EdgeList used;
    for (EdgeId e = 0; e < m; ++e)
        if (static_cast<int>(mate[2 * e]) != 2 * e + 1) used.push_back(e);
    return used;
}

// Deletes cycles one at a time; degree parities are unchanged.
inline EdgeList strip_cycles(const Multigraph& g, EdgeList edges)
{
    for (;;) {
        SpanningSubgraph j(g, edges);
        int n = g.vertex_count();
        std::vector<int> depth(n, -1);
        std::vector<EdgeId> up(n, -1);
        std::vector<EdgeId> cycle;
        for (Vertex r = 0; r < n && cycle.empty(); ++r) {
            if (depth[r] >= 0) continue;
            depth[r] = 0;
            std::vector<Vertex> stack{r};
            while (!stack.empty() && cycle.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (EdgeId e : j.incident(v)) {
                    if (e == up[v]) continue;
                    Vertex w = g.other(e, v);
                    if (depth[w] < 0) {
                        depth[w] = depth[v] + 1;
                        up[w] = e;
                        stack.push_back(w);
                        continue;
                    }
                    // Non-tree edge: close the cycle through the search tree.
                    cycle.push_back(e);
                    Vertex a = v, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            cycle.push_back(up[a]);
                            a = g.other(up[a], a);
                        } else {
                            cycle.push_back(up[b]);
                            b = g.other(up[b], b);
                        }
                    }
                    break;
                }
            }
        }
        if (cycle.empty()) return edges;
        std::sort(cycle.begin(), cycle.end());
        EdgeList rest;
        std::set_difference(edges.begin(), edges.end(), cycle.begin(), cycle.end(), std::back_inserter(rest));
        edges = std::move(rest);
    }
}

}  // namespace detail

// Checks a parity forest against caps f and parity f mod 2.
inline bool is_parity_forest(const Multigraph& g, const EdgeList& edges, const std::vector<int>& f)
{
    SpanningSubgraph s(g, edges);
    if (s.size() != static_cast<int>(edges.size()) || !is_forest(s)) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (s.degree(v) > f[v] || (s.degree(v) - f[v]) % 2 != 0) return false;
    return true;
}

// Spanning forest F with d_F(v) <= f(v) and d_F(v) = f(v) mod 2, or a set S
// with odd_f(G\S) > sum_S f. The certificate search enumerates subsets and
// is skipped above oracle_cap vertices.
inline ParityResult parity_forest(const Multigraph& g, const std::vector<int>& f, int oracle_cap = 20)
{
    if (static_cast<int>(f.size()) != g.vertex_count()) throw std::invalid_argument("f needs one value per vertex");
    for (int x : f)
        if (x < 0) throw PreconditionError(Violation::invalid_spec, "f must be nonnegative");
    ParityResult out;
    out.target = f;
    if (auto j = detail::parity_subgraph(g, f)) {
        out.edges = detail::strip_cycles(g, *j);
        if (!is_parity_forest(g, out.edges, f)) throw std::logic_error("parity forest failed validation");
        out.status = Outcome::solution;
        return out;
    }
    if (g.vertex_count() > oracle_cap) return out;
    HypothesisParams p;
    p.f = f;
    HypothesisVerdict v = check_hypothesis(g, Family::parity, p, oracle_cap);
    if (v.holds) throw std::logic_error("no parity forest although odd_f(G\\S) <= sum f for every S");
    out.status = Outcome::certificate;
    out.certificate = certificate_from(*v.violation, Family::parity);
    return out;
}

// Q form: f' in {f, f-1} with f' odd exactly on Q.
inline std::vector<int> parity_target(const Multigraph& g, const std::vector<int>& f, const VertexSet& q)
{
    if (q.size() % 2) throw PreconditionError(Violation::odd_parity_set, "|Q| is odd");
    auto in_q = vertex_mask(g, q);
    std::vector<int> t(f);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (f[v] < 1) throw PreconditionError(Violation::invalid_spec, "f must be positive in the Q form");
        if ((t[v] % 2 == 1) != static_cast<bool>(in_q[v])) --t[v];
    }
    return t;
}

inline ParityResult parity_forest(const Multigraph& g, const std::vector<int>& f, const VertexSet& q,
                                  int oracle_cap = 20)
{
    if (static_cast<int>(f.size()) != g.vertex_count()) throw std::invalid_argument("f needs one value per vertex");
    return parity_forest(g, parity_target(g, f, q), oracle_cap);
}

enum class ConnectivityKind { edge, tree };

// Caps ceil(d/k) + 1 (k-edge-connected) or ceil(d/k) (k-tree-connected).
inline std::vector<int> parity_caps(const Multigraph& g, int k, ConnectivityKind kind)
{
    if (k < 1) throw PreconditionError(Violation::invalid_spec, "k must be positive");
    std::vector<int> f(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int c = (g.degree(v) + k - 1) / k + (kind == ConnectivityKind::edge ? 1 : 0);
        f[v] = std::max(1, c);
    }
    return f;
}

inline ParityResult bounded_parity_forest(const Multigraph& g, int k, ConnectivityKind kind, const VertexSet& q,
                                          int oracle_cap = 20)
{
    return parity_forest(g, parity_caps(g, k, kind), q, oracle_cap);
}

}  // namespace treeconn
