#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

#include <deque>
#include <optional>

namespace treeconn {

// m edge-disjoint forests of a host graph, grown by augmenting exchanges
// (matroid union of m graphic matroids). Edges are offered in the order the
// caller inserts them; searches explore forests and fundamental paths in
// index order, so the result is deterministic.
class ForestUnion {
public:
    ForestUnion(const Multigraph& g, int m) : g_(&g), m_(m), owner_(g.edge_count() + 1, -1)
    {
        if (m < 1) throw std::invalid_argument("m must be at least 1");
    }

    int m() const { return m_; }
    int size() const { return size_; }
    int owner(EdgeId e) const { return owner_[e]; }

    EdgeList forest(int i) const
    {
        EdgeList out;
        for (EdgeId e = 0; e < g_->edge_count(); ++e)
            if (owner_[e] == i) out.push_back(e);
        return out;
    }

    // Adds e to the union if some exchange sequence makes room for it.
    bool insert(EdgeId e)
    {
        if (owner_[e] >= 0) return true;
        const Edge& ed = g_->edge(e);
        if (search(e, ed.u, ed.v, true, nullptr)) {
            ++size_;
            return true;
        }
        return false;
    }

    // Whether a new edge ab could join the union. On failure, if clump is
    // given, it receives the vertices of the m-tree-connected clump found
    // around a and b.
    bool can_absorb(Vertex a, Vertex b, std::vector<char>* clump = nullptr)
    {
        std::vector<EdgeId> labeled;
        if (search(g_->edge_count(), a, b, false, &labeled)) return true;
        if (clump) {
            int n = g_->vertex_count();
            DisjointSets ds(n);
            ds.unite(a, b);
            for (EdgeId x : labeled)
                if (x < g_->edge_count()) ds.unite(g_->edge(x).u, g_->edge(x).v);
            clump->assign(n, 0);
            int r = ds.find(a);
            for (Vertex v = 0; v < n; ++v)
                if (ds.find(v) == r) (*clump)[v] = 1;
        }
        return false;
    }

private:
    struct Rooted {
        std::vector<int> comp, depth;
        std::vector<EdgeId> up;  // edge to parent, -1 at roots
    };

    void rebuild()
    {
        if (!dirty_) return;
        int n = g_->vertex_count();
        rooted_.assign(m_, {});
        for (int i = 0; i < m_; ++i) {
            Rooted& r = rooted_[i];
            r.comp.assign(n, -1);
            r.depth.assign(n, 0);
            r.up.assign(n, -1);
            int c = 0;
            for (Vertex s = 0; s < n; ++s) {
                if (r.comp[s] >= 0) continue;
                r.comp[s] = c;
                std::vector<Vertex> stack{s};
                while (!stack.empty()) {
                    Vertex x = stack.back();
                    stack.pop_back();
                    for (EdgeId e : g_->incident(x)) {
                        if (owner_[e] != i) continue;
                        Vertex y = g_->other(e, x);
                        if (r.comp[y] >= 0) continue;
                        r.comp[y] = c;
                        r.depth[y] = r.depth[x] + 1;
                        r.up[y] = e;
                        stack.push_back(y);
                    }
                }
                ++c;
            }
        }
        dirty_ = false;
    }

    void path_edges(int i, Vertex p, Vertex q, std::vector<EdgeId>& out) const
    {
        const Rooted& r = rooted_[i];
        std::vector<EdgeId> tail;
        out.clear();
        while (r.depth[p] > r.depth[q]) {
            out.push_back(r.up[p]);
            p = g_->other(r.up[p], p);
        }
        while (r.depth[q] > r.depth[p]) {
            tail.push_back(r.up[q]);
            q = g_->other(r.up[q], q);
        }
        while (p != q) {
            out.push_back(r.up[p]);
            p = g_->other(r.up[p], p);
            tail.push_back(r.up[q]);
            q = g_->other(r.up[q], q);
        }
        out.insert(out.end(), tail.rbegin(), tail.rend());
    }

    // Breadth-first search for an augmenting exchange sequence starting from
    // the edge `start` with ends a, b (start == edge_count() denotes a virtual edge).
    bool search(EdgeId start, Vertex a, Vertex b, bool commit, std::vector<EdgeId>* labeled)
    {
        rebuild();
        int total = g_->edge_count() + 1;
        std::vector<EdgeId> label(total, -2);  // -2: unlabelled, -1: root
        std::deque<EdgeId> queue{start};
        label[start] = -1;
        std::vector<EdgeId> path;
        auto ends = [&](EdgeId x) -> std::pair<Vertex, Vertex> {
            if (x == g_->edge_count()) return {a, b};
            return {g_->edge(x).u, g_->edge(x).v};
        };
        while (!queue.empty()) {
            EdgeId x = queue.front();
            queue.pop_front();
            if (labeled) labeled->push_back(x);
            auto [p, q] = ends(x);
            for (int i = 0; i < m_; ++i) {
                if (owner_[x] == i) continue;
                const Rooted& r = rooted_[i];
                if (r.comp[p] != r.comp[q]) {
                    if (commit) augment(x, i, label);
                    return true;
                }
                path_edges(i, p, q, path);
                for (EdgeId f : path) {
                    if (label[f] != -2) continue;
                    label[f] = x;
                    queue.push_back(f);
                }
            }
        }
        return false;
    }

    void augment(EdgeId x, int forest, const std::vector<EdgeId>& label)
    {
        for (;;) {
            int previous = owner_[x];
            owner_[x] = forest;
            if (label[x] == -1) break;
            forest = previous;
            x = label[x];
        }
        dirty_ = true;
    }

    const Multigraph* g_;
    int m_;
    std::vector<int> owner_;
    int size_ = 0;
    bool dirty_ = true;
    std::vector<Rooted> rooted_;
};

struct TreePacking {
    std::vector<EdgeList> trees;
};

struct DeficientPartition {
    VertexPartition partition;
    int crossing = 0;
    int m = 1;
};

struct PackOutcome {
    std::optional<TreePacking> packing;
    std::optional<DeficientPartition> deficient;
    bool packed() const { return packing.has_value(); }
};

struct ComponentDecomposition {
    VertexPartition partition;
    Rational omega;
};

inline ForestUnion maximal_forest_union(const Multigraph& g, int m)
{
    ForestUnion u(g, m);
    for (EdgeId e = 0; e < g.edge_count(); ++e) u.insert(e);
    return u;
}

// Components from a maximum forest union: u and v share an m-tree-connected
// component exactly when a virtual edge uv cannot join the union, and it
// suffices to test the edges of g, since every component induces a connected
// subgraph.
inline ComponentDecomposition components_from_union(const Multigraph& g, ForestUnion& u)
{
    int n = g.vertex_count();
    DisjointSets ds(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ds.find(ed.u) == ds.find(ed.v)) continue;
        if (!u.can_absorb(ed.u, ed.v)) ds.unite(ed.u, ed.v);
    }
    std::vector<int> lab(n);
    for (Vertex v = 0; v < n; ++v) lab[v] = ds.find(v);
    // Relabel parts in order of their smallest vertex.
    std::vector<int> remap(n, -1);
    int k = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (remap[lab[v]] < 0) remap[lab[v]] = k++;
        lab[v] = remap[lab[v]];
    }
    ComponentDecomposition out;
    out.partition = VertexPartition::from_labels(lab);
    int cross = 0;
    for (const Edge& ed : g.edges())
        if (lab[ed.u] != lab[ed.v]) ++cross;
    out.omega = Rational(out.partition.size()) - Rational(cross, u.m());
    return out;
}

inline ComponentDecomposition m_components(const Multigraph& g, int m)
{
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (m == 1) {
        int k = 0;
        auto lab = component_labels(g, &k);
        return {VertexPartition::from_labels(lab), Rational(k)};
    }
    ForestUnion u = maximal_forest_union(g, m);
    return components_from_union(g, u);
}

inline Rational omega_m(const Multigraph& g, int m)
{
    if (g.vertex_count() == 0) return Rational(0);
    return m_components(g, m).omega;
}

inline PackOutcome pack_trees(const Multigraph& g, int m)
{
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (g.vertex_count() < 1) throw std::invalid_argument("pack_trees needs at least one vertex");
    ForestUnion u = maximal_forest_union(g, m);
    PackOutcome out;
    if (u.size() == m * (g.vertex_count() - 1)) {
        TreePacking p;
        for (int i = 0; i < m; ++i) p.trees.push_back(u.forest(i));
        out.packing = std::move(p);
        return out;
    }
    // Not m-tree-connected, so the component partition has e_G(P) < m(|P|-1).
    ComponentDecomposition c = components_from_union(g, u);
    DeficientPartition d{c.partition, crossing_edges(g, c.partition), m};
    if (d.partition.size() < 2 || d.crossing >= m * (d.partition.size() - 1))
        throw std::logic_error("pack_trees: component partition is not deficient");
    out.deficient = std::move(d);
    return out;
}

inline bool is_m_tree_connected(const Multigraph& g, int m)
{
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (g.vertex_count() <= 1) return g.vertex_count() == 1;
    if (g.edge_count() < m * (g.vertex_count() - 1)) return false;
    if (m == 1) return is_connected(g);
    ForestUnion u = maximal_forest_union(g, m);
    return u.size() == m * (g.vertex_count() - 1);
}

inline bool is_m_tree_connected(const SpanningSubgraph& h, int m)
{
    return is_m_tree_connected(as_graph(h).graph, m);
}

inline Rational omega_m(const SpanningSubgraph& h, int m) { return omega_m(as_graph(h).graph, m); }

// Keeps the components of F while trimming each one to m(|C|-1) edges.
inline SpanningSubgraph m_critical_reduce(const SpanningSubgraph& f, int m)
{
    DerivedGraph d = as_graph(f);
    ComponentDecomposition comp = m_components(d.graph, m);
    auto lab = comp.partition.labels(d.graph.vertex_count());
    SpanningSubgraph out(f.host());
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
        const Edge& ed = d.graph.edge(e);
        if (lab[ed.u] != lab[ed.v]) out.insert(d.edge_to_host[e]);
    }
    for (const VertexSet& part : comp.partition.parts) {
        if (part.size() < 2) continue;
        DerivedGraph inner = induced_subgraph(d.graph, part);
        PackOutcome p = pack_trees(inner.graph, m);
        if (!p.packed()) throw std::logic_error("m_critical_reduce: component failed to pack");
        for (const EdgeList& t : p.packing->trees)
            for (EdgeId e : t) out.insert(d.edge_to_host[inner.edge_to_host[e]]);
    }
    return out;
}

inline bool is_m_critical(const SpanningSubgraph& f, int m)
{
    DerivedGraph d = as_graph(f);
    ComponentDecomposition comp = m_components(d.graph, m);
    // m * Omega_m = m n - |E| holds exactly for m-critical graphs.
    return comp.omega * m == Rational(m * f.vertex_count() - f.size());
}

// Given m-tree-connected H, an edge set M of H and a host edge e' outside H
// joining different m-tree-connected components of H - M, returns e in M with
// H - e + e' still m-tree-connected. Candidates are tried in id order.
inline EdgeId exchange_edge(const SpanningSubgraph& h, int m, const EdgeList& M, EdgeId e_new)
{
    const Multigraph& g = h.host();
    g.check_edge(e_new);
    if (M.empty()) throw std::invalid_argument("exchange_edge: M is empty");
    for (EdgeId e : M)
        if (!h.contains(e)) throw PreconditionError(Violation::not_subgraph, "M is not contained in H");
    if (h.contains(e_new)) throw std::invalid_argument("exchange_edge: e' already belongs to H");
    if (!is_m_tree_connected(h, m)) throw PreconditionError(Violation::not_tree_connected, "H is not m-tree-connected");
    SpanningSubgraph rest = h;
    for (EdgeId e : M) rest.erase(e);
    DerivedGraph d = as_graph(rest);
    auto lab = m_components(d.graph, m).partition.labels(g.vertex_count());
    if (lab[g.edge(e_new).u] == lab[g.edge(e_new).v])
        throw PreconditionError(Violation::not_crossing, "e' does not join different m-tree-connected components of H - M");
    EdgeList order = M;
    std::sort(order.begin(), order.end());
    SpanningSubgraph trial = h;
    trial.insert(e_new);
    for (EdgeId e : order) {
        trial.erase(e);
        if (is_m_tree_connected(trial, m)) return e;
        trial.insert(e);
    }
    throw std::logic_error("exchange_edge: no exchange edge found");
}

}  // namespace treeconn
