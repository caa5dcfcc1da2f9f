#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace treeconn {

using Vertex = int;
using EdgeId = int;
using VertexSet = std::vector<Vertex>;
using EdgeList = std::vector<EdgeId>;

struct Edge {
    Vertex u;
    Vertex v;
    bool operator==(const Edge&) const = default;
};

// Loopless multigraph with dense vertex ids 0..n-1 and dense edge ids in
// insertion order. Parallel edges are distinct edges.
class Multigraph {
public:
    Multigraph() = default;

    explicit Multigraph(int n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges))
    {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        inc_.assign(n, {});
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
            const Edge& ed = edges_[e];
            if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
                throw std::out_of_range("edge " + std::to_string(e) + " has an unknown endpoint");
            if (ed.u == ed.v) throw std::invalid_argument("loop at vertex " + std::to_string(ed.u));
            inc_[ed.u].push_back(e);
            inc_[ed.v].push_back(e);
        }
    }

    // K_0; only meaningful for conventions such as Omega_m(K_0) = 0.
    static Multigraph null_graph() { return Multigraph(); }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const EdgeList& incident(Vertex v) const { return inc_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(inc_.at(v).size()); }

    Vertex other(EdgeId e, Vertex v) const
    {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

    int max_degree() const
    {
        int d = 0;
        for (const auto& l : inc_) d = std::max(d, static_cast<int>(l.size()));
        return d;
    }

    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= n_) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    }

    void check_edge(EdgeId e) const
    {
        if (e < 0 || e >= edge_count()) throw std::out_of_range("unknown edge id " + std::to_string(e));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<EdgeList> inc_;
};

struct DisjointSets {
    std::vector<int> parent, rank;
    int classes = 0;

    explicit DisjointSets(int n = 0) : parent(n), rank(n, 0), classes(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
        --classes;
        return true;
    }
};

// Edge subset of a host graph, viewed as a spanning subgraph. The host must
// outlive the subgraph.
class SpanningSubgraph {
public:
    SpanningSubgraph() = default;

    explicit SpanningSubgraph(const Multigraph& host)
        : host_(&host), in_(host.edge_count(), 0), deg_(host.vertex_count(), 0)
    {
    }

    SpanningSubgraph(const Multigraph& host, const EdgeList& edges) : SpanningSubgraph(host)
    {
        for (EdgeId e : edges) insert(e);
    }

    static SpanningSubgraph full(const Multigraph& host)
    {
        SpanningSubgraph s(host);
        for (EdgeId e = 0; e < host.edge_count(); ++e) s.insert(e);
        return s;
    }

    const Multigraph& host() const { return *host_; }
    bool contains(EdgeId e) const { return in_[e] != 0; }
    int size() const { return size_; }
    int degree(Vertex v) const { return deg_[v]; }
    int vertex_count() const { return host_->vertex_count(); }

    void insert(EdgeId e)
    {
        host_->check_edge(e);
        if (in_[e]) return;
        in_[e] = 1;
        ++size_;
        ++deg_[host_->edge(e).u];
        ++deg_[host_->edge(e).v];
    }

    void erase(EdgeId e)
    {
        host_->check_edge(e);
        if (!in_[e]) return;
        in_[e] = 0;
        --size_;
        --deg_[host_->edge(e).u];
        --deg_[host_->edge(e).v];
    }

    EdgeList edges() const
    {
        EdgeList out;
        out.reserve(size_);
        for (EdgeId e = 0; e < static_cast<EdgeId>(in_.size()); ++e)
            if (in_[e]) out.push_back(e);
        return out;
    }

    EdgeList incident(Vertex v) const
    {
        EdgeList out;
        for (EdgeId e : host_->incident(v))
            if (in_[e]) out.push_back(e);
        return out;
    }

    bool operator==(const SpanningSubgraph& o) const { return host_ == o.host_ && in_ == o.in_; }

private:
    const Multigraph* host_ = nullptr;
    std::vector<char> in_;
    std::vector<int> deg_;
    int size_ = 0;
};

// A graph built from a host together with the maps back to host ids.
// vertex_to_host[i] is the host vertex of local vertex i; host_to_vertex is -1
// for host vertices that were dropped.
struct DerivedGraph {
    Multigraph graph;
    std::vector<Vertex> vertex_to_host;
    std::vector<Vertex> host_to_vertex;
    std::vector<EdgeId> edge_to_host;
};

struct VertexPartition {
    std::vector<VertexSet> parts;

    int size() const { return static_cast<int>(parts.size()); }

    // Part index per vertex of a ground set 0..n-1; -1 where uncovered.
    std::vector<int> labels(int n) const
    {
        std::vector<int> lab(n, -1);
        for (int i = 0; i < size(); ++i)
            for (Vertex v : parts[i]) lab.at(v) = i;
        return lab;
    }

    static VertexPartition from_labels(const std::vector<int>& lab)
    {
        int k = 0;
        for (int x : lab) k = std::max(k, x + 1);
        VertexPartition p;
        p.parts.assign(k, {});
        for (Vertex v = 0; v < static_cast<Vertex>(lab.size()); ++v)
            if (lab[v] >= 0) p.parts[lab[v]].push_back(v);
        p.parts.erase(std::remove_if(p.parts.begin(), p.parts.end(), [](const VertexSet& s) { return s.empty(); }),
                      p.parts.end());
        return p;
    }
};

inline std::vector<char> vertex_mask(const Multigraph& g, const VertexSet& s)
{
    std::vector<char> mask(g.vertex_count(), 0);
    for (Vertex v : s) {
        g.check_vertex(v);
        mask[v] = 1;
    }
    return mask;
}

inline VertexSet mask_to_set(const std::vector<char>& mask)
{
    VertexSet s;
    for (Vertex v = 0; v < static_cast<Vertex>(mask.size()); ++v)
        if (mask[v]) s.push_back(v);
    return s;
}

// Component labels of the spanning subgraph of g formed by edges with keep(e).
template <class Keep>
std::vector<int> component_labels_if(const Multigraph& g, Keep keep, int* count = nullptr)
{
    DisjointSets ds(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (keep(e)) ds.unite(g.edge(e).u, g.edge(e).v);
    std::vector<int> lab(g.vertex_count(), -1), root_label(g.vertex_count(), -1);
    int k = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int r = ds.find(v);
        if (root_label[r] < 0) root_label[r] = k++;
        lab[v] = root_label[r];
    }
    if (count) *count = k;
    return lab;
}

inline std::vector<int> component_labels(const Multigraph& g, int* count = nullptr)
{
    return component_labels_if(g, [](EdgeId) { return true; }, count);
}

inline std::vector<int> component_labels(const SpanningSubgraph& h, int* count = nullptr)
{
    return component_labels_if(h.host(), [&](EdgeId e) { return h.contains(e); }, count);
}

// omega(G): number of connected components (0 for the null graph).
inline int count_components(const Multigraph& g)
{
    int k = 0;
    component_labels(g, &k);
    return k;
}

inline int count_components(const SpanningSubgraph& h)
{
    int k = 0;
    component_labels(h, &k);
    return k;
}

inline bool is_connected(const Multigraph& g) { return g.vertex_count() >= 1 && count_components(g) == 1; }

inline bool is_forest(const SpanningSubgraph& f)
{
    return f.size() + count_components(f) == f.vertex_count();
}

inline bool is_spanning_tree(const SpanningSubgraph& t)
{
    return t.vertex_count() >= 1 && t.size() == t.vertex_count() - 1 && count_components(t) == 1;
}

// Subgraph of g formed by the edges selected by keep; same vertex set.
template <class Keep>
DerivedGraph edge_subgraph_if(const Multigraph& g, Keep keep)
{
    DerivedGraph d;
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!keep(e)) continue;
        edges.push_back(g.edge(e));
        d.edge_to_host.push_back(e);
    }
    d.graph = Multigraph(g.vertex_count(), std::move(edges));
    d.vertex_to_host.resize(g.vertex_count());
    std::iota(d.vertex_to_host.begin(), d.vertex_to_host.end(), 0);
    d.host_to_vertex = d.vertex_to_host;
    return d;
}

inline DerivedGraph as_graph(const SpanningSubgraph& h)
{
    return edge_subgraph_if(h.host(), [&](EdgeId e) { return h.contains(e); });
}

// G[X]: the subgraph induced by X, with vertices relabelled in increasing order.
inline DerivedGraph induced_subgraph(const Multigraph& g, const VertexSet& x)
{
    DerivedGraph d;
    d.host_to_vertex.assign(g.vertex_count(), -1);
    auto mask = vertex_mask(g, x);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (mask[v]) {
            d.host_to_vertex[v] = static_cast<Vertex>(d.vertex_to_host.size());
            d.vertex_to_host.push_back(v);
        }
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (mask[ed.u] && mask[ed.v]) {
            edges.push_back({d.host_to_vertex[ed.u], d.host_to_vertex[ed.v]});
            d.edge_to_host.push_back(e);
        }
    }
    d.graph = Multigraph(static_cast<int>(d.vertex_to_host.size()), std::move(edges));
    return d;
}

// G \ S: delete the vertices of S and every edge incident to them.
inline DerivedGraph remove_vertices(const Multigraph& g, const VertexSet& s)
{
    auto mask = vertex_mask(g, s);
    VertexSet keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!mask[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline void check_same_host(const Multigraph& g, const SpanningSubgraph& f)
{
    if (&f.host() != &g) throw std::invalid_argument("subgraph is not a subgraph of the given graph");
}

// G \ [S, F]: drop every edge incident to S except the edges of F. No vertex is deleted.
inline DerivedGraph remove_incident_except_forest(const Multigraph& g, const VertexSet& s, const SpanningSubgraph& f)
{
    check_same_host(g, f);
    auto mask = vertex_mask(g, s);
    return edge_subgraph_if(g, [&](EdgeId e) {
        return f.contains(e) || (!mask[g.edge(e).u] && !mask[g.edge(e).v]);
    });
}

// e_G(S): edges with both ends in S.
inline int count_internal_edges(const Multigraph& g, const VertexSet& s)
{
    auto mask = vertex_mask(g, s);
    int c = 0;
    for (const Edge& ed : g.edges())
        if (mask[ed.u] && mask[ed.v]) ++c;
    return c;
}

// e_G(S, F): edges with both ends in S that join different components of F.
inline int count_forest_crossing(const Multigraph& g, const VertexSet& s, const SpanningSubgraph& f)
{
    check_same_host(g, f);
    auto mask = vertex_mask(g, s);
    auto lab = component_labels(f);
    int c = 0;
    for (const Edge& ed : g.edges())
        if (mask[ed.u] && mask[ed.v] && lab[ed.u] != lab[ed.v]) ++c;
    return c;
}

// d_G(v, F): edges at v whose ends lie in different components of F.
inline int crossing_degree(const Multigraph& g, Vertex v, const SpanningSubgraph& f)
{
    check_same_host(g, f);
    g.check_vertex(v);
    auto lab = component_labels(f);
    int c = 0;
    for (EdgeId e : g.incident(v))
        if (lab[g.edge(e).u] != lab[g.edge(e).v]) ++c;
    return c;
}

inline void check_partition(const VertexPartition& p, int n)
{
    std::vector<char> seen(n, 0);
    for (const auto& part : p.parts) {
        if (part.empty()) throw std::invalid_argument("partition has an empty part");
        for (Vertex v : part) {
            if (v < 0 || v >= n) throw std::out_of_range("partition mentions unknown vertex " + std::to_string(v));
            if (seen[v]) throw std::invalid_argument("partition parts overlap at vertex " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("partition misses vertex " + std::to_string(v));
}

// e_G(P): edges joining different parts.
inline int crossing_edges(const Multigraph& g, const VertexPartition& p)
{
    auto lab = p.labels(g.vertex_count());
    int c = 0;
    for (const Edge& ed : g.edges())
        if (lab[ed.u] != lab[ed.v]) ++c;
    return c;
}

// G/P: one vertex per part (vertex i is part i); crossing edges kept as
// parallel edges, internal edges dropped. vertex_to_host is left empty since
// a contracted vertex has no single host vertex; host_to_vertex gives the part.
inline DerivedGraph contract_partition(const Multigraph& g, const VertexPartition& p)
{
    check_partition(p, g.vertex_count());
    DerivedGraph d;
    d.host_to_vertex = p.labels(g.vertex_count());
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int a = d.host_to_vertex[ed.u], b = d.host_to_vertex[ed.v];
        if (a == b) continue;
        edges.push_back({a, b});
        d.edge_to_host.push_back(e);
    }
    d.graph = Multigraph(p.size(), std::move(edges));
    return d;
}

// Lifts a local edge list of a derived graph back to host edge ids.
inline EdgeList lift_edges(const DerivedGraph& d, const EdgeList& local)
{
    EdgeList out;
    out.reserve(local.size());
    for (EdgeId e : local) out.push_back(d.edge_to_host.at(e));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_matching(const SpanningSubgraph& m)
{
    for (Vertex v = 0; v < m.vertex_count(); ++v)
        if (m.degree(v) > 1) return false;
    return true;
}

// Articulation points of g (ignoring edge multiplicity where irrelevant).
inline std::vector<char> cut_vertices(const Multigraph& g)
{
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int timer = 0;
    struct Frame {
        Vertex v;
        EdgeId via;
        std::size_t next;
        int children;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& inc = g.incident(fr.v);
            if (fr.next < inc.size()) {
                EdgeId e = inc[fr.next++];
                if (e == fr.via) continue;
                Vertex w = g.other(e, fr.v);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    ++fr.children;
                    stack.push_back({w, e, 0, 0});
                } else {
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                Frame done = fr;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (parent.via != -1 && low[done.v] >= disc[parent.v]) cut[parent.v] = 1;
                } else if (done.children >= 2) {
                    cut[done.v] = 1;
                }
            }
        }
    }
    return cut;
}

}  // namespace treeconn
