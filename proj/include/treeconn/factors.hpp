#pragma once

#include "connectivity.hpp"
#include "errors.hpp"
#include "euler_walks.hpp"
#include "excess_search.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "parity_forest.hpp"
#include "tree_packing.hpp"

namespace treeconn {

struct FactorResult {
    Outcome status = Outcome::inconclusive;
    EdgeList edges;
    std::optional<Certificate> certificate;
    std::optional<DeficientPartition> deficient;
    std::string note;
};

// One edge per non-trivial component of F, taken at the lowest-id vertex of
// the component that is not a cut vertex of F (lowest edge id there).
inline EdgeList component_matching(const SpanningSubgraph& f)
{
    const Multigraph& g = f.host();
    DerivedGraph d = as_graph(f);
    std::vector<char> cut = cut_vertices(d.graph);
    std::vector<int> lab = component_labels(f);
    std::map<int, Vertex> pick;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (f.degree(v) > 0 && !cut[v] && !pick.count(lab[v])) pick[lab[v]] = v;
    EdgeList m;
    for (const auto& [c, v] : pick) {
        EdgeList inc = f.incident(v);
        m.push_back(*std::min_element(inc.begin(), inc.end()));
    }
    std::sort(m.begin(), m.end());
    return m;
}

struct Extension {
    EdgeList edges;         // H
    EdgeList matching;      // M
    bool exhaustive = false;  // local search missed and the subset search answered
};

inline bool extension_valid(const SpanningSubgraph& f, const SpanningSubgraph& t, const EdgeList& m,
                            const SpanningSubgraph& h)
{
    const Multigraph& g = f.host();
    if (count_components(h) != 1) return false;
    SpanningSubgraph ms(g, m);
    for (EdgeId e : f.edges())
        if (!ms.contains(e) && !h.contains(e)) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (h.degree(v) < f.degree(v)) return false;
        if (h.degree(v) > t.degree(v) + std::max(0, f.degree(v) - 1)) return false;
    }
    return true;
}

namespace detail {

// Edge of tree t at vertex b on the t-path from a to b.
inline EdgeId tree_edge_toward(const SpanningSubgraph& t, Vertex b, Vertex a)
{
    const Multigraph& g = t.host();
    std::vector<EdgeId> up(g.vertex_count(), -2);
    up[b] = -1;
    std::vector<Vertex> queue{b};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (EdgeId e : t.incident(queue[i])) {
            Vertex w = g.other(e, queue[i]);
            if (up[w] != -2) continue;
            up[w] = e;
            queue.push_back(w);
        }
    if (up[a] == -2) throw std::logic_error("tree does not span");
    Vertex cur = a;
    EdgeId last = -1;
    while (cur != b) {
        last = up[cur];
        cur = g.other(last, cur);
    }
    return last;
}

// Vertex path from s to t inside F's component, avoiding vertex skip.
inline std::vector<Vertex> forest_path(const SpanningSubgraph& f, Vertex s, Vertex t, Vertex skip)
{
    const Multigraph& g = f.host();
    std::vector<Vertex> prev(g.vertex_count(), -2);
    prev[s] = -1;
    std::vector<Vertex> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (EdgeId e : f.incident(queue[i])) {
            Vertex w = g.other(e, queue[i]);
            if (w == skip || prev[w] != -2) continue;
            prev[w] = queue[i];
            queue.push_back(w);
        }
    if (prev[t] == -2) throw std::logic_error("no path inside the component");
    std::vector<Vertex> path;
    for (Vertex v = t; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

inline std::optional<EdgeId> edge_between(const SpanningSubgraph& f, Vertex a, Vertex b)
{
    for (EdgeId e : f.incident(a))
        if (f.host().other(e, a) == b) return e;
    return std::nullopt;
}

inline std::optional<EdgeList> exhaustive_extension(const SpanningSubgraph& f, const SpanningSubgraph& t,
                                                    const EdgeList& m, int max_free = 24)
{
    const Multigraph& g = f.host();
    SpanningSubgraph base(g);
    SpanningSubgraph ms(g, m);
    for (EdgeId e : f.edges())
        if (!ms.contains(e)) base.insert(e);
    EdgeList free;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!base.contains(e) && (t.contains(e) || f.contains(e))) free.push_back(e);
    if (static_cast<int>(free.size()) > max_free) return std::nullopt;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        SpanningSubgraph h = base;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1) h.insert(free[i]);
        if (extension_valid(f, t, m, h)) return h.edges();
    }
    return std::nullopt;
}

}  // namespace detail

// Connected H containing E(F)\M with d_F <= d_H <= d_T + max(0, d_F - 1),
// by the two local searches of the existence proof: shrink |E(H)| while some
// vertex of a non-trivial F-component keeps all its T and F edges, then grow
// |E(H) cap M| by tree swaps.
inline Extension extend_factor_to_connected(const SpanningSubgraph& f, const SpanningSubgraph& t)
{
    const Multigraph& g = f.host();
    if (&t.host() != &g) throw std::invalid_argument("F and T must share a host graph");
    if (!is_spanning_tree(t)) throw PreconditionError(Violation::not_spanning_tree, "T is not a spanning tree");
    int n = g.vertex_count();
    Extension out;
    out.matching = component_matching(f);
    std::vector<int> lab = component_labels(f);
    std::map<int, EdgeId> m_of;  // component label -> its M edge
    std::vector<Vertex> mx(g.edge_count(), -1);  // M edge -> its non-cut end x
    {
        DerivedGraph d = as_graph(f);
        std::vector<char> cut = cut_vertices(d.graph);
        for (EdgeId e : out.matching) {
            const Edge& ed = g.edge(e);
            // Same choice as component_matching: lowest non-cut vertex.
            for (Vertex v = 0; v < n && mx[e] < 0; ++v)
                if (lab[v] == lab[ed.u] && f.degree(v) > 0 && !cut[v]) mx[e] = v;
            m_of[lab[ed.u]] = e;
        }
    }
    SpanningSubgraph h(g), tp = t;
    for (EdgeId e : t.edges()) h.insert(e);
    for (EdgeId e : f.edges()) h.insert(e);
    auto full = [&](Vertex v) { return h.degree(v) == t.degree(v) + f.degree(v); };
    // A broken invariant drops to the exhaustive search below.
    try {
        bool changed = true;
        while (changed) {
            changed = false;
            // Phase 1: fewer edges.
            for (Vertex u = 0; u < n; ++u) {
                if (!full(u) || f.degree(u) == 0) continue;
                EdgeId xy = m_of.at(lab[u]);
                Vertex x = mx[xy], y = g.other(xy, x);
                Vertex start = -1;
                std::vector<Vertex> path;
                if (h.contains(xy)) {
                    for (Vertex v = 0; v < n; ++v)
                        if (lab[v] == lab[u] && f.degree(v) > 0 && !full(v)) {
                            start = v;
                            break;
                        }
                    if (start < 0) {
                        if (tp.contains(xy)) throw std::logic_error("M edge at a saturated vertex lies in the tree");
                        h.erase(xy);
                        changed = true;
                        break;
                    }
                    path = detail::forest_path(f, start, u, -1);
                } else {
                    path = detail::forest_path(f, y, u, x);
                }
                std::size_t i = 1;
                while (i < path.size() && !(full(path[i]) && !full(path[i - 1]))) ++i;
                if (i == path.size()) throw std::logic_error("no unsaturated-to-saturated step on the path");
                Vertex a = path[i - 1], b = path[i];
                auto ab = detail::edge_between(f, a, b);
                if (!ab || !h.contains(*ab) || tp.contains(*ab)) throw std::logic_error("exchange edge invariant broken");
                EdgeId bc = detail::tree_edge_toward(tp, b, a);
                h.erase(bc);
                tp.erase(bc);
                tp.insert(*ab);
                changed = true;
                break;
            }
            if (changed) continue;
            // Phase 2: more M edges.
            for (EdgeId xy : out.matching) {
                if (h.contains(xy)) continue;
                Vertex x = mx[xy], y = g.other(xy, x);
                if (h.degree(y) > f.degree(y) - 1) continue;
                EdgeId xz = detail::tree_edge_toward(tp, x, y);
                h.erase(xz);
                tp.erase(xz);
                h.insert(xy);
                tp.insert(xy);
                changed = true;
                break;
            }
        }
    } catch (const std::logic_error&) {
    }
    if (extension_valid(f, t, out.matching, h)) {
        out.edges = h.edges();
        return out;
    }
    auto ex = detail::exhaustive_extension(f, t, out.matching);
    if (!ex) throw std::logic_error("factor extension failed and no exhaustive witness exists");
    out.edges = *ex;
    out.exhaustive = true;
    return out;
}

// Connected (g', f' + f - 1)-factor from a (g', f')-factor F: a spanning
// f-tree through the component matching M, then the extension plus M.
inline FactorResult connected_factor_from_condition(const Multigraph& g, const EdgeList& factor, const std::vector<int>& f,
                                                    const SearchOptions& opts = {})
{
    int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("f needs one value per vertex");
    SpanningSubgraph fs(g, factor);
    EdgeList m = component_matching(fs);
    DegreeSpec spec;
    spec.eta.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] < 1) throw PreconditionError(Violation::invalid_spec, "f must be positive");
        spec.X.push_back(v);
        spec.eta[v] = Rational(f[v]);
    }
    spec.forced = m;
    FactorResult out;
    BoundedResult tree = bounded_spanning_tree(g, spec, TreeMode::plain, opts);
    if (tree.status != Outcome::solution) {
        out.status = tree.status;
        out.certificate = tree.certificate;
        out.note = tree.note;
        return out;
    }
    SpanningSubgraph t(g, tree.edges);
    Extension ext = extend_factor_to_connected(fs, t);
    SpanningSubgraph h(g, ext.edges);
    for (EdgeId e : m) h.insert(e);
    out.edges = h.edges();
    out.status = Outcome::solution;
    return out;
}

// Every m-tree-connected component C of F must have at least
// c - (c-1)/(2m) d_F(C) vertices, where d_F(C) counts F-edges leaving C.
inline bool components_large_enough(const SpanningSubgraph& f, int m, int c)
{
    DerivedGraph d = as_graph(f);
    ComponentDecomposition comp = m_components(d.graph, m);
    auto lab = comp.partition.labels(f.vertex_count());
    for (int i = 0; i < comp.partition.size(); ++i) {
        int leaving = 0;
        for (const Edge& e : d.graph.edges())
            if ((lab[e.u] == i) != (lab[e.v] == i)) ++leaving;
        Rational need = Rational(c) - Rational((c - 1) * leaving, 2 * m);
        if (Rational(static_cast<std::int64_t>(comp.partition.parts[i].size())) < need) return false;
    }
    return true;
}

// m-tree-connected H containing F with d_H <= d_F + 1 and d_H(u) = d_F(u).
// Works on m copies of G; copies of F edges never enter H, so H maps back
// into G edge for edge.
inline FactorResult plus_one_extension(const Multigraph& g, const EdgeList& factor, int m, int c,
                                       std::optional<Vertex> u = std::nullopt, const SearchOptions& opts = {})
{
    int n = g.vertex_count(), e_count = g.edge_count();
    if (m < 1) throw PreconditionError(Violation::invalid_spec, "m must be positive");
    if (c < 2 * m + 1) throw PreconditionError(Violation::invalid_spec, "c must be at least 2m + 1");
    if (u) g.check_vertex(*u);
    SpanningSubgraph fs(g, factor);
    if (!components_large_enough(fs, m, c))
        throw PreconditionError(Violation::invalid_spec, "an m-tree-connected component of F is too small");
    FactorResult out;
    HypothesisParams params;
    params.m = m;
    params.c = c;
    auto certify = [&](const VertexSet& s) {
        HypothesisRow row = evaluate_hypothesis(g, Family::plus_one, params, s);
        if (!row.holds) {
            out.status = Outcome::certificate;
            out.certificate = certificate_from(row, Family::plus_one);
        }
        return !row.holds;
    };
    if (!is_connected(g)) {
        certify({});
        return out;
    }
    std::vector<Edge> copies;
    for (int k = 0; k < m; ++k)
        for (const Edge& e : g.edges()) copies.push_back(e);
    Multigraph gm(n, copies);
    SpanningSubgraph f0(gm, factor);
    SpanningSubgraph fp = m_critical_reduce(f0, m);
    std::vector<int> target(n);
    for (Vertex v = 0; v < n; ++v) target[v] = (u && *u == v ? 0 : 1) + fp.degree(v);
    std::vector<char> pool(gm.edge_count(), 0);
    for (EdgeId e = 0; e < gm.edge_count(); ++e) pool[e] = !fs.contains(e % e_count);
    detail::CascadeEngine engine(gm, m, fp, target, detail::CascadeEngine::Goal::min_omega, &pool);
    SpanningSubgraph hm = fp;
    VertexSet s;
    auto stop = engine.run(hm, s, opts.neutral_budget);
    if (is_m_tree_connected(hm, m)) {
        SpanningSubgraph h(g);
        for (EdgeId e : hm.edges()) {
            if (h.contains(e % e_count)) throw std::logic_error("H uses two copies of one edge");
            h.insert(e % e_count);
        }
        for (EdgeId e : factor) h.insert(e);
        for (Vertex v = 0; v < n; ++v) {
            int cap = fs.degree(v) + (u && *u == v ? 0 : 1);
            if (h.degree(v) > cap) throw std::logic_error("plus-one extension exceeded a degree cap");
        }
        if (!is_m_tree_connected(h, m)) throw std::logic_error("plus-one extension is not m-tree-connected");
        out.status = Outcome::solution;
        out.edges = h.edges();
        return out;
    }
    if (stop == detail::CascadeEngine::Stop::fixed_point && certify(s)) return out;
    out.note = stop == detail::CascadeEngine::Stop::stuck ? "cascade search stalled" : "cascade set does not violate the hypothesis";
    if (opts.fallbacks && n <= opts.oracle_cap) {
        HypothesisVerdict v = check_hypothesis(g, Family::plus_one, params, opts.oracle_cap);
        if (!v.holds) {
            out.status = Outcome::certificate;
            out.certificate = certificate_from(*v.violation, Family::plus_one);
            out.note.clear();
        }
    }
    return out;
}

// 2-edge-connected H containing the even-degree F with d_H <= d_F + 1: double
// F, extend with m = 2, drop the added copy of F.
inline FactorResult two_edge_connected_extension(const Multigraph& g, const EdgeList& factor, int c,
                                                 const SearchOptions& opts = {})
{
    if (c < 5) throw PreconditionError(Violation::invalid_spec, "c must be at least 5");
    SpanningSubgraph fs(g, factor);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (fs.degree(v) % 2) throw PreconditionError(Violation::invalid_spec, "F must have even degrees");
    std::vector<int> lab = component_labels(fs);
    std::map<int, int> sizes;
    for (int l : lab) ++sizes[l];
    for (auto [l, sz] : sizes)
        if (sz < c) throw PreconditionError(Violation::invalid_spec, "a component of F has fewer than c vertices");
    std::vector<Edge> edges = g.edges();
    EdgeList doubled = fs.edges();
    for (EdgeId e : fs.edges()) {
        doubled.push_back(static_cast<EdgeId>(edges.size()));
        edges.push_back(g.edge(e));
    }
    Multigraph g2(g.vertex_count(), edges);
    FactorResult r = plus_one_extension(g2, doubled, 2, c, std::nullopt, opts);
    if (r.status != Outcome::solution) return r;
    EdgeList h;
    for (EdgeId e : r.edges)
        if (e < g.edge_count()) h.push_back(e);
    SpanningSubgraph hs(g, h);
    if (edge_connectivity(as_graph(hs).graph) < 2) throw std::logic_error("extension is not 2-edge-connected");
    r.edges = h;
    return r;
}

enum class LargeDegreeKind { tree, edge };

// m-tree-connected H with d_H odd exactly on Q and d_H >= d_G - ceil((d_G-m)/k)
// ((k+m)-tree-connected G) or d_G - ceil(d_G/(2k)) - 1 ((2k+2m)-edge-connected G).
// H = G minus a parity forest of the k-tree-connected half of a packing.
inline FactorResult large_degree_parity_subgraph(const Multigraph& g, int m, int k, LargeDegreeKind kind,
                                                 const VertexSet& q, const SearchOptions& opts = {})
{
    int n = g.vertex_count();
    if (m < 1 || k < 1) throw PreconditionError(Violation::invalid_spec, "m and k must be positive");
    if (q.size() % 2) throw PreconditionError(Violation::odd_parity_set, "|Q| is odd");
    FactorResult out;
    SpanningSubgraph base = SpanningSubgraph::full(g);
    if (kind == LargeDegreeKind::tree) {
        if (!is_m_tree_connected(g, k + m))
            throw PreconditionError(Violation::not_tree_connected, "G is not (k+m)-tree-connected");
    } else {
        if (edge_connectivity(g) < 2 * k + 2 * m)
            throw PreconditionError(Violation::disconnected, "G is not (2k+2m)-edge-connected");
        SpecParams sp;
        sp.k = 2 * (k + m);
        sp.m = k + m;
        BoundedResult r = bounded_m_subgraph(g, derive_spec(g, SpecKind::k_edge_connected, sp), SubgraphMode::plain, opts);
        if (r.status != Outcome::solution) {
            out.status = Outcome::inconclusive;
            out.note = "no bounded (k+m)-tree-connected subgraph found: " + r.note;
            return out;
        }
        base = SpanningSubgraph(g, r.edges);
    }
    DerivedGraph d = as_graph(base);
    PackOutcome p = pack_trees(d.graph, k + m);
    if (!p.packed()) throw std::logic_error("packing failed on a (k+m)-tree-connected graph");
    SpanningSubgraph lprime(g);
    for (int i = 0; i < m; ++i)
        for (EdgeId e : p.packing->trees[i]) lprime.insert(d.edge_to_host[e]);
    DerivedGraph l = edge_subgraph_if(g, [&](EdgeId e) { return base.contains(e) && !lprime.contains(e); });
    auto in_q = vertex_mask(g, q);
    VertexSet qq;
    for (Vertex v = 0; v < n; ++v)
        if ((g.degree(v) % 2 == 1) != static_cast<bool>(in_q[v])) qq.push_back(v);
    ParityResult pf = bounded_parity_forest(l.graph, k, ConnectivityKind::tree, qq, opts.oracle_cap);
    if (pf.status != Outcome::solution) {
        out.status = Outcome::inconclusive;
        out.note = "no parity forest found in the k-tree-connected part";
        return out;
    }
    SpanningSubgraph forest(g, lift_edges(l, pf.edges));
    SpanningSubgraph h(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!forest.contains(e)) h.insert(e);
    for (Vertex v = 0; v < n; ++v) {
        int dg = g.degree(v);
        int drop = kind == LargeDegreeKind::tree ? (dg - m + k - 1) / k : (dg + 2 * k - 1) / (2 * k) + 1;
        if (kind == LargeDegreeKind::tree && dg - m <= 0) drop = 0;
        if (h.degree(v) < dg - drop) throw std::logic_error("large-degree subgraph missed a lower bound");
        if ((h.degree(v) % 2 == 1) != static_cast<bool>(in_q[v])) throw std::logic_error("large-degree subgraph has wrong parity");
    }
    if (!is_m_tree_connected(h, m)) throw std::logic_error("large-degree subgraph is not m-tree-connected");
    out.status = Outcome::solution;
    out.edges = h.edges();
    return out;
}

// Connected spanning subgraph with every degree in {2, 4}: the edge support
// of a closed trail meeting each vertex at most twice.
inline FactorResult connected_24_factor(const Multigraph& g, const SearchOptions& opts = {})
{
    int n = g.vertex_count();
    if (n < 2) throw PreconditionError(Violation::invalid_spec, "graph needs at least two vertices");
    FactorResult out;
    TrailResult t = f_trail(g, std::vector<int>(n, 2), Rational(0), opts);
    if (t.deficient) {
        out.status = Outcome::certificate;
        out.deficient = t.deficient;
        return out;
    }
    if (t.status == Outcome::solution) {
        SpanningSubgraph h(g, t.trail);
        for (Vertex v = 0; v < n; ++v)
            if (h.degree(v) != 2 && h.degree(v) != 4) throw std::logic_error("{2,4}-factor has a bad degree");
        if (count_components(h) != 1) throw std::logic_error("{2,4}-factor is disconnected");
        out.status = Outcome::solution;
        out.edges = h.edges();
        return out;
    }
    out.note = "no 2-trail found";
    if (n <= opts.oracle_cap) {
        HypothesisVerdict v = check_hypothesis(g, Family::two_four, {}, opts.oracle_cap);
        if (!v.holds) {
            out.status = Outcome::certificate;
            out.certificate = certificate_from(*v.violation, Family::two_four);
            out.note.clear();
        }
    }
    return out;
}

}  // namespace treeconn
