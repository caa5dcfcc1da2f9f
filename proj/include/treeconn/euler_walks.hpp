#pragma once

#include "errors.hpp"
#include "excess_search.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "parity_forest.hpp"
#include "tree_packing.hpp"

#include <functional>

namespace treeconn {

// Cyclic edge sequence; edges pairwise distinct.
using ClosedTrail = std::vector<EdgeId>;

// Cyclic vertex sequence; consecutive vertices adjacent, edges may repeat.
using ClosedWalk = std::vector<Vertex>;

// Circuit through every edge of the multigraph (Hierholzer). Isolated
// vertices are allowed; the edges must form one connected piece.
inline ClosedTrail eulerian_circuit(const Multigraph& g)
{
    int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) % 2) throw PreconditionError(Violation::not_eulerian, "vertex " + std::to_string(v) + " has odd degree");
    if (g.edge_count() == 0) return {};
    Vertex start = g.edge(0).u;
    std::vector<char> used(g.edge_count(), 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
    ClosedTrail out;
    while (!stack.empty()) {
        Vertex v = stack.back().first;
        const EdgeList& inc = g.incident(v);
        while (next[v] < inc.size() && used[inc[next[v]]]) ++next[v];
        if (next[v] == inc.size()) {
            if (stack.back().second >= 0) out.push_back(stack.back().second);
            stack.pop_back();
            continue;
        }
        EdgeId e = inc[next[v]];
        used[e] = 1;
        stack.push_back({g.other(e, v), e});
    }
    if (static_cast<int>(out.size()) != g.edge_count())
        throw PreconditionError(Violation::disconnected, "edges do not form a connected graph");
    std::reverse(out.begin(), out.end());
    return out;
}

// Circuit through the edges of h, as host edge ids.
inline ClosedTrail eulerian_circuit(const SpanningSubgraph& h)
{
    DerivedGraph d = as_graph(h);
    ClosedTrail out = eulerian_circuit(d.graph);
    for (EdgeId& e : out) e = d.edge_to_host[e];
    return out;
}

// Vertex sequence of a closed trail: entry i is the vertex where edge i starts.
inline std::optional<ClosedWalk> trail_vertices(const Multigraph& g, const ClosedTrail& trail)
{
    if (trail.empty()) return ClosedWalk{};
    for (EdgeId e : trail)
        if (e < 0 || e >= g.edge_count()) return std::nullopt;
    for (Vertex start : {g.edge(trail[0]).u, g.edge(trail[0]).v}) {
        ClosedWalk seq;
        Vertex cur = start;
        bool ok = true;
        for (EdgeId e : trail) {
            const Edge& ed = g.edge(e);
            if (ed.u != cur && ed.v != cur) {
                ok = false;
                break;
            }
            seq.push_back(cur);
            cur = g.other(e, cur);
        }
        if (ok && cur == start) return seq;
    }
    return std::nullopt;
}

struct WalkReport {
    bool ok = true;
    std::vector<std::string> problems;
    std::vector<int> visits;

    void fail(std::string why)
    {
        ok = false;
        problems.push_back(std::move(why));
    }
};

namespace detail {

inline void check_visits(const Multigraph& g, WalkReport& r, const std::vector<int>& f)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (r.visits[v] == 0) {
            r.fail("not spanning: vertex " + std::to_string(v) + " is never visited");
            return;
        }
        if (!f.empty() && r.visits[v] > f[v]) {
            r.fail("vertex " + std::to_string(v) + " visited " + std::to_string(r.visits[v]) + " times, cap " +
                   std::to_string(f[v]));
            return;
        }
    }
}

}  // namespace detail

// f may be empty (no caps); entries below zero mean uncapped.
inline WalkReport validate_walk(const Multigraph& g, const ClosedWalk& walk, std::vector<int> f = {},
                                const EdgeList& matching = {})
{
    WalkReport r;
    int n = g.vertex_count();
    for (int& x : f)
        if (x < 0) x = std::numeric_limits<int>::max();
    r.visits.assign(n, 0);
    for (Vertex v : walk) {
        if (v < 0 || v >= n) {
            r.fail("unknown vertex " + std::to_string(v));
            return r;
        }
        ++r.visits[v];
    }
    if (n == 1 && walk.empty()) r.visits[0] = 1;
    std::set<std::pair<Vertex, Vertex>> steps;
    for (std::size_t i = 0; i < walk.size() && walk.size() > 1; ++i) {
        Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
        bool adjacent = false;
        for (EdgeId e : g.incident(a))
            if (g.other(e, a) == b) adjacent = true;
        if (!adjacent) {
            r.fail("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
            return r;
        }
        steps.insert({std::min(a, b), std::max(a, b)});
    }
    if (walk.size() == 1 && n > 1) r.fail("a single vertex is not a closed walk of a larger graph");
    for (EdgeId e : matching) {
        const Edge& ed = g.edge(e);
        if (!steps.count({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}))
            r.fail("matching edge " + std::to_string(e) + " is not traversed");
    }
    detail::check_visits(g, r, f);
    return r;
}

inline WalkReport validate_trail(const Multigraph& g, const ClosedTrail& trail, std::vector<int> f = {})
{
    WalkReport r;
    int n = g.vertex_count();
    for (int& x : f)
        if (x < 0) x = std::numeric_limits<int>::max();
    r.visits.assign(n, 0);
    std::vector<char> seen(g.edge_count(), 0);
    for (EdgeId e : trail) {
        if (e < 0 || e >= g.edge_count()) {
            r.fail("unknown edge " + std::to_string(e));
            return r;
        }
        if (seen[e]) {
            r.fail("edge " + std::to_string(e) + " repeated");
            return r;
        }
        seen[e] = 1;
    }
    auto seq = trail_vertices(g, trail);
    if (!seq) {
        r.fail("consecutive edges do not share endpoints");
        return r;
    }
    for (Vertex v : *seq) ++r.visits[v];
    if (n == 1 && trail.empty()) r.visits[0] = 1;
    detail::check_visits(g, r, f);
    return r;
}

// Spanning Eulerian subgraph of a 2-tree-connected h, as a circuit: h itself
// when all its degrees are even, else T1 plus the part of T2 that repairs the
// odd degrees of T1.
inline ClosedTrail spanning_eulerian_of_2tc(const SpanningSubgraph& h)
{
    const Multigraph& g = h.host();
    DerivedGraph d = as_graph(h);
    PackOutcome p = pack_trees(d.graph, 2);
    if (!p.packed()) throw PreconditionError(Violation::not_tree_connected, "graph is not 2-tree-connected");
    if (g.vertex_count() == 1) return {};
    bool even = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) even = even && h.degree(v) % 2 == 0;
    if (even) return eulerian_circuit(h);
    SpanningSubgraph t1(g, lift_edges(d, p.packing->trees[0]));
    SpanningSubgraph t2(g, lift_edges(d, p.packing->trees[1]));
    VertexSet odd;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (t1.degree(v) % 2) odd.push_back(v);
    for (EdgeId e : tree_parity_subforest(t2, odd)) t1.insert(e);
    return eulerian_circuit(t1);
}

inline ClosedTrail spanning_eulerian_of_2tc(const Multigraph& g) { return spanning_eulerian_of_2tc(SpanningSubgraph::full(g)); }

struct WalkResult {
    Outcome status = Outcome::inconclusive;
    ClosedWalk walk;
    std::optional<Certificate> certificate;
    std::string note;
};

struct TrailResult {
    Outcome status = Outcome::inconclusive;
    ClosedTrail trail;
    std::optional<Certificate> certificate;
    std::optional<DeficientPartition> deficient;
    std::string note;
};

namespace detail {

inline std::optional<Certificate> recheck(const Multigraph& g, Family fam, const HypothesisParams& p, const VertexSet& s)
{
    HypothesisRow row = evaluate_hypothesis(g, fam, p, s);
    if (row.holds) return std::nullopt;
    return certificate_from(row, fam);
}

}  // namespace detail

// Spanning closed walk meeting each v at most f(v) times and traversing every
// edge of the matching: an (f+1)-tree T containing the matching, plus a doubled
// f-forest with the parities of T, read off as an Euler circuit.
inline WalkResult f_walk(const Multigraph& g, const std::vector<int>& f, const EdgeList& matching = {},
                         const SearchOptions& opts = {})
{
    int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("f needs one value per vertex");
    for (int x : f)
        if (x < 1) throw PreconditionError(Violation::invalid_spec, "f must be positive");
    SpanningSubgraph mset(g, matching);
    if (mset.size() != static_cast<int>(matching.size()) || !is_matching(mset))
        throw PreconditionError(Violation::not_matching, "M is not a matching");
    WalkResult out;
    HypothesisParams walk_params;
    walk_params.f = f;
    if (!is_connected(g)) {
        out.status = Outcome::certificate;
        out.certificate = detail::recheck(g, Family::walk, walk_params, {});
        return out;
    }
    if (n == 1) {
        out.status = Outcome::solution;
        out.walk = {0};
        return out;
    }
    DegreeSpec spec;
    for (Vertex v = 0; v < n; ++v) spec.X.push_back(v);
    spec.eta.resize(n);
    for (Vertex v = 0; v < n; ++v) spec.eta[v] = Rational(f[v] + 1);
    spec.forced = matching;
    BoundedResult tree = bounded_spanning_tree(g, spec, TreeMode::plain, opts);
    if (tree.status != Outcome::solution) {
        if (tree.certificate) out.certificate = detail::recheck(g, Family::walk, walk_params, tree.certificate->S);
        out.status = out.certificate ? Outcome::certificate : Outcome::inconclusive;
        out.note = out.certificate ? "" : "no (f+1)-tree found: " + tree.note;
        return out;
    }
    SpanningSubgraph t(g, tree.edges);
    VertexSet odd;
    for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) % 2) odd.push_back(v);
    ParityResult pf = parity_forest(g, f, odd, opts.oracle_cap);
    if (pf.status != Outcome::solution) {
        if (pf.certificate) out.certificate = detail::recheck(g, Family::walk, walk_params, pf.certificate->S);
        out.status = out.certificate ? Outcome::certificate : Outcome::inconclusive;
        out.note = out.certificate ? "" : "no parity forest found";
        return out;
    }
    // T + F as a multigraph: local edge i < |T| is T's, the rest copy F.
    std::vector<Edge> edges;
    for (EdgeId e : tree.edges) edges.push_back(g.edge(e));
    for (EdgeId e : pf.edges) edges.push_back(g.edge(e));
    Multigraph h(n, edges);
    ClosedTrail circuit = eulerian_circuit(h);
    out.walk = *trail_vertices(h, circuit);
    WalkReport rep = validate_walk(g, out.walk, f, matching);
    if (!rep.ok) throw std::logic_error("f-walk failed validation: " + rep.problems.front());
    out.status = Outcome::solution;
    return out;
}

namespace detail {

// Connected spanning even subgraph with d(v) <= 2f(v), by edge-by-edge search.
// nullopt when none exists or the node budget runs out.
inline std::optional<EdgeList> exhaustive_trail_support(const Multigraph& g, const std::vector<int>& f,
                                                         long long budget)
{
    int n = g.vertex_count();
    std::vector<int> deg(n, 0), left(n, 0);
    for (Vertex v = 0; v < n; ++v) left[v] = g.degree(v);
    EdgeList chosen;
    long long nodes = 0;
    auto closed_ok = [&](Vertex v) { return left[v] > 0 || (deg[v] % 2 == 0 && (deg[v] > 0 || n == 1)); };
    std::function<bool(EdgeId)> rec = [&](EdgeId e) -> bool {
        if (++nodes > budget) return false;
        if (e == g.edge_count()) return is_connected(as_graph(SpanningSubgraph(g, chosen)).graph);
        const Edge& ed = g.edge(e);
        --left[ed.u];
        --left[ed.v];
        bool found = false;
        if (deg[ed.u] < 2 * f[ed.u] && deg[ed.v] < 2 * f[ed.v]) {
            ++deg[ed.u];
            ++deg[ed.v];
            chosen.push_back(e);
            if (closed_ok(ed.u) && closed_ok(ed.v)) found = rec(e + 1);
            if (!found) {
                chosen.pop_back();
                --deg[ed.u];
                --deg[ed.v];
            }
        }
        if (!found && closed_ok(ed.u) && closed_ok(ed.v)) found = rec(e + 1);
        ++left[ed.u];
        ++left[ed.v];
        return found;
    };
    if (n == 1) return EdgeList{};
    if (rec(0)) return chosen;
    return std::nullopt;
}

inline TrailResult trail_from_subgraph(const Multigraph& g, const BoundedResult& r, const std::vector<int>& f,
                                       Family fam, const HypothesisParams& params, const SearchOptions& opts = {})
{
    TrailResult out;
    if (r.deficient) {
        out.status = Outcome::certificate;
        out.deficient = r.deficient;
        return out;
    }
    if (r.status != Outcome::solution) {
        if (r.certificate) out.certificate = recheck(g, fam, params, r.certificate->S);
        out.status = out.certificate ? Outcome::certificate : Outcome::inconclusive;
        if (!out.certificate) out.note = "no bounded 2-tree-connected subgraph found: " + r.note;
        // The hypothesis is sufficient, not necessary: small graphs may still have a trail.
        if (opts.fallbacks && g.vertex_count() <= opts.exact_cap)
            if (auto support = exhaustive_trail_support(g, f, opts.exact_node_budget)) {
                out.trail = eulerian_circuit(SpanningSubgraph(g, *support));
                WalkReport rep = validate_trail(g, out.trail, f);
                if (!rep.ok) throw std::logic_error("f-trail failed validation: " + rep.problems.front());
                out.status = Outcome::solution;
                out.certificate.reset();
                out.note = "hypothesis fails; trail found by exhaustive search";
            }
        return out;
    }
    out.trail = spanning_eulerian_of_2tc(SpanningSubgraph(g, r.edges));
    WalkReport rep = validate_trail(g, out.trail, f);
    if (!rep.ok) throw std::logic_error("f-trail failed validation: " + rep.problems.front());
    out.status = Outcome::solution;
    return out;
}

}  // namespace detail

// Spanning closed trail meeting each v at most f(v) times, from a
// 2-tree-connected H with d_H <= 2f + 1.
inline TrailResult f_trail(const Multigraph& g, const std::vector<int>& f, Rational lambda = 0,
                           const SearchOptions& opts = {})
{
    int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("f needs one value per vertex");
    for (int x : f)
        if (x < 1) throw PreconditionError(Violation::invalid_spec, "f must be positive");
    if (lambda < 0 || lambda > Rational(1, 2)) throw PreconditionError(Violation::invalid_spec, "lambda must lie in [0, 1/2]");
    DegreeSpec spec;
    spec.m = 2;
    spec.lambda = lambda;
    spec.eta.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        spec.X.push_back(v);
        spec.eta[v] = Rational(f[v]) + Rational(1, 2) + 2 * lambda;
    }
    HypothesisParams p;
    p.f = f;
    p.lambda = lambda;
    p.m = 2;
    return detail::trail_from_subgraph(g, bounded_m_subgraph(g, spec, SubgraphMode::plain, opts), f, Family::trail, p, opts);
}

// Returns a spanning Eulerian edge set L with d_L(v) <= 2f(v) on S, or nullopt.
using TrailProvider = std::function<std::optional<EdgeList>(const VertexSet& S)>;

// Trail meeting each v in the independent set X at most f(v) times. When the
// cascade set S violates Omega(G\S) <= sum_S (f - 1/2) + 1, the provider's
// trail L is rebuilt inside every 2-tree-connected part of H\S.
inline TrailResult f_trail_on_independent_set(const Multigraph& g, const VertexSet& x, const std::vector<int>& f,
                                              const TrailProvider& provider = nullptr, const SearchOptions& opts = {})
{
    int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("f needs one value per vertex");
    auto in_x = vertex_mask(g, x);
    for (const Edge& e : g.edges())
        if (in_x[e.u] && in_x[e.v]) throw PreconditionError(Violation::not_independent, "X is not independent");
    std::vector<int> caps(n, -1);
    ExcessTarget h(n);
    for (Vertex v = 0; v < n; ++v) {
        h[v] = g.degree(v) + 1;
        if (in_x[v]) {
            if (f[v] < 1) throw PreconditionError(Violation::invalid_spec, "f must be positive on X");
            h[v] = 2 * f[v] + 1;
            caps[v] = f[v];
        }
    }
    TrailResult out;
    MinExcessResult r = min_excess_m_subgraph(g, 2, h, std::nullopt, opts);
    if (r.deficient) {
        out.status = Outcome::certificate;
        out.deficient = r.deficient;
        return out;
    }
    auto finish = [&](ClosedTrail trail) {
        WalkReport rep = validate_trail(g, trail, caps);
        if (!rep.ok) throw std::logic_error("independent-set trail failed validation: " + rep.problems.front());
        out.trail = std::move(trail);
        out.status = Outcome::solution;
        return out;
    };
    if (r.te == 0) return finish(spanning_eulerian_of_2tc(SpanningSubgraph(g, r.edges)));
    if (r.status != Outcome::solution) {
        out.note = "cascade search stalled";
        return out;
    }
    HypothesisParams p;
    p.X = x;
    p.f = f;
    p.m = 2;
    HypothesisRow row = evaluate_hypothesis(g, Family::trail_independent, p, r.S);
    if (row.holds) {
        out.note = "cascade set satisfies the inequality but excess remains";
        return out;
    }
    std::optional<EdgeList> l = provider ? provider(r.S) : std::nullopt;
    if (!l) {
        out.status = Outcome::certificate;
        out.certificate = certificate_from(row, Family::trail_independent);
        return out;
    }
    // Parts of V\S: the 2-tree-connected components of H\S.
    SpanningSubgraph hs(g, r.edges);
    auto in_s = vertex_mask(g, r.S);
    DerivedGraph rest = edge_subgraph_if(g, [&](EdgeId e) {
        return hs.contains(e) && !in_s[g.edge(e).u] && !in_s[g.edge(e).v];
    });
    std::vector<int> part = m_components(rest.graph, 2).partition.labels(n);
    for (Vertex s : r.S) part[s] = -1;
    // Two spanning trees of H that stay connected inside every part: pack
    // each part, then pack the quotient H/P.
    DerivedGraph hgraph = as_graph(hs);
    SpanningSubgraph t1(g), t2(g);
    VertexPartition blocks;
    std::map<int, VertexSet> by_label;
    for (Vertex v = 0; v < n; ++v) {
        if (part[v] >= 0)
            by_label[part[v]].push_back(v);
        else
            blocks.parts.push_back({v});
    }
    for (auto& [lab, vs] : by_label) {
        blocks.parts.push_back(vs);
        DerivedGraph a = induced_subgraph(hgraph.graph, vs);
        PackOutcome pa = pack_trees(a.graph, 2);
        if (!pa.packed()) throw std::logic_error("part of H\\S is not 2-tree-connected");
        for (EdgeId e : pa.packing->trees[0]) t1.insert(hgraph.edge_to_host[a.edge_to_host[e]]);
        for (EdgeId e : pa.packing->trees[1]) t2.insert(hgraph.edge_to_host[a.edge_to_host[e]]);
    }
    DerivedGraph quotient = contract_partition(hgraph.graph, blocks);
    PackOutcome pq = pack_trees(quotient.graph, 2);
    if (!pq.packed()) throw std::logic_error("contracted H is not 2-tree-connected");
    for (EdgeId e : pq.packing->trees[0]) t1.insert(hgraph.edge_to_host[quotient.edge_to_host[e]]);
    for (EdgeId e : pq.packing->trees[1]) t2.insert(hgraph.edge_to_host[quotient.edge_to_host[e]]);
    // L1: L with each L[A] replaced by T1[A].
    SpanningSubgraph l1(g);
    auto same_part = [&](EdgeId e) {
        const Edge& ed = g.edge(e);
        return part[ed.u] >= 0 && part[ed.u] == part[ed.v];
    };
    for (EdgeId e : *l)
        if (!same_part(e)) l1.insert(e);
    for (EdgeId e : t1.edges())
        if (same_part(e)) l1.insert(e);
    VertexSet odd;
    for (Vertex v = 0; v < n; ++v)
        if (l1.degree(v) % 2) odd.push_back(v);
    SpanningSubgraph t2_inside(g);
    for (EdgeId e : t2.edges())
        if (same_part(e)) t2_inside.insert(e);
    for (EdgeId e : tree_parity_subforest(t2_inside, odd)) l1.insert(e);
    return finish(eulerian_circuit(l1));
}

}  // namespace treeconn
