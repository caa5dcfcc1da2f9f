#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "tree_packing.hpp"

#include <functional>
#include <optional>
#include <random>
#include <unordered_set>

namespace treeconn {

// Per-vertex integer degree target h.
using ExcessTarget = std::vector<int>;

// te(H, h) = sum over v of max(0, d_H(v) - h(v)).
inline int total_excess(const SpanningSubgraph& h, const ExcessTarget& target)
{
    if (static_cast<int>(target.size()) != h.vertex_count()) throw std::invalid_argument("target must have one value per vertex");
    int te = 0;
    for (Vertex v = 0; v < h.vertex_count(); ++v) te += std::max(0, h.degree(v) - target[v]);
    return te;
}

enum class Outcome { solution, certificate, inconclusive };

inline const char* outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::solution: return "solution";
    case Outcome::certificate: return "certificate";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct Certificate {
    VertexSet S;
    Rational lhs;
    Rational rhs;
    Family family = Family::tree_plain;
    bool strict = false;
};

inline Certificate certificate_from(const HypothesisRow& row, Family fam)
{
    return {row.S, row.lhs, row.rhs, fam, row.strict};
}

struct SearchOptions {
    int neutral_budget = -1;  // te-neutral exchanges between two improvements; -1 picks 8|E|+64
    int restarts = 4;         // extra runs from shuffled initial solutions when a run stalls
    int exact_cap = 12;       // exact tree search fallback up to this many vertices
    long long exact_node_budget = 4'000'000;
    int oracle_cap = 18;      // certificate search by subset enumeration up to |X| this large
    bool fallbacks = true;
};

struct MinExcessResult {
    Outcome status = Outcome::inconclusive;
    EdgeList edges;
    int te = 0;
    VertexSet S;
    std::optional<DeficientPartition> deficient;  // set when G is not m-tree-connected
};

namespace detail {

// Local search mirroring the cascade V_1, V_2, ... of the excess proofs.
// The state H always contains the m-critical forced subgraph F. With goal
// min_excess, H is minimally m-tree-connected and te(H, target) is lowered;
// with goal min_omega, te stays 0 and Omega_m(H) is lowered.
class CascadeEngine {
public:
    enum class Goal { min_excess, min_omega };
    enum class Stop { fixed_point, stuck };

    CascadeEngine(const Multigraph& g, int m, const SpanningSubgraph& forced, std::vector<int> target, Goal goal,
                  const std::vector<char>* pool = nullptr)
        : g_(g), m_(m), forced_(forced), target_(std::move(target)), goal_(goal), pool_(pool)
    {
    }

    Stop run(SpanningSubgraph& h, VertexSet& s_out, int budget)
    {
        int n = g_.vertex_count();
        if (budget < 0) budget = 8 * g_.edge_count() + 64;
        std::unordered_set<std::string> seen;
        int neutral = 0;
        for (;;) {
            std::vector<char> in_s(n, 0);
            std::vector<int> level(n, 0);
            int lev = 0;
            if (goal_ == Goal::min_excess) {
                lev = 1;
                for (Vertex v = 0; v < n; ++v)
                    if (h.degree(v) > target_[v]) in_s[v] = 1, level[v] = 1;
            }
            std::vector<int> prev_lab;  // labels of the previous pass; empty at the first pass
            std::optional<EdgeId> found;
            std::vector<int> lab;
            for (;;) {
                lab = labels(h, in_s);
                std::vector<Vertex> fresh;
                std::vector<char> marked(n, 0);
                for (EdgeId e = 0; e < g_.edge_count() && !found; ++e) {
                    if (h.contains(e) || (pool_ && !(*pool_)[e])) continue;
                    Vertex x = g_.edge(e).u, y = g_.edge(e).v;
                    if (in_s[x] || in_s[y] || lab[x] == lab[y]) continue;
                    bool sx = h.degree(x) < target_[x], sy = h.degree(y) < target_[y];
                    if (sx && sy) {
                        found = e;
                        break;
                    }
                    if (!sx && !marked[x]) marked[x] = 1, fresh.push_back(x);
                    if (!sy && !marked[y]) marked[y] = 1, fresh.push_back(y);
                }
                if (found || fresh.empty()) break;
                prev_lab = lab;
                ++lev;
                for (Vertex v : fresh) in_s[v] = 1, level[v] = lev;
            }
            if (!found) {
                s_out = mask_to_set(in_s);
                return Stop::fixed_point;
            }
            int te_before = total_excess(h, target_);
            int size_before = h.size();
            if (!apply(h, *found, in_s, level, prev_lab)) {
                s_out = mask_to_set(in_s);
                return Stop::stuck;
            }
            bool progress = total_excess(h, target_) < te_before || h.size() > size_before;
            if (progress) {
                seen.clear();
                neutral = 0;
                continue;
            }
            std::string key(g_.edge_count(), '0');
            for (EdgeId e = 0; e < g_.edge_count(); ++e)
                if (h.contains(e)) key[e] = '1';
            if (!seen.insert(key).second || ++neutral > budget) {
                s_out = mask_to_set(in_s);
                return Stop::stuck;
            }
        }
    }

private:
    // Labels of the m-tree-connected components of H \ [S, F].
    std::vector<int> labels(const SpanningSubgraph& h, const std::vector<char>& in_s) const
    {
        auto keep = [&](EdgeId e) {
            if (!h.contains(e)) return false;
            if (forced_.contains(e)) return true;
            return !in_s[g_.edge(e).u] && !in_s[g_.edge(e).v];
        };
        if (m_ == 1) return component_labels_if(g_, keep);
        DerivedGraph d = edge_subgraph_if(g_, keep);
        return m_components(d.graph, m_).partition.labels(g_.vertex_count());
    }

    bool locally_tree_connected(const SpanningSubgraph& h, const std::vector<int>& local, int z_size) const
    {
        std::vector<Edge> edges;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (!h.contains(e)) continue;
            const Edge& ed = g_.edge(e);
            if (local[ed.u] >= 0 && local[ed.v] >= 0) edges.push_back({local[ed.u], local[ed.v]});
        }
        return is_m_tree_connected(Multigraph(z_size, std::move(edges)), m_);
    }

    bool apply(SpanningSubgraph& h, EdgeId add, const std::vector<char>& in_s, const std::vector<int>& level,
               const std::vector<int>& prev_lab)
    {
        Vertex x = g_.edge(add).u;
        int n = g_.vertex_count();
        if (prev_lab.empty() && goal_ == Goal::min_omega) {
            // Joins two m-tree-connected components of H: Omega_m drops by 1/m.
            h.insert(add);
            return true;
        }
        std::vector<int> local(n, -1);
        int z = 0;
        for (Vertex v = 0; v < n; ++v)
            if (prev_lab.empty() || prev_lab[v] == prev_lab[x]) local[v] = z++;
        struct Candidate {
            int excess_ends;
            int level;
            EdgeId e;
        };
        std::vector<Candidate> cands;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (!h.contains(e) || forced_.contains(e)) continue;
            const Edge& ed = g_.edge(e);
            if (local[ed.u] < 0 || local[ed.v] < 0) continue;
            if (!in_s[ed.u] && !in_s[ed.v]) continue;
            int ex = (h.degree(ed.u) > target_[ed.u]) + (h.degree(ed.v) > target_[ed.v]);
            int lv = std::min(in_s[ed.u] ? level[ed.u] : 1 << 20, in_s[ed.v] ? level[ed.v] : 1 << 20);
            cands.push_back({ex, lv, e});
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.excess_ends != b.excess_ends) return a.excess_ends > b.excess_ends;
            if (a.level != b.level) return a.level < b.level;
            return a.e < b.e;
        });
        h.insert(add);
        for (const Candidate& c : cands) {
            h.erase(c.e);
            if (locally_tree_connected(h, local, z)) return true;
            h.insert(c.e);
        }
        h.erase(add);
        return false;
    }

    const Multigraph& g_;
    int m_;
    const SpanningSubgraph& forced_;
    std::vector<int> target_;
    Goal goal_;
    const std::vector<char>* pool_;
};

inline std::vector<EdgeId> shuffled_order(int count, int round)
{
    std::vector<EdgeId> order(count);
    std::iota(order.begin(), order.end(), 0);
    if (round > 0) {
        std::mt19937 rng(static_cast<unsigned>(round) * 2654435761u);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

// Minimally m-tree-connected H containing the m-critical F, or nullopt when
// G is not m-tree-connected. F is independent in the union of m graphic
// matroids, so offering its edges first keeps all of them.
inline std::optional<SpanningSubgraph> initial_solution(const Multigraph& g, int m, const SpanningSubgraph& f, int round)
{
    ForestUnion u(g, m);
    for (EdgeId e : f.edges())
        if (!u.insert(e)) throw std::logic_error("forced subgraph is not m-critical");
    for (EdgeId e : shuffled_order(g.edge_count(), round))
        if (!f.contains(e)) u.insert(e);
    if (u.size() != m * (g.vertex_count() - 1)) return std::nullopt;
    SpanningSubgraph h(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (u.owner(e) >= 0) h.insert(e);
    return h;
}

inline std::vector<int> add_degrees(const ExcessTarget& h, const SpanningSubgraph& f)
{
    std::vector<int> t(h);
    for (Vertex v = 0; v < f.vertex_count(); ++v) t[v] += f.degree(v);
    return t;
}

}  // namespace detail

// H \ [S, F] for a spanning subgraph H of G.
inline DerivedGraph subgraph_without(const SpanningSubgraph& h, const VertexSet& s, const SpanningSubgraph& f)
{
    const Multigraph& g = h.host();
    auto mask = vertex_mask(g, s);
    return edge_subgraph_if(g, [&](EdgeId e) {
        return h.contains(e) && (f.contains(e) || (!mask[g.edge(e).u] && !mask[g.edge(e).v]));
    });
}

// Conditions of the excess theorems for the returned (H, S):
// Omega_m(G\[S,F]) = Omega_m(H\[S,F]); S holds every vertex with
// d_H > h + d_F; d_H >= h + d_F on S.
inline bool excess_conditions_hold(const Multigraph& g, int m, const SpanningSubgraph& f, const SpanningSubgraph& h,
                                   const ExcessTarget& target, const VertexSet& s)
{
    auto mask = vertex_mask(g, s);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int bound = target[v] + f.degree(v);
        if (h.degree(v) > bound && !mask[v]) return false;
        if (mask[v] && h.degree(v) < bound) return false;
    }
    Rational lhs = omega_m(remove_incident_except_forest(g, s, f).graph, m);
    Rational rhs = omega_m(subgraph_without(h, s, f).graph, m);
    return lhs == rhs;
}

// Minimally m-tree-connected H containing F (after m-critical reduction of F,
// whose removed edges are added back at the end) with locally minimum
// te(H, h + d_F), together with the cascade set S.
inline MinExcessResult min_excess_m_subgraph(const Multigraph& g, int m, const ExcessTarget& h,
                                             const std::optional<SpanningSubgraph>& forced = std::nullopt,
                                             const SearchOptions& opts = {})
{
    if (g.vertex_count() < 1) throw std::invalid_argument("graph must have at least one vertex");
    if (static_cast<int>(h.size()) != g.vertex_count()) throw std::invalid_argument("h must have one value per vertex");
    SpanningSubgraph f = forced ? *forced : SpanningSubgraph(g);
    check_same_host(g, f);
    MinExcessResult out;
    PackOutcome packed = pack_trees(g, m);
    if (!packed.packed()) {
        out.status = Outcome::certificate;
        out.deficient = packed.deficient;
        return out;
    }
    SpanningSubgraph fp = m == 1 ? f : m_critical_reduce(f, m);
    if (m == 1 && !is_forest(f)) throw PreconditionError(Violation::not_forest, "F is not a forest");
    std::vector<int> target = detail::add_degrees(h, fp);
    detail::CascadeEngine engine(g, m, fp, target, detail::CascadeEngine::Goal::min_excess);
    std::optional<SpanningSubgraph> best;
    VertexSet best_s;
    int best_te = 0;
    for (int round = 0; round <= opts.restarts; ++round) {
        auto start = detail::initial_solution(g, m, fp, round);
        if (!start) throw std::logic_error("packing succeeded but no initial solution");
        SpanningSubgraph cur = *start;
        VertexSet s;
        auto stop = engine.run(cur, s, opts.neutral_budget);
        int te = total_excess(cur, target);
        if (stop == detail::CascadeEngine::Stop::fixed_point) {
            for (EdgeId e : f.edges()) cur.insert(e);
            if (!excess_conditions_hold(g, m, f, cur, h, s))
                throw std::logic_error("cascade fixed point failed the excess conditions");
            out.status = Outcome::solution;
            out.edges = cur.edges();
            out.te = te;
            out.S = s;
            return out;
        }
        if (!best || te < best_te) {
            best = cur;
            best_s = s;
            best_te = te;
        }
    }
    for (EdgeId e : f.edges()) best->insert(e);
    out.status = Outcome::inconclusive;
    out.edges = best->edges();
    out.te = best_te;
    out.S = best_s;
    return out;
}

inline MinExcessResult min_excess_spanning_tree(const Multigraph& g, const SpanningSubgraph& f, const ExcessTarget& h,
                                                const SearchOptions& opts = {})
{
    check_same_host(g, f);
    if (!is_connected(g)) throw PreconditionError(Violation::disconnected, "G is not connected");
    if (!is_forest(f)) throw PreconditionError(Violation::not_forest, "F is not a forest");
    return min_excess_m_subgraph(g, 1, h, f, opts);
}

// (X, eta, lambda, m) plus an optional forced subgraph, as host edge ids.
struct DegreeSpec {
    VertexSet X;
    std::vector<Rational> eta;  // indexed by vertex; entries outside X are ignored
    Rational lambda{0};
    int m = 1;
    EdgeList forced;
};

enum class TreeMode { plain, forest_exception };

enum class SubgraphMode {
    plain,                   // cap ceil(m eta - m^2 lambda) + max(0, d_F - m)
    first_generalization,    // cap ceil(m eta - m^2 lambda) + d_F - m
};

struct BoundedResult {
    Outcome status = Outcome::inconclusive;
    EdgeList edges;
    std::optional<Certificate> certificate;
    std::optional<DeficientPartition> deficient;
    std::vector<int> bound;  // per-vertex cap that the solution meets
    std::string note;
};

inline void validate_spec(const Multigraph& g, const DegreeSpec& spec)
{
    int n = g.vertex_count();
    if (spec.m < 1) throw PreconditionError(Violation::invalid_spec, "m must be at least 1");
    if (static_cast<int>(spec.eta.size()) != n) throw PreconditionError(Violation::invalid_spec, "eta needs one value per vertex");
    for (Vertex v : spec.X) g.check_vertex(v);
    for (EdgeId e : spec.forced) g.check_edge(e);
    Rational lam_max(1, spec.m);
    if (spec.lambda < Rational(0) || spec.lambda > lam_max)
        throw PreconditionError(Violation::invalid_spec, "lambda must lie in [0, 1/m]");
    Rational floor_eta = spec.m * spec.lambda + Rational(spec.m - 1, spec.m);
    for (Vertex v : spec.X)
        if (spec.eta[v] <= floor_eta)
            throw PreconditionError(Violation::invalid_spec, "eta(" + std::to_string(v) + ") must exceed m*lambda + (m-1)/m");
}

namespace detail {

inline HypothesisParams params_from(const DegreeSpec& spec, const SpanningSubgraph& f)
{
    HypothesisParams p;
    p.X = spec.X;
    p.eta = spec.eta;
    p.lambda = spec.lambda;
    p.m = spec.m;
    p.F = f;
    return p;
}

// Exact search for a spanning tree T containing F with d_T <= cap.
// Returns nullopt when the node budget runs out.
class BoundedTreeSearch {
public:
    BoundedTreeSearch(const Multigraph& g, const SpanningSubgraph& f, const std::vector<int>& cap, long long budget)
        : g_(g), cap_(cap), deg_(g.vertex_count(), 0), parent_(g.vertex_count()), size_(g.vertex_count(), 1),
          budget_(budget)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
        comps_ = g.vertex_count();
        for (EdgeId e : f.edges()) {
            take(e);
            chosen_.push_back(e);
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!f.contains(e)) cand_.push_back(e);
    }

    std::optional<std::optional<EdgeList>> solve()
    {
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (deg_[v] > cap_[v]) return std::optional<EdgeList>{};
        bool ok = rec(0);
        if (aborted_) return std::nullopt;
        if (!ok) return std::optional<EdgeList>{};
        EdgeList out = chosen_;
        std::sort(out.begin(), out.end());
        return std::optional<EdgeList>{out};
    }

private:
    int find(int x) const
    {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    void take(EdgeId e)
    {
        const Edge& ed = g_.edge(e);
        int a = find(ed.u), b = find(ed.v);
        if (size_[a] < size_[b]) std::swap(a, b);
        history_.push_back(b);
        parent_[b] = a;
        size_[a] += size_[b];
        --comps_;
        ++deg_[ed.u];
        ++deg_[ed.v];
    }

    void undo(EdgeId e)
    {
        int b = history_.back();
        history_.pop_back();
        int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
        ++comps_;
        --deg_[g_.edge(e).u];
        --deg_[g_.edge(e).v];
    }

    bool still_connectable(std::size_t idx) const
    {
        DisjointSets ds(g_.vertex_count());
        for (Vertex v = 0; v < g_.vertex_count(); ++v) ds.unite(v, find(v));
        for (std::size_t i = idx; i < cand_.size(); ++i) {
            const Edge& ed = g_.edge(cand_[i]);
            if (deg_[ed.u] < cap_[ed.u] && deg_[ed.v] < cap_[ed.v]) ds.unite(ed.u, ed.v);
        }
        return ds.classes == 1;
    }

    bool rec(std::size_t idx)
    {
        if (comps_ == 1) return true;
        if (idx == cand_.size()) return false;
        if (--budget_ < 0) {
            aborted_ = true;
            return false;
        }
        if (!still_connectable(idx)) return false;
        EdgeId e = cand_[idx];
        const Edge& ed = g_.edge(e);
        if (find(ed.u) != find(ed.v) && deg_[ed.u] < cap_[ed.u] && deg_[ed.v] < cap_[ed.v]) {
            take(e);
            chosen_.push_back(e);
            if (rec(idx + 1)) return true;
            chosen_.pop_back();
            undo(e);
            if (aborted_) return false;
        }
        return rec(idx + 1);
    }

    const Multigraph& g_;
    std::vector<int> cap_, deg_, parent_, size_, history_;
    std::vector<EdgeId> cand_;
    EdgeList chosen_;
    int comps_ = 0;
    long long budget_;
    bool aborted_ = false;
};

}  // namespace detail

// Exact spanning tree containing F with degrees at most cap, if one exists
// (outer nullopt: search budget exhausted).
inline std::optional<std::optional<EdgeList>> exact_bounded_tree(const Multigraph& g, const SpanningSubgraph& f,
                                                                  const std::vector<int>& cap,
                                                                  long long budget = 4'000'000)
{
    return detail::BoundedTreeSearch(g, f, cap, budget).solve();
}

namespace detail {

inline BoundedResult finish_bounded(const Multigraph& g, int m, const SpanningSubgraph& f, const ExcessTarget& h,
                                    Family fam, const HypothesisParams& params, const VertexSet& ground,
                                    const SearchOptions& opts)
{
    BoundedResult out;
    out.bound = add_degrees(h, f);
    MinExcessResult r = min_excess_m_subgraph(g, m, h, f, opts);
    if (r.deficient) {
        out.status = Outcome::certificate;
        out.deficient = r.deficient;
        out.note = "graph is not m-tree-connected";
        return out;
    }
    if (r.status == Outcome::solution && r.te == 0) {
        out.status = Outcome::solution;
        out.edges = r.edges;
        return out;
    }
    if (r.status == Outcome::solution) {
        HypothesisRow row = evaluate_hypothesis(g, fam, params, r.S);
        if (!row.holds) {
            out.status = Outcome::certificate;
            out.certificate = certificate_from(row, fam);
            return out;
        }
        out.note = "cascade set does not violate the hypothesis";
    } else {
        out.note = "cascade search stalled";
    }
    if (!opts.fallbacks) return out;
    if (m == 1 && g.vertex_count() <= opts.exact_cap) {
        auto exact = exact_bounded_tree(g, f, out.bound, opts.exact_node_budget);
        if (exact && *exact) {
            out.status = Outcome::solution;
            out.edges = **exact;
            out.note.clear();
            return out;
        }
    }
    if (static_cast<int>(ground.size()) <= opts.oracle_cap) {
        HypothesisVerdict v = check_hypothesis(g, fam, params, opts.oracle_cap);
        if (!v.holds) {
            out.status = Outcome::certificate;
            out.certificate = certificate_from(*v.violation, fam);
            out.note.clear();
            return out;
        }
    }
    out.status = Outcome::inconclusive;
    out.edges = r.edges;
    return out;
}

}  // namespace detail

// Spanning tree T containing the forced forest with
//   plain:            d_T(v) <= ceil(eta(v) - lambda) + max(0, d_F(v) - 1),
//   forest_exception: d_T(v) <= ceil(eta(v) - lambda) + d_F(v) - 1
// for v in X, or a set S violating the matching hypothesis.
inline BoundedResult bounded_spanning_tree(const Multigraph& g, const DegreeSpec& spec, TreeMode mode = TreeMode::plain,
                                           const SearchOptions& opts = {})
{
    validate_spec(g, spec);
    if (spec.m != 1) throw PreconditionError(Violation::invalid_spec, "bounded_spanning_tree needs m = 1");
    if (!is_connected(g)) throw PreconditionError(Violation::disconnected, "G is not connected");
    SpanningSubgraph f(g, spec.forced);
    if (!is_forest(f)) throw PreconditionError(Violation::not_forest, "forced subgraph is not a forest");
    int n = g.vertex_count();
    ExcessTarget h(n);
    for (Vertex v = 0; v < n; ++v) h[v] = g.degree(v) + 1;
    for (Vertex v : spec.X) {
        int base = static_cast<int>(ceil_of(spec.eta[v] - spec.lambda));
        h[v] = mode == TreeMode::forest_exception || f.degree(v) > 0 ? base - 1 : base;
    }
    Family fam = mode == TreeMode::plain ? Family::tree_plain : Family::tree_forest;
    return detail::finish_bounded(g, 1, f, h, fam, detail::params_from(spec, f), spec.X, opts);
}

// m-tree-connected spanning H containing the forced subgraph with
// d_H(v) <= ceil(m eta(v) - m^2 lambda) + max(0, d_F(v) - m) (plain) or
// + d_F(v) - m (first_generalization) on X, or a violating set S.
inline BoundedResult bounded_m_subgraph(const Multigraph& g, const DegreeSpec& spec,
                                        SubgraphMode mode = SubgraphMode::plain, const SearchOptions& opts = {})
{
    validate_spec(g, spec);
    int m = spec.m, n = g.vertex_count();
    SpanningSubgraph f(g, spec.forced);
    SpanningSubgraph fp = m_critical_reduce(f, m);
    ExcessTarget h(n);
    for (Vertex v = 0; v < n; ++v) h[v] = g.degree(v) + 1;
    for (Vertex v : spec.X) {
        int base = static_cast<int>(ceil_of(m * spec.eta[v] - m * m * spec.lambda));
        h[v] = mode == SubgraphMode::plain ? base - std::min(m, fp.degree(v)) : base - m;
    }
    // Targets are stated against the reduced F'; the caps against F agree since
    // d_F' >= m wherever F lost edges.
    Family fam = mode == SubgraphMode::plain ? Family::m_sufficient : Family::m_first_generalization;
    BoundedResult r = detail::finish_bounded(g, m, fp, h, fam, detail::params_from(spec, f), spec.X, opts);
    r.bound = detail::add_degrees(h, fp);
    for (Vertex v = 0; v < n; ++v) r.bound[v] += f.degree(v) - fp.degree(v);
    if (r.status == Outcome::solution || r.status == Outcome::inconclusive) {
        SpanningSubgraph out(g, r.edges);
        for (EdgeId e : f.edges()) out.insert(e);
        r.edges = out.edges();
    }
    return r;
}

enum class SpecKind { k_edge_connected, k_tree_connected, independent_edge, independent_tree, toughness };

struct SpecParams {
    int k = 1;
    int m = 1;
    std::optional<Vertex> u;    // distinguished vertex with the reduced cap
    std::optional<VertexSet> X; // defaults to V (required for the independent kinds)
    int tough_n = 1;            // the integer n of the toughness-style condition
};

// The exact (X, eta, lambda) used by the corresponding proofs.
inline DegreeSpec derive_spec(const Multigraph& g, SpecKind kind, const SpecParams& p)
{
    int n = g.vertex_count();
    int k = p.k, m = p.m;
    if (m < 1 || k < 1) throw PreconditionError(Violation::invalid_spec, "k and m must be positive");
    DegreeSpec s;
    s.m = m;
    if (p.X) {
        s.X = *p.X;
    } else {
        for (Vertex v = 0; v < n; ++v) s.X.push_back(v);
    }
    s.eta.assign(n, Rational(0));
    auto d = [&](Vertex v) { return Rational(g.degree(v)); };
    switch (kind) {
    case SpecKind::k_edge_connected:
        if (k < 2 * m) throw PreconditionError(Violation::invalid_spec, "edge-connected route needs k >= 2m");
        s.lambda = Rational(2, k);
        for (Vertex v = 0; v < n; ++v) s.eta[v] = d(v) / k + 2;
        if (p.u) s.eta[*p.u] = (d(*p.u) + 2 * m) / k - Rational(k - 1, k * m);
        break;
    case SpecKind::k_tree_connected:
        if (k < m) throw PreconditionError(Violation::invalid_spec, "tree-connected route needs k >= m");
        s.lambda = Rational(1, k);
        for (Vertex v = 0; v < n; ++v) s.eta[v] = d(v) / k + 1;
        if (p.u) s.eta[*p.u] = (d(*p.u) + m) / k - Rational(k - 1, k * m);
        break;
    case SpecKind::independent_edge:
    case SpecKind::independent_tree: {
        bool edge = kind == SpecKind::independent_edge;
        if (edge && k < 2 * m) throw PreconditionError(Violation::invalid_spec, "edge-connected route needs k >= 2m");
        if (!edge && k < m) throw PreconditionError(Violation::invalid_spec, "tree-connected route needs k >= m");
        if (!p.X) throw PreconditionError(Violation::invalid_spec, "independent route needs X");
        auto mask = vertex_mask(g, *p.X);
        for (const Edge& e : g.edges())
            if (mask[e.u] && mask[e.v]) throw PreconditionError(Violation::not_independent, "X is not independent");
        s.lambda = Rational(1, m);
        for (Vertex v = 0; v < n; ++v) s.eta[v] = d(v) / k + (edge ? 2 : 1);
        if (p.u) s.eta[*p.u] = d(*p.u) / k + 1 - Rational(k - 1, k * m);
        break;
    }
    case SpecKind::toughness:
        if (p.tough_n < 1) throw PreconditionError(Violation::invalid_spec, "toughness route needs n >= 1");
        s.lambda = Rational(0);
        for (Vertex v = 0; v < n; ++v) s.eta[v] = Rational(2) + Rational(p.tough_n, m);
        break;
    }
    return s;
}

}  // namespace treeconn
