#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "tree_packing.hpp"

#include <cstdint>
#include <optional>

namespace treeconn {

inline constexpr int default_enumeration_cap = 14;

// Bitmask view of a graph with at most 63 vertices, for fast enumeration of
// vertex subsets.
class BitGraph {
public:
    explicit BitGraph(const Multigraph& g) : n_(g.vertex_count()), adj_(g.vertex_count(), 0)
    {
        if (n_ > 63) throw PreconditionError(Violation::cap_exceeded, "bitmask view limited to 63 vertices");
        for (const Edge& e : g.edges()) {
            adj_[e.u] |= bit(e.v);
            adj_[e.v] |= bit(e.u);
        }
    }

    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
    std::uint64_t all() const { return n_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_)); }
    int n() const { return n_; }
    std::uint64_t adjacency(Vertex v) const { return adj_[v]; }

    // Calls visit(component_mask) for each component of G[alive].
    template <class Visit>
    void for_each_component(std::uint64_t alive, Visit visit) const
    {
        while (alive) {
            std::uint64_t comp = alive & (~alive + 1);
            std::uint64_t frontier = comp;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                std::uint64_t fresh = adj_[v] & alive & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            visit(comp);
            alive &= ~comp;
        }
    }

    int components(std::uint64_t alive) const
    {
        int k = 0;
        for_each_component(alive, [&](std::uint64_t) { ++k; });
        return k;
    }

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

inline std::uint64_t set_to_mask(const VertexSet& s)
{
    std::uint64_t m = 0;
    for (Vertex v : s) m |= BitGraph::bit(v);
    return m;
}

inline VertexSet mask_to_vertices(std::uint64_t mask)
{
    VertexSet s;
    while (mask) {
        s.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return s;
}

// omega(G \ S).
inline int components_after_removal(const Multigraph& g, const VertexSet& s)
{
    return count_components(remove_vertices(g, s).graph);
}

// Omega_m(G \ S); 0 when S = V.
inline Rational omega_after_removal(const Multigraph& g, const VertexSet& s, int m)
{
    return omega_m(remove_vertices(g, s).graph, m);
}

// odd_f(G \ S): components of G \ S holding an odd number of vertices with f odd.
inline int odd_f_count(const Multigraph& g, const std::vector<int>& f, const VertexSet& s)
{
    if (static_cast<int>(f.size()) != g.vertex_count()) throw std::invalid_argument("f must have one value per vertex");
    auto mask = vertex_mask(g, s);
    int count = 0;
    auto lab = component_labels_if(g, [&](EdgeId e) { return !mask[g.edge(e).u] && !mask[g.edge(e).v]; });
    std::vector<int> parity(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!mask[v] && (f[v] & 1)) parity[lab[v]] ^= 1;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (mask[v] || seen[lab[v]]) continue;
        seen[lab[v]] = 1;
        count += parity[lab[v]];
    }
    return count;
}

// e^m_G(S, F): edges outside F with both ends in S joining different
// m-tree-connected components of G \ [S, F].
inline int count_m_crossing(const Multigraph& g, const VertexSet& s, const SpanningSubgraph& f, int m)
{
    auto mask = vertex_mask(g, s);
    DerivedGraph d = remove_incident_except_forest(g, s, f);
    auto lab = m_components(d.graph, m).partition.labels(g.vertex_count());
    int c = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!f.contains(e) && mask[ed.u] && mask[ed.v] && lab[ed.u] != lab[ed.v]) ++c;
    }
    return c;
}

struct ToughnessReport {
    bool infinite = false;  // no S separates the graph (complete graphs)
    Rational value;
    VertexSet witness;
    std::string variant;  // "classic" or "m-strong"
};

namespace detail {

inline void check_cap(int size, int cap)
{
    if (size > cap)
        throw PreconditionError(Violation::cap_exceeded,
                                "enumeration over " + std::to_string(size) + " vertices exceeds cap " + std::to_string(cap));
}

}  // namespace detail

// min over S with omega(G \ S) >= 2 of |S| / omega(G \ S).
inline ToughnessReport toughness(const Multigraph& g, int cap = default_enumeration_cap)
{
    detail::check_cap(g.vertex_count(), cap);
    BitGraph bg(g);
    ToughnessReport r;
    r.variant = "classic";
    r.infinite = true;
    std::uint64_t all = bg.all();
    for (std::uint64_t s = 0; s <= all; ++s) {
        if ((s & all) != s) continue;
        int w = bg.components(all & ~s);
        if (w < 2) continue;
        Rational t(__builtin_popcountll(s), w);
        if (r.infinite || t < r.value) {
            r.infinite = false;
            r.value = t;
            r.witness = mask_to_vertices(s);
        }
    }
    return r;
}

// min over S with Omega_m(G \ S) > 1 of |S| / Omega_m(G \ S).
inline ToughnessReport strong_toughness(const Multigraph& g, int m, int cap = default_enumeration_cap)
{
    detail::check_cap(g.vertex_count(), cap);
    ToughnessReport r;
    r.variant = "m-strong";
    r.infinite = true;
    std::uint64_t all = g.vertex_count() == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.vertex_count()));
    for (std::uint64_t s = 0; s <= all; ++s) {
        VertexSet set = mask_to_vertices(s);
        Rational w = omega_after_removal(g, set, m);
        if (w <= 1) continue;
        Rational t = Rational(static_cast<std::int64_t>(set.size())) / w;
        if (r.infinite || t < r.value) {
            r.infinite = false;
            r.value = t;
            r.witness = set;
        }
        if (s == all) break;
    }
    return r;
}

enum class Family {
    improvement,             // omega(G\S) <= sum(eta-2) + 2 - lambda(e_G(S)+1)
    tree_plain,              // omega(G\S) < 1 + sum(eta-2) + 2 - lambda(e_G(S)+1)
    tree_forest,             // omega(G\[S,F]) < 1 + sum(eta-2) + 2 - lambda(e_G(S,F)+1)
    m_sufficient,            // Omega_m(G\S) < 1/m + sum(eta-2) + 2 - lambda(e_G(S)+m)
    m_first_generalization,  // Omega_m(G\[S,F]) < 1/m + sum(eta-2) + 2 - lambda(e^m_G(S,F)+m)
    walk,                    // omega(G\S) <= sum(f-1) + 1
    trail,                   // Omega_2(G\S) < sum(f+2lambda-3/2) + 5/2 - lambda(e_G(S)+2)
    tough_enough,            // Omega_m(G\S) < 1/m + sum(c/(2c-2) eta - 1/(c-1)) + c/(c-1)
    plus_one,                // omega(G\S) <= (c-2m)/(2m(c-1)) |S| + 1
    two_four,                // omega(G\S) <= (2/7)|S| + 9/7
    exact_tree,              // omega(G\[S,F]) <= sum h + 1
    parity,                  // odd_f(G\S) <= sum f
    trail_independent,       // Omega_2(G\S) <= sum(f-1/2) + 1
};

inline const char* family_name(Family f)
{
    switch (f) {
    case Family::improvement: return "improvement";
    case Family::tree_plain: return "tree-plain";
    case Family::tree_forest: return "tree-forest";
    case Family::m_sufficient: return "m-sufficient";
    case Family::m_first_generalization: return "m-first-generalization";
    case Family::walk: return "walk";
    case Family::trail: return "trail";
    case Family::tough_enough: return "tough-enough";
    case Family::plus_one: return "plus-one";
    case Family::two_four: return "two-four";
    case Family::exact_tree: return "exact-tree";
    case Family::parity: return "parity";
    case Family::trail_independent: return "trail-independent";
    }
    return "unknown";
}

inline std::optional<Family> family_from_name(const std::string& s)
{
    for (int i = 0; i <= static_cast<int>(Family::trail_independent); ++i)
        if (s == family_name(static_cast<Family>(i))) return static_cast<Family>(i);
    return std::nullopt;
}

// Parameters shared by all families; each family reads only what it needs.
// eta, f and h are indexed by vertex. X = nullopt means S ranges over all of V.
struct HypothesisParams {
    std::optional<VertexSet> X;
    std::vector<Rational> eta;
    Rational lambda{0};
    int m = 1;
    std::optional<SpanningSubgraph> F;
    std::vector<int> f;
    std::vector<int> h;
    int c = 2;
};

struct HypothesisRow {
    VertexSet S;
    Rational lhs;
    Rational rhs;
    bool strict = false;
    bool holds = true;
};

struct HypothesisVerdict {
    bool holds = true;
    std::optional<HypothesisRow> violation;
    std::int64_t rows = 0;
};

namespace detail {

inline const SpanningSubgraph& forest_or_throw(const HypothesisParams& p)
{
    if (!p.F) throw std::invalid_argument("this hypothesis family needs a forced subgraph F");
    return *p.F;
}

template <class T>
void check_sized(const std::vector<T>& v, int n, const char* what)
{
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument(std::string(what) + " must have one value per vertex");
}

}  // namespace detail

inline HypothesisRow evaluate_hypothesis(const Multigraph& g, Family fam, const HypothesisParams& p, const VertexSet& s)
{
    int n = g.vertex_count();
    HypothesisRow row;
    row.S = s;
    auto sum_eta = [&](Rational shift) {
        detail::check_sized(p.eta, n, "eta");
        Rational t(0);
        for (Vertex v : s) t += p.eta[v] + shift;
        return t;
    };
    auto sum_f = [&](Rational shift) {
        detail::check_sized(p.f, n, "f");
        Rational t(0);
        for (Vertex v : s) t += Rational(p.f[v]) + shift;
        return t;
    };
    const Rational size(static_cast<std::int64_t>(s.size()));
    switch (fam) {
    case Family::improvement:
        row.lhs = components_after_removal(g, s);
        row.rhs = sum_eta(-2) + 2 - p.lambda * (count_internal_edges(g, s) + 1);
        break;
    case Family::tree_plain:
        row.lhs = components_after_removal(g, s);
        row.rhs = 1 + sum_eta(-2) + 2 - p.lambda * (count_internal_edges(g, s) + 1);
        row.strict = true;
        break;
    case Family::tree_forest: {
        const auto& f = detail::forest_or_throw(p);
        row.lhs = count_components(remove_incident_except_forest(g, s, f).graph);
        row.rhs = 1 + sum_eta(-2) + 2 - p.lambda * (count_forest_crossing(g, s, f) + 1);
        row.strict = true;
        break;
    }
    case Family::m_sufficient:
        row.lhs = omega_after_removal(g, s, p.m);
        row.rhs = Rational(1, p.m) + sum_eta(-2) + 2 - p.lambda * (count_internal_edges(g, s) + p.m);
        row.strict = true;
        break;
    case Family::m_first_generalization: {
        const auto& f = detail::forest_or_throw(p);
        row.lhs = omega_m(remove_incident_except_forest(g, s, f).graph, p.m);
        row.rhs = Rational(1, p.m) + sum_eta(-2) + 2 - p.lambda * (count_m_crossing(g, s, f, p.m) + p.m);
        row.strict = true;
        break;
    }
    case Family::walk:
        row.lhs = components_after_removal(g, s);
        row.rhs = sum_f(-1) + 1;
        break;
    case Family::trail:
        row.lhs = omega_after_removal(g, s, 2);
        row.rhs = sum_f(2 * p.lambda - Rational(3, 2)) + Rational(5, 2) - p.lambda * (count_internal_edges(g, s) + 2);
        row.strict = true;
        break;
    case Family::tough_enough: {
        detail::check_sized(p.eta, n, "eta");
        Rational t(0);
        for (Vertex v : s) t += Rational(p.c, 2 * p.c - 2) * p.eta[v] - Rational(1, p.c - 1);
        row.lhs = omega_after_removal(g, s, p.m);
        row.rhs = Rational(1, p.m) + t + Rational(p.c, p.c - 1);
        row.strict = true;
        break;
    }
    case Family::plus_one:
        row.lhs = components_after_removal(g, s);
        row.rhs = Rational(p.c - 2 * p.m, 2 * p.m * (p.c - 1)) * size + 1;
        break;
    case Family::two_four:
        row.lhs = components_after_removal(g, s);
        row.rhs = Rational(2, 7) * size + Rational(9, 7);
        break;
    case Family::exact_tree: {
        const auto& f = detail::forest_or_throw(p);
        detail::check_sized(p.h, n, "h");
        Rational t(1);
        for (Vertex v : s) t += p.h[v];
        row.lhs = count_components(remove_incident_except_forest(g, s, f).graph);
        row.rhs = t;
        break;
    }
    case Family::parity:
        row.lhs = odd_f_count(g, p.f, s);
        row.rhs = sum_f(0);
        break;
    case Family::trail_independent:
        row.lhs = omega_after_removal(g, s, 2);
        row.rhs = sum_f(Rational(-1, 2)) + 1;
        break;
    }
    row.holds = row.strict ? row.lhs < row.rhs : row.lhs <= row.rhs;
    return row;
}

// Exhaustive check over all S within X (binary-counter order over sorted X;
// the first violating S is reported).
inline HypothesisVerdict check_hypothesis(const Multigraph& g, Family fam, const HypothesisParams& p,
                                          int cap = 20)
{
    VertexSet ground;
    if (p.X) {
        ground = *p.X;
        std::sort(ground.begin(), ground.end());
        ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
        for (Vertex v : ground) g.check_vertex(v);
    } else {
        for (Vertex v = 0; v < g.vertex_count(); ++v) ground.push_back(v);
    }
    detail::check_cap(static_cast<int>(ground.size()), cap);
    HypothesisVerdict out;
    std::uint64_t total = std::uint64_t{1} << ground.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (mask >> i & 1) s.push_back(ground[i]);
        HypothesisRow row = evaluate_hypothesis(g, fam, p, s);
        ++out.rows;
        if (!row.holds) {
            out.holds = false;
            out.violation = std::move(row);
            return out;
        }
    }
    return out;
}

struct ExtremalSet {
    VertexSet S;
    Rational value;
    // Every component of G \ S is m-tree-connected or has maximum degree <= m.
    bool structure_holds = true;
};

// Maximizes Omega_m(G \ S) - |S|/m, preferring larger S among maximizers.
inline ExtremalSet extremal_set(const Multigraph& g, int m, int cap = default_enumeration_cap)
{
    detail::check_cap(g.vertex_count(), cap);
    int n = g.vertex_count();
    ExtremalSet best;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = mask_to_vertices(mask);
        Rational val = omega_after_removal(g, s, m) - Rational(static_cast<std::int64_t>(s.size()), m);
        if (!have || val > best.value || (val == best.value && s.size() > best.S.size())) {
            have = true;
            best.S = s;
            best.value = val;
        }
    }
    DerivedGraph rest = remove_vertices(g, best.S);
    int k = 0;
    auto lab = component_labels(rest.graph, &k);
    for (int c = 0; c < k; ++c) {
        VertexSet part;
        for (Vertex v = 0; v < rest.graph.vertex_count(); ++v)
            if (lab[v] == c) part.push_back(v);
        DerivedGraph comp = induced_subgraph(rest.graph, part);
        if (comp.graph.max_degree() <= m) continue;
        if (!is_m_tree_connected(comp.graph, m)) best.structure_holds = false;
    }
    return best;
}

}  // namespace treeconn
