#pragma once

#include "connectivity.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "tree_packing.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <unordered_set>

namespace treeconn {

// A generated graph plus the class it was verified against.
struct Instance {
    Multigraph graph;
    std::string kind;
    std::map<std::string, int> params;
    std::uint64_t seed = 0;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int generation_retries = 1000;

namespace gen {

using Rng = std::mt19937_64;

inline Multigraph complete(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Multigraph(n, e);
}

inline Multigraph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Multigraph(a + b, e);
}

inline Multigraph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    if (n == 2) e.pop_back();
    return Multigraph(n, e);
}

inline Multigraph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Multigraph(n, e);
}

inline Multigraph star(int leaves)
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Multigraph(leaves + 1, e);
}

// C_n(jumps): i adjacent to i +- j for every jump j.
inline Multigraph circulant(int n, const std::vector<int>& jumps)
{
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j : jumps) {
            int a = i, b = (i + j) % n;
            if (a == b) continue;
            if (seen.insert({std::min(a, b), std::max(a, b)}).second) e.push_back({std::min(a, b), std::max(a, b)});
        }
    std::sort(e.begin(), e.end(), [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    return Multigraph(n, e);
}

// Every edge duplicated; the copy of edge i is edge i + |E|.
inline Multigraph doubled(const Multigraph& g)
{
    std::vector<Edge> e = g.edges();
    for (const Edge& x : g.edges()) e.push_back(x);
    return Multigraph(g.vertex_count(), e);
}

// K_{2,2,...,2} on 2t vertices: complete graph minus a perfect matching.
inline Multigraph cocktail_party(int t)
{
    std::vector<Edge> e;
    for (int i = 0; i < 2 * t; ++i)
        for (int j = i + 1; j < 2 * t; ++j)
            if (j != i + t) e.push_back({i, j});
    return Multigraph(2 * t, e);
}

inline Multigraph complete_multipartite(const std::vector<int>& sizes)
{
    std::vector<int> part;
    for (int p = 0; p < static_cast<int>(sizes.size()); ++p)
        for (int i = 0; i < sizes[p]; ++i) part.push_back(p);
    int n = static_cast<int>(part.size());
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part[i] != part[j]) e.push_back({i, j});
    return Multigraph(n, e);
}

inline Multigraph line_graph(const Multigraph& g)
{
    std::vector<Edge> e;
    for (EdgeId a = 0; a < g.edge_count(); ++a)
        for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            const Edge &x = g.edge(a), &y = g.edge(b);
            if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) e.push_back({a, b});
        }
    return Multigraph(g.edge_count(), e);
}

inline bool is_simple(const Multigraph& g)
{
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges())
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return false;
    return true;
}

// No induced K_{1,3}.
inline bool is_claw_free(const Multigraph& g)
{
    int n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (adj[c][v]) nb.push_back(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                for (std::size_t d = b + 1; d < nb.size(); ++d)
                    if (!adj[nb[a]][nb[b]] && !adj[nb[a]][nb[d]] && !adj[nb[b]][nb[d]]) return false;
    }
    return true;
}

// Pairing model: points are paired at random, rejecting pairs that would form
// a loop or a parallel edge; an attempt restarts when no valid pair remains.
inline Multigraph random_regular(int n, int r, Rng& rng)
{
    if (r < 0 || r >= n || (n * r) % 2) throw GenerationError("no simple r-regular graph with these parameters");
    for (int attempt = 0; attempt < generation_retries; ++attempt) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) points.push_back(v);
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> e;
        bool stuck = false;
        while (!points.empty() && !stuck) {
            int size = static_cast<int>(points.size());
            std::uniform_int_distribution<int> pick(0, size - 1);
            bool paired = false;
            for (int tries = 0; tries < 4 * size && !paired; ++tries) {
                int i = pick(rng), j = pick(rng);
                int a = points[i], b = points[j];
                if (i == j || a == b || seen.count({std::min(a, b), std::max(a, b)})) continue;
                seen.insert({std::min(a, b), std::max(a, b)});
                e.push_back({std::min(a, b), std::max(a, b)});
                if (i < j) std::swap(i, j);
                points.erase(points.begin() + i);
                points.erase(points.begin() + j);
                paired = true;
            }
            stuck = !paired;
        }
        if (!stuck) {
            std::sort(e.begin(), e.end(), [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
            return Multigraph(n, e);
        }
    }
    throw GenerationError("pairing model kept getting stuck");
}

// Uniform random labelled tree via a Pruefer sequence.
inline std::vector<Edge> random_tree_edges(int n, Rng& rng)
{
    std::vector<Edge> e;
    if (n < 2) return e;
    if (n == 2) return {{0, 1}};
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2), deg(n, 1);
    for (int& x : seq) {
        x = pick(rng);
        ++deg[x];
    }
    for (int x : seq)
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) {
                e.push_back({std::min(v, x), std::max(v, x)});
                --deg[v];
                --deg[x];
                break;
            }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) (a < 0 ? a : b) = v;
    e.push_back({a, b});
    return e;
}

inline std::vector<Edge> random_simple_extra(int n, int count, const std::vector<Edge>& existing, Rng& rng)
{
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : existing) seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::vector<Edge> out;
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!seen.count({i, j})) free.push_back({i, j});
    std::shuffle(free.begin(), free.end(), rng);
    for (int i = 0; i < count && i < static_cast<int>(free.size()); ++i) out.push_back({free[i].first, free[i].second});
    return out;
}

// Connected simple graph: random tree plus `extra` random new edges.
inline Multigraph random_connected(int n, int extra, Rng& rng)
{
    std::vector<Edge> e = random_tree_edges(n, rng);
    for (const Edge& x : random_simple_extra(n, extra, e, rng)) e.push_back(x);
    return Multigraph(n, e);
}

// Complete graph minus `missing` random edges, re-drawn until connected.
inline Multigraph random_dense(int n, int missing, Rng& rng)
{
    for (int attempt = 0; attempt < generation_retries; ++attempt) {
        std::vector<Edge> all = complete(n).edges();
        std::shuffle(all.begin(), all.end(), rng);
        int keep = std::max(n - 1, static_cast<int>(all.size()) - missing);
        all.resize(std::min<int>(keep, static_cast<int>(all.size())));
        std::sort(all.begin(), all.end(), [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
        Multigraph g(n, all);
        if (is_connected(g)) return g;
    }
    throw GenerationError("dense graph stayed disconnected");
}

}  // namespace gen

// Canonical forms and the exhaustive pool of connected simple graphs.
namespace canon {

using Adj = std::array<std::uint32_t, 16>;

inline std::uint64_t code_of(int n, const Adj& adj, const std::vector<int>& order)
{
    std::uint64_t code = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) code = code << 1 | (adj[order[p]] >> order[q] & 1u);
    return code;
}

// Equitable refinement of an ordered partition.
inline void refine(int n, const Adj& adj, std::vector<std::vector<int>>& cells)
{
    (void)n;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            std::uint32_t splitter = 0;
            for (int v : cells[s]) splitter |= 1u << v;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                std::vector<std::pair<int, int>> keyed;
                for (int v : cells[c]) keyed.push_back({std::popcount(adj[v] & splitter), v});
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first) continue;
                std::vector<std::vector<int>> parts;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
                    parts.back().push_back(keyed[i].second);
                }
                cells.erase(cells.begin() + c);
                cells.insert(cells.begin() + c, parts.begin(), parts.end());
                changed = true;
                break;
            }
        }
    }
}

inline void search(int n, const Adj& adj, std::vector<std::vector<int>> cells, std::uint64_t& best, bool& have)
{
    refine(n, adj, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    if (target == cells.size()) {
        std::vector<int> order;
        for (const auto& c : cells) order.push_back(c[0]);
        std::uint64_t code = code_of(n, adj, order);
        if (!have || code > best) best = code, have = true;
        return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
        // Twins are swapped by an automorphism fixing everything else.
        bool twin = false;
        for (int w : tried)
            if ((adj[v] & ~(1u << w)) == (adj[w] & ~(1u << v))) twin = true;
        if (twin) continue;
        tried.push_back(v);
        auto next = cells;
        std::vector<int> rest;
        for (int x : cells[target])
            if (x != v) rest.push_back(x);
        next[target] = {v};
        next.insert(next.begin() + target + 1, rest);
        search(n, adj, next, best, have);
    }
}

// Largest adjacency code over all canonical leaves; equal iff isomorphic.
inline std::uint64_t canonical_code(int n, const Adj& adj)
{
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    if (n == 0) return 0;
    std::uint64_t best = 0;
    bool have = false;
    search(n, adj, cells, best, have);
    return best;
}

inline Multigraph from_code(int n, std::uint64_t code)
{
    std::vector<Edge> e;
    int bits = n * (n - 1) / 2, i = bits - 1;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, --i)
            if (code >> i & 1) e.push_back({p, q});
    return Multigraph(n, e);
}

inline Adj adjacency(int n, std::uint64_t code)
{
    Adj adj{};
    int i = n * (n - 1) / 2 - 1;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, --i)
            if (code >> i & 1) adj[p] |= 1u << q, adj[q] |= 1u << p;
    return adj;
}

}  // namespace canon

inline constexpr int exhaustive_pool_cap = 10;

// Canonical codes of all connected simple graphs on exactly n vertices, one per
// isomorphism class, sorted. Built by adding a vertex to each connected graph
// on n-1 vertices (some non-cut vertex always leaves a connected graph).
inline std::vector<std::uint64_t> connected_graph_codes(int n)
{
    if (n < 1 || n > exhaustive_pool_cap) throw std::invalid_argument("exhaustive pool supports 1..10 vertices");
    static std::map<int, std::vector<std::uint64_t>> memo;
    static std::recursive_mutex lock;
    std::lock_guard<std::recursive_mutex> hold(lock);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<std::uint64_t> out;
    if (n == 1) {
        out = {0};
    } else {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t parent : connected_graph_codes(n - 1)) {
            canon::Adj base = canon::adjacency(n - 1, parent);
            for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
                canon::Adj adj = base;
                adj[n - 1] = nb;
                for (int v = 0; v < n - 1; ++v)
                    if (nb >> v & 1) adj[v] |= 1u << (n - 1);
                seen.insert(canon::canonical_code(n, adj));
            }
        }
        out.assign(seen.begin(), seen.end());
        std::sort(out.begin(), out.end());
    }
    memo[n] = out;
    return out;
}

inline std::vector<Multigraph> connected_graphs(int n)
{
    std::vector<Multigraph> out;
    for (std::uint64_t c : connected_graph_codes(n)) out.push_back(canon::from_code(n, c));
    return out;
}

// Seeded generator by kind name; every result is checked against its class.
//   k-edge-connected   n, k, [r = k + 1 or k + 2], [extra = 0]
//   k-tree-connected   n, k, [extra = 0]          union of k random trees
//   random-regular     n, r
//   random-connected   n, [extra = n]
//   dense              n, [missing = n]
//   circulant          n, jumps as j1, j2, ...
//   complete           n
//   complete-bipartite a, b
//   cycle / path       n
//   claw-free          n (vertices of the source graph), [extra = 2]
//   cocktail-party     t
//   doubled-cycle / doubled-complete   n      every edge twice
//   exhaustive         n, index         index-th connected graph on n vertices
inline Instance generate(const std::string& kind, const std::map<std::string, int>& params, std::uint64_t seed)
{
    auto get = [&](const std::string& key, std::optional<int> fallback = std::nullopt) {
        auto it = params.find(key);
        if (it != params.end()) return it->second;
        if (fallback) return *fallback;
        throw std::invalid_argument("gen " + kind + ": missing parameter " + key);
    };
    gen::Rng rng(seed * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull);
    Instance out;
    out.kind = kind;
    out.params = params;
    out.seed = seed;
    if (kind == "k-edge-connected") {
        int n = get("n"), k = get("k");
        int r = get("r", (n * (k + 1)) % 2 ? k + 2 : k + 1);
        int extra = get("extra", 0);
        for (int attempt = 0; attempt < generation_retries; ++attempt) {
            Multigraph base = gen::random_regular(n, r, rng);
            std::vector<Edge> e = base.edges();
            for (const Edge& x : gen::random_simple_extra(n, extra, e, rng)) e.push_back(x);
            Multigraph g(n, e);
            if (edge_connectivity(g) >= k) {
                out.graph = g;
                return out;
            }
        }
        throw GenerationError("could not reach the requested edge-connectivity");
    }
    if (kind == "k-tree-connected") {
        int n = get("n"), k = get("k"), extra = get("extra", 0);
        std::vector<Edge> e;
        for (int i = 0; i < k; ++i)
            for (const Edge& x : gen::random_tree_edges(n, rng)) e.push_back(x);
        for (const Edge& x : gen::random_simple_extra(n, extra, e, rng)) e.push_back(x);
        out.graph = Multigraph(n, e);
        if (!is_m_tree_connected(out.graph, k)) throw GenerationError("union of trees failed the packing check");
        return out;
    }
    if (kind == "random-regular") {
        out.graph = gen::random_regular(get("n"), get("r"), rng);
        return out;
    }
    if (kind == "random-connected") {
        int n = get("n");
        out.graph = gen::random_connected(n, get("extra", n), rng);
        return out;
    }
    if (kind == "dense") {
        int n = get("n");
        out.graph = gen::random_dense(n, get("missing", n), rng);
        return out;
    }
    if (kind == "circulant") {
        std::vector<int> jumps;
        for (int i = 1; params.count("j" + std::to_string(i)); ++i) jumps.push_back(get("j" + std::to_string(i)));
        out.graph = gen::circulant(get("n"), jumps);
        return out;
    }
    if (kind == "complete") {
        out.graph = gen::complete(get("n"));
        return out;
    }
    if (kind == "complete-bipartite") {
        out.graph = gen::complete_bipartite(get("a"), get("b"));
        return out;
    }
    if (kind == "cycle") {
        out.graph = gen::cycle(get("n"));
        return out;
    }
    if (kind == "path") {
        out.graph = gen::path(get("n"));
        return out;
    }
    if (kind == "cocktail-party") {
        out.graph = gen::cocktail_party(get("t"));
        return out;
    }
    if (kind == "doubled-cycle" || kind == "doubled-complete") {
        int n = get("n");
        out.graph = gen::doubled(kind == "doubled-cycle" ? gen::cycle(n) : gen::complete(n));
        if (!is_m_tree_connected(out.graph, 2)) throw GenerationError("doubled graph is not 2-tree-connected");
        return out;
    }
    if (kind == "exhaustive") {
        auto graphs = connected_graph_codes(get("n"));
        int index = get("index", 0);
        if (index < 0 || index >= static_cast<int>(graphs.size()))
            throw std::invalid_argument("gen exhaustive: index out of range (" + std::to_string(graphs.size()) + " graphs)");
        out.graph = canon::from_code(get("n"), graphs[index]);
        return out;
    }
    if (kind == "claw-free") {
        int n = get("n"), extra = get("extra", 2);
        out.graph = gen::line_graph(gen::random_connected(n, extra, rng));
        if (!gen::is_claw_free(out.graph) || !is_connected(out.graph)) throw GenerationError("line graph check failed");
        return out;
    }
    throw std::invalid_argument("unknown generator kind: " + kind);
}

// Spanning subgraph with every degree in {r, r+1}, preferring an r-factor;
// exhaustive edge-by-edge search with degree pruning.
inline std::optional<EdgeList> factor_fixture(const Multigraph& g, int r, int cap = 12)
{
    int n = g.vertex_count();
    if (n > cap) throw std::invalid_argument("factor fixture supports at most " + std::to_string(cap) + " vertices");
    for (int hi : {r, r + 1}) {
        std::vector<int> deg(n, 0), left(n, 0);
        for (Vertex v = 0; v < n; ++v) left[v] = g.degree(v);
        EdgeList chosen;
        std::function<bool(EdgeId)> rec = [&](EdgeId e) -> bool {
            if (e == g.edge_count()) {
                for (Vertex v = 0; v < n; ++v)
                    if (deg[v] < r) return false;
                return true;
            }
            const Edge& ed = g.edge(e);
            --left[ed.u];
            --left[ed.v];
            bool found = false;
            if (deg[ed.u] < hi && deg[ed.v] < hi) {
                ++deg[ed.u];
                ++deg[ed.v];
                chosen.push_back(e);
                if (deg[ed.u] + left[ed.u] >= r && deg[ed.v] + left[ed.v] >= r) found = rec(e + 1);
                if (!found) {
                    chosen.pop_back();
                    --deg[ed.u];
                    --deg[ed.v];
                }
            }
            if (!found && deg[ed.u] + left[ed.u] >= r && deg[ed.v] + left[ed.v] >= r) found = rec(e + 1);
            ++left[ed.u];
            ++left[ed.v];
            return found;
        };
        if (rec(0)) return chosen;
    }
    return std::nullopt;
}

}  // namespace treeconn
