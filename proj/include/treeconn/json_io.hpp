#pragma once

#include "euler_walks.hpp"
#include "excess_search.hpp"
#include "factors.hpp"
#include "graph.hpp"
#include "instance_gen.hpp"
#include "oracle.hpp"
#include "parity_forest.hpp"
#include "tree_packing.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace treeconn {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"n": int, "edges": [[u, v], ...]}; edge order defines edge ids.
inline Json graph_to_json(const Multigraph& g)
{
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline Multigraph graph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw FormatError("graph JSON needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 0) throw FormatError("\"n\" must be a nonnegative integer");
    int n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw FormatError("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw FormatError("each edge must be a pair of integers");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge endpoint out of range");
        if (u == v) throw FormatError("loops are not allowed");
        edges.push_back({u, v});
    }
    return Multigraph(n, edges);
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

inline std::string to_dot(const Multigraph& g, const EdgeList& highlight = {})
{
    std::set<EdgeId> hl(highlight.begin(), highlight.end());
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"" << e << "\"";
        if (hl.count(e)) out << ", penwidth=3, color=red";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string rational_text(const Rational& r) { return to_string(r); }

inline Json rational_list(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const Rational& r : v) a.push_back(rational_text(r));
    return a;
}

inline Json partition_to_json(const VertexPartition& p)
{
    Json a = Json::array();
    for (const VertexSet& s : p.parts) a.push_back(s);
    return a;
}

inline void put_certificate(Json& j, const std::optional<Certificate>& c)
{
    if (!c) return;
    j["S"] = c->S;
    j["lhs"] = rational_text(c->lhs);
    j["rhs"] = rational_text(c->rhs);
    j["family"] = family_name(c->family);
    j["strict"] = c->strict;
}

inline void put_deficient(Json& j, const std::optional<DeficientPartition>& d)
{
    if (!d) return;
    j["partition"] = partition_to_json(d->partition);
    j["crossing"] = d->crossing;
    j["m"] = d->m;
}

inline Json degree_report(const Multigraph& g, const EdgeList& edges)
{
    SpanningSubgraph s(g, edges);
    Json d = Json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(s.degree(v));
    return d;
}

inline Json result_to_json(const BoundedResult& r)
{
    Json j{{"status", outcome_name(r.status)}, {"edges", r.edges}};
    put_certificate(j, r.certificate);
    put_deficient(j, r.deficient);
    if (!r.bound.empty()) j["bound"] = r.bound;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json result_to_json(const ParityResult& r)
{
    Json j{{"status", outcome_name(r.status)}, {"edges", r.edges}};
    put_certificate(j, r.certificate);
    j["target"] = r.target;
    return j;
}

inline Json result_to_json(const WalkResult& r)
{
    Json j{{"status", outcome_name(r.status)}, {"walk", r.walk}};
    put_certificate(j, r.certificate);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json result_to_json(const TrailResult& r)
{
    Json j{{"status", outcome_name(r.status)}, {"trail", r.trail}};
    put_certificate(j, r.certificate);
    put_deficient(j, r.deficient);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json result_to_json(const FactorResult& r, const Multigraph& g)
{
    Json j{{"status", outcome_name(r.status)}, {"edges", r.edges}, {"degrees", degree_report(g, r.edges)}};
    put_certificate(j, r.certificate);
    put_deficient(j, r.deficient);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json packing_to_json(const PackOutcome& p)
{
    if (p.packing) {
        Json trees = Json::array();
        for (const EdgeList& t : p.packing->trees) trees.push_back(t);
        return Json{{"status", "solution"}, {"trees", trees}};
    }
    Json j{{"status", "certificate"}};
    put_deficient(j, p.deficient);
    return j;
}

inline Json toughness_to_json(const ToughnessReport& t)
{
    Json j{{"variant", t.variant}};
    if (t.infinite) {
        j["value"] = "inf";
    } else {
        j["value"] = rational_text(t.value);
        j["witness"] = t.witness;
    }
    return j;
}

inline Json instance_to_json(const Instance& inst)
{
    Json j = graph_to_json(inst.graph);
    Json params = Json::object();
    for (const auto& [k, v] : inst.params) params[k] = v;
    const Multigraph& g = inst.graph;
    Json cls{{"kind", inst.kind}, {"params", params}, {"seed", inst.seed}, {"simple", gen::is_simple(g)}};
    // measured, so a consumer can re-check the class claim
    int ec = edge_connectivity(g);
    cls["edge_connectivity"] = ec == unbounded_connectivity ? Json("inf") : Json(ec);
    cls["tree_connectivity"] = tree_connectivity(g, 8);
    if (g.vertex_count() <= default_enumeration_cap) {
        ToughnessReport t = toughness(g);
        cls["toughness"] = t.infinite ? Json("inf") : Json(rational_text(t.value));
    }
    j["class"] = cls;
    return j;
}

// A DegreeSpec from {"X": [...], "eta": "p/q" | ["p/q", ...], "lambda": "p/q",
// "m": int, "forced": [...]}; every key optional except eta.
inline DegreeSpec spec_from_json(const Json& j, const Multigraph& g)
{
    int n = g.vertex_count();
    DegreeSpec s;
    auto rat = [](const Json& x) {
        if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
        if (!x.is_string()) throw FormatError("rationals are \"p/q\" strings or integers");
        return parse_rational(x.get<std::string>());
    };
    if (!j.contains("eta")) throw FormatError("spec needs \"eta\"");
    if (j["eta"].is_array()) {
        if (static_cast<int>(j["eta"].size()) != n) throw FormatError("eta array needs one entry per vertex");
        for (const Json& x : j["eta"]) s.eta.push_back(rat(x));
    } else {
        s.eta.assign(n, rat(j["eta"]));
    }
    if (j.contains("X")) {
        s.X = j["X"].get<VertexSet>();
    } else {
        for (Vertex v = 0; v < n; ++v) s.X.push_back(v);
    }
    if (j.contains("lambda")) s.lambda = rat(j["lambda"]);
    if (j.contains("m")) s.m = j["m"].get<int>();
    if (j.contains("forced")) s.forced = j["forced"].get<EdgeList>();
    return s;
}

}  // namespace treeconn
