#include "treeconn/json_io.hpp"
#include "treeconn/suites.hpp"
#include "treeconn/treeconn.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace treeconn;

namespace {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_certificate = 2, exit_inconclusive = 3 };

int exit_for(Outcome o)
{
    switch (o) {
    case Outcome::solution: return exit_ok;
    case Outcome::certificate: return exit_certificate;
    case Outcome::inconclusive: return exit_inconclusive;
    }
    return exit_usage;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// An integer list given inline ("2", "1,2,3") or as a JSON array file.
std::vector<int> int_list(const std::string& text)
{
    if (std::filesystem::exists(text)) {
        Json j = read_json_file(text);
        if (!j.is_array()) throw FormatError(text + " must hold a JSON array");
        return j.get<std::vector<int>>();
    }
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw FormatError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw FormatError("not an integer: '" + item + "'");
        out.push_back(x);
    }
    return out;
}

// Per-vertex function: a single value broadcast to every vertex, or one per vertex.
std::vector<int> per_vertex(const std::string& text, int n, const char* what)
{
    std::vector<int> v = int_list(text);
    if (v.size() == 1) return std::vector<int>(n, v[0]);
    if (static_cast<int>(v.size()) != n) throw FormatError(std::string(what) + " needs 1 or " + std::to_string(n) + " values");
    return v;
}

struct Common {
    std::string graph;
    std::string dot;
};

void add_graph(CLI::App* cmd, Common& c)
{
    cmd->add_option("graph", c.graph, "graph JSON file {\"n\", \"edges\"}")->required()->check(CLI::ExistingFile);
    cmd->add_option("--dot", c.dot, "also write the graph (with the result highlighted) as DOT");
}

void write_dot(const Common& c, const Multigraph& g, const EdgeList& highlight)
{
    if (c.dot.empty()) return;
    std::ofstream out(c.dot);
    if (!out) throw FormatError("cannot write " + c.dot);
    out << to_dot(g, highlight);
}

EdgeList trail_edges_of_walk(const Multigraph& g, const ClosedWalk& w)
{
    std::set<EdgeId> out;
    for (std::size_t i = 0; i < w.size() && w.size() > 1; ++i) {
        Vertex a = w[i], b = w[(i + 1) % w.size()];
        for (EdgeId e : g.incident(a))
            if (g.other(e, a) == b) {
                out.insert(e);
                break;
            }
    }
    return {out.begin(), out.end()};
}

SuiteRange parse_range(const std::string& text)
{
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int x = std::stoi(text);
            return {x, x};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw FormatError("seed range must look like a..b");
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"treeconn: degree-bounded spanning trees, tree packings, parity forests, walks and trails"};
    app.require_subcommand(1);

    Common c;
    int m = 1;
    int cap = default_enumeration_cap;

    auto* analyze = app.add_subcommand("analyze", "omega, Omega_m for m = 1..M, components, toughness");
    add_graph(analyze, c);
    analyze->add_option("--m", m, "largest m")->check(CLI::PositiveNumber);
    analyze->add_option("--cap", cap, "toughness enumeration cap (vertices)");

    auto* pack = app.add_subcommand("pack", "m edge-disjoint spanning trees or a deficient partition");
    add_graph(pack, c);
    pack->add_option("--m", m, "number of trees")->required()->check(CLI::PositiveNumber);

    std::string eta, lambda = "0", forest, mode = "plain", xset;
    auto* btree = app.add_subcommand("bounded-tree", "spanning tree meeting the eta/lambda bound, or a certificate");
    add_graph(btree, c);
    btree->add_option("--eta", eta, "spec JSON file, or one p/q value for every vertex")->required();
    btree->add_option("--lambda", lambda, "lambda as p/q (overrides the spec file)");
    btree->add_option("--forest", forest, "forced forest: JSON edge-id list");
    btree->add_option("--mode", mode, "plain | forest-exception")->check(CLI::IsMember({"plain", "forest-exception"}));
    btree->add_option("--X", xset, "target set X (comma list or JSON file; default V)");

    auto* bsub = app.add_subcommand("bounded-subgraph", "m-tree-connected subgraph meeting the bound, or a certificate");
    add_graph(bsub, c);
    bsub->add_option("--m", m, "tree-connectivity of the subgraph")->required()->check(CLI::PositiveNumber);
    bsub->add_option("--eta", eta, "spec JSON file, or one p/q value for every vertex")->required();
    bsub->add_option("--lambda", lambda, "lambda as p/q (overrides the spec file)");
    bsub->add_option("--forest", forest, "forced subgraph: JSON edge-id list");
    bsub->add_option("--mode", mode, "plain | first-generalization")->check(CLI::IsMember({"plain", "first-generalization"}));
    bsub->add_option("--X", xset, "target set X (comma list or JSON file; default V)");

    std::string f_text, q_text, matching;
    auto* parity = app.add_subcommand("parity-forest", "spanning forest with degree caps f and odd set Q");
    add_graph(parity, c);
    parity->add_option("--f", f_text, "caps: one value, a comma list, or a JSON array file")->required();
    parity->add_option("--Q", q_text, "odd-degree vertex set; without it the parity of f is used");

    auto* walk = app.add_subcommand("f-walk", "spanning closed walk meeting each v at most f(v) times");
    add_graph(walk, c);
    walk->add_option("--f", f_text, "visit caps")->required();
    walk->add_option("--matching", matching, "edge ids that the walk must traverse");

    auto* trail = app.add_subcommand("f-trail", "spanning closed trail meeting each v at most f(v) times");
    add_graph(trail, c);
    trail->add_option("--f", f_text, "visit caps")->required();
    trail->add_option("--lambda", lambda, "lambda in [0, 1/2] as p/q");

    std::string suite, seeds;
    int workers = 0;
    auto* verify = app.add_subcommand("verify", "run a named acceptance suite; exit 0 iff it passes");
    verify->add_option("--suite", suite, "suite name or criterion number, or 'all'")->required();
    verify->add_option("--seeds", seeds, "seed range a..b (vertex range for jackson-wormald)");
    verify->add_option("--workers", workers, "worker threads (default: hardware)");

    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    auto* genc = app.add_subcommand("gen", "generate a graph of a verified class");
    genc->add_option("--kind", kind, "generator kind")->required();
    genc->add_option("--param", params, "key=value, repeatable (e.g. n=10 k=2)");
    genc->add_option("--seed", seed, "seed");
    genc->add_option("--dot", c.dot, "also write DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*verify) {
            std::vector<std::string> names;
            if (suite == "all") {
                for (const auto& s : suite_catalog()) names.push_back(s.name);
            } else {
                names.push_back(suite);
            }
            std::optional<SuiteRange> range;
            if (!seeds.empty()) range = parse_range(seeds);
            Json out = Json::array();
            bool ok = true;
            for (const auto& name : names) {
                SuiteReport r = run_suite(name, range, workers);
                ok = ok && r.pass;
                std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << " " << r.summary << "\n";
                out.push_back(Json{{"suite", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures},
                                   {"summary", r.summary}, {"problems", r.problems}});
            }
            emit(out);
            return ok ? exit_ok : exit_certificate;
        }
        if (*genc) {
            std::map<std::string, int> p;
            for (const auto& kv : params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw FormatError("--param expects key=value");
                p[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
            }
            Instance inst = generate(kind, p, seed);
            emit(instance_to_json(inst));
            write_dot(c, inst.graph, {});
            return exit_ok;
        }

        Multigraph g = graph_from_json(read_json_file(c.graph));
        int n = g.vertex_count();
        if (n < 1) throw FormatError("the graph needs at least one vertex");

        if (*analyze) {
            Json j{{"n", n}, {"edges", g.edge_count()}, {"components", count_components(g)}};
            Json levels = Json::array();
            for (int k = 1; k <= m; ++k) {
                ComponentDecomposition d = m_components(g, k);
                levels.push_back(Json{{"m", k}, {"Omega", rational_text(d.omega)}, {"components", partition_to_json(d.partition)}});
            }
            j["tree_connectivity"] = levels;
            int ec = edge_connectivity(g);
            j["edge_connectivity"] = ec == unbounded_connectivity ? Json("inf") : Json(ec);
            if (n <= cap) {
                j["toughness"] = toughness_to_json(toughness(g, cap));
            }
            emit(j);
            write_dot(c, g, {});
            return exit_ok;
        }
        if (*pack) {
            PackOutcome p = pack_trees(g, m);
            emit(packing_to_json(p));
            EdgeList all;
            if (p.packing)
                for (const auto& t : p.packing->trees) all.insert(all.end(), t.begin(), t.end());
            write_dot(c, g, all);
            return p.packed() ? exit_ok : exit_certificate;
        }
        if (*btree || *bsub) {
            DegreeSpec spec;
            if (std::filesystem::exists(eta)) {
                spec = spec_from_json(read_json_file(eta), g);
            } else {
                spec.eta.assign(n, parse_rational(eta));
                for (Vertex v = 0; v < n; ++v) spec.X.push_back(v);
            }
            if (!lambda.empty() && (lambda != "0" || !std::filesystem::exists(eta))) spec.lambda = parse_rational(lambda);
            if (!xset.empty()) spec.X = int_list(xset);
            if (!forest.empty()) spec.forced = read_json_file(forest).get<EdgeList>();
            BoundedResult r;
            if (*btree) {
                spec.m = 1;
                r = bounded_spanning_tree(g, spec, mode == "plain" ? TreeMode::plain : TreeMode::forest_exception);
            } else {
                spec.m = m;
                r = bounded_m_subgraph(g, spec, mode == "plain" ? SubgraphMode::plain : SubgraphMode::first_generalization);
            }
            emit(result_to_json(r));
            write_dot(c, g, r.edges);
            return exit_for(r.status);
        }
        if (*parity) {
            std::vector<int> f = per_vertex(f_text, n, "--f");
            ParityResult r = q_text.empty() ? parity_forest(g, f) : parity_forest(g, f, int_list(q_text));
            emit(result_to_json(r));
            write_dot(c, g, r.edges);
            return exit_for(r.status);
        }
        if (*walk) {
            std::vector<int> f = per_vertex(f_text, n, "--f");
            EdgeList mm = matching.empty() ? EdgeList{} : int_list(matching);
            WalkResult r = f_walk(g, f, mm);
            emit(result_to_json(r));
            write_dot(c, g, trail_edges_of_walk(g, r.walk));
            return exit_for(r.status);
        }
        if (*trail) {
            std::vector<int> f = per_vertex(f_text, n, "--f");
            TrailResult r = f_trail(g, f, parse_rational(lambda));
            emit(result_to_json(r));
            write_dot(c, g, r.trail);
            return exit_for(r.status);
        }
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated (" << violation_name(e.kind()) << "): " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
