// Spanning trees of a random 3-edge-connected regular graph with
// d_T(v) <= ceil((d_G(v) - 2) / 3) + 2, plus one vertex held to a tighter cap.

#include <treeconn/treeconn.hpp>

#include <iostream>

using namespace treeconn;

int main()
{
    Instance inst = generate("k-edge-connected", {{"n", 16}, {"k", 3}}, 7);
    const Multigraph& g = inst.graph;
    std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";

    for (std::optional<Vertex> u : {std::optional<Vertex>{}, std::optional<Vertex>{0}}) {
        SpecParams p;
        p.k = 3;
        p.u = u;
        BoundedResult r = bounded_spanning_tree(g, derive_spec(g, SpecKind::k_edge_connected, p));
        std::cout << (u ? "with u = 0: " : "plain:      ") << outcome_name(r.status);
        if (r.status == Outcome::solution) {
            SpanningSubgraph t(g, r.edges);
            int worst = 0;
            for (Vertex v = 0; v < g.vertex_count(); ++v) worst = std::max(worst, t.degree(v));
            std::cout << ", max degree " << worst << ", cap at 0 is " << r.bound[0];
        }
        std::cout << '\n';
    }

    // A star cannot be beaten; the certificate names the center.
    Multigraph star = gen::complete_bipartite(1, 5);
    DegreeSpec spec;
    spec.X = {0, 1, 2, 3, 4, 5};
    spec.eta.assign(6, Rational(3));
    BoundedResult r = bounded_spanning_tree(star, spec);
    std::cout << "K_{1,5} with eta = 3: " << outcome_name(r.status);
    if (r.certificate)
        std::cout << ", S = {" << r.certificate->S[0] << "}, " << to_string(r.certificate->lhs)
                  << (r.certificate->strict ? " >= " : " > ") << to_string(r.certificate->rhs);
    std::cout << '\n';
}
