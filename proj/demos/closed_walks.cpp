// Closed spanning walks and trails with few visits per vertex.

#include <treeconn/treeconn.hpp>

#include <iostream>

using namespace treeconn;

namespace {

void print(const char* label, const std::vector<int>& seq)
{
    std::cout << label;
    for (int x : seq) std::cout << ' ' << x;
    std::cout << '\n';
}

}  // namespace

int main()
{
    // Claw-free and connected: a 2-walk always exists.
    Instance claw_free = generate("claw-free", {{"n", 6}}, 3);
    const Multigraph& g = claw_free.graph;
    WalkResult w = f_walk(g, std::vector<int>(g.vertex_count(), 2));
    if (w.status == Outcome::solution) {
        print("2-walk on a claw-free line graph:", w.walk);
        WalkReport rep = validate_walk(g, w.walk, std::vector<int>(g.vertex_count(), 2));
        print("visits:", rep.visits);
    }

    // Edge support of a 2-trail: connected, every degree 2 or 4.
    Multigraph c = gen::circulant(10, {1, 2});
    FactorResult f = connected_24_factor(c);
    std::cout << "{2,4}-factor of C10(1,2): " << outcome_name(f.status) << ", " << f.edges.size() << " edges\n";

    // A star has no 2-walk; the certificate is the center.
    Multigraph star = gen::complete_bipartite(1, 4);
    WalkResult s = f_walk(star, std::vector<int>(5, 2));
    std::cout << "K_{1,4}: " << outcome_name(s.status);
    if (s.certificate) std::cout << ", S = {" << s.certificate->S[0] << "}";
    std::cout << '\n';
}
