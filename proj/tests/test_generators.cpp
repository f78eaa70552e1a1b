#include <doctest.h>

#include "cyc/generators.hpp"
#include "cyc/oracle.hpp"

using namespace cyc;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no cyc::Error thrown");
    return ErrorKind::Io;
}

}  // namespace

TEST_CASE("named graphs") {
    Graph p = petersen_graph();
    CHECK(p.num_vertices() == 10);
    CHECK(p.num_edges() == 15);
    CHECK(is_cubic(p));
    Graph g = grid_graph(3, 3);
    CHECK(g.num_vertices() == 9);
    CHECK(g.num_edges() == 12);
    CHECK(prism_graph(4).num_edges() == 12);
    CHECK(prism_graph(3).adjacent(0, 3));
    CHECK(star_graph(5).degree(0) == 4);
    CHECK(complete_graph(6).num_edges() == 15);
    CHECK(cycle_graph(7).num_edges() == 7);
}

TEST_CASE("random graphs are seeded") {
    CHECK(random_connected(10, 15, 4) == random_connected(10, 15, 4));
    CHECK(random_k_connected(9, 3, 2) == random_k_connected(9, 3, 2));
    Graph g = random_connected(10, 15, 4);
    CHECK(g.num_edges() == 15);
    CHECK(is_connected(g));
    CHECK(g.is_simple());
    CHECK(vertex_connectivity(random_k_connected(10, 3, 7)) >= 3);
    auto pc = planted_clique(9, 4, 200, 5);
    CHECK(pc.clique.size() == 4);
    for (Vertex a : pc.clique)
        for (Vertex b : pc.clique)
            if (a < b) CHECK(pc.graph.adjacent(a, b));
}

TEST_CASE("clique reduction sizes") {
    auto out = clique_reduction(complete_graph(5), 5);
    CHECK(out.s == 2);
    CHECK(out.graph.num_vertices() == 21);
    CHECK(out.k_prime == 11);
    CHECK(out.roles.at(20).role == Role::EdgeVertex);
    CHECK(out.roles.at(10).role == Role::Hub);
    CHECK(out.roles.at(3).role == Role::CliquePart);
    CHECK(out.roles.at(3).x == 1);
    CHECK(out.roles.at(3).copy == 2);
    auto split = split_partition(out.graph);
    REQUIRE(split);
    CHECK(is_split_partition(out.graph, split->first, split->second));
    CHECK(kind_of([] { clique_reduction(complete_graph(5), 4); }) == ErrorKind::Parity);
    CHECK(kind_of([] { clique_reduction(complete_graph(5), 1); }) == ErrorKind::Parameter);
}

TEST_CASE("clique witness has no cycle") {
    auto pc = planted_clique(6, 5, 300, 11);
    auto out = clique_reduction(pc.graph, 5);
    VertexSet z = clique_witness(out, pc.clique);
    CHECK(static_cast<int>(z.size()) == out.k_prime);
    OracleBudget wide;
    wide.max_vertices = 64;
    CHECK_FALSE(cycle_through(out.graph, z, wide));
}

TEST_CASE("split partitions") {
    CHECK(split_partition(complete_graph(4)));
    CHECK_FALSE(split_partition(cycle_graph(5)));
    CHECK(is_split_partition(star_graph(4), {0}, {1, 2, 3}));
    CHECK_FALSE(is_split_partition(star_graph(4), {1, 2}, {0, 3}));
}

TEST_CASE("cross composition") {
    auto two = cross_composition({{complete_graph(4), Edge(0, 1)}, {complete_graph(4), Edge(2, 3)}}, true);
    CHECK(two.graph.num_vertices() == 12);
    CHECK(two.k == 6);
    CHECK(is_cubic(two.graph));
    CHECK(two.link_vertices[0] == std::make_pair(4, 5));
    CHECK(two.link_vertices[1] == std::make_pair(10, 11));
    CHECK(is_yes_pac(two.graph, VertexSet(two.graph.vertices()), two.k));

    auto one = cross_composition({{complete_graph(4), Edge(0, 1)}}, true);
    CHECK(one.graph.adjacent(one.link_vertices[0].second, one.link_vertices[0].first));
    CHECK(is_cubic(one.graph));

    CHECK(kind_of([] { cross_composition({{complete_graph(4), Edge(0, 1)}, {prism_graph(3), Edge(0, 1)}}, false); }) ==
          ErrorKind::SizeMismatch);
    CHECK(kind_of([] { cross_composition({{cycle_graph(4), Edge(0, 2)}}, false); }) == ErrorKind::EdgeNotFound);
    CHECK(kind_of([] { cross_composition({{complete_graph(5), Edge(0, 1)}}, true); }) == ErrorKind::NotCubicPlanar);
}

TEST_CASE("walls") {
    for (int h = 1; h <= 6; ++h) CHECK(static_cast<int>(wall(h, {}, 0).layers.size()) == (h + 1) / 2);
    Wall w2 = wall(2);
    ConcentricCertificate c2 = w2.certificate.concentric;
    c2.inside.clear();
    CHECK(verify_concentric(w2.plane.graph, w2.plane.embedding, c2).ok);

    Wall w3 = wall(3);
    std::map<Edge, int> perimeter;
    const auto& j1 = w3.layers.front().vertices;
    for (std::size_t i = 0; i < j1.size(); ++i) perimeter[Edge(j1[i], j1[(i + 1) % j1.size()])] = 1;
    Wall sub = wall(3, perimeter);
    CHECK(sub.plane.graph.num_vertices() == w3.plane.graph.num_vertices() + static_cast<int>(perimeter.size()));
    ConcentricCertificate c3 = sub.certificate.concentric;
    c3.inside.clear();
    CHECK(verify_concentric(sub.plane.graph, sub.plane.embedding, c3).ok);

    CHECK(kind_of([] { wall(0); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { wall(2, {{Edge(0, static_cast<Vertex>(wall_vertex_count(2) - 1)), 1}}); }) == ErrorKind::Parameter);
}

TEST_CASE("catalog") {
    auto pet = catalog("petersen", {});
    CHECK(pet.graph == petersen_graph());
    CHECK_FALSE(pet.embedding);
    auto grid = catalog("grid", {3, 3});
    CHECK(grid.graph.num_edges() == 12);
    CHECK(grid.embedding);
    auto rings = catalog("ring_of_rings", {16, 8});
    REQUIRE(rings.certificate);
    CHECK(rings.certificate->concentric.size() == 16);
    RailedAnnulusCertificate cert = *rings.certificate;
    cert.concentric.inside.clear();
    CHECK(verify_railed_annulus(rings.graph, *rings.embedding, cert).ok);
    CHECK(kind_of([] { catalog("nonsense", {}); }) == ErrorKind::UnknownName);
    CHECK(kind_of([] { catalog("grid", {3}); }) == ErrorKind::Parameter);
    CHECK(catalog("random_connected", {8, 10}, 3).graph == catalog("random_connected", {8, 10}, 3).graph);
    for (const std::string& name : catalog_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("graph enumeration") {
    std::vector<std::size_t> counts;
    for (int n = 1; n <= 7; ++n) counts.push_back(connected_graphs(n).size());
    CHECK(counts == std::vector<std::size_t>{1, 1, 2, 6, 21, 112, 853});
    for (const Graph& g : connected_graphs(5)) {
        CHECK(canonical_form(g) == g);
        CHECK(is_connected(g));
    }
    Graph relabelled(4);
    relabelled.add_edge(3, 2);
    relabelled.add_edge(2, 0);
    relabelled.add_edge(0, 1);
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(canonical_form(relabelled) == canonical_form(path));
}
