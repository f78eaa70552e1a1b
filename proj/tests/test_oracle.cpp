#include <doctest.h>

#include "cyc/generators.hpp"
#include "cyc/oracle.hpp"
#include "test_support.hpp"

using namespace cyc;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph two_triangles() {
    Graph g(6);
    for (int base : {0, 3}) {
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base, base + 2);
    }
    return g;
}

VertexSet all_of(const Graph& g) { return VertexSet(g.vertices()); }

}  // namespace

TEST_CASE("cycle through") {
    Graph k4 = complete_graph(4);
    auto c = cycle_through(k4, {0, 1, 2, 3});
    REQUIRE(c);
    CHECK(c->vertices.size() == 4);
    CHECK(c->vertices.front() == 0);
    CHECK(is_cycle_through(k4, *c, {0, 1, 2, 3}));

    Graph star = star_graph(4);
    for (Vertex v : star.vertices()) CHECK_FALSE(cycle_through(star, {v}));

    Graph pet = petersen_graph();
    for (Vertex skip : pet.vertices()) {
        VertexSet s = all_of(pet);
        s.erase(skip);
        auto w = cycle_through(pet, s);
        REQUIRE(w);
        CHECK(is_cycle_through(pet, *w, s));
    }
    CHECK_FALSE(cycle_through(pet, all_of(pet)));
    CHECK_THROWS_AS(cycle_through(complete_graph(15), {0}), Error);
}

TEST_CASE("pac") {
    Graph c6 = cycle_graph(6);
    CHECK(is_yes_pac(c6, all_of(c6), 6));
    CHECK_FALSE(is_yes_pac(two_triangles(), all_of(two_triangles()), 2));
    CHECK(is_yes_pac(two_triangles(), {0, 1, 2}, 3));
    Graph k4e = complete_graph(4);
    k4e.remove_edge(0, 1);
    CHECK(is_yes_pac(k4e, all_of(k4e), 3));
    // K4 minus an edge keeps the Hamiltonian cycle 0-2-1-3.
    CHECK(is_cycle_through(k4e, Cycle{{0, 2, 1, 3}}, all_of(k4e)));
    CHECK(is_yes_pac(k4e, all_of(k4e), 4));
    Graph diamond_tail = k4e;
    diamond_tail.add_vertex(4);
    diamond_tail.add_edge(3, 4);
    CHECK_FALSE(is_yes_pac(diamond_tail, all_of(diamond_tail), 2));
    CHECK(is_yes_pac(path(3), {0, 1}, 3));
    CHECK(is_yes_pac(path(3), all_of(path(3)), 0));
    CHECK_THROWS_AS(is_yes_pac(c6, all_of(c6), -1), Error);
    auto bad = find_uncyclable_subset(two_triangles(), all_of(two_triangles()), 2);
    REQUIRE(bad);
    CHECK_FALSE(cycle_through(two_triangles(), *bad));
}

TEST_CASE("budget limits") {
    OracleBudget tight;
    tight.max_subsets = 3;
    Graph pet = petersen_graph();
    CHECK_THROWS_AS(is_yes_pac(pet, all_of(pet), 2, tight), Error);
    try {
        is_yes_pac(pet, all_of(pet), 2, tight);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
}

TEST_CASE("cyclability") {
    CHECK(cyclability(complete_graph(4)) == 4);
    CHECK(cyclability(petersen_graph()) == 9);
    CHECK(cyclability(star_graph(5)) == 1);
    CHECK(cyclability(path(2)) == 1);
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n))
            if (g.num_edges() == n - 1) CHECK(cyclability(g) == 1);
}

TEST_CASE("hamiltonian with an edge") {
    Graph k4 = complete_graph(4);
    for (const Edge& e : k4.edges()) CHECK(hamiltonian_with_edge(k4, e));
    Graph c5 = cycle_graph(5);
    for (const Edge& e : c5.edges()) CHECK(hamiltonian_with_edge(c5, e));
    Graph p4 = path(4);
    for (const Edge& e : p4.edges()) CHECK_FALSE(hamiltonian_with_edge(p4, e));
    CHECK_THROWS_AS(hamiltonian_with_edge(p4, Edge{0, 3}), Error);
}

TEST_CASE("hypohamiltonian") {
    CHECK(is_hypohamiltonian(petersen_graph()));
    CHECK_FALSE(is_hypohamiltonian(complete_graph(4)));
    CHECK_FALSE(is_hypohamiltonian(cycle_graph(5)));
    CHECK_FALSE(is_hamiltonian(petersen_graph()));
    CHECK(is_hamiltonian(complete_graph(4)));
}

TEST_CASE("dirac lower bound on generated graphs") {
    for (int k : {2, 3})
        for (int n = 6; n <= 12; ++n)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                Graph g = random_k_connected(n, k, seed);
                CHECK(vertex_connectivity(g) >= k);
                CHECK(cyclability(g) >= k);
            }
}

TEST_CASE("cyclability extremes characterize hamiltonicity") {
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            int c = cyclability(g);
            CHECK((c == n) == is_hamiltonian(g));
            CHECK((c == n - 1) == is_hypohamiltonian(g));
        }
    Graph pet = petersen_graph();
    CHECK(cyclability(pet) == pet.num_vertices() - 1);
    CHECK(is_hypohamiltonian(pet));
}

TEST_CASE("yes answers come with witnesses") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_connected(8, 13, seed);
        VertexSet r = all_of(g);
        for (int k = 2; k <= 3; ++k) {
            if (!is_yes_pac(g, r, k)) continue;
            for (const VertexSet& s : test::subsets_of_size(r.members(), k)) {
                auto c = cycle_through(g, s);
                REQUIRE(c);
                CHECK(is_cycle_through(g, *c, s));
            }
        }
    }
}
