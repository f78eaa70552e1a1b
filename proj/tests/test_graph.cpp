#include <doctest.h>

#include <sstream>

#include "cyc/generators.hpp"
#include "cyc/graph.hpp"
#include "test_support.hpp"

using namespace cyc;

namespace {

Graph path3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

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

TEST_CASE("cycle through a set") {
    Graph c5 = cycle_graph(5);
    Cycle all{{0, 1, 2, 3, 4}};
    CHECK(is_cycle_through(c5, all, {0, 2}));
    CHECK_FALSE(is_cycle_through(c5, all, {0, 7}));
    Graph k4 = complete_graph(4);
    CHECK_FALSE(is_cycle_through(k4, Cycle{{0, 1, 2}}, {3}));
    CHECK(is_cycle_through(k4, Cycle{{0, 1, 2}}, {}));
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 2, 4}}));
    CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 1, 2, 3, 4, 0}}));
    CHECK_FALSE(is_valid_cycle(k4, Cycle{{0, 1}}));
}

TEST_CASE("empty set reduces to cycle validity") {
    for (int n = 3; n <= 7; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Graph g = random_connected(n, std::min(n * (n - 1) / 2, 2 * n), seed);
            auto cycles = test::all_cycles(g);
            for (const auto& c : cycles) CHECK(is_cycle_through(g, c, {}));
            for (const auto& c : cycles) {
                Cycle broken = c;
                std::swap(broken.vertices[0], broken.vertices[1]);
                bool valid = true;
                for (std::size_t i = 0; i < broken.vertices.size(); ++i)
                    valid = valid && g.adjacent(broken.vertices[i],
                                                broken.vertices[(i + 1) % broken.vertices.size()]);
                CHECK(is_cycle_through(g, broken, {}) == valid);
            }
        }
}

TEST_CASE("dissolve") {
    Graph p = dissolve(path3(), 1);
    CHECK(p.vertices() == std::vector<Vertex>{0, 2});
    CHECK(p.edges() == std::vector<Edge>{{0, 2}});

    Graph t = dissolve(complete_graph(3), 1);
    CHECK(t.vertices() == std::vector<Vertex>{0, 2});
    CHECK(t.multiplicity(0, 2) == 2);

    CHECK(kind_of([] { dissolve(star_graph(4), 0); }) == ErrorKind::Degree);
    Graph dbl(2);
    dbl.add_edge(0, 1);
    dbl.add_edge(0, 1);
    CHECK(kind_of([&] { dissolve(dbl, 0); }) == ErrorKind::Loop);
}

TEST_CASE("lift keeps the vertex") {
    Graph p = lift(path3(), 1);
    CHECK(p.vertices() == std::vector<Vertex>{0, 1, 2});
    CHECK(p.edges() == std::vector<Edge>{{0, 2}});
    CHECK(p.degree(1) == 0);

    Graph t = lift(complete_graph(3), 1);
    CHECK(t.edges() == std::vector<Edge>{{0, 2}});
    CHECK(t.degree(1) == 0);

    CHECK(kind_of([] { lift(complete_graph(4), 0); }) == ErrorKind::Degree);
}

TEST_CASE("dissolve and lift agree off multi-edges") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (Vertex v : g.vertices()) {
                if (g.degree(v) != 2) continue;
                auto nb = g.neighbors(v);
                if (nb[0] == nb[1] || g.adjacent(nb[0], nb[1])) continue;
                CHECK(dissolve(g, v).simplified() == lift(g, v).without_vertex(v));
            }
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(vertex_connectivity(path3()) == 1);
    CHECK(vertex_connectivity(petersen_graph()) == 3);
    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(vertex_connectivity(split) == 0);
    CHECK(kind_of([] { vertex_connectivity(Graph(1)); }) == ErrorKind::Size);
}

TEST_CASE("connectivity matches deletion search") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            int expected = n - 1;
            for (int size = 0; size < n - 1 && expected == n - 1; ++size)
                for (const VertexSet& cut : test::subsets_of_size(g.vertices(), size)) {
                    Graph rest = g.induced(VertexSet(g.vertices()).minus(cut));
                    if (!is_connected(rest)) {
                        expected = size;
                        break;
                    }
                }
            bool complete = g.num_edges() == n * (n - 1) / 2;
            if (!complete) CHECK(vertex_connectivity(g) == expected);
        }
}

TEST_CASE("graph file round trip") {
    std::vector<Graph> graphs = {petersen_graph(), grid_graph(3, 4), complete_graph(5), star_graph(6)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) graphs.push_back(random_connected(9, 14, seed));
    Graph multi = dissolve(complete_graph(3), 1);
    graphs.push_back(Graph(multi.max_vertex() + 1));
    for (const Edge& e : multi.edges()) graphs.back().add_edge(e.u, e.v);
    for (const Graph& g : graphs) {
        VertexSet r{0, g.max_vertex()};
        std::istringstream in(serialize_graph(g, r));
        GraphFile f = parse_graph(in);
        CHECK(f.graph == g);
        CHECK(f.annotated == r);
        CHECK(serialize_graph(f.graph, f.annotated) == serialize_graph(g, r));
    }
}

TEST_CASE("graph file errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_graph(in);
    };
    CHECK(kind_of([&] { parse("e 0 1\n"); }) == ErrorKind::Format);
    CHECK(kind_of([&] { parse("p cyc 2 2\ne 0 1\n"); }) == ErrorKind::Format);
    CHECK(kind_of([&] { parse("p cyc 2 1\ne 0 5\n"); }) != ErrorKind::Io);
    GraphFile f = parse("c comment\np cyc 3 2\ne 2 1\ne 0 1\nr 2\nr 0\n");
    CHECK(f.annotated == VertexSet{0, 2});
    CHECK(f.file_edge_ids == std::vector<int>{1, 0});
    CHECK(kind_of([] { read_graph_file("/nonexistent/g.cyc"); }) == ErrorKind::Io);
}
