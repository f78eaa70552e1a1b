#include <doctest.h>

#include <sstream>

#include "cyc/decomp.hpp"
#include "cyc/generators.hpp"

using namespace cyc;

namespace {

TreeDecomposition single_bag(const VertexSet& bag) {
    TreeDecomposition d;
    d.bags = {bag};
    return d;
}

Graph path3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

// Width of the best elimination order, by trying all of them.
int brute_force_treewidth(const Graph& g) {
    std::vector<Vertex> order = g.vertices();
    int best = g.num_vertices() - 1;
    do {
        best = std::min(best, decomposition_from_order(g, order).width());
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("validate") {
    Graph k3 = complete_graph(3);
    auto whole = validate(k3, single_bag({0, 1, 2}));
    CHECK(whole.ok);
    CHECK(single_bag({0, 1, 2}).width() == 2);

    TreeDecomposition two;
    two.bags = {{0, 1}, {1, 2}};
    two.tree_edges = {{0, 1}};
    CHECK_FALSE(validate(k3, two).ok);
    CHECK(validate(path3(), two).ok);
    CHECK(two.width() == 1);

    TreeDecomposition broken;
    broken.bags = {{0, 1}, {2}, {1, 2}};
    broken.tree_edges = {{0, 1}, {1, 2}};
    auto report = validate(path3(), broken);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.violations.empty());

    TreeDecomposition uncovered;
    uncovered.bags = {{0, 1}};
    CHECK_FALSE(validate(path3(), uncovered).ok);
}

TEST_CASE("make nice on a single bag") {
    Graph k3 = complete_graph(3);
    NiceTreeDecomposition nice = make_nice(k3, single_bag({0, 1, 2}));
    std::vector<NodeKind> kinds;
    std::vector<Vertex> vertices;
    for (const auto& node : nice.nodes) {
        kinds.push_back(node.kind);
        vertices.push_back(node.vertex);
    }
    CHECK(kinds == std::vector<NodeKind>{NodeKind::Leaf, NodeKind::Insert, NodeKind::Insert, NodeKind::Insert,
                                         NodeKind::Forget, NodeKind::Forget, NodeKind::Forget});
    CHECK(vertices == std::vector<Vertex>{-1, 0, 1, 2, 0, 1, 2});
    CHECK(nice.width() == 2);
    CHECK(nice.root == 6);
    CHECK(nice.nodes[nice.root].bag.empty());
    CHECK(check_nice(k3, nice).ok);
    CHECK(validate(k3, nice.as_tree()).ok);
}

TEST_CASE("make nice is stable on nice input") {
    Graph g = grid_graph(3, 3);
    auto tw = exact_treewidth(g, 9);
    REQUIRE(tw);
    NiceTreeDecomposition once = make_nice(g, tw->decomposition);
    NiceTreeDecomposition twice = make_nice(g, once.as_tree());
    CHECK(check_nice(g, twice).ok);
    CHECK(twice.width() == once.width());
}

TEST_CASE("make nice on the empty graph") {
    NiceTreeDecomposition nice = make_nice(Graph(), TreeDecomposition{});
    REQUIRE(nice.nodes.size() == 1);
    CHECK(nice.nodes[0].kind == NodeKind::Leaf);
    CHECK(nice.nodes[0].bag.empty());
    CHECK(nice.root == 0);
}

TEST_CASE("make nice rejects invalid input") {
    TreeDecomposition two;
    two.bags = {{0, 1}, {1, 2}};
    two.tree_edges = {{0, 1}};
    CHECK_THROWS_AS(make_nice(complete_graph(3), two), Error);
}

TEST_CASE("exact treewidth") {
    CHECK(exact_treewidth(complete_graph(4), 10)->width == 3);
    CHECK(exact_treewidth(grid_graph(3, 3), 10)->width == 3);
    CHECK(exact_treewidth(cycle_graph(6), 10)->width == 2);
    CHECK(exact_treewidth(petersen_graph(), 10)->width == 4);
    CHECK_FALSE(exact_treewidth(complete_graph(5), 3).has_value());
    CHECK_THROWS_AS(exact_treewidth(grid_graph(3, 11), 40), Error);
}

TEST_CASE("exact treewidth matches elimination search") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            auto tw = exact_treewidth(g, n);
            REQUIRE(tw);
            CHECK(validate(g, tw->decomposition).ok);
            CHECK(tw->decomposition.width() == tw->width);
            CHECK(tw->width == brute_force_treewidth(g));
        }
}

TEST_CASE("exact treewidth is at most any supplied width") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_connected(10, 16, seed);
        TreewidthResult heuristic = heuristic_treewidth(g);
        REQUIRE(validate(g, heuristic.decomposition).ok);
        auto exact = exact_treewidth(g, 10);
        REQUIRE(exact);
        CHECK(exact->width <= heuristic.width);
        std::vector<Vertex> order = g.vertices();
        std::reverse(order.begin(), order.end());
        CHECK(exact->width <= decomposition_from_order(g, order).width());
    }
}

TEST_CASE("nice decompositions satisfy every node contract") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_connected(9, 13, seed);
        for (const TreeDecomposition& d : {heuristic_treewidth(g).decomposition, exact_treewidth(g, 9)->decomposition}) {
            NiceTreeDecomposition nice = make_nice(g, d);
            CHECK(check_nice(g, nice).ok);
            CHECK(validate(g, nice.as_tree()).ok);
            CHECK(nice.width() == d.width());
            for (std::size_t i = 0; i < nice.nodes.size(); ++i)
                for (int c : nice.nodes[i].children) CHECK(c < static_cast<int>(i));
        }
    }
}

TEST_CASE("td file round trip") {
    Graph g = petersen_graph();
    TreeDecomposition d = exact_treewidth(g, 10)->decomposition;
    std::stringstream text;
    write_td(text, d, g.num_vertices());
    TreeDecomposition back = parse_td(text);
    CHECK(back.bags == d.bags);
    CHECK(validate(g, back).ok);
    std::istringstream bad("s td 1 2 3\nb 2 0 1\n");
    CHECK_THROWS_AS(parse_td(bad), Error);
}
