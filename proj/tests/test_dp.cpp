#include <doctest.h>

#include <algorithm>

#include "cyc/decomp.hpp"
#include "cyc/dp.hpp"
#include "cyc/generators.hpp"
#include "cyc/oracle.hpp"
#include "test_support.hpp"

using namespace cyc;

namespace {

Pairing make(VertexSet active, std::vector<Edge> edges, bool loop = false) {
    return canonical(Pairing{std::move(active), std::move(edges), loop});
}

bool has(const std::vector<Pairing>& sig, const Pairing& p) { return std::binary_search(sig.begin(), sig.end(), p); }

VertexSet all_of(const Graph& g) { return VertexSet(g.vertices()); }

}  // namespace

TEST_CASE("leaf table") {
    auto leaf = leaf_table();
    REQUIRE(leaf.size() == 1);
    CHECK(leaf[0].i == 0);
    CHECK(leaf[0].k_set.empty());
    CHECK(leaf[0].signature == std::vector<Pairing>{make({}, {})});
    CHECK(leaf_table() == leaf);
}

TEST_CASE("insert into a leaf") {
    auto plain = insert_table(leaf_table(), 5, false, {5}, 2, {});
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].i == 0);
    CHECK(has(plain[0].signature, make({5}, {})));

    auto annotated = insert_table(leaf_table(), 5, true, {5}, 2, {});
    REQUIRE(annotated.size() == 2);
    const DpEntry& committed = annotated[0].i == 1 ? annotated[0] : annotated[1];
    CHECK(committed.k_set == VertexSet{5});
    CHECK_FALSE(committed.signature.empty());
    for (const Pairing& p : committed.signature) CHECK(p.active.contains(5));

    auto full = insert_table(leaf_table(), 5, true, {5}, 0, {});
    REQUIRE(full.size() == 1);
    CHECK(full[0].i == 0);
}

TEST_CASE("insert with an owned edge") {
    auto one = insert_table(leaf_table(), 1, false, {1}, 1, {});
    auto two = insert_table(one, 2, false, {1, 2}, 1, {{1, 2}});
    REQUIRE(two.size() == 1);
    CHECK(has(two[0].signature, make({1, 2}, {{1, 2}})));
    CHECK(has(two[0].signature, make({1, 2}, {})));
    for (const Pairing& p : two[0].signature) CHECK(p.edges.size() <= 1);
}

TEST_CASE("forget") {
    std::vector<DpEntry> child = {{0, {}, {make({1, 2, 3}, {{1, 2}, {2, 3}})}}};
    auto out = forget_table(child, 2, {1, 3});
    REQUIRE(out.size() == 1);
    CHECK(out[0].signature == std::vector<Pairing>{make({1, 3}, {{1, 3}})});

    TableFlags flags;
    std::vector<DpEntry> stranded = {{1, {2}, {make({1, 2}, {{1, 2}})}}};
    CHECK(forget_table(stranded, 2, {1}, &flags).empty());
    CHECK(flags.committed_subset_died);

    std::vector<DpEntry> absent = {{0, {}, {make({1, 3}, {{1, 3}})}}};
    auto same = forget_table(absent, 2, {1, 3});
    REQUIRE(same.size() == 1);
    CHECK(same[0].signature == absent[0].signature);
}

TEST_CASE("join") {
    auto joined = join_table(leaf_table(), {}, leaf_table(), {}, 2);
    CHECK(joined == leaf_table());

    std::vector<DpEntry> left = {{1, {4}, {make({4}, {})}}};
    std::vector<DpEntry> right = {{1, {4}, {make({4}, {})}}};
    auto both = join_table(left, {4}, right, {4}, 1);
    REQUIRE(both.size() == 1);
    CHECK(both[0].i == 1);
    CHECK(both[0].k_set == VertexSet{4});

    std::vector<DpEntry> l2 = {{1, {}, {make({4}, {})}}};
    std::vector<DpEntry> r2 = {{1, {}, {make({4}, {})}}};
    CHECK(join_table(l2, {4}, r2, {4}, 1).empty());
    CHECK(join_table(l2, {4}, r2, {4}, 2).size() == 1);

    CHECK_THROWS_AS(join_table(left, {4}, right, {5}, 1), Error);
}

TEST_CASE("root acceptance") {
    CHECK(root_accepts({{0, {}, {make({}, {})}}, {1, {}, {make({}, {}, true)}}}));
    CHECK_FALSE(root_accepts({{1, {}, {make({}, {})}}}));
}

TEST_CASE("solve examples") {
    Graph c5 = cycle_graph(5);
    CHECK(solve_pac(c5, all_of(c5), 3).answer);
    Graph star = star_graph(4);
    CHECK_FALSE(solve_pac(star, all_of(star), 1).answer);
    Graph pet = petersen_graph();
    CHECK(solve_pac(pet, all_of(pet), 9).answer);
    CHECK_FALSE(solve_pac(pet, all_of(pet), 10).answer);
    CHECK(solve_pac(star, {}, 1).answer);
    CHECK(solve_pac(star, all_of(star), 0).answer);
    CHECK_THROWS_AS(solve_pac(star, all_of(star), -1), Error);
    CHECK_THROWS_AS(solve_pac(complete_graph(8), all_of(complete_graph(8)), 2), Error);
}

TEST_CASE("solve rejects a foreign decomposition") {
    Graph g = cycle_graph(5);
    auto d = make_nice(cycle_graph(4), exact_treewidth(cycle_graph(4), 4)->decomposition);
    CHECK_THROWS_AS(solve_pac(g, all_of(g), 2, d), Error);
}

TEST_CASE("dp matches the oracle on small graphs") {
    DpContext ctx;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n))
            for (const VertexSet& r : test::all_subsets(g.vertices()))
                for (int k = 1; k <= 3; ++k) {
                    auto res = solve_pac(g, r, k, {}, &ctx);
                    CHECK(res.answer == is_yes_pac(g, r, k));
                    CHECK(res.stats.growth_bound_ok);
                    CHECK(res.stats.audit != 0);
                }
}

TEST_CASE("monotone in k") {
    DpContext ctx;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_connected(8, 11, seed);
        VertexSet r = all_of(g);
        bool previous = true;
        for (int k = 1; k <= 4; ++k) {
            bool now = solve_pac(g, r, k, {}, &ctx).answer;
            if (now) CHECK(previous);
            previous = now;
        }
    }
}

TEST_CASE("deterministic and context independent") {
    Graph g = random_connected(9, 14, 3);
    DpOptions opts;
    opts.trace = true;
    DpContext shared;
    auto a = solve_pac(g, all_of(g), 3, opts, &shared);
    auto b = solve_pac(g, all_of(g), 3, opts, &shared);
    auto c = solve_pac(g, all_of(g), 3, opts);
    CHECK(a.trace == b.trace);
    CHECK(a.trace == c.trace);
    CHECK(a.answer == c.answer);
    CHECK(a.stats.entries_total == c.stats.entries_total);
    CHECK(a.stats.entries_max == c.stats.entries_max);
}

TEST_CASE("printed lift policy disagrees with the oracle") {
    DpOptions printed;
    printed.lift = LiftPolicy::AsPrinted;
    int mismatches = 0;
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int k = 1; k <= 3; ++k)
                if (solve_pac(g, all_of(g), k, printed).answer != is_yes_pac(g, all_of(g), k)) ++mismatches;
    CHECK(mismatches > 0);
}
