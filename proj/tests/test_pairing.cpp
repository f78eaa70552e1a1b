#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cyc/pairing.hpp"
#include "test_support.hpp"

using namespace cyc;

namespace {

Pairing make(VertexSet active, std::vector<Edge> edges, bool loop = false) {
    return canonical(Pairing{std::move(active), std::move(edges), loop});
}

// Validity straight from the definition: degrees, endpoints, multiplicity,
// and a unique cycle with everything else at degree 0.
bool valid_by_definition(const Pairing& p) {
    std::map<Vertex, int> degree;
    std::map<Edge, int> mult;
    for (const Edge& e : p.edges) {
        if (!p.active.contains(e.u) || !p.active.contains(e.v)) return false;
        if (++mult[e] > 2) return false;
        if (e.is_loop() && mult[e] > 1) return false;
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    for (auto [v, d] : degree)
        if (d > 2) return false;
    // Components over active vertices.
    std::map<Vertex, Vertex> parent;
    for (Vertex v : p.active) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const Edge& e : p.edges) parent[find(e.u)] = find(e.v);
    std::map<Vertex, std::pair<int, int>> comp;  // root -> (vertices, edges)
    for (Vertex v : p.active) comp[find(v)].first += 1;
    for (const Edge& e : p.edges) comp[find(e.u)].second += 1;
    int cycles = p.loop ? 1 : 0;
    for (auto& [root, ve] : comp)
        if (ve.second == ve.first) ++cycles;
    if (cycles > 1) return false;
    if (cycles == 1)
        for (Vertex v : p.active) {
            auto& ve = comp[find(v)];
            if (ve.second != ve.first && degree[v] != 0) return false;
        }
    return true;
}

std::vector<Pairing> brute_enumerate(const VertexSet& bag) {
    std::vector<Edge> slots;
    for (Vertex a : bag)
        for (Vertex b : bag)
            if (a <= b) slots.push_back({a, b});
    std::set<Pairing> out;
    for (const VertexSet& active : test::all_subsets(bag.members())) {
        std::vector<Edge> inside;
        for (const Edge& e : slots)
            if (active.contains(e.u) && active.contains(e.v)) inside.push_back(e);
        std::vector<int> mult(inside.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t at, int budget) {
            if (at == inside.size()) {
                std::vector<Edge> edges;
                for (std::size_t i = 0; i < inside.size(); ++i)
                    for (int c = 0; c < mult[i]; ++c) edges.push_back(inside[i]);
                for (bool loop : {false, true}) {
                    Pairing p = make(active, edges, loop);
                    if (valid_by_definition(p)) out.insert(p);
                }
                return;
            }
            for (int c = 0; c <= 2 && c <= budget; ++c) {
                mult[at] = c;
                rec(at + 1, budget - c);
            }
            mult[at] = 0;
        };
        rec(0, static_cast<int>(active.size()) + 1);
    }
    return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("pairing counts") {
    CHECK(enumerate_pairings({}).size() == 2);
    CHECK(enumerate_pairings({4}).size() == 5);
    std::vector<std::uint64_t> counts;
    for (int n = 0; n <= 6; ++n) counts.push_back(count_pairings(n));
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 5);
    CHECK(counts[2] == 14);
    CHECK(counts[3] == 44);
    CHECK(counts[4] == 162);
    CHECK(std::is_sorted(counts.begin(), counts.end()));
    CHECK(std::adjacent_find(counts.begin(), counts.end()) == counts.end());
    CHECK_THROWS_AS(enumerate_pairings(VertexSet({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})), Error);
}

TEST_CASE("pairings of a single vertex") {
    auto all = enumerate_pairings({4});
    std::set<Pairing> got(all.begin(), all.end());
    std::set<Pairing> want = {make({}, {}), make({}, {}, true), make({4}, {}), make({4}, {{4, 4}}),
                              make({4}, {}, true)};
    CHECK(got == want);
}

TEST_CASE("enumeration matches the definition") {
    for (int n = 0; n <= 4; ++n) {
        std::vector<Vertex> ids;
        for (int i = 0; i < n; ++i) ids.push_back(3 * i + 1);
        VertexSet bag(ids);
        auto listed = enumerate_pairings(bag);
        CHECK(listed == brute_enumerate(bag));
        CHECK(listed.size() == count_pairings(n));
        CHECK(std::is_sorted(listed.begin(), listed.end()));
        CHECK(listed == enumerate_pairings(bag));
        for (const Pairing& p : listed) CHECK(is_valid_pairing(p));
    }
}

TEST_CASE("validity examples") {
    CHECK(is_valid_pairing(make({1, 2, 3}, {{1, 2}, {2, 3}})));
    CHECK(is_valid_pairing(make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK_FALSE(is_valid_pairing(make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}, true)));
    CHECK_FALSE(is_valid_pairing(make({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}})));
    CHECK_FALSE(is_valid_pairing(make({1, 2, 3}, {{1, 2}, {1, 2}, {3, 3}})));
    CHECK_FALSE(is_valid_pairing(make({1, 2}, {{1, 2}, {1, 2}}, true)));
    CHECK_FALSE(is_valid_pairing(make({1}, {{1, 2}})));
    CHECK(is_valid_pairing(make({1, 2}, {{1, 2}, {1, 2}})));
    CHECK_FALSE(is_valid_pairing(make({1, 2, 3}, {{1, 2}, {1, 2}, {3, 3}})));
}

TEST_CASE("lift examples") {
    auto path = lift_pairing(make({1, 2, 3}, {{1, 2}, {2, 3}}), 2);
    REQUIRE(path);
    CHECK(*path == make({1, 3}, {{1, 3}}));

    auto triangle = lift_pairing(make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}), 2);
    REQUIRE(triangle);
    CHECK(*triangle == make({1, 3}, {{1, 3}, {1, 3}}));

    auto marker = lift_pairing(make({1, 3}, {{1, 3}, {1, 3}}), 3);
    REQUIRE(marker);
    CHECK(*marker == make({1}, {{1, 1}}));

    auto self = lift_pairing(make({2}, {{2, 2}}), 2);
    REQUIRE(self);
    CHECK(*self == make({}, {}, true));

    CHECK_FALSE(lift_pairing(make({1, 2}, {{1, 2}}), 2));
    CHECK_FALSE(lift_pairing(make({1, 2}, {}), 2));
    Pairing untouched = make({1, 3}, {{1, 3}});
    CHECK(lift_pairing(untouched, 2) == untouched);
}

TEST_CASE("enumeration is closed under lifts") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Vertex> ids;
        for (int i = 0; i < n; ++i) ids.push_back(i);
        VertexSet bag(ids);
        auto all = enumerate_pairings(bag);
        std::set<Pairing> members(all.begin(), all.end());
        for (const Pairing& p : all)
            for (Vertex v : bag) {
                auto lifted = lift_pairing(p, v);
                if (!lifted) continue;
                CHECK(members.count(*lifted) == 1);
                CHECK_FALSE(lifted->active.contains(v));
            }
    }
}

TEST_CASE("union") {
    Pairing a = make({1, 2, 3}, {{1, 2}});
    Pairing b = make({2, 3}, {{2, 3}});
    auto ab = unite(a, b);
    REQUIRE(ab);
    CHECK(*ab == make({1, 2, 3}, {{1, 2}, {2, 3}}));
    CHECK(unite(make({1, 2}, {{1, 2}}), make({1, 2}, {{1, 2}})) == make({1, 2}, {{1, 2}, {1, 2}}));
    CHECK_FALSE(unite(make({}, {}, true), make({}, {}, true)));
    CHECK_FALSE(unite(make({1, 2, 3, 4}, {{1, 2}, {1, 3}}), make({1, 4}, {{1, 4}})));
}

TEST_CASE("oplus examples") {
    AuxGraph lone{7, {7}, {}};
    auto out = oplus(make({}, {}), lone, {}, {7});
    CHECK(out == std::vector<Pairing>{make({7}, {})});

    AuxGraph wedge{7, {1, 3, 7}, {{7, 1}, {7, 3}}};
    auto closed = oplus(make({1, 3}, {{1, 3}}), wedge, {7}, {1, 3, 7});
    CHECK(std::count(closed.begin(), closed.end(), make({1, 3, 7}, {{1, 3}, {1, 7}, {3, 7}})) == 1);
    CHECK(std::count(closed.begin(), closed.end(), make({1, 3}, {{1, 3}, {1, 3}})) == 1);
    for (const Pairing& p : closed) CHECK(is_valid_pairing(p));

    AuxGraph crowd{7, {1, 7}, {{7, 1}}};
    CHECK(oplus(make({1, 2, 3}, {{1, 2}, {1, 3}}), crowd, {}, {1, 2, 3, 7}).empty());

    AuxGraph outside{7, {1, 7, 9}, {{7, 9}}};
    CHECK_THROWS_AS(oplus(make({1}, {}), outside, {}, {1, 7}), Error);
}

TEST_CASE("zeta examples") {
    auto back = zeta(make({7}, {}), {}, 7, {}, {});
    CHECK(std::count(back.begin(), back.end(), make({}, {})) == 1);

    CHECK(zeta(make({1, 2, 7}, {{1, 7}, {2, 7}}), {}, 7, {1}, {1, 2}).empty());

    auto loop = zeta(make({}, {}, true), {1, 7}, 7, {1}, {1});
    for (const Pairing& p : loop) {
        bool reached = false;
        for (const AuxGraph& aux : enumerate_aux(7, {1})) {
            auto fwd = oplus(p, aux, {1, 7}, {1, 7});
            reached = reached || std::count(fwd.begin(), fwd.end(), make({}, {}, true)) > 0;
        }
        CHECK(reached);
    }
}

TEST_CASE("adjointness over small bags") {
    const Vertex v = 9;
    for (int n = 0; n <= 2; ++n) {
        std::vector<Vertex> ids;
        for (int i = 0; i < n; ++i) ids.push_back(i);
        VertexSet bag_s(ids);
        VertexSet bag_t = bag_s.united({v});
        for (const VertexSet& nb : test::all_subsets(ids))
            for (const VertexSet& l : test::all_subsets(bag_t.members()))
                for (const Pairing& p : enumerate_pairings(bag_s))
                    for (const AuxGraph& aux : enumerate_aux(v, nb))
                        for (const Pairing& q : oplus(p, aux, l, bag_t)) {
                            auto inv = zeta(q, l, v, nb, bag_s);
                            CHECK(std::binary_search(inv.begin(), inv.end(), p));
                        }
    }
}

TEST_CASE("xi examples") {
    auto empty = xi(make({}, {}));
    CHECK(empty.size() == 1);
    CHECK(empty[0] == std::make_pair(make({}, {}), make({}, {})));

    Pairing edge = make({1, 2}, {{1, 2}});
    CHECK(xi(edge).size() == 8);
    CHECK(xi(make({}, {}, true)).size() == 2);
}

TEST_CASE("xi is symmetric and exact") {
    for (int n = 0; n <= 3; ++n) {
        std::vector<Vertex> ids;
        for (int i = 0; i < n; ++i) ids.push_back(i);
        auto all = enumerate_pairings(VertexSet(ids));
        for (const Pairing& p : all) {
            auto pairs = xi(p);
            std::set<std::pair<Pairing, Pairing>> got(pairs.begin(), pairs.end());
            std::set<std::pair<Pairing, Pairing>> want;
            for (const Pairing& a : all)
                for (const Pairing& b : all)
                    if (unite(a, b) == p) want.insert({a, b});
            CHECK(got == want);
            for (auto& [a, b] : got) CHECK(got.count({b, a}) == 1);
        }
    }
}

TEST_CASE("debug text") {
    CHECK(to_string(make({1, 2, 3}, {{2, 3}, {1, 2}})) == "[1 2 3| 1-2 2-3|]");
    CHECK(to_string(make({}, {}, true)) == "[| | L]");
}
