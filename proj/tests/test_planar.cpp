#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "cyc/dp.hpp"
#include "cyc/generators.hpp"
#include "cyc/oracle.hpp"
#include "cyc/planar.hpp"

using namespace cyc;

namespace {

Vertex ring_id(int len, int ring, int j) { return 1 + (ring - 1) * len + j; }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no cyc::Error thrown");
    return ErrorKind::Io;
}

// ring_of_rings plus, optionally, a vertex z outside the outermost ring
// joined to its first two vertices.
struct Rings {
    Graph graph;
    Embedding embedding;
    RailedAnnulusCertificate certificate;
    Vertex outer = -1;
};

Rings rings(int r, int len, bool with_outer) {
    RingOfRings base = ring_of_rings(r, len);
    Rings out;
    out.graph = base.plane.graph;
    Coordinates coords = base.plane.coords;
    if (with_outer) {
        out.outer = out.graph.max_vertex() + 1;
        out.graph.add_vertex(out.outer);
        out.graph.add_edge(out.outer, ring_id(len, r, 0));
        out.graph.add_edge(out.outer, ring_id(len, r, 1));
        double a = std::numbers::pi / len;
        coords[out.outer] = {(r + 1) * std::cos(a), (r + 1) * std::sin(a)};
    }
    out.embedding = embedding_from_coordinates(out.graph, coords);
    out.certificate = base.certificate;
    out.certificate.concentric.outer_face = out.embedding.outer_face;
    out.certificate.concentric.inside.clear();
    REQUIRE(verify_railed_annulus(out.graph, out.embedding, out.certificate).ok);
    return out;
}

ConcentricCertificate first_cycles(const ConcentricCertificate& full, int count) {
    ConcentricCertificate c;
    c.outer_face = full.outer_face;
    c.cycles.assign(full.cycles.begin(), full.cycles.begin() + count);
    return c;
}

Cycle square(int cols, int lo, int hi) {
    Cycle c;
    for (int x = lo; x <= hi; ++x) c.vertices.push_back(lo * cols + x);
    for (int y = lo + 1; y <= hi; ++y) c.vertices.push_back(y * cols + hi);
    for (int x = hi - 1; x >= lo; --x) c.vertices.push_back(hi * cols + x);
    for (int y = hi - 1; y > lo; --y) c.vertices.push_back(y * cols + lo);
    return c;
}

OracleBudget wide() {
    OracleBudget b;
    b.max_vertices = 64;
    return b;
}

}  // namespace

TEST_CASE("faces") {
    auto k4 = planar_embedding(complete_graph(4));
    REQUIRE(k4);
    CHECK(compute_faces(complete_graph(4), *k4).size() == 4);
    PlaneGraph c5 = cycle_plane(5);
    CHECK(compute_faces(c5.graph, c5.embedding).size() == 2);
    PlaneGraph cube = prism_plane(4);
    CHECK(compute_faces(cube.graph, cube.embedding).size() == 6);
    auto q3 = planar_embedding(prism_graph(4));
    REQUIRE(q3);
    CHECK(compute_faces(prism_graph(4), *q3).size() == 6);
    CHECK_FALSE(planar_embedding(complete_graph(5)));
    CHECK_FALSE(planar_embedding(petersen_graph()));
}

TEST_CASE("bad rotations are rejected") {
    Graph k4 = complete_graph(4);
    Embedding emb = *planar_embedding(k4);
    Embedding twisted = emb;
    std::swap(twisted.rotation[0][0], twisted.rotation[0][1]);
    CHECK(kind_of([&] { compute_faces(k4, twisted); }) == ErrorKind::Embedding);
    Embedding missing = emb;
    missing.rotation[0].pop_back();
    CHECK(kind_of([&] { compute_faces(k4, missing); }) == ErrorKind::Embedding);
}

TEST_CASE("outer face from coordinates") {
    PlaneGraph g = grid_plane(3, 3);
    FaceSet faces = compute_faces(g.graph, g.embedding);
    CHECK(faces.size() == 5);
    auto outer = faces.face_vertices(g.graph, g.embedding.outer_face);
    CHECK(outer.size() == 8);
}

TEST_CASE("embedding text round trip") {
    PlaneGraph g = grid_plane(3, 4);
    std::stringstream text;
    write_embedding(text, g.embedding);
    CHECK(parse_embedding(text) == g.embedding);
}

TEST_CASE("concentric verification") {
    PlaneGraph grid = grid_plane(6, 6);
    ConcentricCertificate nested;
    nested.outer_face = grid.embedding.outer_face;
    nested.cycles = {square(6, 1, 4), square(6, 0, 5)};
    CHECK(verify_concentric(grid.graph, grid.embedding, nested).ok);
    CHECK(nested.inside[0] == VertexSet{14, 15, 20, 21});

    ConcentricCertificate crossing;
    crossing.outer_face = grid.embedding.outer_face;
    crossing.cycles = {square(6, 1, 2), square(6, 2, 3)};
    CHECK_FALSE(verify_concentric(grid.graph, grid.embedding, crossing).ok);

    ConcentricCertificate reversed;
    reversed.outer_face = grid.embedding.outer_face;
    reversed.cycles = {square(6, 0, 5), square(6, 1, 4)};
    CHECK_FALSE(verify_concentric(grid.graph, grid.embedding, reversed).ok);

    ConcentricCertificate not_a_cycle;
    not_a_cycle.outer_face = grid.embedding.outer_face;
    not_a_cycle.cycles = {Cycle{{0, 1, 2}}};
    CHECK_FALSE(verify_concentric(grid.graph, grid.embedding, not_a_cycle).ok);
}

TEST_CASE("q density") {
    Rings g = rings(4, 4, false);
    const auto& cert = g.certificate.concentric;
    VertexSet all(g.graph.vertices());
    for (int q = 1; q <= 4; ++q) {
        CHECK(is_q_dense(all, cert, q));
        CHECK_FALSE(is_q_dense({}, cert, q));
    }
    VertexSet alternate = {ring_id(4, 1, 0), ring_id(4, 3, 2)};
    CHECK(is_q_dense(alternate, cert, 2));
    CHECK_FALSE(is_q_dense(alternate, cert, 1));
    CHECK_THROWS_AS(is_q_dense(all, cert, 0), Error);
    CHECK_THROWS_AS(is_q_dense(all, cert, 5), Error);
}

TEST_CASE("railed annulus of a wall") {
    Wall w = wall(6, {}, 3);
    CHECK(w.certificate.rails.size() == 3);
    CHECK(w.plane.graph.num_vertices() == wall_vertex_count(6));
    CHECK(wall_vertex_count(6) > 36);
    CHECK(w.layers.size() >= 2);
    RailedAnnulusCertificate cert = w.certificate;
    cert.concentric.inside.clear();
    CHECK(verify_railed_annulus(w.plane.graph, w.plane.embedding, cert).ok);
    CHECK(kind_of([] { wall(0); }) == ErrorKind::Parameter);
    Wall sub = wall(2, {{Edge(0, 1), 2}}, 0);
    CHECK(sub.plane.graph.num_vertices() == wall_vertex_count(2) + 2);
}

TEST_CASE("rail violations") {
    Rings g = rings(4, 4, false);
    RailedAnnulusCertificate cert = g.certificate;
    REQUIRE(verify_railed_annulus(g.graph, g.embedding, cert).ok);

    RailedAnnulusCertificate twice = g.certificate;
    twice.rails = {{ring_id(4, 1, 0), ring_id(4, 2, 0), ring_id(4, 3, 0), ring_id(4, 4, 0), ring_id(4, 4, 1),
                    ring_id(4, 3, 1)}};
    CHECK_FALSE(verify_railed_annulus(g.graph, g.embedding, twice).ok);

    RailedAnnulusCertificate leaving = g.certificate;
    leaving.rails = {{0, ring_id(4, 1, 0), ring_id(4, 2, 0), ring_id(4, 3, 0), ring_id(4, 4, 0)}};
    CHECK_FALSE(verify_railed_annulus(g.graph, g.embedding, leaving).ok);

    RailedAnnulusCertificate shared = g.certificate;
    shared.rails = {shared.rails[0], shared.rails[0]};
    CHECK_FALSE(verify_railed_annulus(g.graph, g.embedding, shared).ok);
}

TEST_CASE("ring generator") {
    RingOfRings big = ring_of_rings(16, 8);
    CHECK(big.plane.graph.num_vertices() == 1 + 16 * 8);
    CHECK(big.certificate.concentric.size() == 16);
    CHECK(big.certificate.rails.size() == 8);
    RailedAnnulusCertificate cert = big.certificate;
    cert.concentric.inside.clear();
    CHECK(verify_railed_annulus(big.plane.graph, big.plane.embedding, cert).ok);
    CHECK(cert.concentric.inside[0] == VertexSet{0});
}

TEST_CASE("certificate json round trip") {
    Rings g = rings(3, 4, true);
    std::string text = railed_to_json(g.certificate);
    RailedAnnulusCertificate back = railed_from_json(text);
    CHECK(back.rails == g.certificate.rails);
    back.concentric.inside.clear();
    CHECK(verify_railed_annulus(g.graph, g.embedding, back).ok);
    CHECK(railed_to_json(back) == text);

    ConcentricCertificate cc = concentric_from_json(concentric_to_json(g.certificate.concentric));
    CHECK(verify_concentric(g.graph, g.embedding, cc).ok);
    CHECK(kind_of([] { concentric_from_json("{\"schema\": 2, \"cycles\": []}"); }) == ErrorKind::Format);
    CHECK(kind_of([] { concentric_from_json("not json"); }) == ErrorKind::Format);
}

TEST_CASE("problem irrelevant vertices") {
    Rings g = rings(16, 3, true);
    VertexSet r = {g.outer};
    auto disk = problem_irrelevant_by_annulus(g.graph, g.embedding, r, 1, g.certificate.concentric, 16);
    CHECK(disk.contains(0));
    const bool before = is_yes_pac(g.graph, r, 1, wide());
    for (Vertex v : disk) CHECK(is_yes_pac(g.graph.without_vertex(v), r, 1, wide()) == before);

    auto short_cert = first_cycles(g.certificate.concentric, 15);
    CHECK(kind_of([&] { problem_irrelevant_by_annulus(g.graph, g.embedding, r, 1, short_cert, 16); }) ==
          ErrorKind::Precondition);
    CHECK(kind_of([&] {
              problem_irrelevant_by_annulus(g.graph, g.embedding, {ring_id(3, 7, 1)}, 1,
                                            g.certificate.concentric, 16);
          }) == ErrorKind::Precondition);
}

TEST_CASE("color irrelevant step") {
    Rings g = rings(4, 3, false);
    Constants c = Constants::reduced(1);
    DpContext ctx;
    DpBackend dp = [&](const Graph& h, const VertexSet& hr, int hk) { return solve_pac(h, hr, hk, {}, &ctx).answer; };
    int unannotated = 0;
    for (int shift = 0; shift < 3; ++shift) {
        VertexSet r;
        for (int i = 1; i <= 4; ++i) r.insert(ring_id(3, i, (i * shift) % 3));
        auto res = color_irrelevant_step(g.graph, g.embedding, r, 1, g.certificate, c, 7, dp);
        const bool before = is_yes_pac(g.graph, r, 1);
        if (res.no_instance) {
            CHECK_FALSE(before);
        } else {
            REQUIRE(r.contains(res.vertex));
            VertexSet smaller = r;
            smaller.erase(res.vertex);
            CHECK(is_yes_pac(g.graph, smaller, 1) == before);
            ++unannotated;
        }
        CHECK_FALSE(res.witnesses.empty());
    }
    CHECK(unannotated > 0);

    VertexSet r = {ring_id(3, 1, 0), ring_id(3, 2, 0), ring_id(3, 3, 0), ring_id(3, 4, 0)};
    DpBackend refuse = [](const Graph&, const VertexSet&, int) { return false; };
    auto no = color_irrelevant_step(g.graph, g.embedding, r, 1, g.certificate, c, 7, refuse);
    CHECK(no.no_instance);
    CHECK(no.failed_index >= 1);

    VertexSet sparse = {ring_id(3, 1, 0)};
    CHECK(kind_of([&] { color_irrelevant_step(g.graph, g.embedding, sparse, 1, g.certificate, c, 7, dp); }) ==
          ErrorKind::Precondition);
    DpBackend broken = [](const Graph&, const VertexSet&, int) -> bool { throw std::runtime_error("down"); };
    CHECK(kind_of([&] { color_irrelevant_step(g.graph, g.embedding, r, 1, g.certificate, c, 7, broken); }) ==
          ErrorKind::Backend);
}

TEST_CASE("find R-free concentric cycles") {
    PlaneGraph grid = grid_plane(6, 6);
    VertexSet boundary(square(6, 0, 5).vertices);
    auto found = find_concentric_r_free(grid.graph, grid.embedding, boundary, 2);
    REQUIRE(found);
    CHECK(found->size() == 2);
    ConcentricCertificate copy = *found;
    copy.inside.clear();
    CHECK(verify_concentric(grid.graph, grid.embedding, copy).ok);
    CHECK(found->closed(2).intersected(boundary).empty());

    CHECK_FALSE(find_concentric_r_free(grid.graph, grid.embedding, VertexSet(grid.graph.vertices()), 1));
    PlaneGraph star = star_plane(6);
    CHECK_FALSE(find_concentric_r_free(star.graph, star.embedding, {}, 1));
}

TEST_CASE("pipeline short circuits at small width") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        PlaneGraph g = grid_plane(2, 4 + static_cast<int>(seed % 3));
        VertexSet r(g.graph.vertices());
        for (int k = 1; k <= 3; ++k) {
            PipelineResult res = pipeline_solve(g.graph, g.embedding, r, k);
            CHECK(res.answer == solve_pac(g.graph, r, k).answer);
            CHECK(res.step1 == 1);
            CHECK(res.fallback == 0);
        }
    }
}

TEST_CASE("pipeline deletes a problem irrelevant vertex") {
    Rings g = rings(3, 4, false);
    VertexSet r = {ring_id(4, 3, 0)};
    PipelineConfig config;
    config.constants = Constants::reduced(1);
    PipelineResult res = pipeline_solve(g.graph, g.embedding, r, 1, config);
    CHECK(res.step2 >= 1);
    CHECK(res.answer == is_yes_pac(g.graph, r, 1));
}

TEST_CASE("published constants resolve at step 1") {
    PipelineConfig config;
    config.non_planar = NonPlanarPolicy::Fallback;
    for (const Graph& g : {petersen_graph(), complete_graph(6), grid_graph(3, 3)}) {
        VertexSet r(g.vertices());
        for (int k = 1; k <= 3; ++k) {
            PipelineResult res = pipeline_solve(g, std::nullopt, r, k, config);
            CHECK(res.step1 == 1);
            CHECK(res.step2 + res.step3 + res.step4 + res.fallback == 0);
            CHECK(res.answer == is_yes_pac(g, r, k));
        }
    }
    Constants p = Constants::published(1);
    CHECK(p.r == 100);
    CHECK(p.y == 16);
    CHECK(p.q == 432);
    CHECK(p.b == 100);
    CHECK(wall_vertex_count(p.q) > p.q * p.q);
}

TEST_CASE("pipeline rejects non-planar input when asked") {
    PipelineConfig config;
    config.constants = Constants::reduced(2);
    Graph k5 = complete_graph(5);
    CHECK(kind_of([&] { pipeline_solve(k5, std::nullopt, VertexSet(k5.vertices()), 2, config); }) ==
          ErrorKind::NotPlanar);
    config.non_planar = NonPlanarPolicy::Fallback;
    CHECK(pipeline_solve(k5, std::nullopt, VertexSet(k5.vertices()), 2, config).answer);
}

TEST_CASE("constant overrides") {
    Constants c = Constants::published(2).with_overrides("r=5,y=3,q=9,b=2");
    CHECK(c.r == 5);
    CHECK(c.y == 3);
    CHECK(c.q == 9);
    CHECK(c.b == 2);
    CHECK(c.density == Constants::published(2).density);
    CHECK(kind_of([] { Constants::published(1).with_overrides("nope=1"); }) == ErrorKind::Parameter);
}
