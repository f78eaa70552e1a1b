#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "cyc/planar.hpp"
#include "json.hpp"

namespace cyc {

namespace {

int edge_id(const Graph& g, Vertex a, Vertex b) {
    const auto& es = g.edges();
    Edge e(a, b);
    auto it = std::lower_bound(es.begin(), es.end(), e);
    if (it == es.end() || *it != e) return -1;
    return static_cast<int>(it - es.begin());
}

// Dart leaving `tail` along edge `e`.
int dart_from(const Graph& g, int e, Vertex tail) {
    return dart_of(e, g.edges()[static_cast<std::size_t>(e)].u != tail);
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Vertex dart_tail(const Graph& g, int dart) {
    const Edge& e = g.edges()[static_cast<std::size_t>(dart_edge(dart))];
    return (dart & 1) ? e.v : e.u;
}

Vertex dart_head(const Graph& g, int dart) {
    const Edge& e = g.edges()[static_cast<std::size_t>(dart_edge(dart))];
    return (dart & 1) ? e.u : e.v;
}

std::vector<Vertex> FaceSet::face_vertices(const Graph& g, int f) const {
    std::vector<Vertex> out;
    for (int d : faces[static_cast<std::size_t>(f)]) out.push_back(dart_tail(g, d));
    return out;
}

FaceSet compute_faces(const Graph& g, const Embedding& emb) {
    const int m = g.num_edges();
    std::vector<int> pos(static_cast<std::size_t>(2 * m), -1);
    for (const auto& [v, rot] : emb.rotation) {
        if (!g.has_vertex(v)) fail(ErrorKind::Embedding, "rotation for unknown vertex " + std::to_string(v));
        if (static_cast<int>(rot.size()) != g.degree(v))
            fail(ErrorKind::Embedding, "rotation of vertex " + std::to_string(v) + " does not match its degree");
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int e = rot[i];
            if (e < 0 || e >= m) fail(ErrorKind::Embedding, "edge id " + std::to_string(e) + " out of range");
            const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
            if (ed.is_loop()) fail(ErrorKind::Embedding, "self-loops cannot be embedded");
            if (ed.u != v && ed.v != v)
                fail(ErrorKind::Embedding, "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
            int d = dart_from(g, e, v);
            if (pos[static_cast<std::size_t>(d)] != -1)
                fail(ErrorKind::Embedding, "edge " + std::to_string(e) + " repeated at vertex " + std::to_string(v));
            pos[static_cast<std::size_t>(d)] = static_cast<int>(i);
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (pos[static_cast<std::size_t>(d)] == -1)
            fail(ErrorKind::Embedding, "edge " + std::to_string(d / 2) + " missing from a rotation");

    FaceSet out;
    out.face_of_dart.assign(static_cast<std::size_t>(2 * m), -1);
    for (int start = 0; start < 2 * m; ++start) {
        if (out.face_of_dart[static_cast<std::size_t>(start)] != -1) continue;
        const int f = out.size();
        std::vector<int> walk;
        int d = start;
        do {
            if (out.face_of_dart[static_cast<std::size_t>(d)] != -1)
                fail(ErrorKind::Embedding, "face traversal does not close");
            out.face_of_dart[static_cast<std::size_t>(d)] = f;
            walk.push_back(d);
            Vertex h = dart_head(g, d);
            const auto& rot = emb.rotation.at(h);
            int p = pos[static_cast<std::size_t>(d ^ 1)];
            int next = rot[static_cast<std::size_t>((p + 1) % static_cast<int>(rot.size()))];
            d = dart_from(g, next, h);
        } while (d != start);
        out.faces.push_back(std::move(walk));
    }

    // Euler's formula per component.
    const auto& vs = g.vertices();
    auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    Dsu dsu(g.num_vertices());
    for (const Edge& e : g.edges()) dsu.unite(idx(e.u), idx(e.v));
    std::map<int, long> euler;
    for (Vertex v : vs)
        if (g.degree(v) > 0) euler[dsu.find(idx(v))] += 1;
    for (const Edge& e : g.edges()) euler[dsu.find(idx(e.u))] -= 1;
    for (const auto& walk : out.faces) euler[dsu.find(idx(dart_tail(g, walk.front())))] += 1;
    for (const auto& [c, chi] : euler)
        if (chi != 2)
            fail(ErrorKind::Embedding, "Euler characteristic " + std::to_string(chi) + " on a component; rotation is not planar");
    if (out.size() > 0 && (emb.outer_face < 0 || emb.outer_face >= out.size()))
        fail(ErrorKind::Embedding, "outer face " + std::to_string(emb.outer_face) + " out of range");
    return out;
}

Embedding embedding_from_coordinates(const Graph& g, const std::map<Vertex, std::pair<double, double>>& coords) {
    Embedding emb;
    for (Vertex v : g.vertices()) {
        auto pv = coords.at(v);
        std::vector<std::pair<double, int>> around;
        for (int e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
            if (ed.u != v && ed.v != v) continue;
            auto pw = coords.at(ed.other(v));
            around.emplace_back(std::atan2(pw.second - pv.second, pw.first - pv.first), e);
        }
        std::stable_sort(around.begin(), around.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& rot = emb.rotation[v];
        for (const auto& [angle, e] : around) rot.push_back(e);
    }
    FaceSet faces = compute_faces(g, emb);
    double best = 0;
    for (int f = 0; f < faces.size(); ++f) {
        double area = 0;
        for (int d : faces.faces[static_cast<std::size_t>(f)]) {
            auto a = coords.at(dart_tail(g, d));
            auto b = coords.at(dart_head(g, d));
            area += a.first * b.second - b.first * a.second;
        }
        if (f == 0 || area > best) {
            best = area;
            emb.outer_face = f;
        }
    }
    return emb;
}

std::optional<Embedding> planar_embedding(const Graph& g) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
    using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
    const auto& vs = g.vertices();
    auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    BGraph bg(static_cast<std::size_t>(g.num_vertices()));
    std::vector<int> first_copy;
    std::vector<std::vector<int>> copies;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
        if (ed.is_loop()) fail(ErrorKind::Embedding, "self-loops cannot be embedded");
        if (e > 0 && g.edges()[static_cast<std::size_t>(e - 1)] == ed) {
            copies.back().push_back(e);
            continue;
        }
        auto [be, ok] = boost::add_edge(static_cast<std::size_t>(idx(ed.u)), static_cast<std::size_t>(idx(ed.v)), bg);
        (void)ok;
        boost::put(boost::edge_index, bg, be, static_cast<int>(first_copy.size()));
        first_copy.push_back(e);
        copies.push_back({});
    }
    std::vector<std::vector<BEdge>> rot(static_cast<std::size_t>(g.num_vertices()));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
            rot.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;
    Embedding emb;
    for (int i = 0; i < g.num_vertices(); ++i) {
        Vertex v = vs[static_cast<std::size_t>(i)];
        auto& out = emb.rotation[v];
        for (const BEdge& be : rot[static_cast<std::size_t>(i)]) {
            int k = boost::get(boost::edge_index, bg, be);
            int e = first_copy[static_cast<std::size_t>(k)];
            const auto& extra = copies[static_cast<std::size_t>(k)];
            // Parallel copies sit in reverse order at the two ends, so they
            // bound digon faces.
            if (g.edges()[static_cast<std::size_t>(e)].u == v) {
                out.insert(out.end(), extra.rbegin(), extra.rend());
                out.push_back(e);
            } else {
                out.push_back(e);
                out.insert(out.end(), extra.begin(), extra.end());
            }
        }
    }
    FaceSet faces = compute_faces(g, emb);
    for (int f = 1; f < faces.size(); ++f)
        if (faces.faces[static_cast<std::size_t>(f)].size() > faces.faces[static_cast<std::size_t>(emb.outer_face)].size())
            emb.outer_face = f;
    return emb;
}

Embedding restrict_embedding(const Graph& g, const Embedding& emb, const Graph& sub) {
    // k-th copy of an edge in g maps to the k-th copy in sub, if present.
    std::vector<int> map(static_cast<std::size_t>(g.num_edges()), -1);
    const auto& ge = g.edges();
    const auto& se = sub.edges();
    std::size_t j = 0;
    for (std::size_t i = 0; i < ge.size(); ++i) {
        while (j < se.size() && se[j] < ge[i]) ++j;
        if (j < se.size() && se[j] == ge[i]) map[i] = static_cast<int>(j++);
    }
    Embedding out;
    for (Vertex v : sub.vertices()) {
        auto& rot = out.rotation[v];
        auto it = emb.rotation.find(v);
        if (it == emb.rotation.end()) continue;
        for (int e : it->second)
            if (map[static_cast<std::size_t>(e)] >= 0) rot.push_back(map[static_cast<std::size_t>(e)]);
    }
    if (sub.num_edges() == 0) return out;
    FaceSet old_faces = compute_faces(g, emb);
    FaceSet new_faces = compute_faces(sub, out);
    for (int d : old_faces.faces[static_cast<std::size_t>(emb.outer_face)]) {
        int ne = map[static_cast<std::size_t>(dart_edge(d))];
        if (ne < 0) continue;
        out.outer_face = new_faces.face_of_dart[static_cast<std::size_t>(dart_of(ne, d & 1))];
        return out;
    }
    for (int f = 1; f < new_faces.size(); ++f)
        if (new_faces.faces[static_cast<std::size_t>(f)].size() > new_faces.faces[static_cast<std::size_t>(out.outer_face)].size())
            out.outer_face = f;
    return out;
}

Embedding parse_embedding(std::istream& in, const std::vector<int>* file_edge_ids) {
    Embedding emb;
    std::string line;
    long line_no = 0;
    auto bad = [&](const std::string& msg) {
        fail(ErrorKind::Format, "line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "rot") {
            std::string head;
            if (!(ls >> head) || head.empty() || head.back() != ':') bad("expected 'rot <v>:'");
            head.pop_back();
            long v = 0;
            try {
                v = std::stol(head);
            } catch (const std::exception&) {
                bad("bad vertex id '" + head + "'");
            }
            if (v < 0) bad("negative vertex id");
            if (emb.rotation.count(static_cast<Vertex>(v))) bad("duplicate rotation");
            auto& rot = emb.rotation[static_cast<Vertex>(v)];
            long e;
            while (ls >> e) {
                if (e < 0) bad("negative edge id");
                if (file_edge_ids) {
                    if (e >= static_cast<long>(file_edge_ids->size())) bad("edge id out of range");
                    e = (*file_edge_ids)[static_cast<std::size_t>(e)];
                }
                rot.push_back(static_cast<int>(e));
            }
            if (!ls.eof()) bad("malformed rotation");
        } else if (tag == "outer") {
            long f = -1;
            if (!(ls >> f) || f < 0) bad("malformed outer face");
            emb.outer_face = static_cast<int>(f);
        } else {
            bad("unknown line tag '" + tag + "'");
        }
    }
    return emb;
}

Embedding read_embedding_file(const std::string& path, const std::vector<int>* file_edge_ids) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open " + path);
    return parse_embedding(in, file_edge_ids);
}

void write_embedding(std::ostream& out, const Embedding& emb) {
    for (const auto& [v, rot] : emb.rotation) {
        out << "rot " << v << ':';
        for (int e : rot) out << ' ' << e;
        out << '\n';
    }
    out << "outer " << emb.outer_face << '\n';
}

void write_embedding_file(const std::string& path, const Embedding& emb) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write " + path);
    write_embedding(out, emb);
}

std::optional<DiskRegion> disk_region(const Graph& g, const Embedding& emb, const FaceSet& faces,
                                      const Cycle& c, int outer_face) {
    if (c.vertices.size() < 3 || !is_valid_cycle(g, c)) return std::nullopt;
    if (outer_face < 0 || outer_face >= faces.size()) return std::nullopt;
    std::vector<bool> blocked(static_cast<std::size_t>(g.num_edges()), false);
    const std::size_t len = c.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
        int e = edge_id(g, c.vertices[i], c.vertices[(i + 1) % len]);
        if (e < 0) return std::nullopt;
        blocked[static_cast<std::size_t>(e)] = true;
    }
    std::vector<bool> reached(static_cast<std::size_t>(faces.size()), false);
    std::vector<int> stack{outer_face};
    reached[static_cast<std::size_t>(outer_face)] = true;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int d : faces.faces[static_cast<std::size_t>(f)]) {
            if (blocked[static_cast<std::size_t>(dart_edge(d))]) continue;
            int h = faces.face_of_dart[static_cast<std::size_t>(d ^ 1)];
            if (!reached[static_cast<std::size_t>(h)]) {
                reached[static_cast<std::size_t>(h)] = true;
                stack.push_back(h);
            }
        }
    }
    DiskRegion out;
    out.interior_face.assign(static_cast<std::size_t>(faces.size()), false);
    bool any = false;
    for (int f = 0; f < faces.size(); ++f)
        if (!reached[static_cast<std::size_t>(f)]) out.interior_face[static_cast<std::size_t>(f)] = any = true;
    if (!any) return std::nullopt;
    VertexSet on_cycle(c.vertices);
    std::vector<Vertex> inside;
    for (Vertex v : g.vertices()) {
        if (on_cycle.contains(v) || g.degree(v) == 0) continue;
        bool all = true;
        for (int e : emb.rotation.at(v))
            if (!out.interior_face[static_cast<std::size_t>(faces.face_of_dart[static_cast<std::size_t>(dart_from(g, e, v))])]) {
                all = false;
                break;
            }
        if (all) inside.push_back(v);
    }
    out.inside = VertexSet(std::move(inside));
    out.closed = out.inside.united(on_cycle);
    for (int e = 0; e < g.num_edges(); ++e) {
        bool in0 = out.interior_face[static_cast<std::size_t>(faces.face_of_dart[static_cast<std::size_t>(2 * e)])];
        bool in1 = out.interior_face[static_cast<std::size_t>(faces.face_of_dart[static_cast<std::size_t>(2 * e + 1)])];
        if (blocked[static_cast<std::size_t>(e)] || (in0 && in1)) out.edges.push_back(e);
    }
    return out;
}

Graph disk_subgraph(const Graph& g, const DiskRegion& region) {
    Graph out;
    for (Vertex v : region.closed) out.add_vertex(v);
    for (int e : region.edges) {
        const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
        out.add_edge(ed.u, ed.v);
    }
    return out;
}

VertexSet ConcentricCertificate::closed(int i) const {
    const auto& c = cycles.at(static_cast<std::size_t>(i - 1));
    VertexSet out(c.vertices);
    if (static_cast<std::size_t>(i - 1) < inside.size()) out = out.united(inside[static_cast<std::size_t>(i - 1)]);
    return out;
}

VertexSet ConcentricCertificate::annulus(int i, int j) const {
    VertexSet out = closed(j);
    if (static_cast<std::size_t>(i - 1) < inside.size()) out = out.minus(inside[static_cast<std::size_t>(i - 1)]);
    return out;
}

namespace {

bool verify_concentric_into(const Graph& g, const Embedding& emb, ConcentricCertificate& cert,
                            ValidationReport& report, std::vector<DiskRegion>* regions_out) {
    auto violation = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };
    FaceSet faces;
    try {
        faces = compute_faces(g, emb);
    } catch (const Error& e) {
        violation(std::string("embedding: ") + e.what());
        return false;
    }
    if (cert.cycles.empty()) {
        violation("no cycles");
        return false;
    }
    if (cert.outer_face < 0 || cert.outer_face >= faces.size()) {
        violation("outer face " + std::to_string(cert.outer_face) + " out of range");
        return false;
    }
    std::vector<DiskRegion> regions;
    for (int i = 0; i < cert.size(); ++i) {
        auto region = disk_region(g, emb, faces, cert.cycles[static_cast<std::size_t>(i)], cert.outer_face);
        if (!region) {
            violation("C_" + std::to_string(i + 1) + " is not a cycle of the graph");
            return false;
        }
        regions.push_back(std::move(*region));
    }
    std::vector<VertexSet> on(regions.size());
    for (int i = 0; i < cert.size(); ++i) on[static_cast<std::size_t>(i)] = VertexSet(cert.cycles[static_cast<std::size_t>(i)].vertices);
    for (int i = 0; i < cert.size(); ++i)
        for (int j = i + 1; j < cert.size(); ++j)
            if (!on[static_cast<std::size_t>(i)].intersected(on[static_cast<std::size_t>(j)]).empty())
                violation("C_" + std::to_string(i + 1) + " and C_" + std::to_string(j + 1) + " share a vertex");
    for (int i = 0; i + 1 < cert.size(); ++i) {
        const auto& inner = regions[static_cast<std::size_t>(i)];
        const auto& outer = regions[static_cast<std::size_t>(i + 1)];
        bool nested = on[static_cast<std::size_t>(i)].is_subset_of(outer.inside);
        for (int f = 0; f < faces.size() && nested; ++f)
            if (inner.interior_face[static_cast<std::size_t>(f)] && !outer.interior_face[static_cast<std::size_t>(f)]) nested = false;
        if (!nested)
            violation("C_" + std::to_string(i + 1) + " is not inside the disk of C_" + std::to_string(i + 2));
    }
    if (!cert.inside.empty()) {
        if (cert.inside.size() != regions.size()) {
            violation("interior list has the wrong length");
        } else {
            for (std::size_t i = 0; i < regions.size(); ++i)
                if (cert.inside[i] != regions[i].inside)
                    violation("recorded interior of C_" + std::to_string(i + 1) + " does not match the embedding");
        }
    }
    if (!report.ok) return false;
    if (cert.inside.empty())
        for (const auto& r : regions) cert.inside.push_back(r.inside);
    if (regions_out) *regions_out = std::move(regions);
    return true;
}

}  // namespace

ValidationReport verify_concentric(const Graph& g, const Embedding& emb, ConcentricCertificate& cert) {
    ValidationReport report;
    verify_concentric_into(g, emb, cert, report, nullptr);
    return report;
}

ValidationReport verify_railed_annulus(const Graph& g, const Embedding& emb, RailedAnnulusCertificate& cert) {
    ValidationReport report;
    std::vector<DiskRegion> regions;
    if (!verify_concentric_into(g, emb, cert.concentric, report, &regions)) return report;
    auto violation = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };
    const auto& cc = cert.concentric;
    const int r = cc.size();
    FaceSet faces = compute_faces(g, emb);
    const VertexSet allowed = cc.annulus(1, r);
    std::vector<bool> disk_edge(static_cast<std::size_t>(g.num_edges()), false);
    for (int e : regions.back().edges) disk_edge[static_cast<std::size_t>(e)] = true;
    const auto& inner = regions.front();
    VertexSet used;
    for (std::size_t w = 0; w < cert.rails.size(); ++w) {
        const auto& rail = cert.rails[w];
        const std::string name = "W_" + std::to_string(w + 1);
        if (rail.empty()) {
            violation(name + " is empty");
            continue;
        }
        VertexSet verts(rail);
        if (verts.size() != rail.size()) violation(name + " repeats a vertex");
        if (!verts.intersected(used).empty()) violation(name + " shares a vertex with an earlier rail");
        used = used.united(verts);
        if (!verts.is_subset_of(allowed)) violation(name + " leaves the annulus A_{1,r}");
        for (std::size_t i = 0; i + 1 < rail.size(); ++i) {
            int e = edge_id(g, rail[i], rail[i + 1]);
            if (e < 0) {
                violation(name + " uses a non-edge " + std::to_string(rail[i]) + "-" + std::to_string(rail[i + 1]));
                continue;
            }
            bool in0 = inner.interior_face[static_cast<std::size_t>(faces.face_of_dart[static_cast<std::size_t>(2 * e)])];
            bool in1 = inner.interior_face[static_cast<std::size_t>(faces.face_of_dart[static_cast<std::size_t>(2 * e + 1)])];
            if (!disk_edge[static_cast<std::size_t>(e)] || (in0 && in1))
                violation(name + " edge " + std::to_string(rail[i]) + "-" + std::to_string(rail[i + 1]) +
                          " leaves the annulus A_{1,r}");
        }
        for (int c = 0; c < r; ++c) {
            const auto& cyc = cc.cycles[static_cast<std::size_t>(c)].vertices;
            std::vector<std::size_t> hits;
            for (std::size_t i = 0; i < rail.size(); ++i)
                if (std::find(cyc.begin(), cyc.end(), rail[i]) != cyc.end()) hits.push_back(i);
            const std::string pair = name + " and C_" + std::to_string(c + 1);
            if (hits.empty()) {
                violation(pair + " do not meet");
                continue;
            }
            bool connected = hits.back() - hits.front() + 1 == hits.size();
            for (std::size_t i = hits.front(); connected && i < hits.back(); ++i) {
                auto a = std::find(cyc.begin(), cyc.end(), rail[i]) - cyc.begin();
                auto b = std::find(cyc.begin(), cyc.end(), rail[i + 1]) - cyc.begin();
                auto len = static_cast<long>(cyc.size());
                if ((a + 1) % len != b && (b + 1) % len != a) connected = false;
            }
            if (!connected) violation(pair + " intersect in more than one subpath");
        }
    }
    return report;
}

bool is_q_dense(const VertexSet& r, const ConcentricCertificate& cert, int q) {
    const int n = cert.size();
    if (q < 1 || q > n) fail(ErrorKind::Parameter, "q must satisfy 1 <= q <= r");
    if (cert.inside.size() != cert.cycles.size())
        fail(ErrorKind::Parameter, "certificate interiors are not filled; verify it first");
    for (int i = 1; i <= n - q + 1; ++i)
        if (cert.annulus(i, i + q - 1).intersected(r).empty()) return false;
    return true;
}

namespace {

using nlohmann::json;

json cycles_json(const ConcentricCertificate& cert) {
    json cycles = json::array();
    for (const auto& c : cert.cycles) cycles.push_back(c.vertices);
    json inside = json::array();
    for (const auto& s : cert.inside) inside.push_back(s.members());
    return json{{"cycles", cycles}, {"inside", inside}, {"outer_face", cert.outer_face}};
}

// `also` names a second accepted kind or is null.
json parse_json(const std::string& text, const char* kind, const char* also = nullptr) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Format, std::string("certificate JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("schema", 0) != 1) fail(ErrorKind::Format, "certificate needs \"schema\": 1");
    const std::string got = j.value("kind", std::string{});
    if (got != kind && !(also && got == also))
        fail(ErrorKind::Format, std::string("certificate kind must be \"") + kind + "\"");
    return j;
}

ConcentricCertificate cycles_from(const json& j) {
    ConcentricCertificate cert;
    try {
        for (const auto& c : j.at("cycles")) cert.cycles.push_back(Cycle{c.get<std::vector<Vertex>>()});
        if (j.contains("inside"))
            for (const auto& s : j.at("inside")) cert.inside.push_back(VertexSet(s.get<std::vector<Vertex>>()));
        cert.outer_face = j.value("outer_face", 0);
    } catch (const json::exception& e) {
        fail(ErrorKind::Format, std::string("certificate JSON: ") + e.what());
    }
    return cert;
}

}  // namespace

std::string concentric_to_json(const ConcentricCertificate& cert) {
    json j = {{"schema", 1}, {"kind", "concentric"}};
    j.update(cycles_json(cert));
    return j.dump();
}

std::string railed_to_json(const RailedAnnulusCertificate& cert) {
    json j = {{"schema", 1}, {"kind", "railed_annulus"}};
    j.update(cycles_json(cert.concentric));
    j["rails"] = cert.rails;
    return j.dump();
}

ConcentricCertificate concentric_from_json(const std::string& text) {
    return cycles_from(parse_json(text, "concentric", "railed_annulus"));
}

RailedAnnulusCertificate railed_from_json(const std::string& text) {
    json j = parse_json(text, "railed_annulus");
    RailedAnnulusCertificate cert;
    cert.concentric = cycles_from(j);
    try {
        cert.rails = j.at("rails").get<std::vector<std::vector<Vertex>>>();
    } catch (const json::exception& e) {
        fail(ErrorKind::Format, std::string("certificate JSON: ") + e.what());
    }
    return cert;
}

}  // namespace cyc
