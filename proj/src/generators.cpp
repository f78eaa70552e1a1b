#include "cyc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "cyc/dense.hpp"

namespace cyc {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) fail(ErrorKind::Parameter, msg);
}

PlaneGraph plane_of(Graph g, Coordinates coords) {
    PlaneGraph out{std::move(g), std::move(coords), {}};
    out.embedding = embedding_from_coordinates(out.graph, out.coords);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> non_edges(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a : g.vertices())
        for (Vertex b : g.vertices())
            if (a < b && !g.adjacent(a, b)) out.emplace_back(a, b);
    return out;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
    std::shuffle(label.begin(), label.end(), rng);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(pick(rng))]);
    }
    return g;
}

// Outer face walk of a plane graph as a cycle, if it is one.
std::optional<Cycle> perimeter(const Graph& g, const Embedding& emb) {
    FaceSet faces = compute_faces(g, emb);
    if (faces.size() == 0) return std::nullopt;
    Cycle c{faces.face_vertices(g, emb.outer_face)};
    std::vector<Vertex> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || c.vertices.size() < 3) return std::nullopt;
    return c;
}

Graph prune_low_degree(Graph g) {
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v : g.vertices())
            if (g.degree(v) <= 1) {
                g = g.without_vertex(v);
                changed = true;
                break;
            }
    }
    return g;
}

// Canonical code: the largest upper-triangle adjacency string over the
// orderings that respect the stable colour refinement.
std::uint64_t canonical_code(const DenseGraph& d, std::vector<int>* order_out) {
    const int n = d.n;
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = d.degree(v);
    for (int classes = -1;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<std::size_t>(v)]};
            std::vector<int> nb;
            for (int w : d.adj[static_cast<std::size_t>(v)]) nb.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        std::vector<std::vector<int>> keys;
        for (const auto& p : sig) keys.push_back(p.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(keys.begin(), keys.end(), sig[static_cast<std::size_t>(v)].first) - keys.begin());
        if (static_cast<int>(keys.size()) == classes) break;
        classes = static_cast<int>(keys.size());
    }
    std::vector<int> slot_color;
    for (int v = 0; v < n; ++v) slot_color.push_back(color[static_cast<std::size_t>(v)]);
    std::sort(slot_color.begin(), slot_color.end());

    std::uint64_t best = 0;
    bool have = false;
    std::vector<int> order(static_cast<std::size_t>(n)), best_order;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t code) {
        if (pos == n) {
            if (!have || code > best) {
                best = code;
                best_order = order;
                have = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || color[static_cast<std::size_t>(v)] != slot_color[static_cast<std::size_t>(pos)]) continue;
            std::uint64_t next = code;
            for (int i = 0; i < pos; ++i) next = (next << 1) | (d.has_edge(order[static_cast<std::size_t>(i)], v) ? 1u : 0u);
            used[static_cast<std::size_t>(v)] = true;
            order[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, next);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(0, 0);
    if (order_out) *order_out = best_order;
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int bits = n * (n - 1) / 2;
    int b = bits - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --b)
            if ((code >> b) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

PlaneGraph grid_plane(int a, int b) {
    require(a >= 1 && b >= 1, "grid needs a, b >= 1");
    Graph g(a * b);
    Coordinates c;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            int v = i * b + j;
            c[v] = {static_cast<double>(j), static_cast<double>(i)};
            if (j + 1 < b) g.add_edge(v, v + 1);
            if (i + 1 < a) g.add_edge(v, v + b);
        }
    return plane_of(std::move(g), std::move(c));
}

Graph grid_graph(int a, int b) { return grid_plane(a, b).graph; }

PlaneGraph cycle_plane(int n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g(n);
    Coordinates c;
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        double t = 2 * std::numbers::pi * i / n;
        c[i] = {std::cos(t), std::sin(t)};
    }
    return plane_of(std::move(g), std::move(c));
}

Graph cycle_graph(int n) { return cycle_plane(n).graph; }

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

PlaneGraph prism_plane(int n) {
    require(n >= 3, "prism needs n >= 3");
    Graph g(2 * n);
    Coordinates c;
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
        double t = 2 * std::numbers::pi * i / n;
        c[i] = {std::cos(t), std::sin(t)};
        c[n + i] = {2 * std::cos(t), 2 * std::sin(t)};
    }
    return plane_of(std::move(g), std::move(c));
}

Graph prism_graph(int n) { return prism_plane(n).graph; }

PlaneGraph star_plane(int n) {
    require(n >= 2, "star needs n >= 2");
    Graph g(n);
    Coordinates c;
    c[0] = {0, 0};
    for (int i = 1; i < n; ++i) {
        g.add_edge(0, i);
        double t = 2 * std::numbers::pi * i / (n - 1);
        c[i] = {std::cos(t), std::sin(t)};
    }
    return plane_of(std::move(g), std::move(c));
}

Graph star_graph(int n) { return star_plane(n).graph; }

Graph random_connected(int n, int m, std::uint64_t seed) {
    require(n >= 1, "random_connected needs n >= 1");
    const long max_m = static_cast<long>(n) * (n - 1) / 2;
    require(m >= n - 1 && m <= max_m, "random_connected needs n-1 <= m <= n(n-1)/2");
    std::mt19937_64 rng(seed);
    Graph g = random_tree(n, rng);
    auto extra = non_edges(g);
    std::shuffle(extra.begin(), extra.end(), rng);
    for (int i = 0; i < m - (n - 1); ++i) g.add_edge(extra[static_cast<std::size_t>(i)].first, extra[static_cast<std::size_t>(i)].second);
    return g;
}

Graph random_k_connected(int n, int k, std::uint64_t seed) {
    require(k >= 1 && n >= k + 1, "random_k_connected needs 1 <= k <= n-1");
    std::mt19937_64 rng(seed);
    Graph g = random_tree(n, rng);
    auto extra = non_edges(g);
    std::shuffle(extra.begin(), extra.end(), rng);
    std::size_t next = 0;
    auto min_degree = [&]() {
        int best = n;
        for (Vertex v : g.vertices()) best = std::min(best, g.degree(v));
        return best;
    };
    while (n < 2 || min_degree() < k || vertex_connectivity(g) < k) {
        g.add_edge(extra[next].first, extra[next].second);
        ++next;
    }
    return g;
}

PlantedClique planted_clique(int n, int k, int permille, std::uint64_t seed) {
    require(k >= 1 && k <= n, "planted clique needs 1 <= k <= n");
    require(permille >= 0 && permille <= 1000, "edge probability must be in 0..1000 permille");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng);
    VertexSet clique(std::vector<Vertex>(all.begin(), all.begin() + k));
    Graph g(n);
    std::uniform_int_distribution<int> coin(0, 999);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool in = clique.contains(a) && clique.contains(b);
            if (coin(rng) < permille || in) g.add_edge(a, b);
        }
    return {std::move(g), std::move(clique)};
}

RingOfRings ring_of_rings(int r, int len) {
    require(r >= 1 && len >= 3, "ring_of_rings needs r >= 1 and len >= 3");
    auto id = [&](int ring, int j) { return 1 + (ring - 1) * len + j; };
    Graph g(1 + r * len);
    Coordinates c;
    c[0] = {0, 0};
    RailedAnnulusCertificate cert;
    for (int ring = 1; ring <= r; ++ring) {
        Cycle cyc;
        for (int j = 0; j < len; ++j) {
            double t = 2 * std::numbers::pi * j / len;
            c[id(ring, j)] = {ring * std::cos(t), ring * std::sin(t)};
            g.add_edge(id(ring, j), id(ring, (j + 1) % len));
            if (ring == 1) g.add_edge(0, id(1, j));
            if (ring < r) g.add_edge(id(ring, j), id(ring + 1, j));
            cyc.vertices.push_back(id(ring, j));
        }
        cert.concentric.cycles.push_back(std::move(cyc));
    }
    for (int j = 0; j < len; ++j) {
        std::vector<Vertex> rail;
        for (int ring = 1; ring <= r; ++ring) rail.push_back(id(ring, j));
        cert.rails.push_back(std::move(rail));
    }
    RingOfRings out{plane_of(std::move(g), std::move(c)), std::move(cert)};
    out.certificate.concentric.outer_face = out.plane.embedding.outer_face;
    ValidationReport report = verify_railed_annulus(out.plane.graph, out.plane.embedding, out.certificate);
    if (!report.ok) fail(ErrorKind::Embedding, "ring_of_rings certificate: " + report.violations.front());
    return out;
}

Wall wall(int h, const std::map<Edge, int>& subdivisions, int rails) {
    require(h >= 1, "wall needs h >= 1");
    const int width = 2 * h + 2, height = h + 1;
    auto cell = [&](int x, int y) { return (y - 1) * width + (x - 1); };
    Graph grid(width * height);
    for (int y = 1; y <= height; ++y)
        for (int x = 1; x <= width; ++x) {
            if (x < width) grid.add_edge(cell(x, y), cell(x + 1, y));
            if (y < height && (x + y) % 2 == 0) grid.add_edge(cell(x, y), cell(x, y + 1));
        }
    grid = prune_low_degree(std::move(grid));
    // Row-major renumbering of the survivors.
    std::map<Vertex, Vertex> rename;
    Wall out;
    for (Vertex v : grid.vertices()) {
        Vertex nv = static_cast<Vertex>(rename.size());
        rename[v] = nv;
        out.grid_position[nv] = {v % width + 1, v / width + 1};
    }
    Graph g(static_cast<int>(rename.size()));
    Coordinates coords;
    for (const auto& [nv, pos] : out.grid_position) coords[nv] = {static_cast<double>(pos.first), static_cast<double>(pos.second)};
    std::vector<Edge> wall_edges;
    for (const Edge& e : grid.edges()) wall_edges.emplace_back(rename[e.u], rename[e.v]);
    std::sort(wall_edges.begin(), wall_edges.end());
    for (const auto& [e, count] : subdivisions) {
        require(std::binary_search(wall_edges.begin(), wall_edges.end(), e), "subdivided edge is not a wall edge");
        require(count >= 0, "subdivision counts must be non-negative");
    }
    Vertex next = g.num_vertices();
    for (const Edge& e : wall_edges) {
        auto it = subdivisions.find(e);
        int count = it == subdivisions.end() ? 0 : it->second;
        Vertex prev = e.u;
        auto a = coords[e.u], b = coords[e.v];
        for (int i = 1; i <= count; ++i) {
            g.add_vertex(next);
            double t = static_cast<double>(i) / (count + 1);
            coords[next] = {a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)};
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, e.v);
    }
    out.plane = plane_of(std::move(g), std::move(coords));

    // Layers: peel the perimeter, prune, repeat.
    Graph cur = out.plane.graph;
    Embedding cur_emb = out.plane.embedding;
    for (int layer = 1; layer <= (h + 1) / 2; ++layer) {
        auto p = perimeter(cur, cur_emb);
        if (!p) fail(ErrorKind::Embedding, "wall layer " + std::to_string(layer) + " is not a cycle");
        out.layers.push_back(*p);
        Graph next_graph = cur;
        for (Vertex v : p->vertices) next_graph = next_graph.without_vertex(v);
        next_graph = prune_low_degree(std::move(next_graph));
        if (next_graph.num_vertices() == 0) break;
        Coordinates sub;
        for (Vertex v : next_graph.vertices()) sub[v] = out.plane.coords.at(v);
        cur = std::move(next_graph);
        cur_emb = embedding_from_coordinates(cur, sub);
    }
    auto& cc = out.certificate.concentric;
    cc.cycles.assign(out.layers.rbegin(), out.layers.rend());
    cc.outer_face = out.plane.embedding.outer_face;
    if (!cc.cycles.empty()) {
        ValidationReport report = verify_concentric(out.plane.graph, out.plane.embedding, cc);
        if (!report.ok) fail(ErrorKind::Embedding, "wall layers: " + report.violations.front());
        if (cc.size() >= 2 && rails > 0) {
            auto found = find_rails(out.plane.graph, out.plane.embedding, cc, rails);
            if (found) out.certificate.rails = std::move(*found);
        }
    }
    return out;
}

CliqueReductionOutput clique_reduction(const Graph& g, int k) {
    if (k % 2 == 0) fail(ErrorKind::Parity, "clique reduction needs odd k, got " + std::to_string(k));
    require(k >= 3, "clique reduction needs k >= 3");
    require(g.is_dense(), "clique reduction needs vertex ids 0..n-1");
    Graph simple = g.simplified();
    const int n = simple.num_vertices();
    const int s = (k - 1) / 2;
    CliqueReductionOutput out;
    out.s = s;
    out.k_prime = k * (k - 1) / 2 + 1;
    std::vector<Edge> edges;
    for (const Edge& e : simple.edges())
        if (!e.is_loop()) edges.push_back(e);
    const Vertex w = n * s;
    Graph h(n * s + 1 + static_cast<int>(edges.size()));
    for (int x = 0; x < n; ++x)
        for (int i = 1; i <= s; ++i) out.roles[x * s + (i - 1)] = {Role::CliquePart, x, -1, i};
    out.roles[w] = {Role::Hub, -1, -1, 0};
    for (int a = 0; a < n * s; ++a) {
        for (int b = a + 1; b < n * s; ++b) h.add_edge(a, b);
        h.add_edge(a, w);
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
        const Vertex u = w + 1 + static_cast<Vertex>(j);
        out.roles[u] = {Role::EdgeVertex, edges[j].u, edges[j].v, 0};
        for (int i = 0; i < s; ++i) {
            h.add_edge(u, edges[j].u * s + i);
            h.add_edge(u, edges[j].v * s + i);
        }
    }
    out.graph = std::move(h);
    return out;
}

VertexSet clique_witness(const CliqueReductionOutput& out, const VertexSet& clique) {
    VertexSet z;
    for (const auto& [v, role] : out.roles) {
        if (role.role == Role::Hub) z.insert(v);
        if (role.role == Role::EdgeVertex && clique.contains(role.x) && clique.contains(role.y)) z.insert(v);
    }
    return z;
}

bool is_split_partition(const Graph& g, const VertexSet& clique, const VertexSet& independent) {
    if (!clique.intersected(independent).empty()) return false;
    if (clique.united(independent) != VertexSet(g.vertices())) return false;
    for (Vertex a : clique)
        for (Vertex b : clique)
            if (a < b && !g.adjacent(a, b)) return false;
    for (const Edge& e : g.edges())
        if (independent.contains(e.u) && independent.contains(e.v)) return false;
    return true;
}

std::optional<std::pair<VertexSet, VertexSet>> split_partition(const Graph& g) {
    // Degree-sequence characterisation on the simple graph.
    Graph s = g.simplified();
    std::vector<std::pair<int, Vertex>> deg;
    for (Vertex v : s.vertices()) deg.emplace_back(s.degree(v), v);
    std::sort(deg.begin(), deg.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::size_t m = 0;
    for (std::size_t i = 0; i < deg.size(); ++i)
        if (deg[i].first >= static_cast<int>(i)) m = i + 1;
    std::vector<Vertex> clique, indep;
    for (std::size_t i = 0; i < deg.size(); ++i) (i < m ? clique : indep).push_back(deg[i].second);
    VertexSet c(clique), ind(indep);
    if (!is_split_partition(s, c, ind)) return std::nullopt;
    return std::make_pair(c, ind);
}

bool is_cubic(const Graph& g) {
    for (Vertex v : g.vertices())
        if (g.degree(v) != 3) return false;
    return true;
}

CrossCompositionOutput cross_composition(const std::vector<std::pair<Graph, Edge>>& instances,
                                         bool require_cubic_planar) {
    require(!instances.empty(), "cross composition needs at least one instance");
    const int n = instances.front().first.num_vertices();
    for (const auto& [g, e] : instances) {
        if (g.num_vertices() != n)
            fail(ErrorKind::SizeMismatch, "instances have " + std::to_string(n) + " and " +
                                               std::to_string(g.num_vertices()) + " vertices");
        require(g.is_dense(), "instances need vertex ids 0..n-1");
        if (e.is_loop() || !g.adjacent(e.u, e.v))
            fail(ErrorKind::EdgeNotFound, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in its instance");
    }
    const int t = static_cast<int>(instances.size());
    CrossCompositionOutput out;
    out.k = n + 2;
    Graph h(t * (n + 2));
    for (int i = 0; i < t; ++i) {
        const auto& [g, e] = instances[static_cast<std::size_t>(i)];
        const Vertex off = i * (n + 2), u = off + n, v = off + n + 1;
        bool removed = false;
        for (const Edge& f : g.edges()) {
            if (f == e && !removed) {
                removed = true;
                continue;
            }
            h.add_edge(off + f.u, off + f.v);
        }
        h.add_edge(off + e.u, u);
        h.add_edge(u, v);
        h.add_edge(v, off + e.v);
        out.link_vertices.emplace_back(u, v);
    }
    for (int i = 0; i < t; ++i) h.add_edge(out.link_vertices[static_cast<std::size_t>(i)].second,
                                           out.link_vertices[static_cast<std::size_t>((i + 1) % t)].first);
    if (require_cubic_planar && (!is_cubic(h) || !planar_embedding(h)))
        fail(ErrorKind::NotCubicPlanar, "composed graph is not cubic planar");
    out.graph = std::move(h);
    return out;
}

Graph canonical_form(const Graph& g) {
    require(g.is_dense() && g.is_simple(), "canonical form needs a simple graph with ids 0..n-1");
    require(g.num_vertices() <= 11, "canonical form handles at most 11 vertices");
    DenseGraph d(g);
    return graph_from_code(d.n, canonical_code(d, nullptr));
}

std::vector<Graph> connected_graphs(int n) {
    require(n >= 1 && n <= 8, "connected graph enumeration handles 1 <= n <= 8");
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending level n-1 by one vertex reaches all of level n.
    std::set<std::uint64_t> level{0};
    for (int size = 2; size <= n; ++size) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            Graph base = graph_from_code(size - 1, code);
            for (std::uint32_t sub = 1; sub < (1u << (size - 1)); ++sub) {
                Graph g = base;
                g.add_vertex(size - 1);
                for (int x = 0; x < size - 1; ++x)
                    if (sub >> x & 1) g.add_edge(x, size - 1);
                next.insert(canonical_code(DenseGraph(g), nullptr));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
    return out;
}

std::vector<std::string> catalog_names() {
    return {"petersen", "grid",     "cycle",           "complete",           "prism",
            "star",     "random_connected", "random_k_connected", "ring_of_rings", "wall"};
}

CatalogGraph catalog(const std::string& raw, const std::vector<std::int64_t>& params, std::uint64_t seed) {
    static const std::map<std::string, std::string> alias = {
        {"completeGraph", "complete"},        {"randomConnected", "random_connected"},
        {"randomKConnected", "random_k_connected"}, {"ringOfRings", "ring_of_rings"},
    };
    auto a = alias.find(raw);
    const std::string name = a == alias.end() ? raw : a->second;
    auto arity = [&](std::size_t want) {
        require(params.size() == want, name + " takes " + std::to_string(want) + " parameter(s)");
    };
    auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
    CatalogGraph out;
    auto from_plane = [&](PlaneGraph pg) {
        out.graph = std::move(pg.graph);
        out.embedding = std::move(pg.embedding);
    };
    if (name == "petersen") {
        arity(0);
        out.graph = petersen_graph();
    } else if (name == "grid") {
        arity(2);
        from_plane(grid_plane(p(0), p(1)));
    } else if (name == "cycle") {
        arity(1);
        from_plane(cycle_plane(p(0)));
    } else if (name == "complete") {
        arity(1);
        out.graph = complete_graph(p(0));
    } else if (name == "prism") {
        arity(1);
        from_plane(prism_plane(p(0)));
    } else if (name == "star") {
        arity(1);
        from_plane(star_plane(p(0)));
    } else if (name == "random_connected") {
        arity(2);
        out.graph = random_connected(p(0), p(1), seed);
    } else if (name == "random_k_connected") {
        arity(2);
        out.graph = random_k_connected(p(0), p(1), seed);
    } else if (name == "ring_of_rings") {
        arity(2);
        RingOfRings rr = ring_of_rings(p(0), p(1));
        from_plane(std::move(rr.plane));
        out.certificate = std::move(rr.certificate);
    } else if (name == "wall") {
        arity(1);
        Wall w = wall(p(0));
        from_plane(std::move(w.plane));
        if (!w.certificate.concentric.cycles.empty()) out.certificate = std::move(w.certificate);
    } else {
        fail(ErrorKind::UnknownName, "unknown catalog graph '" + raw + "'");
    }
    if (!out.embedding && out.graph.num_edges() > 0) out.embedding = planar_embedding(out.graph);
    out.description = name;
    for (auto v : params) out.description += " " + std::to_string(v);
    return out;
}

}  // namespace cyc
