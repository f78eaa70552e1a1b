#include "cyc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <queue>
#include <sstream>

#include "cyc/dense.hpp"

namespace cyc {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Degree: return "DegreeError";
        case ErrorKind::Loop: return "LoopError";
        case ErrorKind::Size: return "SizeError";
        case ErrorKind::Parameter: return "ParameterError";
        case ErrorKind::Format: return "FormatError";
        case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
        case ErrorKind::BagMismatch: return "BagMismatch";
        case ErrorKind::Overlap: return "OverlapError";
        case ErrorKind::Budget: return "BudgetExceeded";
        case ErrorKind::EdgeNotFound: return "EdgeNotFound";
        case ErrorKind::Embedding: return "EmbeddingError";
        case ErrorKind::NotPlanar: return "NotPlanar";
        case ErrorKind::Precondition: return "PreconditionError";
        case ErrorKind::Backend: return "BackendError";
        case ErrorKind::Parity: return "ParityError";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotCubicPlanar: return "NotCubicPlanar";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<Vertex> init) : members_(init) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet VertexSet::united(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    VertexSet s;
    s.members_ = std::move(out);
    return s;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    VertexSet s;
    s.members_ = std::move(out);
    return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    VertexSet s;
    s.members_ = std::move(out);
    return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n) {
    if (n < 0) fail(ErrorKind::Parameter, "negative vertex count");
    vertices_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertices_[static_cast<std::size_t>(i)] = i;
}

void Graph::add_vertex(Vertex v) {
    if (v < 0) fail(ErrorKind::Parameter, "negative vertex id");
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void Graph::add_edge(Vertex a, Vertex b) {
    if (!has_vertex(a) || !has_vertex(b))
        fail(ErrorKind::Parameter, "edge endpoint " + std::to_string(has_vertex(a) ? b : a) +
                                       " is not a vertex");
    Edge e(a, b);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

bool Graph::remove_edge(Vertex a, Vertex b) {
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return false;
    edges_.erase(it);
    return true;
}

bool Graph::has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Graph::multiplicity(Vertex a, Vertex b) const {
    Edge e(a, b);
    auto range = std::equal_range(edges_.begin(), edges_.end(), e);
    return static_cast<int>(range.second - range.first);
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Edge& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        else if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].is_loop()) return false;
        if (i > 0 && edges_[i] == edges_[i - 1]) return false;
    }
    return true;
}

bool Graph::is_dense() const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] != static_cast<Vertex>(i)) return false;
    return true;
}

Graph Graph::simplified() const {
    Graph h;
    h.vertices_ = vertices_;
    for (const Edge& e : edges_) {
        if (e.is_loop()) continue;
        if (!h.edges_.empty() && h.edges_.back() == e) continue;
        h.edges_.push_back(e);
    }
    return h;
}

Graph Graph::without_vertex(Vertex v) const {
    Graph h;
    for (Vertex x : vertices_)
        if (x != v) h.vertices_.push_back(x);
    for (const Edge& e : edges_)
        if (e.u != v && e.v != v) h.edges_.push_back(e);
    return h;
}

Graph Graph::induced(const VertexSet& keep) const {
    Graph h;
    for (Vertex x : vertices_)
        if (keep.contains(x)) h.vertices_.push_back(x);
    for (const Edge& e : edges_)
        if (keep.contains(e.u) && keep.contains(e.v)) h.edges_.push_back(e);
    return h;
}

// ---- cycles ----------------------------------------------------------------

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    const auto& seq = c.vertices;
    if (seq.empty()) return false;
    for (Vertex v : seq)
        if (!g.has_vertex(v)) return false;
    if (seq.size() == 1) return g.multiplicity(seq[0], seq[0]) > 0;
    if (seq.size() == 2) return false;
    std::vector<Vertex> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Vertex a = seq[i];
        Vertex b = seq[(i + 1) % seq.size()];
        if (!g.adjacent(a, b)) return false;
    }
    return true;
}

bool is_cycle_through(const Graph& g, const Cycle& c, const VertexSet& s) {
    if (!is_valid_cycle(g, c)) return false;
    VertexSet on(c.vertices);
    return s.is_subset_of(on);
}

Graph dissolve(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) fail(ErrorKind::Parameter, "vertex " + std::to_string(v) + " absent");
    auto nb = g.neighbors(v);
    if (nb.size() != 2 || g.multiplicity(v, v) > 0)
        fail(ErrorKind::Degree, "dissolve needs degree 2 at vertex " + std::to_string(v));
    if (nb[0] == nb[1])
        fail(ErrorKind::Loop, "both edges at vertex " + std::to_string(v) + " reach the same neighbor");
    Graph h = g.without_vertex(v);
    h.add_edge(nb[0], nb[1]);
    return h;
}

Graph lift(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) fail(ErrorKind::Parameter, "vertex " + std::to_string(v) + " absent");
    auto nb = g.neighbors(v);
    if (nb.size() != 2 || g.multiplicity(v, v) > 0)
        fail(ErrorKind::Degree, "lift needs degree 2 at vertex " + std::to_string(v));
    if (nb[0] == nb[1])
        fail(ErrorKind::Loop, "both edges at vertex " + std::to_string(v) + " reach the same neighbor");
    Graph h = g;
    h.remove_edge(v, nb[0]);
    h.remove_edge(v, nb[1]);
    if (!h.adjacent(nb[0], nb[1])) h.add_edge(nb[0], nb[1]);
    return h;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() <= 1) return true;
    DenseGraph d(g);
    std::vector<char> seen(static_cast<std::size_t>(d.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : d.adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
    }
    return count == d.n;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, capped at `limit`.
// Vertex x is split into x_in = 2x and x_out = 2x+1.
int disjoint_paths(const DenseGraph& d, int s, int t, int limit) {
    const int nodes = 2 * d.n;
    struct Arc { int to; int cap; };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(nodes));
    auto add_arc = [&](int a, int b, int cap) {
        out[static_cast<std::size_t>(a)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[static_cast<std::size_t>(b)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    const int big = d.n + 1;
    for (int x = 0; x < d.n; ++x) add_arc(2 * x, 2 * x + 1, (x == s || x == t) ? big : 1);
    for (int x = 0; x < d.n; ++x)
        for (int y : d.adj[static_cast<std::size_t>(x)]) add_arc(2 * x + 1, 2 * y, 1);
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    while (flow < limit) {
        std::vector<int> via(static_cast<std::size_t>(nodes), -1);
        std::queue<int> q;
        q.push(source);
        via[static_cast<std::size_t>(source)] = -2;
        while (!q.empty() && via[static_cast<std::size_t>(sink)] == -1) {
            int x = q.front();
            q.pop();
            for (int id : out[static_cast<std::size_t>(x)]) {
                const Arc& a = arcs[static_cast<std::size_t>(id)];
                if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
                    via[static_cast<std::size_t>(a.to)] = id;
                    q.push(a.to);
                }
            }
        }
        if (via[static_cast<std::size_t>(sink)] == -1) break;
        for (int x = sink; x != source;) {
            int id = via[static_cast<std::size_t>(x)];
            arcs[static_cast<std::size_t>(id)].cap -= 1;
            arcs[static_cast<std::size_t>(id ^ 1)].cap += 1;
            x = arcs[static_cast<std::size_t>(id ^ 1)].to;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    if (g.num_vertices() < 2) fail(ErrorKind::Size, "vertex connectivity needs n >= 2");
    if (!g.is_simple()) fail(ErrorKind::Parameter, "vertex connectivity needs a simple graph");
    DenseGraph d(g);
    int best = d.n - 1;
    for (int s = 0; s < d.n; ++s)
        for (int t = s + 1; t < d.n; ++t) {
            if (d.has_edge(s, t)) continue;
            best = std::min(best, disjoint_paths(d, s, t, best));
            if (best == 0) return 0;
        }
    return best;
}

// ---- text format -----------------------------------------------------------

GraphFile parse_graph(std::istream& in) {
    GraphFile out;
    std::string line;
    bool have_header = false;
    long declared_m = 0;
    long line_no = 0;
    std::vector<Vertex> annotated;
    std::vector<Edge> file_edges;
    auto bad = [&](const std::string& msg) {
        fail(ErrorKind::Format, "line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long n = -1;
            if (!(ls >> kind >> n >> declared_m) || kind != "cyc" || n < 0 || declared_m < 0)
                bad("malformed header");
            if (have_header) bad("duplicate header");
            if (n > 1000000) bad("too many vertices");
            out.graph = Graph(static_cast<int>(n));
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) bad("edge before header");
            long u = -1, v = -1;
            if (!(ls >> u >> v)) bad("malformed edge");
            if (u < 0 || v < 0 || u >= out.graph.num_vertices() || v >= out.graph.num_vertices())
                bad("edge endpoint out of range");
            out.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            file_edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else if (tag == "r") {
            if (!have_header) bad("annotation before header");
            long v;
            while (ls >> v) {
                if (v < 0 || v >= out.graph.num_vertices()) bad("annotated vertex out of range");
                annotated.push_back(static_cast<Vertex>(v));
            }
            if (!ls.eof()) bad("malformed annotation");
        } else {
            bad("unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) fail(ErrorKind::Format, "missing 'p cyc' header");
    if (declared_m != out.graph.num_edges())
        fail(ErrorKind::Format, "header declares " + std::to_string(declared_m) + " edges, found " +
                                    std::to_string(out.graph.num_edges()));
    out.annotated = VertexSet(std::move(annotated));
    std::vector<int> order(file_edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return file_edges[static_cast<std::size_t>(a)] < file_edges[static_cast<std::size_t>(b)]; });
    out.file_edge_ids.assign(order.size(), 0);
    for (std::size_t p = 0; p < order.size(); ++p) out.file_edge_ids[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open " + path);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const VertexSet& annotated) {
    if (!g.is_dense()) fail(ErrorKind::Format, "graph text format needs vertex ids 0..n-1");
    out << "p cyc " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    if (!annotated.empty()) {
        out << 'r';
        for (Vertex v : annotated) out << ' ' << v;
        out << '\n';
    }
}

std::string serialize_graph(const Graph& g, const VertexSet& annotated) {
    std::ostringstream os;
    write_graph(os, g, annotated);
    return os.str();
}

void write_graph_file(const std::string& path, const Graph& g, const VertexSet& annotated) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write " + path);
    write_graph(out, g, annotated);
}

}  // namespace cyc
