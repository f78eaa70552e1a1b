#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyc/error.hpp"

namespace cyc {

using Vertex = int;

// Undirected edge with u <= v. Self-loops have u == v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool is_loop() const { return u == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> init);
    explicit VertexSet(std::vector<Vertex> members);

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const std::vector<Vertex>& members() const { return members_; }

    VertexSet united(const VertexSet& other) const;
    VertexSet intersected(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

// Cyclic vertex sequence. A single vertex stands for a self-loop cycle.
struct Cycle {
    std::vector<Vertex> vertices;
};

// Undirected multigraph with stable vertex ids. Edges are kept sorted, so
// two graphs with the same vertex set and edge multiset compare equal and
// serialize identically.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    void add_vertex(Vertex v);
    void add_edge(Vertex a, Vertex b);
    // Removes one copy of the edge; returns false if it was absent.
    bool remove_edge(Vertex a, Vertex b);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(Vertex v) const;
    int multiplicity(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }
    // A self-loop contributes 2.
    int degree(Vertex v) const;
    // Neighbors with multiplicity, ascending.
    std::vector<Vertex> neighbors(Vertex v) const;

    bool is_simple() const;
    // True when vertex ids are exactly 0..n-1.
    bool is_dense() const;
    Vertex max_vertex() const { return vertices_.empty() ? -1 : vertices_.back(); }

    Graph simplified() const;
    Graph without_vertex(Vertex v) const;
    Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

// True iff c is a valid cycle of g and every member of s lies on it.
bool is_cycle_through(const Graph& g, const Cycle& c, const VertexSet& s);
bool is_valid_cycle(const Graph& g, const Cycle& c);

// Deletes a degree-2 vertex and joins its neighbors, keeping multi-edges.
Graph dissolve(const Graph& g, Vertex v);

// Edge lift: replaces the two edges at a degree-2 vertex by one edge between
// its neighbors unless that edge exists. The vertex stays, isolated.
Graph lift(const Graph& g, Vertex v);

// Minimum number of vertex deletions that disconnect a simple graph;
// n-1 for complete graphs.
int vertex_connectivity(const Graph& g);

bool is_connected(const Graph& g);

struct GraphFile {
    Graph graph;
    VertexSet annotated;
    // Canonical edge index of each `e` line, in file order.
    std::vector<int> file_edge_ids;
};

// `p cyc <n> <m>`, `e <u> <v>`, `r <v...>`, `c ...`.
GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, const VertexSet& annotated = {});
std::string serialize_graph(const Graph& g, const VertexSet& annotated = {});
void write_graph_file(const std::string& path, const Graph& g, const VertexSet& annotated = {});

}  // namespace cyc
