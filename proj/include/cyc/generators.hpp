#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyc/graph.hpp"
#include "cyc/planar.hpp"

namespace cyc {

using Coordinates = std::map<Vertex, std::pair<double, double>>;

Graph petersen_graph();
// a rows by b columns, row-major ids.
Graph grid_graph(int a, int b);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// Two n-cycles joined by a perfect matching: i and n+i.
Graph prism_graph(int n);
// n vertices: center 0 and leaves 1..n-1.
Graph star_graph(int n);
// Random spanning tree plus uniformly chosen extra edges up to m.
Graph random_connected(int n, int m, std::uint64_t seed);
// Random edges added to a spanning tree until vertex connectivity reaches k.
Graph random_k_connected(int n, int k, std::uint64_t seed);

struct PlantedClique {
    Graph graph;
    VertexSet clique;
};

// G(n, p) with p = permille/1000 plus a k-clique on seeded random vertices.
PlantedClique planted_clique(int n, int k, int permille, std::uint64_t seed);

struct PlaneGraph {
    Graph graph;
    Coordinates coords;
    Embedding embedding;
};

PlaneGraph grid_plane(int a, int b);
PlaneGraph cycle_plane(int n);
PlaneGraph prism_plane(int n);
PlaneGraph star_plane(int n);

// Center 0 and r nested len-cycles; ring i (1-based) holds ids
// 1 + (i-1)·len + j. Spokes join equal j on consecutive rings, and the
// center meets all of ring 1. The certificate lists the rings innermost
// first with the spokes as rails.
struct RingOfRings {
    PlaneGraph plane;
    RailedAnnulusCertificate certificate;
};

RingOfRings ring_of_rings(int r, int len);

// Wall of height h: vertices (x, y) with 1 <= x <= 2h+2 and 1 <= y <= h+1,
// vertical edges only where x+y is even, degree-1 vertices pruned. Ids run
// row-major over the survivors; subdivision vertices follow in edge order.
struct Wall {
    PlaneGraph plane;
    std::map<Vertex, std::pair<int, int>> grid_position;  // wall vertices only
    std::vector<Cycle> layers;                              // J_1 (perimeter) first, ceil(h/2) of them
    RailedAnnulusCertificate certificate;                   // layers innermost first
};

// `subdivisions` maps wall edges (by unsubdivided ids) to a number of new
// internal vertices. ParameterError if h < 1 or an edge is not in the wall.
// Up to `rails` rails are searched when there are at least two layers.
Wall wall(int h, const std::map<Edge, int>& subdivisions = {}, int rails = 3);

enum class Role { CliquePart, Hub, EdgeVertex };

struct VertexRole {
    Role role = Role::CliquePart;
    Vertex x = -1;  // clique part copy of x, or first endpoint
    Vertex y = -1;  // second endpoint for edge vertices
    int copy = 0;   // 1-based copy index for clique parts
};

struct CliqueReductionOutput {
    Graph graph;
    int k_prime = 0;
    int s = 0;
    std::map<Vertex, VertexRole> roles;
};

// s = (k-1)/2 copies v_x^i = x·s + (i-1), hub w = n·s, and u_xy = n·s+1+j for
// the j-th edge. ParityError if k is even, ParameterError if k < 3 or the
// graph ids are not 0..n-1.
CliqueReductionOutput clique_reduction(const Graph& g, int k);

// {u_xy : x, y in the clique} ∪ {w}.
VertexSet clique_witness(const CliqueReductionOutput& out, const VertexSet& clique);

// A clique/independent-set partition, or nullopt if the graph is not split.
std::optional<std::pair<VertexSet, VertexSet>> split_partition(const Graph& g);
bool is_split_partition(const Graph& g, const VertexSet& clique, const VertexSet& independent);

struct CrossCompositionOutput {
    Graph graph;
    int k = 0;
    std::vector<std::pair<Vertex, Vertex>> link_vertices;  // (u_i, v_i)
};

// Copy i occupies ids i·(n+2) .. i·(n+2)+n+1 with u_i = i·(n+2)+n and
// v_i = u_i + 1. SizeMismatch if vertex counts differ, EdgeNotFound if a
// chosen edge is absent, NotCubicPlanar when verification fails.
CrossCompositionOutput cross_composition(const std::vector<std::pair<Graph, Edge>>& instances,
                                         bool require_cubic_planar);

bool is_cubic(const Graph& g);

// Connected graphs on n <= 8 vertices up to isomorphism, each in canonical
// labelling, sorted by adjacency code.
std::vector<Graph> connected_graphs(int n);

// Canonical form under vertex relabelling for simple graphs with ids 0..n-1.
Graph canonical_form(const Graph& g);

struct CatalogGraph {
    Graph graph;
    std::optional<Embedding> embedding;
    std::optional<RailedAnnulusCertificate> certificate;
    std::string description;
};

// petersen, grid a b, cycle n, complete n, prism n, star n,
// random_connected n m, random_k_connected n k, ring_of_rings r len, wall h.
// UnknownName for other names, ParameterError for wrong arity.
CatalogGraph catalog(const std::string& name, const std::vector<std::int64_t>& params, std::uint64_t seed = 1);
std::vector<std::string> catalog_names();

}  // namespace cyc
