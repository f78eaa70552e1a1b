#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyc/graph.hpp"

namespace cyc {

// Node ids are indices into `bags`.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationReport validate(const Graph& g, const TreeDecomposition& d);

enum class NodeKind { Leaf, Insert, Forget, Join };

const char* node_kind_name(NodeKind kind);

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    Vertex vertex = -1;  // insert/forget vertex
    VertexSet bag;
    std::vector<int> children;
};

// Children always precede their parent; the root is the last node and has an
// empty bag.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    TreeDecomposition as_tree() const;
};

// Throws InvalidDecomposition if d is not valid for g.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& d);

// Checks the per-node kind contracts, the empty root and empty non-root leaves.
ValidationReport check_nice(const Graph& g, const NiceTreeDecomposition& d);

struct TreewidthResult {
    int width = 0;
    TreeDecomposition decomposition;
};

inline constexpr int kExactTreewidthMaxVertices = 32;

// Minimum width with a witness, or nullopt when it exceeds `budget`.
// Works on the simple underlying graph. SizeError above 32 vertices.
std::optional<TreewidthResult> exact_treewidth(const Graph& g, int budget);

// Decomposition induced by eliminating vertices in `order`.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

// Min-fill elimination heuristic; an upper bound only.
TreewidthResult heuristic_treewidth(const Graph& g);

// `s td <bags> <width+1> <n>`, `b <id> <v...>` with 1-based bag ids, then
// tree edges `<id> <id>`. Vertex ids are written as in the graph file.
TreeDecomposition parse_td(std::istream& in);
TreeDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& d, int num_vertices);
void write_td_file(const std::string& path, const TreeDecomposition& d, int num_vertices);

}  // namespace cyc
