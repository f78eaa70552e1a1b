#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cyc/graph.hpp"

namespace cyc {

// Simple underlying graph reindexed to 0..n-1. Loops and parallel edges are
// dropped. Bitmask rows are filled only when n <= 64.
struct DenseGraph {
    int n = 0;
    std::vector<Vertex> id;               // index -> vertex id
    std::vector<std::vector<int>> adj;    // ascending, no duplicates
    std::vector<std::uint64_t> mask;

    DenseGraph() = default;
    explicit DenseGraph(const Graph& g) {
        id = g.vertices();
        n = static_cast<int>(id.size());
        adj.assign(static_cast<std::size_t>(n), {});
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            int a = index_of(e.u);
            int b = index_of(e.v);
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& row : adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
        if (n <= 64) {
            mask.assign(static_cast<std::size_t>(n), 0);
            for (int x = 0; x < n; ++x)
                for (int y : adj[static_cast<std::size_t>(x)])
                    mask[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
        }
    }

    int index_of(Vertex v) const {
        auto it = std::lower_bound(id.begin(), id.end(), v);
        if (it == id.end() || *it != v) return -1;
        return static_cast<int>(it - id.begin());
    }

    bool has_edge(int a, int b) const {
        const auto& row = adj[static_cast<std::size_t>(a)];
        return std::binary_search(row.begin(), row.end(), b);
    }

    int degree(int a) const { return static_cast<int>(adj[static_cast<std::size_t>(a)].size()); }
};

}  // namespace cyc
