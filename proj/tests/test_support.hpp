#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "cyc/graph.hpp"

namespace cyc::test {

// Every VertexSet over `universe` of the given size, in lexicographic order.
inline std::vector<VertexSet> subsets_of_size(const std::vector<Vertex>& universe, int size) {
    std::vector<VertexSet> out;
    std::vector<Vertex> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == size) {
            out.emplace_back(pick);
            return;
        }
        for (std::size_t i = from; i < universe.size(); ++i) {
            pick.push_back(universe[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

inline std::vector<VertexSet> all_subsets(const std::vector<Vertex>& universe) {
    std::vector<VertexSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << universe.size()); ++mask) {
        std::vector<Vertex> pick;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1) pick.push_back(universe[i]);
        out.emplace_back(pick);
    }
    return out;
}

// Every simple cycle of length >= 3 of a simple graph, each listed once,
// starting at its smallest vertex.
inline std::vector<Cycle> all_cycles(const Graph& g) {
    std::vector<Cycle> out;
    std::vector<Vertex> path;
    std::vector<Vertex> seen;
    std::function<void(Vertex)> rec = [&](Vertex at) {
        for (Vertex w : g.neighbors(at)) {
            if (w == path.front() && path.size() >= 3 && path[1] < path.back()) out.push_back({path});
            if (w <= path.front() || std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            rec(w);
            path.pop_back();
        }
    };
    for (Vertex s : g.vertices()) {
        path = {s};
        rec(s);
    }
    return out;
}

}  // namespace cyc::test
