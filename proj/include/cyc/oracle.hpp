#pragma once

#include <cstdint>
#include <optional>

#include "cyc/graph.hpp"

namespace cyc {

// Explicit limits; exceeding any of them throws BudgetExceeded.
struct OracleBudget {
    int max_vertices = 14;
    std::int64_t max_subsets = 50'000'000;
    std::int64_t time_limit_ms = 600'000;
};

// All solvers work on the simple underlying graph. Witness cycles start at
// the smallest member of s and follow ascending neighbor order.
std::optional<Cycle> cycle_through(const Graph& g, const VertexSet& s, const OracleBudget& budget = {});

// True iff every k-subset of r lies on a cycle; vacuous when |r| < k or k = 0.
// ParameterError if k < 0.
bool is_yes_pac(const Graph& g, const VertexSet& r, int k, const OracleBudget& budget = {});

// A k-subset of r on no cycle, if any.
std::optional<VertexSet> find_uncyclable_subset(const Graph& g, const VertexSet& r, int k,
                                                const OracleBudget& budget = {});

// Largest k with is_yes_pac(g, V, k), at least 1.
int cyclability(const Graph& g, const OracleBudget& budget = {});

bool is_hamiltonian(const Graph& g, const OracleBudget& budget = {});

// EdgeNotFound unless e is an edge of g.
bool hamiltonian_with_edge(const Graph& g, Edge e, const OracleBudget& budget = {});

bool is_hypohamiltonian(const Graph& g, const OracleBudget& budget = {});

}  // namespace cyc
