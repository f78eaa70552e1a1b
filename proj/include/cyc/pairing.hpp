#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyc/graph.hpp"

namespace cyc {

// Degree-<=2 fingerprint of a partial cycle on a bag. Edges form a sorted
// multiset: a self-loop is (v,v) and a double edge, the 2-cycle marker, is
// listed twice. `loop` is the vertex-less loop.
struct Pairing {
    VertexSet active;
    std::vector<Edge> edges;
    bool loop = false;

    friend bool operator==(const Pairing&, const Pairing&) = default;
    friend auto operator<=>(const Pairing&, const Pairing&) = default;
};

// Degrees at most 2 (a self-loop counts 2), edges only between active
// vertices, multiplicity at most 2, and at most one cycle overall with every
// vertex off the cycle at degree 0.
bool is_valid_pairing(const Pairing& p);

// Sorts the edge list; other fields are kept as given.
Pairing canonical(Pairing p);

std::string to_string(const Pairing& p);

inline constexpr int kMaxPairingBag = 12;

// Sorted, canonical. SizeError above 12 vertices.
std::vector<Pairing> enumerate_pairings(const VertexSet& bag);
// Closed form of |enumerate_pairings(bag)| for a bag of the given size.
std::uint64_t count_pairings(int bag_size);

// Edge lift at v inside the pairing alphabet. Inactive v: p unchanged.
// Degree 2 toward distinct u,w: v drops out and u-w is added, doubling an
// existing u-w into the 2-cycle marker. On a double edge u=v the partner u
// gains a self-loop. A self-loop at v becomes the vertex-less loop.
// Degree 0 or 1: nullopt.
std::optional<Pairing> lift_pairing(const Pairing& p, Vertex v);

// Graph union with presence OR-ed and edge multiplicities summed; nullopt
// unless the sum is a valid pairing.
std::optional<Pairing> unite(const Pairing& a, const Pairing& b);

// Candidate partial cycle at an inserted vertex: edges all incident to `v`.
struct AuxGraph {
    Vertex v = -1;
    VertexSet vertices;
    std::vector<Edge> edges;
};

// Every aux over v whose vertices lie in N ∪ {v} and whose edges join v to
// members of N.
std::vector<AuxGraph> enumerate_aux(Vertex v, const VertexSet& neighborhood);

// Valid pairings reachable from p ∪ aux by lifting any subset of L in any
// order. OverlapError if aux leaves bag_t.
std::vector<Pairing> oplus(const Pairing& p, const AuxGraph& aux, const VertexSet& lift_set, const VertexSet& bag_t);

// Every p over bag_s with p_prime ∈ oplus(p, aux, L) for some aux over v and
// neighborhood, found by forward search over P(bag_s).
std::vector<Pairing> zeta(const Pairing& p_prime, const VertexSet& lift_set, Vertex v,
                          const VertexSet& neighborhood, const VertexSet& bag_s);

// Ordered pairs of valid pairings whose union is exactly p.
std::vector<std::pair<Pairing, Pairing>> xi(const Pairing& p);

}  // namespace cyc
