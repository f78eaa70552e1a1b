#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyc/decomp.hpp"
#include "cyc/graph.hpp"
#include "cyc/pairing.hpp"

namespace cyc {

// Which vertices an insert node may lift. `Sound` lifts nothing: a bag vertex
// stays until its forget node, which performs its lift. `AsPrinted` lifts
// X_s∖K on the committing branch and X_t∖K on the other; it is kept to
// demonstrate its unsoundness.
enum class LiftPolicy { Sound, AsPrinted };

// `Matched` joins entries with K1 = K2. `AsPrinted` joins any K1, K2 with
// K = K1 ∪ K2 and i = i1 + i2 - |K1 ∩ K2|.
enum class JoinRule { Matched, AsPrinted };

struct DpOptions {
    int width_cap = 5;
    LiftPolicy lift = LiftPolicy::Sound;
    JoinRule join = JoinRule::Matched;
    // Drops pairings that can no longer reach the root loop.
    bool prune = true;
    // Checks that the root entries account for every subset of R of size <= k.
    bool audit_counts = true;
    // Collects one line per node (and per entry when verbose).
    bool trace = false;
    bool trace_entries = false;
};

struct DpStats {
    int width = -1;
    int nodes = 0;
    std::size_t entries_max = 0;
    std::size_t entries_total = 0;
    std::size_t signature_max = 0;
    // Every table stayed within (k+1)·2^|bag|·2^|P(bag)| entries.
    bool growth_bound_ok = true;
    // A committed subset lost every partial solution.
    bool failed_early = false;
    // -1 not run, 0 mismatch, 1 consistent.
    int audit = -1;
};

struct DpResult {
    bool answer = false;
    DpStats stats;
    std::vector<std::string> trace;
};

// Reusable per-bag-size pairing interners and transition caches. Results
// never depend on whether a context is shared.
class DpContext {
public:
    DpContext();
    ~DpContext();
    DpContext(const DpContext&) = delete;
    DpContext& operator=(const DpContext&) = delete;

    struct Impl;
    Impl& impl() { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

// Decides whether every k-subset of R lies on a cycle of g. Works on the
// simple underlying graph. k = 0 and |R| < k are vacuous yes-instances.
// ParameterError if k < 0, InvalidDecomposition if d is not nice for g,
// SizeError if the width exceeds the cap.
DpResult solve_pac(const Graph& g, const VertexSet& r, int k, const NiceTreeDecomposition& d,
                   const DpOptions& options = {}, DpContext* context = nullptr);

// Same, with a decomposition from exact treewidth (heuristic above 32 vertices).
DpResult solve_pac(const Graph& g, const VertexSet& r, int k, const DpOptions& options = {},
                   DpContext* context = nullptr);

// Table-level transitions over explicit pairings, without pruning.
struct DpEntry {
    int i = 0;
    VertexSet k_set;
    std::vector<Pairing> signature;  // sorted

    friend bool operator==(const DpEntry&, const DpEntry&) = default;
    friend auto operator<=>(const DpEntry&, const DpEntry&) = default;
};

// Set when a transition drops an entry with i >= 1 for an empty signature.
struct TableFlags {
    bool committed_subset_died = false;
};

std::vector<DpEntry> leaf_table();
// host_edges_at_v: edges from v into bag_t owned by this insert node.
std::vector<DpEntry> insert_table(const std::vector<DpEntry>& child, Vertex v, bool v_annotated,
                                  const VertexSet& bag_t, int k, const std::vector<Edge>& host_edges_at_v,
                                  LiftPolicy policy = LiftPolicy::Sound, TableFlags* flags = nullptr);
std::vector<DpEntry> forget_table(const std::vector<DpEntry>& child, Vertex v, const VertexSet& bag_t,
                                  TableFlags* flags = nullptr);
// BagMismatch if the two bags differ.
std::vector<DpEntry> join_table(const std::vector<DpEntry>& left, const VertexSet& left_bag,
                                const std::vector<DpEntry>& right, const VertexSet& right_bag, int k,
                                JoinRule rule = JoinRule::Matched, TableFlags* flags = nullptr);

// Root acceptance over a finished root table: every entry with i >= 1 holds
// the vertex-less loop.
bool root_accepts(const std::vector<DpEntry>& root_table);

}  // namespace cyc
