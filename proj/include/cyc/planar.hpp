#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyc/decomp.hpp"
#include "cyc/graph.hpp"
#include "cyc/oracle.hpp"

namespace cyc {

class DpContext;

// Rotation system: for each vertex, its incident edge ids (indices into
// g.edges()) in cyclic order. Self-loops are not embeddable.
struct Embedding {
    std::map<Vertex, std::vector<int>> rotation;
    int outer_face = 0;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Dart 2e runs e.u -> e.v and dart 2e+1 runs e.v -> e.u. The dart after
// a -> b leaves b along the rotation successor of the edge it arrived on.
inline int dart_of(int edge, bool reversed) { return 2 * edge + (reversed ? 1 : 0); }
inline int dart_edge(int dart) { return dart / 2; }

struct FaceSet {
    std::vector<std::vector<int>> faces;  // dart walks, each starting at its smallest dart
    std::vector<int> face_of_dart;

    int size() const { return static_cast<int>(faces.size()); }
    std::vector<Vertex> face_vertices(const Graph& g, int f) const;
};

Vertex dart_tail(const Graph& g, int dart);
Vertex dart_head(const Graph& g, int dart);

// EmbeddingError unless rotations cover exactly E(g), there are no loops, and
// every component satisfies Euler's formula.
FaceSet compute_faces(const Graph& g, const Embedding& emb);

// Counterclockwise rotation by angle around each vertex. Bounded faces are
// then traced clockwise, so the outer face is the one of positive signed
// area. Points are indexed by vertex id.
Embedding embedding_from_coordinates(const Graph& g, const std::map<Vertex, std::pair<double, double>>& coords);

// Planar embedding of a loopless graph, or nullopt if none exists. The outer
// face is the longest face.
std::optional<Embedding> planar_embedding(const Graph& g);

// Rotations of a subgraph of `g`, keeping the cyclic order. The new outer
// face is the one holding a surviving dart of the old outer face.
Embedding restrict_embedding(const Graph& g, const Embedding& emb, const Graph& sub);

// `rot <v>: <e...>` and `outer <f>`. When `file_edge_ids` is given, edge ids
// in the file refer to graph-file line order and are mapped to canonical ids.
Embedding parse_embedding(std::istream& in, const std::vector<int>* file_edge_ids = nullptr);
Embedding read_embedding_file(const std::string& path, const std::vector<int>* file_edge_ids = nullptr);
void write_embedding(std::ostream& out, const Embedding& emb);
void write_embedding_file(const std::string& path, const Embedding& emb);

// The closed disk bounded by a cycle: faces unreachable from the outer face
// without crossing the cycle.
struct DiskRegion {
    std::vector<bool> interior_face;
    VertexSet inside;        // strictly inside
    VertexSet closed;        // cycle plus inside
    std::vector<int> edges;  // edge ids of the disk subgraph
};

// nullopt unless c is a cycle of g of length >= 3.
std::optional<DiskRegion> disk_region(const Graph& g, const Embedding& emb, const FaceSet& faces,
                                      const Cycle& c, int outer_face);

// Ĉ: the part of g inside the closed disk of c.
Graph disk_subgraph(const Graph& g, const DiskRegion& region);

// C_1 innermost. `inside[i]` is the strict interior of cycles[i]; empty when
// not yet filled.
struct ConcentricCertificate {
    std::vector<Cycle> cycles;
    std::vector<VertexSet> inside;
    int outer_face = 0;

    int size() const { return static_cast<int>(cycles.size()); }
    // V(Ĉ_i), 1-based.
    VertexSet closed(int i) const;
    // V(Â_{i,j}) = V(Ĉ_j) ∖ interior(C_i), 1-based.
    VertexSet annulus(int i, int j) const;
};

struct RailedAnnulusCertificate {
    ConcentricCertificate concentric;
    std::vector<std::vector<Vertex>> rails;
};

// Checks validity, disjointness and nesting, and that recorded interiors
// match the embedding. Fills `inside` on success when it was empty.
ValidationReport verify_concentric(const Graph& g, const Embedding& emb, ConcentricCertificate& cert);
ValidationReport verify_railed_annulus(const Graph& g, const Embedding& emb, RailedAnnulusCertificate& cert);

// ParameterError unless 1 <= q <= r.
bool is_q_dense(const VertexSet& r, const ConcentricCertificate& cert, int q);

std::string concentric_to_json(const ConcentricCertificate& cert);
std::string railed_to_json(const RailedAnnulusCertificate& cert);
// FormatError on malformed input or a schema other than 1. The concentric
// reader also accepts a railed-annulus certificate and ignores its rails.
ConcentricCertificate concentric_from_json(const std::string& text);
RailedAnnulusCertificate railed_from_json(const std::string& text);

// Thresholds of the irrelevant-vertex machinery. `published(k)` gives the
// published values; every field can be overridden for mechanism tests.
struct Constants {
    std::int64_t r = 0;            // cycles of the railed annulus
    std::int64_t y = 0;            // R-free concentric cycles sought in Step 2
    std::int64_t q = 0;            // wall height deciding Step 1
    std::int64_t b = 0;            // offset of the cropped disk
    std::int64_t density = 0;      // R must be this dense in the annulus
    std::int64_t rails = 0;        // rails required
    std::int64_t penetration = 0;  // R-free cycles guarding the deletion rule
    std::int64_t w_lo = 0;         // w_i is taken from Â_{i+w_lo, i+w_hi}
    std::int64_t w_hi = 0;
    std::int64_t width = 0;        // decomposition width accepted in Step 1

    static Constants published(int k);
    // Smallest values keeping the rule guards satisfiable on graphs of about a
    // dozen vertices: r = 2k+2, y = penetration = k+1, b = w_hi = 2k+1,
    // w_lo = k+1, density = k, rails = 2k+1, width = 2. Soundness is then an
    // empirical question settled by the oracle.
    static Constants reduced(int k);
    // Applies `key=value,...` overrides. ParameterError on unknown keys.
    Constants with_overrides(const std::string& overrides) const;
    std::string to_string() const;
};

// Deletion rule guard: cert verifies, V(Ĉ_r) ∩ R = ∅ and r >= penetration.
// Returns V(Ĉ_1). PreconditionError naming the failed clause.
VertexSet problem_irrelevant_by_annulus(const Graph& g, const Embedding& emb, const VertexSet& r, int k,
                                        ConcentricCertificate cert, std::int64_t penetration);

using DpBackend = std::function<bool(const Graph&, const VertexSet&, int)>;

struct ColorStepResult {
    bool no_instance = false;
    Vertex vertex = -1;  // un-annotatable vertex when !no_instance
    int failed_index = -1;
    std::vector<Vertex> witnesses;  // w_i, lowest id in the prescribed annulus
    std::vector<std::string> trace;
};

// Runs the cropped DP on (Ĉ_{i+b}, R_i, k) for i in 1..r-b. PreconditionError
// if the certificate is too small, R misses Ĉ_1 or is not dense enough, a w_i
// is missing, or a cropped disk exceeds `width_cap`. BackendError wraps
// failures of the backend.
ColorStepResult color_irrelevant_step(const Graph& g, const Embedding& emb, const VertexSet& r, int k,
                                      RailedAnnulusCertificate cert, const Constants& constants, int width_cap,
                                      const DpBackend& backend);

struct SearchBudget {
    std::int64_t max_cycles = 200'000;
    std::int64_t max_steps = 20'000'000;
};

// y nested cycles with V(Ĉ_y) ∩ R = ∅, found by enumerating R-free cycles and
// chaining them by containment. BudgetExceeded when the enumeration is cut.
std::optional<ConcentricCertificate> find_concentric_r_free(const Graph& g, const Embedding& emb,
                                                            const VertexSet& r, int y,
                                                            const SearchBudget& budget = {});

// q rails for the given cycles, or nullopt. The certificate must verify.
std::optional<std::vector<std::vector<Vertex>>> find_rails(const Graph& g, const Embedding& emb,
                                                           ConcentricCertificate cert, int q,
                                                           const SearchBudget& budget = {});

// r nested cycles with R ∩ V(Ĉ_1) nonempty, R `density`-dense, and `rails`
// rails. BudgetExceeded when the search is cut.
std::optional<RailedAnnulusCertificate> find_railed_annulus(const Graph& g, const Embedding& emb,
                                                            const VertexSet& r, int cycles, int density,
                                                            int rails, const SearchBudget& budget = {});

enum class NonPlanarPolicy { Reject, Fallback };

struct PipelineConfig {
    std::optional<Constants> constants;  // published values for the given k when unset
    int dp_width_cap = 7;
    NonPlanarPolicy non_planar = NonPlanarPolicy::Reject;
    SearchBudget search;
    OracleBudget oracle;
    int max_rounds = 1000;
    // Shared DP caches; a private context is used when null.
    DpContext* dp_context = nullptr;
};

struct PipelineResult {
    bool answer = false;
    std::vector<std::string> trace;
    int step1 = 0;     // DP answers
    int step2 = 0;     // problem-irrelevant deletions
    int step3 = 0;     // cropped DP runs
    int step4 = 0;     // color-irrelevant decisions
    int fallback = 0;  // oracle answers
};

// Steps 1-4 with an oracle fallback. R ∖ V(g) is ignored. NotPlanar when an
// embedding is needed, none is given and g has none, under the Reject policy.
PipelineResult pipeline_solve(const Graph& g, const std::optional<Embedding>& emb, const VertexSet& r, int k,
                              const PipelineConfig& config = {});

// Vertices of the smallest wall of height h.
std::int64_t wall_vertex_count(std::int64_t h);

}  // namespace cyc
