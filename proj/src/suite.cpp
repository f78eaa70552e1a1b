#include "cyc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "cyc/dp.hpp"
#include "cyc/error.hpp"
#include "cyc/generators.hpp"
#include "cyc/oracle.hpp"
#include "cyc/pairing.hpp"
#include "cyc/planar.hpp"

namespace cyc {
namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failures == 0) first_failure = what;
        ++failures;
    }
    std::string summary() const {
        std::string s = "checked=" + std::to_string(checked) + " failures=" + std::to_string(failures);
        if (failures) s += " first: " + first_failure;
        return s;
    }
};

std::string brief(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.num_vertices() << " E={";
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : " ") << e.u << '-' << e.v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string set_text(const VertexSet& s) {
    std::string out = "{";
    for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

VertexSet all_vertices(const Graph& g) { return VertexSet(g.vertices()); }

// ⌈n/2⌉ vertices chosen by a seeded shuffle.
VertexSet random_half(const Graph& g, std::uint64_t seed) {
    std::vector<Vertex> vs = g.vertices();
    std::mt19937_64 rng(seed);
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize((vs.size() + 1) / 2);
    return VertexSet(std::move(vs));
}

struct CatalogCase {
    Graph graph;
    VertexSet half;
};

// Every connected graph up to `max_n` vertices, then `randoms` seeded random
// connected graphs on n_lo..n_hi vertices with exact treewidth <= 4.
std::vector<CatalogCase> master_catalog(SuiteLevel level) {
    const bool desk = level == SuiteLevel::Desk;
    const int max_n = desk ? 8 : 6;
    const int randoms = desk ? 200 : 20;
    const int n_lo = desk ? 9 : 7, n_hi = desk ? 12 : 9;
    std::vector<CatalogCase> out;
    std::uint64_t seed = 1;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : connected_graphs(n)) {
            VertexSet half = random_half(g, seed++);
            out.push_back({std::move(g), std::move(half)});
        }
    std::mt19937_64 rng(20240601);
    int made = 0;
    while (made < randoms) {
        const int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
        const int m = std::uniform_int_distribution<int>(n - 1, std::min(n * (n - 1) / 2, 2 * n))(rng);
        Graph g = random_connected(n, m, rng());
        if (!exact_treewidth(g, 4)) continue;
        VertexSet half = random_half(g, rng());
        out.push_back({std::move(g), std::move(half)});
        ++made;
    }
    return out;
}

DpOptions suite_dp_options() {
    DpOptions o;
    o.width_cap = 7;
    return o;
}

// ---- criterion 1 ------------------------------------------------------------

std::string criterion_oracle_dp(SuiteLevel level, bool& ok) {
    Tally t;
    DpContext ctx;
    const DpOptions opts = suite_dp_options();
    auto cases = master_catalog(level);
    for (const auto& c : cases)
        for (const VertexSet& r : {all_vertices(c.graph), c.half})
            for (int k = 1; k <= 3; ++k) {
                bool dp = solve_pac(c.graph, r, k, opts, &ctx).answer;
                bool oracle = is_yes_pac(c.graph, r, k);
                t.check(dp == oracle, brief(c.graph) + " R=" + set_text(r) + " k=" + std::to_string(k) +
                                          " dp=" + std::to_string(dp) + " oracle=" + std::to_string(oracle));
            }
    ok = t.failures == 0 && t.checked > 0;
    return "graphs=" + std::to_string(cases.size()) + " " + t.summary();
}

// ---- criterion 2 ------------------------------------------------------------

std::string criterion_characterizations(SuiteLevel level, bool& ok) {
    Tally t;
    for (int n = 3; n <= 7; ++n) {
        int c = cyclability(complete_graph(n));
        t.check(c == n, "cyclability(K" + std::to_string(n) + ") = " + std::to_string(c));
    }
    Graph p = petersen_graph();
    int pc = cyclability(p);
    t.check(pc == 9, "cyclability(Petersen) = " + std::to_string(pc));
    t.check(is_hypohamiltonian(p), "Petersen not hypohamiltonian");
    const int max_n = level == SuiteLevel::Desk ? 8 : 6;
    int trees = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (g.num_edges() != n - 1) continue;
            ++trees;
            int c = cyclability(g);
            t.check(c == 1, "tree " + brief(g) + " cyclability " + std::to_string(c));
        }
    ok = t.failures == 0;
    return "trees=" + std::to_string(trees) + " " + t.summary();
}

// ---- criterion 3 ------------------------------------------------------------

std::string criterion_dirac(SuiteLevel level, bool& ok) {
    Tally t;
    const int per_k = level == SuiteLevel::Desk ? 50 : 10;
    const int n_hi = level == SuiteLevel::Desk ? 12 : 9;
    for (int k = 2; k <= 3; ++k)
        for (int i = 0; i < per_k; ++i) {
            const int n = 6 + i % (n_hi - 5);
            const std::uint64_t seed = 1000 * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(i);
            Graph g = random_k_connected(n, k, seed);
            int kappa = vertex_connectivity(g);
            int c = cyclability(g);
            t.check(kappa >= k && c >= k, "k=" + std::to_string(k) + " seed=" + std::to_string(seed) + " " + brief(g) +
                                              " connectivity=" + std::to_string(kappa) + " cyclability=" + std::to_string(c));
        }
    ok = t.failures == 0;
    return t.summary();
}

// ---- criterion 4 ------------------------------------------------------------

std::string criterion_clique_reduction(SuiteLevel level, bool& ok) {
    Tally t;
    const int per_k = level == SuiteLevel::Desk ? 10 : 3;
    OracleBudget budget;
    budget.max_vertices = 64;
    int max_size = 0;
    for (int k : {3, 5})
        for (int i = 0; i < per_k; ++i) {
            const int n = k + 1 + i % 2;
            const std::uint64_t seed = 77 * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(i);
            PlantedClique pc = planted_clique(n, k, 300, seed);
            CliqueReductionOutput out = clique_reduction(pc.graph, k);
            max_size = std::max(max_size, out.graph.num_vertices());
            VertexSet z = clique_witness(out, pc.clique);
            const std::string tag = "k=" + std::to_string(k) + " seed=" + std::to_string(seed);
            t.check(static_cast<int>(z.size()) == k * (k - 1) / 2 + 1 && out.k_prime == static_cast<int>(z.size()),
                    tag + " |Z| = " + std::to_string(z.size()));
            t.check(!cycle_through(out.graph, z, budget), tag + " Z lies on a cycle");
            auto split = split_partition(out.graph);
            t.check(split && is_split_partition(out.graph, split->first, split->second), tag + " not split");
            bool independent = true;
            for (const Edge& e : out.graph.edges())
                if (out.roles.at(e.u).role == Role::EdgeVertex && out.roles.at(e.v).role == Role::EdgeVertex)
                    independent = false;
            t.check(independent, tag + " edge vertices adjacent");
        }
    ok = t.failures == 0;
    return "largest=" + std::to_string(max_size) + " " + t.summary();
}

// ---- criterion 5 ------------------------------------------------------------

struct Instance {
    std::string name;
    Graph graph;
    Edge edge;
};

// First (G, e) with no Hamiltonian cycle through e: cubic planar graphs on
// n <= 8 first, then Hamiltonian graphs on six vertices so the negative
// shares its size with the prism.
std::optional<Instance> search_negative() {
    for (int n = 4; n <= 8; n += 2)
        for (const Graph& g : connected_graphs(n)) {
            if (!is_cubic(g) || !planar_embedding(g)) continue;
            for (const Edge& e : g.edges())
                if (!hamiltonian_with_edge(g, e)) return Instance{"searched cubic " + brief(g), g, e};
        }
    for (const Graph& g : connected_graphs(6)) {
        if (!is_hamiltonian(g)) continue;
        for (const Edge& e : g.edges())
            if (!hamiltonian_with_edge(g, e)) return Instance{"searched " + brief(g), g, e};
    }
    return std::nullopt;
}

std::string criterion_cross_composition(SuiteLevel level, bool& ok) {
    Tally t;
    std::vector<Instance> pool;
    Graph k4 = complete_graph(4);
    pool.push_back({"K4", k4, k4.edges().front()});
    Graph prism = prism_graph(3);
    pool.push_back({"prism/triangle", prism, Edge(0, 1)});
    pool.push_back({"prism/rung", prism, Edge(0, 3)});
    auto negative = search_negative();
    if (!negative) {
        ok = false;
        return "no negative instance found";
    }
    pool.push_back(*negative);
    const int t_max = level == SuiteLevel::Desk ? 3 : 2;
    OracleBudget budget;
    budget.max_vertices = 64;
    int composed = 0, mismatched_sizes = 0, negatives = 0;
    std::vector<int> pick;
    auto run = [&](const std::vector<int>& idx) {
        std::vector<std::pair<Graph, Edge>> inst;
        bool expected = true;
        std::string tag;
        for (int i : idx) {
            const Instance& in = pool[static_cast<std::size_t>(i)];
            inst.emplace_back(in.graph, in.edge);
            expected = expected && hamiltonian_with_edge(in.graph, in.edge);
            tag += (tag.empty() ? "" : " + ") + in.name;
        }
        try {
            bool cubic = std::all_of(idx.begin(), idx.end(), [&](int i) {
                return is_cubic(pool[static_cast<std::size_t>(i)].graph);
            });
            CrossCompositionOutput out = cross_composition(inst, cubic);
            bool got = is_yes_pac(out.graph, all_vertices(out.graph), out.k, budget);
            ++composed;
            if (!expected) ++negatives;
            t.check(got == expected, tag + " composed=" + std::to_string(got) + " AND=" + std::to_string(expected));
        } catch (const Error& e) {
            bool sizes_differ = false;
            for (int i : idx)
                sizes_differ |= pool[static_cast<std::size_t>(i)].graph.num_vertices() !=
                                pool[static_cast<std::size_t>(idx.front())].graph.num_vertices();
            t.check(e.kind() == ErrorKind::SizeMismatch && sizes_differ, tag + " threw " + e.what());
            ++mismatched_sizes;
        }
    };
    // Multisets as non-decreasing index sequences.
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (!pick.empty()) run(pick);
        if (left == 0) return;
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            pick.push_back(i);
            rec(i, left - 1);
            pick.pop_back();
        }
    };
    rec(0, t_max);
    ok = t.failures == 0 && negatives > 0;
    return "negative=" + negative->name + " edge " + std::to_string(negative->edge.u) + "-" +
           std::to_string(negative->edge.v) + " composed=" + std::to_string(composed) + " (false=" +
           std::to_string(negatives) + ") size-mismatch=" + std::to_string(mismatched_sizes) + " " + t.summary();
}

// ---- criterion 6 ------------------------------------------------------------

enum class RuleKind { Problem, Color };

struct RuleCase {
    std::string name;
    Graph graph;
    Embedding embedding;
    RailedAnnulusCertificate certificate;
    VertexSet r;
    int k = 1;
    RuleKind kind = RuleKind::Problem;
};

int ring_id(int len, int ring, int j) { return 1 + (ring - 1) * len + j; }

// ring_of_rings with optional extra vertices: one outside the outer ring
// joined to its first two vertices, and one pendant at the center.
struct RingBuild {
    Graph graph;
    Embedding embedding;
    RailedAnnulusCertificate certificate;
    Vertex outer = -1;
    Vertex pendant = -1;
};

RingBuild build_ring(int rings, int len, bool outer, bool pendant) {
    RingOfRings base = ring_of_rings(rings, len);
    RingBuild b;
    b.graph = base.plane.graph;
    Coordinates coords = base.plane.coords;
    const double half_step = std::numbers::pi / len;
    Vertex next = b.graph.max_vertex() + 1;
    if (outer) {
        b.outer = next++;
        b.graph.add_vertex(b.outer);
        b.graph.add_edge(b.outer, ring_id(len, rings, 0));
        b.graph.add_edge(b.outer, ring_id(len, rings, 1));
        coords[b.outer] = {(rings + 1) * std::cos(half_step), (rings + 1) * std::sin(half_step)};
    }
    if (pendant) {
        b.pendant = next++;
        b.graph.add_vertex(b.pendant);
        b.graph.add_edge(b.pendant, 0);
        coords[b.pendant] = {0.4 * std::cos(half_step), 0.4 * std::sin(half_step)};
    }
    b.embedding = embedding_from_coordinates(b.graph, coords);
    b.certificate = base.certificate;
    b.certificate.concentric.outer_face = b.embedding.outer_face;
    b.certificate.concentric.inside.clear();
    ValidationReport rep = verify_railed_annulus(b.graph, b.embedding, b.certificate);
    if (!rep.ok) fail(ErrorKind::Embedding, "ring instance certificate: " + rep.violations.front());
    return b;
}

RailedAnnulusCertificate first_rings(const RailedAnnulusCertificate& full, int count) {
    RailedAnnulusCertificate c;
    c.concentric.outer_face = full.concentric.outer_face;
    c.concentric.cycles.assign(full.concentric.cycles.begin(), full.concentric.cycles.begin() + count);
    c.concentric.inside.assign(full.concentric.inside.begin(), full.concentric.inside.begin() + count);
    return c;
}

VertexSet ring_vertices(int len, int ring) {
    VertexSet s;
    for (int j = 0; j < len; ++j) s.insert(ring_id(len, ring, j));
    return s;
}

VertexSet one_per_ring(int len, int rings, int shift) {
    VertexSet s;
    for (int i = 1; i <= rings; ++i) s.insert(ring_id(len, i, (i * shift) % len));
    return s;
}

std::vector<RuleCase> rule_cases() {
    std::vector<RuleCase> out;
    auto problem = [&](const std::string& name, const RingBuild& b, int k, const VertexSet& r) {
        out.push_back({name, b.graph, b.embedding, first_rings(b.certificate, k + 1), r, k, RuleKind::Problem});
    };
    auto color = [&](const std::string& name, const RingBuild& b, const VertexSet& r) {
        out.push_back({name, b.graph, b.embedding, b.certificate, r, 1, RuleKind::Color});
    };
    {
        RingBuild b = build_ring(3, 3, false, false);
        problem("ring(3,3) R=one outer", b, 1, {ring_id(3, 3, 0)});
        problem("ring(3,3) R=outer ring", b, 1, ring_vertices(3, 3));
    }
    {
        RingBuild b = build_ring(3, 4, false, false);
        problem("ring(3,4) R=one outer", b, 1, {ring_id(4, 3, 0)});
        problem("ring(3,4) R=outer ring", b, 1, ring_vertices(4, 3));
        problem("ring(3,4) R=opposite pair", b, 1, {ring_id(4, 3, 0), ring_id(4, 3, 2)});
    }
    {
        RingBuild b = build_ring(4, 3, false, false);
        problem("ring(4,3) k=1 R=rings 3-4", b, 1, ring_vertices(3, 3).united(ring_vertices(3, 4)));
        problem("ring(4,3) k=1 R=one outer", b, 1, {ring_id(3, 4, 1)});
        problem("ring(4,3) k=1 R=outer ring", b, 1, ring_vertices(3, 4));
        problem("ring(4,3) k=2 R=outer ring", b, 2, ring_vertices(3, 4));
        problem("ring(4,3) k=2 R=outer pair", b, 2, {ring_id(3, 4, 0), ring_id(3, 4, 1)});
    }
    {
        RingBuild b = build_ring(4, 3, true, false);
        problem("ring(4,3)+outer k=1 R={z}", b, 1, {b.outer});
        problem("ring(4,3)+outer k=2 R={z,outer vertex}", b, 2, {b.outer, ring_id(3, 4, 2)});
        problem("ring(4,3)+outer k=2 R=outer ring+z", b, 2, ring_vertices(3, 4).united({b.outer}));
    }
    {
        RingBuild b = build_ring(3, 4, true, false);
        problem("ring(3,4)+outer k=1 R={z}", b, 1, {b.outer});
        problem("ring(3,4)+outer k=1 R=outer ring+z", b, 1, ring_vertices(4, 3).united({b.outer}));
    }
    {
        RingBuild b = build_ring(4, 3, false, false);
        color("ring(4,3) color R=one per ring", b, one_per_ring(3, 4, 0));
        color("ring(4,3) color R=diagonal", b, one_per_ring(3, 4, 1));
        color("ring(4,3) color R=all rings", b, b.certificate.concentric.closed(4).minus({0}));
        color("ring(4,3) color R=V", b, all_vertices(b.graph));
        color("ring(4,3) color R=center+one per ring", b, one_per_ring(3, 4, 2).united({0}));
    }
    {
        RingBuild b = build_ring(4, 3, true, false);
        color("ring(4,3)+outer color R=z+one per ring", b, one_per_ring(3, 4, 1).united({b.outer}));
    }
    {
        RingBuild b = build_ring(4, 3, false, true);
        color("ring(4,3)+pendant color R=pendant+one per ring", b, one_per_ring(3, 4, 0).united({b.pendant}));
        color("ring(4,3)+pendant color R=V", b, all_vertices(b.graph));
    }
    return out;
}

std::string criterion_irrelevant(SuiteLevel, bool& ok) {
    Tally t;
    DpContext ctx;
    const DpOptions opts = suite_dp_options();
    DpBackend backend = [&](const Graph& h, const VertexSet& hr, int hk) { return solve_pac(h, hr, hk, opts, &ctx).answer; };
    auto cases = rule_cases();
    int deletions = 0, unannotations = 0, no_instances = 0, largest = 0;
    for (const RuleCase& c : cases) {
        largest = std::max(largest, c.graph.num_vertices());
        const bool before = is_yes_pac(c.graph, c.r, c.k);
        const Constants constants = Constants::reduced(c.k);
        try {
            if (c.kind == RuleKind::Problem) {
                VertexSet disk = problem_irrelevant_by_annulus(c.graph, c.embedding, c.r, c.k, c.certificate.concentric,
                                                               constants.penetration);
                for (Vertex v : disk) {
                    bool after = is_yes_pac(c.graph.without_vertex(v), c.r, c.k);
                    ++deletions;
                    t.check(after == before, c.name + " deleting " + std::to_string(v) + " changes the answer");
                }
            } else {
                ColorStepResult res = color_irrelevant_step(c.graph, c.embedding, c.r, c.k, c.certificate, constants, 7, backend);
                if (res.no_instance) {
                    ++no_instances;
                    t.check(!before, c.name + " NoInstance but the oracle says yes");
                } else {
                    VertexSet rest = c.r;
                    rest.erase(res.vertex);
                    ++unannotations;
                    t.check(is_yes_pac(c.graph, rest, c.k) == before,
                            c.name + " un-annotating " + std::to_string(res.vertex) + " changes the answer");
                }
            }
        } catch (const Error& e) {
            t.check(false, c.name + " rule rejected: " + e.what());
        }
    }
    ok = t.failures == 0 && cases.size() >= 20 && largest <= 14 && deletions > 0 && unannotations > 0 && no_instances > 0;
    return "instances=" + std::to_string(cases.size()) + " largest n=" + std::to_string(largest) +
           " deletions=" + std::to_string(deletions) + " unannotations=" + std::to_string(unannotations) +
           " no-instances=" + std::to_string(no_instances) + " " + t.summary();
}

// ---- criterion 7 ------------------------------------------------------------

std::string criterion_pipeline(SuiteLevel level, bool& ok) {
    Tally published, reduced;
    DpContext ctx;
    PipelineConfig base;
    base.dp_width_cap = 7;
    base.non_planar = NonPlanarPolicy::Fallback;
    base.dp_context = &ctx;
    int off_step1 = 0;
    PipelineResult sums;
    auto add = [&](const PipelineResult& r) {
        sums.step1 += r.step1;
        sums.step2 += r.step2;
        sums.step3 += r.step3;
        sums.step4 += r.step4;
        sums.fallback += r.fallback;
    };
    auto cases = master_catalog(level);
    for (const auto& c : cases)
        for (const VertexSet& r : {all_vertices(c.graph), c.half})
            for (int k = 1; k <= 3; ++k) {
                const bool oracle = is_yes_pac(c.graph, r, k);
                const std::string tag = brief(c.graph) + " R=" + set_text(r) + " k=" + std::to_string(k);
                PipelineResult p = pipeline_solve(c.graph, std::nullopt, r, k, base);
                bool only_step1 = p.step1 == 1 && p.step2 == 0 && p.step3 == 0 && p.step4 == 0 && p.fallback == 0;
                if (!only_step1) ++off_step1;
                published.check(p.answer == oracle && only_step1, tag + " published constants answer=" + std::to_string(p.answer) +
                                                                  " oracle=" + std::to_string(oracle) +
                                                                  (only_step1 ? "" : " left Step 1"));
                PipelineConfig cfg = base;
                cfg.constants = Constants::reduced(k);
                PipelineResult q = pipeline_solve(c.graph, std::nullopt, r, k, cfg);
                add(q);
                reduced.check(q.answer == oracle, tag + " reduced constants answer=" + std::to_string(q.answer) +
                                                      " oracle=" + std::to_string(oracle));
            }
    for (const RuleCase& c : rule_cases()) {
        PipelineConfig cfg = base;
        cfg.constants = Constants::reduced(c.k);
        const bool oracle = is_yes_pac(c.graph, c.r, c.k);
        PipelineResult q = pipeline_solve(c.graph, c.embedding, c.r, c.k, cfg);
        add(q);
        reduced.check(q.answer == oracle, c.name + " reduced constants answer=" + std::to_string(q.answer) +
                                              " oracle=" + std::to_string(oracle));
    }
    const bool exercised = sums.step2 > 0 && sums.step3 > 0 && sums.step4 > 0;
    ok = published.failures == 0 && reduced.failures == 0 && exercised && off_step1 == 0;
    return "published: " + published.summary() + "; reduced: " + reduced.summary() + " step1=" + std::to_string(sums.step1) +
           " step2=" + std::to_string(sums.step2) + " step3=" + std::to_string(sums.step3) +
           " step4=" + std::to_string(sums.step4) + " fallback=" + std::to_string(sums.fallback);
}

// ---- criterion 8 ------------------------------------------------------------

std::vector<VertexSet> subsets_of(const VertexSet& s) {
    std::vector<VertexSet> out;
    const auto& m = s.members();
    for (std::uint32_t mask = 0; mask < (1u << m.size()); ++mask) {
        VertexSet x;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask >> i & 1) x.insert(m[i]);
        out.push_back(std::move(x));
    }
    return out;
}

// Independent validity test over raw adjacency: degrees at most 2, edges on
// active vertices only, and either no cycle or exactly one cycle (a
// self-loop, a double edge, a longer cycle, or the vertex-less loop) with
// every other active vertex isolated.
bool brute_valid(const std::vector<Vertex>& active, const std::map<std::pair<int, int>, int>& mult, bool loop) {
    const int n = static_cast<int>(active.size());
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    std::vector<int> comp_edges(static_cast<std::size_t>(n), 0);
    for (const auto& [e, m] : mult) {
        deg[static_cast<std::size_t>(e.first)] += e.first == e.second ? 2 * m : m;
        if (e.first != e.second) deg[static_cast<std::size_t>(e.second)] += m;
        parent[static_cast<std::size_t>(find(e.first))] = find(e.second);
    }
    for (int d : deg)
        if (d > 2) return false;
    for (const auto& [e, m] : mult) comp_edges[static_cast<std::size_t>(find(e.first))] += m;
    std::vector<int> comp_size(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) ++comp_size[static_cast<std::size_t>(find(i))];
    int cycles = loop ? 1 : 0;
    bool has_path = false;
    for (int i = 0; i < n; ++i) {
        if (find(i) != i || comp_edges[static_cast<std::size_t>(i)] == 0) continue;
        if (comp_edges[static_cast<std::size_t>(i)] == comp_size[static_cast<std::size_t>(i)])
            ++cycles;
        else
            has_path = true;
    }
    if (cycles > 1) return false;
    return !(cycles == 1 && has_path);
}

std::uint64_t brute_count(int w) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < w; ++a)
        for (int b = a; b < w; ++b) slots.emplace_back(a, b);
    std::uint64_t total = 0;
    for (std::uint32_t active_mask = 0; active_mask < (1u << w); ++active_mask) {
        std::vector<Vertex> active_ids;
        for (int i = 0; i < w; ++i) active_ids.push_back(i);
        // Multiplicities 0..2 on pairs, 0..1 on self-loops, over active ends.
        std::vector<int> mult(slots.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t s) {
            if (s == slots.size()) {
                std::map<std::pair<int, int>, int> m;
                for (std::size_t i = 0; i < slots.size(); ++i)
                    if (mult[i]) m[slots[i]] = mult[i];
                for (bool loop : {false, true})
                    if (brute_valid(active_ids, m, loop)) ++total;
                return;
            }
            const auto [a, b] = slots[s];
            const bool allowed = (active_mask >> a & 1) && (active_mask >> b & 1);
            const int top = !allowed ? 0 : a == b ? 1 : 2;
            for (int x = 0; x <= top; ++x) {
                mult[s] = x;
                rec(s + 1);
            }
            mult[s] = 0;
        };
        rec(0);
    }
    return total;
}

std::string criterion_pairings(SuiteLevel level, bool& ok) {
    Tally t;
    const int max_bag = 3;
    std::int64_t oplus_pairs = 0;
    // Adjointness over X_s of size <= 3, v = 9, every neighborhood N ⊆ X_s,
    // every aux over (v, N) and every L ⊆ X_t.
    const Vertex v = 9;
    for (int s = 0; s <= max_bag; ++s) {
        VertexSet xs;
        for (int i = 0; i < s; ++i) xs.insert(i);
        VertexSet xt = xs.united({v});
        const auto ps = enumerate_pairings(xs);
        const bool full_zeta = static_cast<int>(xt.size()) <= max_bag;
        const auto lifts = subsets_of(xt);
        for (const VertexSet& nb : subsets_of(xs)) {
            const auto auxes = enumerate_aux(v, nb);
            for (const VertexSet& lift_set : lifts) {
                if (level == SuiteLevel::Quick && s == max_bag && lift_set.size() > 1) continue;
                std::map<Pairing, std::set<Pairing>> forward;
                for (const Pairing& p : ps)
                    for (const AuxGraph& aux : auxes)
                        for (Pairing& q : oplus(p, aux, lift_set, xt)) {
                            forward[q].insert(p);
                            ++oplus_pairs;
                        }
                std::map<Pairing, std::set<Pairing>> memo;
                auto zeta_of = [&](const Pairing& q) -> const std::set<Pairing>& {
                    auto it = memo.find(q);
                    if (it != memo.end()) return it->second;
                    auto z = zeta(q, lift_set, v, nb, xs);
                    return memo.emplace(q, std::set<Pairing>(z.begin(), z.end())).first->second;
                };
                const std::string tag = "X_s=" + set_text(xs) + " N=" + set_text(nb) + " L=" + set_text(lift_set);
                for (const auto& [q, sources] : forward) {
                    const auto& z = zeta_of(q);
                    for (const Pairing& p : sources)
                        t.check(z.count(p) == 1, tag + " p=" + to_string(p) + " missing from zeta(" + to_string(q) + ")");
                }
                if (full_zeta)
                    for (const Pairing& q : enumerate_pairings(xt)) {
                        auto it = forward.find(q);
                        const std::set<Pairing> want = it == forward.end() ? std::set<Pairing>{} : it->second;
                        t.check(zeta_of(q) == want, tag + " zeta(" + to_string(q) + ") differs from inverted oplus");
                    }
            }
        }
    }
    // xi: symmetric, sound and complete against all pairs over the bag.
    std::int64_t xi_pairs = 0;
    for (int s = 0; s <= max_bag; ++s) {
        VertexSet w;
        for (int i = 0; i < s; ++i) w.insert(i);
        const auto ps = enumerate_pairings(w);
        for (const Pairing& p : ps) {
            auto pairs = xi(p);
            std::set<std::pair<Pairing, Pairing>> got(pairs.begin(), pairs.end());
            xi_pairs += static_cast<std::int64_t>(got.size());
            std::set<std::pair<Pairing, Pairing>> want;
            for (const Pairing& a : ps)
                for (const Pairing& b : ps) {
                    auto u = unite(a, b);
                    if (u && *u == p) want.emplace(a, b);
                }
            t.check(got == want, "xi(" + to_string(p) + ") differs from brute force");
            for (const auto& [a, b] : got) t.check(got.count({b, a}) == 1, "xi(" + to_string(p) + ") not symmetric");
        }
    }
    // Counts against an independent enumeration over adjacency structures.
    std::string counts;
    for (int s = 0; s <= 4; ++s) {
        VertexSet w;
        for (int i = 0; i < s; ++i) w.insert(i);
        const std::uint64_t brute = brute_count(s);
        const std::uint64_t listed = enumerate_pairings(w).size();
        t.check(brute == listed && listed == count_pairings(s),
                "|P(" + std::to_string(s) + ")" + "| listed=" + std::to_string(listed) + " brute=" + std::to_string(brute) +
                    " closed form=" + std::to_string(count_pairings(s)));
        counts += (counts.empty() ? "" : ",") + std::to_string(brute);
    }
    ok = t.failures == 0;
    return "oplus images=" + std::to_string(oplus_pairs) + " xi pairs=" + std::to_string(xi_pairs) + " |P(0..4)|=" + counts +
           " " + t.summary();
}

struct CriterionDef {
    const char* name;
    double limit;
    std::string (*run)(SuiteLevel, bool&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"oracle/DP equivalence", 600, criterion_oracle_dp},
    {"Hamiltonicity and cyclability characterizations", 60, criterion_characterizations},
    {"Dirac bound on k-connected graphs", 300, criterion_dirac},
    {"clique reduction witness and splitness", 300, criterion_clique_reduction},
    {"cross-composition equivalence", 600, criterion_cross_composition},
    {"irrelevant-vertex rule soundness", 600, criterion_irrelevant},
    {"pipeline consistency", 900, criterion_pipeline},
    {"pairings algebra", 120, criterion_pairings},
};

}  // namespace

CriterionResult run_criterion(int id, SuiteLevel level) {
    if (id < 1 || id > kCriterionCount) fail(ErrorKind::Parameter, "criterion id must be in 1..8");
    const CriterionDef& def = kCriteria[id - 1];
    CriterionResult out;
    out.id = id;
    out.name = def.name;
    out.limit_seconds = def.limit;
    const auto start = Clock::now();
    bool ok = false;
    try {
        out.detail = def.run(level, ok);
    } catch (const std::exception& e) {
        ok = false;
        out.detail = std::string("error: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.passed = ok && out.seconds <= out.limit_seconds;
    if (ok && !out.passed) out.detail += " (over the time limit)";
    return out;
}

std::vector<CriterionResult> run_suite(SuiteLevel level, const std::vector<int>& ids, const CriterionCallback& on_result) {
    std::vector<int> order = ids;
    if (order.empty())
        for (int i = 1; i <= kCriterionCount; ++i) order.push_back(i);
    std::vector<CriterionResult> out;
    for (int id : order) {
        out.push_back(run_criterion(id, level));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& result) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "criterion " << result.id << ' ' << (result.passed ? "PASS" : "FAIL") << ' ' << result.name << ": "
       << result.detail << " (" << result.seconds << " s)";
    return os.str();
}

}  // namespace cyc
