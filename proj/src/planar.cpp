#include "cyc/planar.hpp"

#include <algorithm>
#include <sstream>

#include "cyc/dense.hpp"
#include "cyc/dp.hpp"

namespace cyc {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits(static_cast<std::size_t>((n + 63) / 64), 0); }
void set_bit(Bits& b, int i) { b[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64); }
bool subset_of(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

class StepBudget {
public:
    explicit StepBudget(std::int64_t limit) : limit_(limit) {}
    void tick(const char* what) {
        if (++steps_ > limit_) fail(ErrorKind::Budget, std::string(what) + ": search step budget exceeded");
    }

private:
    std::int64_t limit_;
    std::int64_t steps_ = 0;
};

// Simple cycles of length >= 3 avoiding `forbidden`, each listed once,
// starting at its smallest vertex with the smaller neighbor second.
std::vector<Cycle> enumerate_cycles(const Graph& g, const VertexSet& forbidden, const SearchBudget& budget,
                                    StepBudget& steps) {
    DenseGraph d(g);
    std::vector<bool> banned(static_cast<std::size_t>(d.n), false);
    for (Vertex v : forbidden) {
        int i = d.index_of(v);
        if (i >= 0) banned[static_cast<std::size_t>(i)] = true;
    }
    std::vector<Cycle> out;
    std::vector<int> path;
    std::vector<bool> on(static_cast<std::size_t>(d.n), false);
    for (int s = 0; s < d.n; ++s) {
        if (banned[static_cast<std::size_t>(s)]) continue;
        path.assign(1, s);
        on[static_cast<std::size_t>(s)] = true;
        // Iterative DFS over (vertex, next neighbor slot).
        std::vector<std::size_t> slot(1, 0);
        while (!path.empty()) {
            int x = path.back();
            const auto& row = d.adj[static_cast<std::size_t>(x)];
            std::size_t& i = slot.back();
            if (i == row.size()) {
                on[static_cast<std::size_t>(x)] = false;
                path.pop_back();
                slot.pop_back();
                continue;
            }
            int y = row[i++];
            steps.tick("cycle enumeration");
            if (y == s && path.size() >= 3 && path[1] < path.back()) {
                Cycle c;
                for (int p : path) c.vertices.push_back(d.id[static_cast<std::size_t>(p)]);
                out.push_back(std::move(c));
                if (static_cast<std::int64_t>(out.size()) > budget.max_cycles)
                    fail(ErrorKind::Budget, "cycle enumeration exceeded " + std::to_string(budget.max_cycles) + " cycles");
                continue;
            }
            if (y <= s || on[static_cast<std::size_t>(y)] || banned[static_cast<std::size_t>(y)]) continue;
            on[static_cast<std::size_t>(y)] = true;
            path.push_back(y);
            slot.push_back(0);
        }
    }
    return out;
}

struct RegionInfo {
    Cycle cycle;
    DiskRegion region;
    Bits on;
    Bits inside;
};

std::vector<RegionInfo> regions_of(const Graph& g, const Embedding& emb, const FaceSet& faces,
                                   std::vector<Cycle> cycles, int outer_face) {
    const auto& vs = g.vertices();
    auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    std::vector<RegionInfo> out;
    for (auto& c : cycles) {
        auto region = disk_region(g, emb, faces, c, outer_face);
        if (!region) continue;
        RegionInfo info{std::move(c), std::move(*region), make_bits(g.num_vertices()), make_bits(g.num_vertices())};
        for (Vertex v : info.cycle.vertices) set_bit(info.on, idx(v));
        for (Vertex v : info.region.inside) set_bit(info.inside, idx(v));
        out.push_back(std::move(info));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const RegionInfo& a, const RegionInfo& b) { return a.region.inside.size() < b.region.inside.size(); });
    return out;
}

ConcentricCertificate certificate_of(const std::vector<RegionInfo>& infos, const std::vector<int>& chain, int outer) {
    ConcentricCertificate cert;
    cert.outer_face = outer;
    for (int i : chain) {
        cert.cycles.push_back(infos[static_cast<std::size_t>(i)].cycle);
        cert.inside.push_back(infos[static_cast<std::size_t>(i)].region.inside);
    }
    return cert;
}

// Rails from C_1 to C_r inside the annulus, each meeting every cycle in one
// subpath of that cycle.
class RailSearch {
public:
    RailSearch(const Graph& g, const FaceSet& faces, const std::vector<DiskRegion>& regions,
               const ConcentricCertificate& cert, StepBudget& steps)
        : d_(g), steps_(steps), r_(cert.size()) {
        const int n = d_.n;
        ring_.assign(static_cast<std::size_t>(n), -1);
        ring_pos_.assign(static_cast<std::size_t>(n), -1);
        for (int c = 0; c < r_; ++c) {
            const auto& vs = cert.cycles[static_cast<std::size_t>(c)].vertices;
            ring_len_.push_back(static_cast<int>(vs.size()));
            for (std::size_t p = 0; p < vs.size(); ++p) {
                int x = d_.index_of(vs[p]);
                ring_[static_cast<std::size_t>(x)] = c;
                ring_pos_[static_cast<std::size_t>(x)] = static_cast<int>(p);
            }
        }
        VertexSet allowed = cert.annulus(1, r_);
        allowed_.assign(static_cast<std::size_t>(n), false);
        for (Vertex v : allowed) allowed_[static_cast<std::size_t>(d_.index_of(v))] = true;
        std::vector<bool> disk_edge(static_cast<std::size_t>(g.num_edges()), false);
        for (int e : regions.back().edges) disk_edge[static_cast<std::size_t>(e)] = true;
        const auto& inner = regions.front();
        nbrs_.assign(static_cast<std::size_t>(n), {});
        for (int e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
            if (ed.is_loop() || !disk_edge[static_cast<std::size_t>(e)]) continue;
            bool in0 = inner.interior_face[static_cast<std::size_t>(faces.face_of_dart[static_cast<std::size_t>(2 * e)])];
            bool in1 = inner.interior_face[static_cast<std::size_t>(faces.face_of_dart[static_cast<std::size_t>(2 * e + 1)])];
            if (in0 && in1) continue;
            int a = d_.index_of(ed.u), b = d_.index_of(ed.v);
            if (!allowed_[static_cast<std::size_t>(a)] || !allowed_[static_cast<std::size_t>(b)]) continue;
            nbrs_[static_cast<std::size_t>(a)].push_back(b);
            nbrs_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& row : nbrs_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
        used_.assign(static_cast<std::size_t>(n), false);
    }

    std::optional<std::vector<std::vector<Vertex>>> run(int q) {
        rails_.clear();
        if (place(q, 0)) return rails_;
        return std::nullopt;
    }

private:
    bool ring_step(int a, int b) const {
        int c = ring_[static_cast<std::size_t>(a)];
        int len = ring_len_[static_cast<std::size_t>(c)];
        int pa = ring_pos_[static_cast<std::size_t>(a)], pb = ring_pos_[static_cast<std::size_t>(b)];
        return (pa + 1) % len == pb || (pb + 1) % len == pa;
    }

    bool place(int q, int min_start) {
        if (static_cast<int>(rails_.size()) == q) return true;
        for (int s = min_start; s < d_.n; ++s) {
            if (ring_[static_cast<std::size_t>(s)] != 0 || used_[static_cast<std::size_t>(s)]) continue;
            path_.assign(1, s);
            used_[static_cast<std::size_t>(s)] = true;
            std::vector<bool> closed(static_cast<std::size_t>(r_), false);
            if (extend(closed, q, s)) return true;
            used_[static_cast<std::size_t>(s)] = false;
        }
        return false;
    }

    bool extend(std::vector<bool>& closed, int q, int start) {
        steps_.tick("rail search");
        int x = path_.back();
        int cx = ring_[static_cast<std::size_t>(x)];
        if (cx == r_ - 1) {
            std::vector<Vertex> rail;
            for (int p : path_) rail.push_back(d_.id[static_cast<std::size_t>(p)]);
            rails_.push_back(std::move(rail));
            std::vector<int> saved = path_;
            if (place(q, start + 1)) return true;
            path_ = std::move(saved);
            rails_.pop_back();
            return false;
        }
        for (int y : nbrs_[static_cast<std::size_t>(x)]) {
            if (used_[static_cast<std::size_t>(y)]) continue;
            int cy = ring_[static_cast<std::size_t>(y)];
            if (cy >= 0 && closed[static_cast<std::size_t>(cy)]) continue;
            if (cy >= 0 && cy == cx && !ring_step(x, y)) continue;
            bool closes = cx >= 0 && cy != cx;
            if (closes) closed[static_cast<std::size_t>(cx)] = true;
            used_[static_cast<std::size_t>(y)] = true;
            path_.push_back(y);
            if (extend(closed, q, start)) return true;
            path_.pop_back();
            used_[static_cast<std::size_t>(y)] = false;
            if (closes) closed[static_cast<std::size_t>(cx)] = false;
        }
        return false;
    }

    DenseGraph d_;
    StepBudget& steps_;
    int r_;
    std::vector<int> ring_, ring_pos_, ring_len_;
    std::vector<bool> allowed_, used_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> path_;
    std::vector<std::vector<Vertex>> rails_;
};

VertexSet present(const Graph& g, const VertexSet& r) {
    std::vector<Vertex> out;
    for (Vertex v : r)
        if (g.has_vertex(v)) out.push_back(v);
    return VertexSet(std::move(out));
}

int exact_or_heuristic_width(const Graph& g, int budget, bool& exact) {
    exact = g.num_vertices() <= kExactTreewidthMaxVertices;
    if (!exact) return heuristic_treewidth(g).width;
    auto tw = exact_treewidth(g, budget);
    return tw ? tw->width : budget + 1;
}

std::string set_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

std::int64_t wall_vertex_count(std::int64_t h) { return 2 * (h + 1) * (h + 1) - 2; }

Constants Constants::published(int k) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    Constants c;
    const std::int64_t kk = k;
    c.r = 98 * kk * kk + 2 * kk;
    c.y = 16 * kk;
    c.q = 2 * c.y + 4 * c.r;
    c.b = 98 * kk + 2;
    c.density = 32 * kk;
    c.rails = 2 * kk + 1;
    c.penetration = 16 * kk;
    c.w_lo = kk + 1;
    c.w_hi = 33 * kk + 1;
    c.width = 18 * c.q;
    return c;
}

Constants Constants::reduced(int k) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    Constants c;
    const std::int64_t kk = k;
    c.r = 2 * kk + 2;
    c.y = kk + 1;
    c.b = 2 * kk + 1;
    c.density = std::max<std::int64_t>(kk, 1);
    c.rails = 2 * kk + 1;
    c.penetration = kk + 1;
    c.w_lo = kk + 1;
    c.w_hi = 2 * kk + 1;
    c.q = 2 * c.y + 4 * c.r;
    c.width = 2;
    return c;
}

Constants Constants::with_overrides(const std::string& overrides) const {
    Constants c = *this;
    std::istringstream in(overrides);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) fail(ErrorKind::Parameter, "constant override '" + item + "' needs key=value");
        std::string key = item.substr(0, eq);
        std::int64_t value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(ErrorKind::Parameter, "constant override '" + item + "' has a non-integer value");
        }
        std::int64_t* slot = key == "r"             ? &c.r
                             : key == "y"           ? &c.y
                             : key == "q"           ? &c.q
                             : key == "b"           ? &c.b
                             : key == "density"     ? &c.density
                             : key == "rails"       ? &c.rails
                             : key == "penetration" ? &c.penetration
                             : key == "w_lo"        ? &c.w_lo
                             : key == "w_hi"        ? &c.w_hi
                             : key == "width"       ? &c.width
                                                    : nullptr;
        if (!slot) fail(ErrorKind::Parameter, "unknown constant '" + key + "'");
        *slot = value;
    }
    return c;
}

std::string Constants::to_string() const {
    std::ostringstream os;
    os << "r=" << r << ",y=" << y << ",q=" << q << ",b=" << b << ",density=" << density << ",rails=" << rails
       << ",penetration=" << penetration << ",w_lo=" << w_lo << ",w_hi=" << w_hi << ",width=" << width;
    return os.str();
}

VertexSet problem_irrelevant_by_annulus(const Graph& g, const Embedding& emb, const VertexSet& r, int k,
                                        ConcentricCertificate cert, std::int64_t penetration) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    ValidationReport report = verify_concentric(g, emb, cert);
    if (!report.ok)
        fail(ErrorKind::Precondition, "certificate does not verify: " + report.violations.front());
    if (cert.size() < penetration)
        fail(ErrorKind::Precondition, "r >= " + std::to_string(penetration) + " fails: r = " + std::to_string(cert.size()));
    VertexSet hit = cert.closed(cert.size()).intersected(r);
    if (!hit.empty())
        fail(ErrorKind::Precondition, "V(C^_r) ∩ R must be empty; contains " + std::to_string(*hit.begin()));
    return cert.closed(1);
}

ColorStepResult color_irrelevant_step(const Graph& g, const Embedding& emb, const VertexSet& r, int k,
                                      RailedAnnulusCertificate cert, const Constants& constants, int width_cap,
                                      const DpBackend& backend) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    ValidationReport report = verify_railed_annulus(g, emb, cert);
    if (!report.ok)
        fail(ErrorKind::Precondition, "railed annulus does not verify: " + report.violations.front());
    const auto& cc = cert.concentric;
    const std::int64_t rr = cc.size();
    if (rr < constants.b + 1)
        fail(ErrorKind::Precondition, "r >= b+1 fails: r = " + std::to_string(rr) + ", b = " + std::to_string(constants.b));
    if (static_cast<std::int64_t>(cert.rails.size()) < constants.rails)
        fail(ErrorKind::Precondition, "needs " + std::to_string(constants.rails) + " rails, has " +
                                          std::to_string(cert.rails.size()));
    VertexSet core = cc.closed(1).intersected(r);
    if (core.empty()) fail(ErrorKind::Precondition, "V(C^_1) ∩ R is empty");
    if (constants.density < 1 || constants.density > rr || !is_q_dense(r, cc, static_cast<int>(constants.density)))
        fail(ErrorKind::Precondition, "R is not " + std::to_string(constants.density) + "-dense in the cycles");
    if (constants.w_lo < 1 || constants.w_lo > constants.w_hi || constants.w_hi > constants.b)
        fail(ErrorKind::Precondition, "w_i range must satisfy 1 <= w_lo <= w_hi <= b");

    ColorStepResult out;
    FaceSet faces = compute_faces(g, emb);
    for (std::int64_t i = 1; i <= rr - constants.b; ++i) {
        const int lo = static_cast<int>(i + constants.w_lo), hi = static_cast<int>(i + constants.w_hi);
        VertexSet pool = cc.annulus(lo, hi).intersected(r);
        if (pool.empty())
            fail(ErrorKind::Precondition, "no w_" + std::to_string(i) + " in A^_{" + std::to_string(lo) + "," +
                                              std::to_string(hi) + "} ∩ R");
        Vertex w = *pool.begin();
        out.witnesses.push_back(w);
        VertexSet ri = r.intersected(cc.closed(static_cast<int>(i)));
        ri.insert(w);
        const int crop = static_cast<int>(i + constants.b);
        auto region = disk_region(g, emb, faces, cc.cycles[static_cast<std::size_t>(crop - 1)], cc.outer_face);
        Graph cropped = disk_subgraph(g, *region);
        bool exact = false;
        int tw = exact_or_heuristic_width(cropped, width_cap, exact);
        if (tw > width_cap)
            fail(ErrorKind::Precondition, "C^_" + std::to_string(crop) + " exceeds the width cap " + std::to_string(width_cap));
        bool answer = false;
        try {
            answer = backend(cropped, ri, k);
        } catch (const std::exception& e) {
            fail(ErrorKind::Backend, std::string("cropped DP failed: ") + e.what());
        }
        out.trace.push_back("step3 i=" + std::to_string(i) + " crop=C^_" + std::to_string(crop) + " n=" +
                            std::to_string(cropped.num_vertices()) + " w=" + std::to_string(w) + " R_i=" +
                            set_string(ri) + " answer=" + (answer ? "YES" : "NO"));
        if (!answer) {
            out.no_instance = true;
            out.failed_index = static_cast<int>(i);
            return out;
        }
    }
    out.vertex = *core.begin();
    return out;
}

std::optional<ConcentricCertificate> find_concentric_r_free(const Graph& g, const Embedding& emb,
                                                            const VertexSet& r, int y, const SearchBudget& budget) {
    if (y < 1) fail(ErrorKind::Parameter, "y must be positive");
    const VertexSet rp = present(g, r);
    if (g.num_edges() == 0 || !is_connected(g)) return std::nullopt;
    if (g.num_vertices() - static_cast<std::int64_t>(rp.size()) < 3 * static_cast<std::int64_t>(y)) return std::nullopt;
    FaceSet faces = compute_faces(g, emb);
    StepBudget steps(budget.max_steps);
    auto infos = regions_of(g, emb, faces, enumerate_cycles(g, rp, budget, steps), emb.outer_face);
    infos.erase(std::remove_if(infos.begin(), infos.end(),
                               [&](const RegionInfo& x) { return !x.region.closed.intersected(rp).empty(); }),
                infos.end());
    const std::size_t n = infos.size();
    std::vector<int> best(n, 1), pred(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            steps.tick("concentric search");
            if (best[j] + 1 > best[i] && subset_of(infos[j].on, infos[i].inside)) {
                best[i] = best[j] + 1;
                pred[i] = static_cast<int>(j);
            }
        }
        if (best[i] >= y) {
            std::vector<int> chain;
            for (int c = static_cast<int>(i); c >= 0 && static_cast<int>(chain.size()) < y; c = pred[static_cast<std::size_t>(c)])
                chain.push_back(c);
            std::reverse(chain.begin(), chain.end());
            ConcentricCertificate cert = certificate_of(infos, chain, emb.outer_face);
            if (verify_concentric(g, emb, cert).ok) return cert;
        }
    }
    return std::nullopt;
}

std::optional<RailedAnnulusCertificate> find_railed_annulus(const Graph& g, const Embedding& emb,
                                                            const VertexSet& r, int cycles, int density,
                                                            int rails, const SearchBudget& budget) {
    if (cycles < 1 || density < 1 || density > cycles || rails < 0)
        fail(ErrorKind::Parameter, "railed annulus search needs 1 <= density <= cycles and rails >= 0");
    const VertexSet rp = present(g, r);
    if (g.num_edges() == 0 || !is_connected(g)) return std::nullopt;
    if (g.num_vertices() < 3 * static_cast<std::int64_t>(cycles) || rp.empty()) return std::nullopt;
    FaceSet faces = compute_faces(g, emb);
    StepBudget steps(budget.max_steps);
    auto infos = regions_of(g, emb, faces, enumerate_cycles(g, {}, budget, steps), emb.outer_face);
    const std::size_t n = infos.size();
    std::vector<int> chain;
    std::optional<RailedAnnulusCertificate> found;
    // Grows chains outward from an innermost cycle whose disk meets R.
    std::function<bool()> grow = [&]() -> bool {
        steps.tick("railed annulus search");
        if (static_cast<int>(chain.size()) == cycles) {
            RailedAnnulusCertificate cert;
            cert.concentric = certificate_of(infos, chain, emb.outer_face);
            if (!is_q_dense(rp, cert.concentric, density)) return false;
            std::vector<DiskRegion> regions;
            for (int c : chain) regions.push_back(infos[static_cast<std::size_t>(c)].region);
            RailSearch rs(g, faces, regions, cert.concentric, steps);
            auto found_rails = rs.run(rails);
            if (!found_rails) return false;
            cert.rails = std::move(*found_rails);
            if (!verify_railed_annulus(g, emb, cert).ok) return false;
            found = std::move(cert);
            return true;
        }
        const auto& cur = infos[static_cast<std::size_t>(chain.back())];
        for (std::size_t j = static_cast<std::size_t>(chain.back()) + 1; j < n; ++j) {
            if (!subset_of(cur.on, infos[j].inside)) continue;
            chain.push_back(static_cast<int>(j));
            if (grow()) return true;
            chain.pop_back();
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (infos[i].region.closed.intersected(rp).empty()) continue;
        chain.assign(1, static_cast<int>(i));
        if (grow()) return found;
    }
    return std::nullopt;
}

std::optional<std::vector<std::vector<Vertex>>> find_rails(const Graph& g, const Embedding& emb,
                                                           ConcentricCertificate cert, int q,
                                                           const SearchBudget& budget) {
    if (q < 0) fail(ErrorKind::Parameter, "rail count must be non-negative");
    ValidationReport report = verify_concentric(g, emb, cert);
    if (!report.ok) fail(ErrorKind::Precondition, "certificate does not verify: " + report.violations.front());
    FaceSet faces = compute_faces(g, emb);
    std::vector<DiskRegion> regions;
    for (const auto& c : cert.cycles) regions.push_back(*disk_region(g, emb, faces, c, cert.outer_face));
    StepBudget steps(budget.max_steps);
    RailSearch rs(g, faces, regions, cert, steps);
    return rs.run(q);
}

PipelineResult pipeline_solve(const Graph& g, const std::optional<Embedding>& emb, const VertexSet& r, int k,
                              const PipelineConfig& config) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    PipelineResult out;
    Graph cur = g;
    VertexSet cur_r = present(g, r);
    std::optional<Embedding> cur_emb = emb;
    bool planarity_known = emb.has_value();
    DpContext own_ctx;
    DpContext& ctx = config.dp_context ? *config.dp_context : own_ctx;
    DpOptions dp_options;
    dp_options.width_cap = config.dp_width_cap;
    auto dp_backend = [&](const Graph& h, const VertexSet& hr, int hk) {
        return solve_pac(h, hr, hk, dp_options, &ctx).answer;
    };

    for (int round = 0; round < config.max_rounds; ++round) {
        const Constants c = config.constants ? *config.constants : Constants::published(k);
        std::vector<std::string> skipped;

        // Step 1: a decomposition of acceptable width decides by DP.
        const int budget = static_cast<int>(std::min<std::int64_t>(c.width, config.dp_width_cap));
        bool exact = false;
        int tw = exact_or_heuristic_width(cur, budget, exact);
        if (tw <= budget) {
            auto res = solve_pac(cur, cur_r, k, dp_options, &ctx);
            out.answer = res.answer;
            out.step1 += 1;
            out.trace.push_back("step1 n=" + std::to_string(cur.num_vertices()) + " tw=" + std::to_string(tw) +
                                " answer=" + (res.answer ? "YES" : "NO"));
            return out;
        }
        skipped.push_back("step1: width above " + std::to_string(budget));
        if (k == 0 || static_cast<int>(cur_r.size()) < k) {
            out.trace.push_back("trivial |R|=" + std::to_string(cur_r.size()) + " < k or k = 0 answer=YES");
            out.answer = true;
            return out;
        }

        if (!planarity_known) {
            cur_emb = planar_embedding(cur);
            planarity_known = true;
        }
        if (!cur_emb) {
            if (config.non_planar == NonPlanarPolicy::Reject)
                fail(ErrorKind::NotPlanar, "graph is not planar and Step 1 did not apply");
            skipped.push_back("steps 2-4: not planar");
        } else {
            // Step 2: R-free concentric cycles certify a deletable vertex.
            try {
                auto cert = find_concentric_r_free(cur, *cur_emb, cur_r, static_cast<int>(std::max<std::int64_t>(c.y, 1)), config.search);
                if (cert) {
                    VertexSet disk = problem_irrelevant_by_annulus(cur, *cur_emb, cur_r, k, *cert, c.penetration);
                    const VertexSet& strict = cert->inside.front();
                    Vertex v = strict.empty() ? *disk.begin() : *strict.begin();
                    Graph next = cur.without_vertex(v);
                    cur_emb = restrict_embedding(cur, *cur_emb, next);
                    cur = std::move(next);
                    cur_r.erase(v);
                    out.step2 += 1;
                    out.trace.push_back("step2 cycles=" + std::to_string(cert->size()) + " delete v=" + std::to_string(v));
                    continue;
                }
                skipped.push_back("step2: no R-free concentric cycles");
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Budget && e.kind() != ErrorKind::Precondition) throw;
                skipped.push_back(std::string("step2: ") + e.what());
            }

            // Steps 3-4: cropped DPs over a railed annulus.
            try {
                if (c.r > cur.num_vertices() || c.density > c.r) throw Error(ErrorKind::Precondition, "annulus larger than the graph");
                auto railed = find_railed_annulus(cur, *cur_emb, cur_r, static_cast<int>(c.r), static_cast<int>(c.density),
                                                  static_cast<int>(c.rails), config.search);
                if (railed) {
                    ColorStepResult step = color_irrelevant_step(cur, *cur_emb, cur_r, k, *railed, c, config.dp_width_cap, dp_backend);
                    out.step3 += static_cast<int>(step.trace.size());
                    out.trace.insert(out.trace.end(), step.trace.begin(), step.trace.end());
                    out.step4 += 1;
                    if (step.no_instance) {
                        out.trace.push_back("step4 cropped DP " + std::to_string(step.failed_index) + " negative answer=NO");
                        out.answer = false;
                        return out;
                    }
                    cur_r.erase(step.vertex);
                    out.trace.push_back("step4 unannotate v=" + std::to_string(step.vertex));
                    continue;
                }
                skipped.push_back("steps 3-4: no railed annulus");
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Budget && e.kind() != ErrorKind::Precondition) throw;
                skipped.push_back(std::string("steps 3-4: ") + e.what());
            }
        }

        std::string why;
        for (const auto& s : skipped) why += (why.empty() ? "" : "; ") + s;
        try {
            out.answer = is_yes_pac(cur, cur_r, k, config.oracle);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Budget) throw;
            std::string partial;
            for (const auto& t : out.trace) partial += "\n  " + t;
            fail(ErrorKind::Budget, std::string(e.what()) + " after skipping (" + why + "); trace:" + partial);
        }
        out.fallback += 1;
        out.trace.push_back("fallback oracle answer=" + std::string(out.answer ? "YES" : "NO") + " skipped: " + why);
        return out;
    }
    fail(ErrorKind::Budget, "pipeline exceeded " + std::to_string(config.max_rounds) + " rounds");
}

}  // namespace cyc
