#include "cyc/dp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pairing_code.hpp"

namespace cyc {

using detail::PCode;

namespace {

struct Info {
    std::uint16_t present = 0;
    std::uint16_t deg0 = 0;  // present, degree 0
    std::uint16_t deg1 = 0;
    std::uint16_t deg2 = 0;
    std::uint16_t cyc = 0;   // positions on a cycle
    std::uint8_t has_cycle = 0;  // bag cycle or vertex-less loop
    std::uint8_t loop = 0;
};

Info make_info(const PCode& c) {
    Info f;
    f.present = c.present;
    f.loop = c.loop;
    for (int i = 0; i < c.size; ++i) {
        int d = c.degree(i);
        std::uint16_t bit = static_cast<std::uint16_t>(1u << i);
        if (c.is_present(i) && d == 0) f.deg0 |= bit;
        if (d == 1) f.deg1 |= bit;
        if (d == 2) f.deg2 |= bit;
    }
    int cycles = 0;
    f.cyc = detail::cycle_positions(c, &cycles);
    f.has_cycle = static_cast<std::uint8_t>(cycles > 0 || c.loop);
    return f;
}

struct Space {
    std::vector<PCode> codes;
    std::vector<Info> info;
    std::unordered_map<PCode, int, detail::PCodeHash> index;

    int intern(const PCode& c) {
        auto [it, fresh] = index.try_emplace(c, static_cast<int>(codes.size()));
        if (fresh) {
            codes.push_back(c);
            info.push_back(make_info(c));
        }
        return it->second;
    }
};

struct Key {
    std::uint64_t a = 0, b = 0;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = k.a * 0x9E3779B97F4A7C15ull ^ (k.b + 0x632BE59BD9B4E019ull + (k.a << 6) + (k.a >> 2));
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = 1469598103934665603ull ^ v.size();
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

}  // namespace

struct DpContext::Impl {
    std::array<Space, detail::kMaxPositions + 1> spaces;
    std::unordered_map<std::uint64_t, int> forget_cache;
    std::unordered_map<Key, std::vector<int>, KeyHash> insert_cache;
    std::unordered_map<std::uint64_t, int> join_cache;
    std::size_t cache_limit = 6'000'000;

    void trim() {
        if (forget_cache.size() > cache_limit) forget_cache.clear();
        if (insert_cache.size() > cache_limit / 4) insert_cache.clear();
        if (join_cache.size() > cache_limit) join_cache.clear();
    }

    int loop_id() { return spaces[0].intern([] { PCode c(0); c.loop = 1; return c; }()); }
    int empty_id(int m) { return spaces[static_cast<std::size_t>(m)].intern(PCode(m)); }

    // Lift then drop position p; -1 when undefined.
    int forget_image(int m, int p, int id) {
        std::uint64_t key = static_cast<std::uint64_t>(id) << 8 | static_cast<std::uint64_t>(p) << 4 | static_cast<std::uint64_t>(m);
        auto it = forget_cache.find(key);
        if (it != forget_cache.end()) return it->second;
        const PCode c = spaces[static_cast<std::size_t>(m)].codes[static_cast<std::size_t>(id)];
        int out = -1;
        if (auto lifted = detail::lift(c, p)) out = spaces[static_cast<std::size_t>(m) - 1].intern(detail::erase_position(*lifted, p));
        forget_cache.emplace(key, out);
        return out;
    }

    // Images over m+1 positions of child code `id` when position p is
    // opened for v. owned: positions (new indexing) v may take edges to.
    // committing: v must be present. lmask: positions lifted afterwards.
    const std::vector<int>& insert_images(int m, int p, std::uint16_t owned, bool committing, std::uint16_t lmask, int id) {
        Key key{static_cast<std::uint64_t>(id) | static_cast<std::uint64_t>(m) << 32 | static_cast<std::uint64_t>(p) << 36 |
                    static_cast<std::uint64_t>(committing) << 40 | static_cast<std::uint64_t>(owned) << 41,
                lmask};
        auto it = insert_cache.find(key);
        if (it != insert_cache.end()) return it->second;
        const PCode c = spaces[static_cast<std::size_t>(m)].codes[static_cast<std::size_t>(id)];
        const PCode base = detail::insert_position(c, p);
        std::vector<PCode> raw;
        if (!committing) raw.push_back(base);
        std::vector<int> nbrs;
        for (int i = 0; i <= m; ++i)
            if (owned >> i & 1) nbrs.push_back(i);
        auto with_edges = [&](std::initializer_list<int> ends) {
            PCode aux(m + 1);
            aux.present = static_cast<std::uint16_t>(1u << p);
            for (int u : ends) {
                aux.present = static_cast<std::uint16_t>(aux.present | (1u << u));
                detail::add_edge(aux, p, u);
            }
            if (auto u = detail::unite(base, aux)) raw.push_back(*u);
        };
        with_edges({});
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            with_edges({nbrs[a]});
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) with_edges({nbrs[a], nbrs[b]});
        }
        if (lmask) {
            // Closure under lifts of lmask positions.
            std::vector<PCode> frontier = raw;
            std::unordered_map<PCode, int, detail::PCodeHash> seen;
            for (const PCode& r : raw) seen.emplace(r, 0);
            while (!frontier.empty()) {
                PCode r = frontier.back();
                frontier.pop_back();
                for (int i = 0; i <= m; ++i) {
                    if (!(lmask >> i & 1) || !r.is_present(i)) continue;
                    auto next = detail::lift(r, i);
                    if (next && seen.emplace(*next, 0).second) {
                        frontier.push_back(*next);
                        raw.push_back(*next);
                    }
                }
            }
        }
        std::vector<int> ids;
        for (const PCode& r : raw) ids.push_back(spaces[static_cast<std::size_t>(m) + 1].intern(r));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return insert_cache.emplace(key, std::move(ids)).first->second;
    }

    int join_image(int m, int a, int b) {
        if (a > b) std::swap(a, b);
        const Space& s = spaces[static_cast<std::size_t>(m)];
        const Info& fa = s.info[static_cast<std::size_t>(a)];
        const Info& fb = s.info[static_cast<std::size_t>(b)];
        if (fa.loop && fb.loop) return -1;
        std::uint16_t ea = static_cast<std::uint16_t>(fa.deg1 | fa.deg2), eb = static_cast<std::uint16_t>(fb.deg1 | fb.deg2);
        if ((fa.deg2 & eb) || (fb.deg2 & ea)) return -1;
        if ((fa.has_cycle && (eb || fb.loop)) || (fb.has_cycle && (ea || fa.loop))) return -1;
        std::uint64_t key = static_cast<std::uint64_t>(a) << 36 | static_cast<std::uint64_t>(b) << 8 | static_cast<std::uint64_t>(m);
        auto it = join_cache.find(key);
        if (it != join_cache.end()) return it->second;
        int out = -1;
        if (auto u = detail::unite(s.codes[static_cast<std::size_t>(a)], s.codes[static_cast<std::size_t>(b)]))
            out = spaces[static_cast<std::size_t>(m)].intern(*u);
        join_cache.emplace(key, out);
        return out;
    }
};

DpContext::DpContext() : impl_(std::make_unique<Impl>()) {}
DpContext::~DpContext() = default;

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a == kSaturated || b == kSaturated || a > kSaturated / b) return kSaturated;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (a == kSaturated || b == kSaturated || a > kSaturated - b) return kSaturated;
    return a + b;
}

struct Entry {
    int i;
    std::uint16_t k_mask;
    int sig;
    std::uint64_t count;
};

struct Table {
    int m = 0;
    std::vector<Entry> entries;
    std::vector<std::vector<int>> sigs;
    std::unordered_map<std::vector<int>, int, VecHash> sig_index;
    std::unordered_map<std::uint64_t, int> entry_index;

    int intern_sig(std::vector<int>&& s) {
        auto it = sig_index.find(s);
        if (it != sig_index.end()) return it->second;
        int id = static_cast<int>(sigs.size());
        sigs.push_back(s);
        sig_index.emplace(std::move(s), id);
        return id;
    }

    void add(int i, std::uint16_t k_mask, int sig, std::uint64_t count) {
        std::uint64_t key = static_cast<std::uint64_t>(i) << 44 | static_cast<std::uint64_t>(k_mask) << 32 | static_cast<std::uint32_t>(sig);
        auto [it, fresh] = entry_index.try_emplace(key, static_cast<int>(entries.size()));
        if (fresh) entries.push_back(Entry{i, k_mask, sig, count});
        else entries[static_cast<std::size_t>(it->second)].count = sat_add(entries[static_cast<std::size_t>(it->second)].count, count);
    }

    void finish() {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.i != b.i) return a.i < b.i;
            if (a.k_mask != b.k_mask) return a.k_mask < b.k_mask;
            return a.sig < b.sig;
        });
        entry_index.clear();
        sig_index.clear();
    }
};

std::uint16_t shift_in(std::uint16_t mask, int p) {
    std::uint16_t lo = static_cast<std::uint16_t>(mask & ((1u << p) - 1));
    std::uint16_t hi = static_cast<std::uint16_t>((mask >> p) << (p + 1));
    return static_cast<std::uint16_t>(lo | hi);
}

std::uint16_t shift_out(std::uint16_t mask, int p) {
    std::uint16_t lo = static_cast<std::uint16_t>(mask & ((1u << p) - 1));
    std::uint16_t hi = static_cast<std::uint16_t>((mask >> (p + 1)) << p);
    return static_cast<std::uint16_t>(lo | hi);
}

int position_in(const VertexSet& bag, Vertex v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    return static_cast<int>(it - bag.begin());
}

// Liveness data of one node: a present position whose degree plus the host
// edges still to come stays below 2 can never close its cycle.
struct Liveness {
    bool enabled = false;
    std::uint16_t below2 = 0;  // future < 2
    std::uint16_t below1 = 0;  // future < 1
    std::vector<std::int8_t> memo;

    bool alive(const Space& s, int id) {
        if (!enabled) return true;
        if (static_cast<std::size_t>(id) >= memo.size()) memo.resize(static_cast<std::size_t>(id) + 1024, -1);
        std::int8_t& m = memo[static_cast<std::size_t>(id)];
        if (m < 0) {
            const Info& f = s.info[static_cast<std::size_t>(id)];
            bool dead = (f.deg0 & below2) || (f.deg1 & below1) || (f.has_cycle && (f.present & ~f.cyc));
            m = dead ? 0 : 1;
        }
        return m == 1;
    }
};

std::string bag_string(const VertexSet& bag) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : bag) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

DpResult solve_pac(const Graph& g_in, const VertexSet& r, int k, const NiceTreeDecomposition& d,
                   const DpOptions& options, DpContext* context) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    for (Vertex v : r)
        if (!g_in.has_vertex(v)) fail(ErrorKind::Parameter, "annotated vertex " + std::to_string(v) + " is not a vertex");
    const Graph g = g_in.simplified();
    DpResult result;
    result.stats.width = d.width();
    result.stats.nodes = static_cast<int>(d.nodes.size());
    if (k == 0 || static_cast<int>(r.size()) < k) {
        result.answer = true;
        return result;
    }
    ValidationReport rep = check_nice(g, d);
    if (!rep.ok) fail(ErrorKind::InvalidDecomposition, rep.violations.front());
    if (d.width() > options.width_cap)
        fail(ErrorKind::Size, "decomposition width " + std::to_string(d.width()) + " exceeds the DP cap " +
                                  std::to_string(options.width_cap));
    if (d.width() + 1 > detail::kMaxPositions) fail(ErrorKind::Size, "bags above 12 vertices are unsupported");

    std::unique_ptr<DpContext> own;
    if (!context) {
        own = std::make_unique<DpContext>();
        context = own.get();
    }
    DpContext::Impl& ctx = context->impl();
    ctx.trim();

    const int n_nodes = static_cast<int>(d.nodes.size());
    // Each host edge is owned by the first insert node (in node order) that
    // introduces one endpoint while the other is in the child bag.
    std::set<Edge> owned_edges;
    std::vector<std::vector<Vertex>> owned(static_cast<std::size_t>(n_nodes));
    std::vector<std::vector<int>> owned_below(static_cast<std::size_t>(n_nodes));
    for (int t = 0; t < n_nodes; ++t) {
        const NiceNode& node = d.nodes[static_cast<std::size_t>(t)];
        if (node.kind == NodeKind::Insert) {
            const VertexSet& child_bag = d.nodes[static_cast<std::size_t>(node.children[0])].bag;
            for (Vertex u : child_bag) {
                Edge e(node.vertex, u);
                if (g.adjacent(node.vertex, u) && owned_edges.insert(e).second)
                    owned[static_cast<std::size_t>(t)].push_back(u);
            }
        }
        std::vector<int>& below = owned_below[static_cast<std::size_t>(t)];
        below.assign(node.bag.size(), 0);
        std::size_t j = 0;
        for (Vertex u : node.bag) {
            int sum = 0;
            for (int c : node.children) {
                const VertexSet& cb = d.nodes[static_cast<std::size_t>(c)].bag;
                if (cb.contains(u)) sum += owned_below[static_cast<std::size_t>(c)][static_cast<std::size_t>(position_in(cb, u))];
            }
            if (node.kind == NodeKind::Insert) {
                if (u == node.vertex) sum += static_cast<int>(owned[static_cast<std::size_t>(t)].size());
                else if (std::find(owned[static_cast<std::size_t>(t)].begin(), owned[static_cast<std::size_t>(t)].end(), u) !=
                         owned[static_cast<std::size_t>(t)].end())
                    sum += 1;
            }
            below[j++] = sum;
        }
    }
    if (static_cast<int>(owned_edges.size()) != g.num_edges())
        fail(ErrorKind::InvalidDecomposition, "some edge is introduced by no insert node");

    long kk = std::min<long>(k, static_cast<long>(r.size()));
    std::vector<Table> tables(static_cast<std::size_t>(n_nodes));
    auto trace_node = [&](int t, const Table& tab) {
        if (!options.trace) return;
        const NiceNode& node = d.nodes[static_cast<std::size_t>(t)];
        std::ostringstream os;
        os << "node " << t << ' ' << node_kind_name(node.kind);
        if (node.vertex >= 0) os << ' ' << node.vertex;
        os << " bag " << bag_string(node.bag) << " entries " << tab.entries.size();
        result.trace.push_back(os.str());
        if (!options.trace_entries) return;
        const Space& sp = ctx.spaces[static_cast<std::size_t>(tab.m)];
        for (const Entry& e : tab.entries) {
            std::ostringstream es;
            std::vector<Vertex> kset;
            for (int i = 0; i < tab.m; ++i)
                if (e.k_mask >> i & 1) kset.push_back(node.bag.members()[static_cast<std::size_t>(i)]);
            es << "  i=" << e.i << " K=" << bag_string(VertexSet(kset)) << " sig=";
            for (int id : tab.sigs[static_cast<std::size_t>(e.sig)])
                es << ' ' << to_string(detail::from_code(sp.codes[static_cast<std::size_t>(id)], node.bag.members()));
            result.trace.push_back(es.str());
        }
    };
    auto fail_early = [&]() {
        result.answer = false;
        result.stats.failed_early = true;
        return result;
    };

    for (int t = 0; t < n_nodes; ++t) {
        const NiceNode& node = d.nodes[static_cast<std::size_t>(t)];
        Table& tab = tables[static_cast<std::size_t>(t)];
        const int m = static_cast<int>(node.bag.size());
        tab.m = m;
        Liveness live;
        live.enabled = options.prune;
        {
            std::size_t j = 0;
            for (Vertex u : node.bag) {
                int future = g.degree(u) - owned_below[static_cast<std::size_t>(t)][j];
                if (future < 2) live.below2 = static_cast<std::uint16_t>(live.below2 | (1u << j));
                if (future < 1) live.below1 = static_cast<std::uint16_t>(live.below1 | (1u << j));
                ++j;
            }
        }
        Space& space = ctx.spaces[static_cast<std::size_t>(m)];
        std::vector<int> scratch;
        auto finish_sig = [&](std::vector<int>& ids) {
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            std::vector<int> kept;
            kept.reserve(ids.size());
            for (int id : ids)
                if (live.alive(space, id)) kept.push_back(id);
            return kept;
        };

        switch (node.kind) {
            case NodeKind::Leaf: {
                std::vector<int> sig{ctx.empty_id(m)};
                tab.add(0, 0, tab.intern_sig(std::move(sig)), 1);
                break;
            }
            case NodeKind::Insert: {
                Table& child = tables[static_cast<std::size_t>(node.children[0])];
                const int p = position_in(node.bag, node.vertex);
                std::uint16_t owned_mask = 0;
                for (Vertex u : owned[static_cast<std::size_t>(t)])
                    owned_mask = static_cast<std::uint16_t>(owned_mask | (1u << position_in(node.bag, u)));
                const bool annotated = r.contains(node.vertex);
                const std::uint16_t full = static_cast<std::uint16_t>((1u << m) - 1);
                std::unordered_map<std::uint64_t, int> memo;
                auto map_sig = [&](int sig, bool committing, std::uint16_t k_new) {
                    std::uint16_t lmask = 0;
                    if (options.lift == LiftPolicy::AsPrinted) {
                        lmask = static_cast<std::uint16_t>(full & ~k_new);
                        if (committing) lmask = static_cast<std::uint16_t>(lmask & ~(1u << p));
                    }
                    std::uint64_t key = static_cast<std::uint64_t>(sig) << 32 | static_cast<std::uint64_t>(committing) << 16 | lmask;
                    auto it = memo.find(key);
                    if (it != memo.end()) return it->second;
                    scratch.clear();
                    for (int id : child.sigs[static_cast<std::size_t>(sig)]) {
                        const auto& imgs = ctx.insert_images(m - 1, p, owned_mask, committing, lmask, id);
                        scratch.insert(scratch.end(), imgs.begin(), imgs.end());
                    }
                    int out = tab.intern_sig(finish_sig(scratch));
                    memo.emplace(key, out);
                    return out;
                };
                for (const Entry& e : child.entries) {
                    const std::uint16_t k_shift = shift_in(e.k_mask, p);
                    int s = map_sig(e.sig, false, k_shift);
                    if (tab.sigs[static_cast<std::size_t>(s)].empty()) {
                        if (e.i >= 1) return fail_early();
                    } else {
                        tab.add(e.i, k_shift, s, e.count);
                    }
                    if (annotated && e.i < kk) {
                        const std::uint16_t k_new = static_cast<std::uint16_t>(k_shift | (1u << p));
                        int sc = map_sig(e.sig, true, k_new);
                        if (tab.sigs[static_cast<std::size_t>(sc)].empty()) return fail_early();
                        tab.add(e.i + 1, k_new, sc, e.count);
                    }
                }
                child = Table{};
                break;
            }
            case NodeKind::Forget: {
                Table& child = tables[static_cast<std::size_t>(node.children[0])];
                const int p = position_in(d.nodes[static_cast<std::size_t>(node.children[0])].bag, node.vertex);
                std::vector<int> memo(child.sigs.size(), -1);
                for (const Entry& e : child.entries) {
                    int& s = memo[static_cast<std::size_t>(e.sig)];
                    if (s < 0) {
                        scratch.clear();
                        for (int id : child.sigs[static_cast<std::size_t>(e.sig)]) {
                            int img = ctx.forget_image(m + 1, p, id);
                            if (img >= 0) scratch.push_back(img);
                        }
                        s = tab.intern_sig(finish_sig(scratch));
                    }
                    if (tab.sigs[static_cast<std::size_t>(s)].empty()) {
                        if (e.i >= 1) return fail_early();
                        continue;
                    }
                    tab.add(e.i, shift_out(e.k_mask, p), s, e.count);
                }
                child = Table{};
                break;
            }
            case NodeKind::Join: {
                Table& left = tables[static_cast<std::size_t>(node.children[0])];
                Table& right = tables[static_cast<std::size_t>(node.children[1])];
                std::unordered_map<std::uint64_t, int> memo;
                auto join_sig = [&](int a, int b) {
                    std::uint64_t key = static_cast<std::uint64_t>(a) << 32 | static_cast<std::uint32_t>(b);
                    auto it = memo.find(key);
                    if (it != memo.end()) return it->second;
                    scratch.clear();
                    const auto& sa = left.sigs[static_cast<std::size_t>(a)];
                    const auto& sb = right.sigs[static_cast<std::size_t>(b)];
                    for (int x : sa)
                        for (int y : sb) {
                            int u = ctx.join_image(m, x, y);
                            if (u >= 0) scratch.push_back(u);
                        }
                    int out = tab.intern_sig(finish_sig(scratch));
                    memo.emplace(key, out);
                    return out;
                };
                auto combine = [&](const Entry& a, const Entry& b) -> bool {
                    const int both = __builtin_popcount(static_cast<unsigned>(a.k_mask & b.k_mask));
                    const long i = static_cast<long>(a.i) + b.i - both;
                    if (i > kk) return true;
                    int s = join_sig(a.sig, b.sig);
                    if (tab.sigs[static_cast<std::size_t>(s)].empty()) return i < 1;
                    tab.add(static_cast<int>(i), static_cast<std::uint16_t>(a.k_mask | b.k_mask), s, sat_mul(a.count, b.count));
                    return true;
                };
                if (options.join == JoinRule::Matched) {
                    std::map<std::uint16_t, std::vector<const Entry*>> by_k;
                    for (const Entry& b : right.entries) by_k[b.k_mask].push_back(&b);
                    for (const Entry& a : left.entries) {
                        auto it = by_k.find(a.k_mask);
                        if (it == by_k.end()) continue;
                        for (const Entry* b : it->second)
                            if (!combine(a, *b)) return fail_early();
                    }
                } else {
                    for (const Entry& a : left.entries)
                        for (const Entry& b : right.entries)
                            if (!combine(a, b)) return fail_early();
                }
                left = Table{};
                right = Table{};
                break;
            }
        }
        tab.finish();
        result.stats.entries_max = std::max(result.stats.entries_max, tab.entries.size());
        result.stats.entries_total += tab.entries.size();
        for (const auto& s : tab.sigs) result.stats.signature_max = std::max(result.stats.signature_max, s.size());
        {
            // |table| <= (k+1)·2^|bag|·2^|P(bag)|, compared in log2.
            double rhs = std::log2(static_cast<double>(kk + 1)) + m + static_cast<double>(detail::count_codes(m));
            if (std::log2(static_cast<double>(tab.entries.size()) + 1e-9) > rhs) result.stats.growth_bound_ok = false;
        }
        trace_node(t, tab);
    }

    const Table& root = tables[static_cast<std::size_t>(d.root)];
    const int loop = ctx.loop_id();
    bool accept = true;
    std::uint64_t total = 0;
    for (const Entry& e : root.entries) {
        total = sat_add(total, e.count);
        if (e.i < 1) continue;
        const auto& sig = root.sigs[static_cast<std::size_t>(e.sig)];
        if (!std::binary_search(sig.begin(), sig.end(), loop)) accept = false;
    }
    if (options.audit_counts && options.join == JoinRule::Matched && total != kSaturated) {
        std::uint64_t expect = 0, binom = 1;
        const std::uint64_t rs = r.size();
        for (long i = 0; i <= kk; ++i) {
            expect = sat_add(expect, binom);
            binom = sat_mul(binom, rs - static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i + 1);
        }
        result.stats.audit = (expect == total) ? 1 : 0;
        if (result.stats.audit == 0) accept = false;
    }
    result.answer = accept;
    return result;
}

DpResult solve_pac(const Graph& g, const VertexSet& r, int k, const DpOptions& options, DpContext* context) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    Graph simple = g.simplified();
    TreeDecomposition td;
    if (simple.num_vertices() <= kExactTreewidthMaxVertices) {
        auto tw = exact_treewidth(simple, options.width_cap);
        if (!tw) fail(ErrorKind::Size, "treewidth exceeds the DP cap " + std::to_string(options.width_cap));
        td = std::move(tw->decomposition);
    } else {
        TreewidthResult h = heuristic_treewidth(simple);
        if (h.width > options.width_cap)
            fail(ErrorKind::Size, "heuristic width " + std::to_string(h.width) + " exceeds the DP cap " +
                                      std::to_string(options.width_cap));
        td = std::move(h.decomposition);
    }
    return solve_pac(g, r, k, make_nice(simple, td), options, context);
}

// ---- table-level transitions ------------------------------------------------

namespace {

void merge_into(std::vector<DpEntry>& out, DpEntry e) {
    std::sort(e.signature.begin(), e.signature.end());
    e.signature.erase(std::unique(e.signature.begin(), e.signature.end()), e.signature.end());
    out.push_back(std::move(e));
}

std::vector<DpEntry> dedup(std::vector<DpEntry> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<DpEntry> leaf_table() { return {DpEntry{0, VertexSet{}, {Pairing{}}}}; }

std::vector<DpEntry> insert_table(const std::vector<DpEntry>& child, Vertex v, bool v_annotated,
                                  const VertexSet& bag_t, int k, const std::vector<Edge>& host_edges_at_v,
                                  LiftPolicy policy, TableFlags* flags) {
    if (!bag_t.contains(v)) fail(ErrorKind::Parameter, "insert vertex missing from its bag");
    VertexSet bag_s = bag_t;
    bag_s.erase(v);
    VertexSet nb;
    for (const Edge& e : host_edges_at_v) {
        if (e.u != v && e.v != v) fail(ErrorKind::Overlap, "host edge not incident to the inserted vertex");
        Vertex u = e.other(v);
        if (!bag_s.contains(u)) fail(ErrorKind::Overlap, "host edge leaves the bag");
        nb.insert(u);
    }
    std::vector<AuxGraph> auxes = enumerate_aux(v, nb);
    std::vector<DpEntry> out;
    auto image = [&](const DpEntry& e, bool committing, const VertexSet& k_new) {
        VertexSet lift_set;
        if (policy == LiftPolicy::AsPrinted) lift_set = committing ? bag_s.minus(k_new) : bag_t.minus(k_new);
        std::vector<Pairing> sig;
        for (const Pairing& p : e.signature)
            for (const AuxGraph& aux : auxes) {
                if (committing && !aux.vertices.contains(v)) continue;
                for (Pairing& q : oplus(p, aux, lift_set, bag_t)) sig.push_back(std::move(q));
            }
        return sig;
    };
    for (const DpEntry& e : child) {
        DpEntry plain{e.i, e.k_set, image(e, false, e.k_set)};
        if (plain.signature.empty()) {
            if (e.i >= 1 && flags) flags->committed_subset_died = true;
        } else {
            merge_into(out, std::move(plain));
        }
        if (v_annotated && e.i < k) {
            VertexSet k_new = e.k_set;
            k_new.insert(v);
            DpEntry committed{e.i + 1, k_new, image(e, true, k_new)};
            if (committed.signature.empty()) {
                if (flags) flags->committed_subset_died = true;
            } else {
                merge_into(out, std::move(committed));
            }
        }
    }
    return dedup(std::move(out));
}

std::vector<DpEntry> forget_table(const std::vector<DpEntry>& child, Vertex v, const VertexSet& bag_t, TableFlags* flags) {
    if (bag_t.contains(v)) fail(ErrorKind::Parameter, "forgotten vertex still in its bag");
    std::vector<DpEntry> out;
    for (const DpEntry& e : child) {
        DpEntry next{e.i, e.k_set, {}};
        next.k_set.erase(v);
        for (const Pairing& p : e.signature)
            if (auto q = lift_pairing(p, v)) next.signature.push_back(std::move(*q));
        if (next.signature.empty()) {
            if (e.i >= 1 && flags) flags->committed_subset_died = true;
            continue;
        }
        merge_into(out, std::move(next));
    }
    return dedup(std::move(out));
}

std::vector<DpEntry> join_table(const std::vector<DpEntry>& left, const VertexSet& left_bag,
                                const std::vector<DpEntry>& right, const VertexSet& right_bag, int k,
                                JoinRule rule, TableFlags* flags) {
    if (left_bag != right_bag) fail(ErrorKind::BagMismatch, "join children carry different bags");
    std::vector<DpEntry> out;
    for (const DpEntry& a : left)
        for (const DpEntry& b : right) {
            if (rule == JoinRule::Matched && a.k_set != b.k_set) continue;
            const int i = a.i + b.i - static_cast<int>(a.k_set.intersected(b.k_set).size());
            if (i > k) continue;
            DpEntry next{i, a.k_set.united(b.k_set), {}};
            for (const Pairing& p : a.signature)
                for (const Pairing& q : b.signature)
                    if (auto u = unite(p, q)) next.signature.push_back(std::move(*u));
            if (next.signature.empty()) {
                if (i >= 1 && flags) flags->committed_subset_died = true;
                continue;
            }
            merge_into(out, std::move(next));
        }
    return dedup(std::move(out));
}

bool root_accepts(const std::vector<DpEntry>& root_table) {
    Pairing loop;
    loop.loop = true;
    for (const DpEntry& e : root_table) {
        if (e.i < 1) continue;
        if (!std::binary_search(e.signature.begin(), e.signature.end(), loop)) return false;
    }
    return true;
}

}  // namespace cyc
