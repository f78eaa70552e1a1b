#include "cyc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <unordered_set>
#include <vector>

#include "cyc/dense.hpp"

namespace cyc {

namespace {

using Mask = std::uint64_t;

inline Mask bit(int x) { return Mask{1} << x; }

class Clock {
public:
    explicit Clock(std::int64_t limit_ms)
        : start_(std::chrono::steady_clock::now()), limit_ms_(limit_ms) {}

    void tick() {
        if ((++ticks_ & 0xFFF) != 0) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
        if (ms > limit_ms_) fail(ErrorKind::Budget, "oracle time limit of " + std::to_string(limit_ms_) + " ms exceeded");
    }

private:
    std::chrono::steady_clock::time_point start_;
    std::int64_t limit_ms_;
    std::uint64_t ticks_ = 0;
};

// Exhaustive simple-path DFS for a cycle through a terminal set.
class CycleSearch {
public:
    CycleSearch(const DenseGraph& d, Clock& clock) : d_(d), clock_(clock) {}

    // Cycle through all of `targets` whose walk starts with `prefix`
    // (prefix[0] is the anchor). Returns vertex indices or empty.
    std::vector<int> run(const std::vector<int>& prefix, Mask targets) {
        path_ = prefix;
        s0_ = prefix.front();
        Mask used = 0;
        for (int x : prefix) used |= bit(x);
        const Mask all = d_.n == 64 ? ~Mask{0} : (bit(d_.n) - 1);
        found_ = false;
        dfs(prefix.back(), all & ~used, targets & ~used);
        return found_ ? path_ : std::vector<int>{};
    }

private:
    bool feasible(int end, Mask avail, Mask remaining) const {
        const Mask ends = bit(end) | bit(s0_);
        // Everything still needed, and the anchor, must be reachable.
        Mask comp = 0, frontier = d_.mask[static_cast<std::size_t>(end)] & avail;
        while (frontier) {
            comp |= frontier;
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= d_.mask[static_cast<std::size_t>(__builtin_ctzll(f))];
            frontier = next & avail & ~comp;
        }
        if ((remaining & ~comp) != 0) return false;
        if (path_.size() >= 2 && (d_.mask[static_cast<std::size_t>(s0_)] & (comp | bit(end))) == 0) return false;
        const Mask usable = avail | ends;
        for (Mask rest = remaining; rest; rest &= rest - 1) {
            int x = __builtin_ctzll(rest);
            if (__builtin_popcountll(d_.mask[static_cast<std::size_t>(x)] & usable) < 2) return false;
        }
        // Independent terminals are interior to the remaining subpath, so
        // they need |I|+1 distinct neighbors on it (|I| if it is closed at
        // the anchor on both sides).
        Mask indep = 0, blocked = 0;
        int size = 0;
        for (Mask rest = remaining; rest; rest &= rest - 1) {
            int x = __builtin_ctzll(rest);
            if (blocked & bit(x)) continue;
            indep |= bit(x);
            blocked |= d_.mask[static_cast<std::size_t>(x)];
            ++size;
        }
        if (size >= 2) {
            Mask nb = 0;
            for (Mask f = indep; f; f &= f - 1) nb |= d_.mask[static_cast<std::size_t>(__builtin_ctzll(f))];
            nb &= usable;
            int need = size + 1;
            if (end == s0_ && (nb & bit(s0_))) need -= 1;
            if (__builtin_popcountll(nb) < need) return false;
        }
        return true;
    }

    void dfs(int end, Mask avail, Mask remaining) {
        clock_.tick();
        if (remaining == 0 && path_.size() >= 3 && (d_.mask[static_cast<std::size_t>(end)] & bit(s0_))) {
            found_ = true;
            return;
        }
        if (!feasible(end, avail, remaining)) return;
        for (Mask next = d_.mask[static_cast<std::size_t>(end)] & avail; next; next &= next - 1) {
            int y = __builtin_ctzll(next);
            path_.push_back(y);
            dfs(y, avail & ~bit(y), remaining & ~bit(y));
            if (found_) return;
            path_.pop_back();
        }
    }

    const DenseGraph& d_;
    Clock& clock_;
    std::vector<int> path_;
    int s0_ = 0;
    bool found_ = false;
};

DenseGraph checked_dense(const Graph& g, const OracleBudget& budget) {
    if (budget.max_vertices <= 0 || budget.max_subsets <= 0 || budget.time_limit_ms <= 0)
        fail(ErrorKind::Parameter, "oracle budgets must be positive");
    if (g.num_vertices() > budget.max_vertices)
        fail(ErrorKind::Budget, "oracle vertex budget " + std::to_string(budget.max_vertices) + " exceeded by n = " +
                                    std::to_string(g.num_vertices()));
    if (g.num_vertices() > 64) fail(ErrorKind::Budget, "oracle handles at most 64 vertices");
    return DenseGraph(g);
}

Mask mask_of(const DenseGraph& d, const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) {
        int i = d.index_of(v);
        if (i < 0) fail(ErrorKind::Parameter, "vertex " + std::to_string(v) + " is not in the graph");
        m |= bit(i);
    }
    return m;
}

// Cycle through `targets`; empty if none.
std::vector<int> find_cycle(const DenseGraph& d, Mask targets, Clock& clock) {
    CycleSearch search(d, clock);
    if (targets) return search.run({__builtin_ctzll(targets)}, targets);
    for (int s = 0; s < d.n; ++s) {
        if (d.degree(s) < 2) continue;
        auto c = search.run({s}, bit(s));
        if (!c.empty()) return c;
    }
    return {};
}

Mask cycle_mask(const std::vector<int>& c) {
    Mask m = 0;
    for (int x : c) m |= bit(x);
    return m;
}

std::int64_t binomial_capped(int n, int k, std::int64_t cap) {
    if (k < 0 || k > n) return 0;
    long double r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > static_cast<long double>(cap)) return cap + 1;
    }
    return static_cast<std::int64_t>(r + 0.5L);
}

// Every cycle vertex set, restricted to `within`; nullopt past the DFS budget.
std::optional<std::vector<Mask>> cycle_sets(const DenseGraph& d, Mask within, std::int64_t node_budget, Clock& clock) {
    std::unordered_set<Mask> seen;
    std::int64_t nodes = 0;
    bool blown = false;
    std::vector<int> stack;
    // Cycles whose smallest vertex is s, over vertices above s.
    for (int s = 0; s < d.n && !blown; ++s) {
        const Mask allowed = ~(bit(s + 1) - 1) & (d.n == 64 ? ~Mask{0} : bit(d.n) - 1);
        struct Frame { int v; Mask next; };
        std::vector<Frame> frames{{s, d.mask[static_cast<std::size_t>(s)] & allowed}};
        Mask on = bit(s);
        while (!frames.empty()) {
            if (++nodes > node_budget) {
                blown = true;
                break;
            }
            clock.tick();
            Frame& f = frames.back();
            if (!f.next) {
                on &= ~bit(f.v);
                frames.pop_back();
                continue;
            }
            int y = __builtin_ctzll(f.next);
            f.next &= f.next - 1;
            if (frames.size() >= 2 && (d.mask[static_cast<std::size_t>(y)] & bit(s))) seen.insert((on | bit(y)) & within);
            frames.push_back({y, d.mask[static_cast<std::size_t>(y)] & allowed & ~on & ~bit(y)});
            on |= bit(y);
        }
    }
    if (blown) return std::nullopt;
    std::vector<Mask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest-first hitting set of size <= k over `sets`, or nullopt.
std::optional<Mask> hitting_set(const std::vector<Mask>& sets, int k, Clock& clock) {
    std::optional<Mask> result;
    std::function<bool(Mask, int)> rec = [&](Mask chosen, int left) -> bool {
        clock.tick();
        const Mask* best = nullptr;
        int best_size = 65;
        for (const Mask& t : sets) {
            if (t & chosen) continue;
            int sz = __builtin_popcountll(t);
            if (sz < best_size) {
                best_size = sz;
                best = &t;
                if (sz <= 1) break;
            }
        }
        if (!best) {
            result = chosen;
            return true;
        }
        if (left == 0) return false;
        for (Mask f = *best; f; f &= f - 1)
            if (rec(chosen | bit(__builtin_ctzll(f)), left - 1)) return true;
        return false;
    };
    rec(0, k);
    return result;
}

VertexSet to_set(const DenseGraph& d, Mask m) {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(d.id[static_cast<std::size_t>(__builtin_ctzll(m))]);
    return VertexSet(std::move(out));
}

// Uncyclable k-subset of r (as a mask) or 0 when every k-subset is cyclable.
Mask uncyclable(const DenseGraph& d, Mask r, int k, const OracleBudget& budget, Clock& clock) {
    const int rs = __builtin_popcountll(r);
    if (k == 0 || rs < k) return 0;
    const Mask all = d.n == 64 ? ~Mask{0} : bit(d.n) - 1;
    if (d.n >= 3 && !find_cycle(d, all, clock).empty()) return 0;

    const std::int64_t subsets = binomial_capped(rs, k, budget.max_subsets);
    if (subsets > 2000) {
        if (auto sets = cycle_sets(d, r, 20'000'000, clock)) {
            std::vector<Mask> complements;
            for (Mask m : *sets) {
                if ((r & ~m) == 0) return 0;
                complements.push_back(r & ~m);
            }
            std::sort(complements.begin(), complements.end(),
                      [](Mask a, Mask b) { return __builtin_popcountll(a) < __builtin_popcountll(b) || (__builtin_popcountll(a) == __builtin_popcountll(b) && a < b); });
            std::vector<Mask> minimal;
            for (Mask t : complements) {
                bool dominated = false;
                for (Mask u : minimal)
                    if ((u & ~t) == 0) {
                        dominated = true;
                        break;
                    }
                if (!dominated) minimal.push_back(t);
            }
            auto hit = hitting_set(minimal, k, clock);
            if (!hit) return 0;
            Mask s = *hit;
            for (Mask f = r & ~s; f && __builtin_popcountll(s) < k; f &= f - 1) s |= bit(__builtin_ctzll(f));
            return s;
        }
    }
    if (subsets > budget.max_subsets)
        fail(ErrorKind::Budget, "oracle subset budget " + std::to_string(budget.max_subsets) + " exceeded");

    std::vector<int> members;
    for (Mask f = r; f; f &= f - 1) members.push_back(__builtin_ctzll(f));
    std::vector<Mask> witnesses;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask s = 0;
        for (int i : idx) s |= bit(members[static_cast<std::size_t>(i)]);
        bool covered = false;
        for (auto it = witnesses.rbegin(); it != witnesses.rend(); ++it)
            if ((s & ~*it) == 0) {
                covered = true;
                break;
            }
        if (!covered) {
            auto c = find_cycle(d, s, clock);
            if (c.empty()) return s;
            witnesses.push_back(cycle_mask(c));
        }
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == rs - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
    return 0;
}

}  // namespace

std::optional<Cycle> cycle_through(const Graph& g, const VertexSet& s, const OracleBudget& budget) {
    DenseGraph d = checked_dense(g, budget);
    Mask targets = 0;
    for (Vertex v : s) {
        int i = d.index_of(v);
        if (i < 0) return std::nullopt;
        targets |= bit(i);
    }
    Clock clock(budget.time_limit_ms);
    auto c = find_cycle(d, targets, clock);
    if (c.empty()) return std::nullopt;
    Cycle out;
    for (int x : c) out.vertices.push_back(d.id[static_cast<std::size_t>(x)]);
    return out;
}

std::optional<VertexSet> find_uncyclable_subset(const Graph& g, const VertexSet& r, int k, const OracleBudget& budget) {
    if (k < 0) fail(ErrorKind::Parameter, "k must be non-negative");
    DenseGraph d = checked_dense(g, budget);
    Mask rm = mask_of(d, r);
    Clock clock(budget.time_limit_ms);
    Mask s = uncyclable(d, rm, k, budget, clock);
    if (!s) return std::nullopt;
    return to_set(d, s);
}

bool is_yes_pac(const Graph& g, const VertexSet& r, int k, const OracleBudget& budget) {
    return !find_uncyclable_subset(g, r, k, budget).has_value();
}

int cyclability(const Graph& g, const OracleBudget& budget) {
    DenseGraph d = checked_dense(g, budget);
    Clock clock(budget.time_limit_ms);
    const Mask all = d.n == 64 ? ~Mask{0} : bit(d.n) - 1;
    if (d.n >= 3 && !find_cycle(d, all, clock).empty()) return d.n;
    int best = 1;
    for (int k = 2; k < d.n; ++k) {
        if (uncyclable(d, all, k, budget, clock)) break;
        best = k;
    }
    return best;
}

bool is_hamiltonian(const Graph& g, const OracleBudget& budget) {
    DenseGraph d = checked_dense(g, budget);
    if (d.n < 3) return false;
    Clock clock(budget.time_limit_ms);
    const Mask all = d.n == 64 ? ~Mask{0} : bit(d.n) - 1;
    return !find_cycle(d, all, clock).empty();
}

bool hamiltonian_with_edge(const Graph& g, Edge e, const OracleBudget& budget) {
    if (e.is_loop() || !g.adjacent(e.u, e.v)) fail(ErrorKind::EdgeNotFound, "edge is not in the graph");
    DenseGraph d = checked_dense(g, budget);
    if (d.n < 3) return false;
    Clock clock(budget.time_limit_ms);
    const Mask all = d.n == 64 ? ~Mask{0} : bit(d.n) - 1;
    CycleSearch search(d, clock);
    return !search.run({d.index_of(e.u), d.index_of(e.v)}, all).empty();
}

bool is_hypohamiltonian(const Graph& g, const OracleBudget& budget) {
    if (is_hamiltonian(g, budget)) return false;
    if (g.num_vertices() < 4) return false;
    for (Vertex v : g.vertices())
        if (!is_hamiltonian(g.without_vertex(v), budget)) return false;
    return true;
}

}  // namespace cyc
