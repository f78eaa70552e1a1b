#include "cyc/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pairing_code.hpp"

namespace cyc {

namespace detail {

namespace {

void forests(PCode& c, std::uint16_t rem, std::vector<PCode>& out) {
    if (rem == 0) {
        out.push_back(c);
        return;
    }
    const int x = __builtin_ctz(rem);
    const std::uint16_t others = static_cast<std::uint16_t>(rem & (rem - 1));
    // Every subset of the remaining vertices joins x on its path.
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
        std::vector<int> members{x};
        for (int i = 0; i < kMaxPositions; ++i)
            if (sub >> i & 1) members.push_back(i);
        std::sort(members.begin(), members.end());
        do {
            if (members.size() > 1 && members.front() > members.back()) continue;
            PCode next = c;
            for (std::size_t i = 0; i + 1 < members.size(); ++i) add_edge(next, members[i], members[i + 1]);
            forests(next, static_cast<std::uint16_t>(others & ~sub), out);
        } while (std::next_permutation(members.begin(), members.end()));
        if (sub == 0) break;
    }
}

void cycles_on(const PCode& base, std::uint16_t j, std::vector<PCode>& out) {
    std::vector<int> members;
    for (int i = 0; i < kMaxPositions; ++i)
        if (j >> i & 1) members.push_back(i);
    PCode c = base;
    if (members.size() == 1) {
        add_edge(c, members[0], members[0]);
        out.push_back(c);
        return;
    }
    if (members.size() == 2) {
        add_edge(c, members[0], members[1]);
        add_edge(c, members[0], members[1]);
        out.push_back(c);
        return;
    }
    // First element fixed as the minimum; reflections removed by ordering
    // the two neighbors of the minimum.
    std::vector<int> rest(members.begin() + 1, members.end());
    do {
        if (rest.front() > rest.back()) continue;
        PCode next = base;
        add_edge(next, members[0], rest.front());
        for (std::size_t i = 0; i + 1 < rest.size(); ++i) add_edge(next, rest[i], rest[i + 1]);
        add_edge(next, rest.back(), members[0]);
        out.push_back(next);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

std::vector<PCode> enumerate_codes(int m) {
    if (m < 0 || m > kMaxPositions) fail(ErrorKind::Size, "pairing bags are capped at 12 vertices");
    std::vector<PCode> out;
    const std::uint32_t full = (1u << m) - 1;
    for (std::uint32_t u = 0; u <= full; ++u) {
        PCode base(m);
        base.present = static_cast<std::uint16_t>(u);
        forests(base, static_cast<std::uint16_t>(u), out);
        PCode looped = base;
        looped.loop = 1;
        out.push_back(looped);
        for (std::uint32_t j = u; j; j = (j - 1) & u) cycles_on(base, static_cast<std::uint16_t>(j), out);
    }
    return out;
}

std::uint64_t count_codes(int m) {
    if (m < 0 || m > kMaxPositions) fail(ErrorKind::Size, "pairing bags are capped at 12 vertices");
    std::vector<std::vector<std::uint64_t>> binom(static_cast<std::size_t>(m) + 1);
    for (int a = 0; a <= m; ++a) {
        binom[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, 1);
        for (int b = 1; b < a; ++b)
            binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] +
                binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b)];
    }
    auto c = [&](int a, int b) { return binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    // Labeled paths and labeled cycles on j vertices, as the alphabet sees them.
    auto paths = [](int j) -> std::uint64_t {
        std::uint64_t f = 1;
        for (int i = 2; i <= j; ++i) f *= static_cast<std::uint64_t>(i);
        return j == 1 ? 1 : f / 2;
    };
    auto cycles = [](int j) -> std::uint64_t {
        if (j <= 2) return 1;
        std::uint64_t f = 1;
        for (int i = 2; i < j; ++i) f *= static_cast<std::uint64_t>(i);
        return f / 2;
    };
    std::vector<std::uint64_t> forests(static_cast<std::size_t>(m) + 1, 0);
    forests[0] = 1;
    for (int n = 1; n <= m; ++n)
        for (int j = 1; j <= n; ++j)
            forests[static_cast<std::size_t>(n)] += c(n - 1, j - 1) * paths(j) * forests[static_cast<std::size_t>(n - j)];
    std::uint64_t total = 0;
    for (int u = 0; u <= m; ++u) {
        std::uint64_t cyc = 0;
        for (int j = 1; j <= u; ++j) cyc += c(u, j) * cycles(j);
        total += c(m, u) * (forests[static_cast<std::size_t>(u)] + cyc + 1);
    }
    return total;
}

}  // namespace detail

using detail::PCode;

namespace {

std::vector<Vertex> bag_of(const Pairing& p) {
    std::vector<Vertex> bag = p.active.members();
    for (const Edge& e : p.edges) {
        bag.push_back(e.u);
        bag.push_back(e.v);
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    return bag;
}

int position(const std::vector<Vertex>& bag, Vertex v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it == bag.end() || *it != v) return -1;
    return static_cast<int>(it - bag.begin());
}

}  // namespace

namespace detail {

std::optional<PCode> to_code(const Pairing& p, const std::vector<Vertex>& bag) {
    if (bag.size() > static_cast<std::size_t>(detail::kMaxPositions))
        fail(ErrorKind::Size, "pairing bags are capped at 12 vertices");
    PCode c(static_cast<int>(bag.size()));
    c.loop = p.loop ? 1 : 0;
    for (Vertex v : p.active) {
        int i = position(bag, v);
        if (i < 0) return std::nullopt;
        c.present = static_cast<std::uint16_t>(c.present | (1u << i));
    }
    for (const Edge& e : p.edges) {
        int a = position(bag, e.u), b = position(bag, e.v);
        if (a < 0 || b < 0) return std::nullopt;
        if (!detail::add_edge(c, a, b)) return std::nullopt;
    }
    return c;
}

Pairing from_code(const PCode& c, const std::vector<Vertex>& bag) {
    Pairing p;
    p.loop = c.loop != 0;
    std::vector<Vertex> active;
    for (int i = 0; i < c.size; ++i) {
        if (c.is_present(i)) active.push_back(bag[static_cast<std::size_t>(i)]);
        int x = c.nb[2 * i], y = c.nb[2 * i + 1];
        if (x == i) {
            p.edges.emplace_back(bag[static_cast<std::size_t>(i)], bag[static_cast<std::size_t>(i)]);
            continue;
        }
        if (x != detail::kNone && x > i) p.edges.emplace_back(bag[static_cast<std::size_t>(i)], bag[static_cast<std::size_t>(x)]);
        if (y != detail::kNone && y > i) p.edges.emplace_back(bag[static_cast<std::size_t>(i)], bag[static_cast<std::size_t>(y)]);
    }
    p.active = VertexSet(std::move(active));
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

}  // namespace detail

using detail::from_code;
using detail::to_code;

namespace {

std::vector<Pairing> sorted_unique(std::vector<Pairing> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool is_valid_pairing(const Pairing& p) {
    std::map<Vertex, int> deg;
    std::map<Edge, int> mult;
    for (const Edge& e : p.edges) {
        if (!p.active.contains(e.u) || !p.active.contains(e.v)) return false;
        deg[e.u] += 1;
        deg[e.v] += 1;
        if (++mult[e] > (e.is_loop() ? 1 : 2)) return false;
    }
    for (const auto& [v, d] : deg)
        if (d > 2) return false;
    // Components over edge-carrying vertices; a component is a cycle iff all
    // its vertices have degree 2.
    std::map<Vertex, Vertex> parent;
    std::function<Vertex(Vertex)> find = [&](Vertex x) -> Vertex {
        Vertex& px = parent[x];
        if (px == x) return x;
        return px = find(px);
    };
    for (const auto& kv : deg) parent[kv.first] = kv.first;
    for (const Edge& e : p.edges) parent[find(e.u)] = find(e.v);
    std::map<Vertex, bool> all_two;
    for (const auto& [v, d] : deg) {
        auto [it, fresh] = all_two.emplace(find(v), true);
        if (d != 2) it->second = false;
    }
    int cycles = p.loop ? 1 : 0;
    bool other_edges = false;
    for (const auto& [root, two] : all_two) {
        if (two) ++cycles;
        else other_edges = true;
    }
    if (cycles > 1) return false;
    if (cycles == 1 && other_edges) return false;
    return true;
}

Pairing canonical(Pairing p) {
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

std::string to_string(const Pairing& p) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (Vertex v : p.active) {
        os << (first ? "" : " ") << v;
        first = false;
    }
    os << "| ";
    first = true;
    for (const Edge& e : canonical(p).edges) {
        os << (first ? "" : " ") << e.u << '-' << e.v;
        first = false;
    }
    os << '|' << (p.loop ? " L" : "") << ']';
    return os.str();
}

std::vector<Pairing> enumerate_pairings(const VertexSet& bag) {
    if (bag.size() > static_cast<std::size_t>(kMaxPairingBag)) fail(ErrorKind::Size, "pairing bags are capped at 12 vertices");
    std::vector<Pairing> out;
    for (const PCode& c : detail::enumerate_codes(static_cast<int>(bag.size()))) out.push_back(from_code(c, bag.members()));
    return sorted_unique(std::move(out));
}

std::uint64_t count_pairings(int bag_size) { return detail::count_codes(bag_size); }

std::optional<Pairing> lift_pairing(const Pairing& p, Vertex v) {
    if (!is_valid_pairing(p)) return std::nullopt;
    if (!p.active.contains(v)) return p;
    auto bag = bag_of(p);
    auto code = to_code(p, bag);
    if (!code) return std::nullopt;
    auto lifted = detail::lift(*code, position(bag, v));
    if (!lifted) return std::nullopt;
    return from_code(*lifted, bag);
}

std::optional<Pairing> unite(const Pairing& a, const Pairing& b) {
    std::vector<Vertex> bag = bag_of(a);
    for (Vertex v : bag_of(b)) bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    auto ca = to_code(a, bag), cb = to_code(b, bag);
    if (!ca || !cb) return std::nullopt;
    auto u = detail::unite(*ca, *cb);
    if (!u) return std::nullopt;
    return from_code(*u, bag);
}

std::vector<AuxGraph> enumerate_aux(Vertex v, const VertexSet& neighborhood) {
    std::vector<Vertex> nb;
    for (Vertex u : neighborhood)
        if (u != v) nb.push_back(u);
    if (nb.size() > 16) fail(ErrorKind::Size, "aux neighborhood too large");
    std::vector<AuxGraph> out;
    const std::uint32_t edge_masks = 1u << nb.size();
    for (std::uint32_t em = 0; em < edge_masks; ++em) {
        std::vector<Vertex> forced;
        if (em) forced.push_back(v);
        std::vector<Vertex> free;
        if (!em) free.push_back(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (em >> i & 1) forced.push_back(nb[i]);
            else free.push_back(nb[i]);
        }
        for (std::uint32_t fm = 0; fm < (1u << free.size()); ++fm) {
            AuxGraph aux;
            aux.v = v;
            std::vector<Vertex> verts = forced;
            for (std::size_t i = 0; i < free.size(); ++i)
                if (fm >> i & 1) verts.push_back(free[i]);
            aux.vertices = VertexSet(std::move(verts));
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (em >> i & 1) aux.edges.emplace_back(v, nb[i]);
            std::sort(aux.edges.begin(), aux.edges.end());
            out.push_back(std::move(aux));
        }
    }
    return out;
}

std::vector<Pairing> oplus(const Pairing& p, const AuxGraph& aux, const VertexSet& lift_set, const VertexSet& bag_t) {
    for (Vertex x : aux.vertices)
        if (!bag_t.contains(x)) fail(ErrorKind::Overlap, "aux vertex " + std::to_string(x) + " lies outside the bag");
    for (const Edge& e : aux.edges) {
        if (!bag_t.contains(e.u) || !bag_t.contains(e.v))
            fail(ErrorKind::Overlap, "aux edge leaves the bag");
        if (e.u != aux.v && e.v != aux.v) fail(ErrorKind::Overlap, "aux edge not incident to the inserted vertex");
    }
    const std::vector<Vertex>& bag = bag_t.members();
    auto cp = to_code(p, bag);
    if (!cp || !detail::valid(*cp)) return {};
    Pairing aux_pairing{aux.vertices, aux.edges, false};
    for (const Edge& e : aux.edges) {
        aux_pairing.active.insert(e.u);
        aux_pairing.active.insert(e.v);
    }
    auto ca = to_code(aux_pairing, bag);
    if (!ca) return {};
    auto start = detail::unite(*cp, *ca);
    if (!start) return {};
    std::uint16_t lmask = 0;
    for (Vertex x : lift_set) {
        int i = position(bag, x);
        if (i >= 0) lmask = static_cast<std::uint16_t>(lmask | (1u << i));
    }
    // Closure under lifts of L-vertices; lifted vertices leave `present`,
    // so each vertex lifts at most once along any path.
    std::vector<PCode> frontier{*start}, all{*start};
    std::set<std::vector<std::uint8_t>> seen;
    auto key = [](const PCode& c) {
        std::vector<std::uint8_t> k(c.nb.begin(), c.nb.begin() + 2 * c.size);
        k.push_back(static_cast<std::uint8_t>(c.present & 0xFF));
        k.push_back(static_cast<std::uint8_t>(c.present >> 8));
        k.push_back(c.loop);
        return k;
    };
    seen.insert(key(*start));
    while (!frontier.empty()) {
        PCode c = frontier.back();
        frontier.pop_back();
        for (int i = 0; i < c.size; ++i) {
            if (!(lmask >> i & 1) || !c.is_present(i)) continue;
            auto next = detail::lift(c, i);
            if (!next || !detail::valid(*next)) continue;
            if (seen.insert(key(*next)).second) {
                frontier.push_back(*next);
                all.push_back(*next);
            }
        }
    }
    std::vector<Pairing> out;
    for (const PCode& c : all) out.push_back(from_code(c, bag));
    return sorted_unique(std::move(out));
}

std::vector<Pairing> zeta(const Pairing& p_prime, const VertexSet& lift_set, Vertex v,
                          const VertexSet& neighborhood, const VertexSet& bag_s) {
    VertexSet bag_t = bag_s;
    bag_t.insert(v);
    std::vector<AuxGraph> auxes = enumerate_aux(v, neighborhood);
    std::vector<Pairing> out;
    for (const Pairing& p : enumerate_pairings(bag_s)) {
        for (const AuxGraph& aux : auxes) {
            auto image = oplus(p, aux, lift_set, bag_t);
            if (std::binary_search(image.begin(), image.end(), p_prime)) {
                out.push_back(p);
                break;
            }
        }
    }
    return sorted_unique(std::move(out));
}

std::vector<std::pair<Pairing, Pairing>> xi(const Pairing& p) {
    if (!is_valid_pairing(p)) return {};
    std::vector<Vertex> bag = bag_of(p);
    // Distinct edges with multiplicity; each copy count is split between sides.
    std::vector<std::pair<Edge, int>> distinct;
    for (const Edge& e : canonical(p).edges) {
        if (!distinct.empty() && distinct.back().first == e) distinct.back().second += 1;
        else distinct.emplace_back(e, 1);
    }
    std::vector<std::pair<Pairing, Pairing>> out;
    std::vector<int> split(distinct.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx < distinct.size()) {
            for (int s = 0; s <= distinct[idx].second; ++s) {
                split[idx] = s;
                rec(idx + 1);
            }
            return;
        }
        Pairing left, right;
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            for (int c = 0; c < split[i]; ++c) left.edges.push_back(distinct[i].first);
            for (int c = split[i]; c < distinct[i].second; ++c) right.edges.push_back(distinct[i].first);
        }
        std::set<Vertex> need_left, need_right;
        for (const Edge& e : left.edges) need_left.insert({e.u, e.v});
        for (const Edge& e : right.edges) need_right.insert({e.u, e.v});
        const std::vector<Vertex>& act = p.active.members();
        // Each active vertex is active on the left, the right, or both.
        std::size_t combos = 1;
        for (std::size_t i = 0; i < act.size(); ++i) combos *= 3;
        for (int loop_side = 0; loop_side < (p.loop ? 2 : 1); ++loop_side) {
            for (std::size_t code = 0; code < combos; ++code) {
                std::vector<Vertex> la, ra;
                std::size_t c = code;
                bool ok = true;
                for (Vertex x : act) {
                    int choice = static_cast<int>(c % 3);
                    c /= 3;
                    bool in_l = choice != 1, in_r = choice != 0;
                    if ((need_left.count(x) && !in_l) || (need_right.count(x) && !in_r)) ok = false;
                    if (in_l) la.push_back(x);
                    if (in_r) ra.push_back(x);
                }
                if (!ok) continue;
                Pairing a{VertexSet(la), left.edges, p.loop && loop_side == 0};
                Pairing b{VertexSet(ra), right.edges, p.loop && loop_side == 1};
                if (is_valid_pairing(a) && is_valid_pairing(b)) out.emplace_back(std::move(a), std::move(b));
            }
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cyc
