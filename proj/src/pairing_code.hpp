#pragma once

// Positional pairing code shared by the pairing algebra and the DP engine.
// Position i stands for the i-th smallest vertex of the bag.

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <vector>

#include "cyc/pairing.hpp"

namespace cyc::detail {

inline constexpr int kMaxPositions = 12;
inline constexpr std::uint8_t kNone = 0xFF;

// nb[2i], nb[2i+1] are the neighbors of position i in ascending order with
// kNone last. A self-loop at i reads {i,i}; a double edge i=j reads {j,j}
// at i and {i,i} at j. Positions outside `present` carry no edges.
struct PCode {
    std::uint16_t present = 0;
    std::uint8_t loop = 0;
    std::uint8_t size = 0;
    std::array<std::uint8_t, 2 * kMaxPositions> nb;

    PCode() { nb.fill(kNone); }
    explicit PCode(int m) : size(static_cast<std::uint8_t>(m)) { nb.fill(kNone); }

    int degree(int i) const {
        return (nb[2 * i] != kNone) + (nb[2 * i + 1] != kNone);
    }
    bool is_present(int i) const { return present >> i & 1; }

    friend bool operator==(const PCode& a, const PCode& b) {
        return a.present == b.present && a.loop == b.loop && a.size == b.size && a.nb == b.nb;
    }
};

struct PCodeHash {
    std::size_t operator()(const PCode& c) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(c.present);
        mix(static_cast<std::uint64_t>(c.loop) << 8 | c.size);
        for (int i = 0; i < c.size; ++i) mix(static_cast<std::uint64_t>(c.nb[2 * i]) << 8 | c.nb[2 * i + 1]);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

inline void sort_slot(PCode& c, int i) {
    if (c.nb[2 * i] > c.nb[2 * i + 1]) std::swap(c.nb[2 * i], c.nb[2 * i + 1]);
}

// Adds one edge; false when a degree would exceed 2.
inline bool add_edge(PCode& c, int a, int b) {
    if (a == b) {
        if (c.degree(a) != 0) return false;
        c.nb[2 * a] = c.nb[2 * a + 1] = static_cast<std::uint8_t>(a);
        return true;
    }
    if (c.degree(a) == 2 || c.degree(b) == 2) return false;
    c.nb[2 * a + 1] = static_cast<std::uint8_t>(b);
    sort_slot(c, a);
    c.nb[2 * b + 1] = static_cast<std::uint8_t>(a);
    sort_slot(c, b);
    return true;
}

inline void remove_slot_value(PCode& c, int i, int value) {
    if (c.nb[2 * i] == value) c.nb[2 * i] = kNone;
    else if (c.nb[2 * i + 1] == value) c.nb[2 * i + 1] = kNone;
    sort_slot(c, i);
}

// Mask of positions lying on cycle components (self-loop, double edge or a
// closed chain of degree-2 positions).
inline std::uint16_t cycle_positions(const PCode& c, int* cycle_count) {
    std::uint16_t seen = 0, on_cycle = 0;
    int count = 0;
    for (int s = 0; s < c.size; ++s) {
        if (seen >> s & 1 || c.degree(s) == 0) continue;
        std::uint16_t comp = 0;
        bool all_two = true;
        int stack[kMaxPositions];
        int top = 0;
        stack[top++] = s;
        seen |= static_cast<std::uint16_t>(1u << s);
        while (top) {
            int x = stack[--top];
            comp |= static_cast<std::uint16_t>(1u << x);
            if (c.degree(x) != 2) all_two = false;
            for (int j = 0; j < 2; ++j) {
                int y = c.nb[2 * x + j];
                if (y == kNone || seen >> y & 1) continue;
                seen |= static_cast<std::uint16_t>(1u << y);
                stack[top++] = y;
            }
        }
        if (all_two) {
            ++count;
            on_cycle |= comp;
        }
    }
    if (cycle_count) *cycle_count = count;
    return on_cycle;
}

inline bool valid(const PCode& c) {
    for (int i = 0; i < c.size; ++i)
        if (!c.is_present(i) && c.degree(i) != 0) return false;
    int cycles = 0;
    std::uint16_t on_cycle = cycle_positions(c, &cycles);
    cycles += c.loop ? 1 : 0;
    if (cycles > 1) return false;
    if (cycles == 1)
        for (int i = 0; i < c.size; ++i)
            if (!(on_cycle >> i & 1) && c.degree(i) != 0) return false;
    return true;
}

// Lift of position v. Inactive v: unchanged. Degree 2 toward distinct u,w:
// edge u-w is added (a present u-w becomes a double edge). On a double edge
// the partner gains a self-loop. A self-loop becomes the vertex-less loop.
// Degree 0 or 1: undefined.
inline std::optional<PCode> lift(const PCode& c, int v) {
    if (!c.is_present(v)) return c;
    if (c.degree(v) != 2) return std::nullopt;
    PCode r = c;
    int a = c.nb[2 * v], b = c.nb[2 * v + 1];
    r.nb[2 * v] = r.nb[2 * v + 1] = kNone;
    r.present = static_cast<std::uint16_t>(r.present & ~(1u << v));
    if (a == v) {
        if (r.loop) return std::nullopt;
        r.loop = 1;
        return r;
    }
    if (a == b) {
        r.nb[2 * a] = r.nb[2 * a + 1] = static_cast<std::uint8_t>(a);
        return r;
    }
    remove_slot_value(r, a, v);
    remove_slot_value(r, b, v);
    r.nb[2 * a + 1] = static_cast<std::uint8_t>(b);
    sort_slot(r, a);
    r.nb[2 * b + 1] = static_cast<std::uint8_t>(a);
    sort_slot(r, b);
    return r;
}

// Graph union: presence OR-ed, edge multiplicities summed. Nullopt when the
// sum is not a valid pairing.
inline std::optional<PCode> unite(const PCode& a, const PCode& b) {
    if (a.loop && b.loop) return std::nullopt;
    PCode r = a;
    r.present = static_cast<std::uint16_t>(a.present | b.present);
    r.loop = static_cast<std::uint8_t>(a.loop | b.loop);
    for (int i = 0; i < b.size; ++i) {
        int x = b.nb[2 * i], y = b.nb[2 * i + 1];
        if (x == i) {
            if (!add_edge(r, i, i)) return std::nullopt;
            continue;
        }
        if (x != kNone && x > i && !add_edge(r, i, x)) return std::nullopt;
        // A double edge lists the partner twice; add the second copy too.
        if (y != kNone && y > i && !add_edge(r, i, y)) return std::nullopt;
    }
    if (!valid(r)) return std::nullopt;
    return r;
}

// Opens an empty position at p, shifting later positions up.
inline PCode insert_position(const PCode& c, int p) {
    PCode r(c.size + 1);
    r.loop = c.loop;
    auto up = [p](int x) { return x == kNone ? kNone : static_cast<std::uint8_t>(x >= p ? x + 1 : x); };
    for (int i = 0; i < c.size; ++i) {
        int j = i >= p ? i + 1 : i;
        r.nb[2 * j] = up(c.nb[2 * i]);
        r.nb[2 * j + 1] = up(c.nb[2 * i + 1]);
    }
    std::uint16_t lo = static_cast<std::uint16_t>(c.present & ((1u << p) - 1));
    std::uint16_t hi = static_cast<std::uint16_t>((c.present >> p) << (p + 1));
    r.present = static_cast<std::uint16_t>(lo | hi);
    return r;
}

// Removes an inactive position p, shifting later positions down.
inline PCode erase_position(const PCode& c, int p) {
    PCode r(c.size - 1);
    r.loop = c.loop;
    auto down = [p](int x) { return x == kNone ? kNone : static_cast<std::uint8_t>(x > p ? x - 1 : x); };
    for (int i = 0; i < c.size; ++i) {
        if (i == p) continue;
        int j = i > p ? i - 1 : i;
        r.nb[2 * j] = down(c.nb[2 * i]);
        r.nb[2 * j + 1] = down(c.nb[2 * i + 1]);
    }
    std::uint16_t lo = static_cast<std::uint16_t>(c.present & ((1u << p) - 1));
    std::uint16_t hi = static_cast<std::uint16_t>((c.present >> (p + 1)) << p);
    r.present = static_cast<std::uint16_t>(lo | hi);
    return r;
}

// All valid codes over m positions in canonical generation order.
std::vector<PCode> enumerate_codes(int m);

// Closed-form |P(m)|.
std::uint64_t count_codes(int m);

// Position i of a code is bag[i]. to_code yields nullopt if p does not fit
// (degree above 2, an edge or active vertex outside the bag).
std::optional<PCode> to_code(const Pairing& p, const std::vector<Vertex>& bag);
Pairing from_code(const PCode& c, const std::vector<Vertex>& bag);

}  // namespace cyc::detail
