#include "cyc/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cyc/dense.hpp"

namespace cyc {

int TreeDecomposition::width() const {
    std::size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return static_cast<int>(best) - 1;
}

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Insert: return "insert";
        case NodeKind::Forget: return "forget";
        case NodeKind::Join: return "join";
    }
    return "?";
}

int NiceTreeDecomposition::width() const {
    std::size_t best = 0;
    for (const auto& node : nodes) best = std::max(best, node.bag.size());
    return static_cast<int>(best) - 1;
}

TreeDecomposition NiceTreeDecomposition::as_tree() const {
    TreeDecomposition d;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        d.bags.push_back(nodes[t].bag);
        for (int c : nodes[t].children) d.tree_edges.emplace_back(c, static_cast<int>(t));
    }
    return d;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& d) {
    ValidationReport rep;
    auto violation = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const int nodes = static_cast<int>(d.bags.size());
    if (nodes == 0) {
        if (g.num_vertices() > 0) violation("no bags but the graph has vertices");
        return rep;
    }
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(nodes));
    bool edges_ok = true;
    for (auto [a, b] : d.tree_edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
            violation("tree edge " + std::to_string(a) + "-" + std::to_string(b) + " is malformed");
            edges_ok = false;
            continue;
        }
        tree[static_cast<std::size_t>(a)].push_back(b);
        tree[static_cast<std::size_t>(b)].push_back(a);
    }
    if (!edges_ok) return rep;
    if (static_cast<int>(d.tree_edges.size()) != nodes - 1) violation("decomposition graph is not a tree (edge count)");
    {
        std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++count;
                    stack.push_back(y);
                }
        }
        if (count != nodes) violation("decomposition graph is not connected");
    }
    if (!rep.ok) return rep;

    std::map<Vertex, std::vector<int>> occurrences;
    for (int t = 0; t < nodes; ++t)
        for (Vertex v : d.bags[static_cast<std::size_t>(t)]) {
            if (!g.has_vertex(v)) violation("bag " + std::to_string(t) + " holds non-vertex " + std::to_string(v));
            occurrences[v].push_back(t);
        }
    for (Vertex v : g.vertices())
        if (!occurrences.count(v)) violation("vertex " + std::to_string(v) + " is in no bag");
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const auto& bag : d.bags)
            if (bag.contains(e.u) && bag.contains(e.v)) {
                covered = true;
                break;
            }
        if (!covered) violation("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is in no bag");
    }
    for (const auto& [v, where] : occurrences) {
        std::vector<char> holds(static_cast<std::size_t>(nodes), 0);
        for (int t : where) holds[static_cast<std::size_t>(t)] = 1;
        std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
        std::vector<int> stack{where.front()};
        seen[static_cast<std::size_t>(where.front())] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree[static_cast<std::size_t>(x)])
                if (holds[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++count;
                    stack.push_back(y);
                }
        }
        if (count != where.size()) violation("bags holding vertex " + std::to_string(v) + " are not connected");
    }
    return rep;
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& d) {
    ValidationReport rep = validate(g, d);
    if (!rep.ok) fail(ErrorKind::InvalidDecomposition, rep.violations.front());
    NiceTreeDecomposition out;
    auto add_node = [&](NiceNode node) {
        out.nodes.push_back(std::move(node));
        return static_cast<int>(out.nodes.size()) - 1;
    };
    if (d.bags.empty()) {
        out.root = add_node(NiceNode{});
        return out;
    }
    // Moves from a node with bag `from` to bag `to` by forgets then inserts.
    auto transition = [&](int node, const VertexSet& to) {
        VertexSet bag = out.nodes[static_cast<std::size_t>(node)].bag;
        for (Vertex v : bag.minus(to)) {
            VertexSet next = bag;
            next.erase(v);
            node = add_node(NiceNode{NodeKind::Forget, v, next, {node}});
            bag = std::move(next);
        }
        for (Vertex v : to.minus(bag)) {
            VertexSet next = bag;
            next.insert(v);
            node = add_node(NiceNode{NodeKind::Insert, v, next, {node}});
            bag = std::move(next);
        }
        return node;
    };

    const int nodes = static_cast<int>(d.bags.size());
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(nodes));
    for (auto [a, b] : d.tree_edges) {
        tree[static_cast<std::size_t>(a)].push_back(b);
        tree[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : tree) std::sort(row.begin(), row.end());
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1), order;
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : tree[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
            }
    }
    std::vector<int> built(static_cast<std::size_t>(nodes), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int t = *it;
        const VertexSet& bag = d.bags[static_cast<std::size_t>(t)];
        std::vector<int> branches;
        for (int c : tree[static_cast<std::size_t>(t)])
            if (c != parent[static_cast<std::size_t>(t)])
                branches.push_back(transition(built[static_cast<std::size_t>(c)], bag));
        int node;
        if (branches.empty()) {
            node = transition(add_node(NiceNode{}), bag);
        } else {
            node = branches.front();
            for (std::size_t i = 1; i < branches.size(); ++i)
                node = add_node(NiceNode{NodeKind::Join, -1, bag, {node, branches[i]}});
        }
        built[static_cast<std::size_t>(t)] = node;
    }
    out.root = transition(built[0], VertexSet{});
    return out;
}

ValidationReport check_nice(const Graph& g, const NiceTreeDecomposition& d) {
    ValidationReport rep;
    auto violation = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const int n = static_cast<int>(d.nodes.size());
    if (n == 0 || d.root != n - 1) {
        violation("root must be the last node");
        return rep;
    }
    if (!d.nodes.back().bag.empty()) violation("root bag is not empty");
    std::vector<int> parents(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < n; ++t) {
        const NiceNode& node = d.nodes[static_cast<std::size_t>(t)];
        std::string at = "node " + std::to_string(t) + " (" + node_kind_name(node.kind) + ")";
        for (int c : node.children) {
            if (c < 0 || c >= t) {
                violation(at + " has a child that does not precede it");
                return rep;
            }
            parents[static_cast<std::size_t>(c)] += 1;
        }
        auto child_bag = [&](std::size_t i) -> const VertexSet& {
            return d.nodes[static_cast<std::size_t>(node.children[i])].bag;
        };
        switch (node.kind) {
            case NodeKind::Leaf:
                if (!node.children.empty()) violation(at + " has children");
                if (t != d.root && !node.bag.empty()) violation(at + " is a non-root leaf with a nonempty bag");
                break;
            case NodeKind::Insert: {
                if (node.children.size() != 1) { violation(at + " needs one child"); break; }
                VertexSet expect = child_bag(0);
                if (expect.contains(node.vertex)) violation(at + " inserts a vertex already present");
                expect.insert(node.vertex);
                if (expect != node.bag) violation(at + " bag differs from child bag plus vertex");
                break;
            }
            case NodeKind::Forget: {
                if (node.children.size() != 1) { violation(at + " needs one child"); break; }
                VertexSet expect = child_bag(0);
                if (!expect.contains(node.vertex)) violation(at + " forgets an absent vertex");
                expect.erase(node.vertex);
                if (expect != node.bag) violation(at + " bag differs from child bag minus vertex");
                break;
            }
            case NodeKind::Join:
                if (node.children.size() != 2) { violation(at + " needs two children"); break; }
                if (child_bag(0) != node.bag || child_bag(1) != node.bag) violation(at + " children bags differ");
                break;
        }
    }
    for (int t = 0; t < n - 1; ++t)
        if (parents[static_cast<std::size_t>(t)] != 1) violation("node " + std::to_string(t) + " does not have exactly one parent");
    if (!rep.ok) return rep;
    ValidationReport axioms = validate(g, d.as_tree());
    for (auto& v : axioms.violations) violation(v);
    return rep;
}

// ---- elimination orders ----------------------------------------------------

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    DenseGraph dg(g);
    const int n = dg.n;
    if (static_cast<int>(order.size()) != n) fail(ErrorKind::Parameter, "order must list every vertex once");
    std::vector<int> pos(static_cast<std::size_t>(n), -1), idx;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = dg.index_of(order[i]);
        if (x < 0 || pos[static_cast<std::size_t>(x)] >= 0) fail(ErrorKind::Parameter, "order must list every vertex once");
        pos[static_cast<std::size_t>(x)] = static_cast<int>(i);
        idx.push_back(x);
    }
    TreeDecomposition d;
    if (n == 0) {
        d.bags.emplace_back();
        return d;
    }
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y : dg.adj[static_cast<std::size_t>(x)]) adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int x = idx[static_cast<std::size_t>(i)];
        std::vector<int> higher;
        for (int y = 0; y < n; ++y)
            if (adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] && pos[static_cast<std::size_t>(y)] > i) higher.push_back(y);
        for (int a : higher)
            for (int b : higher)
                if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        std::vector<Vertex> bag{dg.id[static_cast<std::size_t>(x)]};
        int best = -1;
        for (int y : higher) {
            bag.push_back(dg.id[static_cast<std::size_t>(y)]);
            if (best < 0 || pos[static_cast<std::size_t>(y)] < pos[static_cast<std::size_t>(best)]) best = y;
        }
        d.bags.emplace_back(std::move(bag));
        parent[static_cast<std::size_t>(i)] = best < 0 ? -1 : pos[static_cast<std::size_t>(best)];
    }
    int last_root = -1;
    for (int i = 0; i < n; ++i) {
        if (parent[static_cast<std::size_t>(i)] >= 0) {
            d.tree_edges.emplace_back(i, parent[static_cast<std::size_t>(i)]);
        } else {
            if (last_root >= 0) d.tree_edges.emplace_back(last_root, i);
            last_root = i;
        }
    }
    return d;
}

TreewidthResult heuristic_treewidth(const Graph& g) {
    DenseGraph dg(g);
    const int n = dg.n;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y : dg.adj[static_cast<std::size_t>(x)]) adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = 0;
        int best_deg = 0;
        for (int x = 0; x < n; ++x) {
            if (gone[static_cast<std::size_t>(x)]) continue;
            std::vector<int> nb;
            for (int y = 0; y < n; ++y)
                if (!gone[static_cast<std::size_t>(y)] && adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) nb.push_back(y);
            long fill = 0;
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    if (!adj[static_cast<std::size_t>(nb[a])][static_cast<std::size_t>(nb[b])]) ++fill;
            int deg = static_cast<int>(nb.size());
            if (best < 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = x;
                best_fill = fill;
                best_deg = deg;
            }
        }
        for (int a = 0; a < n; ++a)
            if (!gone[static_cast<std::size_t>(a)] && adj[static_cast<std::size_t>(best)][static_cast<std::size_t>(a)])
                for (int b = 0; b < n; ++b)
                    if (b != a && !gone[static_cast<std::size_t>(b)] && adj[static_cast<std::size_t>(best)][static_cast<std::size_t>(b)])
                        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        gone[static_cast<std::size_t>(best)] = 1;
        order.push_back(dg.id[static_cast<std::size_t>(best)]);
    }
    TreewidthResult r;
    r.decomposition = decomposition_from_order(g, order);
    r.width = r.decomposition.width();
    return r;
}

namespace {

using Mask = std::uint64_t;

// Vertices outside s and v that v reaches through s.
int q_value(const DenseGraph& dg, Mask s, int v) {
    Mask reached = Mask{1} << v;
    Mask frontier = reached;
    Mask boundary = 0;
    while (frontier) {
        int x = __builtin_ctzll(frontier);
        frontier &= frontier - 1;
        Mask nb = dg.mask[static_cast<std::size_t>(x)] & ~reached;
        Mask inside = nb & s;
        boundary |= nb & ~s;
        reached |= inside;
        frontier |= inside;
    }
    return __builtin_popcountll(boundary & ~(Mask{1} << v));
}

struct State {
    int value;
    int last;
};

}  // namespace

std::optional<TreewidthResult> exact_treewidth(const Graph& g, int budget) {
    const int n = g.num_vertices();
    if (n > kExactTreewidthMaxVertices)
        fail(ErrorKind::Size, "exact treewidth is capped at " + std::to_string(kExactTreewidthMaxVertices) + " vertices");
    if (n == 0) {
        if (budget < -1) return std::nullopt;
        TreewidthResult r;
        r.width = -1;
        r.decomposition.bags.emplace_back();
        return r;
    }
    DenseGraph dg(g);
    TreewidthResult heur = heuristic_treewidth(g);
    int best = heur.width;
    // Level sets over eliminated prefixes; each keeps TW(S) < best and <= budget.
    std::vector<std::unordered_map<Mask, State>> levels(static_cast<std::size_t>(n) + 1);
    levels[0][0] = State{-1, -1};
    Mask best_prefix = 0;
    bool improved = false;
    const Mask full = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
    for (int size = 0; size < n; ++size) {
        auto& cur = levels[static_cast<std::size_t>(size)];
        auto& next = levels[static_cast<std::size_t>(size) + 1];
        const int bound = std::min(best - 1, budget);
        std::vector<Mask> keys;
        keys.reserve(cur.size());
        for (const auto& kv : cur) keys.push_back(kv.first);
        std::sort(keys.begin(), keys.end());
        for (Mask s : keys) {
            const State st = cur[s];
            if (st.value > bound) continue;
            int rest = std::max(st.value, n - size - 1);
            if (rest < best && rest <= budget) {
                best = rest;
                best_prefix = s;
                improved = true;
                if (best <= st.value) continue;
            }
            for (int v = 0; v < n; ++v) {
                if (s >> v & 1) continue;
                int val = std::max(st.value, q_value(dg, s, v));
                if (val > std::min(best - 1, budget)) continue;
                Mask t = s | (Mask{1} << v);
                auto it = next.find(t);
                if (it == next.end() || val < it->second.value) next[t] = State{val, v};
            }
        }
        if (next.empty()) break;
    }
    auto full_it = levels[static_cast<std::size_t>(n)].find(full);
    if (full_it != levels[static_cast<std::size_t>(n)].end() && full_it->second.value < best) {
        best = full_it->second.value;
        best_prefix = full;
        improved = true;
    }
    if (!improved) {
        if (heur.width > budget) return std::nullopt;
        return heur;
    }
    std::vector<int> prefix;
    for (Mask s = best_prefix; s;) {
        int size = __builtin_popcountll(s);
        int v = levels[static_cast<std::size_t>(size)].at(s).last;
        prefix.push_back(v);
        s &= ~(Mask{1} << v);
    }
    std::reverse(prefix.begin(), prefix.end());
    std::vector<Vertex> order;
    for (int v : prefix) order.push_back(dg.id[static_cast<std::size_t>(v)]);
    for (int v = 0; v < n; ++v)
        if (!(best_prefix >> v & 1)) order.push_back(dg.id[static_cast<std::size_t>(v)]);
    TreewidthResult r;
    r.decomposition = decomposition_from_order(g, order);
    r.width = r.decomposition.width();
    if (r.width != best) fail(ErrorKind::Backend, "treewidth witness does not match the computed width");
    return r;
}

// ---- file format -----------------------------------------------------------

TreeDecomposition parse_td(std::istream& in) {
    TreeDecomposition d;
    std::string line;
    long line_no = 0;
    bool have_header = false;
    long declared_bags = 0, declared_size = 0, declared_n = 0;
    std::vector<char> seen;
    auto bad = [&](const std::string& msg) {
        fail(ErrorKind::Format, "td line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "s") {
            std::string kind;
            if (!(ls >> kind >> declared_bags >> declared_size >> declared_n) || kind != "td" || declared_bags < 0)
                bad("malformed header");
            if (have_header) bad("duplicate header");
            if (declared_bags > 10000000) bad("too many bags");
            have_header = true;
            d.bags.assign(static_cast<std::size_t>(declared_bags), VertexSet{});
            seen.assign(static_cast<std::size_t>(declared_bags), 0);
        } else if (tag == "b") {
            if (!have_header) bad("bag before header");
            long id;
            if (!(ls >> id) || id < 1 || id > declared_bags) bad("bad bag id");
            if (seen[static_cast<std::size_t>(id - 1)]) bad("duplicate bag id");
            seen[static_cast<std::size_t>(id - 1)] = 1;
            std::vector<Vertex> members;
            long v;
            while (ls >> v) {
                if (v < 0) bad("negative vertex id");
                members.push_back(static_cast<Vertex>(v));
            }
            if (!ls.eof()) bad("malformed bag");
            d.bags[static_cast<std::size_t>(id - 1)] = VertexSet(std::move(members));
        } else {
            if (!have_header) bad("tree edge before header");
            std::istringstream es(line);
            long a, b;
            std::string extra;
            if (!(es >> a >> b) || (es >> extra)) bad("malformed tree edge");
            if (a < 1 || b < 1 || a > declared_bags || b > declared_bags) bad("tree edge references unknown bag");
            d.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
    }
    if (!have_header) fail(ErrorKind::Format, "missing 's td' header");
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) fail(ErrorKind::Format, "bag " + std::to_string(i + 1) + " missing");
    if (declared_bags > 0 && d.width() + 1 != declared_size)
        fail(ErrorKind::Format, "header bag size does not match the largest bag");
    return d;
}

TreeDecomposition read_td_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open " + path);
    return parse_td(in);
}

void write_td(std::ostream& out, const TreeDecomposition& d, int num_vertices) {
    out << "s td " << d.bags.size() << ' ' << (d.bags.empty() ? 0 : d.width() + 1) << ' ' << num_vertices << '\n';
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : d.bags[i]) out << ' ' << v;
        out << '\n';
    }
    for (auto [a, b] : d.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

void write_td_file(const std::string& path, const TreeDecomposition& d, int num_vertices) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write " + path);
    write_td(out, d, num_vertices);
}

}  // namespace cyc
