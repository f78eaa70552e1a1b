#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyc.h"

namespace {

using nlohmann::json;

enum Exit { kCompleted = 0, kUsage = 2, kBudget = 3, kInvalid = 4 };

// A failed C API call, carried to the top level.
struct ApiFailure {
    cyc_status status;
    std::string message;
};

int exit_code_of(cyc_status s) {
    switch (s) {
        case CYC_ERR_BUDGET:
        case CYC_ERR_SIZE: return kBudget;
        case CYC_ERR_PARAMETER:
        case CYC_ERR_UNKNOWN_NAME:
        case CYC_ERR_NULL_ARGUMENT: return kUsage;
        default: return kInvalid;
    }
}

void check(cyc_status s) {
    if (s != CYC_OK) throw ApiFailure{s, cyc_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    cyc_string_free(s);
    return out;
}

struct GraphHandle {
    cyc_graph* g = nullptr;
    ~GraphHandle() { cyc_graph_destroy(g); }
};

struct EmbeddingHandle {
    cyc_embedding* e = nullptr;
    ~EmbeddingHandle() { cyc_embedding_destroy(e); }
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ApiFailure{CYC_ERR_IO, "cannot open " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ApiFailure{CYC_ERR_IO, "cannot write " + path};
    out << text;
}

std::vector<int> parse_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "'" + item + "' is not an integer");
        }
    }
    return out;
}

struct Common {
    std::string graph;
    std::string emb;
    std::string td;
    std::string annotated;
    bool annotated_set = false;
    int k = -1;
    bool json = false;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string constants;
    std::int64_t budget_ms = -1;
};

// Loads --graph and applies --annotated. With neither `r` lines nor
// --annotated, R is the whole vertex set.
void load_graph(const Common& c, GraphHandle& h) {
    if (c.graph.empty()) throw CLI::RequiredError("--graph");
    check(cyc_graph_read_file(c.graph.c_str(), &h.g));
    std::vector<int> r;
    if (c.annotated_set) {
        r = parse_list(c.annotated, "--annotated");
    } else {
        size_t count = 0;
        check(cyc_graph_annotated(h.g, nullptr, 0, &count));
        if (count > 0) return;
        size_t n = static_cast<size_t>(cyc_graph_num_vertices(h.g));
        // Vertex ids are 0..n-1 in graph files.
        for (size_t v = 0; v < n; ++v) r.push_back(static_cast<int>(v));
    }
    check(cyc_graph_set_annotated(h.g, r.data(), r.size()));
}

void load_embedding(const Common& c, const GraphHandle& h, EmbeddingHandle& e) {
    if (c.emb.empty()) throw CLI::RequiredError("--emb");
    check(cyc_embedding_read_file(h.g, c.emb.c_str(), 1, &e.e));
}

cyc_budget budget_of(const Common& c) {
    cyc_budget b;
    cyc_budget_default(&b);
    if (c.budget_ms >= 0) b.time_limit_ms = c.budget_ms;
    return b;
}

int need_k(const Common& c) {
    if (c.k < 0) throw CLI::RequiredError("-k");
    return c.k;
}

struct Outcome {
    std::string answer;  // last stdout line
    json answer_json;
    json report = json::object();
    std::vector<std::string> lines;  // printed before the answer
};

std::string yes_no(int b) { return b ? "YES" : "NO"; }

// ---- subcommands ------------------------------------------------------------

struct OracleArgs {
    bool cyclability = false;
    bool hamiltonian = false;
    bool hypohamiltonian = false;
    std::string edge;
    std::string through;
    bool witness = false;
};

Outcome run_oracle(const Common& c, const OracleArgs& a) {
    GraphHandle h;
    load_graph(c, h);
    const cyc_budget b = budget_of(c);
    Outcome o;
    int ans = 0;
    if (a.cyclability) {
        check(cyc_oracle_cyclability(h.g, &b, &ans));
        o.answer = std::to_string(ans);
        o.answer_json = ans;
        o.report["query"] = "cyclability";
    } else if (a.hamiltonian) {
        check(cyc_oracle_hamiltonian(h.g, &b, &ans));
        o.report["query"] = "hamiltonian";
    } else if (a.hypohamiltonian) {
        check(cyc_oracle_hypohamiltonian(h.g, &b, &ans));
        o.report["query"] = "hypohamiltonian";
    } else if (!a.edge.empty()) {
        auto e = parse_list(a.edge, "--edge");
        if (e.size() != 2) throw CLI::ValidationError("--edge", "expects u,v");
        check(cyc_oracle_hamiltonian_with_edge(h.g, e[0], e[1], &b, &ans));
        o.report["query"] = "hamiltonian_with_edge";
    } else if (!a.through.empty()) {
        auto s = parse_list(a.through, "--through");
        int found = 0;
        size_t len = 0;
        std::vector<int> cyc(static_cast<size_t>(cyc_graph_num_vertices(h.g)) + 1);
        check(cyc_oracle_cycle_through(h.g, s.data(), s.size(), &b, &found, cyc.data(), cyc.size(), &len));
        cyc.resize(found ? len : 0);
        ans = found;
        o.report["query"] = "cycle_through";
        o.report["cycle"] = cyc;
        if (found) {
            std::string line = "cycle";
            for (int v : cyc) line += " " + std::to_string(v);
            o.lines.push_back(line);
        }
    } else {
        const int k = need_k(c);
        o.report["query"] = "pac";
        o.report["k"] = k;
        if (a.witness) {
            int found = 0;
            size_t count = 0;
            std::vector<int> s(static_cast<size_t>(k) + 1);
            check(cyc_oracle_uncyclable_subset(h.g, k, &b, &found, s.data(), s.size(), &count));
            s.resize(found ? count : 0);
            ans = !found;
            o.report["uncyclable"] = s;
            if (found) {
                std::string line = "uncyclable";
                for (int v : s) line += " " + std::to_string(v);
                o.lines.push_back(line);
            }
        } else {
            check(cyc_oracle_pac(h.g, k, &b, &ans));
        }
    }
    if (o.answer.empty()) {
        o.answer = yes_no(ans);
        o.answer_json = ans != 0;
    }
    return o;
}

struct DpArgs {
    int width_cap = 5;
    bool lift_as_printed = false;
    bool join_as_printed = false;
    bool no_prune = false;
    bool trace = false;
};

Outcome run_dp(const Common& c, const DpArgs& a) {
    GraphHandle h;
    load_graph(c, h);
    const int k = need_k(c);
    cyc_dp_options opt;
    cyc_dp_options_default(&opt);
    opt.width_cap = a.width_cap;
    opt.lift_as_printed = a.lift_as_printed;
    opt.join_as_printed = a.join_as_printed;
    opt.prune = !a.no_prune;
    opt.trace = a.trace;
    std::string td = c.td.empty() ? "" : read_text(c.td);
    int ans = 0;
    char* report = nullptr;
    check(cyc_dp_solve(h.g, k, c.td.empty() ? nullptr : td.c_str(), &opt, nullptr, &ans, &report));
    Outcome o;
    o.report = json::parse(take(report));
    size_t rcount = 0;
    check(cyc_graph_annotated(h.g, nullptr, 0, &rcount));
    if (static_cast<int>(rcount) < k)
        std::cerr << "warning: |R| = " << rcount << " < k = " << k << ", the instance is vacuously yes\n";
    if (a.trace)
        for (const auto& line : o.report["trace"]) o.lines.push_back(line.get<std::string>());
    o.answer = yes_no(ans);
    o.answer_json = ans != 0;
    return o;
}

Outcome run_tw(const Common& c, const std::string& out_td) {
    GraphHandle h;
    load_graph(c, h);
    int width = 0, exact = 0;
    char* td = nullptr;
    check(cyc_treewidth(h.g, &width, &exact, &td));
    std::string text = take(td);
    if (!out_td.empty()) write_text(out_td, text);
    Outcome o;
    o.report = {{"width", width}, {"exact", exact != 0}};
    if (!exact) o.lines.push_back("upper bound from the min-fill heuristic");
    o.answer = std::to_string(width);
    o.answer_json = width;
    return o;
}

struct GenArgs {
    std::string name;
    std::vector<std::int64_t> params;
    std::string out;
    std::string emb;
    std::string roles;
    std::string cert;
    std::vector<std::string> instances;
    bool cubic_planar = false;
};

Outcome run_gen(const Common& c, const GenArgs& a) {
    GraphHandle out;
    Outcome o;
    if (a.name == "clique_reduction") {
        GraphHandle in;
        load_graph(c, in);
        int k_prime = 0;
        char* roles = nullptr;
        check(cyc_clique_reduction(in.g, need_k(c), &out.g, &k_prime, &roles));
        std::string r = take(roles);
        if (!a.roles.empty()) write_text(a.roles, r + "\n");
        o.report["k_prime"] = k_prime;
    } else if (a.name == "cross_composition") {
        std::vector<GraphHandle> handles(a.instances.size());
        std::vector<const cyc_graph*> graphs;
        std::vector<int> edges;
        for (std::size_t i = 0; i < a.instances.size(); ++i) {
            const std::string& item = a.instances[i];
            auto colon = item.rfind(':');
            if (colon == std::string::npos) throw CLI::ValidationError("--instance", "expects FILE:u,v");
            auto e = parse_list(item.substr(colon + 1), "--instance");
            if (e.size() != 2) throw CLI::ValidationError("--instance", "expects FILE:u,v");
            check(cyc_graph_read_file(item.substr(0, colon).c_str(), &handles[i].g));
            graphs.push_back(handles[i].g);
            edges.insert(edges.end(), e.begin(), e.end());
        }
        int k = 0;
        check(cyc_cross_composition(graphs.data(), edges.data(), graphs.size(), a.cubic_planar, &out.g, &k));
        o.report["k"] = k;
    } else {
        EmbeddingHandle emb;
        char* description = nullptr;
        char* cert_text = nullptr;
        check(cyc_generate(a.name.c_str(), a.params.data(), a.params.size(), c.seed, &out.g, &emb.e, &description,
                           &cert_text));
        o.report["description"] = take(description);
        const bool has_cert = cert_text != nullptr;
        std::string cert_json = has_cert ? take(cert_text) : std::string();
        if (!a.emb.empty()) {
            if (!emb.e) throw ApiFailure{CYC_ERR_PARAMETER, a.name + " has no plane embedding"};
            char* text = nullptr;
            check(cyc_embedding_serialize(emb.e, &text));
            write_text(a.emb, take(text));
        }
        if (!a.cert.empty()) {
            if (!has_cert) throw ApiFailure{CYC_ERR_PARAMETER, a.name + " has no certificate"};
            write_text(a.cert, cert_json + "\n");
        }
    }
    char* text = nullptr;
    check(cyc_graph_serialize(out.g, &text));
    std::string graph_text = take(text);
    if (!a.out.empty())
        write_text(a.out, graph_text);
    else
        o.lines.push_back(graph_text.substr(0, graph_text.empty() ? 0 : graph_text.size() - 1));
    const int n = cyc_graph_num_vertices(out.g);
    o.report["vertices"] = n;
    o.report["edges"] = cyc_graph_num_edges(out.g);
    o.answer = std::to_string(n);
    o.answer_json = n;
    return o;
}

struct PipelineArgs {
    bool reduced = false;
    int width_cap = 7;
    bool fallback = false;
    bool trace = false;
};

Outcome run_pipeline(const Common& c, const PipelineArgs& a) {
    GraphHandle h;
    load_graph(c, h);
    EmbeddingHandle e;
    if (!c.emb.empty()) load_embedding(c, h, e);
    cyc_pipeline_options opt;
    cyc_pipeline_options_default(&opt);
    opt.constants = c.constants.empty() ? nullptr : c.constants.c_str();
    opt.reduced = a.reduced;
    opt.dp_width_cap = a.width_cap;
    opt.fallback_non_planar = a.fallback;
    opt.oracle = budget_of(c);
    int ans = 0;
    char* report = nullptr;
    check(cyc_pipeline_solve(h.g, e.e, need_k(c), &opt, &ans, &report));
    Outcome o;
    o.report = json::parse(take(report));
    if (a.trace)
        for (const auto& line : o.report["trace"]) o.lines.push_back(line.get<std::string>());
    o.answer = yes_no(ans);
    o.answer_json = ans != 0;
    return o;
}

Outcome run_verify(const Common& c, const std::string& kind, const std::string& cert) {
    GraphHandle h;
    load_graph(c, h);
    int ok = 0;
    char* violations = nullptr;
    if (kind == "td") {
        if (c.td.empty()) throw CLI::RequiredError("--td");
        check(cyc_td_validate(h.g, read_text(c.td).c_str(), &ok, &violations));
    } else {
        EmbeddingHandle e;
        load_embedding(c, h, e);
        if (cert.empty()) throw CLI::RequiredError("--cert");
        const std::string text = read_text(cert);
        if (kind == "concentric")
            check(cyc_verify_concentric(h.g, e.e, text.c_str(), &ok, &violations));
        else
            check(cyc_verify_annulus(h.g, e.e, text.c_str(), &ok, &violations));
    }
    Outcome o;
    std::vector<std::string> v;
    std::istringstream in(take(violations));
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) v.push_back(line);
    o.report = {{"kind", kind}, {"violations", v}};
    for (const auto& line : v) o.lines.push_back("violation: " + line);
    o.answer = yes_no(ok);
    o.answer_json = ok != 0;
    return o;
}

void suite_line(const char* line, void* user) {
    auto* o = static_cast<Outcome*>(user);
    o->lines.push_back(line);
    std::printf("%s\n", line);
    std::fflush(stdout);
}

void collect_line(const char* line, void* user) { static_cast<Outcome*>(user)->lines.push_back(line); }

Outcome run_suite(const std::string& level, int criterion, bool stream) {
    Outcome o;
    int all = 0;
    check(cyc_suite_run(level == "quick", criterion, stream ? suite_line : collect_line, &o, &all));
    o.report = {{"level", level}, {"criteria", o.lines}};
    if (stream) o.lines.clear();
    o.answer = all ? "PASS" : "FAIL";
    o.answer_json = all != 0;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclability and planar annotated cyclability: brute-force oracle, treewidth DP over pairing "
                 "signatures, and the irrelevant-vertex pipeline on plane graphs."};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* sub, bool graph) {
        if (graph) sub->add_option("--graph", c.graph, "Graph file (p cyc / e / r lines)")->required();
        sub->add_flag("--json", c.json, "Emit a machine-readable report (schema 1)");
        sub->add_option("--threads", c.threads, "Worker threads; work runs on one thread")->check(CLI::PositiveNumber);
        sub->add_option("--seed", c.seed, "Seed for randomized generators");
        sub->add_option("--budget-ms", c.budget_ms, "Oracle time budget in milliseconds")->check(CLI::NonNegativeNumber);
    };
    auto add_pac = [&](CLI::App* sub) {
        sub->add_option("-k", c.k, "Subset size k")->check(CLI::NonNegativeNumber);
        sub->add_option("--annotated", c.annotated, "Annotated set R as v1,v2,... (overrides r lines; default all vertices "
                                                   "when the file has none)")
            ->each([&](const std::string&) { c.annotated_set = true; });
    };

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Brute-force cyclability oracle: PAC by subset enumeration, cyclability, "
                                                "Hamiltonicity and hypohamiltonicity");
    add_common(oracle, true);
    add_pac(oracle);
    oracle->add_flag("--cyclability", oa.cyclability, "Print the cyclability of the graph");
    oracle->add_flag("--hamiltonian", oa.hamiltonian, "Decide Hamiltonicity");
    oracle->add_flag("--hypohamiltonian", oa.hypohamiltonian, "Decide hypohamiltonicity");
    oracle->add_option("--edge", oa.edge, "Decide a Hamiltonian cycle through the edge u,v");
    oracle->add_option("--through", oa.through, "Find a cycle through v1,v2,...");
    oracle->add_flag("--witness", oa.witness, "With -k, print a k-subset of R on no cycle");

    DpArgs da;
    auto* dp = app.add_subcommand("dp", "Treewidth dynamic program over pairing signatures on a nice tree "
                                        "decomposition (leaf, insert, forget, join)");
    add_common(dp, true);
    add_pac(dp);
    dp->add_option("--td", c.td, "Tree decomposition (.td); exact treewidth when absent");
    dp->add_option("--width-cap", da.width_cap, "Largest accepted width")->check(CLI::Range(0, 11));
    dp->add_flag("--lift-as-printed", da.lift_as_printed, "Lift bag vertices at insert nodes as printed (unsound)");
    dp->add_flag("--join-as-printed", da.join_as_printed, "Join entries with any K1, K2");
    dp->add_flag("--no-prune", da.no_prune, "Keep pairings that can no longer close");
    dp->add_flag("--trace,--trace-dp", da.trace, "Print one line per node");

    std::string tw_out;
    auto* tw = app.add_subcommand("tw", "Exact treewidth by a subset dynamic program (heuristic above 32 vertices)");
    add_common(tw, true);
    tw->add_option("-o,--output,--emit-td", tw_out, "Write the decomposition as .td");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generators: catalog graphs, walls, rings of rings, the clique-to-cyclability "
                                          "reduction and the AND-cross-composition");
    gen->add_option("name", ga.name,
                    "petersen | grid a b | cycle n | complete n | prism n | star n | random_connected n m | "
                    "random_k_connected n k | ring_of_rings r len | wall h | clique_reduction | cross_composition")
        ->required();
    gen->add_option("params", ga.params, "Integer parameters of the catalog entry");
    gen->add_option("--graph", c.graph, "Input graph for clique_reduction");
    gen->add_flag("--json", c.json, "Emit a machine-readable report (schema 1)");
    gen->add_option("--seed", c.seed, "Seed for randomized generators");
    gen->add_option("--threads", c.threads, "Worker threads; work runs on one thread")->check(CLI::PositiveNumber);
    gen->add_option("-k", c.k, "Odd clique size for clique_reduction");
    gen->add_option("-o,--output", ga.out, "Write the graph file here instead of stdout");
    gen->add_option("--emb", ga.emb, "Write the plane embedding (.rot)");
    gen->add_option("--roles", ga.roles, "Write clique_reduction vertex roles (JSON)");
    gen->add_option("--cert", ga.cert, "Write the railed-annulus certificate (JSON)");
    gen->add_option("--instance", ga.instances, "cross_composition instance FILE:u,v (repeatable)");
    gen->add_flag("--cubic-planar", ga.cubic_planar, "cross_composition: verify the output is cubic and planar");

    PipelineArgs pa;
    auto* pipeline = app.add_subcommand("pipeline", "Planar annotated cyclability: DP on small width, else delete a "
                                                    "problem-irrelevant vertex or un-annotate a color-irrelevant one");
    add_common(pipeline, true);
    add_pac(pipeline);
    pipeline->add_option("--emb", c.emb, "Plane embedding (.rot); computed when absent");
    pipeline->add_option("--constants", c.constants, "Overrides key=value,... for r,y,q,b,density,rails,penetration,"
                                                     "w_lo,w_hi,width");
    pipeline->add_flag("--reduced", pa.reduced, "Start from the reduced mechanism-test constants");
    pipeline->add_option("--width-cap", pa.width_cap, "DP width cap")->check(CLI::Range(0, 11));
    pipeline->add_flag("--fallback", pa.fallback, "Answer non-planar inputs with the oracle instead of failing");
    pipeline->add_flag("--trace", pa.trace, "Print the step trace");

    std::string verify_kind, cert;
    auto* verify = app.add_subcommand("verify", "Certificate verifiers: tree decompositions, concentric cycles, railed "
                                                "annuli");
    verify->add_option("kind", verify_kind, "td | concentric | annulus")
        ->required()
        ->check(CLI::IsMember({"td", "concentric", "annulus"}));
    add_common(verify, true);
    verify->add_option("--td", c.td, "Tree decomposition (.td)");
    verify->add_option("--emb", c.emb, "Plane embedding (.rot)");
    verify->add_option("--cert", cert, "Certificate (JSON)");

    std::string level = "desk";
    int criterion = 0;
    auto* suite = app.add_subcommand("suite", "Acceptance matrix: one PASS/FAIL line per criterion");
    suite->add_option("--level", level, "desk (full) or quick (reduced catalogs)")->check(CLI::IsMember({"desk", "quick"}));
    suite->add_option("--criterion", criterion, "Run only this criterion (1..8)")->check(CLI::Range(1, 8));
    suite->add_flag("--json", c.json, "Emit a machine-readable report (schema 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kCompleted : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string command = app.get_subcommands().front()->get_name();
    Outcome o;
    int code = kCompleted;
    std::string error;
    std::string status = "Ok";
    try {
        if (command == "oracle") o = run_oracle(c, oa);
        else if (command == "dp") o = run_dp(c, da);
        else if (command == "tw") o = run_tw(c, tw_out);
        else if (command == "gen") o = run_gen(c, ga);
        else if (command == "pipeline") o = run_pipeline(c, pa);
        else if (command == "verify") o = run_verify(c, verify_kind, cert);
        else o = run_suite(level, criterion, !c.json);
        if (command == "suite" && !o.answer_json.get<bool>()) code = 1;
    } catch (const ApiFailure& f) {
        code = exit_code_of(f.status);
        status = cyc_status_name(f.status);
        error = f.message;
    } catch (const CLI::Error& e) {
        code = kUsage;
        status = "Usage";
        error = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (c.json) {
        json j = {{"schema", 1}, {"command", command}, {"exitCode", code}, {"timings", {{"total_ms", ms}}}};
        j["answer"] = error.empty() ? o.answer_json : json(nullptr);
        if (!error.empty()) j["error"] = {{"status", status}, {"message", error}};
        else j["report"] = o.report;
        std::cout << j.dump(2) << "\n";
        return code;
    }
    if (!error.empty()) {
        std::cerr << "error: " << status << ": " << error << "\n";
        return code;
    }
    for (const auto& line : o.lines) std::cout << line << "\n";
    std::cout << o.answer << "\n";
    return code;
}
