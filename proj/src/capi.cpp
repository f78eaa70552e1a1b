#include "cyc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyc/decomp.hpp"
#include "cyc/dp.hpp"
#include "cyc/error.hpp"
#include "cyc/generators.hpp"
#include "cyc/oracle.hpp"
#include "cyc/planar.hpp"
#include "cyc/suite.hpp"

struct cyc_graph {
    cyc::Graph graph;
    cyc::VertexSet annotated;
    std::vector<int> file_edge_ids;
};

struct cyc_embedding {
    cyc::Embedding embedding;
};

struct cyc_dp_context {
    cyc::DpContext context;
};

namespace {

using nlohmann::json;

struct NullArgument {
    const char* name;
};

std::string& last_error() {
    thread_local std::string message;
    return message;
}

template <class F>
cyc_status guarded(F&& body) {
    try {
        body();
        last_error().clear();
        return CYC_OK;
    } catch (const NullArgument& e) {
        last_error() = std::string("null argument: ") + e.name;
        return CYC_ERR_NULL_ARGUMENT;
    } catch (const cyc::Error& e) {
        last_error() = e.what();
        return static_cast<cyc_status>(static_cast<int>(e.kind()) + 1);
    } catch (const std::bad_alloc&) {
        last_error() = "out of memory";
        return CYC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error() = e.what();
        return CYC_ERR_INTERNAL;
    } catch (...) {
        last_error() = "unknown failure";
        return CYC_ERR_INTERNAL;
    }
}

template <class T>
T* need(T* p, const char* name) {
    if (!p) throw NullArgument{name};
    return p;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& s) {
    if (out) *out = dup(s);
}

cyc::OracleBudget budget_of(const cyc_budget* b) {
    cyc::OracleBudget out;
    if (b) {
        out.max_vertices = b->max_vertices;
        out.max_subsets = b->max_subsets;
        out.time_limit_ms = b->time_limit_ms;
    }
    return out;
}

void write_vertices(const std::vector<cyc::Vertex>& vs, int* out, size_t capacity, size_t* count) {
    if (count) *count = vs.size();
    if (!out) return;
    for (size_t i = 0; i < vs.size() && i < capacity; ++i) out[i] = vs[i];
}

cyc::GraphFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return cyc::parse_graph(in);
}

cyc_graph* adopt(cyc::GraphFile file) {
    auto* g = new cyc_graph;
    g->graph = std::move(file.graph);
    g->annotated = std::move(file.annotated);
    g->file_edge_ids = std::move(file.file_edge_ids);
    return g;
}

cyc_graph* adopt(cyc::Graph graph) {
    auto* g = new cyc_graph;
    g->graph = std::move(graph);
    return g;
}

std::string joined(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

}  // namespace

extern "C" {

const char* cyc_status_name(cyc_status status) {
    switch (status) {
        case CYC_OK: return "Ok";
        case CYC_ERR_NULL_ARGUMENT: return "NullArgument";
        case CYC_ERR_INTERNAL: return "Internal";
        default:
            if (status > CYC_OK && status <= CYC_ERR_IO) return cyc::error_kind_name(static_cast<cyc::ErrorKind>(status - 1));
            return "Unknown";
    }
}

const char* cyc_last_error(void) { return last_error().c_str(); }

void cyc_string_free(char* s) { std::free(s); }

cyc_status cyc_graph_create(int n, cyc_graph** out) {
    return guarded([&] {
        need(out, "out");
        if (n < 0) cyc::fail(cyc::ErrorKind::Parameter, "vertex count must be non-negative");
        *out = adopt(cyc::Graph(n));
    });
}

cyc_status cyc_graph_parse(const char* text, cyc_graph** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = adopt(parse_text(text));
    });
}

cyc_status cyc_graph_read_file(const char* path, cyc_graph** out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = adopt(cyc::read_graph_file(path));
    });
}

void cyc_graph_destroy(cyc_graph* g) { delete g; }

cyc_status cyc_graph_add_edge(cyc_graph* g, int u, int v) {
    return guarded([&] {
        need(g, "graph");
        if (!g->graph.has_vertex(u) || !g->graph.has_vertex(v))
            cyc::fail(cyc::ErrorKind::Parameter, "edge endpoint is not a vertex");
        g->graph.add_edge(u, v);
        g->file_edge_ids.clear();
    });
}

int cyc_graph_num_vertices(const cyc_graph* g) { return g ? g->graph.num_vertices() : -1; }

int cyc_graph_num_edges(const cyc_graph* g) { return g ? g->graph.num_edges() : -1; }

cyc_status cyc_graph_set_annotated(cyc_graph* g, const int* vertices, size_t count) {
    return guarded([&] {
        need(g, "graph");
        if (count) need(vertices, "vertices");
        cyc::VertexSet r;
        for (size_t i = 0; i < count; ++i) {
            if (!g->graph.has_vertex(vertices[i]))
                cyc::fail(cyc::ErrorKind::Parameter, "annotated vertex " + std::to_string(vertices[i]) + " is not in the graph");
            r.insert(vertices[i]);
        }
        g->annotated = std::move(r);
    });
}

cyc_status cyc_graph_annotated(const cyc_graph* g, int* out, size_t capacity, size_t* count) {
    return guarded([&] {
        need(g, "graph");
        write_vertices(g->annotated.members(), out, capacity, count);
    });
}

cyc_status cyc_graph_serialize(const cyc_graph* g, char** out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = dup(cyc::serialize_graph(g->graph, g->annotated));
    });
}

cyc_status cyc_embedding_parse(const cyc_graph* g, const char* text, int file_edge_order, cyc_embedding** out) {
    return guarded([&] {
        need(g, "graph");
        need(text, "text");
        need(out, "out");
        std::istringstream in(text);
        const std::vector<int>* ids = file_edge_order && !g->file_edge_ids.empty() ? &g->file_edge_ids : nullptr;
        cyc::Embedding emb = cyc::parse_embedding(in, ids);
        cyc::compute_faces(g->graph, emb);
        *out = new cyc_embedding{std::move(emb)};
    });
}

cyc_status cyc_embedding_read_file(const cyc_graph* g, const char* path, int file_edge_order, cyc_embedding** out) {
    return guarded([&] {
        need(g, "graph");
        need(path, "path");
        need(out, "out");
        const std::vector<int>* ids = file_edge_order && !g->file_edge_ids.empty() ? &g->file_edge_ids : nullptr;
        cyc::Embedding emb = cyc::read_embedding_file(path, ids);
        cyc::compute_faces(g->graph, emb);
        *out = new cyc_embedding{std::move(emb)};
    });
}

cyc_status cyc_embedding_planar(const cyc_graph* g, cyc_embedding** out, int* planar) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        auto emb = cyc::planar_embedding(g->graph);
        *out = emb ? new cyc_embedding{std::move(*emb)} : nullptr;
        if (planar) *planar = emb ? 1 : 0;
    });
}

cyc_status cyc_embedding_serialize(const cyc_embedding* emb, char** out) {
    return guarded([&] {
        need(emb, "embedding");
        need(out, "out");
        std::ostringstream os;
        cyc::write_embedding(os, emb->embedding);
        *out = dup(os.str());
    });
}

cyc_status cyc_embedding_num_faces(const cyc_graph* g, const cyc_embedding* emb, int* faces) {
    return guarded([&] {
        need(g, "graph");
        need(emb, "embedding");
        need(faces, "faces");
        *faces = cyc::compute_faces(g->graph, emb->embedding).size();
    });
}

void cyc_embedding_destroy(cyc_embedding* emb) { delete emb; }

void cyc_budget_default(cyc_budget* budget) {
    if (!budget) return;
    cyc::OracleBudget b;
    budget->max_vertices = b.max_vertices;
    budget->max_subsets = b.max_subsets;
    budget->time_limit_ms = b.time_limit_ms;
}

cyc_status cyc_oracle_pac(const cyc_graph* g, int k, const cyc_budget* budget, int* answer) {
    return guarded([&] {
        need(g, "graph");
        need(answer, "answer");
        *answer = cyc::is_yes_pac(g->graph, g->annotated, k, budget_of(budget)) ? 1 : 0;
    });
}

cyc_status cyc_oracle_uncyclable_subset(const cyc_graph* g, int k, const cyc_budget* budget, int* found, int* out,
                                        size_t capacity, size_t* count) {
    return guarded([&] {
        need(g, "graph");
        need(found, "found");
        auto s = cyc::find_uncyclable_subset(g->graph, g->annotated, k, budget_of(budget));
        *found = s ? 1 : 0;
        write_vertices(s ? s->members() : std::vector<cyc::Vertex>{}, out, capacity, count);
    });
}

cyc_status cyc_oracle_cyclability(const cyc_graph* g, const cyc_budget* budget, int* value) {
    return guarded([&] {
        need(g, "graph");
        need(value, "value");
        *value = cyc::cyclability(g->graph, budget_of(budget));
    });
}

cyc_status cyc_oracle_hamiltonian(const cyc_graph* g, const cyc_budget* budget, int* answer) {
    return guarded([&] {
        need(g, "graph");
        need(answer, "answer");
        *answer = cyc::is_hamiltonian(g->graph, budget_of(budget)) ? 1 : 0;
    });
}

cyc_status cyc_oracle_hamiltonian_with_edge(const cyc_graph* g, int u, int v, const cyc_budget* budget, int* answer) {
    return guarded([&] {
        need(g, "graph");
        need(answer, "answer");
        *answer = cyc::hamiltonian_with_edge(g->graph, cyc::Edge(u, v), budget_of(budget)) ? 1 : 0;
    });
}

cyc_status cyc_oracle_hypohamiltonian(const cyc_graph* g, const cyc_budget* budget, int* answer) {
    return guarded([&] {
        need(g, "graph");
        need(answer, "answer");
        *answer = cyc::is_hypohamiltonian(g->graph, budget_of(budget)) ? 1 : 0;
    });
}

cyc_status cyc_oracle_cycle_through(const cyc_graph* g, const int* vertices, size_t count, const cyc_budget* budget,
                                    int* found, int* out, size_t capacity, size_t* length) {
    return guarded([&] {
        need(g, "graph");
        need(found, "found");
        if (count) need(vertices, "vertices");
        cyc::VertexSet s(std::vector<cyc::Vertex>(vertices, vertices + count));
        auto c = cyc::cycle_through(g->graph, s, budget_of(budget));
        *found = c ? 1 : 0;
        write_vertices(c ? c->vertices : std::vector<cyc::Vertex>{}, out, capacity, length);
    });
}

void cyc_dp_options_default(cyc_dp_options* options) {
    if (!options) return;
    cyc::DpOptions d;
    options->width_cap = d.width_cap;
    options->lift_as_printed = d.lift == cyc::LiftPolicy::AsPrinted;
    options->join_as_printed = d.join == cyc::JoinRule::AsPrinted;
    options->prune = d.prune;
    options->audit = d.audit_counts;
    options->trace = d.trace;
}

cyc_status cyc_dp_context_create(cyc_dp_context** out) {
    return guarded([&] {
        need(out, "out");
        *out = new cyc_dp_context;
    });
}

void cyc_dp_context_destroy(cyc_dp_context* ctx) { delete ctx; }

cyc_status cyc_dp_solve(const cyc_graph* g, int k, const char* td_text, const cyc_dp_options* options,
                        cyc_dp_context* ctx, int* answer, char** report_json) {
    return guarded([&] {
        need(g, "graph");
        need(answer, "answer");
        cyc::DpOptions o;
        if (options) {
            o.width_cap = options->width_cap;
            o.lift = options->lift_as_printed ? cyc::LiftPolicy::AsPrinted : cyc::LiftPolicy::Sound;
            o.join = options->join_as_printed ? cyc::JoinRule::AsPrinted : cyc::JoinRule::Matched;
            o.prune = options->prune != 0;
            o.audit_counts = options->audit != 0;
            o.trace = options->trace != 0;
        }
        cyc::DpContext* context = ctx ? &ctx->context : nullptr;
        cyc::DpResult res;
        if (td_text) {
            std::istringstream in(td_text);
            cyc::NiceTreeDecomposition nice = cyc::make_nice(g->graph, cyc::parse_td(in));
            res = cyc::solve_pac(g->graph, g->annotated, k, nice, o, context);
        } else {
            res = cyc::solve_pac(g->graph, g->annotated, k, o, context);
        }
        *answer = res.answer ? 1 : 0;
        if (report_json) {
            json j = {{"schema", 1},
                      {"answer", res.answer},
                      {"width", res.stats.width},
                      {"nodes", res.stats.nodes},
                      {"entries_max", res.stats.entries_max},
                      {"entries_total", res.stats.entries_total},
                      {"signature_max", res.stats.signature_max},
                      {"growth_bound_ok", res.stats.growth_bound_ok},
                      {"failed_early", res.stats.failed_early},
                      {"audit", res.stats.audit},
                      {"trace", res.trace}};
            *report_json = dup(j.dump());
        }
    });
}

cyc_status cyc_treewidth(const cyc_graph* g, int* width, int* exact, char** td_text) {
    return guarded([&] {
        need(g, "graph");
        need(width, "width");
        cyc::TreewidthResult res;
        bool is_exact = g->graph.num_vertices() <= cyc::kExactTreewidthMaxVertices;
        if (is_exact)
            res = *cyc::exact_treewidth(g->graph, g->graph.num_vertices());
        else
            res = cyc::heuristic_treewidth(g->graph);
        *width = res.width;
        if (exact) *exact = is_exact ? 1 : 0;
        if (td_text) {
            std::ostringstream os;
            cyc::write_td(os, res.decomposition, g->graph.num_vertices());
            *td_text = dup(os.str());
        }
    });
}

cyc_status cyc_td_validate(const cyc_graph* g, const char* td_text, int* ok, char** violations) {
    return guarded([&] {
        need(g, "graph");
        need(td_text, "td_text");
        need(ok, "ok");
        std::istringstream in(td_text);
        cyc::ValidationReport rep = cyc::validate(g->graph, cyc::parse_td(in));
        *ok = rep.ok ? 1 : 0;
        put(violations, joined(rep.violations));
    });
}

cyc_status cyc_verify_concentric(const cyc_graph* g, const cyc_embedding* emb, const char* cert_json, int* ok,
                                 char** violations) {
    return guarded([&] {
        need(g, "graph");
        need(emb, "embedding");
        need(cert_json, "cert_json");
        need(ok, "ok");
        cyc::ConcentricCertificate cert = cyc::concentric_from_json(cert_json);
        cyc::ValidationReport rep = cyc::verify_concentric(g->graph, emb->embedding, cert);
        *ok = rep.ok ? 1 : 0;
        put(violations, joined(rep.violations));
    });
}

cyc_status cyc_verify_annulus(const cyc_graph* g, const cyc_embedding* emb, const char* cert_json, int* ok,
                              char** violations) {
    return guarded([&] {
        need(g, "graph");
        need(emb, "embedding");
        need(cert_json, "cert_json");
        need(ok, "ok");
        cyc::RailedAnnulusCertificate cert = cyc::railed_from_json(cert_json);
        cyc::ValidationReport rep = cyc::verify_railed_annulus(g->graph, emb->embedding, cert);
        *ok = rep.ok ? 1 : 0;
        put(violations, joined(rep.violations));
    });
}

void cyc_pipeline_options_default(cyc_pipeline_options* options) {
    if (!options) return;
    cyc::PipelineConfig c;
    options->constants = nullptr;
    options->reduced = 0;
    options->dp_width_cap = c.dp_width_cap;
    options->fallback_non_planar = c.non_planar == cyc::NonPlanarPolicy::Fallback;
    cyc_budget_default(&options->oracle);
}

cyc_status cyc_pipeline_solve(const cyc_graph* g, const cyc_embedding* emb, int k, const cyc_pipeline_options* options,
                              int* answer, char** report_json) {
    return guarded([&] {
        need(g, "graph");
        need(answer, "answer");
        cyc_pipeline_options o;
        cyc_pipeline_options_default(&o);
        if (options) o = *options;
        if (k < 0) cyc::fail(cyc::ErrorKind::Parameter, "k must be non-negative");
        cyc::PipelineConfig config;
        config.dp_width_cap = o.dp_width_cap;
        config.non_planar = o.fallback_non_planar ? cyc::NonPlanarPolicy::Fallback : cyc::NonPlanarPolicy::Reject;
        config.oracle = budget_of(&o.oracle);
        cyc::Constants constants = o.reduced ? cyc::Constants::reduced(k) : cyc::Constants::published(k);
        if (o.constants) constants = constants.with_overrides(o.constants);
        if (o.reduced || o.constants) config.constants = constants;
        std::optional<cyc::Embedding> e;
        if (emb) e = emb->embedding;
        cyc::PipelineResult res = cyc::pipeline_solve(g->graph, e, g->annotated, k, config);
        *answer = res.answer ? 1 : 0;
        if (report_json) {
            json j = {{"schema", 1},
                      {"answer", res.answer},
                      {"constants", constants.to_string()},
                      {"steps", {{"step1", res.step1}, {"step2", res.step2}, {"step3", res.step3},
                                 {"step4", res.step4}, {"fallback", res.fallback}}},
                      {"trace", res.trace}};
            *report_json = dup(j.dump());
        }
    });
}

cyc_status cyc_generate(const char* name, const int64_t* params, size_t count, uint64_t seed, cyc_graph** out,
                        cyc_embedding** emb, char** description, char** cert_json) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        if (count) need(params, "params");
        cyc::CatalogGraph c = cyc::catalog(name, std::vector<std::int64_t>(params, params + count), seed);
        if (emb) *emb = c.embedding ? new cyc_embedding{*c.embedding} : nullptr;
        if (description) *description = dup(c.description);
        if (cert_json) *cert_json = c.certificate ? dup(cyc::railed_to_json(*c.certificate)) : nullptr;
        *out = adopt(std::move(c.graph));
    });
}

cyc_status cyc_clique_reduction(const cyc_graph* g, int k, cyc_graph** out, int* k_prime, char** roles_json) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        cyc::CliqueReductionOutput red = cyc::clique_reduction(g->graph, k);
        if (k_prime) *k_prime = red.k_prime;
        if (roles_json) {
            json roles = json::array();
            for (const auto& [v, r] : red.roles) {
                json item = {{"vertex", v}};
                switch (r.role) {
                    case cyc::Role::CliquePart:
                        item["role"] = "clique_part";
                        item["x"] = r.x;
                        item["copy"] = r.copy;
                        break;
                    case cyc::Role::Hub: item["role"] = "hub"; break;
                    case cyc::Role::EdgeVertex:
                        item["role"] = "edge_vertex";
                        item["x"] = r.x;
                        item["y"] = r.y;
                        break;
                }
                roles.push_back(item);
            }
            json j = {{"schema", 1}, {"k_prime", red.k_prime}, {"s", red.s}, {"roles", roles}};
            *roles_json = dup(j.dump());
        }
        *out = adopt(std::move(red.graph));
    });
}

cyc_status cyc_cross_composition(const cyc_graph* const* graphs, const int* edges, size_t count,
                                 int require_cubic_planar, cyc_graph** out, int* k) {
    return guarded([&] {
        need(out, "out");
        if (count) {
            need(graphs, "graphs");
            need(edges, "edges");
        }
        std::vector<std::pair<cyc::Graph, cyc::Edge>> inst;
        for (size_t i = 0; i < count; ++i)
            inst.emplace_back(need(graphs[i], "graphs[i]")->graph, cyc::Edge(edges[2 * i], edges[2 * i + 1]));
        cyc::CrossCompositionOutput res = cyc::cross_composition(inst, require_cubic_planar != 0);
        if (k) *k = res.k;
        *out = adopt(std::move(res.graph));
    });
}

cyc_status cyc_suite_run(int quick, int criterion, cyc_line_callback callback, void* user, int* all_passed) {
    return guarded([&] {
        std::vector<int> ids;
        if (criterion != 0) {
            if (criterion < 1 || criterion > cyc::kCriterionCount)
                cyc::fail(cyc::ErrorKind::Parameter, "criterion must be 0 or in 1..8");
            ids.push_back(criterion);
        }
        bool passed = true;
        cyc::run_suite(quick ? cyc::SuiteLevel::Quick : cyc::SuiteLevel::Desk, ids, [&](const cyc::CriterionResult& r) {
            passed = passed && r.passed;
            if (callback) callback(cyc::format_result(r).c_str(), user);
        });
        if (all_passed) *all_passed = passed ? 1 : 0;
    });
}

}  // extern "C"
