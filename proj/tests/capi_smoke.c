/* Exercises the shared library through cyc.h from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "cyc.h"

static int failures = 0;

#define EXPECT(cond)                                                       \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

static const char* petersen_text =
    "p cyc 10 15\n"
    "e 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n"
    "e 0 5\ne 1 6\ne 2 7\ne 3 8\ne 4 9\n"
    "e 5 7\ne 7 9\ne 9 6\ne 6 8\ne 8 5\n";

static void count_lines(const char* line, void* user) {
    (void)line;
    ++*(int*)user;
}

static void test_graph_handles(void) {
    cyc_graph* g = NULL;
    EXPECT(cyc_graph_create(4, &g) == CYC_OK);
    EXPECT(cyc_graph_add_edge(g, 0, 1) == CYC_OK);
    EXPECT(cyc_graph_add_edge(g, 1, 2) == CYC_OK);
    EXPECT(cyc_graph_add_edge(g, 2, 3) == CYC_OK);
    EXPECT(cyc_graph_add_edge(g, 3, 0) == CYC_OK);
    EXPECT(cyc_graph_add_edge(g, 0, 9) == CYC_ERR_PARAMETER);
    EXPECT(strlen(cyc_last_error()) > 0);
    EXPECT(cyc_graph_num_vertices(g) == 4);
    EXPECT(cyc_graph_num_edges(g) == 4);

    int r[] = {0, 2};
    EXPECT(cyc_graph_set_annotated(g, r, 2) == CYC_OK);
    int got[4];
    size_t count = 0;
    EXPECT(cyc_graph_annotated(g, got, 4, &count) == CYC_OK);
    EXPECT(count == 2 && got[0] == 0 && got[1] == 2);

    char* text = NULL;
    EXPECT(cyc_graph_serialize(g, &text) == CYC_OK);
    cyc_graph* back = NULL;
    EXPECT(cyc_graph_parse(text, &back) == CYC_OK);
    EXPECT(cyc_graph_num_edges(back) == 4);
    char* again = NULL;
    EXPECT(cyc_graph_serialize(back, &again) == CYC_OK);
    EXPECT(strcmp(text, again) == 0);
    cyc_string_free(text);
    cyc_string_free(again);
    cyc_graph_destroy(back);

    EXPECT(cyc_graph_parse("e 0 1\n", &back) == CYC_ERR_FORMAT);
    EXPECT(cyc_graph_read_file("/nonexistent/x.cyc", &back) == CYC_ERR_IO);
    EXPECT(cyc_graph_parse(NULL, &back) == CYC_ERR_NULL_ARGUMENT);
    EXPECT(strcmp(cyc_status_name(CYC_ERR_BUDGET), "") != 0);
    cyc_graph_destroy(g);
    cyc_graph_destroy(NULL);
}

static void test_oracle_and_dp(void) {
    cyc_graph* g = NULL;
    EXPECT(cyc_graph_parse(petersen_text, &g) == CYC_OK);
    int value = 0;
    EXPECT(cyc_oracle_cyclability(g, NULL, &value) == CYC_OK);
    EXPECT(value == 9);
    int answer = -1;
    EXPECT(cyc_oracle_hypohamiltonian(g, NULL, &answer) == CYC_OK && answer == 1);
    EXPECT(cyc_oracle_hamiltonian(g, NULL, &answer) == CYC_OK && answer == 0);
    EXPECT(cyc_oracle_hamiltonian_with_edge(g, 0, 7, NULL, &answer) == CYC_ERR_EDGE_NOT_FOUND);

    int through[] = {0, 2, 4, 6};
    int found = 0;
    int cycle[10];
    size_t length = 0;
    EXPECT(cyc_oracle_cycle_through(g, through, 4, NULL, &found, cycle, 10, &length) == CYC_OK);
    EXPECT(found == 1 && length >= 4 && cycle[0] == 0);

    int all[10];
    for (int i = 0; i < 10; ++i) all[i] = i;
    EXPECT(cyc_graph_set_annotated(g, all, 10) == CYC_OK);
    EXPECT(cyc_oracle_pac(g, 10, NULL, &answer) == CYC_OK && answer == 0);
    size_t count = 0;
    int subset[10];
    EXPECT(cyc_oracle_uncyclable_subset(g, 10, NULL, &found, subset, 10, &count) == CYC_OK);
    EXPECT(found == 1 && count == 10);

    cyc_budget tight;
    cyc_budget_default(&tight);
    tight.max_vertices = 5;
    EXPECT(cyc_oracle_pac(g, 3, &tight, &answer) == CYC_ERR_BUDGET);

    cyc_dp_options opts;
    cyc_dp_options_default(&opts);
    cyc_dp_context* ctx = NULL;
    EXPECT(cyc_dp_context_create(&ctx) == CYC_OK);
    char* report = NULL;
    EXPECT(cyc_dp_solve(g, 9, NULL, &opts, ctx, &answer, &report) == CYC_OK);
    EXPECT(answer == 1);
    EXPECT(report != NULL && strstr(report, "\"width\"") != NULL);
    cyc_string_free(report);
    EXPECT(cyc_dp_solve(g, 10, NULL, &opts, ctx, &answer, NULL) == CYC_OK && answer == 0);
    EXPECT(cyc_dp_solve(g, -1, NULL, &opts, ctx, &answer, NULL) == CYC_ERR_PARAMETER);
    cyc_dp_context_destroy(ctx);

    int width = 0, exact = 0;
    char* td = NULL;
    EXPECT(cyc_treewidth(g, &width, &exact, &td) == CYC_OK);
    EXPECT(width == 4 && exact == 1);
    int ok = 0;
    char* violations = NULL;
    EXPECT(cyc_td_validate(g, td, &ok, &violations) == CYC_OK && ok == 1);
    cyc_string_free(violations);
    EXPECT(cyc_dp_solve(g, 9, td, &opts, NULL, &answer, NULL) == CYC_OK && answer == 1);
    cyc_string_free(td);
    EXPECT(cyc_td_validate(g, "s td 1 2 10\nb 1 0 1\n", &ok, &violations) == CYC_OK && ok == 0);
    cyc_string_free(violations);
    cyc_graph_destroy(g);
}

static void test_planar_and_generators(void) {
    int64_t params[] = {3, 4};
    cyc_graph* g = NULL;
    cyc_embedding* emb = NULL;
    char* cert = NULL;
    char* description = NULL;
    EXPECT(cyc_generate("ring_of_rings", params, 2, 1, &g, &emb, &description, &cert) == CYC_OK);
    EXPECT(description != NULL && strstr(description, "ring_of_rings") != NULL);
    cyc_string_free(description);
    EXPECT(emb != NULL && cert != NULL);
    int faces = 0;
    EXPECT(cyc_embedding_num_faces(g, emb, &faces) == CYC_OK);
    EXPECT(cyc_graph_num_vertices(g) - cyc_graph_num_edges(g) + faces == 2);
    int ok = 0;
    char* violations = NULL;
    EXPECT(cyc_verify_annulus(g, emb, cert, &ok, &violations) == CYC_OK && ok == 1);
    cyc_string_free(violations);
    EXPECT(cyc_verify_concentric(g, emb, cert, &ok, &violations) == CYC_OK && ok == 1);
    cyc_string_free(violations);
    EXPECT(cyc_verify_annulus(g, emb, "{", &ok, &violations) == CYC_ERR_FORMAT);

    char* rot = NULL;
    EXPECT(cyc_embedding_serialize(emb, &rot) == CYC_OK);
    cyc_embedding* parsed = NULL;
    EXPECT(cyc_embedding_parse(g, rot, 0, &parsed) == CYC_OK);
    cyc_string_free(rot);
    cyc_embedding_destroy(parsed);

    int r[] = {12};
    EXPECT(cyc_graph_set_annotated(g, r, 1) == CYC_OK);
    cyc_pipeline_options popts;
    cyc_pipeline_options_default(&popts);
    popts.reduced = 1;
    int answer = -1;
    char* report = NULL;
    EXPECT(cyc_pipeline_solve(g, emb, 1, &popts, &answer, &report) == CYC_OK);
    EXPECT(answer == 1);
    EXPECT(report != NULL && strstr(report, "\"steps\"") != NULL);
    cyc_string_free(report);
    popts.constants = "bogus=1";
    EXPECT(cyc_pipeline_solve(g, emb, 1, &popts, &answer, NULL) == CYC_ERR_PARAMETER);
    cyc_string_free(cert);
    cyc_embedding_destroy(emb);
    cyc_graph_destroy(g);

    EXPECT(cyc_generate("no_such_graph", NULL, 0, 1, &g, NULL, NULL, NULL) == CYC_ERR_UNKNOWN_NAME);

    int64_t five[] = {5};
    cyc_graph* k5 = NULL;
    EXPECT(cyc_generate("complete", five, 1, 1, &k5, NULL, NULL, &cert) == CYC_OK);
    EXPECT(cert == NULL);
    int planar = 1;
    EXPECT(cyc_embedding_planar(k5, &emb, &planar) == CYC_OK && planar == 0 && emb == NULL);
    cyc_graph* split = NULL;
    int k_prime = 0;
    char* roles = NULL;
    EXPECT(cyc_clique_reduction(k5, 5, &split, &k_prime, &roles) == CYC_OK);
    EXPECT(k_prime == 11 && cyc_graph_num_vertices(split) == 21);
    cyc_string_free(roles);
    cyc_graph_destroy(split);
    EXPECT(cyc_clique_reduction(k5, 4, &split, &k_prime, NULL) == CYC_ERR_PARITY);

    int64_t four[] = {4};
    cyc_graph* k4 = NULL;
    EXPECT(cyc_generate("complete", four, 1, 1, &k4, NULL, NULL, NULL) == CYC_OK);
    const cyc_graph* parts[] = {k4, k4};
    int edges[] = {0, 1, 2, 3};
    cyc_graph* comp = NULL;
    int k = 0;
    EXPECT(cyc_cross_composition(parts, edges, 2, 1, &comp, &k) == CYC_OK);
    EXPECT(k == 6 && cyc_graph_num_vertices(comp) == 12);
    cyc_graph_destroy(comp);
    const cyc_graph* mixed[] = {k4, k5};
    EXPECT(cyc_cross_composition(mixed, edges, 2, 0, &comp, &k) == CYC_ERR_SIZE_MISMATCH);
    cyc_graph_destroy(k4);
    cyc_graph_destroy(k5);
}

static void test_suite_entry(void) {
    int lines = 0;
    int passed = 0;
    EXPECT(cyc_suite_run(1, 8, count_lines, &lines, &passed) == CYC_OK);
    EXPECT(lines == 1 && passed == 1);
    EXPECT(cyc_suite_run(1, 9, count_lines, &lines, &passed) == CYC_ERR_PARAMETER);
}

int main(void) {
    test_graph_handles();
    test_oracle_and_dp();
    test_planar_and_generators();
    test_suite_entry();
    if (failures) {
        fprintf(stderr, "%d failures\n", failures);
        return EXIT_FAILURE;
    }
    puts("capi ok");
    return EXIT_SUCCESS;
}
