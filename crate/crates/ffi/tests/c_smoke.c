#include <stdio.h>
#include <string.h>
#include "hecke_wgraph.h"

#define CHECK(x) do { if ((x) != HW_STATUS_OK) { fprintf(stderr, "%s: %s\n", #x, hw_last_error_message()); return 1; } } while (0)

int main(void) {
    HwGroup *g = NULL;
    HwKl *kl = NULL;
    HwWGraph *w = NULL;
    size_t order = 0, vertices = 0;
    char *json = NULL;
    CHECK(hw_group_new_named("A3", &g));
    CHECK(hw_group_order(g, &order));
    CHECK(hw_kl_new(g, &kl));
    CHECK(hw_wgraph_new(g, 1u, &w));
    CHECK(hw_wgraph_vertex_count(w, &vertices));
    CHECK(hw_wgraph_to_json(w, &json));
    printf("order=%zu vertices=%zu json=%d\n", order, vertices, json[0] == '{');
    hw_string_free(json);
    if (hw_group_new_named("nope", &g) != HW_STATUS_INVALID_ARGUMENT) return 2;
    hw_wgraph_free(w);
    hw_kl_free(kl);
    hw_group_free(g);
    return 0;
}
