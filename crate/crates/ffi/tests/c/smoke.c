#include <stdio.h>
#include <string.h>

#include "triarray.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    TriTriangle *y = NULL, *t = NULL;
    char *s = NULL;
    uint64_t dim = 0;

    CHECK(tri_triangle_parse("0,0,3/0,3/3", &y) == TriStatus_Ok);
    CHECK(tri_orbit_dim(y, &dim) == TriStatus_Ok && dim == 18);
    CHECK(tri_transform(y, &t) == TriStatus_Ok);
    CHECK(tri_triangle_to_string(t, &s) == TriStatus_Ok);
    CHECK(strcmp(s, "3,0,0/3,0/3") == 0);
    tri_string_free(s);

    TriComparison c;
    CHECK(tri_compare(t, y, TriOrderMethod_Coweights, &c) == TriStatus_Ok);
    CHECK(c == TriComparison_Less);

    TriTriangle *bad = NULL;
    CHECK(tri_triangle_parse("0,2/1", &bad) == TriStatus_LadderViolation);
    CHECK(strlen(tri_last_error_message()) > 0);
    CHECK(bad == NULL);

    uint32_t w[3] = {3, 3, 3};
    size_t n = 0;
    CHECK(tri_enumerate_count(w, 3, &n) == TriStatus_Ok && n == 20);

    tri_triangle_free(y);
    tri_triangle_free(t);
    printf("ok\n");
    return 0;
}
