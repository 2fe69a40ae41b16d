#include <stdio.h>
#include <string.h>
#include "rbhopf.h"

#define EXPECT(cond) do { if (!(cond)) { fprintf(stderr, "line %d: %s\n", __LINE__, #cond); return 1; } } while (0)

int main(void) {
    rbhopf_group *g = NULL;
    EXPECT(rbhopf_group_from_name("S3", &g) == RBHOPF_STATUS_OK);
    EXPECT(rbhopf_group_order(g) == 6);

    rbhopf_operators *ops = NULL;
    EXPECT(rbhopf_enumerate(g, 12, &ops) == RBHOPF_STATUS_OK);
    size_t count = rbhopf_operators_count(ops);
    EXPECT(count > 0);

    size_t images[6];
    size_t needed = 0;
    EXPECT(rbhopf_operators_get(ops, 0, images, 6, &needed) == RBHOPF_STATUS_OK);
    EXPECT(needed == 6);
    EXPECT(rbhopf_check_operator(g, images, 6) == RBHOPF_STATUS_OK);

    rbhopf_report *r = NULL;
    EXPECT(rbhopf_verify(g, images, 6, "operator,matched-pair", &r) == RBHOPF_STATUS_OK);
    EXPECT(rbhopf_report_checks(r) > 0);
    char *json = NULL;
    EXPECT(rbhopf_report_json(r, false, &json) == RBHOPF_STATUS_OK);
    EXPECT(strstr(json, "\"group\": \"S3\"") != NULL);
    rbhopf_string_free(json);
    rbhopf_report_free(r);

    size_t bad[6] = {1, 1, 1, 1, 1, 1};
    EXPECT(rbhopf_check_operator(g, bad, 6) == RBHOPF_STATUS_INVALID_OPERATOR);
    EXPECT(rbhopf_last_error() != NULL);

    rbhopf_operators_free(ops);
    rbhopf_group_free(g);
    printf("%zu operators on S3\n", count);
    return 0;
}
