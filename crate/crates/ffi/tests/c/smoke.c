#include <stdio.h>
#include <string.h>
#include "cablecalc.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); return 1; } } while (0)

int main(void) {
    CcKnot *k = NULL;
    CHECK(cc_classify("T(2,3).cable(2,3)", &k) == CC_STATUS_OK);
    int64_t tb = 0;
    CHECK(cc_knot_tb_bar(k, &tb) == CC_STATUS_OK && tb == 6);
    bool simple = true;
    CHECK(cc_knot_is_simple(k, &simple) == CC_STATUS_OK && !simple);
    uint32_t n = 0;
    CHECK(cc_transverse_count(k, -10, 3, &n) == CC_STATUS_OK && n == 2);
    CcRange *m = NULL;
    CHECK(cc_range_new(k, -4, &m) == CC_STATUS_OK);
    CHECK(cc_range_mult(m, 0, 3, &n) == CC_STATUS_OK && n == 3);
    cc_range_free(m);
    char *json = NULL;
    CHECK(cc_knot_to_json(k, &json) == CC_STATUS_OK && strstr(json, "\"tb_bar\": 6") != NULL);
    cc_string_free(json);
    cc_knot_free(k);

    CHECK(cc_classify("T(-9,4)", &k) == CC_STATUS_OK);
    size_t len = 0;
    int64_t peaks[8];
    CHECK(cc_knot_peaks(k, peaks, 8, &len) == CC_STATUS_OK && len == 4);
    CHECK(peaks[0] == -5 && peaks[1] == -3 && peaks[2] == 3 && peaks[3] == 5);
    cc_knot_free(k);

    CHECK(cc_classify("T(2,3).cable(1,2)", &k) == CC_STATUS_NOT_COVERED);
    CHECK(strcmp(cc_last_hypothesis(), "base_not_utp") == 0);
    CHECK(cc_classify("T(2,4)", &k) == CC_STATUS_PARSE_ERROR && cc_last_error() != NULL);

    int64_t num = 0, den = 0;
    CHECK(cc_nonthick_slope(3, &num, &den) == CC_STATUS_OK && num == -4 && den == 23);
    size_t d = 0;
    CHECK(cc_farey_distance("-3/16", "inf", &d) == CC_STATUS_OK && d == 3);
    puts("ok");
    return 0;
}
