#include <stdio.h>
#include <string.h>

#include "fouradic.h"

int main(void) {
    FaBinary *a = NULL;
    FaQuaternary *w = NULL;
    uint8_t digits[6];
    size_t len = 0;
    char *report = NULL;

    if (fa_binary_from_tag("legendre:p=3,variant=ell", &a) != FA_STATUS_OK) return 1;
    if (fa_interleave(a, a, &w) != FA_STATUS_OK) return 1;
    if (fa_quaternary_digits(w, digits, sizeof digits, &len) != FA_STATUS_OK) return 1;
    printf("w = ");
    for (size_t i = 0; i < len; i++) printf("%u", digits[i]);
    printf("\n");

    FaStatus st = fa_verify_json("{\"theorem\":\"cor7\",\"a\":\"legendre:p=3\"}", &report);
    printf("d = %s (%s)\n", strstr(report, "\"d_decimal\":\"13\"") ? "13" : "?",
           st == FA_STATUS_OK ? "match" : "mismatch");
    fa_string_free(report);

    FaBinary *none = NULL;
    st = fa_binary_from_tag(NULL, &none);
    printf("error %d: %s\n", (int)st, fa_last_error_message());

    fa_quaternary_free(w);
    fa_binary_free(a);
    return 0;
}
