/* cc -Icrates/ffi/include crates/ffi/examples/smoke.c target/debug/libyagita_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include "yagita.h"

int main(void) {
    uint64_t v = 0;
    if (yagita_theorem_value(3, 4, "Z", &v) != YAGITA_STATUS_OK) {
        fprintf(stderr, "%s\n", yagita_last_error());
        return 1;
    }
    printf("theorem_value(p=3, n=4, Z) = %llu\n", (unsigned long long)v);

    if (yagita_theorem_value(3, 1, "Z", &v) != YAGITA_STATUS_PRECONDITION) {
        return 1;
    }
    printf("n < p - 1 rejected: %s\n", yagita_last_error());

    YagitaPoly *f = NULL;
    char *json = NULL;
    if (yagita_poly_parse(5, "1 - x^4", &f) != YAGITA_STATUS_OK) {
        return 1;
    }
    yagita_poly_check_period_form(f, &json);
    printf("%s\n", json);
    yagita_string_free(json);
    yagita_poly_free(f);

    bool passed = false;
    if (yagita_verify_upper(3, 2, "Z", &json, &passed) != YAGITA_STATUS_OK) {
        return 1;
    }
    printf("verify_upper(3, 2, Z) passed = %d\n", passed);
    yagita_string_free(json);
    return passed ? 0 : 1;
}
