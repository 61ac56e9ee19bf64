// Exercises the public C surface: opaque context, status codes, error
// messages, rendered payloads. Links only the shared library.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "sqfpairs.h"

static int failures = 0;

#define CHECK(cond)                                                                                \
    do {                                                                                           \
        if (!(cond)) {                                                                             \
            std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond);                 \
            ++failures;                                                                            \
        }                                                                                          \
    } while (0)

int main() {
    sqf_ctx* ctx = nullptr;
    CHECK(sqf_ctx_new(&ctx) == SQF_OK);
    CHECK(ctx != nullptr);

    // gauss sum sqrt(5)
    double re = 0.0, im = 0.0;
    CHECK(sqf_exp_sum(ctx, SQF_SUM_GAUSS, 5, 1, 0, &re, &im) == SQF_OK);
    CHECK(std::abs(re - std::sqrt(5.0)) < 1e-9);
    CHECK(std::abs(im) < 1e-9);

    // salie sum rejects even moduli with a message
    CHECK(sqf_exp_sum(ctx, SQF_SUM_SALIE, 4, 1, 1, &re, &im) == SQF_ERROR_EVEN_MODULUS);
    CHECK(std::strlen(sqf_ctx_last_error(ctx)) > 0);

    // geometric sum and bad range
    CHECK(sqf_geometric_sum(ctx, 0.0, 0, 10, &re, &im) == SQF_OK);
    CHECK(std::abs(re - 10.0) < 1e-12);
    CHECK(sqf_geometric_sum(ctx, 0.5, 3, 3, &re, &im) == SQF_ERROR_BAD_RANGE);

    // twisted count with integer extraction
    int is_int = 0;
    int64_t value = 0;
    CHECK(sqf_lambda(ctx, SQF_FAMILY_B, 9, 4, 0, 0, 0, SQF_METHOD_DIRECT, &re, &im, &is_int, &value) ==
          SQF_OK);
    CHECK(is_int == 1);
    CHECK(value == 1296);

    // closed method demands odd coprime moduli
    CHECK(sqf_lambda(ctx, SQF_FAMILY_A, 4, 3, 0, 0, 0, SQF_METHOD_CLOSED, &re, &im, nullptr, nullptr) ==
          SQF_ERROR_EVEN_MODULUS);
    CHECK(sqf_lambda(ctx, SQF_FAMILY_A, 9, 3, 0, 0, 0, SQF_METHOD_CLOSED, &re, &im, nullptr, nullptr) ==
          SQF_ERROR_NOT_COPRIME);

    // budget propagates as status 3
    CHECK(sqf_ctx_set_budget(ctx, 100) == SQF_OK);
    CHECK(sqf_lambda(ctx, SQF_FAMILY_A, 11, 13, 0, 0, 0, SQF_METHOD_DIRECT, &re, &im, nullptr, nullptr) ==
          SQF_ERROR_BUDGET);
    CHECK(sqf_ctx_set_budget(ctx, 1000000000) == SQF_OK);

    // rendered lambda payload
    char* text = nullptr;
    CHECK(sqf_render_lambda(ctx, SQF_FAMILY_A, 3, 1, 0, 0, 0, SQF_METHOD_DIRECT, SQF_FORMAT_JSON,
                            &text) == SQF_OK);
    CHECK(std::string(text) == R"({"re":9,"im":0,"integer":9})");
    sqf_string_free(text);
    text = nullptr;

    // local density and singular series
    int64_t l1 = 0, l2 = 0;
    double term = 0.0;
    CHECK(sqf_local_density(ctx, SQF_FAMILY_B, 3, &l1, &l2, &term) == SQF_OK);
    CHECK(l1 == 81);
    CHECK(l2 == 81);
    CHECK(std::abs(term - 7.0 / 9.0) < 1e-12);
    CHECK(sqf_local_density(ctx, SQF_FAMILY_A, 6, &l1, &l2, &term) == SQF_ERROR_NOT_PRIME);

    double sigma = 0.0, tail = 0.0;
    CHECK(sqf_singular_series(ctx, SQF_FAMILY_B, 3, &sigma, &tail) == SQF_OK);
    CHECK(std::abs(sigma - 7.0 / 18.0) < 1e-12);

    // census render in both formats
    CHECK(sqf_render_gamma(ctx, SQF_FAMILY_A, 2, 7, SQF_FORMAT_CSV, &text) == SQF_OK);
    CHECK(std::strncmp(text, "H,count,main_term,residual\n2,1,", 31) == 0);
    sqf_string_free(text);
    text = nullptr;

    int64_t count = 0;
    double main_term = 0.0, residual = 0.0;
    CHECK(sqf_gamma_census(ctx, SQF_FAMILY_A, 2, 7, &count, &main_term, &residual, &sigma) == SQF_OK);
    CHECK(count == 1);
    CHECK(std::abs(residual - (1.0 - main_term)) < 1e-12);

    // unknown suite is a usage error; a real (cheap) suite passes
    CHECK(sqf_verify(ctx, "unknown", SQF_FORMAT_JSON, &text) == SQF_ERROR_USAGE);
    CHECK(text == nullptr);
    CHECK(sqf_ctx_set_option(ctx, "mobius.h_max", "4") == SQF_OK);
    CHECK(sqf_ctx_set_option(ctx, "no.such.key", "4") == SQF_ERROR_USAGE);
    CHECK(sqf_verify(ctx, "mobius", SQF_FORMAT_JSON, &text) == SQF_OK);
    CHECK(text != nullptr);
    CHECK(std::string(text).find("\"passed\":true") != std::string::npos);
    sqf_string_free(text);
    text = nullptr;

    // fit over a small grid
    const int64_t hs[] = {8, 12, 16, 20};
    CHECK(sqf_render_fit(ctx, SQF_FAMILY_B, hs, 4, 50, SQF_FORMAT_JSON, &text) == SQF_OK);
    CHECK(std::string(text).find("\"theorem_exponent\":2.5") != std::string::npos);
    sqf_string_free(text);
    text = nullptr;

    // null argument handling
    CHECK(sqf_exp_sum(ctx, SQF_SUM_GAUSS, 5, 1, 0, nullptr, nullptr) == SQF_ERROR_USAGE);
    CHECK(sqf_ctx_load_config(ctx, "missing_config_file.cfg") == SQF_ERROR_IO);

    sqf_ctx_free(ctx);
    sqf_ctx_free(nullptr); // harmless

    if (failures == 0)
        std::puts("capi: all checks passed");
    return failures == 0 ? 0 : 1;
}
