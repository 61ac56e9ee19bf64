// C API shim: translates between the opaque-handle/error-code surface and
// the C++ core. Exceptions never cross this boundary.

#include "sqfpairs.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "census.hpp"
#include "config.hpp"
#include "emit.hpp"
#include "series.hpp"
#include "suites.hpp"

struct sqf_ctx {
    sqf::Config config;
    sqf::DensityStore densities;
    std::string last_error;
};

namespace {

using sqf::i64;

sqf_status status_from(sqf::errc code) { return static_cast<sqf_status>(static_cast<int>(code)); }

template <typename Fn>
sqf_status guarded(sqf_ctx* ctx, Fn&& fn) {
    if (ctx == nullptr)
        return SQF_ERROR_USAGE;
    try {
        return fn();
    } catch (const sqf::error& e) {
        ctx->last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        ctx->last_error = "allocation failure";
        return SQF_ERROR_BUDGET;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return SQF_ERROR_INTERNAL;
    }
}

sqf::Family to_family(sqf_family f) { return f == SQF_FAMILY_A ? sqf::Family::A : sqf::Family::B; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

i64 default_cutoff(const sqf_ctx* ctx, sqf::Family f) {
    return ctx->config.get_int(f == sqf::Family::A ? "sigma.cutoff_a" : "sigma.cutoff_b");
}

std::string render_lambda_payload(const sqf::LambdaValue& v, sqf_format format) {
    if (format == SQF_FORMAT_CSV) {
        std::string out = sqf::csv_line({"re", "im", "integer"});
        out += sqf::csv_line({sqf::jreal(v.value.real()), sqf::jreal(v.value.imag()),
                              v.is_integer ? sqf::jint(v.integer_value) : ""});
        return out;
    }
    sqf::JsonObject o;
    o.real("re", v.value.real()).real("im", v.value.imag());
    o.raw("integer", v.is_integer ? sqf::jint(v.integer_value) : "null");
    if (v.mod8_warning)
        o.str("warning", "8 divides q1*q2: outside the closed-form and bound hypotheses");
    return o.build();
}

} // namespace

extern "C" {

sqf_status sqf_ctx_new(sqf_ctx** out) {
    if (out == nullptr)
        return SQF_ERROR_USAGE;
    try {
        *out = new sqf_ctx();
        return SQF_OK;
    } catch (...) {
        return SQF_ERROR_INTERNAL;
    }
}

void sqf_ctx_free(sqf_ctx* ctx) { delete ctx; }

const char* sqf_ctx_last_error(const sqf_ctx* ctx) {
    return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

sqf_status sqf_ctx_set_option(sqf_ctx* ctx, const char* key, const char* value) {
    return guarded(ctx, [&]() -> sqf_status {
        if (key == nullptr || value == nullptr)
            sqf::fail(sqf::errc::usage, "null option key or value");
        ctx->config.set(key, value);
        return SQF_OK;
    });
}

sqf_status sqf_ctx_load_config(sqf_ctx* ctx, const char* path) {
    return guarded(ctx, [&]() -> sqf_status {
        if (path == nullptr)
            sqf::fail(sqf::errc::usage, "null config path");
        ctx->config.load_file(path);
        return SQF_OK;
    });
}

sqf_status sqf_ctx_set_threads(sqf_ctx* ctx, int threads) {
    return guarded(ctx, [&]() -> sqf_status {
        if (threads < 0)
            sqf::fail(sqf::errc::usage, "threads must be >= 0");
        ctx->config.set("threads", std::to_string(threads));
        return SQF_OK;
    });
}

sqf_status sqf_ctx_set_budget(sqf_ctx* ctx, int64_t iterations) {
    return guarded(ctx, [&]() -> sqf_status {
        if (iterations < 1)
            sqf::fail(sqf::errc::usage, "budget must be >= 1");
        ctx->config.set("budget", std::to_string(iterations));
        return SQF_OK;
    });
}

sqf_status sqf_ctx_attach_cache(sqf_ctx* ctx, const char* path) {
    return guarded(ctx, [&]() -> sqf_status {
        if (path == nullptr)
            sqf::fail(sqf::errc::usage, "null cache path");
        ctx->densities.attach_file(path);
        return SQF_OK;
    });
}

void sqf_string_free(char* s) { std::free(s); }

sqf_status sqf_exp_sum(sqf_ctx* ctx, sqf_sum_kind kind, int64_t q, int64_t m, int64_t n, double* re,
                       double* im) {
    return guarded(ctx, [&]() -> sqf_status {
        if (re == nullptr || im == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        sqf::cplx v;
        switch (kind) {
        case SQF_SUM_GAUSS: v = sqf::gauss_sum(q, m, n); break;
        case SQF_SUM_SALIE: v = sqf::salie_sum(q, m, n); break;
        case SQF_SUM_KLOOSTERMAN: v = sqf::kloosterman_sum(q, m, n); break;
        default: sqf::fail(sqf::errc::usage, "unknown sum kind");
        }
        *re = v.real();
        *im = v.imag();
        return SQF_OK;
    });
}

sqf_status sqf_geometric_sum(sqf_ctx* ctx, double xi, int64_t n1, int64_t n2, double* re, double* im) {
    return guarded(ctx, [&]() -> sqf_status {
        if (re == nullptr || im == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        sqf::cplx v = sqf::geometric_sum(xi, n1, n2);
        *re = v.real();
        *im = v.imag();
        return SQF_OK;
    });
}

sqf_status sqf_lambda(sqf_ctx* ctx, sqf_family family, int64_t q1, int64_t q2, int64_t l, int64_t m,
                      int64_t n, sqf_method method, double* re, double* im, int* is_integer,
                      int64_t* integer_value) {
    return guarded(ctx, [&]() -> sqf_status {
        if (re == nullptr || im == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        sqf::LambdaValue v = sqf::lambda_eval(
            to_family(family), q1, q2, sqf::Twist{l, m, n},
            method == SQF_METHOD_CLOSED ? sqf::LambdaMethod::closed : sqf::LambdaMethod::direct,
            ctx->config.budget());
        *re = v.value.real();
        *im = v.value.imag();
        if (is_integer != nullptr)
            *is_integer = v.is_integer ? 1 : 0;
        if (integer_value != nullptr)
            *integer_value = v.integer_value;
        return SQF_OK;
    });
}

sqf_status sqf_local_density(sqf_ctx* ctx, sqf_family family, int64_t p, int64_t* lambda_p2_1,
                             int64_t* lambda_1_p2, double* term) {
    return guarded(ctx, [&]() -> sqf_status {
        sqf::Family f = to_family(family);
        if (p < 2 || !sqf::is_prime(p))
            sqf::fail(sqf::errc::not_prime, "local density requires a prime p");
        sqf::LocalDensity d;
        if (auto hit = ctx->densities.find(f, p)) {
            d = *hit;
        } else {
            d = sqf::local_density(f, p, ctx->config.budget());
            ctx->densities.put(d);
        }
        if (lambda_p2_1 != nullptr)
            *lambda_p2_1 = d.lambda_p2_1;
        if (lambda_1_p2 != nullptr)
            *lambda_1_p2 = d.lambda_1_p2;
        if (term != nullptr)
            *term = d.term();
        return SQF_OK;
    });
}

sqf_status sqf_singular_series(sqf_ctx* ctx, sqf_family family, int64_t cutoff, double* sigma,
                               double* tail_estimate) {
    return guarded(ctx, [&]() -> sqf_status {
        if (sigma == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        sqf::SeriesEstimate est = sqf::singular_series(to_family(family), cutoff, ctx->config.budget(),
                                                       ctx->config.threads(), &ctx->densities);
        *sigma = est.value;
        if (tail_estimate != nullptr)
            *tail_estimate = est.tail_estimate;
        return SQF_OK;
    });
}

sqf_status sqf_gamma_census(sqf_ctx* ctx, sqf_family family, int64_t h, int64_t sigma_cutoff,
                            int64_t* count, double* main_term, double* residual, double* sigma) {
    return guarded(ctx, [&]() -> sqf_status {
        sqf::Family f = to_family(family);
        i64 cutoff = sigma_cutoff > 0 ? sigma_cutoff : default_cutoff(ctx, f);
        sqf::SeriesEstimate est =
            sqf::singular_series(f, cutoff, ctx->config.budget(), ctx->config.threads(), &ctx->densities);
        sqf::GammaCensus c = sqf::gamma_census(f, h, est.value, ctx->config.budget(), nullptr,
                                               ctx->config.threads());
        if (count != nullptr)
            *count = c.count;
        if (main_term != nullptr)
            *main_term = c.main_term;
        if (residual != nullptr)
            *residual = c.residual;
        if (sigma != nullptr)
            *sigma = est.value;
        return SQF_OK;
    });
}

sqf_status sqf_render_exp_sum(sqf_ctx* ctx, sqf_sum_kind kind, int64_t q, int64_t m, int64_t n,
                              sqf_format format, char** out) {
    return guarded(ctx, [&]() -> sqf_status {
        if (out == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        double re = 0.0, im = 0.0;
        sqf_status st = sqf_exp_sum(ctx, kind, q, m, n, &re, &im);
        if (st != SQF_OK)
            return st;
        std::string payload;
        if (format == SQF_FORMAT_CSV) {
            payload = sqf::csv_line({"re", "im"}) + sqf::csv_line({sqf::jreal(re), sqf::jreal(im)});
        } else {
            sqf::JsonObject o;
            payload = o.real("re", re).real("im", im).build();
        }
        *out = dup_string(payload);
        return SQF_OK;
    });
}

sqf_status sqf_render_lambda(sqf_ctx* ctx, sqf_family family, int64_t q1, int64_t q2, int64_t l,
                             int64_t m, int64_t n, sqf_method method, sqf_format format, char** out) {
    return guarded(ctx, [&]() -> sqf_status {
        if (out == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        sqf::LambdaValue v = sqf::lambda_eval(
            to_family(family), q1, q2, sqf::Twist{l, m, n},
            method == SQF_METHOD_CLOSED ? sqf::LambdaMethod::closed : sqf::LambdaMethod::direct,
            ctx->config.budget());
        *out = dup_string(render_lambda_payload(v, format));
        return SQF_OK;
    });
}

sqf_status sqf_render_sigma(sqf_ctx* ctx, sqf_family family, int64_t cutoff, sqf_format format,
                            char** out) {
    return guarded(ctx, [&]() -> sqf_status {
        if (out == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        sqf::Family f = to_family(family);
        i64 used = cutoff > 0 ? cutoff : default_cutoff(ctx, f);
        sqf::SeriesEstimate est =
            sqf::singular_series(f, used, ctx->config.budget(), ctx->config.threads(), &ctx->densities);
        std::string payload;
        if (format == SQF_FORMAT_CSV) {
            payload = sqf::csv_line({"sigma", "cutoff", "tail_estimate"}) +
                      sqf::csv_line({sqf::jreal(est.value), sqf::jint(est.cutoff), sqf::jreal(est.tail_estimate)});
        } else {
            sqf::JsonObject o;
            o.real("sigma", est.value).integer("cutoff", est.cutoff).real("tail_estimate", est.tail_estimate);
            if (est.nonpositive_terms > 0)
                o.integer("nonpositive_terms", est.nonpositive_terms);
            payload = o.build();
        }
        *out = dup_string(payload);
        return SQF_OK;
    });
}

sqf_status sqf_render_gamma(sqf_ctx* ctx, sqf_family family, int64_t h, int64_t sigma_cutoff,
                            sqf_format format, char** out) {
    return guarded(ctx, [&]() -> sqf_status {
        if (out == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        int64_t count = 0;
        double main_term = 0.0, residual = 0.0, sigma = 0.0;
        sqf_status st = sqf_gamma_census(ctx, family, h, sigma_cutoff, &count, &main_term, &residual, &sigma);
        if (st != SQF_OK)
            return st;
        std::string payload;
        if (format == SQF_FORMAT_CSV) {
            payload = sqf::csv_line({"H", "count", "main_term", "residual"}) +
                      sqf::csv_line({sqf::jint(h), sqf::jint(count), sqf::jreal(main_term), sqf::jreal(residual)});
        } else {
            sqf::JsonObject o;
            o.integer("H", h)
                .integer("count", count)
                .real("main_term", main_term)
                .real("residual", residual)
                .real("sigma", sigma);
            payload = o.build();
        }
        *out = dup_string(payload);
        return SQF_OK;
    });
}

sqf_status sqf_render_fit(sqf_ctx* ctx, sqf_family family, const int64_t* h_list, size_t h_count,
                          int64_t sigma_cutoff, sqf_format format, char** out) {
    return guarded(ctx, [&]() -> sqf_status {
        if (out == nullptr || h_list == nullptr)
            sqf::fail(sqf::errc::usage, "null output pointer");
        sqf::Family f = to_family(family);
        i64 cutoff = sigma_cutoff > 0 ? sigma_cutoff : default_cutoff(ctx, f);
        sqf::SeriesEstimate est =
            sqf::singular_series(f, cutoff, ctx->config.budget(), ctx->config.threads(), &ctx->densities);
        sqf::FitReport report = sqf::residual_exponent_fit(
            f, std::span<const i64>(h_list, h_count), est.value, ctx->config.budget(),
            ctx->config.threads());

        std::string payload;
        if (format == SQF_FORMAT_CSV) {
            payload = sqf::csv_line({"H", "count", "main_term", "residual"});
            for (const auto& p : report.points)
                payload += sqf::csv_line(
                    {sqf::jint(p.h), sqf::jint(p.count), sqf::jreal(p.main_term), sqf::jreal(p.residual)});
        } else {
            std::vector<std::string> points;
            for (const auto& p : report.points) {
                sqf::JsonObject po;
                po.integer("H", p.h)
                    .integer("count", p.count)
                    .real("main_term", p.main_term)
                    .real("residual", p.residual)
                    .boolean("usable", p.usable);
                points.push_back(po.build());
            }
            sqf::JsonObject o;
            o.real("slope", report.slope)
                .real("theorem_exponent", report.theorem_exponent)
                .integer("usable_points", report.usable_points)
                .real("sigma", est.value)
                .raw("points", sqf::jarray(points));
            payload = o.build();
        }
        *out = dup_string(payload);
        return SQF_OK;
    });
}

sqf_status sqf_verify(sqf_ctx* ctx, const char* suite, sqf_format format, char** out) {
    return guarded(ctx, [&]() -> sqf_status {
        if (suite == nullptr || out == nullptr)
            sqf::fail(sqf::errc::usage, "null suite name or output pointer");
        if (!sqf::is_suite_name(suite))
            sqf::fail(sqf::errc::usage, std::string("unknown suite: ") + suite);
        sqf::SuiteReport report = sqf::run_suite(suite, ctx->config, &ctx->densities);
        *out = dup_string(format == SQF_FORMAT_CSV ? sqf::suite_report_csv(report)
                                                   : sqf::suite_report_json(report));
        std::fprintf(stderr, "[suite %s] %lld cases, %zu failures, %.0f ms\n", report.name.c_str(),
                     static_cast<long long>(report.sweep.cases), report.sweep.failures.size(),
                     report.wall_ms);
        if (!report.passed()) {
            ctx->last_error = "suite " + report.name + " reported failures";
            return SQF_ERROR_VERIFY;
        }
        return SQF_OK;
    });
}

} // extern "C"
