// sqfpairs command-line front end: argument parsing here, all evaluation
// and formatting behind the shared-library C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 work
// budget exceeded.

#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqfpairs.h"

namespace {

struct CtxDeleter {
    void operator()(sqf_ctx* c) const { sqf_ctx_free(c); }
};

int exit_code_for(sqf_status status) {
    switch (status) {
    case SQF_OK: return 0;
    case SQF_ERROR_VERIFY: return 1;
    case SQF_ERROR_BUDGET: return 3;
    default: return 2;
    }
}

int finish(sqf_ctx* ctx, sqf_status status, char* rendered) {
    if (rendered != nullptr) {
        std::fputs(rendered, stdout);
        size_t len = std::strlen(rendered);
        if (len == 0 || rendered[len - 1] != '\n')
            std::fputc('\n', stdout);
        sqf_string_free(rendered);
    }
    if (status != SQF_OK && (rendered == nullptr || status != SQF_ERROR_VERIFY))
        std::fprintf(stderr, "error: %s\n", sqf_ctx_last_error(ctx));
    return exit_code_for(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exponential sums, twisted congruence counts, singular series and "
                 "square-free censuses for the x^2+y^2+z^2+z+c and x^2+y^2+z+c families"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string config_path;
    int threads = -1;
    int64_t budget = -1;
    std::string format = "json";
    app.add_option("--config", config_path, "flat key = value config file");
    app.add_option("--threads", threads, "worker threads, 0 = auto");
    app.add_option("--budget", budget, "iteration budget per evaluation");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // expsum {gauss|salie|kloosterman} --q Q --m M --n N
    auto* expsum = app.add_subcommand("expsum", "evaluate a complete exponential sum")->fallthrough();
    std::string sum_kind;
    int64_t q = 1, m = 0, n = 0;
    expsum->add_option("kind", sum_kind, "gauss, salie or kloosterman")
        ->required()
        ->check(CLI::IsMember({"gauss", "salie", "kloosterman"}));
    expsum->add_option("--q", q, "modulus")->required();
    expsum->add_option("--m", m, "first coefficient");
    expsum->add_option("--n", n, "second coefficient");

    // lambda --family {A|B} --q1 --q2 [--l --m --n] [--method direct|closed]
    auto* lambda = app.add_subcommand("lambda", "twisted solution count")->fallthrough();
    std::string family = "A", method = "direct";
    int64_t q1 = 1, q2 = 1, tl = 0, tm = 0, tn = 0;
    lambda->add_option("--family", family, "polynomial family")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    lambda->add_option("--q1", q1, "first modulus")->required();
    lambda->add_option("--q2", q2, "second modulus")->required();
    lambda->add_option("--l", tl, "x twist");
    lambda->add_option("--m", tm, "y twist");
    lambda->add_option("--n", tn, "z twist");
    lambda->add_option("--method", method, "direct enumeration or closed form")
        ->check(CLI::IsMember({"direct", "closed"}));

    // sigma --family {A|B} --cutoff P [--cache FILE]
    auto* sigma = app.add_subcommand("sigma", "singular-series partial product")->fallthrough();
    std::string sigma_family = "A", cache_path;
    int64_t cutoff = 0;
    sigma->add_option("--family", sigma_family, "polynomial family")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    sigma->add_option("--cutoff", cutoff, "prime cutoff (default per family)");
    sigma->add_option("--cache", cache_path, "JSON-lines local-density cache");

    // gamma --family {A|B} --h H [--sigma-cutoff P]
    auto* gamma = app.add_subcommand("gamma", "square-free census over [1, H]^3")->fallthrough();
    gamma->set_help_flag("--help", "print help"); // frees -h for the --h option
    std::string gamma_family = "A";
    int64_t census_h = 1, sigma_cutoff = 0;
    gamma->add_option("--family", gamma_family, "polynomial family")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    gamma->add_option("--h", census_h, "box size H")->required();
    gamma->add_option("--sigma-cutoff", sigma_cutoff, "prime cutoff for the main-term constant");

    // fit --family F --h-list 50,100,...
    auto* fit = app.add_subcommand("fit", "residual exponent fit over a census grid")->fallthrough();
    std::string fit_family = "A";
    std::vector<int64_t> h_list;
    int64_t fit_cutoff = 0;
    fit->add_option("--family", fit_family, "polynomial family")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    fit->add_option("--h-list", h_list, "ascending census sizes")->required()->delimiter(',');
    fit->add_option("--sigma-cutoff", fit_cutoff, "prime cutoff for the main-term constant");

    // verify --suite NAME
    auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
    std::string suite;
    verify->add_option("--suite", suite, "suite name or 'all'")->required();

    CLI11_PARSE(app, argc, argv);

    sqf_ctx* raw = nullptr;
    if (sqf_ctx_new(&raw) != SQF_OK) {
        std::fprintf(stderr, "error: cannot create context\n");
        return 2;
    }
    std::unique_ptr<sqf_ctx, CtxDeleter> ctx(raw);

    if (!config_path.empty()) {
        sqf_status st = sqf_ctx_load_config(ctx.get(), config_path.c_str());
        if (st != SQF_OK)
            return finish(ctx.get(), st, nullptr);
    }
    if (threads >= 0) {
        sqf_status st = sqf_ctx_set_threads(ctx.get(), threads);
        if (st != SQF_OK)
            return finish(ctx.get(), st, nullptr);
    }
    if (budget >= 0) {
        sqf_status st = sqf_ctx_set_budget(ctx.get(), budget);
        if (st != SQF_OK)
            return finish(ctx.get(), st, nullptr);
    }

    sqf_format out_format = format == "csv" ? SQF_FORMAT_CSV : SQF_FORMAT_JSON;
    auto family_of = [](const std::string& tag) {
        return tag == "A" ? SQF_FAMILY_A : SQF_FAMILY_B;
    };

    char* rendered = nullptr;
    sqf_status status = SQF_OK;

    if (expsum->parsed()) {
        sqf_sum_kind kind = sum_kind == "gauss"   ? SQF_SUM_GAUSS
                            : sum_kind == "salie" ? SQF_SUM_SALIE
                                                  : SQF_SUM_KLOOSTERMAN;
        status = sqf_render_exp_sum(ctx.get(), kind, q, m, n, out_format, &rendered);
    } else if (lambda->parsed()) {
        status = sqf_render_lambda(ctx.get(), family_of(family), q1, q2, tl, tm, tn,
                                   method == "closed" ? SQF_METHOD_CLOSED : SQF_METHOD_DIRECT,
                                   out_format, &rendered);
    } else if (sigma->parsed()) {
        if (!cache_path.empty()) {
            status = sqf_ctx_attach_cache(ctx.get(), cache_path.c_str());
            if (status != SQF_OK)
                return finish(ctx.get(), status, nullptr);
        }
        status = sqf_render_sigma(ctx.get(), family_of(sigma_family), cutoff, out_format, &rendered);
    } else if (gamma->parsed()) {
        status = sqf_render_gamma(ctx.get(), family_of(gamma_family), census_h, sigma_cutoff,
                                  out_format, &rendered);
    } else if (fit->parsed()) {
        status = sqf_render_fit(ctx.get(), family_of(fit_family), h_list.data(), h_list.size(),
                                fit_cutoff, out_format, &rendered);
    } else if (verify->parsed()) {
        status = sqf_verify(ctx.get(), suite.c_str(), out_format, &rendered);
    }

    return finish(ctx.get(), status, rendered);
}
