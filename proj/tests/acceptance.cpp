// Acceptance harness: runs every acceptance criterion at its stated
// tolerance and prints one line per criterion. Exit status is the number of
// hard failures (warnings do not fail the run).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "census.hpp"
#include "config.hpp"
#include "emit.hpp"
#include "series.hpp"
#include "suites.hpp"

using namespace sqf;

namespace {

struct Outcome {
    bool pass = false;
    bool warn = false;
    std::string detail;
    double seconds = 0.0;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Config pinned_config() {
    Config cfg;
    cfg.set("gauss.q_max", "150");
    cfg.set("salie.q_max", "201");
    cfg.set("weil.q_max", "201");
    cfg.set("lambda.closed_product_max", "225");
    cfg.set("lambda.exact_law_product_max", "100");
    cfg.set("mult.product_max", "210");
    cfg.set("decomposition.product_max", "15");
    cfg.set("decomposition.h_list", "5,8,13");
    cfg.set("mobius.h_max", "12");
    cfg.set("sigma.cutoff_a", "150");
    return cfg;
}

std::string failure_summary(const Sweep& sweep) {
    if (sweep.failures.empty())
        return "0 violations";
    return jint(static_cast<i64>(sweep.failures.size())) + " violations, first: " +
           sweep.failures.front().key + " (" + sweep.failures.front().detail + ")";
}

// 1. Gauss identity sweep, moduli <= 150, deviation < 1e-8, under 30 s
Outcome criterion_gauss(const Config& cfg) {
    Timer timer;
    SuiteReport report = run_suite("gauss", cfg, nullptr);
    Outcome out;
    out.seconds = timer.seconds();
    out.pass = report.passed() && report.sweep.max_deviation < 1e-8 && out.seconds < 30.0;
    out.detail = jint(report.sweep.cases) + " tuples, max deviation " +
                 jreal(report.sweep.max_deviation) + ", " + failure_summary(report.sweep);
    return out;
}

// 2. Salie bound (odd q <= 201) and Kloosterman bound (q <= 201), all
//    m, n in [0, q), zero violations, under 60 s
Outcome criterion_bounds(const Config& cfg) {
    Timer timer;
    SuiteReport salie = run_suite("salie", cfg, nullptr);
    SuiteReport weil = run_suite("weil", cfg, nullptr);
    Outcome out;
    out.seconds = timer.seconds();
    out.pass = salie.passed() && weil.passed() && out.seconds < 60.0;
    out.detail = "salie " + jint(salie.sweep.cases) + " cases (" + failure_summary(salie.sweep) +
                 "), kloosterman " + jint(weil.sweep.cases) + " cases (" +
                 failure_summary(weil.sweep) + ")";
    return out;
}

struct LambdaSuiteSplit {
    Sweep closed;
    Sweep exact_law;
    double seconds = 0.0;
};

LambdaSuiteSplit run_lambda_suite(const Config& cfg) {
    Timer timer;
    SuiteReport report = run_suite("lambda", cfg, nullptr);
    LambdaSuiteSplit split;
    split.seconds = timer.seconds();
    split.closed.cases = report.sweep.cases;
    split.closed.max_deviation = report.sweep.max_deviation;
    for (const auto& f : report.sweep.failures) {
        if (f.key.rfind("exact-law/", 0) == 0)
            split.exact_law.failures.push_back(f);
        else
            split.closed.failures.push_back(f);
    }
    return split;
}

// 3. closed forms == direct enumeration, odd coprime q1 q2 <= 225, twists
//    on the 3x3x3 grid plus (0,0,0), tolerance 1e-6 (q1 q2)^2, under 5 min
Outcome criterion_closed_forms(const LambdaSuiteSplit& split) {
    Outcome out;
    out.seconds = split.seconds;
    out.pass = split.closed.failures.empty() && out.seconds < 300.0;
    out.detail = jint(split.closed.cases) + " evaluations, " + failure_summary(split.closed);
    return out;
}

// 5. family-B exact law lambda*(q1, q2) = (q1 q2)^2 on coprime pairs <= 100
Outcome criterion_exact_law(const LambdaSuiteSplit& split) {
    Outcome out;
    out.pass = split.exact_law.failures.empty();
    out.detail = failure_summary(split.exact_law);
    return out;
}

// 4. multiplicative splitting on all admissible 4-tuples with product <= 210
Outcome criterion_multiplicativity(const Config& cfg) {
    Timer timer;
    SuiteReport report = run_suite("multiplicativity", cfg, nullptr);
    Outcome out;
    out.seconds = timer.seconds();
    out.pass = report.passed();
    out.detail = jint(report.sweep.cases) + " checks, max deviation " +
                 jreal(report.sweep.max_deviation) + ", " + failure_summary(report.sweep);
    return out;
}

// 6. exponential-sum decomposition exact to 1e-5 relative, q1 q2 <= 15,
//    H in {5, 8, 13}, both families
Outcome criterion_decomposition(const Config& cfg) {
    Timer timer;
    SuiteReport report = run_suite("decomposition", cfg, nullptr);
    Outcome out;
    out.seconds = timer.seconds();
    out.pass = report.passed();
    out.detail = jint(report.sweep.cases) + " identities, max relative deviation " +
                 jreal(report.sweep.max_deviation) + ", " + failure_summary(report.sweep);
    return out;
}

// 7. Mobius identity exact integers for every H <= 12, both families
Outcome criterion_mobius(const Config& cfg) {
    Timer timer;
    SuiteReport report = run_suite("mobius", cfg, nullptr);
    Outcome out;
    out.seconds = timer.seconds();
    out.pass = report.passed();
    out.detail = jint(report.sweep.cases) + " identities, " + failure_summary(report.sweep);
    return out;
}

// 8. singular series: family-B partial products at cutoffs 1e3 / 1e4 within
//    2e-4, both in (0.31, 0.34); family-A dual path exact for p <= 13
Outcome criterion_sigma(const Config& cfg, DensityStore& store) {
    Timer timer;
    Outcome out;
    i64 budget = cfg.budget();
    SeriesEstimate b3 = singular_series(Family::B, 1000, budget, 0, &store);
    SeriesEstimate b4 = singular_series(Family::B, 10000, budget, 0, &store);
    double diff = std::abs(b3.value - b4.value);
    bool window = b3.value > 0.31 && b3.value < 0.34 && b4.value > 0.31 && b4.value < 0.34;

    i64 dual_mismatches = 0;
    for (i64 p : primes_up_to(13)) {
        LocalDensity hist = local_density(Family::A, p, budget);
        LocalDensity brute = local_density_bruteforce(Family::A, p, budget);
        if (hist.lambda_p2_1 != brute.lambda_p2_1 || hist.lambda_1_p2 != brute.lambda_1_p2)
            ++dual_mismatches;
    }
    SeriesEstimate a_ref = singular_series(Family::A, cfg.get_int("sigma.cutoff_a"), budget,
                                           cfg.threads(), &store);

    out.seconds = timer.seconds();
    out.pass = diff < 2e-4 && window && dual_mismatches == 0 && a_ref.nonpositive_terms == 0;
    out.detail = "sigma*(1e3)=" + jreal(b3.value) + " sigma*(1e4)=" + jreal(b4.value) + " diff=" +
                 jreal(diff) + ", dual-path mismatches " + jint(dual_mismatches) + ", sigma_A(150)=" +
                 jreal(a_ref.value);
    return out;
}

// 9. main-term reproduction at H = 200: |count / H^3 - sigma| < 0.05 for
//    both families, under 2 min each
Outcome criterion_main_term(const Config& cfg, DensityStore& store) {
    Outcome out;
    i64 budget = cfg.budget();
    const i64 h = 200;
    double h3 = static_cast<double>(h) * h * h;

    Timer timer_b;
    SeriesEstimate sigma_b = singular_series(Family::B, 10000, budget, 0, &store);
    GammaCensus census_b = gamma_census(Family::B, h, sigma_b.value, budget, nullptr, cfg.threads());
    double dev_b = std::abs(static_cast<double>(census_b.count) / h3 - sigma_b.value);
    double sec_b = timer_b.seconds();

    Timer timer_a;
    SeriesEstimate sigma_a = singular_series(Family::A, cfg.get_int("sigma.cutoff_a"), budget,
                                             cfg.threads(), &store);
    GammaCensus census_a = gamma_census(Family::A, h, sigma_a.value, budget, nullptr, cfg.threads());
    double dev_a = std::abs(static_cast<double>(census_a.count) / h3 - sigma_a.value);
    double sec_a = timer_a.seconds();

    out.seconds = sec_a + sec_b;
    out.pass = dev_a < 0.05 && dev_b < 0.05 && sec_a < 120.0 && sec_b < 120.0;
    out.detail = "A: count=" + jint(census_a.count) + " |count/H^3 - sigma|=" + jreal(dev_a) +
                 "; B: count=" + jint(census_b.count) + " |count/H^3 - sigma|=" + jreal(dev_b);
    return out;
}

// 10. residual exponent fit over H in {50,...,300}: slope <= 2.75 (A) and
//     <= 2.9 (B); fewer than 4 usable points downgrades to a warning
Outcome criterion_fit(const Config& cfg, DensityStore& store) {
    Timer timer;
    Outcome out;
    i64 budget = cfg.budget();
    const std::vector<i64> hs{50, 100, 150, 200, 250, 300};

    SeriesEstimate sigma_a = singular_series(Family::A, cfg.get_int("sigma.cutoff_a"), budget,
                                             cfg.threads(), &store);
    SeriesEstimate sigma_b = singular_series(Family::B, 10000, budget, 0, &store);
    FitReport fit_a = residual_exponent_fit(Family::A, hs, sigma_a.value, budget, cfg.threads());
    FitReport fit_b = residual_exponent_fit(Family::B, hs, sigma_b.value, budget, cfg.threads());

    bool enough = fit_a.usable_points >= 4 && fit_b.usable_points >= 4;
    bool slopes = fit_a.slope <= 2.75 && fit_b.slope <= 2.9;
    out.seconds = timer.seconds();
    if (!enough) {
        out.pass = true;
        out.warn = true;
    } else {
        out.pass = slopes;
    }
    out.detail = "A: slope=" + jreal(fit_a.slope) + " (limit 2.75, exponent 2.25, usable " +
                 jint(fit_a.usable_points) + "); B: slope=" + jreal(fit_b.slope) +
                 " (limit 2.9, exponent 2.5, usable " + jint(fit_b.usable_points) + ")";
    return out;
}

} // namespace

int main() {
    Config cfg = pinned_config();
    DensityStore store;
    int hard_failures = 0;

    auto emit = [&](int index, const char* title, const Outcome& out) {
        const char* tag = out.pass ? (out.warn ? "WARN" : "PASS") : "FAIL";
        std::printf("[%s] %2d. %-28s %s (%.1f s)\n", tag, index, title, out.detail.c_str(),
                    out.seconds);
        std::fflush(stdout);
        if (!out.pass)
            ++hard_failures;
    };

    emit(1, "gauss identities", criterion_gauss(cfg));
    emit(2, "salie/kloosterman bounds", criterion_bounds(cfg));

    LambdaSuiteSplit lambda_split = run_lambda_suite(cfg);
    emit(3, "closed-form equivalence", criterion_closed_forms(lambda_split));
    emit(4, "multiplicative splitting", criterion_multiplicativity(cfg));
    emit(5, "family-B exact law", criterion_exact_law(lambda_split));
    emit(6, "decomposition identity", criterion_decomposition(cfg));
    emit(7, "mobius identity", criterion_mobius(cfg));
    emit(8, "singular series", criterion_sigma(cfg, store));
    emit(9, "main-term reproduction", criterion_main_term(cfg, store));
    emit(10, "residual exponent fit", criterion_fit(cfg, store));

    if (hard_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria failed\n", hard_failures);
    return hard_failures;
}
