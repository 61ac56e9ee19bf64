#include "series.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "emit.hpp"
#include "parallel.hpp"

namespace sqf {

namespace {

// #{(x, y) mod q : x^2 + y^2 == c} for every c, as the cyclic
// self-convolution of the squares histogram; O(q^2) worst case, quadratic in
// the number of distinct square residues in practice.
std::vector<i64> sum_of_two_squares_histogram(i64 q) {
    std::vector<i64> squares(static_cast<size_t>(q), 0);
    for (i64 x = 1; x <= q; ++x)
        ++squares[static_cast<size_t>(x * x % q)];

    std::vector<std::pair<i64, i64>> nz;
    for (i64 c = 0; c < q; ++c)
        if (squares[static_cast<size_t>(c)] > 0)
            nz.emplace_back(c, squares[static_cast<size_t>(c)]);

    std::vector<i64> counts(static_cast<size_t>(q), 0);
    for (const auto& [a, ca] : nz) {
        for (const auto& [b, cb] : nz) {
            i64 c = a + b;
            if (c >= q)
                c -= q;
            counts[static_cast<size_t>(c)] += ca * cb;
        }
    }
    return counts;
}

i64 histogram_lambda(Family f, i64 p, i64 shift, i64 budget) {
    i64 q = p * p;
    if (static_cast<double>(q) * static_cast<double>(q) > static_cast<double>(budget))
        fail(errc::budget_exceeded, "local density convolution exceeds budget at p=" + std::to_string(p));
    auto pair_counts = sum_of_two_squares_histogram(q);
    i64 total = 0;
    for (i64 z = 1; z <= q; ++z)
        total += pair_counts[static_cast<size_t>(mod_floor(-(poly_z(f, z) + shift), q))];
    return total;
}

void validate_density(const LocalDensity& d, errc code) {
    i64 p6 = d.p * d.p * d.p * d.p * d.p * d.p;
    if (!is_prime(d.p))
        fail(code, "local density at non-prime p=" + std::to_string(d.p));
    if (d.lambda_p2_1 < 0 || d.lambda_p2_1 > p6 || d.lambda_1_p2 < 0 || d.lambda_1_p2 > p6)
        fail(code, "local density out of range at p=" + std::to_string(d.p));
    if (d.family == Family::B) {
        i64 p4 = d.p * d.p * d.p * d.p;
        if (d.lambda_p2_1 != p4 || d.lambda_1_p2 != p4)
            fail(code, "family-B exact law violated at p=" + std::to_string(d.p));
    }
}

} // namespace

LocalDensity local_density(Family f, i64 p, i64 budget, bool verify_exact_law) {
    if (p < 2 || !is_prime(p))
        fail(errc::not_prime, "local density requires a prime p");
    LocalDensity d;
    d.family = f;
    d.p = p;
    if (f == Family::B) {
        i64 p4 = p * p * p * p;
        d.lambda_p2_1 = p4;
        d.lambda_1_p2 = p4;
        if (verify_exact_law) {
            if (histogram_lambda(f, p, 1, budget) != p4 || histogram_lambda(f, p, 2, budget) != p4)
                fail(errc::internal, "family-B exact law failed exhaustive verification");
        }
        return d;
    }
    d.lambda_p2_1 = histogram_lambda(f, p, 1, budget);
    d.lambda_1_p2 = histogram_lambda(f, p, 2, budget);
    validate_density(d, errc::internal);
    return d;
}

LocalDensity local_density_bruteforce(Family f, i64 p, i64 budget) {
    if (p < 2 || !is_prime(p))
        fail(errc::not_prime, "local density requires a prime p");
    i64 q = p * p;
    LocalDensity d;
    d.family = f;
    d.p = p;
    LambdaValue first = lambda_eval(f, q, 1, Twist{}, LambdaMethod::direct, budget);
    LambdaValue second = lambda_eval(f, 1, q, Twist{}, LambdaMethod::direct, budget);
    if (!first.is_integer || !second.is_integer)
        fail(errc::internal, "untwisted count did not round to an integer");
    d.lambda_p2_1 = first.integer_value;
    d.lambda_1_p2 = second.integer_value;
    return d;
}

void DensityStore::attach_file(const std::string& path) {
    std::lock_guard<std::mutex> lock(mutex_);
    path_ = path;
    std::ifstream in(path);
    if (!in)
        return; // missing file is an empty cache
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("family") || !j.contains("p") ||
            !j.contains("lambda_p2_1") || !j.contains("lambda_1_p2"))
            fail(errc::corrupt_cache, path + ":" + std::to_string(lineno) + ": bad cache line");
        std::string fam = j["family"].get<std::string>();
        if (fam != "A" && fam != "B")
            fail(errc::corrupt_cache, path + ":" + std::to_string(lineno) + ": bad family tag");
        LocalDensity d;
        d.family = fam == "A" ? Family::A : Family::B;
        if (!j["p"].is_number_integer() || !j["lambda_p2_1"].is_number_integer() ||
            !j["lambda_1_p2"].is_number_integer())
            fail(errc::corrupt_cache, path + ":" + std::to_string(lineno) + ": non-integer fields");
        d.p = j["p"].get<i64>();
        d.lambda_p2_1 = j["lambda_p2_1"].get<i64>();
        d.lambda_1_p2 = j["lambda_1_p2"].get<i64>();
        validate_density(d, errc::corrupt_cache);
        if (!find_locked(d.family, d.p))
            entries_.push_back(d);
    }
}

std::optional<LocalDensity> DensityStore::find_locked(Family f, i64 p) {
    for (const auto& d : entries_)
        if (d.family == f && d.p == p)
            return d;
    return std::nullopt;
}

std::optional<LocalDensity> DensityStore::find(Family f, i64 p) {
    std::lock_guard<std::mutex> lock(mutex_);
    return find_locked(f, p);
}

void DensityStore::put(const LocalDensity& d) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (find_locked(d.family, d.p))
        return;
    entries_.push_back(d);
    if (path_.empty())
        return;
    std::ofstream out(path_, std::ios::app);
    if (!out)
        fail(errc::io, "cannot append to cache file: " + path_);
    JsonObject line;
    line.str("family", family_name(d.family))
        .integer("p", d.p)
        .integer("lambda_p2_1", d.lambda_p2_1)
        .integer("lambda_1_p2", d.lambda_1_p2);
    out << line.build() << "\n";
    out.flush();
}

i64 DensityStore::size() {
    std::lock_guard<std::mutex> lock(mutex_);
    return static_cast<i64>(entries_.size());
}

namespace {

// sum over n > cutoff of 6 / n^2: short explicit head plus the trigamma
// asymptotic expansion.
double tail_envelope(i64 cutoff) {
    double head = 0.0;
    i64 m = cutoff + 64;
    for (i64 n = cutoff + 1; n < m; ++n)
        head += 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    double x = static_cast<double>(m);
    double trig = 1.0 / x + 1.0 / (2.0 * x * x) + 1.0 / (6.0 * x * x * x) -
                  1.0 / (30.0 * x * x * x * x * x);
    return 6.0 * (head + trig);
}

} // namespace

SeriesEstimate singular_series(Family f, i64 cutoff, i64 budget, int threads, DensityStore* store) {
    if (cutoff < 2)
        fail(errc::usage, "singular series cutoff must be >= 2");
    SeriesEstimate est;
    est.family = f;
    est.cutoff = cutoff;

    auto primes = primes_up_to(cutoff);
    est.terms.resize(primes.size());
    std::vector<char> fresh(primes.size(), 0); // per-index writes from worker threads
    parallel_for(static_cast<i64>(primes.size()), threads, [&](i64 i) {
        i64 p = primes[static_cast<size_t>(i)];
        if (store) {
            if (auto hit = store->find(f, p)) {
                est.terms[static_cast<size_t>(i)] = *hit;
                return;
            }
        }
        est.terms[static_cast<size_t>(i)] = local_density(f, p, budget);
        fresh[static_cast<size_t>(i)] = true;
    });
    if (store) {
        for (size_t i = 0; i < primes.size(); ++i)
            if (fresh[i])
                store->put(est.terms[i]);
    }

    // compensated product, fixed smallest-prime-first order
    double hi = 1.0, lo = 0.0;
    for (const auto& d : est.terms) {
        double t = d.term();
        if (t <= 0.0)
            ++est.nonpositive_terms;
        double ph = hi * t;
        double err = std::fma(hi, t, -ph);
        hi = ph;
        lo = std::fma(lo, t, err);
    }
    est.value = hi + lo;
    est.tail_estimate = tail_envelope(cutoff);
    return est;
}

std::vector<DivisorSumTerm> divisor_sum_terms(Family f, i64 d_max, i64 budget) {
    if (d_max < 1)
        fail(errc::usage, "divisor sum requires d_max >= 1");
    std::vector<DivisorSumTerm> terms;
    for (i64 d1 = 1; d1 <= d_max; ++d1) {
        Factorization f1 = factorize(d1);
        if (f1.mobius() == 0)
            continue;
        for (i64 d2 = 1; d2 <= d_max; ++d2) {
            Factorization f2 = factorize(d2);
            if (f2.mobius() == 0 || std::gcd(d1, d2) != 1)
                continue;
            DivisorSumTerm term;
            term.d1 = d1;
            term.d2 = d2;
            LambdaValue v = lambda_eval(f, d1 * d1, d2 * d2, Twist{}, LambdaMethod::direct, budget);
            if (!v.is_integer)
                fail(errc::internal, "untwisted count did not round to an integer");
            term.lambda = v.integer_value;
            double denom = std::pow(static_cast<double>(d1), 6) * std::pow(static_cast<double>(d2), 6);
            term.value = static_cast<double>(f1.mobius() * f2.mobius()) *
                         static_cast<double>(term.lambda) / denom;
            terms.push_back(term);
        }
    }
    return terms;
}

double series_from_divisor_sum(Family f, i64 d_max, i64 budget) {
    double total = 0.0;
    for (const auto& term : divisor_sum_terms(f, d_max, budget))
        total += term.value;
    return total;
}

} // namespace sqf
