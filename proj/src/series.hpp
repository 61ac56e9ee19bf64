#pragma once

// Per-prime local densities and the singular-series constants
//
//   sigma(family) = prod over primes p of (1 - (lambda(p^2,1) + lambda(1,p^2)) / p^6)
//
// where lambda is the untwisted solution count of the family. For family B
// the counts are p^4 exactly (z is determined by CRT for every (x, y)), so
// the p-th factor is 1 - 2/p^2 in exact rational terms. For family A the
// counts come from a squares histogram convolved with itself.

#include <cmath>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lambda.hpp"

namespace sqf {

struct LocalDensity {
    Family family = Family::A;
    i64 p = 2;
    i64 lambda_p2_1 = 0; // solutions of poly + 1 == 0 (mod p^2), triples mod p^2
    i64 lambda_1_p2 = 0; // same with shift 2

    double term() const {
        double p6 = std::pow(static_cast<double>(p), 6);
        return 1.0 - static_cast<double>(lambda_p2_1 + lambda_1_p2) / p6;
    }
};

// Histogram path: lambda(p^2, 1) = sum over z of N2(-(poly_z + 1) mod p^2)
// with N2 the cyclic self-convolution of the squares histogram mod p^2.
// Family B short-circuits to p^4; verify_exact_law recomputes it through the
// same histogram machinery and insists on agreement.
LocalDensity local_density(Family f, i64 p, i64 budget, bool verify_exact_law = false);

// Brute-force dual path over (p^2)^3 triples; must agree with the histogram
// path exactly.
LocalDensity local_density_bruteforce(Family f, i64 p, i64 budget);

// Append-only JSON-lines store keyed by (family, p), with an in-memory memo
// in front. Loading validates integer ranges and the family-B exact law;
// violations and parse failures raise corrupt_cache. A missing file is an
// empty cache. Single writer, atomic line appends; readers see a prefix.
class DensityStore {
public:
    void attach_file(const std::string& path); // loads existing entries
    std::optional<LocalDensity> find(Family f, i64 p);
    void put(const LocalDensity& d);
    i64 size();

private:
    std::mutex mutex_;
    std::vector<LocalDensity> entries_;
    std::string path_;

    std::optional<LocalDensity> find_locked(Family f, i64 p);
};

struct SeriesEstimate {
    Family family = Family::A;
    i64 cutoff = 2;
    double value = 1.0;
    double tail_estimate = 0.0; // heuristic envelope, see below
    std::vector<LocalDensity> terms;
    int nonpositive_terms = 0; // factors <= 0 are flagged, never asserted away
};

// Partial Euler product over primes <= cutoff, multiplied smallest prime
// first with compensated products; deterministic digits across runs. The
// tail estimate is the documented heuristic envelope sum over n > cutoff of
// 6 / n^2, not a proved bound.
SeriesEstimate singular_series(Family f, i64 cutoff, i64 budget, int threads, DensityStore* store);

struct DivisorSumTerm {
    i64 d1 = 1, d2 = 1;
    i64 lambda = 1;     // untwisted count at moduli (d1^2, d2^2), by direct enumeration
    double value = 1.0; // mobius(d1) mobius(d2) lambda / (d1 d2)^6
};

// Truncated double sum over coprime square-free pairs with d1, d2 <= d_max,
// each count by direct enumeration. Cross-checked term by term against the
// Euler-product path through the multiplicative splitting.
std::vector<DivisorSumTerm> divisor_sum_terms(Family f, i64 d_max, i64 budget);
double series_from_divisor_sum(Family f, i64 d_max, i64 budget);

} // namespace sqf
