#pragma once

// Exact censuses of lattice triples whose two shifted polynomial values are
// both square-free, the congruence-restricted counts feeding the Mobius
// expansion, and the exact exponential-sum decomposition of the restricted
// count. Everything here is integer-exact except the final main-term
// comparison.

#include <span>
#include <vector>

#include "lambda.hpp"

namespace sqf {

class SquarefreeTable {
public:
    SquarefreeTable() = default;
    explicit SquarefreeTable(i64 limit);
    i64 limit() const { return limit_; }
    bool squarefree(i64 n) const { return (bits_[static_cast<size_t>(n >> 6)] >> (n & 63)) & 1u; }
    i64 count_squarefree() const;

private:
    i64 limit_ = 0;
    std::vector<u64> bits_; // bit per integer, 1 = square-free
};

SquarefreeTable build_squarefree_table(i64 limit);

// Trial-division square-free check, independent of both the sieve and the
// factorizer; the spot-check oracle.
bool is_squarefree_slow(i64 n);

// Largest value either shifted polynomial takes on [1, h]^3.
inline i64 poly_max_value(Family f, i64 h) {
    return f == Family::A ? 3 * h * h + h + 2 : 2 * h * h + h + 2;
}

struct GammaCensus {
    Family family = Family::A;
    i64 h = 1;
    i64 count = 0;
    double sigma_ref = 0.0;
    double main_term = 0.0; // sigma_ref * h^3
    double residual = 0.0;  // count - main_term
};

// Histogram reduction: r(s) = #{(x, y) in [1,h]^2 : x^2 + y^2 = s}, then
// count = sum over z, s of r(s) [s + g + 1 square-free][s + g + 2 square-free].
// The z loop partitions across workers; partial counts are integers, so the
// total is independent of the partitioning.
i64 gamma_count(Family f, i64 h, i64 budget, const SquarefreeTable* table = nullptr, int threads = 1);

// Plain triple loop with trial-division square-free tests; the oracle for
// small h.
i64 gamma_count_naive(Family f, i64 h);

GammaCensus gamma_census(Family f, i64 h, double sigma_ref, i64 budget,
                         const SquarefreeTable* table = nullptr, int threads = 1);

// #{1 <= v <= h : v == r (mod q)} for r in [0, q).
inline i64 residue_box_count(i64 h, i64 q, i64 r) {
    if (r == 0)
        return h / q;
    return r > h ? 0 : (h - r) / q + 1;
}

// Triples (x, y, z) in [1, h]^3 with poly + 1 == 0 (mod q1) and
// poly + 2 == 0 (mod q2), coprime moduli. Counts residue boxes when the
// box is coarser than h, otherwise enumerates directly; exact either way.
i64 restricted_count(Family f, i64 h, i64 q1, i64 q2, i64 budget);

// Same count at moduli (d1^2, d2^2).
i64 sigma_count(Family f, i64 h, i64 d1, i64 d2, i64 budget);

// The exact identity
//   (q1 q2)^3 Sigma(h, q1, q2) = h^3 lambda + 2 h^2 S1 + h^2 S1z
//                                + 2 h S2 + h S2xy + S3
// with the S sums assembled from the full twist table and finite geometric
// sums; sound for any coprime pair, relies on the x<->y symmetry of the
// solution set.
struct DecompositionCheck {
    i64 count = 0;       // Sigma(h, q1, q2) by box counting
    double lhs = 0.0;    // (q1 q2)^3 * count
    cplx rhs = 0.0;      // assembled right side
    double relative_deviation = 0.0;
    double lambda_untwisted = 0.0;
    cplx s1, s1z, s2, s2xy, s3;
};

DecompositionCheck sigma_decomposition_check(Family f, i64 h, i64 q1, i64 q2, i64 budget);

// Census equals the full square-free-pair expansion, exact integers:
//   Gamma(h) = sum over coprime square-free (d1, d2) of
//              mobius(d1) mobius(d2) Sigma(h, d1^2, d2^2).
// tail_mass reports sum of |terms| with d1 d2 > xi for the family's proof
// cutoff (xi = h^{3/4} for A, h^{1/2} for B).
struct MobiusCheck {
    i64 census = 0;
    i64 expansion = 0;
    bool exact = false;
    i64 pairs = 0;
    double xi = 0.0;
    i64 tail_pairs = 0;
    i64 tail_mass = 0;
};

MobiusCheck mobius_identity_check(Family f, i64 h, i64 budget);

// Least-squares slope of log|residual| against log h; points with
// |residual| < 1 are excluded. Throws degenerate_fit below 3 usable points.
struct FitPoint {
    i64 h = 0;
    i64 count = 0;
    double main_term = 0.0;
    double residual = 0.0;
    bool usable = false;
};

struct FitReport {
    Family family = Family::A;
    double slope = 0.0;
    double theorem_exponent = 0.0; // 9/4 for family A, 5/2 for family B
    int usable_points = 0;
    std::vector<FitPoint> points;
};

double fit_log_slope(std::span<const std::pair<double, double>> points);

FitReport residual_exponent_fit(Family f, std::span<const i64> h_list, double sigma_ref, i64 budget,
                                int threads = 1);

} // namespace sqf
