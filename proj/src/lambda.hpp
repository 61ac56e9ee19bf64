#pragma once

// Twisted solution counts for the two polynomial families
//   family A: x^2 + y^2 + z^2 + z + c
//   family B: x^2 + y^2 + z + c
// with the fixed shifts c = 1 (first modulus) and c = 2 (second modulus):
//
//   lambda(q1, q2, l, m, n) = sum over (x, y, z) in [1, q1 q2]^3 with
//       family poly + 1 == 0 (mod q1) and family poly + 2 == 0 (mod q2)
//     of e((l x + m y + n z) / (q1 q2)).
//
// lambda_direct enumerates the solution set; that enumeration is the oracle
// every other evaluation path is checked against. The closed forms expand
// the same quantity into divisor sums over Gauss/Salie factors (family A)
// and Gauss/Kloosterman factors (family B); both require odd coprime moduli.

#include <array>
#include <span>
#include <vector>

#include "arith.hpp"
#include "expsums.hpp"

namespace sqf {

enum class Family { A, B };

inline const char* family_name(Family f) { return f == Family::A ? "A" : "B"; }

// z-part of the polynomial; the full value is x^2 + y^2 + poly_z(f, z) + shift.
inline i64 poly_z(Family f, i64 z) { return f == Family::A ? z * z + z : z; }

struct Twist {
    i64 l = 0, m = 0, n = 0;
};

enum class LambdaMethod { direct, closed };

// Integer-rounding tolerance: scales with the number of summed unit terms.
inline double lambda_tolerance(i64 q1, i64 q2) {
    double prod = static_cast<double>(q1) * static_cast<double>(q2);
    return 1e-6 * prod * prod;
}

// All (x, y, z) in [1, q1 q2]^3 satisfying the two congruences, in (z, x, y)
// scan order. Throws budget_exceeded when (q1 q2)^3 exceeds the budget.
struct SolutionSet {
    Family family;
    i64 q1 = 1, q2 = 1;
    std::vector<std::array<int32_t, 3>> points; // (x, y, z)
    i64 product() const { return q1 * q2; }
};

SolutionSet enumerate_solutions(Family f, i64 q1, i64 q2, i64 budget);

cplx lambda_from_solutions(const SolutionSet& sols, const Twist& t);

cplx lambda_direct(Family f, i64 q1, i64 q2, const Twist& t, i64 budget);
std::vector<cplx> lambda_direct_batch(Family f, i64 q1, i64 q2, std::span<const Twist> twists, i64 budget);

// Divisor-sum expansions, evaluated exactly as written including the
// inverse-residue phases. Preconditions: q1 q2 odd, gcd(q1, q2) = 1.
cplx lambda_closed(Family f, i64 q1, i64 q2, const Twist& t);

struct LambdaValue {
    cplx value;
    bool is_integer = false; // untwisted and within tolerance of an integer
    i64 integer_value = 0;
    bool mod8_warning = false; // 8 | q1 q2: outside the closed-form/bound hypotheses
};

LambdaValue lambda_eval(Family f, i64 q1, i64 q2, const Twist& t, LambdaMethod method, i64 budget);

// Full table of lambda over all twists (l, m, n) in [0, Q)^3, index
// (l * Q + m) * Q + n. Feeds the exponential-sum decomposition check.
std::vector<cplx> lambda_full_table(Family f, i64 q1, i64 q2, i64 budget);

// Splitting law under pairwise coprime factorizations: the count at moduli
// (q1 q2, q3 q4) factors into counts at (q1, q3) and (q2, q4) with twists
// multiplied by the inverse of the complementary modulus product.
struct MultiplicativityCheck {
    cplx lhs, rhs;
    double deviation;
};

MultiplicativityCheck check_multiplicativity(Family f, i64 q1, i64 q2, i64 q3, i64 q4, const Twist& t,
                                             i64 budget);

// |lambda| against the divisor-bound expression, constant 1; the implied
// constant is fitted from the reported ratios, never asserted.
//   family A: q1 q2 tau(q1 q2) 2^omega(q1) 2^omega(q2) (q1 q2, l, m, n)
//   family B: (q1 q2)^2 tau(q1 q2)^2
struct BoundCheck {
    double magnitude;
    double bound;
    double ratio;
};

BoundCheck check_lambda_bound(Family f, i64 q1, i64 q2, const Twist& t, i64 budget);

// Harmonic-weighted sums over twisted counts:
//   W1 = sum_{1<=l<=h0} |lambda(l,0,0)| / l        W2 = same over (0,0,n)
//   W3 = sum_{l,m} |lambda(l,m,0)| / (l m)         W4 = same over (l,0,n)
//   W5 = sum_{l,m,n} |lambda(l,m,n)| / (l m n)
std::array<double, 5> weighted_lambda_sums(Family f, i64 q1, i64 q2, i64 h0, i64 budget);

} // namespace sqf
