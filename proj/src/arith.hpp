#pragma once

// Exact integer and modular primitives. Everything here is pure and
// deterministic; all moduli at the scales this library targets fit in 64
// bits, with 128-bit intermediates where products of two moduli appear.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sqf {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

struct Residue {
    i64 value = 0;   // 0 <= value < modulus
    i64 modulus = 1; // >= 1
};

// Canonical representative in [0, q).
inline i64 mod_floor(i64 a, i64 q) {
    i64 r = a % q;
    return r < 0 ? r + q : r;
}

i64 gcd(i64 a, i64 b);
i64 gcd3(i64 a, i64 b, i64 c);

// (a * b) mod m without overflow, m > 0.
inline i64 mul_mod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<i128>(a) * b % m); }

i64 power_mod(i64 base, i64 exp, i64 m);

// Inverse of n modulo q, result in (0, q); q = 1 yields 0, the unique
// residue. Throws not_coprime when gcd(n, q) != 1.
i64 mod_inverse(i64 n, i64 q);

// Jacobi symbol (a / q) for odd q >= 1; negative a is reduced mod q first.
// Throws even_modulus for even q.
int jacobi(i64 a, i64 q);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(i64 n);

struct Factorization {
    i64 n = 1;
    std::vector<std::pair<i64, int>> factors; // (prime, exponent), primes increasing

    i64 mobius() const;
    int omega() const { return static_cast<int>(factors.size()); }
    i64 tau() const;
    i64 phi() const;
    bool squarefree() const;
};

Factorization factorize(i64 n); // n >= 1

Residue crt_pair(const Residue& r1, const Residue& r2); // throws not_coprime

// ||t|| = min({t}, 1 - {t}), the distance from t to the nearest integer.
double dist_to_nearest_integer(double t);

std::vector<i64> primes_up_to(i64 n);

} // namespace sqf
