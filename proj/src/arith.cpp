#include "arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sqf {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(a, std::gcd(b, c)); }

i64 power_mod(i64 base, i64 exp, i64 m) {
    if (m == 1)
        return 0;
    i64 result = 1;
    base = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

i64 mod_inverse(i64 n, i64 q) {
    if (q < 1)
        fail(errc::bad_modulus, "mod_inverse: modulus must be positive");
    if (q == 1)
        return 0;
    i64 a = mod_floor(n, q);
    // extended Euclid on (q, a)
    i64 old_r = q, r = a;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_t -= quot * t;
        std::swap(old_t, t);
    }
    if (old_r != 1)
        fail(errc::not_coprime, "mod_inverse: arguments are not coprime");
    return mod_floor(old_t, q);
}

int jacobi(i64 a, i64 q) {
    if (q < 1 || q % 2 == 0)
        fail(errc::even_modulus, "jacobi: modulus must be odd and positive");
    a = mod_floor(a, q);
    i64 n = q;
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5)
                sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

namespace {

bool miller_rabin_witness(i64 n, i64 a) {
    i64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    i64 x = power_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(i64 n) {
    if (n < 2)
        return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    // this witness set is exact for every n < 3.3e24
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin_witness(n, a))
            return false;
    }
    return true;
}

i64 Factorization::mobius() const {
    for (const auto& [p, e] : factors)
        if (e > 1)
            return 0;
    return (factors.size() % 2 == 0) ? 1 : -1;
}

i64 Factorization::tau() const {
    i64 t = 1;
    for (const auto& [p, e] : factors)
        t *= (e + 1);
    return t;
}

i64 Factorization::phi() const {
    i64 result = n;
    for (const auto& [p, e] : factors)
        result = result / p * (p - 1);
    return result;
}

bool Factorization::squarefree() const {
    for (const auto& [p, e] : factors)
        if (e > 1)
            return false;
    return true;
}

Factorization factorize(i64 n) {
    if (n < 1)
        fail(errc::usage, "factorize: argument must be >= 1");
    Factorization f;
    f.n = n;
    i64 m = n;
    auto strip = [&](i64 p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    i64 d = 5;
    bool known_composite = false; // current m already failed a primality test
    while (m > 1 && d * d <= m) {
        if (!known_composite) {
            if (is_prime(m)) {
                f.factors.emplace_back(m, 1);
                m = 1;
                break;
            }
            known_composite = true;
        }
        i64 before = m;
        strip(d);
        strip(d + 2);
        if (m != before)
            known_composite = false;
        d += 6;
    }
    if (m > 1)
        f.factors.emplace_back(m, 1);
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

Residue crt_pair(const Residue& r1, const Residue& r2) {
    i64 q1 = r1.modulus, q2 = r2.modulus;
    if (std::gcd(q1, q2) != 1)
        fail(errc::not_coprime, "crt_pair: moduli are not coprime");
    // x = a1 + q1 * ((a2 - a1) * inv(q1) mod q2)
    i64 inv = mod_inverse(q1 % q2, q2);
    i64 diff = mod_floor(r2.value - r1.value, q2);
    i64 k = mul_mod(diff, inv, q2);
    i128 x = static_cast<i128>(q1) * k + r1.value;
    return Residue{static_cast<i64>(x), q1 * q2};
}

double dist_to_nearest_integer(double t) {
    double frac = t - std::floor(t);
    return std::min(frac, 1.0 - frac);
}

std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> ps;
    if (n < 2)
        return ps;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (i64 p = 2; p <= n; ++p) {
        if (composite[static_cast<size_t>(p)])
            continue;
        ps.push_back(p);
        for (i64 k = p * p; k <= n; k += p)
            composite[static_cast<size_t>(k)] = true;
    }
    return ps;
}

} // namespace sqf
