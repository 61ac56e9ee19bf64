#include "lambda.hpp"

#include <cmath>

namespace sqf {

namespace {

void require_pair(i64 q1, i64 q2) {
    if (q1 < 1 || q2 < 1)
        fail(errc::bad_modulus, "moduli must be positive");
    if (q1 > 1'000'000'000 || q2 > 1'000'000'000)
        fail(errc::bad_modulus, "modulus too large");
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

SolutionSet enumerate_solutions(Family f, i64 q1, i64 q2, i64 budget) {
    require_pair(q1, q2);
    double dprod = static_cast<double>(q1) * static_cast<double>(q2);
    if (dprod * dprod * dprod > static_cast<double>(budget))
        fail(errc::budget_exceeded, "solution enumeration over (q1 q2)^3 points exceeds the budget of " +
                                        std::to_string(budget) + " iterations");
    i64 prod = q1 * q2;

    SolutionSet sols;
    sols.family = f;
    sols.q1 = q1;
    sols.q2 = q2;

    // residue-pair key of x^2: key(v) = (v^2 mod q1) * q2 + (v^2 mod q2),
    // so the inner loop is one compare per candidate y
    std::vector<int32_t> sq1(static_cast<size_t>(prod) + 1), sq2(static_cast<size_t>(prod) + 1),
        key(static_cast<size_t>(prod) + 1);
    for (i64 v = 1; v <= prod; ++v) {
        sq1[static_cast<size_t>(v)] = static_cast<int32_t>(v * v % q1);
        sq2[static_cast<size_t>(v)] = static_cast<int32_t>(v * v % q2);
        key[static_cast<size_t>(v)] = static_cast<int32_t>(sq1[static_cast<size_t>(v)] * q2 +
                                                           sq2[static_cast<size_t>(v)]);
    }

    for (i64 z = 1; z <= prod; ++z) {
        i64 gz = poly_z(f, z);
        int32_t r1 = static_cast<int32_t>(mod_floor(-(gz + 1), q1));
        int32_t r2 = static_cast<int32_t>(mod_floor(-(gz + 2), q2));
        for (i64 x = 1; x <= prod; ++x) {
            int32_t need1 = r1 - sq1[static_cast<size_t>(x)];
            if (need1 < 0)
                need1 += static_cast<int32_t>(q1);
            int32_t need2 = r2 - sq2[static_cast<size_t>(x)];
            if (need2 < 0)
                need2 += static_cast<int32_t>(q2);
            int32_t need = need1 * static_cast<int32_t>(q2) + need2;
            for (i64 y = 1; y <= prod; ++y) {
                if (key[static_cast<size_t>(y)] == need)
                    sols.points.push_back({static_cast<int32_t>(x), static_cast<int32_t>(y),
                                           static_cast<int32_t>(z)});
            }
        }
    }
    return sols;
}

cplx lambda_from_solutions(const SolutionSet& sols, const Twist& t) {
    i64 prod = sols.product();
    i64 l = mod_floor(t.l, prod), m = mod_floor(t.m, prod), n = mod_floor(t.n, prod);
    auto roots = unit_roots(prod);
    double re = 0.0, im = 0.0;
    for (const auto& p : sols.points) {
        i64 idx = (l * p[0] + m * p[1] + n * p[2]) % prod;
        const cplx& r = roots[static_cast<size_t>(idx)];
        re += r.real();
        im += r.imag();
    }
    return {re, im};
}

cplx lambda_direct(Family f, i64 q1, i64 q2, const Twist& t, i64 budget) {
    return lambda_from_solutions(enumerate_solutions(f, q1, q2, budget), t);
}

std::vector<cplx> lambda_direct_batch(Family f, i64 q1, i64 q2, std::span<const Twist> twists, i64 budget) {
    SolutionSet sols = enumerate_solutions(f, q1, q2, budget);
    std::vector<cplx> out;
    out.reserve(twists.size());
    for (const Twist& t : twists)
        out.push_back(lambda_from_solutions(sols, t));
    return out;
}

namespace {

// One modulus side of the family-A expansion: a divisor sum over d | q with
// side condition (q / d) | (l, m, n), each term
//   e(-inv(2 q_other, d) n / q) * G(d, 1)^3 / d^3
//     * S(d, c - inv(4, d), -inv(4 q_other^2, d) (l^2+m^2+n^2) d^2 / q^2)
// where c is the constant shift carried by this modulus.
cplx closed_a_side(i64 q, i64 q_other, i64 c, const Twist& t) {
    i64 g = gcd3(t.l, t.m, t.n); // 0 when untwisted; every cofactor divides 0
    i64 sq_sum = t.l * t.l + t.m * t.m + t.n * t.n;
    cplx side = 0.0;
    for (i64 d : divisors(q)) {
        i64 cof = q / d;
        if (g % cof != 0)
            continue;
        if (sq_sum % (cof * cof) != 0)
            fail(errc::internal, "family-A expansion: non-integral twist exponent");
        i64 reduced = (sq_sum / (cof * cof)) % d;

        i64 inv2q = mod_inverse(2 * (q_other % d), d);
        cplx phase = Phase(-inv2q * (t.n % q), q).value();

        i64 inv4 = mod_inverse(4, d);
        i64 m_arg = mod_floor(c - inv4, d);
        i64 inv4qq = mod_inverse(4 * mul_mod(q_other, q_other, d) % d, d);
        i64 n_arg = mod_floor(-inv4qq * reduced, d);

        cplx g1 = gauss_sum(d, 1, 0);
        double d3 = static_cast<double>(d) * static_cast<double>(d) * static_cast<double>(d);
        side += phase * (g1 * g1 * g1 / d3) * salie_sum(d, m_arg, n_arg);
    }
    return side;
}

cplx lambda_closed_a(i64 q1, i64 q2, const Twist& t) {
    double scale = static_cast<double>(q1) * q1 * static_cast<double>(q2) * q2;
    return scale * closed_a_side(q1, q2, 1, t) * closed_a_side(q2, q1, 2, t);
}

// One modulus side of the family-B expansion at a fixed z: divisor sum over
// d | q with side condition (q / d) | (l, m), each term
//   G(d, 1)^2 / d^2 * K(d, z + c, -inv(4 q_other^2, d) (l^2+m^2) d^2 / q^2)
// where c is the constant shift carried by this modulus. The Kloosterman
// value depends on z only through (z + c) mod d, so each divisor
// contributes a precomputed row.
struct ClosedBSide {
    i64 shift = 1;
    std::vector<i64> ds;
    std::vector<cplx> weight;              // G(d,1)^2 / d^2
    std::vector<std::vector<cplx>> krow;   // krow[i][(z + shift) mod d]

    cplx at(i64 z) const {
        cplx sum = 0.0;
        for (size_t i = 0; i < ds.size(); ++i)
            sum += weight[i] * krow[i][static_cast<size_t>((z + shift) % ds[i])];
        return sum;
    }
};

ClosedBSide closed_b_side(i64 q, i64 q_other, i64 c, const Twist& t) {
    i64 g = std::gcd(t.l, t.m);
    i64 sq_sum = t.l * t.l + t.m * t.m;
    ClosedBSide side;
    side.shift = c;
    for (i64 d : divisors(q)) {
        i64 cof = q / d;
        if (g % cof != 0)
            continue;
        if (sq_sum % (cof * cof) != 0)
            fail(errc::internal, "family-B expansion: non-integral twist exponent");
        i64 reduced = (sq_sum / (cof * cof)) % d;
        i64 inv4qq = mod_inverse(4 * mul_mod(q_other, q_other, d) % d, d);
        i64 n_arg = mod_floor(-inv4qq * reduced, d);

        cplx g1 = gauss_sum(d, 1, 0);
        side.ds.push_back(d);
        side.weight.push_back(g1 * g1 / (static_cast<double>(d) * static_cast<double>(d)));
        std::vector<cplx> row(static_cast<size_t>(d));
        for (i64 j = 0; j < d; ++j)
            row[static_cast<size_t>(j)] = kloosterman_sum(d, j, n_arg);
        side.krow.push_back(std::move(row));
    }
    return side;
}

cplx lambda_closed_b(i64 q1, i64 q2, const Twist& t) {
    i64 prod = q1 * q2;
    ClosedBSide side1 = closed_b_side(q1, q2, 1, t);
    ClosedBSide side2 = closed_b_side(q2, q1, 2, t);
    i64 n = mod_floor(t.n, prod);
    cplx total = 0.0;
    for (i64 z = 1; z <= prod; ++z)
        total += Phase(mul_mod(n, z, prod), prod).value() * side1.at(z) * side2.at(z);
    return static_cast<double>(prod) * total;
}

} // namespace

cplx lambda_closed(Family f, i64 q1, i64 q2, const Twist& t) {
    require_pair(q1, q2);
    if (std::gcd(q1, q2) != 1)
        fail(errc::not_coprime, "closed form requires coprime moduli");
    if (static_cast<double>(q1) * static_cast<double>(q2) > 1e8)
        fail(errc::budget_exceeded, "closed form evaluation too large");
    i64 prod = q1 * q2;
    if (prod % 2 == 0)
        fail(errc::even_modulus, "closed form requires odd moduli");
    Twist reduced{mod_floor(t.l, prod), mod_floor(t.m, prod), mod_floor(t.n, prod)};
    return f == Family::A ? lambda_closed_a(q1, q2, reduced) : lambda_closed_b(q1, q2, reduced);
}

LambdaValue lambda_eval(Family f, i64 q1, i64 q2, const Twist& t, LambdaMethod method, i64 budget) {
    LambdaValue out;
    out.value = method == LambdaMethod::direct ? lambda_direct(f, q1, q2, t, budget)
                                               : lambda_closed(f, q1, q2, t);
    out.mod8_warning = (q1 * q2) % 8 == 0;
    i64 prod = q1 * q2;
    bool untwisted = mod_floor(t.l, prod) == 0 && mod_floor(t.m, prod) == 0 && mod_floor(t.n, prod) == 0;
    if (untwisted) {
        double tol = lambda_tolerance(q1, q2);
        double rounded = std::round(out.value.real());
        if (std::abs(out.value.imag()) < tol && std::abs(out.value.real() - rounded) < tol) {
            out.is_integer = true;
            out.integer_value = static_cast<i64>(rounded);
        }
    }
    return out;
}

std::vector<cplx> lambda_full_table(Family f, i64 q1, i64 q2, i64 budget) {
    SolutionSet sols = enumerate_solutions(f, q1, q2, budget);
    i64 prod = q1 * q2;
    double work = static_cast<double>(prod) * prod * prod *
                  std::max<double>(1.0, static_cast<double>(sols.points.size()));
    if (work > static_cast<double>(budget))
        fail(errc::budget_exceeded, "twist table too large for budget");

    auto roots = unit_roots(prod);
    std::vector<cplx> table(static_cast<size_t>(prod * prod * prod));
    size_t idx = 0;
    for (i64 l = 0; l < prod; ++l) {
        for (i64 m = 0; m < prod; ++m) {
            for (i64 n = 0; n < prod; ++n, ++idx) {
                double re = 0.0, im = 0.0;
                for (const auto& p : sols.points) {
                    i64 j = (l * p[0] + m * p[1] + n * p[2]) % prod;
                    const cplx& r = roots[static_cast<size_t>(j)];
                    re += r.real();
                    im += r.imag();
                }
                table[idx] = cplx(re, im);
            }
        }
    }
    return table;
}

MultiplicativityCheck check_multiplicativity(Family f, i64 q1, i64 q2, i64 q3, i64 q4, const Twist& t,
                                             i64 budget) {
    require_pair(q1, q2);
    require_pair(q3, q4);
    if (std::gcd(q1 * q2, q3 * q4) != 1 || std::gcd(q1, q2) != 1 || std::gcd(q3, q4) != 1)
        fail(errc::not_coprime, "multiplicativity requires the three coprimality conditions");

    MultiplicativityCheck out;
    out.lhs = lambda_direct(f, q1 * q2, q3 * q4, t, budget);

    i64 u = q1 * q3, v = q2 * q4;
    i64 inv_v = mod_inverse(v, u); // returns 0 when u = 1
    i64 inv_u = mod_inverse(u, v);
    Twist tu{mul_mod(mod_floor(t.l, u), inv_v, u), mul_mod(mod_floor(t.m, u), inv_v, u),
             mul_mod(mod_floor(t.n, u), inv_v, u)};
    Twist tv{mul_mod(mod_floor(t.l, v), inv_u, v), mul_mod(mod_floor(t.m, v), inv_u, v),
             mul_mod(mod_floor(t.n, v), inv_u, v)};
    out.rhs = lambda_direct(f, q1, q3, tu, budget) * lambda_direct(f, q2, q4, tv, budget);
    out.deviation = std::abs(out.lhs - out.rhs);
    return out;
}

BoundCheck check_lambda_bound(Family f, i64 q1, i64 q2, const Twist& t, i64 budget) {
    require_pair(q1, q2);
    if (std::gcd(q1, q2) != 1)
        fail(errc::not_coprime, "bound check requires coprime moduli");
    i64 prod = q1 * q2;
    if (prod % 8 == 0)
        fail(errc::bad_modulus, "bound check requires 8 not dividing q1 q2");

    BoundCheck out;
    out.magnitude = std::abs(lambda_direct(f, q1, q2, t, budget));
    double dprod = static_cast<double>(prod);
    double tau_prod = static_cast<double>(factorize(prod).tau());
    if (f == Family::A) {
        i64 g = gcd3(t.l, t.m, t.n);
        i64 gq = g == 0 ? prod : std::gcd(prod, g);
        out.bound = dprod * tau_prod * std::pow(2.0, factorize(q1).omega()) *
                    std::pow(2.0, factorize(q2).omega()) * static_cast<double>(gq);
    } else {
        out.bound = dprod * dprod * tau_prod * tau_prod;
    }
    out.ratio = out.magnitude / out.bound;
    return out;
}

std::array<double, 5> weighted_lambda_sums(Family f, i64 q1, i64 q2, i64 h0, i64 budget) {
    require_pair(q1, q2);
    if (std::gcd(q1, q2) != 1)
        fail(errc::not_coprime, "weighted sums require coprime moduli");
    if ((q1 * q2) % 8 == 0)
        fail(errc::bad_modulus, "weighted sums require 8 not dividing q1 q2");
    if (h0 < 2)
        fail(errc::usage, "weighted sums require h0 >= 2");

    SolutionSet sols = enumerate_solutions(f, q1, q2, budget);
    double hd = static_cast<double>(h0);
    double work = (hd * hd * hd + 2 * hd * hd + 2 * hd) * static_cast<double>(sols.points.size());
    if (work > static_cast<double>(budget))
        fail(errc::budget_exceeded, "weighted sums exceed budget");

    auto abs_lambda = [&](i64 l, i64 m, i64 n) {
        return std::abs(lambda_from_solutions(sols, Twist{l, m, n}));
    };

    std::array<double, 5> sums{};
    for (i64 l = 1; l <= h0; ++l) {
        sums[0] += abs_lambda(l, 0, 0) / static_cast<double>(l);
        sums[1] += abs_lambda(0, 0, l) / static_cast<double>(l);
    }
    for (i64 l = 1; l <= h0; ++l) {
        for (i64 m = 1; m <= h0; ++m) {
            double w = 1.0 / (static_cast<double>(l) * static_cast<double>(m));
            sums[2] += abs_lambda(l, m, 0) * w;
            sums[3] += abs_lambda(l, 0, m) * w;
        }
    }
    for (i64 l = 1; l <= h0; ++l)
        for (i64 m = 1; m <= h0; ++m)
            for (i64 n = 1; n <= h0; ++n)
                sums[4] += abs_lambda(l, m, n) /
                           (static_cast<double>(l) * static_cast<double>(m) * static_cast<double>(n));
    return sums;
}

} // namespace sqf
