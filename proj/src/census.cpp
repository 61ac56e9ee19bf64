#include "census.hpp"

#include <cmath>
#include <new>
#include <numeric>

#include "parallel.hpp"

#include "expsums.hpp"

namespace sqf {

SquarefreeTable::SquarefreeTable(i64 limit) : limit_(limit) {
    if (limit < 1)
        fail(errc::usage, "square-free table limit must be >= 1");
    try {
        bits_.assign(static_cast<size_t>(limit / 64 + 1), ~u64{0});
    } catch (const std::bad_alloc&) {
        fail(errc::budget_exceeded, "square-free table allocation failed");
    }
    bits_[0] &= ~u64{1}; // n = 0 unused
    for (i64 p : primes_up_to(static_cast<i64>(std::sqrt(static_cast<double>(limit))) + 1)) {
        i64 p2 = p * p;
        if (p2 > limit)
            break;
        for (i64 k = p2; k <= limit; k += p2)
            bits_[static_cast<size_t>(k >> 6)] &= ~(u64{1} << (k & 63));
    }
}

i64 SquarefreeTable::count_squarefree() const {
    i64 total = 0;
    for (u64 w : bits_)
        total += __builtin_popcountll(w);
    return total;
}

SquarefreeTable build_squarefree_table(i64 limit) { return SquarefreeTable(limit); }

bool is_squarefree_slow(i64 n) {
    if (n < 1)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0)
            return false;
    return true;
}

i64 gamma_count(Family f, i64 h, i64 budget, const SquarefreeTable* table, int threads) {
    if (h < 1)
        fail(errc::usage, "census requires h >= 1");
    double work = 2.0 * static_cast<double>(h) * static_cast<double>(h) * static_cast<double>(h);
    if (work > static_cast<double>(budget))
        fail(errc::budget_exceeded, "census exceeds budget at h=" + std::to_string(h));

    i64 needed = poly_max_value(f, h);
    SquarefreeTable local;
    if (table == nullptr || table->limit() < needed) {
        local = SquarefreeTable(needed);
        table = &local;
    }

    i64 max_s = 2 * h * h;
    std::vector<int32_t> pair_hist;
    try {
        pair_hist.assign(static_cast<size_t>(max_s) + 1, 0);
    } catch (const std::bad_alloc&) {
        fail(errc::budget_exceeded, "census histogram allocation failed");
    }
    for (i64 x = 1; x <= h; ++x)
        for (i64 y = 1; y <= h; ++y)
            ++pair_hist[static_cast<size_t>(x * x + y * y)];

    // z slices are independent; integer partials sum to the same total under
    // any partitioning
    std::vector<i64> partial(static_cast<size_t>(h) + 1, 0);
    parallel_for(h, threads, [&](i64 i) {
        i64 z = i + 1;
        i64 off = poly_z(f, z) + 1;
        i64 slice = 0;
        for (i64 s = 2; s <= max_s; ++s) {
            int32_t r = pair_hist[static_cast<size_t>(s)];
            if (r != 0 && table->squarefree(s + off) && table->squarefree(s + off + 1))
                slice += r;
        }
        partial[static_cast<size_t>(z)] = slice;
    });
    i64 count = 0;
    for (i64 z = 1; z <= h; ++z)
        count += partial[static_cast<size_t>(z)];
    return count;
}

i64 gamma_count_naive(Family f, i64 h) {
    i64 count = 0;
    for (i64 x = 1; x <= h; ++x)
        for (i64 y = 1; y <= h; ++y)
            for (i64 z = 1; z <= h; ++z) {
                i64 v = x * x + y * y + poly_z(f, z) + 1;
                if (is_squarefree_slow(v) && is_squarefree_slow(v + 1))
                    ++count;
            }
    return count;
}

GammaCensus gamma_census(Family f, i64 h, double sigma_ref, i64 budget, const SquarefreeTable* table,
                         int threads) {
    GammaCensus c;
    c.family = f;
    c.h = h;
    c.count = gamma_count(f, h, budget, table, threads);
    c.sigma_ref = sigma_ref;
    c.main_term = sigma_ref * static_cast<double>(h) * static_cast<double>(h) * static_cast<double>(h);
    c.residual = static_cast<double>(c.count) - c.main_term;
    return c;
}

i64 restricted_count(Family f, i64 h, i64 q1, i64 q2, i64 budget) {
    if (h < 1)
        fail(errc::usage, "restricted count requires h >= 1");
    if (q1 < 1 || q2 < 1)
        fail(errc::bad_modulus, "moduli must be positive");
    if (std::gcd(q1, q2) != 1)
        fail(errc::not_coprime, "restricted count requires coprime moduli");

    double dprod = static_cast<double>(q1) * static_cast<double>(q2);
    double span = std::min(static_cast<double>(h), dprod);
    if (dprod > 50'000'000 || dprod + span * span > static_cast<double>(budget))
        fail(errc::budget_exceeded, "restricted count exceeds budget");
    i64 prod = q1 * q2;

    // histogram of x^2 + y^2 mod q1 q2, weighted by box sizes when the
    // modulus is finer than the range
    std::vector<i64> hist(static_cast<size_t>(prod), 0);
    if (h <= prod) {
        for (i64 x = 1; x <= h; ++x)
            for (i64 y = 1; y <= h; ++y)
                ++hist[static_cast<size_t>((x * x + y * y) % prod)];
    } else {
        std::vector<i64> box(static_cast<size_t>(prod));
        for (i64 r = 0; r < prod; ++r)
            box[static_cast<size_t>(r)] = residue_box_count(h, prod, r);
        for (i64 a = 0; a < prod; ++a) {
            i64 wa = box[static_cast<size_t>(a)];
            if (wa == 0)
                continue;
            i64 aa = a * a % prod;
            for (i64 b = 0; b < prod; ++b) {
                i64 wb = box[static_cast<size_t>(b)];
                if (wb == 0)
                    continue;
                hist[static_cast<size_t>((aa + b * b) % prod)] += wa * wb;
            }
        }
    }

    i64 inv_q1 = q2 == 1 ? 0 : mod_inverse(q1, q2);
    auto crt_target = [&](i64 z) {
        i64 gz = poly_z(f, z);
        i64 r1 = mod_floor(-(gz + 1), q1);
        i64 r2 = mod_floor(-(gz + 2), q2);
        i64 k = mul_mod(mod_floor(r2 - r1, q2), inv_q1, q2);
        return r1 + q1 * k; // unique residue mod q1 q2 matching both
    };

    i64 count = 0;
    if (h <= prod) {
        for (i64 z = 1; z <= h; ++z)
            count += hist[static_cast<size_t>(crt_target(z))];
    } else {
        for (i64 c = 0; c < prod; ++c) {
            i64 w = residue_box_count(h, prod, c);
            if (w != 0)
                count += w * hist[static_cast<size_t>(crt_target(c))];
        }
    }
    return count;
}

i64 sigma_count(Family f, i64 h, i64 d1, i64 d2, i64 budget) {
    if (d1 < 1 || d2 < 1)
        fail(errc::bad_modulus, "moduli must be positive");
    if (d1 > 3'000'000 || d2 > 3'000'000)
        fail(errc::budget_exceeded, "moduli too large");
    return restricted_count(f, h, d1 * d1, d2 * d2, budget);
}

DecompositionCheck sigma_decomposition_check(Family f, i64 h, i64 q1, i64 q2, i64 budget) {
    if (h < 1)
        fail(errc::usage, "decomposition check requires h >= 1");
    if (std::gcd(q1, q2) != 1)
        fail(errc::not_coprime, "decomposition check requires coprime moduli");

    i64 prod = q1 * q2;
    auto table = lambda_full_table(f, q1, q2, budget);
    auto lam = [&](i64 l, i64 m, i64 n) {
        return table[static_cast<size_t>((mod_floor(l, prod) * prod + mod_floor(m, prod)) * prod +
                                         mod_floor(n, prod))];
    };

    // finite geometric sums over h terms at rational frequencies t / (q1 q2)
    std::vector<cplx> geo(static_cast<size_t>(prod), 0.0);
    for (i64 t = 1; t < prod; ++t)
        geo[static_cast<size_t>(t)] =
            geometric_sum(static_cast<double>(t) / static_cast<double>(prod), 0, h);

    cplx s1 = 0.0, s1z = 0.0, s2 = 0.0, s2xy = 0.0, s3 = 0.0;
    for (i64 t = 1; t < prod; ++t) {
        s1 += lam(-t, 0, 0) * geo[static_cast<size_t>(t)];
        s1z += lam(0, 0, -t) * geo[static_cast<size_t>(t)];
    }
    for (i64 t1 = 1; t1 < prod; ++t1) {
        for (i64 t2 = 1; t2 < prod; ++t2) {
            cplx w = geo[static_cast<size_t>(t1)] * geo[static_cast<size_t>(t2)];
            s2 += lam(-t1, 0, -t2) * w;
            s2xy += lam(-t1, -t2, 0) * w;
        }
    }
    for (i64 t1 = 1; t1 < prod; ++t1)
        for (i64 t2 = 1; t2 < prod; ++t2) {
            cplx w12 = geo[static_cast<size_t>(t1)] * geo[static_cast<size_t>(t2)];
            for (i64 t3 = 1; t3 < prod; ++t3)
                s3 += lam(-t1, -t2, -t3) * w12 * geo[static_cast<size_t>(t3)];
        }

    DecompositionCheck check;
    check.count = restricted_count(f, h, q1, q2, budget);
    double h_d = static_cast<double>(h);
    double prod3 = static_cast<double>(prod) * prod * prod;
    check.lhs = prod3 * static_cast<double>(check.count);
    check.lambda_untwisted = lam(0, 0, 0).real();
    check.s1 = s1;
    check.s1z = s1z;
    check.s2 = s2;
    check.s2xy = s2xy;
    check.s3 = s3;
    check.rhs = h_d * h_d * h_d * check.lambda_untwisted + 2.0 * h_d * h_d * s1 + h_d * h_d * s1z +
                2.0 * h_d * s2 + h_d * s2xy + s3;
    check.relative_deviation = std::abs(check.rhs - check.lhs) / std::max(1.0, std::abs(check.lhs));
    return check;
}

MobiusCheck mobius_identity_check(Family f, i64 h, i64 budget) {
    MobiusCheck check;
    check.census = gamma_count(f, h, budget);
    check.xi = f == Family::A ? std::pow(static_cast<double>(h), 0.75)
                              : std::sqrt(static_cast<double>(h));

    i64 max_value = poly_max_value(f, h);
    i64 d_max = static_cast<i64>(std::sqrt(static_cast<double>(max_value))) + 1;
    while (d_max * d_max > max_value)
        --d_max;

    for (i64 d1 = 1; d1 <= d_max; ++d1) {
        i64 mu1 = factorize(d1).mobius();
        if (mu1 == 0)
            continue;
        for (i64 d2 = 1; d2 <= d_max; ++d2) {
            i64 mu2 = factorize(d2).mobius();
            if (mu2 == 0 || std::gcd(d1, d2) != 1)
                continue;
            i64 term = sigma_count(f, h, d1, d2, budget);
            ++check.pairs;
            check.expansion += mu1 * mu2 * term;
            if (static_cast<double>(d1) * static_cast<double>(d2) > check.xi) {
                ++check.tail_pairs;
                check.tail_mass += term;
            }
        }
    }
    check.exact = check.census == check.expansion;
    return check;
}

double fit_log_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3)
        fail(errc::degenerate_fit, "fit needs at least 3 usable points");
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0)
        fail(errc::degenerate_fit, "fit abscissas are all equal");
    return sxy / sxx;
}

FitReport residual_exponent_fit(Family f, std::span<const i64> h_list, double sigma_ref, i64 budget,
                                int threads) {
    if (h_list.size() < 4)
        fail(errc::usage, "fit requires at least 4 census points");
    for (size_t i = 1; i < h_list.size(); ++i)
        if (h_list[i] <= h_list[i - 1])
            fail(errc::usage, "fit requires a strictly ascending h list");

    FitReport report;
    report.family = f;
    report.theorem_exponent = f == Family::A ? 2.25 : 2.5;

    SquarefreeTable table(poly_max_value(f, h_list.back()));
    std::vector<std::pair<double, double>> usable;
    for (i64 h : h_list) {
        GammaCensus c = gamma_census(f, h, sigma_ref, budget, &table, threads);
        FitPoint pt{h, c.count, c.main_term, c.residual, std::abs(c.residual) >= 1.0};
        if (pt.usable)
            usable.emplace_back(std::log(static_cast<double>(h)), std::log(std::abs(c.residual)));
        report.points.push_back(pt);
    }
    report.usable_points = static_cast<int>(usable.size());
    report.slope = fit_log_slope(usable); // throws degenerate_fit below 3 points
    return report;
}

} // namespace sqf
