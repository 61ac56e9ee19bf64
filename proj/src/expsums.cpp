#include "expsums.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "emit.hpp"
#include "parallel.hpp"

namespace sqf {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string tuple_key(std::initializer_list<i64> parts) {
    std::string out;
    for (i64 p : parts) {
        if (!out.empty())
            out.push_back(',');
        out += jint(p);
    }
    return out;
}

} // namespace

cplx Phase::value() const {
    return std::polar(1.0, two_pi * static_cast<double>(numerator) / static_cast<double>(denominator));
}

std::vector<cplx> unit_roots(i64 q) {
    std::vector<cplx> roots(static_cast<size_t>(q));
    for (i64 j = 0; j < q; ++j)
        roots[static_cast<size_t>(j)] = std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(q));
    return roots;
}

cplx gauss_sum(i64 q, i64 m, i64 n) {
    if (q < 1)
        fail(errc::bad_modulus, "gauss_sum: modulus must be positive");
    m = mod_floor(m, q);
    n = mod_floor(n, q);
    auto roots = unit_roots(q);
    cplx sum = 0.0;
    for (i64 x = 0; x < q; ++x) {
        i64 idx = (m * (x * x % q) + n * x) % q;
        sum += roots[static_cast<size_t>(idx)];
    }
    return sum;
}

cplx salie_sum(i64 q, i64 m, i64 n) {
    if (q < 1 || q % 2 == 0)
        fail(errc::even_modulus, "salie_sum: modulus must be odd and positive");
    if (q == 1)
        return 1.0;
    m = mod_floor(m, q);
    n = mod_floor(n, q);
    auto roots = unit_roots(q);
    cplx sum = 0.0;
    for (i64 x = 1; x < q; ++x) {
        if (std::gcd(x, q) != 1)
            continue;
        i64 inv = mod_inverse(x, q);
        i64 idx = (m * x + n * inv) % q;
        cplx term = roots[static_cast<size_t>(idx)];
        sum += jacobi(x, q) > 0 ? term : -term;
    }
    return sum;
}

cplx kloosterman_sum(i64 q, i64 m, i64 n) {
    if (q < 1)
        fail(errc::bad_modulus, "kloosterman_sum: modulus must be positive");
    if (q == 1)
        return 1.0;
    m = mod_floor(m, q);
    n = mod_floor(n, q);
    auto roots = unit_roots(q);
    cplx sum = 0.0;
    for (i64 x = 1; x < q; ++x) {
        if (std::gcd(x, q) != 1)
            continue;
        i64 inv = mod_inverse(x, q);
        i64 idx = (m * x + n * inv) % q;
        sum += roots[static_cast<size_t>(idx)];
    }
    return sum;
}

cplx geometric_sum(double xi, i64 n1, i64 n2) {
    if (n1 >= n2)
        fail(errc::bad_range, "geometric_sum: need n1 < n2");
    cplx sum = 0.0;
    for (i64 k = n1 + 1; k <= n2; ++k)
        sum += std::polar(1.0, two_pi * xi * static_cast<double>(k));
    return sum;
}

GaussTable::GaussTable(i64 q) : q_(q), values_(static_cast<size_t>(q * q)) {
    auto roots = unit_roots(q);
    std::vector<i64> mw(static_cast<size_t>(q));
    for (i64 m = 0; m < q; ++m) {
        for (i64 x = 0; x < q; ++x)
            mw[static_cast<size_t>(x)] = m * (x * x % q) % q;
        for (i64 n = 0; n < q; ++n) {
            double re = 0.0, im = 0.0;
            i64 nx = 0;
            for (i64 x = 0; x < q; ++x) {
                i64 idx = mw[static_cast<size_t>(x)] + nx;
                if (idx >= q)
                    idx -= q;
                const cplx& r = roots[static_cast<size_t>(idx)];
                re += r.real();
                im += r.imag();
                nx += n;
                if (nx >= q)
                    nx -= q;
            }
            values_[static_cast<size_t>(m * q + n)] = cplx(re, im);
        }
    }
}

namespace {

constexpr double identity_tol = 1e-8;

void check_splitting(const GaussTable& big, const GaussTable& t1, const GaussTable& t2, Sweep& sweep) {
    i64 q1 = t1.modulus(), q2 = t2.modulus(), prod = big.modulus();
    // (a) G(q1 q2, m, n) = G(q1, m q2, n) G(q2, m q1, n)
    for (i64 m = 0; m < prod; ++m) {
        for (i64 n = 0; n < prod; ++n) {
            cplx lhs = big.at(m, n);
            cplx rhs = t1.at(m * q2, n) * t2.at(m * q1, n);
            double dev = std::abs(lhs - rhs);
            sweep.count(dev);
            if (dev > identity_tol)
                sweep.fail("a/" + tuple_key({q1, q2, m, n}),
                           "coprime splitting: |lhs-rhs|=" + jreal(dev), dev);
        }
    }
    // (b) G(q1 q2, m1 q2 + m2 q1, n) = G(q1, m1 q2^2, n) G(q2, m2 q1^2, n)
    for (i64 m1 = 0; m1 < q1; ++m1) {
        for (i64 m2 = 0; m2 < q2; ++m2) {
            for (i64 n = 0; n < prod; ++n) {
                cplx lhs = big.at(m1 * q2 + m2 * q1, n);
                cplx rhs = t1.at(m1 * q2 * q2, n) * t2.at(m2 * q1 * q1, n);
                double dev = std::abs(lhs - rhs);
                sweep.count(dev);
                if (dev > identity_tol)
                    sweep.fail("b/" + tuple_key({q1, q2, m1, m2, n}),
                               "two-parameter splitting: |lhs-rhs|=" + jreal(dev), dev);
            }
        }
    }
}

} // namespace

Sweep verify_gauss_identities(i64 q_max, int threads) {
    if (q_max < 2)
        fail(errc::usage, "verify_gauss_identities: q_max must be >= 2");

    std::vector<std::unique_ptr<GaussTable>> tables(static_cast<size_t>(q_max + 1));
    parallel_for(q_max, threads, [&](i64 i) {
        i64 q = i + 1;
        tables[static_cast<size_t>(q)] = std::make_unique<GaussTable>(q);
    });

    // (a), (b): coprime pairs q1 <= q2 with q1 q2 <= q_max
    std::vector<std::pair<i64, i64>> pairs;
    for (i64 q1 = 1; q1 * q1 <= q_max; ++q1)
        for (i64 q2 = q1; q1 * q2 <= q_max; ++q2)
            if (std::gcd(q1, q2) == 1)
                pairs.emplace_back(q1, q2);

    std::vector<Sweep> pair_sweeps(pairs.size());
    parallel_for(static_cast<i64>(pairs.size()), threads, [&](i64 i) {
        auto [q1, q2] = pairs[static_cast<size_t>(i)];
        check_splitting(*tables[static_cast<size_t>(q1 * q2)], *tables[static_cast<size_t>(q1)],
                        *tables[static_cast<size_t>(q2)], pair_sweeps[static_cast<size_t>(i)]);
    });

    std::vector<Sweep> mod_sweeps(static_cast<size_t>(q_max + 1));
    parallel_for(q_max, threads, [&](i64 i) {
        i64 q = i + 1;
        Sweep& sweep = mod_sweeps[static_cast<size_t>(q)];
        const GaussTable& tq = *tables[static_cast<size_t>(q)];

        // (c) gcd reduction
        for (i64 m = 0; m < q; ++m) {
            i64 d = (m == 0) ? q : std::gcd(q, m);
            const GaussTable& tr = *tables[static_cast<size_t>(q / d)];
            for (i64 n = 0; n < q; ++n) {
                cplx lhs = tq.at(m, n);
                cplx rhs = (n % d == 0) ? static_cast<double>(d) * tr.at(m / d, n / d) : cplx(0.0);
                double dev = std::abs(lhs - rhs);
                sweep.count(dev);
                if (dev > identity_tol)
                    sweep.fail("c/" + tuple_key({q, m, n}), "gcd reduction: |lhs-rhs|=" + jreal(dev), dev);
            }
        }

        if (q % 2 == 0)
            return;

        // (d) odd-modulus evaluation via Jacobi symbol
        auto roots = unit_roots(q);
        cplx gq1 = tq.at(1, 0);
        for (i64 m = 1; m < q; ++m) {
            if (std::gcd(m, q) != 1)
                continue;
            i64 inv4m = mod_inverse(4 * m, q);
            double jac = static_cast<double>(jacobi(m, q));
            for (i64 n = 0; n < q; ++n) {
                i64 idx = inv4m * (n * n % q) % q;
                cplx lhs = tq.at(m, n);
                cplx rhs = std::conj(roots[static_cast<size_t>(idx)]) * jac * gq1;
                double dev = std::abs(lhs - rhs);
                sweep.count(dev);
                if (dev > identity_tol)
                    sweep.fail("d/" + tuple_key({q, m, n}), "jacobi evaluation: |lhs-rhs|=" + jreal(dev), dev);
            }
        }

        // (e) square law
        cplx lhs = gq1 * gq1;
        cplx rhs(((q - 1) / 2) % 2 == 0 ? static_cast<double>(q) : -static_cast<double>(q), 0.0);
        double dev = std::abs(lhs - rhs);
        sweep.count(dev);
        if (dev > identity_tol)
            sweep.fail("e/" + tuple_key({q}), "square law: |lhs-rhs|=" + jreal(dev), dev);
    });

    Sweep total;
    for (const auto& s : pair_sweeps)
        total.merge(s);
    for (const auto& s : mod_sweeps)
        total.merge(s);
    total.sort();
    return total;
}

Sweep verify_salie_bound(i64 q_max, int threads) {
    std::vector<Sweep> sweeps(static_cast<size_t>(q_max + 1));
    std::vector<i64> gcd_free_violations(static_cast<size_t>(q_max + 1), 0);
    parallel_for((q_max + 1) / 2, threads, [&](i64 i) {
        i64 q = 2 * i + 1;
        Sweep& sweep = sweeps[static_cast<size_t>(q)];
        auto roots = unit_roots(q);

        std::vector<i64> xs, invs;
        std::vector<double> signs;
        for (i64 x = 1; x <= q; ++x) {
            if (std::gcd(x, q) != 1)
                continue;
            xs.push_back(x % q);
            invs.push_back(q == 1 ? 0 : mod_inverse(x, q));
            signs.push_back(jacobi(x, q) > 0 ? 1.0 : -1.0);
        }
        size_t units = xs.size();
        double base = std::pow(2.0, factorize(q).omega()) * std::sqrt(static_cast<double>(q));

        std::vector<i64> mx(units, 0), ninv(units);
        for (i64 n = 0; n < q; ++n) {
            for (size_t i2 = 0; i2 < units; ++i2) {
                ninv[i2] = n * invs[i2] % q;
                mx[i2] = 0;
            }
            i64 gn = std::gcd(q, n);
            for (i64 m = 0; m < q; ++m) {
                double re = 0.0, im = 0.0;
                for (size_t i2 = 0; i2 < units; ++i2) {
                    i64 idx = mx[i2] + ninv[i2];
                    if (idx >= q)
                        idx -= q;
                    const cplx& r = roots[static_cast<size_t>(idx)];
                    re += signs[i2] * r.real();
                    im += signs[i2] * r.imag();
                }
                double mag = std::hypot(re, im);
                double bound = base * std::sqrt(static_cast<double>(std::gcd(gn, m == 0 ? q : m)));
                sweep.count(mag / bound);
                if (mag > bound * (1.0 + 1e-9) + 1e-9)
                    sweep.fail(tuple_key({q, m, n}),
                               "salie bound exceeded: |S|=" + jreal(mag) + " bound=" + jreal(bound),
                               mag - bound);
                if (mag > base * (1.0 + 1e-9) + 1e-9)
                    ++gcd_free_violations[static_cast<size_t>(q)];
                for (size_t i2 = 0; i2 < units; ++i2) {
                    mx[i2] += xs[i2];
                    if (mx[i2] >= q)
                        mx[i2] -= q;
                }
            }
        }
    });
    Sweep total;
    i64 literal = 0;
    for (const auto& s : sweeps)
        total.merge(s);
    for (i64 v : gcd_free_violations)
        literal += v;
    total.note("gcd_free_form_violations", jint(literal));
    total.sort();
    return total;
}

Sweep verify_kloosterman_bound(i64 q_max, int threads) {
    std::vector<Sweep> sweeps(static_cast<size_t>(q_max + 1));
    parallel_for(q_max, threads, [&](i64 i) {
        i64 q = i + 1;
        Sweep& sweep = sweeps[static_cast<size_t>(q)];
        auto roots = unit_roots(q);

        std::vector<i64> xs, invs;
        for (i64 x = 1; x <= q; ++x) {
            if (std::gcd(x, q) != 1)
                continue;
            xs.push_back(x % q);
            invs.push_back(q == 1 ? 0 : mod_inverse(x, q));
        }
        size_t units = xs.size();
        double tau_sqrt_q = static_cast<double>(factorize(q).tau()) * std::sqrt(static_cast<double>(q));

        std::vector<i64> mx(units, 0), ninv(units);
        for (i64 n = 0; n < q; ++n) {
            for (size_t i2 = 0; i2 < units; ++i2) {
                ninv[i2] = n * invs[i2] % q;
                mx[i2] = 0;
            }
            i64 gn = std::gcd(q, n);
            for (i64 m = 0; m < q; ++m) {
                double re = 0.0, im = 0.0;
                for (size_t i2 = 0; i2 < units; ++i2) {
                    i64 idx = mx[i2] + ninv[i2];
                    if (idx >= q)
                        idx -= q;
                    const cplx& r = roots[static_cast<size_t>(idx)];
                    re += r.real();
                    im += r.imag();
                }
                double mag = std::hypot(re, im);
                double bound = tau_sqrt_q * std::sqrt(static_cast<double>(std::gcd(gn, m == 0 ? q : m)));
                sweep.count(mag / bound);
                if (mag > bound * (1.0 + 1e-9) + 1e-9)
                    sweep.fail(tuple_key({q, m, n}),
                               "kloosterman bound exceeded: |K|=" + jreal(mag) + " bound=" + jreal(bound),
                               mag - bound);
                for (size_t i2 = 0; i2 < units; ++i2) {
                    mx[i2] += xs[i2];
                    if (mx[i2] >= q)
                        mx[i2] -= q;
                }
            }
        }
    });
    Sweep total;
    for (const auto& s : sweeps)
        total.merge(s);
    total.sort();
    return total;
}

Sweep verify_geometric_bound(double min_dist, i64 grid_steps, const std::vector<i64>& lengths) {
    Sweep sweep;
    const i64 starts[] = {0, -7, 1000};
    for (i64 k = 1; k < grid_steps; ++k) {
        double xi = static_cast<double>(k) / static_cast<double>(grid_steps);
        double dist = dist_to_nearest_integer(xi);
        if (dist < min_dist)
            continue;
        for (i64 n1 : starts) {
            for (i64 len : lengths) {
                cplx sum = geometric_sum(xi, n1, n1 + len);
                double mag = std::abs(sum);
                double bound = std::min(static_cast<double>(len), 1.0 / dist);
                sweep.count(mag / bound);
                if (mag > bound + 1e-9)
                    sweep.fail(jreal(xi) + "," + jint(n1) + "," + jint(len),
                               "geometric bound exceeded: |sum|=" + jreal(mag) + " bound=" + jreal(bound),
                               mag - bound);
            }
        }
    }
    sweep.sort();
    return sweep;
}

} // namespace sqf
