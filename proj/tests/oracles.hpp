#pragma once

// Test-only reference computations. Nothing here calls into the series engine.

#include <cstdint>
#include <random>
#include <vector>

#include <cicy/series_ring.hpp>

namespace cicy::oracle {

/// Row-by-row Pascal triangle; table[n][k] = C(n, k).
inline std::vector<std::vector<big_int>> pascal_triangle(int rows)
{
    std::vector<std::vector<big_int>> t(rows + 1);
    for (int n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, big_int(1));
        for (int k = 1; k < n; ++k) {
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
    }
    return t;
}

/// c(E) / c(F) to order 2 for split E = sum O(b_i), F = sum O(a_j), via
/// elementary symmetric functions:
///   c1 = e1 - f1,  c2 = e2 - e1 f1 + f1^2 - f2.
/// Returns (c1^2 - c2) * prod a_j.
inline std::int64_t porteous_nodes(const std::vector<int>& b, const std::vector<int>& a)
{
    auto sym = [](const std::vector<int>& xs, std::int64_t& e1, std::int64_t& e2) {
        e1 = 0;
        e2 = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            e1 += xs[i];
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                e2 += std::int64_t(xs[i]) * xs[j];
            }
        }
    };
    std::int64_t e1, e2, f1, f2;
    sym(b, e1, e2);
    sym(a, f1, f2);
    const std::int64_t c1 = e1 - f1;
    const std::int64_t c2 = e2 - e1 * f1 + f1 * f1 - f2;
    std::int64_t deg = 1;
    for (int x : a) {
        deg *= x;
    }
    return (c1 * c1 - c2) * deg;
}

/// Random series with small rational coefficients. unit forces c0 != 0.
inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<rational> c(order + 1);
    for (auto& x : c) {
        x = rational(num(rng), den(rng));
    }
    if (unit && c[0] == 0) {
        c[0] = rational(1, den(rng));
    }
    return TruncatedSeries(order, std::move(c));
}

} // namespace cicy::oracle
