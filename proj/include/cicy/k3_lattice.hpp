#pragma once

/**
 * @file k3_lattice.hpp
 * @brief Rank-2 Picard lattice Z H + Z C of a complete intersection K3.
 *
 * Gram matrix [[2m, d], [d, 2g - 2]]: H is the polarization (H^2 = 2m),
 * C a smooth curve of degree d = H.C and genus g (C^2 = 2g - 2).
 * All inequalities are evaluated over the integers.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include <cicy/errors.hpp>

namespace cicy {

/// alpha H + beta C.
struct divisor_class {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    static constexpr divisor_class zero() { return {0, 0}; }
    static constexpr divisor_class hyperplane() { return {1, 0}; }
    static constexpr divisor_class curve() { return {0, 1}; }

    friend constexpr divisor_class operator+(divisor_class a, divisor_class b) { return {a.alpha + b.alpha, a.beta + b.beta}; }
    friend constexpr divisor_class operator-(divisor_class a, divisor_class b) { return {a.alpha - b.alpha, a.beta - b.beta}; }
    friend constexpr divisor_class operator*(std::int64_t k, divisor_class a) { return {k * a.alpha, k * a.beta}; }
    friend constexpr bool operator==(divisor_class, divisor_class) = default;
};

class picard_lattice {
public:
    picard_lattice(std::int64_t m, std::int64_t d, std::int64_t g) : m_(m), d_(d), g_(g)
    {
        if (m < 2) {
            throw std::invalid_argument("picard_lattice: need H^2 = 2m >= 4, got m=" + std::to_string(m));
        }
        if (d < 1) {
            throw std::invalid_argument("picard_lattice: degree must be positive, got d=" + std::to_string(d));
        }
        if (g < 0) {
            throw std::invalid_argument("picard_lattice: genus must be nonnegative, got g=" + std::to_string(g));
        }
    }

    std::int64_t m() const noexcept { return m_; }
    std::int64_t d() const noexcept { return d_; }
    std::int64_t g() const noexcept { return g_; }

    std::int64_t h_squared() const noexcept { return 2 * m_; }
    std::int64_t c_squared() const noexcept { return 2 * g_ - 2; }

    std::int64_t pair(divisor_class x, divisor_class y) const noexcept
    {
        return x.alpha * y.alpha * h_squared() + (x.alpha * y.beta + x.beta * y.alpha) * d_
               + x.beta * y.beta * c_squared();
    }

    /// Riemann-Roch on a K3: chi(O(D)) = D^2 / 2 + 2.
    std::int64_t euler_char(divisor_class x) const
    {
        const auto self = pair(x, x);
        if (self % 2 != 0) {
            throw lattice_corruption("euler_char: odd self-intersection " + std::to_string(self));
        }
        return self / 2 + 2;
    }

private:
    std::int64_t m_;
    std::int64_t d_;
    std::int64_t g_;
};

inline std::int64_t pair(const picard_lattice& lattice, divisor_class x, divisor_class y) { return lattice.pair(x, y); }
inline std::int64_t euler_char(const picard_lattice& lattice, divisor_class x) { return lattice.euler_char(x); }

// ---------------------------------------------------------------------------
// Existence of (S, C) with Pic S = Z C + Z H on a complete intersection K3 of
// degree 2m in P^{m+1}.

enum class knutsen_clause {
    inequality,        ///< g < d^2 / 4m and (d, g) != (2m+1, m+1)
    exceptional,       ///< (m, d, g) = (3, 3, 1) or (4, 4, 1)
    bound_failed,      ///< g >= d^2 / 4m
    forbidden_pair,    ///< (d, g) = (2m+1, m+1)
};

struct knutsen_verdict {
    bool exists = false;
    knutsen_clause clause = knutsen_clause::bound_failed;
    /// The criterion is only established for d >= 2g - 2; below that the
    /// same inequality is applied but flagged.
    bool extrapolated = false;
};

inline const char* to_string(knutsen_clause c)
{
    switch (c) {
    case knutsen_clause::inequality: return "inequality";
    case knutsen_clause::exceptional: return "exceptional pair";
    case knutsen_clause::bound_failed: return "bound g < d^2/4m fails";
    case knutsen_clause::forbidden_pair: return "forbidden pair (2m+1, m+1)";
    }
    return "?";
}

inline knutsen_verdict knutsen_exists(std::int64_t m, std::int64_t d, std::int64_t g)
{
    if (m < 2 || m > 4) {
        throw unsupported_polarization("knutsen_exists: m must be 2, 3 or 4, got " + std::to_string(m));
    }
    if (d < 1 || g < 0) {
        throw std::invalid_argument("knutsen_exists: need d >= 1 and g >= 0, got d=" + std::to_string(d)
                                    + ", g=" + std::to_string(g));
    }
    knutsen_verdict v;
    v.extrapolated = d < 2 * g - 2;
    if ((m == 3 && d == 3 && g == 1) || (m == 4 && d == 4 && g == 1)) {
        v.exists = true;
        v.clause = knutsen_clause::exceptional;
    } else if (d == 2 * m + 1 && g == m + 1) {
        v.clause = knutsen_clause::forbidden_pair;
    } else if (4 * m * g < d * d) {
        v.exists = true;
        v.clause = knutsen_clause::inequality;
    } else {
        v.clause = knutsen_clause::bound_failed;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Non-speciality of O_C(H).

enum class lemma2_status {
    nonspecial,   ///< g > m + 2 and d > max{2g - 4, m + g}
    inconclusive, ///< g > m + 2 but the degree bound fails
    not_applicable,
};

struct lemma2_result {
    lemma2_status status = lemma2_status::not_applicable;
    std::int64_t degree_bound = 0; ///< max{2g - 4, m + g}
};

inline const char* to_string(lemma2_status s)
{
    switch (s) {
    case lemma2_status::nonspecial: return "nonspecial";
    case lemma2_status::inconclusive: return "inconclusive";
    case lemma2_status::not_applicable: return "hypotheses-not-met";
    }
    return "?";
}

inline lemma2_result lemma2_nonspecial(std::int64_t m, std::int64_t d, std::int64_t g)
{
    lemma2_result r;
    r.degree_bound = std::max(2 * g - 4, m + g);
    if (g <= m + 2) {
        r.status = lemma2_status::not_applicable;
    } else if (d > r.degree_bound) {
        r.status = lemma2_status::nonspecial;
    } else {
        r.status = lemma2_status::inconclusive;
    }
    return r;
}

enum class nonspeciality { riemann_roch, lemma2, fail };

inline const char* to_string(nonspeciality r)
{
    switch (r) {
    case nonspeciality::riemann_roch: return "RiemannRoch";
    case nonspeciality::lemma2: return "Lemma2";
    case nonspeciality::fail: return "Fail";
    }
    return "?";
}

struct route_trace {
    nonspeciality route = nonspeciality::fail;
    bool riemann_roch = false;           ///< d >= 2g - 1
    std::optional<lemma2_result> lemma2; ///< evaluated only when riemann_roch is false
};

/// Decision tree: d >= 2g - 1 gives non-speciality by Riemann-Roch; otherwise
/// (d = 2g - 3 or 2g - 2) Lemma 2 must apply.
inline route_trace nonspeciality_route(std::int64_t m, std::int64_t d, std::int64_t g)
{
    if (g < 0 || d < 2 * g - 3) {
        throw out_of_theorem_range("nonspeciality_route: need g >= 0 and d >= 2g - 3, got d=" + std::to_string(d)
                                   + ", g=" + std::to_string(g));
    }
    route_trace t;
    t.riemann_roch = d >= 2 * g - 1;
    if (t.riemann_roch) {
        t.route = nonspeciality::riemann_roch;
        return t;
    }
    t.lemma2 = lemma2_nonspecial(m, d, g);
    t.route = t.lemma2->status == lemma2_status::nonspecial ? nonspeciality::lemma2 : nonspeciality::fail;
    return t;
}

} // namespace cicy
