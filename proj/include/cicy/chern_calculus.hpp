#pragma once

/**
 * @file chern_calculus.hpp
 * @brief Total Chern classes of formal bundles on projective space and the
 *        counts built from them.
 *
 * Chern class rules on P^ell, in the truncated ring of series_ring.hpp:
 *
 *   c(O(k))              = 1 + k h
 *   c(Omega^1_{P^ell})   = (1 - h)^{ell+1}      (Euler sequence)
 *   c(O_D), D hyperplane = (1 - h)^{-1}         (0 -> O(-1) -> O -> O_D -> 0)
 *
 * A bundle_expr is a signed multiset of these atoms; its total Chern class is
 * the product of the atoms' classes raised to their signed multiplicities
 * (Whitney formula, virtual differences dividing).
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <cicy/errors.hpp>
#include <cicy/series_ring.hpp>

namespace cicy {

enum class bundle_atom_kind {
    line_twist,                 // O(k)
    cotangent,                  // Omega^1 of the ambient projective space
    hyperplane_structure_sheaf, // O_D for a hyperplane D
};

struct bundle_atom {
    bundle_atom_kind kind = bundle_atom_kind::line_twist;
    std::int64_t twist = 0; // only meaningful for line_twist

    static constexpr bundle_atom line(std::int64_t k) { return {bundle_atom_kind::line_twist, k}; }
    static constexpr bundle_atom cotangent() { return {bundle_atom_kind::cotangent, 0}; }
    static constexpr bundle_atom hyperplane_sheaf() { return {bundle_atom_kind::hyperplane_structure_sheaf, 0}; }

    friend constexpr bool operator==(const bundle_atom&, const bundle_atom&) = default;
};

/// Formal virtual bundle: atoms with signed multiplicities. Independent of
/// the ambient dimension, which is only supplied at evaluation time.
class bundle_expr {
public:
    struct term {
        bundle_atom atom;
        std::int64_t multiplicity;
    };

    bundle_expr() = default;

    static bundle_expr of(bundle_atom atom, std::int64_t multiplicity = 1)
    {
        bundle_expr e;
        e.add(atom, multiplicity);
        return e;
    }

    static bundle_expr line(std::int64_t k, std::int64_t multiplicity = 1) { return of(bundle_atom::line(k), multiplicity); }
    static bundle_expr cotangent() { return of(bundle_atom::cotangent()); }
    static bundle_expr hyperplane_sheaf(std::int64_t multiplicity = 1)
    {
        return of(bundle_atom::hyperplane_sheaf(), multiplicity);
    }

    /// Direct sum of line bundles O(d_1) + ... + O(d_k).
    static bundle_expr sum_of_lines(std::span<const int> degrees)
    {
        bundle_expr e;
        for (int d : degrees) {
            e.add(bundle_atom::line(d), 1);
        }
        return e;
    }

    bundle_expr& add(bundle_atom atom, std::int64_t multiplicity)
    {
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const term& t) { return t.atom == atom; });
        if (it == terms_.end()) {
            if (multiplicity != 0) {
                terms_.push_back({atom, multiplicity});
            }
            return *this;
        }
        it->multiplicity += multiplicity;
        if (it->multiplicity == 0) {
            terms_.erase(it);
        }
        return *this;
    }

    std::span<const term> terms() const noexcept { return terms_; }

    /// True when every multiplicity is positive and every atom is a line
    /// twist, i.e. the total Chern class is an honest polynomial.
    bool is_effective_split() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const term& t) {
            return t.multiplicity > 0 && t.atom.kind == bundle_atom_kind::line_twist;
        });
    }

    friend bundle_expr operator+(bundle_expr a, const bundle_expr& b)
    {
        for (const auto& t : b.terms_) {
            a.add(t.atom, t.multiplicity);
        }
        return a;
    }

    friend bundle_expr operator-(bundle_expr a, const bundle_expr& b)
    {
        for (const auto& t : b.terms_) {
            a.add(t.atom, -t.multiplicity);
        }
        return a;
    }

    friend bundle_expr operator*(std::int64_t k, bundle_expr a)
    {
        for (auto& t : a.terms_) {
            t.multiplicity *= k;
        }
        if (k == 0) {
            a.terms_.clear();
        }
        return a;
    }

private:
    std::vector<term> terms_;
};

/// Total Chern class on P^ell, as a series of order ell.
inline TruncatedSeries total_chern(const bundle_expr& expr, std::size_t ell)
{
    auto c = TruncatedSeries::one(ell);
    const auto dim_plus_one = static_cast<std::int64_t>(ell) + 1;
    for (const auto& t : expr.terms()) {
        switch (t.atom.kind) {
        case bundle_atom_kind::line_twist:
            c *= binomial_series(t.atom.twist, t.multiplicity, ell);
            break;
        case bundle_atom_kind::cotangent:
            c *= binomial_series(-1, dim_plus_one * t.multiplicity, ell);
            break;
        case bundle_atom_kind::hyperplane_structure_sheaf:
            c *= binomial_series(-1, -t.multiplicity, ell);
            break;
        }
    }
    return c;
}

namespace detail {

inline big_int require_integer(const rational& q, const char* what)
{
    if (boost::multiprecision::denominator(q) != 1) {
        throw std::logic_error(std::string(what) + ": non-integral value " + q.str());
    }
    return boost::multiprecision::numerator(q);
}

} // namespace detail

/// n nodes on S, ell = dim |L|. Construction enforces n >= ell + 2.
class excess_problem {
public:
    excess_problem(std::int64_t n, std::int64_t ell) : n_(n), ell_(ell)
    {
        if (ell < 0 || n < 1) {
            throw hypothesis_violation("excess_problem: need n >= 1 and ell >= 0, got n=" + std::to_string(n)
                                       + ", ell=" + std::to_string(ell));
        }
        if (n < ell + 2) {
            throw hypothesis_violation("excess_problem: need n >= ell + 2, got n=" + std::to_string(n)
                                       + ", ell=" + std::to_string(ell));
        }
    }

    std::int64_t n() const noexcept { return n_; }
    std::int64_t ell() const noexcept { return ell_; }

    /// Q as a virtual bundle, from 0 -> Omega^1 -> Q -> sum_i O_{D^i} -> 0.
    bundle_expr excess_bundle() const { return bundle_expr::cotangent() + bundle_expr::hyperplane_sheaf(n_); }

private:
    std::int64_t n_;
    std::int64_t ell_;
};

/// Degree of c_top(Q) on Lambda = P^ell, read off the total Chern class
/// (1 - h)^{ell + 1 - n}.
inline big_int excess_count(const excess_problem& p)
{
    const auto ell = static_cast<std::size_t>(p.ell());
    const auto c = total_chern(p.excess_bundle(), ell);
    return detail::require_integer(c[ell], "excess_count");
}

/// C(n - 2, ell) by the multiplicative formula; no series arithmetic.
inline big_int rigid_count(std::int64_t n, std::int64_t ell)
{
    if (ell < 0 || n < ell + 2) {
        throw hypothesis_violation("rigid_count: need n >= ell + 2 and ell >= 0, got n=" + std::to_string(n)
                                   + ", ell=" + std::to_string(ell));
    }
    const std::int64_t top = n - 2;
    const std::int64_t k = std::min(ell, top - ell);
    big_int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= top - k + i;
        r /= i; // exact: r is C(top - k + i, i) here
    }
    return r;
}

/// Thom-Porteous data for the rank-drop locus of the coefficient matrix
/// between sum O(a_j) and sum O(b_i), restricted to S.
struct porteous_class {
    TruncatedSeries chern;  ///< c(sum O(b_i) - sum O(a_j)) truncated at h^2.
    rational c1;
    rational c2;
    big_int surface_degree; ///< deg S = prod a_j.
    big_int count;          ///< (c1^2 - c2) * deg S.
};

inline porteous_class degeneracy_class(std::vector<int> b, std::vector<int> a)
{
    if (b.empty() || a.size() != b.size() + 1) {
        throw invalid_embedding("degeneracy_count: need len(a) == len(b) + 1, got len(b)="
                                + std::to_string(b.size()) + ", len(a)=" + std::to_string(a.size()));
    }
    auto below_one = [](int x) { return x < 1; };
    if (std::any_of(b.begin(), b.end(), below_one) || std::any_of(a.begin(), a.end(), below_one)) {
        throw invalid_embedding("degeneracy_count: all degrees must be >= 1");
    }
    std::sort(b.begin(), b.end(), std::greater<>{});
    std::sort(a.begin(), a.end(), std::greater<>{});
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < a[i]) {
            throw invalid_embedding("degeneracy_count: b_" + std::to_string(i + 1) + " = " + std::to_string(b[i])
                                    + " < a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]));
        }
    }

    const auto expr = bundle_expr::sum_of_lines(b) - bundle_expr::sum_of_lines(a);
    porteous_class out{total_chern(expr, 2), {}, {}, 1, {}};
    out.c1 = out.chern[1];
    out.c2 = out.chern[2];
    for (int x : a) {
        out.surface_degree *= x;
    }
    out.count = detail::require_integer((out.c1 * out.c1 - out.c2) * rational(out.surface_degree),
                                        "degeneracy_count");
    return out;
}

inline big_int degeneracy_count(std::vector<int> b, std::vector<int> a)
{
    return degeneracy_class(std::move(b), std::move(a)).count;
}

} // namespace cicy
