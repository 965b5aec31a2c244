#pragma once

/**
 * @file series_ring.hpp
 * @brief Exact arithmetic in Q[h]/(h^{N+1}).
 *
 * This is the Chow ring of N-dimensional projective space, with h the
 * hyperplane class. A value carries its truncation order N and never
 * changes it; combining values of different orders throws
 * order_mismatch_error.
 *
 * Coefficients are stored densely, index k holding the coefficient of h^k.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <cicy/errors.hpp>

namespace cicy {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

template <typename Coeff>
class truncated_series {
public:
    using coeff_type = Coeff;

    /// The zero series of the given order.
    explicit truncated_series(std::size_t order) : coeffs_(order + 1, Coeff{0}) {}

    /// Missing high coefficients are zero. Supplying more than order + 1
    /// coefficients is an error rather than a silent truncation.
    truncated_series(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() > order + 1) {
            throw std::invalid_argument("truncated_series: " + std::to_string(coeffs_.size())
                                        + " coefficients exceed order " + std::to_string(order));
        }
        coeffs_.resize(order + 1, Coeff{0});
    }

    truncated_series(std::size_t order, std::initializer_list<Coeff> coeffs)
        : truncated_series(order, std::vector<Coeff>(coeffs))
    {
    }

    static truncated_series one(std::size_t order)
    {
        truncated_series s(order);
        s.coeffs_[0] = Coeff{1};
        return s;
    }

    /// The hyperplane class h (zero when order == 0).
    static truncated_series hyperplane(std::size_t order)
    {
        truncated_series s(order);
        if (order >= 1) {
            s.coeffs_[1] = Coeff{1};
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Coeff& operator[](std::size_t k) const { return coeffs_.at(k); }

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    bool is_unit() const { return coeffs_[0] != Coeff{0}; }

    bool is_one() const { return *this == one(order()); }

    friend bool operator==(const truncated_series& a, const truncated_series& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    friend truncated_series operator+(const truncated_series& a, const truncated_series& b)
    {
        check_orders(a, b, "add");
        truncated_series r(a);
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
            r.coeffs_[k] += b.coeffs_[k];
        }
        return r;
    }

    friend truncated_series operator-(const truncated_series& a, const truncated_series& b)
    {
        check_orders(a, b, "subtract");
        truncated_series r(a);
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
            r.coeffs_[k] -= b.coeffs_[k];
        }
        return r;
    }

    friend truncated_series operator*(const Coeff& c, const truncated_series& a)
    {
        truncated_series r(a);
        for (auto& x : r.coeffs_) {
            x *= c;
        }
        return r;
    }

    // Cauchy product, terms above h^N dropped.
    friend truncated_series operator*(const truncated_series& a, const truncated_series& b)
    {
        check_orders(a, b, "multiply");
        const std::size_t n = a.order();
        truncated_series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == Coeff{0}) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    truncated_series& operator*=(const truncated_series& b) { return *this = *this * b; }

    std::string to_string() const
    {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const truncated_series& a)
    {
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
            if (k > 0) {
                os << " + ";
            }
            os << "(" << a.coeffs_[k] << ")";
            if (k == 1) {
                os << "h";
            } else if (k > 1) {
                os << "h^" << k;
            }
        }
        return os << " [order " << a.order() << "]";
    }

private:
    static void check_orders(const truncated_series& a, const truncated_series& b, const char* op)
    {
        if (a.order() != b.order()) {
            throw order_mismatch_error(std::string("truncated_series: cannot ") + op + " series of order "
                                       + std::to_string(a.order()) + " and "
                                       + std::to_string(b.order()));
        }
    }

    std::vector<Coeff> coeffs_;
};

using TruncatedSeries = truncated_series<rational>;

template <typename Coeff>
truncated_series<Coeff> mul(const truncated_series<Coeff>& a, const truncated_series<Coeff>& b)
{
    return a * b;
}

// b_0 = 1/a_0, b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}.
template <typename Coeff>
truncated_series<Coeff> invert(const truncated_series<Coeff>& a)
{
    if (!a.is_unit()) {
        throw non_unit_error("invert: constant term is zero");
    }
    const std::size_t n = a.order();
    const Coeff inv0 = Coeff{1} / a[0];
    std::vector<Coeff> b(n + 1, Coeff{0});
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Coeff acc{0};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += a[j] * b[k - j];
        }
        b[k] = -acc * inv0;
    }
    return truncated_series<Coeff>(n, std::move(b));
}

/// Square-and-multiply; a negative exponent inverts first.
template <typename Coeff>
truncated_series<Coeff> int_pow(const truncated_series<Coeff>& a, std::int64_t e)
{
    if (e < 0 && !a.is_unit()) {
        throw non_unit_error("int_pow: negative power of a non-unit");
    }
    truncated_series<Coeff> base = e < 0 ? invert(a) : a;
    // Unsigned magnitude so that INT64_MIN is handled.
    std::uint64_t k = e < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
    auto result = truncated_series<Coeff>::one(a.order());
    while (k != 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k != 0) {
            base = base * base;
        }
    }
    return result;
}

/// (1 + c h)^e with generalized binomial coefficients: [h^k] = binom(e, k) c^k.
inline TruncatedSeries binomial_series(std::int64_t c, std::int64_t e, std::size_t order)
{
    std::vector<rational> coeffs(order + 1, rational{0});
    rational term{1};
    coeffs[0] = term;
    for (std::size_t k = 1; k <= order; ++k) {
        // binom(e, k) = binom(e, k-1) * (e - k + 1) / k
        term *= rational(big_int(e) - big_int(k - 1), big_int(k));
        term *= big_int(c);
        coeffs[k] = term;
    }
    return TruncatedSeries(order, std::move(coeffs));
}

} // namespace cicy
