#pragma once

/**
 * @file certifier.hpp
 * @brief Existence of geometrically rigid curves of degree d and genus g on
 *        a general complete intersection Calabi-Yau threefold.
 *
 * Two independent decision procedures are run on every input:
 *
 *  - stated mode applies the theorem's case conditions literally;
 *  - derived mode rebuilds the hypothesis chain: pick a smooth complete
 *    intersection K3 S from the node table, require the Picard-lattice
 *    existence criterion for (S, C), non-speciality of O_C(1), and
 *    n >= ell + 2 with ell = dim |O_S(C)| = g.
 *
 * When derived mode accepts, the certificate carries the rigid-curve count
 * C(n - 2, g) for the embedding with the largest node count.
 * Disagreements between the modes are reported as warnings, never resolved.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <cicy/chern_calculus.hpp>
#include <cicy/errors.hpp>
#include <cicy/k3_lattice.hpp>

namespace cicy {

/// One of the five Calabi-Yau complete intersection threefold families.
class cicy_type {
public:
    enum class family { quintic, quartic_quadric, cubic_cubic, cubic_quadric_quadric, four_quadrics };

    cicy_type(family f) : family_(f) {} // NOLINT(google-explicit-constructor)

    static cicy_type from_degrees(std::span<const int> degrees)
    {
        std::vector<int> sorted(degrees.begin(), degrees.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>{});
        for (auto f : all()) {
            const cicy_type t(f);
            const auto& p = t.params();
            if (std::equal(sorted.begin(), sorted.end(), p.degrees.begin(), p.degrees.end())) {
                return t;
            }
        }
        std::string s;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            s += (i ? "," : "") + std::to_string(degrees[i]);
        }
        throw invalid_cicy_type("not a Calabi-Yau complete intersection threefold type: (" + s + ")");
    }

    /// Accepts "5", "4,2", "3,3", "3,2,2", "2,2,2,2" (also dash-separated).
    static cicy_type parse(std::string_view text)
    {
        std::vector<int> degrees;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto next = text.find_first_of(",-", pos);
            const auto piece = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
            if (piece.empty() || piece.size() > 3
                || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw invalid_cicy_type("cannot parse family '" + std::string(text) + "'");
            }
            degrees.push_back(std::stoi(std::string(piece)));
            if (next == std::string_view::npos) {
                break;
            }
            pos = next + 1;
        }
        return from_degrees(degrees);
    }

    static constexpr std::array<family, 5> all()
    {
        return {family::quintic, family::quartic_quadric, family::cubic_cubic, family::cubic_quadric_quadric,
                family::four_quadrics};
    }

    /// Case data of the theorem for this family.
    struct case_params {
        std::vector<int> degrees;
        std::int64_t m;     ///< d^2 / (4m) bound and d > g + m alternative
        std::int64_t cap;   ///< g < cap
        std::int64_t forbidden_d, forbidden_g;
        std::optional<std::pair<std::int64_t, std::int64_t>> exceptional; ///< accepted unconditionally
    };

    const case_params& params() const
    {
        static const std::array<case_params, 5> table{{
            {{5}, 2, 35, 5, 3, std::nullopt},
            {{4, 2}, 2, 31, 5, 3, std::nullopt},
            {{3, 3}, 3, 31, 7, 4, std::pair<std::int64_t, std::int64_t>{3, 1}},
            {{3, 2, 2}, 3, 15, 7, 4, std::pair<std::int64_t, std::int64_t>{3, 1}},
            {{2, 2, 2, 2}, 4, 9, 9, 5, std::pair<std::int64_t, std::int64_t>{4, 1}},
        }};
        return table[static_cast<std::size_t>(family_)];
    }

    family kind() const noexcept { return family_; }
    const std::vector<int>& degrees() const { return params().degrees; }

    std::string to_string(char sep = ',') const { return join_degrees(degrees(), sep); }

    static std::string join_degrees(std::span<const int> degrees, char sep)
    {
        std::string s;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            if (i) {
                s += sep;
            }
            s += std::to_string(degrees[i]);
        }
        return s;
    }

    friend bool operator==(cicy_type a, cicy_type b) { return a.family_ == b.family_; }

private:
    family family_;
};

/// A K3 surface of type (a_j) inside a nodal threefold of type (b_i), with
/// n nodes of the threefold lying on the surface.
struct embedding_row {
    cicy_type cicy;
    std::vector<int> k3_degrees;
    std::int64_t n;

    /// m with deg S = 2m.
    std::int64_t half_degree() const
    {
        std::int64_t deg = 1;
        for (int a : k3_degrees) {
            deg *= a;
        }
        return deg / 2;
    }

    std::string label() const
    {
        return "(" + cicy.to_string() + ")/(" + cicy_type::join_degrees(k3_degrees, ',') + ")";
    }

    friend bool operator==(const embedding_row& x, const embedding_row& y)
    {
        return x.cicy == y.cicy && x.k3_degrees == y.k3_degrees && x.n == y.n;
    }
};

inline const std::vector<embedding_row>& node_table()
{
    using f = cicy_type::family;
    static const std::vector<embedding_row> rows{
        {f::quintic, {4, 1}, 16},
        {f::quintic, {3, 2}, 36},
        {f::quartic_quadric, {4, 1, 1}, 4},
        {f::quartic_quadric, {3, 2, 1}, 18},
        {f::quartic_quadric, {2, 2, 2}, 32},
        {f::cubic_cubic, {3, 2, 1}, 12},
        {f::cubic_cubic, {2, 2, 2}, 32},
        {f::cubic_quadric_quadric, {3, 2, 1, 1}, 6},
        {f::cubic_quadric_quadric, {2, 2, 2, 1}, 16},
        {f::four_quadrics, {2, 2, 2, 1, 1}, 8},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// Node table cross-check.

struct node_check {
    embedding_row row;
    std::int64_t paper_n;
    big_int computed_n;
    bool agree;
};

inline std::vector<node_check> verify_node_table()
{
    std::vector<node_check> out;
    for (const auto& row : node_table()) {
        auto computed = degeneracy_count(row.cicy.degrees(), row.k3_degrees);
        out.push_back({row, row.n, computed, computed == row.n});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stated mode.

struct clause_result {
    std::string name;
    bool holds;
};

struct stated_verdict {
    bool accept = false;
    std::string reason; ///< first failing clause, or why it was accepted
    std::vector<clause_result> clauses;
};

inline stated_verdict stated_conditions(cicy_type t, std::int64_t d, std::int64_t g)
{
    const auto& p = t.params();
    const auto m = std::to_string(p.m);
    stated_verdict v;
    auto clause = [&](std::string name, bool holds) {
        v.clauses.push_back({std::move(name), holds});
        return holds;
    };

    const bool gate = clause("g >= 0", g >= 0) & clause("d >= 2g-3", d >= 2 * g - 3);
    const bool exceptional = clause("exceptional pair",
                                    p.exceptional && p.exceptional->first == d && p.exceptional->second == g);
    const bool bound = clause("g < d^2/" + std::to_string(4 * p.m), 4 * p.m * g < d * d);
    const bool cap = clause("g < " + std::to_string(p.cap), g < p.cap);
    const bool allowed = clause("(d,g) != (" + std::to_string(p.forbidden_d) + "," + std::to_string(p.forbidden_g) + ")",
                                !(d == p.forbidden_d && g == p.forbidden_g));
    const bool nonspecial_degree = clause("d > 2g-2", d > 2 * g - 2);
    const bool small_genus = clause("d > g+" + m, d > g + p.m);

    if (!gate) {
        v.reason = "outside theorem range (need g >= 0 and d >= 2g-3)";
    } else if (exceptional) {
        v.accept = true;
        v.reason = "exceptional pair";
    } else if (!bound) {
        v.reason = "genus bound g < d^2/" + std::to_string(4 * p.m) + " fails";
    } else if (!cap) {
        v.reason = "genus cap g < " + std::to_string(p.cap) + " fails";
    } else if (!allowed) {
        v.reason = "forbidden pair (d,g) = (" + std::to_string(d) + "," + std::to_string(g) + ")";
    } else if (!nonspecial_degree && !small_genus) {
        v.reason = "neither d > 2g-2 nor d > g+" + m;
    } else {
        v.accept = true;
        v.reason = "all case conditions hold";
    }
    return v;
}

// ---------------------------------------------------------------------------
// Derived mode.

struct row_evaluation {
    embedding_row row;
    std::int64_t m = 0;
    knutsen_verdict knutsen;
    bool enough_nodes = false; ///< n >= g + 2
    route_trace route;
    bool viable = false;
    std::vector<std::string> failures;
};

struct derived_verdict {
    bool accept = false;
    std::string reason;
    std::int64_t ell = 0;
    std::optional<embedding_row> chosen;
    std::optional<big_int> count;
    std::vector<row_evaluation> rows;
    std::vector<embedding_row> viable;
};

/// Hypotheses of the rigid-curve count that hold by construction for table
/// embeddings and are not checked numerically.
inline const std::vector<std::string>& assumed_by_citation()
{
    static const std::vector<std::string> a{
        "X0 is K-trivial",
        "h^1(C, N_{C/P}) = 0 for all C in |O_S(C)| (from h^1(C0, O(1)) = 0)",
        "H^0(C, N_{C/S}) -> H^0(C, N_{C/X0}) is an isomorphism for all C in |O_S(C)|",
        "some section smooths at least one node on S",
        "nodes on S are distinct from the base points of |O_S(C)|",
        "H very ample and Pic S = ZH + ZC (Lemma 2 hypotheses)",
    };
    return a;
}

inline derived_verdict derived_conditions(cicy_type t, std::int64_t d, std::int64_t g)
{
    if (g < 0 || d < 2 * g - 3) {
        throw out_of_theorem_range("derived_conditions: need g >= 0 and d >= 2g-3, got d=" + std::to_string(d)
                                   + ", g=" + std::to_string(g));
    }
    if (d < 1) {
        throw std::invalid_argument("derived_conditions: degree must be positive, got d=" + std::to_string(d));
    }

    derived_verdict v;
    v.ell = g;
    for (const auto& row : node_table()) {
        if (!(row.cicy == t)) {
            continue;
        }
        const auto m = row.half_degree();
        row_evaluation e{row, m, knutsen_exists(m, d, g), row.n >= g + 2, nonspeciality_route(m, d, g), false, {}};

        if (!e.knutsen.exists) {
            e.failures.push_back(std::string("no K3 with Pic S = ZH + ZC at m=") + std::to_string(e.m) + ": "
                                 + to_string(e.knutsen.clause));
        }
        if (!e.enough_nodes) {
            e.failures.push_back("too few nodes: n=" + std::to_string(row.n) + " < g+2=" + std::to_string(g + 2));
        }
        if (e.route.route == nonspeciality::fail) {
            e.failures.push_back(std::string("O_C(1) not shown non-special (Lemma 2 ")
                                 + to_string(e.route.lemma2->status) + ")");
        }
        e.viable = e.failures.empty();
        if (e.viable) {
            v.viable.push_back(row);
        }
        v.rows.push_back(std::move(e));
    }

    if (v.viable.empty()) {
        v.reason = "no viable embedding";
        for (const auto& e : v.rows) {
            v.reason += "; " + e.row.label() + ": ";
            for (std::size_t i = 0; i < e.failures.size(); ++i) {
                v.reason += (i ? ", " : "") + e.failures[i];
            }
        }
        return v;
    }

    // Largest n wins; max_element keeps the first maximum, so ties go by table order.
    v.chosen = *std::max_element(v.viable.begin(), v.viable.end(),
                                 [](const embedding_row& x, const embedding_row& y) { return x.n < y.n; });
    v.count = rigid_count(v.chosen->n, g);
    v.accept = true;
    v.reason = "viable embedding " + v.chosen->label() + " with n=" + std::to_string(v.chosen->n);
    return v;
}

// ---------------------------------------------------------------------------
// Certificates.

struct certificate_warning {
    std::string code; ///< mode-disagreement, extrapolated-knutsen, table-discrepancy
    std::string message;
};

struct certificate {
    cicy_type type;
    std::int64_t d;
    std::int64_t g;
    stated_verdict stated;
    derived_verdict derived;
    std::vector<certificate_warning> warnings;

    bool certified() const noexcept { return derived.accept; }
    const std::optional<big_int>& count() const noexcept { return derived.count; }
};

inline certificate certify(cicy_type t, std::int64_t d, std::int64_t g)
{
    certificate cert{t, d, g, stated_conditions(t, d, g), {}, {}};
    try {
        cert.derived = derived_conditions(t, d, g);
    } catch (const std::exception& e) {
        cert.derived = derived_verdict{};
        cert.derived.ell = g;
        cert.derived.reason = e.what();
    }

    if (cert.stated.accept != cert.derived.accept) {
        cert.warnings.push_back({"mode-disagreement", std::string("stated mode ")
                                                          + (cert.stated.accept ? "accepts" : "rejects")
                                                          + " but derived mode "
                                                          + (cert.derived.accept ? "accepts" : "rejects")});
    }
    const bool extrapolated = std::any_of(cert.derived.rows.begin(), cert.derived.rows.end(),
                                          [](const row_evaluation& e) { return e.knutsen.extrapolated; });
    if (extrapolated) {
        cert.warnings.push_back({"extrapolated-knutsen",
                                 "K3 existence criterion applied below its stated range d >= 2g-2"});
    }

    static const std::vector<node_check> checks = verify_node_table();
    for (const auto& row : cert.derived.viable) {
        for (const auto& c : checks) {
            if (c.row == row && !c.agree) {
                cert.warnings.push_back({"table-discrepancy",
                                         "embedding " + row.label() + " has tabulated n=" + std::to_string(c.paper_n)
                                             + " but degeneracy count " + c.computed_n.str()});
            }
        }
    }
    return cert;
}

inline constexpr std::int64_t enumerate_bound_limit = 10000;

/// Certificates for 0 <= g <= g_max, max(1, 2g-3) <= d <= d_max, ordered by
/// g then d.
inline std::vector<certificate> enumerate(cicy_type t, std::int64_t d_max, std::int64_t g_max)
{
    if (d_max < 0 || g_max < 0) {
        throw bound_guard_error("enumerate: bounds must be nonnegative");
    }
    if (d_max > enumerate_bound_limit || g_max > enumerate_bound_limit) {
        throw bound_guard_error("enumerate: bounds must not exceed " + std::to_string(enumerate_bound_limit));
    }
    std::vector<certificate> out;
    for (std::int64_t g = 0; g <= g_max; ++g) {
        for (std::int64_t d = std::max<std::int64_t>(1, 2 * g - 3); d <= d_max; ++d) {
            out.push_back(certify(t, d, g));
        }
    }
    return out;
}

} // namespace cicy
