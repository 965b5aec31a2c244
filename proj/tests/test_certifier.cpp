#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include <cicy/certifier.hpp>

using namespace cicy;
using fam = cicy_type::family;

namespace {

bool has_warning(const certificate& c, const std::string& code)
{
    return std::any_of(c.warnings.begin(), c.warnings.end(), [&](const auto& w) { return w.code == code; });
}

} // namespace

TEST(CicyType, ParseAllFamilies)
{
    EXPECT_EQ(cicy_type::parse("5"), cicy_type(fam::quintic));
    EXPECT_EQ(cicy_type::parse("4,2"), cicy_type(fam::quartic_quadric));
    EXPECT_EQ(cicy_type::parse("2,4"), cicy_type(fam::quartic_quadric));
    EXPECT_EQ(cicy_type::parse("3-2-2"), cicy_type(fam::cubic_quadric_quadric));
    EXPECT_EQ(cicy_type::parse("2,2,2,2").to_string(), "2,2,2,2");
    for (const char* bad : {"6", "", "4,", ",", "3,3,3", "x", "2,2,2", "4, 2", "99999"}) {
        EXPECT_THROW(cicy_type::parse(bad), invalid_cicy_type) << bad;
    }
}

TEST(NodeTable, MatchesPublishedRows)
{
    const auto& t = node_table();
    ASSERT_EQ(t.size(), 10u);
    EXPECT_EQ(t.front().cicy, cicy_type(fam::quintic));
    EXPECT_EQ(t.front().k3_degrees, (std::vector<int>{4, 1}));
    EXPECT_EQ(t.front().n, 16);
    EXPECT_EQ(t.back().cicy, cicy_type(fam::four_quadrics));
    EXPECT_EQ(t.back().k3_degrees, (std::vector<int>{2, 2, 2, 1, 1}));
    EXPECT_EQ(t.back().n, 8);
    for (const auto& row : t) {
        const auto m = row.half_degree();
        EXPECT_TRUE(m >= 2 && m <= 4) << row.label();
    }
}

TEST(NodeTable, VerifyReportsSingleDiscrepancy)
{
    const auto before = node_table();
    const auto checks = verify_node_table();
    ASSERT_EQ(checks.size(), 10u);
    int mismatches = 0;
    for (const auto& c : checks) {
        if (!c.agree) {
            ++mismatches;
            EXPECT_EQ(c.row.cicy, cicy_type(fam::cubic_cubic));
            EXPECT_EQ(c.row.k3_degrees, (std::vector<int>{2, 2, 2}));
            EXPECT_EQ(c.paper_n, 32);
            EXPECT_EQ(c.computed_n, 24);
        }
    }
    EXPECT_EQ(mismatches, 1);
    EXPECT_EQ(checks[0].computed_n, 16);
    EXPECT_EQ(checks[8].computed_n, 16); // (3,2,2)/(2,2,2,1)
    EXPECT_EQ(node_table(), before);
}

TEST(Stated, Examples)
{
    auto v = stated_conditions(fam::quintic, 6, 2);
    EXPECT_TRUE(v.accept);

    v = stated_conditions(fam::quintic, 5, 3);
    EXPECT_FALSE(v.accept);
    EXPECT_NE(v.reason.find("forbidden pair"), std::string::npos);

    v = stated_conditions(fam::four_quadrics, 4, 1);
    EXPECT_TRUE(v.accept);
    EXPECT_EQ(v.reason, "exceptional pair");
}

TEST(Stated, ClauseTraceComplete)
{
    const auto v = stated_conditions(fam::quintic, 6, 2);
    std::map<std::string, bool> clauses;
    for (const auto& c : v.clauses) {
        clauses[c.name] = c.holds;
    }
    EXPECT_TRUE(clauses.at("g < d^2/8"));
    EXPECT_TRUE(clauses.at("g < 35"));
    EXPECT_TRUE(clauses.at("(d,g) != (5,3)"));
    EXPECT_TRUE(clauses.at("d > 2g-2"));
    EXPECT_TRUE(clauses.at("d > g+2"));
    EXPECT_FALSE(clauses.at("exceptional pair"));
}

TEST(Stated, BoundaryPairs)
{
    const std::vector<std::tuple<fam, int, int>> forbidden{
        {fam::quintic, 5, 3}, {fam::quartic_quadric, 5, 3}, {fam::cubic_cubic, 7, 4},
        {fam::cubic_quadric_quadric, 7, 4}, {fam::four_quadrics, 9, 5}};
    for (auto [f, d, g] : forbidden) {
        EXPECT_FALSE(stated_conditions(f, d, g).accept) << d << "," << g;
    }
    const std::vector<std::tuple<fam, int, int>> exceptional{
        {fam::cubic_cubic, 3, 1}, {fam::cubic_quadric_quadric, 3, 1}, {fam::four_quadrics, 4, 1}};
    for (auto [f, d, g] : exceptional) {
        EXPECT_TRUE(stated_conditions(f, d, g).accept) << d << "," << g;
    }
    // (3,1) is not exceptional for the quintic: 1 < 9/8 holds, so it passes anyway;
    // (4,1) on (3,3): 12 < 16, fine; (3,1) on (2,2,2,2): 16 < 9 fails.
    EXPECT_FALSE(stated_conditions(fam::four_quadrics, 3, 1).accept);
}

TEST(Stated, GenusCapsAreStrict)
{
    EXPECT_TRUE(stated_conditions(fam::quintic, 100, 34).accept);
    EXPECT_FALSE(stated_conditions(fam::quintic, 100, 35).accept);
    EXPECT_FALSE(stated_conditions(fam::four_quadrics, 100, 9).accept);
    EXPECT_TRUE(stated_conditions(fam::four_quadrics, 100, 8).accept);
}

TEST(Derived, QuinticSextic)
{
    const auto v = derived_conditions(fam::quintic, 6, 2);
    ASSERT_TRUE(v.accept);
    ASSERT_EQ(v.viable.size(), 2u);
    EXPECT_EQ(v.chosen->k3_degrees, (std::vector<int>{3, 2}));
    EXPECT_EQ(v.chosen->n, 36);
    EXPECT_EQ(*v.count, 561);
    EXPECT_EQ(v.ell, 2);
    // The (4,1) row is viable too, with C(14, 2) = 91.
    EXPECT_EQ(rigid_count(v.rows[0].row.n, 2), 91);
    EXPECT_TRUE(v.rows[0].viable);
    EXPECT_EQ(v.rows[1].route.route, nonspeciality::riemann_roch);
}

TEST(Derived, TooFewNodes)
{
    const auto v = derived_conditions(fam::four_quadrics, 13, 8);
    EXPECT_FALSE(v.accept);
    ASSERT_EQ(v.rows.size(), 1u);
    EXPECT_FALSE(v.rows[0].enough_nodes);
    EXPECT_TRUE(v.rows[0].knutsen.exists);
    EXPECT_FALSE(v.count.has_value());
}

TEST(Derived, ForbiddenAndBoundFailures)
{
    const auto v = derived_conditions(fam::quintic, 5, 3);
    EXPECT_FALSE(v.accept);
    ASSERT_EQ(v.rows.size(), 2u);
    EXPECT_EQ(v.rows[0].knutsen.clause, knutsen_clause::forbidden_pair);
    EXPECT_EQ(v.rows[1].knutsen.clause, knutsen_clause::bound_failed);
    EXPECT_NE(v.reason.find("forbidden pair"), std::string::npos);
}

TEST(Derived, OutOfRange)
{
    EXPECT_THROW(derived_conditions(fam::quintic, 4, 4), out_of_theorem_range);
    EXPECT_THROW(derived_conditions(fam::quintic, 4, -1), out_of_theorem_range);
}

TEST(Derived, TieBreakPrefersLargestNodeCount)
{
    // g = 0, d = 1 on (4,2): all three rows viable; n = 32 wins.
    const auto v = derived_conditions(fam::quartic_quadric, 1, 0);
    ASSERT_EQ(v.viable.size(), 3u);
    EXPECT_EQ(v.chosen->n, 32);
    EXPECT_EQ(*v.count, 1);
}

TEST(Derived, AcceptImpliesTraceHolds)
{
    for (auto f : cicy_type::all()) {
        for (int g = 0; g <= 40; ++g) {
            for (int d = std::max(1, 2 * g - 3); d <= 2 * g + 15; ++d) {
                const auto v = derived_conditions(f, d, g);
                if (!v.accept) {
                    ASSERT_FALSE(v.count.has_value());
                    continue;
                }
                const auto it = std::find_if(v.rows.begin(), v.rows.end(),
                                             [&](const row_evaluation& e) { return e.row == *v.chosen; });
                ASSERT_NE(it, v.rows.end());
                ASSERT_TRUE(it->enough_nodes);
                ASSERT_GE(it->row.n, g + 2);
                ASSERT_TRUE(it->knutsen.exists);
                ASSERT_NE(it->route.route, nonspeciality::fail);
                ASSERT_EQ(*v.count, rigid_count(v.chosen->n, g));
                ASSERT_EQ(*v.count, excess_count(excess_problem(v.chosen->n, g)));
            }
        }
    }
}

TEST(Certify, Examples)
{
    auto c = certify(fam::quintic, 6, 2);
    EXPECT_TRUE(c.certified());
    EXPECT_TRUE(c.stated.accept);
    EXPECT_EQ(*c.count(), 561);
    EXPECT_TRUE(c.warnings.empty());

    c = certify(fam::quintic, 5, 3);
    EXPECT_FALSE(c.certified());
    EXPECT_FALSE(c.stated.accept);
    EXPECT_FALSE(has_warning(c, "mode-disagreement"));

    c = certify(fam::four_quadrics, 13, 8);
    EXPECT_TRUE(c.stated.accept);
    EXPECT_FALSE(c.certified());
    EXPECT_TRUE(has_warning(c, "mode-disagreement"));
    EXPECT_TRUE(has_warning(c, "extrapolated-knutsen")); // 13 < 2*8 - 2
}

TEST(Certify, GateErrorsBecomeRejections)
{
    const auto c = certify(fam::quintic, 2, 5);
    EXPECT_FALSE(c.certified());
    EXPECT_FALSE(c.stated.accept);
    EXPECT_NE(c.derived.reason.find("2g-3"), std::string::npos);
    EXPECT_NO_THROW(certify(fam::quintic, 0, 0));
    EXPECT_FALSE(certify(fam::quintic, 0, 0).certified());
}

TEST(Certify, DiscrepantRowIsFlagged)
{
    // (3,3), g = 0, d = 1: both rows viable, including (2,2,2) with tabulated n = 32.
    const auto c = certify(fam::cubic_cubic, 1, 0);
    EXPECT_TRUE(c.certified());
    EXPECT_TRUE(has_warning(c, "table-discrepancy"));
    EXPECT_FALSE(has_warning(certify(fam::quintic, 6, 2), "table-discrepancy"));
}

TEST(Enumerate, Examples)
{
    auto certs = enumerate(fam::quintic, 4, 0);
    ASSERT_EQ(certs.size(), 4u);
    for (const auto& c : certs) {
        EXPECT_TRUE(c.certified());
        EXPECT_EQ(*c.count(), 1);
    }

    certs = enumerate(fam::cubic_cubic, 3, 1);
    const auto it = std::find_if(certs.begin(), certs.end(), [](const auto& c) { return c.d == 3 && c.g == 1; });
    ASSERT_NE(it, certs.end());
    EXPECT_TRUE(it->certified());

    EXPECT_TRUE(enumerate(fam::quintic, 0, 0).empty());
}

TEST(Enumerate, RegionSizeAndOrder)
{
    const int d_max = 30, g_max = 12;
    const auto certs = enumerate(fam::cubic_quadric_quadric, d_max, g_max);
    std::size_t expected = 0;
    for (int g = 0; g <= g_max; ++g) {
        for (int d = 1; d <= d_max; ++d) {
            expected += d >= 2 * g - 3;
        }
    }
    ASSERT_EQ(certs.size(), expected);
    EXPECT_TRUE(std::is_sorted(certs.begin(), certs.end(), [](const auto& a, const auto& b) {
        return std::pair(a.g, a.d) < std::pair(b.g, b.d);
    }));
}

TEST(Enumerate, BoundGuards)
{
    EXPECT_THROW(enumerate(fam::quintic, 10001, 0), bound_guard_error);
    EXPECT_THROW(enumerate(fam::quintic, -1, 0), bound_guard_error);
    EXPECT_THROW(enumerate(fam::quintic, 5, -1), bound_guard_error);
}
