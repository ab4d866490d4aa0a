#include "ircolor/enumerate.hpp"
#include "ircolor/scan.hpp"
#include "ircolor/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ircolor;
using namespace ircolor::testing;

TEST(Scan, ModeNames)
{
    EXPECT_EQ(parse_scan_mode("chain"), ScanMode::chain);
    EXPECT_EQ(parse_scan_mode("characterization"), ScanMode::characterization);
    EXPECT_THROW(parse_scan_mode("everything"), ParameterError);
}

TEST(Scan, EmptyGraphSkipped)
{
    for (auto mode : {ScanMode::chain, ScanMode::bounds, ScanMode::conjecture, ScanMode::characterization}) {
        EXPECT_TRUE(scan_graph(Graph(0), mode).skipped);
    }
}

TEST(Scan, ChainAndBoundsCleanOnAssets)
{
    auto graphs = load_graph6("connected_upto6.g6");
    for (const auto & g : graphs) {
        auto chain = scan_graph(g, ScanMode::chain);
        ASSERT_TRUE(chain.findings.empty()) << to_graph6(g) << " " << chain.findings.front().check;
        ASSERT_TRUE(scan_graph(g, ScanMode::bounds).findings.empty()) << to_graph6(g);
    }
}

TEST(Scan, ChainRecordsValues)
{
    auto r = scan_graph(cycle(4), ScanMode::chain);
    EXPECT_EQ(r.values.at("chi"), 2);
    EXPECT_EQ(r.values.at("chi_d"), 2);
    EXPECT_EQ(r.values.at("chi_gd"), 4);
    EXPECT_EQ(scan_graph(complete(3), ScanMode::chain).values.count("chi_gd"), 0U);
}

TEST(Scan, ConjectureSkipsNonColourable)
{
    EXPECT_EQ(*scan_graph(path(4), ScanMode::conjecture).skipped, "not IRC-colourable");
    auto r = scan_graph(cycle(4), ScanMode::conjecture);
    EXPECT_FALSE(r.skipped);
    EXPECT_TRUE(r.findings.empty());
}

TEST(Scan, ConjectureCleanOnConnectedGraphsUpToSix)
{
    int colourable = 0;
    for (const auto & g : load_graph6("connected_upto6.g6")) {
        auto r = scan_graph(g, ScanMode::conjecture);
        if (r.skipped)
            continue;
        ++colourable;
        ASSERT_TRUE(r.findings.empty()) << to_graph6(g);
    }
    EXPECT_GT(colourable, 0);
}

TEST(Scan, CharacterizationDomain)
{
    EXPECT_TRUE(scan_graph(cycle(5), ScanMode::characterization).skipped);
    EXPECT_EQ(*scan_graph(star(4), ScanMode::characterization).skipped, "star");
    EXPECT_TRUE(scan_graph(graph_of(4, {{0, 1}, {2, 3}}), ScanMode::characterization).skipped);
    auto r = scan_graph(cycle(6), ScanMode::characterization);
    EXPECT_FALSE(r.skipped);
    EXPECT_TRUE(r.findings.empty());
    EXPECT_EQ(r.values.at("chi_i_is_2"), 1);
}

TEST(Scan, OracleConfirmationHelper)
{
    EXPECT_TRUE(detail::oracle_has_irc_coloring(cycle(4), 2));
    EXPECT_FALSE(detail::oracle_has_irc_coloring(cycle(5), 3));
}

TEST(Verify, ScopesListed)
{
    auto scopes = verify_scopes();
    EXPECT_GE(scopes.size(), 10U);
    EXPECT_NE(std::find(scopes.begin(), scopes.end(), "family-a"), scopes.end());
    EXPECT_THROW(run_verify("nonsense", {}), ParameterError);
}

TEST(Verify, CheapScopesPass)
{
    VerifyOptions opt;
    opt.graphs = connected_labelled_graphs(4);
    for (const auto & scope : {"full-degree-vertex", "dominating-irredundant", "chi-i-bounds", "family-a", "family-b",
                               "cut-vertex", "bridge", "gstar", "dominator-gamma", "clique-private", "chi-i-two"}) {
        auto checks = run_verify(scope, opt);
        EXPECT_FALSE(checks.empty()) << scope;
        for (const auto & c : checks) {
            EXPECT_NE(c.status, CheckStatus::fail) << scope << ": " << c.claim << " " << c.detail;
        }
    }
}

TEST(Verify, TildeUpperBoundIsSkippedNotFaked)
{
    auto checks = run_verify("tilde", {});
    int skipped = 0;
    for (const auto & c : checks) {
        EXPECT_NE(c.status, CheckStatus::fail) << c.claim;
        skipped += c.status == CheckStatus::skipped;
    }
    EXPECT_GT(skipped, 0);
}

TEST(Verify, CancelledBudgetIsReportedAsSkipped)
{
    auto token = CancelToken::with_budget(std::chrono::milliseconds(0));
    VerifyOptions opt;
    opt.tree_max_order = 9;
    auto checks = run_verify("trees", opt, token);
    ASSERT_FALSE(checks.empty());
    EXPECT_EQ(checks.back().status, CheckStatus::skipped);
}
