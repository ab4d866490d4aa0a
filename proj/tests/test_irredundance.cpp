#include "ircolor/irredundance.hpp"
#include "ircolor/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ircolor;
using namespace ircolor::testing;

namespace {

auto as_set(std::vector<VertexSet> family) -> std::set<VertexSet>
{
    return {family.begin(), family.end()};
}

auto brute_family(const Graph & g, bool dominating) -> std::set<VertexSet>
{
    std::set<VertexSet> out;
    for (const auto & s : oracle::naive::subsets(g)) {
        if (s.empty())
            continue;
        if (dominating) {
            if (! oracle::naive::dominating(g, s))
                continue;
            bool minimal = true;
            for (int v : s) {
                auto t = s;
                t.reset(v);
                minimal = minimal && ! oracle::naive::dominating(g, t);
            }
            if (minimal)
                out.insert(s);
        }
        else if (oracle::naive::maximal_irredundant(g, s))
            out.insert(s);
    }
    return out;
}

} // namespace

TEST(PrivateNeighbors, CycleExamples)
{
    auto c4 = cycle(4);
    EXPECT_TRUE(private_neighbors(c4, 0, make_set({0, 2})) == make_set({0}));
    EXPECT_TRUE(private_neighbors(c4, 0, make_set({0})) == make_set({0, 1, 3}));
    EXPECT_TRUE(external_private_neighbors(c4, 0, make_set({0, 1})) == make_set({3}));
    EXPECT_TRUE(private_neighbors(complete(3), 0, make_set({0, 1})).empty());
}

TEST(PrivateNeighbors, RejectsVertexOutsideSet)
{
    EXPECT_THROW(private_neighbors(cycle(4), 1, make_set({0, 2})), PreconditionError);
    EXPECT_THROW(private_neighbors(cycle(4), 9, make_set({0})), IndexError);
}

TEST(Irredundant, SpecExamples)
{
    EXPECT_TRUE(is_irredundant(cycle(4), VertexSet{}));
    EXPECT_FALSE(is_irredundant(complete(3), make_set({0, 1})));
    EXPECT_TRUE(is_irredundant(cycle(4), make_set({0, 2})));
    for (int n = 1; n <= 6; ++n) {
        EXPECT_TRUE(is_maximal_irredundant(complete(n), make_set({0})));
    }
    EXPECT_FALSE(is_maximal_irredundant(cycle(4), make_set({0})));
    EXPECT_TRUE(is_maximal_irredundant(cycle(4), make_set({0, 2})));
}

TEST(Dominating, SpecExamples)
{
    EXPECT_TRUE(is_dominating(cycle(4), VertexSet::prefix(4)));
    EXPECT_TRUE(is_dominating(complete(5), make_set({3})));
    EXPECT_FALSE(is_dominating(cycle(4), make_set({0})));
    EXPECT_TRUE(is_minimal_dominating(cycle(4), make_set({0, 1})));
    EXPECT_FALSE(is_minimal_dominating(cycle(4), make_set({0, 1, 2})));
}

TEST(Families, SmallGraphs)
{
    auto k3 = maximal_irredundant_sets(complete(3)).collect();
    EXPECT_EQ(as_set(k3), (std::set<VertexSet>{make_set({0}), make_set({1}), make_set({2})}));
    EXPECT_EQ(maximal_irredundant_sets(cycle(4)).collect().size(), 6U);
    EXPECT_EQ(minimal_dominating_sets(complete(3)).collect().size(), 3U);
    EXPECT_EQ(minimal_dominating_sets(cycle(4)).collect().size(), 6U);
}

TEST(Families, SizesAscendAndNoDuplicates)
{
    auto all = maximal_irredundant_sets(cycle(7)).collect();
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_LE(all[i - 1].count(), all[i].count());
    }
    EXPECT_EQ(as_set(all).size(), all.size());
}

TEST(Families, SizeCapStopsEarly)
{
    for (const auto & s : maximal_irredundant_sets(cycle(8), 2).collect()) {
        EXPECT_LE(s.count(), 2);
    }
}

// the fast families equal a brute-force filter over all subsets
TEST(Families, MatchOracleOnConnectedGraphsUpToSix)
{
    for (const auto & g : load_graph6("connected_upto6.g6")) {
        ASSERT_EQ(as_set(maximal_irredundant_sets(g).collect()), brute_family(g, false)) << to_graph6(g);
        ASSERT_EQ(as_set(minimal_dominating_sets(g).collect()), brute_family(g, true)) << to_graph6(g);
    }
}

TEST(Families, MatchOracleOnDisconnectedGraphs)
{
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph(7, 0.2, rng);
        ASSERT_EQ(as_set(maximal_irredundant_sets(g).collect()), brute_family(g, false)) << to_graph6(g);
        ASSERT_EQ(as_set(minimal_dominating_sets(g).collect()), brute_family(g, true)) << to_graph6(g);
    }
}

TEST(Numbers, SpecExamples)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(ir_number(complete(n)).value, 1);
        EXPECT_EQ(gamma_number(complete(n)).value, 1);
    }
    EXPECT_EQ(ir_number(cycle(4)).value, 2);
    EXPECT_EQ(gamma_number(cycle(4)).value, 2);
    EXPECT_EQ(gamma_number(Graph(4)).value, 4);
    EXPECT_EQ(ir_number(Graph(4)).value, 4);
    EXPECT_THROW(ir_number(Graph(0)), ParameterError);
    EXPECT_EQ(gamma_number(Graph(0)).value, 0);
}

TEST(Numbers, MatchOracle)
{
    std::vector<Graph> graphs = load_graph6("connected_upto6.g6");
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i)
        graphs.push_back(random_graph(8, 0.35, rng));
    for (const auto & g : graphs) {
        auto ir = ir_number(g);
        auto gamma = gamma_number(g);
        ASSERT_EQ(ir.value, *oracle::oracle_invariant(g, Invariant::ir).value) << to_graph6(g);
        ASSERT_EQ(gamma.value, *oracle::oracle_invariant(g, Invariant::gamma).value) << to_graph6(g);
        ASSERT_TRUE(is_maximal_irredundant(g, ir.witness));
        ASSERT_EQ(ir.witness.count(), ir.value);
        ASSERT_TRUE(is_dominating(g, gamma.witness));
        ASSERT_EQ(gamma.witness.count(), gamma.value);
    }
}

TEST(Numbers, GammaOnLongerCycles)
{
    for (int n = 3; n <= 30; ++n) {
        EXPECT_EQ(gamma_number(cycle(n)).value, (n + 2) / 3) << n;
    }
}

TEST(Properties, IrredundanceIsHereditary)
{
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(7, 0.4, rng);
        for (const auto & s : oracle::naive::subsets(g)) {
            if (! is_irredundant(g, s))
                continue;
            for (int v : s) {
                auto t = s;
                t.reset(v);
                ASSERT_TRUE(is_irredundant(g, t));
            }
        }
    }
}

TEST(Properties, MinimalDominatingIsMaximalIrredundantAndIrAtMostGamma)
{
    for (const auto & g : load_graph6("connected_upto6.g6")) {
        auto family = minimal_dominating_sets(g);
        while (auto d = family.next())
            ASSERT_TRUE(is_maximal_irredundant(g, *d));
        ASSERT_LE(ir_number(g).value, gamma_number(g).value);
    }
}

TEST(IrVerify, AcceptsTrueValueRejectsWrong)
{
    auto g = cycle(9);
    auto ir = ir_number(g);
    EXPECT_TRUE(ir_verify(g, ir.witness, ir.value).ok());
    auto larger = maximal_irredundant_sets(g).collect().back();
    auto bad = ir_verify(g, larger, larger.count());
    if (larger.count() > ir.value) {
        EXPECT_FALSE(bad.none_smaller);
    }
    EXPECT_FALSE(ir_verify(g, make_set({0}), 1).witness_maximal);
}

TEST(Cancellation, ExpiredBudgetThrows)
{
    std::mt19937 rng(1);
    auto g = random_graph(60, 0.1, rng);
    auto token = CancelToken::with_budget(std::chrono::milliseconds(0));
    EXPECT_THROW(
        {
            auto family = maximal_irredundant_sets(g, std::nullopt, token);
            while (family.next()) {
            }
        },
        Cancelled);
}
