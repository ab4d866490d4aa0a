#include "ircolor/domination_coloring.hpp"
#include "ircolor/families.hpp"
#include "ircolor/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ircolor;
using namespace ircolor::testing;

namespace {

auto oracle_value(const Graph & g, Invariant id) -> std::optional<int> { return oracle::oracle_invariant(g, id).value; }

} // namespace

TEST(IrredundanceChromatic, CompleteAndCompleteBipartite)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(irredundance_chromatic_number(complete(n)).value, n);
    }
    for (int n = 2; n <= 7; ++n) {
        EXPECT_EQ(irredundance_chromatic_number(star(n - 1)).value, 2);
    }
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            EXPECT_EQ(irredundance_chromatic_number(complete_bipartite(m, n)).value, 2);
        }
}

TEST(IrredundanceChromatic, FixtureTreeNeedsThree)
{
    auto t = fixture(FixtureId::chi_i3_tree).graph;
    EXPECT_EQ(chromatic_number(t).value, 2);
    EXPECT_EQ(irredundance_chromatic_number(t).value, 3);
    EXPECT_EQ(oracle_value(t, Invariant::chi_i), 3);
}

TEST(IrredundanceChromatic, FamilyB)
{
    EXPECT_EQ(irredundance_chromatic_number(gen_family_B(6, 4).graph).value, 4);
}

TEST(IrredundanceChromatic, EmptyGraphRejected)
{
    EXPECT_THROW(irredundance_chromatic_number(Graph(0)), ParameterError);
    EXPECT_THROW(gamma_chromatic_number(Graph(0)), ParameterError);
    EXPECT_THROW(dominator_chromatic_number(Graph(0)), ParameterError);
}

TEST(IrredundanceChromatic, CertificateValidates)
{
    for (const auto & g : load_graph6("connected_upto6.g6")) {
        auto r = irredundance_chromatic_number(g);
        ASSERT_TRUE(validate(g, r.cert)) << to_graph6(g);
        ASSERT_EQ(r.cert.coloring.colors(), r.value);
        auto d = gamma_chromatic_number(g);
        ASSERT_TRUE(d.cert.coloring.is_proper(g));
        ASSERT_TRUE(is_dominating(g, d.cert.rainbow_set));
        ASSERT_TRUE(is_rainbow(d.cert.coloring, d.cert.rainbow_set));
    }
}

TEST(GammaChromatic, SpecExamples)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(gamma_chromatic_number(complete(n)).value, n);
    }
    EXPECT_EQ(gamma_chromatic_number(cycle(4)).value, 2);
    EXPECT_EQ(oracle_value(cycle(4), Invariant::chi_gamma), 2);
}

TEST(DominatorChromatic, Examples)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(dominator_chromatic_number(complete(n)).value, n);
    }
    // {0,2},{1,3}: each vertex is adjacent to the whole opposite class
    EXPECT_EQ(dominator_chromatic_number(cycle(4)).value, 2);
    EXPECT_EQ(oracle_value(cycle(4), Invariant::chi_d), 2);
    EXPECT_TRUE(is_dominator_coloring(cycle(4), Coloring({0, 1, 0, 1})));
}

TEST(GlobalDominatorChromatic, Examples)
{
    EXPECT_EQ(global_dominator_chromatic_number(cycle(4))->value, 4);
    EXPECT_EQ(oracle_value(cycle(4), Invariant::chi_gd), 4);
    auto p4 = global_dominator_chromatic_number(path(4));
    ASSERT_TRUE(p4);
    EXPECT_EQ(p4->value, *oracle_value(path(4), Invariant::chi_gd));
    EXPECT_TRUE(is_global_dominator_coloring(path(4), p4->witness));
}

TEST(GlobalDominatorChromatic, FullDegreeVertexHasNone)
{
    EXPECT_FALSE(global_dominator_chromatic_number(complete(3)));
    EXPECT_FALSE(global_dominator_chromatic_number(star(4)));
    EXPECT_FALSE(oracle_value(star(4), Invariant::chi_gd));
    EXPECT_THROW(global_dominator_chromatic_number(Graph(1)), ParameterError);
    EXPECT_EQ(global_dominator_chromatic_number(Graph(2))->value, 2);
}

TEST(ClassRelations, Definitions)
{
    auto g = path(3);
    EXPECT_TRUE(dominates_class(g, 1, make_set({0, 2})));
    EXPECT_TRUE(dominates_class(g, 0, make_set({0})));
    EXPECT_FALSE(dominates_class(g, 0, make_set({0, 2})));
    EXPECT_FALSE(dominates_class(g, 0, VertexSet{}));
    EXPECT_TRUE(anti_dominates_class(g, 0, make_set({2})));
    EXPECT_FALSE(anti_dominates_class(g, 0, make_set({0})));
    EXPECT_FALSE(anti_dominates_class(g, 0, make_set({1, 2})));
}

// fast solvers against the definitional oracle
TEST(Oracle, AllColouringInvariantsAgree)
{
    std::vector<Graph> graphs = load_graph6("connected_upto6.g6");
    std::mt19937 rng(23);
    for (int i = 0; i < 40; ++i)
        graphs.push_back(random_graph(7, 0.3, rng));
    for (const auto & g : graphs) {
        ASSERT_EQ(irredundance_chromatic_number(g).value, oracle_value(g, Invariant::chi_i)) << to_graph6(g);
        ASSERT_EQ(gamma_chromatic_number(g).value, oracle_value(g, Invariant::chi_gamma)) << to_graph6(g);
        auto d = dominator_chromatic_number(g);
        ASSERT_EQ(d.value, oracle_value(g, Invariant::chi_d)) << to_graph6(g);
        ASSERT_TRUE(is_dominator_coloring(g, d.witness));
        if (g.order() >= 2) {
            auto gd = global_dominator_chromatic_number(g);
            ASSERT_EQ(gd ? std::optional<int>(gd->value) : std::nullopt, oracle_value(g, Invariant::chi_gd)) << to_graph6(g);
            if (gd) {
                ASSERT_TRUE(is_global_dominator_coloring(g, gd->witness));
            }
        }
    }
}

TEST(Properties, ChainOfColouringNumbers)
{
    for (const auto & g : load_graph6("connected_upto6.g6")) {
        int chi = chromatic_number(g).value;
        int chi_i = irredundance_chromatic_number(g).value;
        int chi_gamma = gamma_chromatic_number(g).value;
        int chi_d = dominator_chromatic_number(g).value;
        int ir = ir_number(g).value;
        ASSERT_LE(chi, chi_i);
        ASSERT_LE(chi_i, chi_gamma);
        ASSERT_LE(chi_gamma, chi_d);
        ASSERT_LE(std::max(chi, ir), chi_i);
        ASSERT_LE(chi_i, chi + ir - 1);
        if (auto gd = g.order() >= 2 ? global_dominator_chromatic_number(g) : std::nullopt) {
            ASSERT_LE(chi_d, gd->value);
        }
        if (g.max_degree() == g.order() - 1) {
            ASSERT_EQ(chi_i, chi);
        }
    }
}

TEST(Properties, RainbowCliqueReductionMatchesDefinition)
{
    std::mt19937 rng(29);
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(6, 0.4, rng);
        auto sets = maximal_irredundant_sets(g).collect();
        for (const auto & r : sets) {
            int reduced = chromatic_number(g.with_clique(r)).value;
            int direct = 0;
            for (int k = 1; k <= g.order() && ! direct; ++k)
                for (const auto & c : oracle::all_partitions(g, k))
                    if (is_rainbow(c, r)) {
                        direct = k;
                        break;
                    }
            ASSERT_EQ(reduced, direct);
        }
    }
}
