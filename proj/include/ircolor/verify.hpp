#pragma once

#include "ircolor/characterization.hpp"
#include "ircolor/engine.hpp"
#include "ircolor/enumerate.hpp"
#include "ircolor/families.hpp"
#include "ircolor/io.hpp"
#include "ircolor/oracle.hpp"
#include "ircolor/scan.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ircolor {

enum class CheckStatus
{
    pass,
    fail,
    skipped
};

inline auto to_string(CheckStatus s) -> std::string
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct VerifyCheck
{
    std::string scope;
    std::string claim;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyOptions
{
    /// Graph stream for the stream-based scopes; connected labelled graphs up to max_order when empty.
    std::vector<Graph> graphs;
    int max_order = 5;
    int tree_max_order = 8;
    int oracle_cap = oracle::default_cap;
};

namespace detail {

    class CheckSink
    {
      public:
        CheckSink(std::string scope, std::vector<VerifyCheck> & out) : scope_(std::move(scope)), out_(out) {}

        auto check(const std::string & claim, bool ok, const std::string & detail = {}) -> void
        {
            out_.push_back({scope_, claim, ok ? CheckStatus::pass : CheckStatus::fail, detail});
        }

        auto skip(const std::string & claim, const std::string & detail) -> void
        {
            out_.push_back({scope_, claim, CheckStatus::skipped, detail});
        }

        /// One check summarising a predicate over a stream: passes when no graph violates it.
        auto over(const std::string & claim, const std::vector<Graph> & graphs,
                  const std::function<std::optional<bool>(const Graph &)> & holds) -> void
        {
            int tested = 0, bad = 0;
            std::string first_bad;
            for (const auto & g : graphs) {
                auto r = holds(g);
                if (! r)
                    continue;
                ++tested;
                if (! *r && bad++ == 0)
                    first_bad = g.order() <= graph6_max_order ? to_graph6(g) : "n=" + std::to_string(g.order());
            }
            std::string detail = std::to_string(bad) + " violations over " + std::to_string(tested) + " graphs";
            if (bad > 0)
                detail += "; first " + first_bad;
            check(claim, bad == 0, detail);
        }

      private:
        std::string scope_;
        std::vector<VerifyCheck> & out_;
    };

    inline auto claim_text(const FamilyInstance & f, const std::string & what, int value) -> std::string
    {
        return f.name + ": " + what + " = " + std::to_string(value);
    }

    /// Exact claims checked with the fast engine, and with the oracle when n <= cap.
    inline auto check_exact_claims(CheckSink & sink, const FamilyInstance & f, int cap, const CancelToken & cancel)
        -> void
    {
        for (const auto & [name, claim] : f.claims) {
            if (name == "kappa" || name == "kappa_prime")
                continue;
            auto id = parse_invariant(name);
            auto fast = compute_invariant(f.graph, id, cancel).value;
            bool ok = claim.exact ? fast == claim.value : fast && *fast >= claim.value;
            sink.check(claim_text(f, name + (claim.exact ? "" : " lower bound"), claim.value), ok,
                       "fast engine: " + (fast ? std::to_string(*fast) : std::string("absent")));
            if (f.graph.order() <= cap) {
                auto slow = oracle::oracle_invariant(f.graph, id, cap).value;
                sink.check(claim_text(f, name + " (oracle)", claim.value), slow == fast,
                           "oracle: " + (slow ? std::to_string(*slow) : std::string("absent")));
            }
        }
    }

    inline auto check_irc_coloring(CheckSink & sink, const FamilyInstance & f, int classes, const CancelToken & cancel)
        -> void
    {
        const auto & c = *f.coloring;
        bool proper = c.is_proper(f.graph) && c.is_surjective();
        sink.check(f.name + ": attached colouring is proper with " + std::to_string(classes) + " classes",
                   proper && c.colors() == classes);
        if (! proper)
            return;
        auto verdict = is_irc_coloring(f.graph, c, cancel);
        std::string detail;
        if (! verdict.is_irc)
            detail = "committee " + set_text(*verdict.violating_rc) + " loses every private neighbour of "
                     + f.labels[static_cast<std::size_t>(*verdict.violating_vertex)];
        sink.check(f.name + ": attached colouring is IRC, so chi_irc >= " + std::to_string(classes), verdict.is_irc, detail);
    }

    inline auto is_complete(const Graph & g) -> bool { return g.size() == g.order() * (g.order() - 1) / 2; }

    inline auto scope_full_degree(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        s.over("a full-degree vertex forces chi_i = chi", o.graphs, [&](const Graph & g) -> std::optional<bool> {
            if (g.max_degree() != g.order() - 1)
                return std::nullopt;
            return irredundance_chromatic_number(g, cancel).value == chromatic_number(g, cancel).value;
        });
    }

    inline auto scope_dominating(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        s.over("every minimal dominating set is maximal irredundant", o.graphs, [&](const Graph & g) -> std::optional<bool> {
            auto family = minimal_dominating_sets(g, cancel);
            while (auto d = family.next())
                if (! is_maximal_irredundant(g, *d))
                    return false;
            return true;
        });
        s.over("ir <= gamma", o.graphs, [&](const Graph & g) -> std::optional<bool> {
            return ir_number(g, cancel).value <= gamma_number(g, cancel).value;
        });
    }

    inline auto scope_bounds(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        s.over("max(chi, ir) <= chi_i <= chi + ir - 1", o.graphs, [&](const Graph & g) -> std::optional<bool> {
            return scan_graph(g, ScanMode::bounds, {}, cancel).findings.empty();
        });
        s.over("chi_i = n exactly for complete graphs", o.graphs, [&](const Graph & g) -> std::optional<bool> {
            return (irredundance_chromatic_number(g, cancel).value == g.order()) == is_complete(g);
        });
    }

    inline auto scope_family_a(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        for (auto [n, k] : {std::pair{6, 3}, {8, 3}, {8, 4}}) {
            auto f = gen_family_A(n, k);
            check_exact_claims(s, f, o.oracle_cap, cancel);
            auto clique = VertexSet::prefix(k);
            s.check(f.name + ": clique is maximal irredundant and rainbow",
                    is_maximal_irredundant(f.graph, clique) && f.coloring->is_proper(f.graph) && is_rainbow(*f.coloring, clique));
        }
    }

    inline auto scope_family_z(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        check_exact_claims(s, gen_family_Z(3, 1), o.oracle_cap, cancel);
        auto f = gen_family_Z(3, 2);
        s.check(claim_text(f, "chi", 3), chromatic_number(f.graph, cancel).value == 3);
        auto witness = VertexSet::single(f.index_of("v^1")) | VertexSet::single(f.index_of("v^2"));
        auto ir = ir_verify(f.graph, witness, 2, cancel);
        s.check(claim_text(f, "ir (witness {v^1, v^2}, none smaller)", 2), ir.ok());
        s.check(claim_text(f, "chi_i", 4), irredundance_chromatic_number(f.graph, cancel).value == 4);
        int sets = 0, bad = 0;
        auto family = maximal_irredundant_sets(f.graph, std::nullopt, cancel);
        while (auto r = family.next()) {
            ++sets;
            for (int i = 1; i <= 2; ++i) {
                auto suffix = "^" + std::to_string(i);
                VertexSet pendants;
                for (int j = 1; j <= 3; ++j)
                    pendants.set(f.index_of("p" + std::to_string(j) + suffix));
                if (! r->test(f.index_of("v" + suffix)) && ! pendants.is_subset_of(*r))
                    ++bad;
            }
        }
        s.check(f.name + ": every maximal irredundant set holds v^i or all p_j^i", bad == 0,
                std::to_string(sets) + " sets, " + std::to_string(bad) + " violations");
    }

    inline auto scope_chi_i_two(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        s.over("chi_i = 2, Im1 or Im2, and F membership agree on connected bipartite non-stars", o.graphs,
               [&](const Graph & g) -> std::optional<bool> {
                   auto r = scan_graph(g, ScanMode::characterization, {}, cancel);
                   if (r.skipped)
                       return std::nullopt;
                   return r.findings.empty();
               });
        s.check("im1_example has Property Im1", property_Im1(fixture(FixtureId::im1_example).graph).has_value());
        s.check("im2_example has Property Im2", property_Im2(fixture(FixtureId::im2_example).graph).has_value());
        s.check("two_star_minimal is in F1",
                family_F_membership(fixture(FixtureId::two_star_minimal).graph).kind == CharacterizationKind::F1);
    }

    inline auto scope_family_b(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        for (int n = 2; n <= 7; ++n)
            for (int k = 2; k <= n; ++k) {
                auto f = gen_family_B(n, k);
                s.check(claim_text(f, "chi_i", k), irredundance_chromatic_number(f.graph, cancel).value == k);
                if (n <= std::min(o.oracle_cap, 6))
                    s.check(claim_text(f, "chi_i (oracle)", k),
                            oracle::oracle_invariant(f.graph, Invariant::chi_i, o.oracle_cap).value == k);
            }
    }

    inline auto scope_trees(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        for (int n = 2; n <= o.tree_max_order; ++n) {
            int count = 0, bad = 0;
            for_each_labelled_tree(n, [&](const Graph & t) {
                ++count;
                if (irc_colorability(t, cancel) || irc_obstructions(t, cancel).empty())
                    ++bad;
            });
            s.check("labelled trees on " + std::to_string(n) + " vertices are not IRC-colourable", bad == 0,
                    std::to_string(count) + " trees, " + std::to_string(bad) + " violations");
        }
    }

    inline auto scope_two_same_colour(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        for (int n = 3; n <= 9; n += 2) {
            auto c = gen_basic(BasicKind::cycle, n);
            s.check(c.name + " is not IRC-colourable", ! irc_colorability(c.graph, cancel));
        }
        s.over("IRC colourings give every vertex two same-coloured neighbours", o.graphs,
               [&](const Graph & g) -> std::optional<bool> {
                   auto c = irc_colorability(g, cancel);
                   if (! c)
                       return std::nullopt;
                   bool ok = is_irc_coloring(g, *c, cancel).is_irc && (g.order() == 1 || g.min_degree() >= 2);
                   for (int v = 0; v < g.order(); ++v)
                       ok = ok && (g.degree(v) == 0 || ! is_rainbow(*c, g.neighbours(v)));
                   return ok;
               });
    }

    inline auto scope_clique_private(CheckSink & s, const VerifyOptions &, const CancelToken & cancel) -> void
    {
        for (int q = 3; q <= 6; ++q) {
            std::vector<Edge> edges;
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j)
                    edges.emplace_back(i, j);
            for (int i = 0; i < q; ++i) {
                edges.emplace_back(q + i, i);
                edges.emplace_back(q + i, (i + 1) % q);
            }
            auto g = Graph::from_edge_list(2 * q, edges);
            auto obs = irc_obstructions(g, cancel);
            bool clique = std::any_of(obs.begin(), obs.end(), [](const IrcObstruction & x) {
                return x.kind == IrcObstruction::Kind::clique_without_private;
            });
            s.check("split graph on K_" + std::to_string(q) + " with min degree 2 has a clique obstruction and no IRC colouring",
                    clique && ! irc_colorability(g, cancel));
        }
        for (int n = 2; n <= 6; ++n)
            s.check("K_" + std::to_string(n) + " is not IRC-colourable",
                    ! irc_colorability(gen_basic(BasicKind::complete, n).graph, cancel));
    }

    inline auto scope_cut_vertex(CheckSink & s, const VerifyOptions &, const CancelToken & cancel) -> void
    {
        for (int k : {3, 4}) {
            auto f = gen_irc_family(IrcFamilyKind::cut_vertex, k);
            check_irc_coloring(s, f, 3, cancel);
            auto p = connectivity_profile(f.graph);
            s.check(f.name + ": connected with x as the only cut vertex and no bridge",
                    p.connected && p.cut_vertices == VertexSet::single(0) && p.bridges.empty());
        }
    }

    inline auto scope_bridge(CheckSink & s, const VerifyOptions &, const CancelToken & cancel) -> void
    {
        auto f = gen_irc_family(IrcFamilyKind::bridge, 3, 3);
        check_irc_coloring(s, f, 4, cancel);
        auto p = connectivity_profile(f.graph);
        Edge xy{f.index_of("x"), f.index_of("y")};
        s.check(f.name + ": connected and xy is the only bridge",
                p.connected && p.bridges == std::vector<Edge>{xy});
    }

    inline auto scope_tilde(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        for (int k : {3, 4}) {
            auto f = gen_irc_family(IrcFamilyKind::tilde, k);
            check_irc_coloring(s, f, k, cancel);
            s.check(claim_text(f, "chi", k), chromatic_number(f.graph, cancel).value == k);
            s.skip(claim_text(f, "chi_irc upper bound", k), "exhaustive search out of reach at this order");
        }
        auto c4 = gen_basic(BasicKind::cycle, 4);
        check_exact_claims(s, c4, o.oracle_cap, cancel);
    }

    inline auto scope_gstar(CheckSink & s, const VerifyOptions &, const CancelToken & cancel) -> void
    {
        for (int k : {4, 6}) {
            auto f = gen_irc_family(IrcFamilyKind::gstar, k);
            s.check(f.name + " is bipartite", is_bipartite(f.graph));
            check_irc_coloring(s, f, k, cancel);
        }
    }

    inline auto scope_family_h(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        auto f = fixture(FixtureId::family_h_example);
        auto star = check_family_H_membership(f.graph);
        s.check(f.name + ": some vertex satisfies the two-external-private-neighbour property", star.has_value(),
                star ? "v* = " + f.labels[static_cast<std::size_t>(*star)] : "no vertex qualifies");
        check_irc_coloring(s, f, 3, cancel);
        s.over("family H members are IRC-coloured by ({v*}, side of v* - v*, other side)", o.graphs,
               [&](const Graph & g) -> std::optional<bool> {
                   if (! is_connected(g) || g.order() < 3 || ! is_bipartite(g))
                       return std::nullopt;
                   auto v = check_family_H_membership(g);
                   if (! v)
                       return std::nullopt;
                   auto parts = *bipartition(g);
                   auto mine = parts.first.test(*v) ? parts.first : parts.second;
                   auto other = parts.first.test(*v) ? parts.second : parts.first;
                   mine.reset(*v);
                   if (mine.empty())
                       return std::nullopt;
                   auto c = Coloring::from_classes(g.order(), {VertexSet::single(*v), mine, other});
                   return is_irc_coloring(g, c, cancel).is_irc;
               });
    }

    inline auto scope_dominator_gamma(CheckSink & s, const VerifyOptions & o, const CancelToken & cancel) -> void
    {
        s.over("chi_d = gamma implies IRC-colourable with chi_irc >= gamma", o.graphs,
               [&](const Graph & g) -> std::optional<bool> {
                   int gamma = gamma_number(g, cancel).value;
                   if (dominator_chromatic_number(g, cancel).value != gamma)
                       return std::nullopt;
                   auto r = irc_chromatic_number(g, cancel);
                   return r && r->value >= gamma;
               });
    }

    using ScopeFn = void (*)(CheckSink &, const VerifyOptions &, const CancelToken &);

    inline auto scope_table() -> const std::vector<std::pair<std::string, ScopeFn>> &
    {
        static const std::vector<std::pair<std::string, ScopeFn>> table = {
            {"full-degree-vertex", scope_full_degree},
            {"dominating-irredundant", scope_dominating},
            {"chi-i-bounds", scope_bounds},
            {"family-a", scope_family_a},
            {"family-z", scope_family_z},
            {"chi-i-two", scope_chi_i_two},
            {"family-b", scope_family_b},
            {"trees", scope_trees},
            {"two-same-colour", scope_two_same_colour},
            {"clique-private", scope_clique_private},
            {"cut-vertex", scope_cut_vertex},
            {"bridge", scope_bridge},
            {"tilde", scope_tilde},
            {"gstar", scope_gstar},
            {"family-h", scope_family_h},
            {"dominator-gamma", scope_dominator_gamma},
        };
        return table;
    }

} // namespace detail

inline auto verify_scopes() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & [name, fn] : detail::scope_table())
        out.push_back(name);
    return out;
}

/// Runs one scope, or every scope for "all". A scope cut short by the cancel token reports a skipped check.
inline auto run_verify(std::string_view scope, VerifyOptions opt, const CancelToken & cancel = no_cancel())
    -> std::vector<VerifyCheck>
{
    if (opt.graphs.empty())
        opt.graphs = connected_labelled_graphs(opt.max_order);
    std::vector<VerifyCheck> out;
    bool matched = false;
    for (const auto & [name, fn] : detail::scope_table()) {
        if (scope != "all" && scope != name)
            continue;
        matched = true;
        detail::CheckSink sink(name, out);
        try {
            fn(sink, opt, cancel);
        }
        catch (const Cancelled &) {
            sink.skip("remaining checks", "time budget exhausted");
        }
    }
    if (! matched)
        throw ParameterError("unknown verify scope '" + std::string(scope) + "'");
    return out;
}

} // namespace ircolor
