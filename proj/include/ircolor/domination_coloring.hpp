#pragma once

#include "ircolor/coloring.hpp"
#include "ircolor/irredundance.hpp"
#include "ircolor/partition_search.hpp"

#include <optional>

namespace ircolor {

/// A proper colouring together with a maximal irredundant set it makes rainbow.
struct IrredundanceColoringCert
{
    Coloring coloring;
    VertexSet rainbow_set;
};

/// Proper, rainbow_set maximal irredundant, and rainbow_set colourful.
inline auto validate(const Graph & g, const IrredundanceColoringCert & cert) -> bool
{
    return cert.coloring.is_surjective() && cert.coloring.is_proper(g) && is_maximal_irredundant(g, cert.rainbow_set)
           && is_rainbow(cert.coloring, cert.rainbow_set);
}

struct RainbowSetColoring
{
    int value = 0;
    IrredundanceColoringCert cert;
};

namespace detail {

    /**
     * min over candidate sets R of χ(G + clique on R). A proper colouring of G
     * makes R rainbow exactly when it is proper on G + clique(R), so this is
     * the least number of colours for which some candidate can be rainbow.
     * Candidates arrive in ascending size, so the scan stops once |R|
     * reaches the best value found, or when the value hits χ(G).
     */
    inline auto min_rainbow_chromatic(const Graph & g, SetFamilyIterator family, const CancelToken & cancel)
        -> std::optional<RainbowSetColoring>
    {
        int chi = chromatic_number(g, cancel).value;
        std::optional<RainbowSetColoring> best;
        while (auto r = family.next()) {
            int size = r->count();
            if (best && size >= best->value)
                break;
            int limit = best ? best->value - 1 : g.order();
            auto h = g.with_clique(*r);
            if (auto res = chromatic_number_at_most(h, limit, std::max(chi, size), cancel)) {
                best = RainbowSetColoring{res->value, {res->witness, *r}};
                if (best->value == chi)
                    break;
            }
        }
        return best;
    }

} // namespace detail

/// χ_i(G): fewest colours in a proper colouring that makes some maximal irredundant set rainbow.
inline auto irredundance_chromatic_number(const Graph & g, const CancelToken & cancel = no_cancel()) -> RainbowSetColoring
{
    if (g.order() == 0)
        throw ParameterError("irredundance_chromatic_number needs n >= 1");
    return *detail::min_rainbow_chromatic(g, maximal_irredundant_sets(g, std::nullopt, cancel), cancel);
}

/**
 * χ_γ(G). Minimising over minimal dominating sets suffices: every
 * dominating set contains a minimal one, and subsets of rainbow sets are
 * rainbow. The certificate's rainbow_set is that minimal dominating set.
 */
inline auto gamma_chromatic_number(const Graph & g, const CancelToken & cancel = no_cancel()) -> RainbowSetColoring
{
    if (g.order() == 0)
        throw ParameterError("gamma_chromatic_number needs n >= 1");
    return *detail::min_rainbow_chromatic(g, minimal_dominating_sets(g, cancel), cancel);
}

/// v dominates class c: c is {v}, or every member of c is adjacent to v.
inline auto dominates_class(const Graph & g, int v, const VertexSet & cls) -> bool
{
    return cls == VertexSet::single(v) || (cls.any() && cls.is_subset_of(g.neighbours(v)));
}

/// v anti-dominates class c: c does not contain v and has no neighbour of v.
inline auto anti_dominates_class(const Graph & g, int v, const VertexSet & cls) -> bool
{
    return cls.any() && ! cls.test(v) && ! cls.intersects(g.neighbours(v));
}

inline auto is_dominator_coloring(const Graph & g, const Coloring & c) -> bool
{
    if (! c.is_proper(g) || ! c.is_surjective())
        return false;
    auto classes = c.classes();
    for (int v = 0; v < g.order(); ++v)
        if (std::none_of(classes.begin(), classes.end(), [&](auto & cls) { return dominates_class(g, v, cls); }))
            return false;
    return true;
}

inline auto is_global_dominator_coloring(const Graph & g, const Coloring & c) -> bool
{
    if (! is_dominator_coloring(g, c))
        return false;
    auto classes = c.classes();
    for (int v = 0; v < g.order(); ++v)
        if (std::none_of(classes.begin(), classes.end(), [&](auto & cls) { return anti_dominates_class(g, v, cls); }))
            return false;
    return true;
}

namespace detail {

    /// Can v still end up dominating some class? Classes only grow, new ones need free colours.
    inline auto domination_alive(const Graph & g, const PartialPartition & st, int v, const VertexSet & unassigned) -> bool
    {
        for (int c = 0; c < st.used; ++c)
            if (dominates_class(g, v, st.classes[static_cast<std::size_t>(c)]))
                return true;
        return st.used < st.k && (unassigned.intersects(g.neighbours(v)) || unassigned.test(v));
    }

    inline auto anti_domination_alive(const Graph & g, const PartialPartition & st, int v, const VertexSet & unassigned)
        -> bool
    {
        for (int c = 0; c < st.used; ++c)
            if (anti_dominates_class(g, v, st.classes[static_cast<std::size_t>(c)]))
                return true;
        auto others = unassigned - g.neighbours(v);
        others.reset(v);
        return st.used < st.k && others.any();
    }

    inline auto dominator_search(const Graph & g, bool global, int from_k, const CancelToken & cancel)
        -> std::optional<ColoringNumber>
    {
        int n = g.order();
        for (int k = std::max(from_k, 1); k <= n; ++k) {
            std::optional<Coloring> found;
            auto prune = [&](const PartialPartition & st) {
                auto unassigned = g.vertices() - VertexSet::prefix(st.assigned);
                for (int v = 0; v < n; ++v) {
                    if (! domination_alive(g, st, v, unassigned))
                        return false;
                    if (global && ! anti_domination_alive(g, st, v, unassigned))
                        return false;
                }
                return true;
            };
            auto visit = [&](const PartialPartition & st) {
                auto c = to_coloring(st);
                if (global ? ! is_global_dominator_coloring(g, c) : ! is_dominator_coloring(g, c))
                    return false;
                found = c;
                return true;
            };
            if (search_proper_partitions(g, k, prune, visit, cancel))
                return ColoringNumber{k, *found};
        }
        return std::nullopt;
    }

} // namespace detail

/// χ_d(G): fewest colours in a proper colouring where every vertex dominates a class.
inline auto dominator_chromatic_number(const Graph & g, const CancelToken & cancel = no_cancel()) -> ColoringNumber
{
    if (g.order() == 0)
        throw ParameterError("dominator_chromatic_number needs n >= 1");
    int chi = chromatic_number(g, cancel).value;
    // the all-singletons colouring is always a dominator colouring
    return *detail::dominator_search(g, false, chi, cancel);
}

/**
 * χ_gd(G): fewest colours in a dominator colouring where every vertex also
 * anti-dominates some class other than its own. Absent when no such
 * colouring exists, which is exactly when G has a vertex adjacent to all
 * others.
 */
inline auto global_dominator_chromatic_number(const Graph & g, const CancelToken & cancel = no_cancel())
    -> std::optional<ColoringNumber>
{
    if (g.order() < 2)
        throw ParameterError("global_dominator_chromatic_number needs n >= 2");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            return std::nullopt;
    int chi = chromatic_number(g, cancel).value;
    return detail::dominator_search(g, true, chi, cancel);
}

} // namespace ircolor
