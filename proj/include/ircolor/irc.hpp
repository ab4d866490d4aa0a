#pragma once

#include "ircolor/coloring.hpp"
#include "ircolor/irredundance.hpp"
#include "ircolor/partition_search.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace ircolor {

/// Outcome of checking every rainbow committee (one vertex per class) for irredundance.
struct IrcVerdict
{
    bool is_irc = true;
    std::optional<VertexSet> violating_rc;
    std::optional<int> violating_vertex;
};

namespace detail {

    /// Committee search for one victim: cover N[victim] by picking one vertex from each other class.
    class CommitteeCover
    {
      public:
        CommitteeCover(const Graph & g, const std::vector<VertexSet> & classes, const Coloring & c,
                       const CancelToken & cancel)
            : g_(g), classes_(classes), c_(c), cancel_(cancel)
        {
        }

        auto violation_for(int victim) -> std::optional<VertexSet>
        {
            std::vector<bool> used(classes_.size(), false);
            used[static_cast<std::size_t>(c_.color(victim))] = true;
            VertexSet chosen = VertexSet::single(victim);
            if (cover(g_.closed_neighbours(victim), chosen, used))
                return chosen;
            return std::nullopt;
        }

      private:
        auto cover(const VertexSet & uncovered, VertexSet & chosen, std::vector<bool> & used) -> bool
        {
            cancel_.check();
            if (uncovered.empty()) {
                for (std::size_t c = 0; c < classes_.size(); ++c)
                    if (! used[c])
                        chosen.set(classes_[c].first());
                return true;
            }
            VertexSet open;
            for (std::size_t c = 0; c < classes_.size(); ++c)
                if (! used[c])
                    open |= classes_[c];
            // branch on the uncovered vertex with the fewest usable coverers
            int pivot = -1, fewest = max_vertices + 1;
            uncovered.for_each([&](int w) {
                int options = (g_.closed_neighbours(w) & open).count();
                if (options < fewest) {
                    fewest = options;
                    pivot = w;
                }
            });
            if (fewest == 0)
                return false;
            for (int u : g_.closed_neighbours(pivot) & open) {
                auto cls = static_cast<std::size_t>(c_.color(u));
                used[cls] = true;
                chosen.set(u);
                if (cover(uncovered - g_.closed_neighbours(u), chosen, used))
                    return true;
                chosen.reset(u);
                used[cls] = false;
            }
            return false;
        }

        const Graph & g_;
        const std::vector<VertexSet> & classes_;
        const Coloring & c_;
        const CancelToken & cancel_;
    };

    inline auto check_coloring_input(const Graph & g, const Coloring & c) -> void
    {
        if (c.order() != g.order())
            throw PreconditionError("colouring has " + std::to_string(c.order()) + " vertices, graph has "
                                    + std::to_string(g.order()));
        if (! c.is_proper(g))
            throw PreconditionError("colouring is not proper");
        if (! c.is_surjective())
            throw PreconditionError("colouring leaves a colour unused");
    }

    /// A vertex with at least one neighbour whose neighbours all differ in colour loses every private neighbour.
    inline auto rainbow_neighbourhood(const Graph & g, const Coloring & c, int v) -> bool
    {
        return g.degree(v) > 0 && is_rainbow(c, g.neighbours(v));
    }

} // namespace detail

/**
 * Decides whether every rainbow committee of c is irredundant. A violation
 * is a committee RC and a member v with N[v] covered by N[RC - v]; the
 * search tries victims by ascending degree and, for each, covers N[v]
 * using at most one vertex from every other class.
 */
inline auto is_irc_coloring(const Graph & g, const Coloring & c, const CancelToken & cancel = no_cancel()) -> IrcVerdict
{
    detail::check_coloring_input(g, c);
    auto classes = c.classes();

    std::vector<int> victims(static_cast<std::size_t>(g.order()));
    std::iota(victims.begin(), victims.end(), 0);
    std::stable_sort(victims.begin(), victims.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });

    for (int v : victims)
        if (detail::rainbow_neighbourhood(g, c, v)) {
            auto rc = g.closed_neighbours(v);
            for (std::size_t col = 0; col < classes.size(); ++col)
                if (! classes[col].intersects(rc))
                    rc.set(classes[col].first());
            return {false, rc, v};
        }

    detail::CommitteeCover search(g, classes, c, cancel);
    for (int v : victims)
        if (g.degree(v) > 0)
            if (auto rc = search.violation_for(v))
                return {false, *rc, v};
    return {};
}

/// All maximal cliques, Bron–Kerbosch with Tomita pivoting.
inline auto maximal_cliques(const Graph & g, const CancelToken & cancel = no_cancel()) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    auto expand = [&](auto & self, VertexSet r, VertexSet p, VertexSet x) -> void {
        cancel.check();
        if (p.empty()) {
            if (x.empty())
                out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        (p | x).for_each([&](int u) {
            int c = (p & g.neighbours(u)).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        for (int v : p - g.neighbours(pivot)) {
            auto rv = r;
            rv.set(v);
            self(self, rv, p & g.neighbours(v), x & g.neighbours(v));
            p.reset(v);
            x.set(v);
        }
    };
    if (g.order() > 0)
        expand(expand, VertexSet{}, g.vertices(), VertexSet{});
    std::sort(out.begin(), out.end());
    return out;
}

struct IrcObstruction
{
    enum class Kind
    {
        pendant_vertex,
        clique_without_private
    };
    Kind kind;
    int vertex = -1;
    /// The offending maximal clique; empty for pendant obstructions.
    VertexSet clique;
};

/**
 * Known certificates that no IRC colouring exists: a vertex of degree
 * exactly 1, or a maximal clique Q with a member v whose pn[v, Q] is empty.
 * Isolated vertices keep themselves as private neighbour in every committee
 * and are not obstructions. An empty result proves nothing.
 */
inline auto irc_obstructions(const Graph & g, const CancelToken & cancel = no_cancel()) -> std::vector<IrcObstruction>
{
    std::vector<IrcObstruction> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            out.push_back({IrcObstruction::Kind::pendant_vertex, v, {}});
    for (const auto & q : maximal_cliques(g, cancel))
        for (int v : q)
            if (private_neighbors(g, v, q).empty()) {
                out.push_back({IrcObstruction::Kind::clique_without_private, v, q});
                break;
            }
    return out;
}

namespace detail {

    /// Searches proper k-colourings passing the two-same-coloured-neighbours filter for an IRC one.
    inline auto irc_search(const Graph & g, int k, const CancelToken & cancel) -> std::optional<Coloring>
    {
        int n = g.order();
        std::vector<std::vector<int>> completes(static_cast<std::size_t>(n) + 1);
        for (int v = 0; v < n; ++v) {
            int l = g.neighbours(v).any() ? std::max(v, g.neighbours(v).last()) : v;
            if (g.degree(v) > 0)
                completes[static_cast<std::size_t>(l) + 1].push_back(v);
        }
        std::optional<Coloring> found;
        auto prune = [&](const PartialPartition & st) {
            // vertices whose neighbourhood just became fully coloured
            for (int v : completes[static_cast<std::size_t>(st.assigned)]) {
                std::vector<bool> seen(static_cast<std::size_t>(k), false);
                bool repeat = false;
                for (int u : g.neighbours(v)) {
                    auto col = static_cast<std::size_t>(st.color_of[static_cast<std::size_t>(u)]);
                    repeat = repeat || seen[col];
                    seen[col] = true;
                }
                if (! repeat)
                    return false;
            }
            return true;
        };
        auto visit = [&](const PartialPartition & st) {
            auto c = to_coloring(st);
            if (! is_irc_coloring(g, c, cancel).is_irc)
                return false;
            found = c;
            return true;
        };
        search_proper_partitions(g, k, prune, visit, cancel);
        return found;
    }

} // namespace detail

/// An IRC colouring with exactly k colours, if one exists.
inline auto irc_coloring_with_colors(const Graph & g, int k, const CancelToken & cancel = no_cancel())
    -> std::optional<Coloring>
{
    if (k < 1 || k > g.order())
        return std::nullopt;
    return detail::irc_search(g, k, cancel);
}

/// Some IRC colouring (fewest colours first, from χ upwards), or absent when none exists.
inline auto irc_colorability(const Graph & g, const CancelToken & cancel = no_cancel()) -> std::optional<Coloring>
{
    if (g.order() == 0 || ! irc_obstructions(g, cancel).empty())
        return std::nullopt;
    int chi = chromatic_number(g, cancel).value;
    for (int k = chi; k <= g.order(); ++k)
        if (auto c = detail::irc_search(g, k, cancel))
            return c;
    return std::nullopt;
}

/**
 * χ_irc(G): the largest k with an IRC k-colouring, searched from k = n
 * down to χ(G). The filter discards k = n at once whenever G has an edge.
 */
inline auto irc_chromatic_number(const Graph & g, const CancelToken & cancel = no_cancel())
    -> std::optional<ColoringNumber>
{
    if (g.order() == 0 || ! irc_obstructions(g, cancel).empty())
        return std::nullopt;
    int chi = chromatic_number(g, cancel).value;
    for (int k = g.order(); k >= chi; --k)
        if (auto c = detail::irc_search(g, k, cancel))
            return ColoringNumber{k, *c};
    return std::nullopt;
}

} // namespace ircolor
