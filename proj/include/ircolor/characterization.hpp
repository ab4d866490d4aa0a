#pragma once

#include "ircolor/graph.hpp"

#include <optional>
#include <string>

namespace ircolor {

enum class CharacterizationKind
{
    Im1,
    Im2,
    F1,
    F2,
    F3,
    star,
    none
};

inline auto to_string(CharacterizationKind k) -> std::string
{
    switch (k) {
    case CharacterizationKind::Im1: return "Im1";
    case CharacterizationKind::Im2: return "Im2";
    case CharacterizationKind::F1: return "F1";
    case CharacterizationKind::F2: return "F2";
    case CharacterizationKind::F3: return "F3";
    case CharacterizationKind::star: return "star";
    case CharacterizationKind::none: return "none";
    }
    return "none";
}

/// v1 lies on the first side and v2 on the second; x is the second star centre of an F1 witness.
struct CharacterizationWitness
{
    CharacterizationKind kind = CharacterizationKind::none;
    std::optional<int> v1;
    std::optional<int> v2;
    std::optional<int> x;
};

namespace detail {

    inline auto require_bipartite(const Graph & g, const char * who) -> Bipartition
    {
        auto parts = bipartition(g);
        if (! parts)
            throw PreconditionError(std::string(who) + " needs a bipartite graph");
        return *parts;
    }

    inline auto side_of(const Bipartition & p, int v) -> const VertexSet &
    {
        return p.first.test(v) ? p.first : p.second;
    }

    inline auto other_side(const Bipartition & p, int v) -> const VertexSet &
    {
        return p.first.test(v) ? p.second : p.first;
    }

    /// Every vertex of `from` is adjacent to every vertex of `to`.
    inline auto fully_joined(const Graph & g, const VertexSet & from, const VertexSet & to) -> bool
    {
        bool ok = true;
        from.for_each([&](int a) { ok = ok && to.is_subset_of(g.neighbours(a)); });
        return ok;
    }

    /// Condition (3) at vi: each neighbour x is pendant, has N(x) inside N(vj), or has N(x) equal to vi's side.
    inline auto neighbour_trichotomy(const Graph & g, const Bipartition & p, int vi, int vj) -> bool
    {
        if (g.degree(vi) < 3)
            return true;
        bool ok = true;
        g.neighbours(vi).for_each([&](int x) {
            auto nx = g.neighbours(x);
            ok = ok && (nx.count() == 1 || nx.is_subset_of(g.neighbours(vj)) || nx == side_of(p, vi));
        });
        return ok;
    }

    inline auto im1_holds(const Graph & g, const Bipartition & p, int v1, int v2) -> bool
    {
        if (! g.adjacent(v1, v2) || g.degree(v1) < 2 || g.degree(v2) < 2)
            return false;
        auto n1 = g.neighbours(v1), n2 = g.neighbours(v2);
        auto n2_rest = n2, n1_rest = n1;
        n2_rest.reset(v1);
        n1_rest.reset(v2);
        return fully_joined(g, other_side(p, v1) - n1, n2_rest) && fully_joined(g, side_of(p, v1) - n2, n1_rest)
               && neighbour_trichotomy(g, p, v1, v2) && neighbour_trichotomy(g, p, v2, v1);
    }

    inline auto im2_holds(const Graph & g, const Bipartition & p, int v1, int v2) -> bool
    {
        if (g.adjacent(v1, v2) || ! other_side(p, v1).test(v2))
            return false;
        auto rest2 = other_side(p, v1), rest1 = side_of(p, v1);
        rest2.reset(v2);
        rest1.reset(v1);
        return g.neighbours(v1) == rest2 && g.neighbours(v2) == rest1;
    }

    inline auto f2_holds(const Graph & g, const Bipartition & p, int v1, int v2) -> bool
    {
        return other_side(p, v1).test(v2) && g.neighbours(v1) == other_side(p, v1) && g.neighbours(v2) == side_of(p, v1);
    }

    /// The F1 pattern with v2 of degree 2 between v1 and x.
    inline auto f1_holds(const Graph & g, int v1, int v2, int x) -> bool
    {
        if (g.degree(v2) != 2 || ! g.adjacent(v2, v1) || ! g.adjacent(v2, x) || v1 == x)
            return false;
        if (g.degree(v1) < 2 || g.degree(x) < 2)
            return false;
        auto a = VertexSet::single(v1), b = VertexSet::single(x), ab = a | b;
        bool ok = true;
        for (int w = 0; w < g.order() && ok; ++w) {
            if (w == v1 || w == v2 || w == x)
                continue;
            auto nw = g.neighbours(w);
            ok = nw == a || nw == ab || nw == b;
        }
        return ok;
    }

    inline auto is_star(const Graph & g) -> std::optional<int>
    {
        int n = g.order();
        if (n < 2 || g.size() != n - 1)
            return std::nullopt;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == n - 1)
                return v;
        return std::nullopt;
    }

    template <typename Test>
    auto first_cross_pair(const Bipartition & p, Test test) -> std::optional<std::pair<int, int>>
    {
        std::optional<std::pair<int, int>> hit;
        p.first.for_each([&](int a) {
            if (hit)
                return;
            p.second.for_each([&](int b) {
                if (! hit && test(a, b))
                    hit = std::pair{a, b};
            });
        });
        return hit;
    }

} // namespace detail

/// Property Im1: an adjacent cross pair meeting conditions (1) to (3); the first pair in (v1, v2) order.
inline auto property_Im1(const Graph & g) -> std::optional<CharacterizationWitness>
{
    auto p = detail::require_bipartite(g, "property_Im1");
    if (auto hit = detail::first_cross_pair(p, [&](int a, int b) { return detail::im1_holds(g, p, a, b); }))
        return CharacterizationWitness{CharacterizationKind::Im1, hit->first, hit->second, std::nullopt};
    return std::nullopt;
}

/// Property Im2: non-adjacent v1, v2 with N(v1) = V2 - {v2} and N(v2) = V1 - {v1}.
inline auto property_Im2(const Graph & g) -> std::optional<CharacterizationWitness>
{
    auto p = detail::require_bipartite(g, "property_Im2");
    if (auto hit = detail::first_cross_pair(p, [&](int a, int b) { return detail::im2_holds(g, p, a, b); }))
        return CharacterizationWitness{CharacterizationKind::Im2, hit->first, hit->second, std::nullopt};
    return std::nullopt;
}

/**
 * Classifies a bipartite graph without isolated vertices, trying star, F2,
 * F1, F3 in that order. F1 is the two-star graph joined through a degree-2
 * vertex v2, optionally with neighbours of v1 also joined to x; the degree
 * thresholds deg(v1), deg(x) >= 2 are measured in g.
 */
inline auto family_F_membership(const Graph & g) -> CharacterizationWitness
{
    auto p = detail::require_bipartite(g, "family_F_membership");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError("family_F_membership needs a graph without isolated vertices");
    if (auto c = detail::is_star(g))
        return {CharacterizationKind::star, *c, std::nullopt, std::nullopt};
    if (auto hit = detail::first_cross_pair(p, [&](int a, int b) { return detail::f2_holds(g, p, a, b); }))
        return {CharacterizationKind::F2, hit->first, hit->second, std::nullopt};
    for (int v2 = 0; v2 < g.order(); ++v2) {
        if (g.degree(v2) != 2)
            continue;
        int a = g.neighbours(v2).first(), b = g.neighbours(v2).last();
        for (auto [v1, x] : {std::pair{a, b}, std::pair{b, a}})
            if (detail::f1_holds(g, v1, v2, x))
                return {CharacterizationKind::F1, v1, v2, x};
    }
    if (auto hit = detail::first_cross_pair(p, [&](int a, int b) { return detail::im2_holds(g, p, a, b); }))
        return {CharacterizationKind::F3, hit->first, hit->second, std::nullopt};
    return {};
}

/// Re-checks that the witness vertices satisfy the named condition.
inline auto validate(const Graph & g, const CharacterizationWitness & w) -> bool
{
    auto p = bipartition(g);
    if (! p)
        return false;
    auto in_range = [&](const std::optional<int> & v) { return v && *v >= 0 && *v < g.order(); };
    switch (w.kind) {
    case CharacterizationKind::none: return true;
    case CharacterizationKind::star: return in_range(w.v1) && detail::is_star(g) && g.degree(*w.v1) == g.order() - 1;
    case CharacterizationKind::F1: return in_range(w.v1) && in_range(w.v2) && in_range(w.x) && detail::f1_holds(g, *w.v1, *w.v2, *w.x);
    default: break;
    }
    if (! in_range(w.v1) || ! in_range(w.v2))
        return false;
    switch (w.kind) {
    case CharacterizationKind::Im1: return detail::im1_holds(g, *p, *w.v1, *w.v2);
    case CharacterizationKind::F2: return detail::f2_holds(g, *p, *w.v1, *w.v2);
    default: return detail::im2_holds(g, *p, *w.v1, *w.v2);
    }
}

} // namespace ircolor
