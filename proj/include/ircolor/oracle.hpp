#pragma once

#include "ircolor/coloring.hpp"
#include "ircolor/errors.hpp"
#include "ircolor/graph.hpp"
#include "ircolor/invariant.hpp"

#include <optional>
#include <vector>

/**
 * Brute-force reference implementations. Everything here is computed from
 * the definitions over plain subset and partition enumeration and shares
 * no search code with the fast solvers.
 */
namespace ircolor::oracle {

inline constexpr int default_cap = 8;

/**
 * Cursor over the proper colourings of g with exactly k colours, one per
 * unordered partition: restricted-growth strings where vertex i takes a
 * class at most one above the largest class among vertices 0..i-1.
 */
class PartitionCursor
{
  public:
    PartitionCursor(const Graph & g, int k) : g_(&g), k_(k), n_(g.order())
    {
        if (k < 1 || k > n_)
            throw ParameterError("independent_partitions needs 1 <= k <= n, got k=" + std::to_string(k)
                                 + ", n=" + std::to_string(n_));
        a_.assign(static_cast<std::size_t>(n_), -1);
    }

    auto next() -> std::optional<Coloring>
    {
        if (done_)
            return std::nullopt;
        int i = started_ ? n_ - 1 : 0;
        started_ = true;
        while (i >= 0) {
            auto & ai = a_[static_cast<std::size_t>(i)];
            ++ai;
            int top = -1;
            for (int j = 0; j < i; ++j)
                top = std::max(top, a_[static_cast<std::size_t>(j)]);
            if (ai > top + 1 || ai >= k_) {
                ai = -1;
                --i;
                continue;
            }
            if (! fits(i))
                continue;
            if (i == n_ - 1) {
                if (std::max(top, ai) == k_ - 1)
                    return Coloring(a_, k_);
                continue;
            }
            ++i;
        }
        done_ = true;
        return std::nullopt;
    }

  private:
    /// Vertex i shares no class with an earlier neighbour.
    auto fits(int i) const -> bool
    {
        for (int j = 0; j < i; ++j)
            if (g_->adjacent(i, j) && a_[static_cast<std::size_t>(j)] == a_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    const Graph * g_;
    int k_;
    int n_;
    std::vector<int> a_;
    bool started_ = false;
    bool done_ = false;
};

inline auto independent_partitions(const Graph & g, int k) -> PartitionCursor { return PartitionCursor(g, k); }

/// All proper colourings with exactly k colours.
inline auto all_partitions(const Graph & g, int k) -> std::vector<Coloring>
{
    std::vector<Coloring> out;
    auto cursor = independent_partitions(g, k);
    while (auto c = cursor.next())
        out.push_back(*c);
    return out;
}

namespace naive {

    inline auto closed_nbhd(const Graph & g, int v) -> VertexSet
    {
        VertexSet s;
        s.set(v);
        for (int u = 0; u < g.order(); ++u)
            if (g.adjacent(u, v))
                s.set(u);
        return s;
    }

    inline auto closed_nbhd(const Graph & g, const VertexSet & s) -> VertexSet
    {
        VertexSet r;
        for (int v = 0; v < g.order(); ++v)
            if (s.test(v))
                r |= closed_nbhd(g, v);
        return r;
    }

    inline auto irredundant(const Graph & g, const VertexSet & s) -> bool
    {
        for (int v = 0; v < g.order(); ++v) {
            if (! s.test(v))
                continue;
            auto rest = s;
            rest.reset(v);
            if ((closed_nbhd(g, v) - closed_nbhd(g, rest)).empty())
                return false;
        }
        return true;
    }

    inline auto maximal_irredundant(const Graph & g, const VertexSet & s) -> bool
    {
        if (! irredundant(g, s))
            return false;
        for (int v = 0; v < g.order(); ++v) {
            if (s.test(v))
                continue;
            auto t = s;
            t.set(v);
            if (irredundant(g, t))
                return false;
        }
        return true;
    }

    inline auto dominating(const Graph & g, const VertexSet & s) -> bool
    {
        return closed_nbhd(g, s) == VertexSet::prefix(g.order());
    }

    inline auto subsets(const Graph & g) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        int n = g.order();
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1UL)
                    s.set(v);
            out.push_back(s);
        }
        return out;
    }

    inline auto rainbow(const Coloring & c, const VertexSet & s) -> bool
    {
        for (int u = 0; u < c.order(); ++u)
            for (int v = u + 1; v < c.order(); ++v)
                if (s.test(u) && s.test(v) && c.color(u) == c.color(v))
                    return false;
        return true;
    }

    inline auto class_members(const Coloring & c, int col) -> std::vector<int>
    {
        std::vector<int> out;
        for (int v = 0; v < c.order(); ++v)
            if (c.color(v) == col)
                out.push_back(v);
        return out;
    }

    inline auto dominates(const Graph & g, const Coloring & c, int v, int col) -> bool
    {
        auto members = class_members(c, col);
        if (members.size() == 1 && members[0] == v)
            return true;
        for (int u : members)
            if (! g.adjacent(u, v))
                return false;
        return true;
    }

    inline auto anti_dominates(const Graph & g, const Coloring & c, int v, int col) -> bool
    {
        for (int u : class_members(c, col))
            if (u == v || g.adjacent(u, v))
                return false;
        return true;
    }

    inline auto every_vertex_has_class(const Graph & g, const Coloring & c, bool anti) -> bool
    {
        for (int v = 0; v < g.order(); ++v) {
            bool found = false;
            for (int col = 0; col < c.colors() && ! found; ++col)
                found = anti ? anti_dominates(g, c, v, col) : dominates(g, c, v, col);
            if (! found)
                return false;
        }
        return true;
    }

    /// Every choice of one vertex per class is irredundant; full cartesian product.
    inline auto all_committees_irredundant(const Graph & g, const Coloring & c) -> bool
    {
        std::vector<std::vector<int>> classes;
        for (int col = 0; col < c.colors(); ++col)
            classes.push_back(class_members(c, col));
        std::vector<std::size_t> pick(classes.size(), 0);
        while (true) {
            VertexSet rc;
            for (std::size_t i = 0; i < classes.size(); ++i)
                rc.set(classes[i][pick[i]]);
            if (! irredundant(g, rc))
                return false;
            std::size_t i = 0;
            while (i < classes.size() && ++pick[i] == classes[i].size())
                pick[i++] = 0;
            if (i == classes.size())
                return true;
        }
    }

} // namespace naive

/// Recomputes an invariant from its definition. Throws SizeCapError when n exceeds cap.
inline auto oracle_invariant(const Graph & g, Invariant which, int cap = default_cap) -> InvariantResult
{
    int n = g.order();
    if (n > cap)
        throw SizeCapError("oracle limited to n <= " + std::to_string(cap) + ", got n=" + std::to_string(n));
    if (! applicable(which, g))
        throw ParameterError(to_string(which) + " is undefined for n=" + std::to_string(n));

    auto subsets = naive::subsets(g);
    auto smallest_set = [&](auto pred) -> InvariantResult {
        std::optional<VertexSet> best;
        for (const auto & s : subsets)
            if (pred(s) && (! best || s.count() < best->count()))
                best = s;
        return {best->count(), std::nullopt, best};
    };
    // colourings grouped by number of colours, k = 1..n
    auto smallest_k = [&](auto pred) -> InvariantResult {
        for (int k = 1; k <= n; ++k)
            for (const auto & c : all_partitions(g, k))
                if (pred(c))
                    return {k, c, std::nullopt};
        return {};
    };

    switch (which) {
    case Invariant::chi:
        if (n == 0)
            return {0, Coloring{}, std::nullopt};
        return smallest_k([](const Coloring &) { return true; });
    case Invariant::ir: return smallest_set([&](const VertexSet & s) { return naive::maximal_irredundant(g, s); });
    case Invariant::gamma: return smallest_set([&](const VertexSet & s) { return naive::dominating(g, s); });
    case Invariant::chi_i:
    case Invariant::chi_gamma: {
        std::vector<VertexSet> candidates;
        for (const auto & s : subsets)
            if (which == Invariant::chi_i ? naive::maximal_irredundant(g, s) : naive::dominating(g, s))
                candidates.push_back(s);
        for (int k = 1; k <= n; ++k)
            for (const auto & c : all_partitions(g, k))
                for (const auto & s : candidates)
                    if (naive::rainbow(c, s))
                        return {k, c, s};
        return {};
    }
    case Invariant::chi_d:
        return smallest_k([&](const Coloring & c) { return naive::every_vertex_has_class(g, c, false); });
    case Invariant::chi_gd:
        return smallest_k([&](const Coloring & c) {
            return naive::every_vertex_has_class(g, c, false) && naive::every_vertex_has_class(g, c, true);
        });
    case Invariant::irc_colorable: {
        auto r = smallest_k([&](const Coloring & c) { return naive::all_committees_irredundant(g, c); });
        return {r.value ? 1 : 0, r.coloring, std::nullopt};
    }
    case Invariant::chi_irc:
        for (int k = n; k >= 1; --k)
            for (const auto & c : all_partitions(g, k))
                if (naive::all_committees_irredundant(g, c))
                    return {k, c, std::nullopt};
        return {};
    }
    return {};
}

} // namespace ircolor::oracle
