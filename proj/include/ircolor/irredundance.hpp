#pragma once

#include "ircolor/cancel.hpp"
#include "ircolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace ircolor {

/// pn[v, S] = N[v] - N[S - {v}].
inline auto private_neighbors(const Graph & g, int v, const VertexSet & s) -> VertexSet
{
    check_vertex(g, v);
    check_subset(g, s);
    if (! s.test(v))
        throw PreconditionError("private_neighbors: vertex " + std::to_string(v) + " is not in the set");
    auto rest = s;
    rest.reset(v);
    return g.closed_neighbours(v) - g.closed_neighbours(rest);
}

/// pn[v, S] minus S itself.
inline auto external_private_neighbors(const Graph & g, int v, const VertexSet & s) -> VertexSet
{
    return private_neighbors(g, v, s) - s;
}

namespace detail {

    /**
     * Closed-neighbourhood coverage of a vertex set: once = covered by at
     * least one member, twice = by at least two. For u in S,
     * pn[u, S] = N[u] - twice.
     */
    struct Coverage
    {
        VertexSet once;
        VertexSet twice;

        auto add(const VertexSet & closed) -> void
        {
            twice |= once & closed;
            once |= closed;
        }
    };

    inline auto coverage_of(const Graph & g, const VertexSet & s) -> Coverage
    {
        Coverage c;
        s.for_each([&](int v) { c.add(g.closed_neighbours(v)); });
        return c;
    }

    inline auto irredundant_under(const Graph & g, const VertexSet & s, const VertexSet & twice) -> bool
    {
        bool ok = true;
        s.for_each([&](int u) { ok = ok && ! g.closed_neighbours(u).is_subset_of(twice); });
        return ok;
    }

    /// s is irredundant with coverage c; is s + {v} still irredundant?
    inline auto extension_irredundant(const Graph & g, const VertexSet & s, const Coverage & c, int v) -> bool
    {
        auto nv = g.closed_neighbours(v);
        auto twice = c.twice | (c.once & nv);
        if (nv.is_subset_of(twice))
            return false;
        return irredundant_under(g, s, twice);
    }

    inline auto maximal_given_coverage(const Graph & g, const VertexSet & s, const Coverage & c) -> bool
    {
        for (int v = 0; v < g.order(); ++v)
            if (! s.test(v) && extension_irredundant(g, s, c, v))
                return false;
        return true;
    }

} // namespace detail

/// Every member has a private neighbour; the empty set qualifies vacuously.
inline auto is_irredundant(const Graph & g, const VertexSet & s) -> bool
{
    check_subset(g, s);
    return detail::irredundant_under(g, s, detail::coverage_of(g, s).twice);
}

inline auto is_maximal_irredundant(const Graph & g, const VertexSet & s) -> bool
{
    check_subset(g, s);
    auto c = detail::coverage_of(g, s);
    return detail::irredundant_under(g, s, c.twice) && detail::maximal_given_coverage(g, s, c);
}

/// N[S] = V(G).
inline auto is_dominating(const Graph & g, const VertexSet & s) -> bool
{
    check_subset(g, s);
    return g.closed_neighbours(s) == g.vertices();
}

inline auto is_minimal_dominating(const Graph & g, const VertexSet & s) -> bool
{
    // a dominating set is minimal exactly when every member keeps a private neighbour
    return is_dominating(g, s) && is_irredundant(g, s);
}

/**
 * Single-consumer cursor over a family of vertex sets. Sets come out grouped
 * by size (ascending) and, within one size, in increasing bitmask order.
 *
 * The family is generated from irredundant sets only: irredundance is
 * inherited by subsets, so a depth-limited DFS that adds vertices in
 * increasing index order reaches every irredundant set of a given size
 * exactly once. Both maximal irredundant sets and minimal dominating sets
 * are irredundant, so both families are enumerated this way.
 */
class SetFamilyIterator
{
  public:
    enum class Kind
    {
        maximal_irredundant,
        minimal_dominating
    };

    SetFamilyIterator(const Graph & g, Kind kind, std::optional<int> size_cap = std::nullopt,
                      const CancelToken & cancel = no_cancel())
        : g_(&g), kind_(kind), cap_(size_cap.value_or(g.order())), cancel_(&cancel)
    {
    }

    auto next() -> std::optional<VertexSet>
    {
        while (pos_ >= level_.size()) {
            if (exhausted_ || size_ >= cap_ || size_ >= g_->order())
                return std::nullopt;
            ++size_;
            fill_level();
        }
        return level_[pos_++];
    }

    /// Drains the cursor into a vector.
    auto collect() -> std::vector<VertexSet>
    {
        std::vector<VertexSet> all;
        while (auto s = next())
            all.push_back(*s);
        return all;
    }

  private:
    auto fill_level() -> void
    {
        level_.clear();
        pos_ = 0;
        bool reached = false;
        dfs(VertexSet{}, detail::Coverage{}, 0, reached);
        if (! reached)
            exhausted_ = true;
        std::sort(level_.begin(), level_.end());
    }

    /// Extends the irredundant set s (all members < from) towards size_.
    auto dfs(const VertexSet & s, const detail::Coverage & c, int from, bool & reached) -> void
    {
        cancel_->check();
        int have = s.count();
        if (have == size_) {
            reached = true;
            if (accept(s, c))
                level_.push_back(s);
            return;
        }
        // a dominating irredundant set has no irredundant proper superset
        if (have > 0 && c.once == g_->vertices())
            return;
        int n = g_->order();
        for (int v = from; v <= n - (size_ - have); ++v) {
            if (! detail::extension_irredundant(*g_, s, c, v))
                continue;
            auto t = s;
            t.set(v);
            auto tc = c;
            tc.add(g_->closed_neighbours(v));
            dfs(t, tc, v + 1, reached);
        }
    }

    auto accept(const VertexSet & s, const detail::Coverage & c) const -> bool
    {
        if (kind_ == Kind::minimal_dominating)
            return c.once == g_->vertices();
        return detail::maximal_given_coverage(*g_, s, c);
    }

    const Graph * g_;
    Kind kind_;
    int cap_;
    const CancelToken * cancel_;
    int size_ = 0;
    bool exhausted_ = false;
    std::vector<VertexSet> level_;
    std::size_t pos_ = 0;
};

inline auto maximal_irredundant_sets(const Graph & g, std::optional<int> size_cap = std::nullopt,
                                     const CancelToken & cancel = no_cancel()) -> SetFamilyIterator
{
    return SetFamilyIterator(g, SetFamilyIterator::Kind::maximal_irredundant, size_cap, cancel);
}

inline auto minimal_dominating_sets(const Graph & g, const CancelToken & cancel = no_cancel()) -> SetFamilyIterator
{
    return SetFamilyIterator(g, SetFamilyIterator::Kind::minimal_dominating, std::nullopt, cancel);
}

struct SetNumber
{
    int value = 0;
    VertexSet witness;
};

/// ir(G): the first maximal irredundant set met by the size-ascending enumeration.
inline auto ir_number(const Graph & g, const CancelToken & cancel = no_cancel()) -> SetNumber
{
    if (g.order() == 0)
        throw ParameterError("ir_number is undefined on the empty graph");
    auto family = maximal_irredundant_sets(g, std::nullopt, cancel);
    auto first = family.next();
    // a maximal irredundant set always exists for n >= 1
    return {first->count(), *first};
}

struct IrVerification
{
    bool witness_maximal = false;
    bool witness_size_matches = false;
    bool none_smaller = false;

    [[nodiscard]] auto ok() const -> bool { return witness_maximal && witness_size_matches && none_smaller; }
};

/**
 * Confirms ir(G) = claimed without discovering it: the witness must be a
 * maximal irredundant set of the claimed size, and the size-capped
 * enumeration must find no maximal irredundant set below it.
 */
inline auto ir_verify(const Graph & g, const VertexSet & witness, int claimed,
                      const CancelToken & cancel = no_cancel()) -> IrVerification
{
    IrVerification v;
    v.witness_maximal = is_maximal_irredundant(g, witness);
    v.witness_size_matches = witness.count() == claimed;
    v.none_smaller = claimed <= 1 || ! maximal_irredundant_sets(g, claimed - 1, cancel).next().has_value();
    return v;
}

namespace detail {

    inline auto greedy_dominating_set(const Graph & g) -> VertexSet
    {
        VertexSet chosen, undominated = g.vertices();
        while (undominated.any()) {
            int best = -1, best_gain = -1;
            for (int v = 0; v < g.order(); ++v) {
                int gain = (g.closed_neighbours(v) & undominated).count();
                if (gain > best_gain) {
                    best = v;
                    best_gain = gain;
                }
            }
            chosen.set(best);
            undominated -= g.closed_neighbours(best);
        }
        return chosen;
    }

    /// Is there a set of at most budget vertices dominating `undominated`?
    inline auto dominate(const Graph & g, const VertexSet & undominated, VertexSet & chosen, int budget, int max_cover,
                         const CancelToken & cancel) -> bool
    {
        cancel.check();
        if (undominated.empty())
            return true;
        if (budget == 0 || budget * max_cover < undominated.count())
            return false;
        // branch on the undominated vertex with the fewest dominators
        int pivot = -1, fewest = g.order() + 1;
        undominated.for_each([&](int u) {
            int c = g.closed_neighbours(u).count();
            if (c < fewest) {
                fewest = c;
                pivot = u;
            }
        });
        for (int w : g.closed_neighbours(pivot)) {
            chosen.set(w);
            if (dominate(g, undominated - g.closed_neighbours(w), chosen, budget - 1, max_cover, cancel))
                return true;
            chosen.reset(w);
        }
        return false;
    }

} // namespace detail

/// γ(G) by iterative deepening below a greedy upper bound.
inline auto gamma_number(const Graph & g, const CancelToken & cancel = no_cancel()) -> SetNumber
{
    auto best = detail::greedy_dominating_set(g);
    int max_cover = g.max_degree() + 1;
    for (int k = 0; k < best.count(); ++k) {
        VertexSet chosen;
        if (detail::dominate(g, g.vertices(), chosen, k, max_cover, cancel))
            return {chosen.count(), chosen};
    }
    return {best.count(), best};
}

} // namespace ircolor
