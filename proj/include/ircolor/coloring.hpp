#pragma once

#include "ircolor/cancel.hpp"
#include "ircolor/graph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace ircolor {

/**
 * An assignment of colour ids to vertices. Properness and surjectivity are
 * checked predicates rather than invariants, so search code can hold
 * partial or improper states in the same type.
 */
class Coloring
{
  public:
    Coloring() = default;

    /// k defaults to 1 + the largest colour used.
    explicit Coloring(std::vector<int> color_of, std::optional<int> k = std::nullopt) : color_of_(std::move(color_of))
    {
        int top = -1;
        for (int c : color_of_) {
            if (c < 0)
                throw ParameterError("colour ids must be non-negative");
            top = std::max(top, c);
        }
        k_ = k.value_or(top + 1);
        if (top >= k_)
            throw ParameterError("colour id " + std::to_string(top) + " out of range for k=" + std::to_string(k_));
    }

    /// Builds the colouring whose i-th class is classes[i].
    static auto from_classes(int n, const std::vector<VertexSet> & classes) -> Coloring
    {
        std::vector<int> colors(static_cast<std::size_t>(n), -1);
        for (std::size_t c = 0; c < classes.size(); ++c)
            classes[c].for_each([&](int v) {
                if (v >= n || colors[static_cast<std::size_t>(v)] != -1)
                    throw ParameterError("classes must partition 0.." + std::to_string(n - 1));
                colors[static_cast<std::size_t>(v)] = static_cast<int>(c);
            });
        if (std::find(colors.begin(), colors.end(), -1) != colors.end())
            throw ParameterError("classes must cover 0.." + std::to_string(n - 1));
        return Coloring(std::move(colors), static_cast<int>(classes.size()));
    }

    [[nodiscard]] auto order() const -> int { return static_cast<int>(color_of_.size()); }
    [[nodiscard]] auto colors() const -> int { return k_; }
    [[nodiscard]] auto color(int v) const -> int { return color_of_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] auto color_of() const -> const std::vector<int> & { return color_of_; }

    [[nodiscard]] auto classes() const -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result(static_cast<std::size_t>(k_));
        for (int v = 0; v < order(); ++v)
            result[static_cast<std::size_t>(color(v))].set(v);
        return result;
    }

    [[nodiscard]] auto is_surjective() const -> bool
    {
        std::vector<bool> seen(static_cast<std::size_t>(k_), false);
        for (int c : color_of_)
            seen[static_cast<std::size_t>(c)] = true;
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    [[nodiscard]] auto is_proper(const Graph & g) const -> bool
    {
        if (g.order() != order())
            return false;
        for (auto [u, v] : g.edges())
            if (color(u) == color(v))
                return false;
        return true;
    }

    /// Colours renamed so that first occurrences appear in increasing id order.
    [[nodiscard]] auto canonical() const -> Coloring
    {
        std::vector<int> rename(static_cast<std::size_t>(k_), -1), out;
        int next = 0;
        for (int c : color_of_) {
            auto & r = rename[static_cast<std::size_t>(c)];
            if (r == -1)
                r = next++;
            out.push_back(r);
        }
        return Coloring(std::move(out), next);
    }

    [[nodiscard]] auto is_canonical() const -> bool { return canonical() == *this; }

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

  private:
    std::vector<int> color_of_;
    int k_ = 0;
};

/// All members of s carry pairwise distinct colours.
inline auto is_rainbow(const Coloring & c, const VertexSet & s) -> bool
{
    std::vector<bool> seen(static_cast<std::size_t>(c.colors()), false);
    bool ok = true;
    s.for_each([&](int v) {
        auto col = static_cast<std::size_t>(c.color(v));
        ok = ok && ! seen[col];
        seen[col] = true;
    });
    return ok;
}

namespace detail {

    inline auto expand_clique(const Graph & g, VertexSet & current, VertexSet candidates, VertexSet & best,
                              const CancelToken & cancel) -> void
    {
        cancel.check();
        if (candidates.empty()) {
            if (current.count() > best.count())
                best = current;
            return;
        }
        // greedy colour classes of the candidates give an upper bound on what is left
        std::vector<int> order, bound;
        auto uncoloured = candidates;
        int colour = 0;
        while (uncoloured.any()) {
            ++colour;
            auto q = uncoloured;
            while (q.any()) {
                int v = q.first();
                q -= g.neighbours(v);
                q.reset(v);
                uncoloured.reset(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.count() + bound[i] <= best.count())
                return;
            int v = order[i];
            current.set(v);
            expand_clique(g, current, candidates & g.neighbours(v), best, cancel);
            current.reset(v);
            candidates.reset(v);
        }
    }

} // namespace detail

/// A maximum clique, by colour-bounded branch and bound.
inline auto maximum_clique(const Graph & g, const CancelToken & cancel = no_cancel()) -> VertexSet
{
    VertexSet current, best;
    detail::expand_clique(g, current, g.vertices(), best, cancel);
    return best;
}

namespace detail {

    /// DSATUR search state for a fixed palette size k.
    class DsaturSearch
    {
      public:
        DsaturSearch(const Graph & g, int k, const CancelToken & cancel)
            : g_(g), k_(k), cancel_(cancel), colour_(static_cast<std::size_t>(g.order()), -1),
              forbidden_(static_cast<std::size_t>(g.order()))
        {
        }

        auto run() -> std::optional<Coloring>
        {
            if (g_.order() == 0)
                return Coloring{};
            if (k_ <= 0)
                return std::nullopt;
            if (! search(0, 0))
                return std::nullopt;
            return Coloring(colour_, used_at_solution_);
        }

      private:
        auto pick() const -> int
        {
            int best = -1, best_sat = -1, best_deg = -1;
            for (int v = 0; v < g_.order(); ++v) {
                if (colour_[static_cast<std::size_t>(v)] != -1)
                    continue;
                int sat = forbidden_[static_cast<std::size_t>(v)].count();
                if (sat < best_sat)
                    continue;
                int deg = 0;
                for (int u : g_.neighbours(v))
                    deg += colour_[static_cast<std::size_t>(u)] == -1;
                if (sat > best_sat || deg > best_deg) {
                    best = v;
                    best_sat = sat;
                    best_deg = deg;
                }
            }
            return best;
        }

        auto search(int coloured, int used) -> bool
        {
            cancel_.check();
            if (coloured == g_.order()) {
                used_at_solution_ = used;
                return true;
            }
            int v = pick();
            int limit = std::min(k_, used + 1);
            for (int c = 0; c < limit; ++c) {
                if (forbidden_[static_cast<std::size_t>(v)].test(c))
                    continue;
                colour_[static_cast<std::size_t>(v)] = c;
                std::vector<int> touched;
                bool wiped_out = false;
                for (int u : g_.neighbours(v)) {
                    auto & f = forbidden_[static_cast<std::size_t>(u)];
                    if (colour_[static_cast<std::size_t>(u)] != -1 || f.test(c))
                        continue;
                    f.set(c);
                    touched.push_back(u);
                    if (f.count() >= k_)
                        wiped_out = true;
                }
                if (! wiped_out && search(coloured + 1, std::max(used, c + 1)))
                    return true;
                for (int u : touched)
                    forbidden_[static_cast<std::size_t>(u)].reset(c);
                colour_[static_cast<std::size_t>(v)] = -1;
            }
            return false;
        }

        const Graph & g_;
        int k_;
        const CancelToken & cancel_;
        std::vector<int> colour_;
        std::vector<VertexSet> forbidden_;
        int used_at_solution_ = 0;
    };

} // namespace detail

/// A proper colouring with at most k colours, if one exists.
inline auto k_coloring(const Graph & g, int k, const CancelToken & cancel = no_cancel()) -> std::optional<Coloring>
{
    return detail::DsaturSearch(g, k, cancel).run();
}

/// Greedy DSATUR colouring (no backtracking); an upper bound on χ.
inline auto dsatur_greedy(const Graph & g) -> Coloring
{
    int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> forbidden(static_cast<std::size_t>(n));
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colour[static_cast<std::size_t>(u)] != -1)
                continue;
            int sat = forbidden[static_cast<std::size_t>(u)].count(), deg = g.degree(u);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                v = u;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = 0;
        while (forbidden[static_cast<std::size_t>(v)].test(c))
            ++c;
        colour[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
        for (int u : g.neighbours(v))
            forbidden[static_cast<std::size_t>(u)].set(c);
    }
    return Coloring(colour, used);
}

struct ColoringNumber
{
    int value = 0;
    Coloring witness;
};

/**
 * Smallest k <= limit admitting a proper k-colouring, or nullopt when χ(G)
 * exceeds limit. lower_bound must be a valid lower bound on χ(G); the
 * solver also uses the maximum clique. Search runs downwards from the
 * DSATUR greedy bound, so only the final step has to prove infeasibility.
 */
inline auto chromatic_number_at_most(const Graph & g, int limit, int lower_bound = 0,
                                     const CancelToken & cancel = no_cancel()) -> std::optional<ColoringNumber>
{
    if (g.order() == 0)
        return ColoringNumber{0, Coloring{}};
    int lower = std::max({lower_bound, 1, maximum_clique(g, cancel).count()});
    if (lower > limit)
        return std::nullopt;

    std::optional<ColoringNumber> best;
    auto greedy = dsatur_greedy(g);
    if (greedy.colors() <= limit)
        best = ColoringNumber{greedy.colors(), greedy};
    else if (auto c = k_coloring(g, limit, cancel))
        best = ColoringNumber{c->colors(), *c};
    else
        return std::nullopt;

    while (best->value > lower) {
        auto c = k_coloring(g, best->value - 1, cancel);
        if (! c)
            break;
        best = ColoringNumber{c->colors(), *c};
    }
    return best;
}

/// χ(G) with a witness colouring using exactly χ colours.
inline auto chromatic_number(const Graph & g, const CancelToken & cancel = no_cancel()) -> ColoringNumber
{
    return *chromatic_number_at_most(g, g.order(), 0, cancel);
}

} // namespace ircolor
