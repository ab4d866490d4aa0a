#pragma once

#include "ircolor/cancel.hpp"
#include "ircolor/coloring.hpp"
#include "ircolor/graph.hpp"

#include <vector>

namespace ircolor {

/// Partial state of a canonical partition search; vertices 0..assigned-1 carry colours.
struct PartialPartition
{
    int k = 0;
    int assigned = 0;
    int used = 0;
    std::vector<int> color_of;
    std::vector<VertexSet> classes;
};

namespace detail {

    template <typename Prune, typename Visit>
    auto partition_step(const Graph & g, PartialPartition & st, Prune & prune, Visit & visit, const CancelToken & cancel)
        -> bool
    {
        cancel.check();
        int n = g.order();
        if (st.assigned == n)
            return st.used == st.k && visit(static_cast<const PartialPartition &>(st));
        // enough vertices left to open the remaining classes?
        if (n - st.assigned < st.k - st.used)
            return false;
        int v = st.assigned;
        int limit = std::min(st.k, st.used + 1);
        for (int c = 0; c < limit; ++c) {
            auto & cls = st.classes[static_cast<std::size_t>(c)];
            if (cls.intersects(g.neighbours(v)))
                continue;
            cls.set(v);
            st.color_of[static_cast<std::size_t>(v)] = c;
            int saved_used = st.used;
            if (c == st.used)
                ++st.used;
            ++st.assigned;
            bool stop = prune(static_cast<const PartialPartition &>(st)) && partition_step(g, st, prune, visit, cancel);
            --st.assigned;
            st.used = saved_used;
            st.color_of[static_cast<std::size_t>(v)] = -1;
            cls.reset(v);
            if (stop)
                return true;
        }
        return false;
    }

} // namespace detail

/**
 * Enumerates the proper colourings of g with exactly k colours, each once up
 * to renaming of colours: vertices are coloured in index order and vertex i
 * may only open colour `used` (restricted-growth form). After every
 * assignment prune(state) may return false to cut the branch; visit(state)
 * is called on every complete colouring and returns true to stop.
 * Returns true iff visit stopped the search.
 */
template <typename Prune, typename Visit>
auto search_proper_partitions(const Graph & g, int k, Prune prune, Visit visit,
                              const CancelToken & cancel = no_cancel()) -> bool
{
    int n = g.order();
    if (k < 1 || k > n)
        return false;
    PartialPartition st;
    st.k = k;
    st.color_of.assign(static_cast<std::size_t>(n), -1);
    st.classes.assign(static_cast<std::size_t>(k), VertexSet{});
    return detail::partition_step(g, st, prune, visit, cancel);
}

inline auto to_coloring(const PartialPartition & st) -> Coloring { return Coloring(st.color_of, st.k); }

} // namespace ircolor
