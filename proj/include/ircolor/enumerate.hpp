#pragma once

#include "ircolor/graph.hpp"

#include <functional>
#include <vector>

namespace ircolor {

/// Calls visit on every labelled graph with n vertices (2^(n(n-1)/2) of them; n <= 7).
inline auto for_each_labelled_graph(int n, const std::function<void(const Graph &)> & visit) -> void
{
    if (n < 0 || n > 7)
        throw ParameterError("labelled enumeration supports 0 <= n <= 7");
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            slots.emplace_back(i, j);
    for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1UL)
                edges.push_back(slots[b]);
        visit(Graph::from_edge_list(n, edges));
    }
}

/// Every connected labelled graph with 1 <= n <= max_order.
inline auto connected_labelled_graphs(int max_order) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_order; ++n)
        for_each_labelled_graph(n, [&](const Graph & g) {
            if (is_connected(g))
                out.push_back(g);
        });
    return out;
}

/// Calls visit on every labelled tree with n >= 2 vertices, decoded from Prüfer sequences.
inline auto for_each_labelled_tree(int n, const std::function<void(const Graph &)> & visit) -> void
{
    if (n < 2 || n > 9)
        throw ParameterError("labelled tree enumeration supports 2 <= n <= 9");
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : seq)
            ++degree[static_cast<std::size_t>(x)];
        std::vector<Edge> edges;
        for (int x : seq)
            for (int leaf = 0; leaf < n; ++leaf)
                if (degree[static_cast<std::size_t>(leaf)] == 1) {
                    edges.emplace_back(leaf, x);
                    --degree[static_cast<std::size_t>(leaf)];
                    --degree[static_cast<std::size_t>(x)];
                    break;
                }
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) {
                if (u < 0)
                    u = v;
                else
                    edges.emplace_back(u, v);
            }
        visit(Graph::from_edge_list(n, edges));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n)
            seq[i++] = 0;
        if (i == seq.size())
            return;
    }
}

} // namespace ircolor
