#pragma once

#include "ircolor/io.hpp"

#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace ircolor::testing {

inline auto data_file(const std::string & name) -> std::string { return std::string(IRCOLOR_TEST_DATA) + "/" + name; }

inline auto load_graph6(const std::string & name) -> std::vector<Graph>
{
    std::ifstream in(data_file(name));
    if (! in)
        throw std::runtime_error("missing test asset " + name);
    GraphReader reader(in, InputFormat::graph6);
    std::vector<Graph> out;
    while (auto r = reader.next())
        out.push_back(std::move(r->graph));
    return out;
}

inline auto random_graph(int n, double p, std::mt19937 & rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng))
                edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

/// Rejection-sampled connected G(n, p).
inline auto random_connected_graph(int n, double p, std::mt19937 & rng) -> Graph
{
    while (true) {
        auto g = random_graph(n, p, rng);
        if (is_connected(g))
            return g;
    }
}

inline auto graph_of(int n, std::initializer_list<Edge> edges) -> Graph { return Graph::from_edge_list(n, edges); }

inline auto cycle(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

inline auto path(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

inline auto complete(int n) -> Graph
{
    std::vector<Edge> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

inline auto complete_bipartite(int a, int b) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, e);
}

inline auto star(int leaves) -> Graph { return complete_bipartite(1, leaves); }

} // namespace ircolor::testing
