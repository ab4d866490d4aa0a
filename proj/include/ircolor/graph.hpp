#pragma once

#include "ircolor/bitset.hpp"
#include "ircolor/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ircolor {

using Edge = std::pair<int, int>;

/**
 * Immutable simple undirected graph on vertices 0..n-1, stored as one
 * adjacency bitmask per vertex. Every constructor establishes symmetry,
 * loop-freeness and the "no bits at or above n" invariant.
 */
class Graph
{
  public:
    Graph() = default;

    /// The edgeless graph on n vertices.
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n))
    {
        if (n < 0 || n > max_vertices)
            throw ParameterError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    }

    static auto from_edge_list(int n, const std::vector<Edge> & edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge_checked(u, v);
        return g;
    }

    [[nodiscard]] auto order() const -> int { return n_; }

    [[nodiscard]] auto size() const -> int
    {
        int m = 0;
        for (auto & a : adj_)
            m += a.count();
        return m / 2;
    }

    [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::prefix(n_); }

    [[nodiscard]] auto adjacent(int u, int v) const -> bool { return adj_[static_cast<std::size_t>(u)].test(v); }

    /// N(v), unchecked.
    [[nodiscard]] auto neighbours(int v) const -> const VertexSet & { return adj_[static_cast<std::size_t>(v)]; }

    /// N[v], unchecked.
    [[nodiscard]] auto closed_neighbours(int v) const -> VertexSet
    {
        auto s = adj_[static_cast<std::size_t>(v)];
        s.set(v);
        return s;
    }

    /// N[S].
    [[nodiscard]] auto closed_neighbours(const VertexSet & s) const -> VertexSet
    {
        VertexSet r = s;
        s.for_each([&](int v) { r |= adj_[static_cast<std::size_t>(v)]; });
        return r;
    }

    /// N(S), the union of open neighbourhoods.
    [[nodiscard]] auto open_neighbours(const VertexSet & s) const -> VertexSet
    {
        VertexSet r;
        s.for_each([&](int v) { r |= adj_[static_cast<std::size_t>(v)]; });
        return r;
    }

    [[nodiscard]] auto degree(int v) const -> int { return adj_[static_cast<std::size_t>(v)].count(); }

    [[nodiscard]] auto min_degree() const -> int
    {
        int d = n_;
        for (int v = 0; v < n_; ++v)
            d = std::min(d, degree(v));
        return n_ == 0 ? 0 : d;
    }

    [[nodiscard]] auto max_degree() const -> int
    {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    [[nodiscard]] auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    /// Copy of this graph with every missing edge inside s added.
    [[nodiscard]] auto with_clique(const VertexSet & s) const -> Graph
    {
        Graph g = *this;
        s.for_each([&](int v) {
            g.adj_[static_cast<std::size_t>(v)] |= s;
            g.adj_[static_cast<std::size_t>(v)].reset(v);
        });
        return g;
    }

    /// Copy of this graph with edge {u, v} added (checked).
    [[nodiscard]] auto with_edge(int u, int v) const -> Graph
    {
        Graph g = *this;
        g.add_edge_checked(u, v);
        return g;
    }

    /// True iff the adjacency structure satisfies every class invariant.
    [[nodiscard]] auto invariants_hold() const -> bool
    {
        auto all = vertices();
        for (int v = 0; v < n_; ++v) {
            auto & a = adj_[static_cast<std::size_t>(v)];
            if (a.test(v) || ! a.is_subset_of(all))
                return false;
            bool symmetric = true;
            a.for_each([&](int u) { symmetric = symmetric && adj_[static_cast<std::size_t>(u)].test(v); });
            if (! symmetric)
                return false;
        }
        return true;
    }

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

  private:
    auto add_edge_checked(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw IndexError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.."
                             + std::to_string(n_ - 1));
        if (u == v)
            throw LoopError("loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline auto from_edge_list(int n, const std::vector<Edge> & edges) -> Graph { return Graph::from_edge_list(n, edges); }

inline auto check_vertex(const Graph & g, int v) -> void
{
    if (v < 0 || v >= g.order())
        throw IndexError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
}

inline auto check_subset(const Graph & g, const VertexSet & s) -> void
{
    if (! s.is_subset_of(g.vertices()))
        throw IndexError("vertex set has members outside 0.." + std::to_string(g.order() - 1));
}

/// N(v) when closed is false, N[v] when true.
inline auto neighborhood(const Graph & g, int v, bool closed) -> VertexSet
{
    check_vertex(g, v);
    return closed ? g.closed_neighbours(v) : g.neighbours(v);
}

inline auto make_set(std::initializer_list<int> members) -> VertexSet
{
    VertexSet s;
    for (int v : members)
        s.set(v);
    return s;
}

struct InducedSubgraph
{
    Graph graph;
    /// original_index[i] is the vertex of the parent graph that became vertex i.
    std::vector<int> original_index;
};

/// G[S], with the members of S relabelled 0..|S|-1 in increasing order.
inline auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
{
    check_subset(g, s);
    InducedSubgraph result;
    std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
    s.for_each([&](int v) {
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(result.original_index.size());
        result.original_index.push_back(v);
    });
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (s.test(u) && s.test(v))
            edges.emplace_back(new_index[static_cast<std::size_t>(u)], new_index[static_cast<std::size_t>(v)]);
    result.graph = Graph::from_edge_list(s.count(), edges);
    return result;
}

struct Bipartition
{
    VertexSet first;
    VertexSet second;
};

/// Either a bipartition or a closed walk of odd length proving there is none.
struct BipartitionResult
{
    std::optional<Bipartition> parts;
    /// v0, v1, ..., v0 with consecutive vertices adjacent and an odd number of edges.
    std::vector<int> odd_closed_walk;
};

/**
 * Breadth-first 2-colouring. The lowest-index vertex of every component goes
 * to the first side. On failure the result carries an odd closed walk built
 * from the two BFS tree paths meeting at the offending edge.
 */
inline auto bipartition_with_witness(const Graph & g) -> BipartitionResult
{
    int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1)
            continue;
        side[static_cast<std::size_t>(root)] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbours(v)) {
                if (side[static_cast<std::size_t>(u)] == -1) {
                    side[static_cast<std::size_t>(u)] = 1 - side[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(u)] = v;
                    queue.push_back(u);
                }
                else if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
                    auto path_to_root = [&](int x) {
                        std::vector<int> p{x};
                        while (parent[static_cast<std::size_t>(x)] != -1)
                            p.push_back(x = parent[static_cast<std::size_t>(x)]);
                        return p;
                    };
                    // walk v -> root -> u -> v; both tree paths have the same parity, plus the edge uv
                    auto pv = path_to_root(v), pu = path_to_root(u);
                    std::vector<int> walk(pv.begin(), pv.end());
                    walk.insert(walk.end(), pu.rbegin() + 1, pu.rend());
                    walk.push_back(v);
                    return {std::nullopt, std::move(walk)};
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(v)] == 0)
            parts.first.set(v);
        else
            parts.second.set(v);
    }
    return {parts, {}};
}

inline auto bipartition(const Graph & g) -> std::optional<Bipartition> { return bipartition_with_witness(g).parts; }

inline auto is_bipartite(const Graph & g) -> bool { return bipartition(g).has_value(); }

struct ConnectivityProfile
{
    bool connected = false;
    VertexSet cut_vertices;
    std::vector<Edge> bridges;
};

/// Components as vertex sets, ordered by their lowest vertex.
inline auto components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    VertexSet seen;
    for (int root = 0; root < g.order(); ++root) {
        if (seen.test(root))
            continue;
        VertexSet comp = VertexSet::single(root), frontier = comp;
        while (frontier.any()) {
            auto next = g.open_neighbours(frontier) - comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        result.push_back(comp);
    }
    return result;
}

inline auto is_connected(const Graph & g) -> bool { return components(g).size() <= 1; }

/// Cut vertices and bridges by the low-link method (Hopcroft-Tarjan), iteratively.
inline auto connectivity_profile(const Graph & g) -> ConnectivityProfile
{
    int n = g.order();
    ConnectivityProfile result;
    result.connected = is_connected(g);

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        parent(static_cast<std::size_t>(n), -1);
    int timer = 0;

    struct Frame
    {
        int v;
        VertexSet pending;
        int children;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1)
            continue;
        std::vector<Frame> stack;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, g.neighbours(root), 0});
        while (! stack.empty()) {
            auto & top = stack.back();
            int v = top.v;
            if (top.pending.any()) {
                int u = top.pending.first();
                top.pending.reset(u);
                if (disc[static_cast<std::size_t>(u)] == -1) {
                    parent[static_cast<std::size_t>(u)] = v;
                    ++top.children;
                    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                    stack.push_back({u, g.neighbours(u), 0});
                }
                else if (u != parent[static_cast<std::size_t>(v)])
                    low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(u)]);
                continue;
            }
            int children = top.children;
            stack.pop_back();
            int p = parent[static_cast<std::size_t>(v)];
            if (p == -1) {
                if (children >= 2)
                    result.cut_vertices.set(v);
                continue;
            }
            low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
            if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)])
                result.bridges.emplace_back(std::min(p, v), std::max(p, v));
            if (parent[static_cast<std::size_t>(p)] != -1 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)])
                result.cut_vertices.set(p);
        }
    }
    std::sort(result.bridges.begin(), result.bridges.end());
    return result;
}

/// G o K_1: the pendant of v is vertex n + v.
inline auto corona_k1(const Graph & g) -> Graph
{
    int n = g.order();
    auto edges = g.edges();
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, n + v);
    return Graph::from_edge_list(2 * n, edges);
}

/**
 * [G]_H^copies: the vertices of h are shared, every other vertex is
 * duplicated once per copy, and parallel edges inside h collapse. Output
 * order is the shared vertices (original order), then the private vertices
 * of copy 1, copy 2, ...
 */
inline auto merge_copies(const Graph & g, const VertexSet & h, int copies) -> Graph
{
    if (copies < 1)
        throw ParameterError("merge_copies needs at least one copy");
    check_subset(g, h);
    int n = g.order(), shared = h.count(), priv = n - shared;
    std::vector<int> shared_index(static_cast<std::size_t>(n), -1), private_index(static_cast<std::size_t>(n), -1);
    int s = 0, p = 0;
    for (int v = 0; v < n; ++v) {
        if (h.test(v))
            shared_index[static_cast<std::size_t>(v)] = s++;
        else
            private_index[static_cast<std::size_t>(v)] = p++;
    }
    auto image = [&](int v, int copy) {
        return h.test(v) ? shared_index[static_cast<std::size_t>(v)]
                         : shared + copy * priv + private_index[static_cast<std::size_t>(v)];
    };
    std::vector<Edge> edges;
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges())
            edges.emplace_back(image(u, c), image(v, c));
    return Graph::from_edge_list(shared + copies * priv, edges);
}

} // namespace ircolor
