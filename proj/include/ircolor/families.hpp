#pragma once

#include "ircolor/coloring.hpp"
#include "ircolor/graph.hpp"
#include "ircolor/irredundance.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ircolor {

/// A claimed value: exact, or a lower bound only.
struct Claim
{
    int value = 0;
    bool exact = true;

    friend auto operator==(const Claim &, const Claim &) -> bool = default;
};

struct FamilyInstance
{
    std::string name;
    Graph graph;
    /// labels[v] names vertex v.
    std::vector<std::string> labels;
    /// Keyed by invariant name, plus "kappa" / "kappa_prime" for connectivity claims.
    std::map<std::string, Claim> claims;
    std::optional<Coloring> coloring;
    std::string description;

    [[nodiscard]] auto index_of(std::string_view label) const -> int
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return static_cast<int>(i);
        throw ParameterError("no vertex labelled '" + std::string(label) + "' in " + name);
    }
};

namespace detail {

    inline auto numbered(std::string_view stem, int count, int first = 1) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (int i = 0; i < count; ++i)
            out.push_back(std::string(stem) + std::to_string(first + i));
        return out;
    }

    inline auto append(std::vector<std::string> & to, const std::vector<std::string> & more) -> void
    {
        to.insert(to.end(), more.begin(), more.end());
    }

    inline auto require(bool ok, const std::string & message) -> void
    {
        if (! ok)
            throw ParameterError(message);
    }

    inline auto complete_edges(int first, int count) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j)
                out.emplace_back(first + i, first + j);
        return out;
    }

} // namespace detail

enum class BasicKind
{
    complete,
    complete_bipartite,
    star,
    cycle,
    path
};

inline auto parse_basic_kind(std::string_view name) -> BasicKind
{
    if (name == "complete")
        return BasicKind::complete;
    if (name == "complete_bipartite")
        return BasicKind::complete_bipartite;
    if (name == "star")
        return BasicKind::star;
    if (name == "cycle")
        return BasicKind::cycle;
    if (name == "path")
        return BasicKind::path;
    throw ParameterError("unknown basic family '" + std::string(name) + "'");
}

/**
 * Standard graphs. complete(n), star(n) (n vertices, centre 0), cycle(n),
 * path(n) take one parameter; complete_bipartite(m, n) takes two.
 */
inline auto gen_basic(BasicKind kind, int a, int b = 0) -> FamilyInstance
{
    FamilyInstance f;
    std::vector<Edge> edges;
    int order = a;
    switch (kind) {
    case BasicKind::complete:
        detail::require(a >= 1, "complete needs n >= 1");
        f.name = "K" + std::to_string(a);
        edges = detail::complete_edges(0, a);
        f.labels = detail::numbered("v", a);
        f.claims["chi"] = {a, true};
        f.claims["chi_i"] = {a, true};
        if (a >= 2)
            f.claims["irc_colorable"] = {0, true};
        f.description = "complete graph";
        break;
    case BasicKind::complete_bipartite:
        detail::require(a >= 1 && b >= 1, "complete_bipartite needs m, n >= 1");
        f.name = "K" + std::to_string(a) + "," + std::to_string(b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                edges.emplace_back(i, a + j);
        f.labels = detail::numbered("x", a);
        detail::append(f.labels, detail::numbered("y", b));
        f.claims["chi"] = {2, true};
        f.claims["chi_i"] = {2, true};
        f.description = "complete bipartite graph";
        order = a + b;
        break;
    case BasicKind::star:
        detail::require(a >= 2, "star needs n >= 2");
        f.name = "K1," + std::to_string(a - 1);
        for (int i = 1; i < a; ++i)
            edges.emplace_back(0, i);
        f.labels = {"c"};
        detail::append(f.labels, detail::numbered("l", a - 1));
        f.claims["chi_i"] = {2, true};
        f.claims["irc_colorable"] = {0, true};
        f.description = "star with centre c";
        break;
    case BasicKind::cycle:
        detail::require(a >= 3, "cycle needs n >= 3");
        f.name = "C" + std::to_string(a);
        for (int i = 0; i < a; ++i)
            edges.emplace_back(i, (i + 1) % a);
        f.labels = detail::numbered("v", a, 0);
        f.claims["chi"] = {a % 2 == 0 ? 2 : 3, true};
        if (a % 2 == 1)
            f.claims["irc_colorable"] = {0, true};
        if (a == 4) {
            f.claims["irc_colorable"] = {1, true};
            f.claims["chi_irc"] = {2, true};
        }
        f.description = "cycle v0 v1 ... v(n-1)";
        break;
    case BasicKind::path:
        detail::require(a >= 1, "path needs n >= 1");
        f.name = "P" + std::to_string(a);
        for (int i = 0; i + 1 < a; ++i)
            edges.emplace_back(i, i + 1);
        f.labels = detail::numbered("v", a, 0);
        if (a >= 2)
            f.claims["irc_colorable"] = {0, true};
        f.description = "path";
        break;
    }
    f.graph = Graph::from_edge_list(order, edges);
    return f;
}

/**
 * A(n, k): the corona K_k o K_1 with n - 2k extra pendants on v1. The
 * attached colouring gives v_i colour i, the pendant of v_i colour i + 1
 * (mod k), and the extra pendants colour 2, so the clique is rainbow.
 */
inline auto gen_family_A(int n, int k) -> FamilyInstance
{
    detail::require(k >= 2, "family A needs k >= 2");
    detail::require(n >= 2 * k, "family A needs n >= 2k");
    FamilyInstance f;
    f.name = "A(" + std::to_string(n) + "," + std::to_string(k) + ")";
    auto edges = corona_k1(Graph::from_edge_list(k, detail::complete_edges(0, k))).edges();
    for (int i = 2 * k; i < n; ++i)
        edges.emplace_back(0, i);
    f.graph = Graph::from_edge_list(n, edges);
    f.labels = detail::numbered("v", k);
    detail::append(f.labels, detail::numbered("w", k));
    detail::append(f.labels, detail::numbered("u", n - 2 * k));
    std::vector<int> colour;
    for (int i = 0; i < k; ++i)
        colour.push_back(i);
    for (int i = 0; i < k; ++i)
        colour.push_back((i + 1) % k);
    for (int i = 2 * k; i < n; ++i)
        colour.push_back(1);
    f.coloring = Coloring(colour, k);
    f.claims = {{"chi", {k, true}}, {"ir", {k, true}}, {"chi_i", {k, true}}};
    f.description = "corona of K_k with extra pendants u_j on v1; w_i is the pendant of v_i";
    return f;
}

/**
 * H(k, l): clique w_1..w_(k-2), then u, a, b, v and the pendants
 * p_1..p_(k+l-2) of v. Every w_j is joined to a, v and u; a-v, b-v, b-u and
 * u-v are edges.
 */
inline auto gen_graph_H(int k, int l) -> FamilyInstance
{
    detail::require(k >= 3, "graph H needs k >= 3");
    detail::require(l >= 1, "graph H needs l >= 1");
    int q = k - 2;
    int u = q, a = q + 1, b = q + 2, v = q + 3, p0 = q + 4, pendants = k + l - 2;
    auto edges = detail::complete_edges(0, q);
    for (int w = 0; w < q; ++w)
        for (int t : {a, v, u})
            edges.emplace_back(w, t);
    edges.insert(edges.end(), {{a, v}, {b, v}, {b, u}, {u, v}});
    for (int j = 0; j < pendants; ++j)
        edges.emplace_back(v, p0 + j);

    FamilyInstance f;
    f.name = "H(" + std::to_string(k) + "," + std::to_string(l) + ")";
    f.graph = Graph::from_edge_list(p0 + pendants, edges);
    f.labels = detail::numbered("w", q);
    detail::append(f.labels, {"u", "a", "b", "v"});
    detail::append(f.labels, detail::numbered("p", pendants));
    f.description = "clique w_j joined to a, v, u; b adjacent to u and v; pendants p_j on v";
    return f;
}

/**
 * Z(k, l): l copies of H(k, l) sharing the clique and u. Labels of copy i
 * carry the suffix "^i". The attached colouring is a k-colouring found by
 * the chromatic solver.
 */
inline auto gen_family_Z(int k, int l) -> FamilyInstance
{
    auto h = gen_graph_H(k, l);
    int q = k - 2;
    auto shared = VertexSet::prefix(q + 1);
    FamilyInstance f;
    f.name = "Z(" + std::to_string(k) + "," + std::to_string(l) + ")";
    f.graph = merge_copies(h.graph, shared, l);
    f.labels.assign(h.labels.begin(), h.labels.begin() + q + 1);
    for (int i = 1; i <= l; ++i)
        for (std::size_t v = static_cast<std::size_t>(q) + 1; v < h.labels.size(); ++v)
            f.labels.push_back(h.labels[v] + "^" + std::to_string(i));
    f.claims = {{"chi", {k, true}}, {"ir", {l, true}}, {"chi_i", {k + l - 1, true}}};
    f.coloring = k_coloring(f.graph, k);
    f.description = "copies of H sharing the clique and u";
    return f;
}

/// B(n, k): K_k plus n - k pendants u_j on v1; v_i has colour i - 1 and every u_j colour 1.
inline auto gen_family_B(int n, int k) -> FamilyInstance
{
    detail::require(k >= 2, "family B needs k >= 2");
    detail::require(k <= n, "family B needs k <= n");
    auto edges = detail::complete_edges(0, k);
    for (int j = k; j < n; ++j)
        edges.emplace_back(0, j);
    FamilyInstance f;
    f.name = "B(" + std::to_string(n) + "," + std::to_string(k) + ")";
    f.graph = Graph::from_edge_list(n, edges);
    f.labels = detail::numbered("v", k);
    detail::append(f.labels, detail::numbered("u", n - k));
    std::vector<int> colour;
    for (int i = 0; i < k; ++i)
        colour.push_back(i);
    for (int j = k; j < n; ++j)
        colour.push_back(1);
    f.coloring = Coloring(colour, k);
    f.claims = {{"chi", {k, true}}, {"chi_i", {k, true}}};
    f.description = "K_k with pendants u_j on v1";
    return f;
}

enum class IrcFamilyKind
{
    cut_vertex,
    bridge,
    tilde,
    gstar
};

inline auto parse_irc_family_kind(std::string_view name) -> IrcFamilyKind
{
    if (name == "cut_vertex")
        return IrcFamilyKind::cut_vertex;
    if (name == "bridge")
        return IrcFamilyKind::bridge;
    if (name == "tilde")
        return IrcFamilyKind::tilde;
    if (name == "gstar" || name == "bipartite_star_of_cycles")
        return IrcFamilyKind::gstar;
    throw ParameterError("unknown IRC family '" + std::string(name) + "'");
}

namespace detail {

    /**
     * Appends k gadgets (a 10-cycle x1..x10 with chords x1x6, x2x5, x7x10)
     * to a hub, joining the hub to x1 and x6 of each gadget. Returns the
     * edges; gadget vertices take indices first, first + 1, ... and the
     * gadget sides go to colours 0 (x1's side) and 1.
     */
    inline auto hub_gadgets(int hub, int first, int k, const std::string & tag, std::vector<Edge> & edges,
                            std::vector<std::string> & labels, std::vector<int> & colour) -> void
    {
        for (int i = 0; i < k; ++i) {
            int base = first + 10 * i;
            auto x = [&](int j) { return base + j - 1; };
            for (int j = 1; j <= 10; ++j)
                edges.emplace_back(x(j), x(j % 10 + 1));
            edges.insert(edges.end(), {{x(1), x(6)}, {x(2), x(5)}, {x(7), x(10)}, {hub, x(1)}, {hub, x(6)}});
            for (int j = 1; j <= 10; ++j) {
                labels.push_back(tag + std::to_string(j) + "^" + std::to_string(i + 1));
                colour.push_back(0);
            }
        }
    }

    /// Gadget 2-colouring by BFS from x1 of each gadget, on the graph without the hubs.
    inline auto colour_gadget_sides(const Graph & g, const VertexSet & hubs, std::vector<int> & colour) -> void
    {
        auto rest = g.vertices() - hubs;
        auto sub = induced_subgraph(g, rest);
        auto parts = bipartition(sub.graph);
        for (std::size_t i = 0; i < sub.original_index.size(); ++i)
            colour[static_cast<std::size_t>(sub.original_index[i])] = parts->first.test(static_cast<int>(i)) ? 0 : 1;
    }

    inline auto tilde_like(int k, bool cycle_core) -> FamilyInstance
    {
        std::vector<Edge> edges = cycle_core ? std::vector<Edge>{} : complete_edges(0, k);
        if (cycle_core)
            for (int i = 0; i < k; ++i)
                edges.emplace_back(i, (i + 1) % k);
        FamilyInstance f;
        f.labels = numbered("v", k);
        std::vector<int> colour;
        for (int i = 0; i < k; ++i)
            colour.push_back(i);
        int next = k;
        for (int i = 0; i < k; ++i) {
            int i1 = (i + 1) % k;
            std::string tag = "[" + std::to_string(i + 1) + "," + std::to_string(i1 + 1) + ",";
            for (const char * stem : {"v", "u"}) {
                int a1 = next, a2 = next + 1, b1 = next + 2, b2 = next + 3;
                next += 4;
                edges.insert(edges.end(), {{a1, a2}, {b1, b2}, {a1, b1}, {a2, b2}, {i, a1}, {i1, a2}});
                std::string s(stem);
                detail::append(f.labels, {s + tag + "1]", s + tag + "2]", s + "'" + tag + "1]", s + "'" + tag + "2]"});
                colour.insert(colour.end(), {i1, i, i, i1});
            }
        }
        f.graph = Graph::from_edge_list(next, edges);
        f.coloring = Coloring(colour, k);
        return f;
    }

} // namespace detail

/**
 * IRC-colourable constructions.
 *   cut_vertex(k): hub x joined to x1 and x6 of k gadgets; colouring (V1, V2, {x}).
 *   bridge(k, l): cut_vertex(k) and cut_vertex(l) with hubs x, y joined; colouring (V1, V2, {x}, {y}).
 *   tilde(k): K_k core with two 4-cycles per consecutive pair v_i, v_(i+1) (indices mod k).
 *   gstar(k): tilde(k) with the core replaced by the cycle C_k; bipartite for even k.
 */
inline auto gen_irc_family(IrcFamilyKind kind, int k, int l = 0) -> FamilyInstance
{
    FamilyInstance f;
    switch (kind) {
    case IrcFamilyKind::cut_vertex: {
        detail::require(k >= 3, "cut_vertex family needs k >= 3");
        std::vector<Edge> edges;
        f.labels = {"x"};
        std::vector<int> colour = {2};
        detail::hub_gadgets(0, 1, k, "x", edges, f.labels, colour);
        f.graph = Graph::from_edge_list(1 + 10 * k, edges);
        detail::colour_gadget_sides(f.graph, VertexSet::single(0), colour);
        f.coloring = Coloring(colour, 3);
        f.name = "G(" + std::to_string(k) + ")";
        f.claims = {{"irc_colorable", {1, true}}, {"kappa", {1, true}}};
        f.description = "gadgets sharing the cut vertex x";
        break;
    }
    case IrcFamilyKind::bridge: {
        detail::require(k >= 3 && l >= 3, "bridge family needs k, l >= 3");
        std::vector<Edge> edges;
        f.labels = {"x"};
        std::vector<int> colour = {2};
        detail::hub_gadgets(0, 1, k, "x", edges, f.labels, colour);
        int y = 1 + 10 * k;
        f.labels.push_back("y");
        colour.push_back(3);
        detail::hub_gadgets(y, y + 1, l, "y", edges, f.labels, colour);
        edges.emplace_back(0, y);
        f.graph = Graph::from_edge_list(y + 1 + 10 * l, edges);
        detail::colour_gadget_sides(f.graph, VertexSet::single(0) | VertexSet::single(y), colour);
        f.coloring = Coloring(colour, 4);
        f.name = "G(" + std::to_string(k) + "," + std::to_string(l) + ")";
        f.claims = {{"irc_colorable", {1, true}}, {"kappa_prime", {1, true}}};
        f.description = "two cut-vertex constructions joined by the bridge xy";
        break;
    }
    case IrcFamilyKind::tilde:
        detail::require(k >= 3, "tilde family needs k >= 3");
        f = detail::tilde_like(k, false);
        f.name = "Gtilde(" + std::to_string(k) + ")";
        f.claims = {{"chi", {k, true}}, {"irc_colorable", {1, true}}, {"chi_irc", {k, true}}};
        f.description = "K_k with two 4-cycles attached between consecutive v_i, v_(i+1)";
        break;
    case IrcFamilyKind::gstar:
        detail::require(k >= 4 && k % 2 == 0, "gstar family needs even k >= 4");
        f = detail::tilde_like(k, true);
        f.name = "Gstar(" + std::to_string(k) + ")";
        f.claims = {{"irc_colorable", {1, true}}, {"chi_irc", {k, false}}};
        f.description = "tilde construction over the cycle C_k";
        break;
    }
    return f;
}

enum class FixtureId
{
    chi_i3_tree,
    im1_example,
    im2_example,
    two_star_minimal,
    family_h_example
};

inline auto parse_fixture_id(std::string_view name) -> FixtureId
{
    if (name == "chi_i3_tree")
        return FixtureId::chi_i3_tree;
    if (name == "im1_example")
        return FixtureId::im1_example;
    if (name == "im2_example")
        return FixtureId::im2_example;
    if (name == "two_star_minimal")
        return FixtureId::two_star_minimal;
    if (name == "family_h_example")
        return FixtureId::family_h_example;
    throw ParameterError("unknown fixture '" + std::string(name) + "'");
}

/// Literal small graphs.
inline auto fixture(FixtureId id) -> FamilyInstance
{
    FamilyInstance f;
    switch (id) {
    case FixtureId::chi_i3_tree:
        f.name = "chi_i3_tree";
        f.graph = Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {4, 6}});
        f.labels = detail::numbered("v", 7);
        f.claims = {{"chi", {2, true}}, {"chi_i", {3, true}}};
        f.description = "tree on seven vertices";
        break;
    case FixtureId::im1_example:
        // v1 = 0, v2 = 3
        f.name = "im1_example";
        f.graph = Graph::from_edge_list(8, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5},
                                            {2, 6}, {7, 1}, {7, 2}});
        f.labels = {"v1", "a1", "a2", "v2", "b1", "b2", "b3", "b4"};
        f.claims = {{"chi_i", {2, true}}};
        f.description = "bipartite graph with an adjacent pair v1 v2 meeting Im1";
        break;
    case FixtureId::im2_example:
        f.name = "im2_example";
        f.graph = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
        f.labels = {"v1", "b1", "a1", "v2", "a2", "b2"};
        f.claims = {{"chi_i", {2, true}}};
        f.description = "six-cycle; v1 and v2 are antipodal";
        break;
    case FixtureId::two_star_minimal:
        f.name = "two_star_minimal";
        f.graph = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}});
        f.labels = {"v1", "v2", "x", "l1", "l2"};
        f.claims = {{"chi_i", {2, true}}};
        f.description = "stars at v1 and x joined through v2, one leaf each";
        break;
    case FixtureId::family_h_example: {
        f.name = "family_h_example";
        // left side v* = 0, L1..L3 = 1..3; right side R0..R4 = 4..8
        std::vector<Edge> edges = {{0, 4}, {0, 5}, {0, 6}};
        for (auto [l, rs] : std::vector<std::pair<int, std::vector<int>>>{
                 {1, {8, 7, 6, 4}}, {2, {8, 7, 5, 4}}, {3, {8, 7, 6, 5}}})
            for (int r : rs)
                edges.emplace_back(l, r);
        f.graph = Graph::from_edge_list(9, edges);
        f.labels = {"v*", "L1", "L2", "L3", "R0", "R1", "R2", "R3", "R4"};
        f.coloring = Coloring({0, 1, 1, 1, 2, 2, 2, 2, 2}, 3);
        f.claims = {{"irc_colorable", {1, true}}, {"chi_irc", {3, false}}};
        f.description = "bipartite graph with distinguished vertex v*; colouring ({v*}, V1 - v*, V2)";
        break;
    }
    }
    return f;
}

/**
 * A vertex v* such that for every other v on its side, both v and v* have
 * at least two external private neighbours with respect to {v, v*}.
 * Candidates are tried in index order.
 */
inline auto check_family_H_membership(const Graph & g) -> std::optional<int>
{
    auto parts = bipartition(g);
    if (! parts)
        throw PreconditionError("check_family_H_membership needs a bipartite graph");
    for (int star = 0; star < g.order(); ++star) {
        const auto & side = parts->first.test(star) ? parts->first : parts->second;
        bool ok = true;
        side.for_each([&](int v) {
            if (! ok || v == star)
                return;
            auto pair = VertexSet::single(v) | VertexSet::single(star);
            ok = external_private_neighbors(g, v, pair).count() >= 2
                 && external_private_neighbors(g, star, pair).count() >= 2;
        });
        if (ok)
            return star;
    }
    return std::nullopt;
}

} // namespace ircolor
