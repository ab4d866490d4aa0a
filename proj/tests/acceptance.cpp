#include "ircolor/cross_check.hpp"
#include "ircolor/enumerate.hpp"
#include "ircolor/families.hpp"
#include "ircolor/scan.hpp"
#include "support.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace ircolor;
using namespace ircolor::testing;

namespace {

/// Collects failed sub-checks for one criterion.
struct Tally
{
    int checks = 0;
    std::vector<std::string> failed;

    auto expect(bool ok, const std::string & what) -> void
    {
        ++checks;
        if (! ok)
            failed.push_back(what);
    }
};

auto value_of(const Graph & g, Invariant id) -> std::optional<int> { return compute_invariant(g, id).value; }

auto c1_reference_values(Tally & t) -> void
{
    t.expect(value_of(fixture(FixtureId::chi_i3_tree).graph, Invariant::chi_i) == 3, "chi_i(seven-vertex tree) = 3");
    for (int n = 1; n <= 6; ++n)
        t.expect(value_of(complete(n), Invariant::chi_i) == n, "chi_i(K" + std::to_string(n) + ")");
    for (int n = 2; n <= 7; ++n)
        t.expect(value_of(star(n - 1), Invariant::chi_i) == 2, "chi_i(K1," + std::to_string(n - 1) + ")");
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n)
            t.expect(value_of(complete_bipartite(m, n), Invariant::chi_i) == 2,
                     "chi_i(K" + std::to_string(m) + "," + std::to_string(n) + ")");
    t.expect(value_of(gen_family_B(6, 4).graph, Invariant::chi_i) == 4, "chi_i(B(6,4)) = 4");
    t.expect(value_of(cycle(4), Invariant::chi_irc) == 2, "chi_irc(C4) = 2");
    for (int s = 1; s <= 4; ++s)
        t.expect(value_of(cycle(2 * s + 1), Invariant::irc_colorable) == 0,
                 "C" + std::to_string(2 * s + 1) + " not IRC-colourable");
    // K1 keeps itself as private neighbour, so the check starts at K2
    for (int n = 2; n <= 6; ++n)
        t.expect(value_of(complete(n), Invariant::irc_colorable) == 0, "K" + std::to_string(n) + " not IRC-colourable");
}

auto c2_families(Tally & t) -> void
{
    for (auto [n, k] : {std::pair{6, 3}, {8, 3}, {8, 4}}) {
        auto f = gen_family_A(n, k);
        for (auto id : {Invariant::chi, Invariant::ir, Invariant::chi_i}) {
            auto fast = value_of(f.graph, id);
            t.expect(fast == k, f.name + " " + to_string(id) + " = k");
            t.expect(oracle::oracle_invariant(f.graph, id).value == fast, f.name + " " + to_string(id) + " oracle");
        }
    }
    auto z = gen_family_Z(3, 2);
    t.expect(z.graph.order() == 14, "Z(3,2) has 14 vertices");
    t.expect(chromatic_number(z.graph).value == 3, "chi(Z(3,2)) = 3");
    auto witness = VertexSet::single(z.index_of("v^1")) | VertexSet::single(z.index_of("v^2"));
    t.expect(ir_verify(z.graph, witness, 2).ok(), "ir(Z(3,2)) = 2 by size-capped verify");
    t.expect(irredundance_chromatic_number(z.graph).value == 4, "chi_i(Z(3,2)) = 4");
    int bad = 0;
    auto family = maximal_irredundant_sets(z.graph);
    while (auto r = family.next())
        for (int i = 1; i <= 2; ++i) {
            auto suffix = "^" + std::to_string(i);
            VertexSet pendants;
            for (int j = 1; j <= 3; ++j)
                pendants.set(z.index_of("p" + std::to_string(j) + suffix));
            if (! r->test(z.index_of("v" + suffix)) && ! pendants.is_subset_of(*r))
                ++bad;
        }
    t.expect(bad == 0, "every maximal irredundant set of Z(3,2) holds v^i or all its pendants");
}

auto c3_irc_constructions(Tally & t) -> void
{
    std::vector<std::pair<FamilyInstance, int>> cases = {
        {gen_irc_family(IrcFamilyKind::cut_vertex, 3), 3},
        {gen_irc_family(IrcFamilyKind::bridge, 3, 3), 4},
        {gen_irc_family(IrcFamilyKind::tilde, 3), 3},
        {gen_irc_family(IrcFamilyKind::gstar, 4), 4},
        {fixture(FixtureId::family_h_example), 3},
    };
    for (const auto & [f, classes] : cases) {
        const auto & c = *f.coloring;
        bool shape = c.is_proper(f.graph) && c.is_surjective() && c.colors() == classes;
        t.expect(shape, f.name + " colouring is proper with " + std::to_string(classes) + " classes");
        if (! shape)
            continue;
        auto v = is_irc_coloring(f.graph, c);
        std::string why;
        if (! v.is_irc) {
            std::ostringstream s;
            s << " (committee";
            for (int u : *v.violating_rc)
                s << ' ' << f.labels[static_cast<std::size_t>(u)];
            s << " leaves " << f.labels[static_cast<std::size_t>(*v.violating_vertex)] << " without private neighbour)";
            why = s.str();
        }
        t.expect(v.is_irc, f.name + " colouring is IRC, chi_irc >= " + std::to_string(classes) + why);
    }
    t.expect(check_family_H_membership(fixture(FixtureId::family_h_example).graph).has_value(),
             "family_h_example has a vertex v* meeting the membership condition");
    for (const auto & g : load_graph6("all_1to6.g6")) {
        auto fast = irc_chromatic_number(g);
        auto slow = oracle::oracle_invariant(g, Invariant::chi_irc).value;
        t.expect((fast ? std::optional<int>(fast->value) : std::nullopt) == slow, "chi_irc oracle agreement on " + to_graph6(g));
    }
}

auto random_sevens() -> std::vector<Graph>
{
    std::mt19937 rng(20261015);
    std::uniform_real_distribution<double> density(0.25, 0.75);
    std::vector<Graph> out;
    while (out.size() < 200)
        out.push_back(random_connected_graph(7, density(rng), rng));
    return out;
}

auto oracle_stream() -> std::vector<Graph>
{
    auto graphs = load_graph6("connected_upto6.g6");
    auto sevens = random_sevens();
    graphs.insert(graphs.end(), sevens.begin(), sevens.end());
    return graphs;
}

auto c4_oracle_equivalence(Tally & t) -> void
{
    for (const auto & g : oracle_stream()) {
        auto report = cross_check(g);
        for (const auto & d : report.disagreements())
            t.expect(false, to_string(d.id) + " on " + to_graph6(g));
        t.expect(report.ok(), "cross_check " + to_graph6(g));
    }
}

auto c5_inequalities(Tally & t) -> void
{
    for (const auto & g : oracle_stream())
        for (auto mode : {ScanMode::chain, ScanMode::bounds}) {
            auto r = scan_graph(g, mode);
            for (const auto & f : r.findings)
                t.expect(false, f.check + " on " + to_graph6(g) + ": " + f.detail);
            t.expect(r.findings.empty(), "inequalities on " + to_graph6(g));
        }
}

auto c6_characterization(Tally & t) -> void
{
    auto graphs = load_graph6("connected_upto6.g6");
    auto sevens = load_graph6("connected_7.g6");
    graphs.insert(graphs.end(), sevens.begin(), sevens.end());
    int scanned = 0;
    for (const auto & g : graphs) {
        auto r = scan_graph(g, ScanMode::characterization);
        if (r.skipped)
            continue;
        ++scanned;
        for (const auto & f : r.findings)
            t.expect(false, f.check + " on " + to_graph6(g) + ": " + f.detail);
        t.expect(r.findings.empty(), "characterization on " + to_graph6(g));
    }
    t.expect(scanned > 0, "stream contains connected bipartite non-stars");
}

auto c7_conjecture(Tally & t) -> void
{
    for (const auto & g : load_graph6("connected_upto6.g6")) {
        auto r = scan_graph(g, ScanMode::conjecture);
        for (const auto & f : r.findings) {
            t.expect(f.oracle_confirmed.has_value(), "oracle verdict present for " + to_graph6(g));
            t.expect(! f.oracle_confirmed.value_or(false), "oracle-confirmed counterexample " + to_graph6(g));
        }
        t.expect(true, "scanned " + to_graph6(g));
    }
}

auto c8_codec(Tally & t) -> void
{
    for (int n = 0; n <= 5; ++n)
        for_each_labelled_graph(n, [&](const Graph & g) {
            t.expect(parse_graph6(to_graph6(g)) == g, "round trip " + to_graph6(g));
        });
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> order(6, 20);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        auto g = random_graph(order(rng), density(rng), rng);
        t.expect(parse_graph6(to_graph6(g)) == g, "round trip " + to_graph6(g));
    }
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    std::set<int> known;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--known-failure") == 0 && i + 1 < argc)
            known.insert(std::atoi(argv[++i]));

    std::vector<std::pair<std::string, std::function<void(Tally &)>>> criteria = {
        {"reference value fixtures", c1_reference_values},
        {"family constructions", c2_families},
        {"IRC constructions", c3_irc_constructions},
        {"oracle equivalence", c4_oracle_equivalence},
        {"inequality suites", c5_inequalities},
        {"chi_i = 2 characterization scan", c6_characterization},
        {"IRC colouring with chi colours scan", c7_conjecture},
        {"graph6 codec", c8_codec},
    };

    std::set<int> failing;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        Tally t;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(t);
        }
        catch (const std::exception & e) {
            t.failed.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = t.failed.empty();
        if (! ok)
            failing.insert(id);
        std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << t.checks - static_cast<int>(t.failed.size()) << "/" << t.checks << " checks, " << std::fixed
                  << std::setprecision(2) << secs << " s)\n";
        for (std::size_t j = 0; j < t.failed.size() && j < 10; ++j)
            std::cout << "    failed: " << t.failed[j] << '\n';
    }
    std::cout << criteria.size() - failing.size() << "/" << criteria.size() << " criteria pass\n";
    if (failing == known)
        return 0;
    std::cout << "failing criteria differ from the expected set given by --known-failure\n";
    return 1;
}
