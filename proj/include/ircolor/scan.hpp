#pragma once

#include "ircolor/characterization.hpp"
#include "ircolor/engine.hpp"
#include "ircolor/oracle.hpp"

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ircolor {

enum class ScanMode
{
    chain,
    bounds,
    conjecture,
    characterization
};

inline auto parse_scan_mode(std::string_view name) -> ScanMode
{
    if (name == "chain")
        return ScanMode::chain;
    if (name == "bounds")
        return ScanMode::bounds;
    if (name == "conjecture")
        return ScanMode::conjecture;
    if (name == "characterization")
        return ScanMode::characterization;
    throw ParameterError("unknown scan mode '" + std::string(name) + "'");
}

/// One violated check on one graph, with enough detail to replay it.
struct Finding
{
    std::string check;
    std::string detail;
    /// Conjecture candidates only: whether the oracle agrees no χ-colour IRC colouring exists.
    std::optional<bool> oracle_confirmed;
};

struct ScanOutcome
{
    /// Set when the graph lies outside the mode's domain (e.g. non-bipartite for characterization).
    std::optional<std::string> skipped;
    std::vector<Finding> findings;
    std::map<std::string, int> values;
};

struct ScanOptions
{
    int oracle_cap = oracle::default_cap;
};

namespace detail {

    inline auto set_text(const VertexSet & s) -> std::string
    {
        std::ostringstream out;
        out << '{';
        bool first = true;
        for (int v : s) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << '}';
        return out.str();
    }

    inline auto scan_chain(const Graph & g, ScanOutcome & out, const CancelToken & cancel) -> void
    {
        int chi = chromatic_number(g, cancel).value;
        int chi_i = irredundance_chromatic_number(g, cancel).value;
        int chi_gamma = gamma_chromatic_number(g, cancel).value;
        int chi_d = dominator_chromatic_number(g, cancel).value;
        auto chi_gd = g.order() >= 2 ? global_dominator_chromatic_number(g, cancel) : std::nullopt;
        int ir = ir_number(g, cancel).value;
        int gamma = gamma_number(g, cancel).value;
        out.values = {{"chi", chi}, {"chi_i", chi_i}, {"chi_gamma", chi_gamma}, {"chi_d", chi_d}, {"ir", ir}, {"gamma", gamma}};
        if (chi_gd)
            out.values["chi_gd"] = chi_gd->value;

        auto order = [&](const char * name, int lo, int hi) {
            if (lo > hi)
                out.findings.push_back({name, std::to_string(lo) + " > " + std::to_string(hi), std::nullopt});
        };
        order("chi <= chi_i", chi, chi_i);
        order("chi_i <= chi_gamma", chi_i, chi_gamma);
        order("chi_gamma <= chi_d", chi_gamma, chi_d);
        if (chi_gd)
            order("chi_d <= chi_gd", chi_d, chi_gd->value);
        order("ir <= gamma", ir, gamma);

        auto family = minimal_dominating_sets(g, cancel);
        while (auto d = family.next())
            if (! is_maximal_irredundant(g, *d))
                out.findings.push_back({"minimal dominating set is maximal irredundant", set_text(*d), std::nullopt});
    }

    inline auto scan_bounds(const Graph & g, ScanOutcome & out, const CancelToken & cancel) -> void
    {
        int chi = chromatic_number(g, cancel).value;
        int ir = ir_number(g, cancel).value;
        int chi_i = irredundance_chromatic_number(g, cancel).value;
        out.values = {{"chi", chi}, {"ir", ir}, {"chi_i", chi_i}};
        if (chi_i < std::max(chi, ir))
            out.findings.push_back({"max(chi, ir) <= chi_i", std::to_string(chi_i) + " < max(" + std::to_string(chi) + ", "
                                                                 + std::to_string(ir) + ")", std::nullopt});
        if (chi_i > chi + ir - 1)
            out.findings.push_back({"chi_i <= chi + ir - 1", std::to_string(chi_i) + " > " + std::to_string(chi + ir - 1),
                                    std::nullopt});
    }

    /// Does some proper colouring with exactly k colours pass the naive committee check?
    inline auto oracle_has_irc_coloring(const Graph & g, int k) -> bool
    {
        auto cursor = oracle::independent_partitions(g, k);
        while (auto c = cursor.next())
            if (oracle::naive::all_committees_irredundant(g, *c))
                return true;
        return false;
    }

    inline auto scan_conjecture(const Graph & g, ScanOutcome & out, const ScanOptions & opt, const CancelToken & cancel)
        -> void
    {
        if (! irc_colorability(g, cancel)) {
            out.skipped = "not IRC-colourable";
            return;
        }
        int chi = chromatic_number(g, cancel).value;
        out.values = {{"chi", chi}};
        if (irc_coloring_with_colors(g, chi, cancel))
            return;
        Finding f{"IRC colouring with chi colours", "none with " + std::to_string(chi) + " colours", std::nullopt};
        if (g.order() <= opt.oracle_cap)
            f.oracle_confirmed = ! oracle_has_irc_coloring(g, chi);
        out.findings.push_back(f);
    }

    inline auto scan_characterization(const Graph & g, ScanOutcome & out, const CancelToken & cancel) -> void
    {
        if (! is_connected(g) || g.order() < 2 || ! is_bipartite(g)) {
            out.skipped = "not a connected bipartite graph";
            return;
        }
        if (detail::is_star(g)) {
            out.skipped = "star";
            return;
        }
        bool two = irredundance_chromatic_number(g, cancel).value == 2;
        auto im1 = property_Im1(g);
        auto im2 = property_Im2(g);
        auto fam = family_F_membership(g);
        bool prop = im1 || im2;
        bool member = fam.kind == CharacterizationKind::F1 || fam.kind == CharacterizationKind::F2
                      || fam.kind == CharacterizationKind::F3;
        out.values = {{"chi_i_is_2", two}, {"Im1_or_Im2", prop}, {"F_member", member}};
        if (two != prop || two != member) {
            std::string detail = "chi_i=2:" + std::string(two ? "yes" : "no") + " Im:" + (im1 ? "Im1" : im2 ? "Im2" : "none")
                                 + " F:" + to_string(fam.kind);
            out.findings.push_back({"chi_i = 2 equivalence", detail, std::nullopt});
        }
    }

} // namespace detail

inline auto scan_graph(const Graph & g, ScanMode mode, const ScanOptions & opt = {},
                       const CancelToken & cancel = no_cancel()) -> ScanOutcome
{
    ScanOutcome out;
    if (g.order() == 0) {
        out.skipped = "empty graph";
        return out;
    }
    switch (mode) {
    case ScanMode::chain: detail::scan_chain(g, out, cancel); break;
    case ScanMode::bounds: detail::scan_bounds(g, out, cancel); break;
    case ScanMode::conjecture: detail::scan_conjecture(g, out, opt, cancel); break;
    case ScanMode::characterization: detail::scan_characterization(g, out, cancel); break;
    }
    return out;
}

} // namespace ircolor
