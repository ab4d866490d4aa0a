#pragma once

#include "ircolor/engine.hpp"
#include "ircolor/oracle.hpp"

#include <vector>

namespace ircolor {

struct CrossCheckEntry
{
    Invariant id;
    std::optional<int> fast;
    std::optional<int> oracle;

    [[nodiscard]] auto agree() const -> bool { return fast == oracle; }
};

struct CrossCheckReport
{
    std::vector<CrossCheckEntry> entries;

    [[nodiscard]] auto disagreements() const -> std::vector<CrossCheckEntry>
    {
        std::vector<CrossCheckEntry> out;
        for (const auto & e : entries)
            if (! e.agree())
                out.push_back(e);
        return out;
    }

    [[nodiscard]] auto ok() const -> bool { return disagreements().empty(); }
};

/// Every applicable invariant by the fast engine and by the oracle. Throws SizeCapError above cap.
inline auto cross_check(const Graph & g, int cap = oracle::default_cap, const std::vector<Invariant> & which = {
                                                                              all_invariants.begin(), all_invariants.end()})
    -> CrossCheckReport
{
    if (g.order() > cap)
        throw SizeCapError("cross_check limited to n <= " + std::to_string(cap) + ", got n=" + std::to_string(g.order()));
    CrossCheckReport report;
    for (auto id : which) {
        if (! applicable(id, g))
            continue;
        report.entries.push_back({id, compute_invariant(g, id).value, oracle::oracle_invariant(g, id, cap).value});
    }
    return report;
}

} // namespace ircolor
