#pragma once

#include "ircolor/coloring.hpp"
#include "ircolor/domination_coloring.hpp"
#include "ircolor/invariant.hpp"
#include "ircolor/irc.hpp"
#include "ircolor/irredundance.hpp"

namespace ircolor {

/// Computes one invariant with the fast solvers.
inline auto compute_invariant(const Graph & g, Invariant id, const CancelToken & cancel = no_cancel()) -> InvariantResult
{
    if (! applicable(id, g))
        throw ParameterError(to_string(id) + " is undefined for n=" + std::to_string(g.order()));
    switch (id) {
    case Invariant::chi: {
        auto r = chromatic_number(g, cancel);
        return {r.value, r.witness, std::nullopt};
    }
    case Invariant::ir: {
        auto r = ir_number(g, cancel);
        return {r.value, std::nullopt, r.witness};
    }
    case Invariant::gamma: {
        auto r = gamma_number(g, cancel);
        return {r.value, std::nullopt, r.witness};
    }
    case Invariant::chi_i: {
        auto r = irredundance_chromatic_number(g, cancel);
        return {r.value, r.cert.coloring, r.cert.rainbow_set};
    }
    case Invariant::chi_gamma: {
        auto r = gamma_chromatic_number(g, cancel);
        return {r.value, r.cert.coloring, r.cert.rainbow_set};
    }
    case Invariant::chi_d: {
        auto r = dominator_chromatic_number(g, cancel);
        return {r.value, r.witness, std::nullopt};
    }
    case Invariant::chi_gd: {
        if (auto r = global_dominator_chromatic_number(g, cancel))
            return {r->value, r->witness, std::nullopt};
        return {};
    }
    case Invariant::irc_colorable: {
        if (g.order() == 0)
            return {0, std::nullopt, std::nullopt};
        if (auto c = irc_colorability(g, cancel))
            return {1, *c, std::nullopt};
        return {0, std::nullopt, std::nullopt};
    }
    case Invariant::chi_irc: {
        if (auto r = irc_chromatic_number(g, cancel))
            return {r->value, r->witness, std::nullopt};
        return {};
    }
    }
    return {};
}

} // namespace ircolor
