#pragma once

#include "ircolor/coloring.hpp"
#include "ircolor/errors.hpp"
#include "ircolor/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ircolor {

enum class Invariant
{
    chi,
    ir,
    gamma,
    chi_i,
    chi_gamma,
    chi_d,
    chi_gd,
    irc_colorable,
    chi_irc
};

inline constexpr std::array all_invariants = {Invariant::chi,       Invariant::ir,    Invariant::gamma,
                                              Invariant::chi_i,     Invariant::chi_gamma, Invariant::chi_d,
                                              Invariant::chi_gd,    Invariant::irc_colorable, Invariant::chi_irc};

inline auto to_string(Invariant id) -> std::string
{
    switch (id) {
    case Invariant::chi: return "chi";
    case Invariant::ir: return "ir";
    case Invariant::gamma: return "gamma";
    case Invariant::chi_i: return "chi_i";
    case Invariant::chi_gamma: return "chi_gamma";
    case Invariant::chi_d: return "chi_d";
    case Invariant::chi_gd: return "chi_gd";
    case Invariant::irc_colorable: return "irc_colorable";
    case Invariant::chi_irc: return "chi_irc";
    }
    return "?";
}

inline auto parse_invariant(std::string_view name) -> Invariant
{
    for (auto id : all_invariants)
        if (to_string(id) == name)
            return id;
    throw ParameterError("unknown invariant '" + std::string(name) + "'");
}

/// Whether the invariant is defined on g at all (as opposed to defined but absent).
inline auto applicable(Invariant id, const Graph & g) -> bool
{
    switch (id) {
    case Invariant::chi_gd: return g.order() >= 2;
    case Invariant::chi:
    case Invariant::gamma:
    case Invariant::irc_colorable:
    case Invariant::chi_irc: return true;
    default: return g.order() >= 1;
    }
}

/**
 * Value of one invariant. value is absent when no colouring of the required
 * kind exists (χ_gd, χ_irc); irc_colorable is reported as 1 or 0.
 */
struct InvariantResult
{
    std::optional<int> value;
    std::optional<Coloring> coloring;
    std::optional<VertexSet> set;
};

} // namespace ircolor
