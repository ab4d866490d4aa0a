#pragma once

#include "ircolor/errors.hpp"
#include "ircolor/graph.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace ircolor {

inline constexpr int graph6_max_order = 62;

/// Canonical graph6 record (no header, no newline).
inline auto to_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    if (n > graph6_max_order)
        throw UnsupportedSizeError("graph6 output supports n <= 62, got " + std::to_string(n));
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

/**
 * Decodes one graph6 record. An optional ">>graph6<<" header and trailing
 * whitespace are accepted; anything else out of place is a FormatError.
 */
inline auto parse_graph6(std::string_view text) -> Graph
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty())
        throw FormatError("empty graph6 record");
    for (char c : text)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw FormatError("byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126 in graph6 record");

    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63)
        throw UnsupportedSizeError("graph6 records with n > 62 are not supported");
    std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::size_t expected = (bits + 5) / 6;
    auto payload = text.substr(1);
    if (payload.size() != expected)
        throw FormatError("graph6 record for n=" + std::to_string(n) + " needs " + std::to_string(expected)
                          + " payload bytes, found " + std::to_string(payload.size()));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = static_cast<unsigned char>(payload[k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (bits % 6 != 0) {
        int last = static_cast<unsigned char>(payload.back()) - 63;
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw FormatError("graph6 padding bits are not zero");
    }
    return Graph::from_edge_list(n, edges);
}

/// "n m" header, one "u v" line per edge.
inline auto to_edge_list_text(const Graph & g) -> std::string
{
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

enum class InputFormat
{
    graph6,
    edgelist
};

inline auto parse_input_format(std::string_view name) -> InputFormat
{
    if (name == "graph6" || name == "g6")
        return InputFormat::graph6;
    if (name == "edgelist" || name == "edge-list")
        return InputFormat::edgelist;
    throw ParameterError("unknown format '" + std::string(name) + "' (expected graph6 or edgelist)");
}

/// A parse failure tied to the 1-based input line where it was detected.
class InputError : public FormatError
{
  public:
    InputError(int line, const std::string & what)
        : FormatError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    [[nodiscard]] auto line() const -> int { return line_; }

  private:
    int line_;
};

struct GraphRecord
{
    Graph graph;
    /// Line on which the record starts.
    int line = 0;
};

/**
 * Reads a stream of graphs, one graph6 record per line or consecutive
 * edge-list blocks. Blank lines and lines starting with '#' are skipped in
 * both formats. Any error surfaces as InputError.
 */
class GraphReader
{
  public:
    GraphReader(std::istream & in, InputFormat format) : in_(in), format_(format) {}

    auto next() -> std::optional<GraphRecord>
    {
        std::string line;
        if (! next_content_line(line))
            return std::nullopt;
        int start = line_no_;
        if (format_ == InputFormat::graph6) {
            try {
                return GraphRecord{parse_graph6(line), start};
            }
            catch (const InputError &) {
                throw;
            }
            catch (const Error & e) {
                throw InputError(start, e.what());
            }
        }

        std::istringstream head(line);
        long long n = -1, m = -1;
        std::string rest;
        if (! (head >> n >> m) || (head >> rest) || n < 0 || m < 0)
            throw InputError(start, "expected header \"n m\"");
        if (n > max_vertices)
            throw InputError(start, "vertex count " + std::to_string(n) + " exceeds " + std::to_string(max_vertices));
        std::vector<Edge> edges;
        for (long long i = 0; i < m; ++i) {
            if (! next_content_line(line))
                throw InputError(line_no_, "expected " + std::to_string(m) + " edges, input ended after " + std::to_string(i));
            std::istringstream el(line);
            long long u = -1, v = -1;
            if (! (el >> u >> v) || (el >> rest))
                throw InputError(line_no_, "expected edge \"u v\"");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError(line_no_, "edge endpoint outside 0.." + std::to_string(n - 1));
            if (u == v)
                throw InputError(line_no_, "loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        return GraphRecord{Graph::from_edge_list(static_cast<int>(n), edges), start};
    }

  private:
    auto next_content_line(std::string & line) -> bool
    {
        while (std::getline(in_, line)) {
            ++line_no_;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;
            if (format_ == InputFormat::graph6)
                line = line.substr(first);
            return true;
        }
        return false;
    }

    std::istream & in_;
    InputFormat format_;
    int line_no_ = 0;
};

} // namespace ircolor
