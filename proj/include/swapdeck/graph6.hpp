#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swapdeck/errors.hpp"
#include "swapdeck/graph.hpp"

namespace swapdeck {

// graph6 short form: one printable line per graph. Header byte is order+63;
// the body packs the upper-triangle adjacency bits in column-major order
// (x01, x02, x12, x03, x13, x23, ...) six bits per byte, most significant
// bit first, zero-padded, each byte offset by +63.
namespace graph6 {

inline constexpr char kOffset = 63;

inline std::string encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));
    int bits = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            bits = (bits << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(bits + kOffset));
                bits = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((bits << (6 - filled)) + kOffset));
    return out;
}

inline Graph decode(std::string_view line) {
    if (line.empty()) throw MalformedLine("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw MalformedLine("graph6: character out of range");

    const int header = static_cast<unsigned char>(line[0]) - kOffset;
    if (header == 63)
        throw MalformedLine("graph6: long form (order > 62) not supported");
    const int n = header;
    if (n < 1) throw MalformedLine("graph6: bad order header");
    if (n > Graph::kMaxOrder)
        throw OrderTooLarge("graph6: order " + std::to_string(n) + " exceeds supported 16");

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw MalformedLine("graph6: body length mismatch");

    Graph g(n);
    std::vector<Edge> edges;
    int pos = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++pos) {
            const int byte = static_cast<unsigned char>(line[1 + pos / 6]) - kOffset;
            if ((byte >> (5 - pos % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits beyond the triangle must be zero.
    for (int p = nbits; p < nbytes * 6; ++p) {
        const int byte = static_cast<unsigned char>(line[1 + p / 6]) - kOffset;
        if ((byte >> (5 - p % 6)) & 1)
            throw MalformedLine("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

/// Reads the next graph6 token from a line-oriented stream, skipping blank
/// lines and the optional ">>graph6<<" stream header. Returns nothing at EOF.
inline std::optional<std::string> next_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        constexpr std::string_view kHeader = ">>graph6<<";
        if (line.rfind(kHeader, 0) == 0) line.erase(0, kHeader.size());
        if (line.empty()) continue;
        return line;
    }
    return std::nullopt;
}

} // namespace graph6
} // namespace swapdeck
