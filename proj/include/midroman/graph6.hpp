#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "midroman/errors.hpp"
#include "midroman/graph.hpp"

namespace midroman {

namespace detail {

// graph6 packs the upper triangle in column order: (0,1), (0,2), (1,2),
// (0,3), ... so the bit position of pair (i,j) with i<j is j(j-1)/2 + i.
inline long g6_bit_count(long n) { return n * (n - 1) / 2; }

inline int g6_char_value(char c) {
    if (c < 63 || c > 126)
        throw parse_error(parse_error::kind::bad_character,
                          std::string("invalid graph6 character '") + c + "'");
    return c - 63;
}

} // namespace detail

/// Decodes one graph6 line into a canonical Graph.
inline Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty())
        throw parse_error(parse_error::kind::empty_input, "empty graph6 input");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != 126) {
        n = detail::g6_char_value(line[0]);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != 126) {
        if (line.size() < 4)
            throw parse_error(parse_error::kind::truncated, "truncated graph6 size header");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | detail::g6_char_value(line[k]);
        pos = 4;
    } else {
        if (line.size() < 8)
            throw parse_error(parse_error::kind::truncated, "truncated graph6 size header");
        n = 0;
        for (int k = 2; k <= 7; ++k) n = (n << 6) | detail::g6_char_value(line[k]);
        pos = 8;
    }
    if (n > 100000)
        throw parse_error(parse_error::kind::unsupported,
                          "graph6 order " + std::to_string(n) + " not supported");

    long bits = detail::g6_bit_count(n);
    long chars = (bits + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(pos) < chars)
        throw parse_error(parse_error::kind::truncated,
                          "graph6 body too short for n=" + std::to_string(n));
    if (static_cast<long>(line.size()) - static_cast<long>(pos) > chars)
        throw parse_error(parse_error::kind::malformed,
                          "trailing characters after graph6 body");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (long k = 0; k < chars; ++k) {
        int val = detail::g6_char_value(line[pos + k]);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (val >> b) & 1;
            if (bit >= bits) {
                if (set)
                    throw parse_error(parse_error::kind::malformed,
                                      "nonzero padding bits in graph6 body");
                continue;
            }
            if (set) {
                // invert position -> (i,j): find column j with j(j-1)/2 <= bit
                long j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                long i = bit - j * (j - 1) / 2;
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

/// Encodes a canonical Graph as one graph6 line (no newline).
inline std::string encode_graph6(const Graph& g) {
    std::string out;
    long n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
    } else {
        throw std::invalid_argument("graph too large for graph6 encoder");
    }
    long bits = detail::g6_bit_count(n);
    std::vector<bool> bv(static_cast<std::size_t>(bits), false);
    for (auto [u, v] : g.edges) bv[static_cast<long>(v) * (v - 1) / 2 + u] = true;
    for (long k = 0; k < bits; k += 6) {
        int val = 0;
        for (int b = 0; b < 6; ++b)
            val = (val << 1) | ((k + b < bits && bv[k + b]) ? 1 : 0);
        out.push_back(static_cast<char>(63 + val));
    }
    return out;
}

} // namespace midroman
