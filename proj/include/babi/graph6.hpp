#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "babi/graph.hpp"

namespace babi {

// Standard header-less graph6: short form for n <= 62, the 4-byte long form
// ('~' + 18 bits) up to 258047 vertices.  Bits are the upper triangle in
// column order, six per byte, each byte offset by 63.

struct Graph6ParseError : std::runtime_error {
    std::size_t offset;
    explicit Graph6ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

inline std::string graph6_encode(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6_encode: order too large");
    }
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw Graph6ParseError("truncated input", pos);
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126) throw Graph6ParseError("byte out of graph6 range", pos);
        ++pos;
        return c - 63;
    };
    long long n;
    if (pos < s.size() && s[pos] == '~') {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw Graph6ParseError("8-byte order form not supported", pos);
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    std::vector<std::vector<int>> adj(n);
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                acc = next();
                bits = 6;
            }
            if (acc & (1 << (bits - 1))) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
            --bits;
        }
    if (pos != s.size()) throw Graph6ParseError("trailing bytes after graph data", pos);
    return Graph::from_adjacency(std::move(adj));
}

}  // namespace babi
