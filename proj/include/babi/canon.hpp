#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "babi/graph.hpp"

namespace babi {

// Canonical certificate of a vertex-colored graph (iterated refinement with
// individualization backtracking).  Two colored graphs have equal
// certificates iff they are isomorphic by a color-preserving map.  Meant for
// the small graphs the search handles (n <= ~20).
using Certificate64 = std::vector<std::uint64_t>;

namespace canon_detail {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by neighbor counts into every other
// cell until stable.  Cell order is maintained deterministically.
inline void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t target = 0; target < cells.size(); ++target) {
            // counts of neighbors inside cells[target]
            std::vector<int> cnt(g.order(), 0);
            for (int v : cells[target])
                for (int w : g.neighbors(v)) ++cnt[w];
            for (std::size_t i = 0; i < cells.size(); ++i) {
                auto& cell = cells[i];
                if (cell.size() <= 1) continue;
                std::stable_sort(cell.begin(), cell.end(),
                                 [&](int a, int b) { return cnt[a] < cnt[b]; });
                // split at count boundaries
                std::vector<std::vector<int>> parts;
                std::size_t start = 0;
                for (std::size_t j = 1; j <= cell.size(); ++j)
                    if (j == cell.size() || cnt[cell[j]] != cnt[cell[start]]) {
                        parts.emplace_back(cell.begin() + start, cell.begin() + j);
                        start = j;
                    }
                if (parts.size() > 1) {
                    cells.erase(cells.begin() + i);
                    cells.insert(cells.begin() + i, parts.begin(), parts.end());
                    changed = true;
                    i += parts.size() - 1;
                }
            }
        }
    }
}

inline Certificate64 certificate_for(const Graph& g, const std::vector<int>& colors,
                                     const std::vector<int>& order) {
    const int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Certificate64 cert;
    cert.push_back(static_cast<std::uint64_t>(n));
    for (int i = 0; i < n; ++i) cert.push_back(static_cast<std::uint64_t>(colors[order[i]]));
    std::uint64_t acc = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            acc = (acc << 1) | (g.has_edge(order[i], order[j]) ? 1u : 0u);
            if (++bits == 64) {
                cert.push_back(acc);
                acc = 0;
                bits = 0;
            }
        }
    if (bits) cert.push_back(acc << (64 - bits));
    return cert;
}

inline void search_canon(const Graph& g, const std::vector<int>& colors, Cells cells,
                         Certificate64& best, bool& have_best) {
    refine(g, cells);
    // first non-singleton cell
    int ci = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) { ci = static_cast<int>(i); break; }
    if (ci < 0) {
        std::vector<int> order;
        for (auto& c : cells) order.push_back(c.front());
        Certificate64 cert = certificate_for(g, colors, order);
        if (!have_best || cert < best) {
            best = std::move(cert);
            have_best = true;
        }
        return;
    }
    // vertices with identical neighbor sets are interchangeable; branch once
    // per distinct adjacency row
    std::vector<int> reps;
    for (int v : cells[ci]) {
        bool dup = false;
        for (int r : reps)
            if (g.neighbors(v) == g.neighbors(r)) { dup = true; break; }
        if (!dup) reps.push_back(v);
    }
    for (int v : reps) {
        Cells next;
        next.reserve(cells.size() + 1);
        for (int i = 0; i < ci; ++i) next.push_back(cells[i]);
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cells[ci])
            if (w != v) rest.push_back(w);
        next.push_back(std::move(rest));
        for (std::size_t i = ci + 1; i < cells.size(); ++i) next.push_back(cells[i]);
        search_canon(g, colors, std::move(next), best, have_best);
    }
}

}  // namespace canon_detail

inline Certificate64 canonical_form(const Graph& g, const std::vector<int>& colors) {
    // initial cells: vertices grouped by color, colors ascending
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    canon_detail::Cells cells;
    for (int v : order) {
        if (!cells.empty() && colors[cells.back().front()] == colors[v])
            cells.back().push_back(v);
        else
            cells.push_back({v});
    }
    Certificate64 best;
    bool have = false;
    canon_detail::search_canon(g, colors, std::move(cells), best, have);
    return best;
}

inline Certificate64 canonical_form(const Graph& g) {
    return canonical_form(g, std::vector<int>(g.order(), 0));
}

}  // namespace babi
