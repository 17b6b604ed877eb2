#pragma once

// Brute-force reference implementations, deliberately independent of the
// library's algorithms: girth by exhaustive simple-cycle enumeration,
// isomorphism by backtracking over degree-compatible bijections, and labeled
// enumeration of all graphs with a fixed degree multiset.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "babi/graph.hpp"

namespace oracle {

// Shortest cycle by DFS over all simple paths whose minimum vertex is the
// start (every cycle is found from its smallest vertex).  Exponential; only
// for graphs with <= ~12 vertices.
inline std::optional<int> girth_bruteforce(const babi::Graph& g) {
    const int n = g.order();
    std::optional<int> best;
    std::vector<int> path;
    std::vector<char> onpath(n, 0);
    auto dfs = [&](auto&& self) -> void {
        int u = path.back();
        for (int w : g.neighbors(u)) {
            if (w == path.front() && path.size() >= 3) {
                int len = static_cast<int>(path.size());
                if (!best || len < *best) best = len;
            } else if (w > path.front() && !onpath[w]) {
                if (best && static_cast<int>(path.size()) + 1 >= *best) continue;
                onpath[w] = 1;
                path.push_back(w);
                self(self);
                path.pop_back();
                onpath[w] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        std::fill(onpath.begin(), onpath.end(), 0);
        onpath[s] = 1;
        dfs(dfs);
    }
    return best;
}

// Backtracking isomorphism test (degree-respecting vertex bijections).
inline bool isomorphic_bruteforce(const babi::Graph& a, const babi::Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_counts() != b.degree_counts()) return false;
    const int n = a.order();
    std::vector<int> map(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int u) -> bool {
        if (u == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || a.degree(u) != b.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                if (a.has_edge(u, w) != b.has_edge(map[w], v)) ok = false;
            if (!ok) continue;
            used[v] = 1;
            map[u] = v;
            if (self(self, u + 1)) return true;
            used[v] = 0;
            map[u] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// All labeled graphs on the degree sequence `target` (index = vertex) that
// satisfy girth >= g, reported through `visit`.  Pure backtracking over the
// pair list; no isomorphism pruning.
inline void enumerate_labeled(const std::vector<int>& target, int min_girth,
                              const std::function<void(const babi::Graph&)>& visit) {
    const int n = static_cast<int>(target.size());
    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg(n, 0);

    auto dist_uv = [&](int s, int t) {
        std::vector<int> dist(n, -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == t) return dist[t];
            for (int w : adj[q[i]])
                if (dist[w] < 0) { dist[w] = dist[q[i]] + 1; q.push_back(w); }
        }
        return dist[t] < 0 ? n + 10 : dist[t];
    };

    // partners of the frontier vertex are chosen in increasing order so that
    // each labeled graph is produced exactly once
    auto rec = [&](auto&& self, int last_u, int from) -> void {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < target[v]) { u = v; break; }
        if (u < 0) {
            std::vector<babi::Edge> es;
            for (int v = 0; v < n; ++v)
                for (int w : adj[v])
                    if (v < w) es.emplace_back(v, w);
            visit(babi::Graph::from_edges(n, es));
            return;
        }
        for (int w = (u == last_u ? from : u + 1); w < n; ++w) {
            if (deg[w] >= target[w]) continue;
            if (std::find(adj[u].begin(), adj[u].end(), w) != adj[u].end()) continue;
            if (dist_uv(u, w) < min_girth - 1) continue;
            adj[u].push_back(w);
            adj[w].push_back(u);
            ++deg[u];
            ++deg[w];
            self(self, u, w + 1);
            --deg[u];
            --deg[w];
            adj[u].pop_back();
            adj[w].pop_back();
        }
    };
    rec(rec, -1, 0);
}

}  // namespace oracle
