#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace babi {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Undirected simple graph: vertex count plus per-vertex sorted neighbor lists.
// Immutable once built; construct through GraphBuilder or Graph::from_edges.
class Graph {
public:
    Graph() = default;

    static Graph from_adjacency(std::vector<std::vector<int>> adj) {
        Graph g;
        g.n_ = static_cast<int>(adj.size());
        g.adj_ = std::move(adj);
        for (int v = 0; v < g.n_; ++v) {
            auto& nb = g.adj_[v];
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
            for (int w : nb) {
                if (w < 0 || w >= g.n_)
                    throw std::invalid_argument("neighbor index out of range");
                if (w == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
                if (!std::binary_search(g.adj_[w].begin(), g.adj_[w].end(), v) && w < v)
                    throw std::invalid_argument("asymmetric adjacency");
            }
        }
        // full symmetry check (the loop above only sees already-sorted rows)
        for (int v = 0; v < g.n_; ++v)
            for (int w : g.adj_[v])
                if (!std::binary_search(g.adj_[w].begin(), g.adj_[w].end(), v))
                    throw std::invalid_argument("asymmetric adjacency");
        return g;
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return from_adjacency(std::move(adj));
    }

    int order() const { return n_; }

    int edge_count() const {
        std::size_t s = 0;
        for (auto& nb : adj_) s += nb.size();
        return static_cast<int>(s / 2);
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[v])
                if (v < w) es.emplace_back(v, w);
        return es;
    }

    std::map<int, int> degree_counts() const {
        std::map<int, int> c;
        for (int v = 0; v < n_; ++v) ++c[degree(v)];
        return c;
    }

    bool is_regular(int k) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != k) return false;
        return true;
    }

    bool connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj_[u])
                if (!seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
        }
        return cnt == n_;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Mutable staging area for constructions; freeze() produces the Graph value.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : adj_(n) {}

    explicit GraphBuilder(const Graph& g) : adj_(g.order()) {
        for (int v = 0; v < g.order(); ++v)
            adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }

    int order() const { return static_cast<int>(adj_.size()); }

    int add_vertex() {
        adj_.emplace_back();
        return order() - 1;
    }

    bool has_edge(int u, int v) const {
        return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) throw std::invalid_argument("missing edge");
        std::erase(adj_[u], v);
        std::erase(adj_[v], u);
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Removes the given vertices and re-indexes densely (ascending old index
    // order). Returns the old->new map, -1 for removed vertices.
    std::vector<int> delete_vertices(const std::vector<int>& dels) {
        std::vector<char> gone(adj_.size(), 0);
        for (int v : dels) gone.at(v) = 1;
        std::vector<int> remap(adj_.size(), -1);
        int next = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (!gone[v]) remap[v] = next++;
        std::vector<std::vector<int>> out(next);
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (gone[v]) continue;
            for (int w : adj_[v])
                if (!gone[w]) out[remap[v]].push_back(remap[w]);
        }
        adj_ = std::move(out);
        return remap;
    }

    Graph freeze() const { return Graph::from_adjacency(adj_); }

private:
    std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// Girth.  Acyclic graphs get a disengaged optional, which compares as larger
// than every finite girth (see girth_at_least).

inline std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n), queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (best && 2 * dist[u] >= *best) continue;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int c = dist[u] + dist[w] + 1;
                    if (!best || c < *best) best = c;
                }
            }
        }
    }
    return best;
}

inline bool girth_at_least(const std::optional<int>& g, int k) { return !g || *g >= k; }

// Distance from s to every vertex (-1 where unreachable).
inline std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.order(), -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto d = bfs_distances(g, s);
        for (int x : d) {
            if (x < 0) return std::nullopt;  // disconnected
            best = std::max(best, x);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Babi parameters, edge census, certificates.

struct BabiParams {
    int r;  // thin degree
    int s;  // fat degree
    int g;  // girth

    BabiParams(int r_, int s_, int g_) : r(r_), s(s_), g(g_) {
        if (!(1 <= r && r < s)) throw std::invalid_argument("require 1 <= r < s");
        if (g < 3) throw std::invalid_argument("require g >= 3");
    }
};

struct EdgeCensus {
    long long fat = 0;    // edges joining two degree-s vertices
    long long thin = 0;   // edges joining two degree-r vertices
    long long mixed = 0;  // one of each
    int order = 0;
};

inline EdgeCensus edge_census(const Graph& g, const BabiParams& p) {
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d != p.r && d != p.s)
            throw std::invalid_argument("edge_census: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(d) +
                                        ", not in {" + std::to_string(p.r) + "," +
                                        std::to_string(p.s) + "}");
    }
    EdgeCensus c;
    c.order = g.order();
    for (auto [u, v] : g.edges()) {
        int fu = g.degree(u) == p.s, fv = g.degree(v) == p.s;
        if (fu && fv) ++c.fat;
        else if (!fu && !fv) ++c.thin;
        else ++c.mixed;
    }
    return c;
}

struct Certificate {
    int order = 0;
    std::map<int, int> degrees;        // degree -> vertex count
    std::optional<int> girth;          // nullopt = acyclic
    bool balanced = false;             // exact {r:v/2, s:v/2} multiset AND girth == g
    std::optional<EdgeCensus> census;  // present when degrees lie in {r,s}
    bool connected = false;
    std::string provenance;
    BabiParams params{1, 2, 3};
};

inline Certificate verify_babi(const Graph& g, const BabiParams& p,
                               std::string provenance = {}) {
    Certificate c;
    c.order = g.order();
    c.degrees = g.degree_counts();
    c.girth = girth(g);
    c.connected = g.connected();
    c.provenance = std::move(provenance);
    c.params = p;
    bool deg_ok = c.order > 0 && c.order % 2 == 0 &&
                  c.degrees.size() == 2 &&
                  c.degrees.count(p.r) && c.degrees.count(p.s) &&
                  c.degrees.at(p.r) == c.order / 2 && c.degrees.at(p.s) == c.order / 2;
    bool in_range = true;
    for (auto [d, cnt] : c.degrees)
        if (d != p.r && d != p.s) in_range = false;
    if (in_range && c.order > 0) c.census = edge_census(g, p);
    c.balanced = deg_ok && c.girth && *c.girth == p.g;
    return c;
}

// Largest deg_f(x)+deg_f(y) over fat edges xy; 0 when no fat edge exists.
inline int max_fat_edge_sum(const Graph& g, const BabiParams& p) {
    Certificate c = verify_babi(g, p);
    if (!c.balanced) throw std::invalid_argument("max_fat_edge_sum: not a babi-graph");
    std::vector<int> fat_deg(g.order(), 0);
    for (auto [u, v] : g.edges())
        if (g.degree(u) == p.s && g.degree(v) == p.s) {
            ++fat_deg[u];
            ++fat_deg[v];
        }
    int best = 0;
    for (auto [u, v] : g.edges())
        if (g.degree(u) == p.s && g.degree(v) == p.s)
            best = std::max(best, fat_deg[u] + fat_deg[v]);
    return best;
}

// ---------------------------------------------------------------------------
// The two composition operators: connection through switching, replication.

// Disjoint union of g1 and g2 with e1, e2 replaced by the two cross edges
// x1x2 and y1y2.  Preserves all degrees; girth >= min of the input girths.
inline Graph connect_switch(const Graph& g1, Edge e1, const Graph& g2, Edge e2) {
    if (&g1 == &g2 && make_edge(e1.first, e1.second) == make_edge(e2.first, e2.second))
        throw std::invalid_argument("connect_switch: cannot switch an edge with itself");
    if (!g1.has_edge(e1.first, e1.second))
        throw std::invalid_argument("connect_switch: e1 not in G1");
    if (!g2.has_edge(e2.first, e2.second))
        throw std::invalid_argument("connect_switch: e2 not in G2");
    int n1 = g1.order();
    GraphBuilder b(n1 + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
    b.remove_edge(e1.first, e1.second);
    b.remove_edge(n1 + e2.first, n1 + e2.second);
    b.add_edge(e1.first, n1 + e2.first);
    b.add_edge(e1.second, n1 + e2.second);
    return b.freeze();
}

namespace detail {

// First girth cycle found by BFS: scan roots in index order, take the first
// shortest-cycle witness, and return its edge set.
inline std::vector<Edge> first_girth_cycle(const Graph& g) {
    auto gg = girth(g);
    if (!gg) throw std::invalid_argument("acyclic graph has no girth cycle");
    const int target = *gg;
    const int n = g.order();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && dist[u] + dist[w] + 1 == target) {
                    std::vector<Edge> cyc;
                    cyc.push_back(make_edge(u, w));
                    for (int x = u; parent[x] >= 0; x = parent[x])
                        cyc.push_back(make_edge(x, parent[x]));
                    for (int x = w; parent[x] >= 0; x = parent[x])
                        cyc.push_back(make_edge(x, parent[x]));
                    // the two root paths may share a prefix; drop doubled edges
                    std::sort(cyc.begin(), cyc.end());
                    std::vector<Edge> out;
                    for (std::size_t i = 0; i < cyc.size(); ++i) {
                        if (i + 1 < cyc.size() && cyc[i] == cyc[i + 1]) { ++i; continue; }
                        out.push_back(cyc[i]);
                    }
                    if (static_cast<int>(out.size()) == target) return out;
                    // shared prefix made this walk degenerate; keep scanning
                }
            }
        }
    }
    throw std::logic_error("girth cycle not reconstructed");
}

// Lowest edge (lexicographic on endpoint pair) outside the first girth cycle.
inline Edge edge_off_girth_cycle(const Graph& g) {
    auto cyc = first_girth_cycle(g);
    for (auto e : g.edges())
        if (std::find(cyc.begin(), cyc.end(), e) == cyc.end()) return e;
    throw std::invalid_argument("every edge lies on the girth cycle");
}

}  // namespace detail

// n disjoint-ish copies of a k-regular girth-g graph joined by switching,
// k > 2; order n*|G| and girth exactly g.
inline Graph replicate(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("replicate: n must be positive");
    int k = g.order() ? g.degree(0) : 0;
    if (!g.is_regular(k) || k <= 2)
        throw std::invalid_argument("replicate: graph must be k-regular with k > 2");
    if (!girth(g)) throw std::invalid_argument("replicate: graph must contain a cycle");
    Graph acc = g;
    Edge e = detail::edge_off_girth_cycle(g);
    for (int i = 1; i < n; ++i) {
        Edge e_acc = acc.edges().front();
        acc = connect_switch(g, e, acc, e_acc);
    }
    return acc;
}

// For each vertex u add s - deg(u) pendant leaves.  Girth is unchanged.
inline Graph glue_leaves(const Graph& g, int s) {
    GraphBuilder b(g);
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) > s)
            throw std::invalid_argument("glue_leaves: degree exceeds s at vertex " +
                                        std::to_string(u));
        for (int j = g.degree(u); j < s; ++j) b.add_edge(u, b.add_vertex());
    }
    return b.freeze();
}

// Remove every degree-1 vertex and its pendant edge (single pass).
inline Graph strip_leaves(const Graph& g) {
    GraphBuilder b(g);
    std::vector<int> dels;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) dels.push_back(v);
    b.delete_vertices(dels);
    return b.freeze();
}

// ---------------------------------------------------------------------------
// Matchings.  Deterministic (lexicographic choices), exact via backtracking.

namespace detail {

inline bool perfect_matching_rec(const Graph& g, std::vector<int>& mate) {
    int u = -1;
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] < 0) { u = v; break; }
    if (u < 0) return true;
    for (int w : g.neighbors(u)) {
        if (mate[w] >= 0) continue;
        mate[u] = w;
        mate[w] = u;
        if (perfect_matching_rec(g, mate)) return true;
        mate[u] = mate[w] = -1;
    }
    return false;
}

}  // namespace detail

inline std::optional<std::vector<Edge>> perfect_matching(const Graph& g) {
    if (g.order() % 2) return std::nullopt;
    std::vector<int> mate(g.order(), -1);
    if (!detail::perfect_matching_rec(g, mate)) return std::nullopt;
    std::vector<Edge> m;
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] > v) m.push_back(make_edge(v, mate[v]));
    return m;
}

// An independent set of `count` edges, both endpoints satisfying `eligible`.
// Greedy in lex order, with full backtracking as a fallback.
template <class Pred>
inline std::optional<std::vector<Edge>> independent_edges(const Graph& g, int count,
                                                          Pred eligible) {
    std::vector<Edge> pool;
    for (auto [u, v] : g.edges())
        if (eligible(u) && eligible(v)) pool.emplace_back(u, v);

    std::vector<char> used(g.order(), 0);
    std::vector<Edge> chosen;
    for (auto [u, v] : pool) {
        if (static_cast<int>(chosen.size()) == count) break;
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        chosen.emplace_back(u, v);
    }
    if (static_cast<int>(chosen.size()) == count) return chosen;

    // greedy stalled: exact search over the pool
    chosen.clear();
    std::fill(used.begin(), used.end(), 0);
    std::vector<Edge> best;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (static_cast<int>(chosen.size()) == count) { best = chosen; return true; }
        if (i >= pool.size()) return false;
        if (static_cast<int>(chosen.size()) + static_cast<int>(pool.size() - i) < count)
            return false;
        auto [u, v] = pool[i];
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            chosen.push_back(pool[i]);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            used[u] = used[v] = 0;
        }
        return self(self, i + 1);
    };
    if (rec(rec, 0)) return best;
    return std::nullopt;
}

}  // namespace babi
