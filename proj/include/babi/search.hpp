#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "babi/bounds.hpp"
#include "babi/canon.hpp"
#include "babi/graph.hpp"

namespace babi {

struct SearchSpec {
    BabiParams params{2, 3, 5};
    int v_max = 0;
    enum class Mode { find_first, prove_min } mode = Mode::find_first;
    long long node_limit = -1;   // < 0: unlimited
    double time_limit_s = -1;    // < 0: unlimited
    int workers = 1;
};

struct SearchOutcome {
    std::optional<int> min_order;  // nullopt: none <= v_max
    std::optional<Graph> witness;
    long long nodes = 0;
    bool exhaustive = true;  // true => no babi-graph of smaller admissible order exists
};

struct SearchBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace search_detail {

// Orders must be even, and divisible by 4 when r+s is odd (odd-degree
// vertices come in pairs).
inline bool admissible_order(int v, const BabiParams& p) {
    if (v % 2) return false;
    if ((p.r + p.s) % 2 && v % 4) return false;
    return true;
}

inline int first_admissible_order(const BabiParams& p) {
    int v = static_cast<int>(babi_lower(p.r, p.s, p.g).value);
    while (!admissible_order(v, p)) ++v;
    return v;
}

// Edge-augmentation state over the fixed degree multiset {s: v/2, r: v/2}.
// Vertices 0..v/2-1 are fat (target degree s), the rest thin (target r).
struct State {
    int v, r, s, g;
    std::vector<std::vector<int>> adj;
    std::vector<int> deg;
    long long fat_edges = 0, thin_edges = 0;

    State(int v_, const BabiParams& p)
        : v(v_), r(p.r), s(p.s), g(p.g), adj(v_), deg(v_, 0) {}

    int target(int u) const { return u < v / 2 ? s : r; }
    bool fat(int u) const { return u < v / 2; }

    int frontier() const {
        for (int u = 0; u < v; ++u)
            if (deg[u] < target(u)) return u;
        return -1;
    }

    // BFS distances in the partial graph, capped at g (only "< g-1" matters)
    std::vector<int> distances(int src) const {
        std::vector<int> dist(v, -1);
        dist[src] = 0;
        std::vector<int> q{src};
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (dist[q[i]] >= g) break;
            for (int w : adj[q[i]])
                if (dist[w] < 0) {
                    dist[w] = dist[q[i]] + 1;
                    q.push_back(w);
                }
        }
        return dist;
    }

    void add(int u, int w) {
        adj[u].push_back(w);
        adj[w].push_back(u);
        ++deg[u];
        ++deg[w];
        if (fat(u) && fat(w)) ++fat_edges;
        if (!fat(u) && !fat(w)) ++thin_edges;
    }

    void remove_last(int u, int w) {
        adj[u].pop_back();
        adj[w].pop_back();
        --deg[u];
        --deg[w];
        if (fat(u) && fat(w)) --fat_edges;
        if (!fat(u) && !fat(w)) --thin_edges;
    }

    // census-based admissible-completion checks
    bool census_feasible() const {
        // final fat edge count must reach ceil(v(s-r)/4)
        long long need = fat_edge_lower(v, r, s);
        long long fat_deficit = 0;
        for (int u = 0; u < v / 2; ++u) fat_deficit += target(u) - deg[u];
        if (fat_edges + fat_deficit / 2 < need) return false;
        // semi-regular girth-6 caps (safe non-strict form, any r):
        // 8f <= cv and 8t <= (c-2)v for order v = 2r^2 + c
        if (s == r + 1 && g == 6) {
            long long c = v - 2LL * r * r;
            if (c > 2) {
                if (8 * fat_edges > c * v) return false;
                if (8 * thin_edges > (c - 2) * v) return false;
            }
        }
        return true;
    }

    Graph freeze() const {
        std::vector<std::vector<int>> a = adj;
        return Graph::from_adjacency(std::move(a));
    }

    std::vector<int> colors() const {
        std::vector<int> c(v);
        for (int u = 0; u < v; ++u) c[u] = fat(u) ? 1 : 0;
        return c;
    }
};

struct Budget {
    long long node_limit;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline;
    std::atomic<long long>* global_nodes;
    std::atomic<bool>* exhausted;

    bool spend(long long& local_nodes) {
        ++local_nodes;
        if (exhausted->load(std::memory_order_relaxed)) return false;
        if (node_limit >= 0) {
            long long t = global_nodes->fetch_add(1, std::memory_order_relaxed) + 1;
            if (t > node_limit) {
                exhausted->store(true, std::memory_order_relaxed);
                return false;
            }
        } else {
            global_nodes->fetch_add(1, std::memory_order_relaxed);
        }
        if (has_deadline && (local_nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            exhausted->store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

// Depth-first completion of a partial state.  `stop` (when set) allows this
// subtree's own find-first cancellation; returns false when the budget ran
// dry inside this subtree.
inline bool complete(State& st, Budget& bud, long long& nodes,
                     const std::function<void(const State&)>& emit,
                     const bool* stop, int last_u, int from) {
    if (stop && *stop) return true;
    if (!bud.spend(nodes)) return false;
    int u = st.frontier();
    if (u < 0) {
        emit(st);
        return true;
    }
    if (!st.census_feasible()) return true;

    auto dist = st.distances(u);
    // availability pruning: enough candidates to finish u
    int avail = 0;
    for (int w = u + 1; w < st.v; ++w)
        if (st.deg[w] < st.target(w) && (dist[w] < 0 || dist[w] >= st.g - 1)) ++avail;
    if (avail < st.target(u) - st.deg[u]) return true;

    int start = (u == last_u) ? from : u + 1;
    bool saw_untouched_fat = false, saw_untouched_thin = false;
    for (int w = start; w < st.v; ++w) {
        if (st.deg[w] >= st.target(w)) continue;
        if (dist[w] >= 0 && dist[w] < st.g - 1) continue;
        if (st.deg[w] == 0) {
            // untouched vertices of a block are interchangeable: first only
            bool& seen = st.fat(w) ? saw_untouched_fat : saw_untouched_thin;
            if (seen) continue;
            seen = true;
        }
        st.add(u, w);
        bool ok = complete(st, bud, nodes, emit, stop, u, w + 1);
        st.remove_last(u, w);
        if (!ok) return false;
        if (stop && *stop) return true;
    }
    return true;
}

struct Root {
    State state;
    long long setup_nodes = 0;
};

// Expand the first `levels` frontier saturations breadth-first, deduplicating
// sibling states by canonical form (colors = degree targets).
inline std::vector<State> subtree_roots(int v, const BabiParams& p, int levels,
                                        long long& nodes) {
    std::vector<State> frontier{State(v, p)};
    for (int lev = 0; lev < levels; ++lev) {
        std::vector<State> next;
        std::set<Certificate64> seen;
        for (State& st : frontier) {
            int u = st.frontier();
            if (u < 0) {
                next.push_back(st);  // already complete (tiny orders)
                continue;
            }
            // enumerate all full saturations of u
            std::vector<std::vector<int>> sets;
            std::vector<int> cur;
            auto rec = [&](auto&& self, int from) -> void {
                ++nodes;
                if (st.deg[u] == st.target(u)) {
                    sets.push_back(cur);
                    return;
                }
                auto dist = st.distances(u);
                bool sawf = false, sawt = false;
                for (int w = from; w < st.v; ++w) {
                    if (st.deg[w] >= st.target(w)) continue;
                    if (dist[w] >= 0 && dist[w] < st.g - 1) continue;
                    if (st.deg[w] == 0) {
                        bool& seen2 = st.fat(w) ? sawf : sawt;
                        if (seen2) continue;
                        seen2 = true;
                    }
                    st.add(u, w);
                    cur.push_back(w);
                    self(self, w + 1);
                    cur.pop_back();
                    st.remove_last(u, w);
                }
            };
            rec(rec, u + 1);
            for (const auto& set : sets) {
                State child = st;
                for (int w : set) child.add(u, w);
                Certificate64 cert = canonical_form(child.freeze(), child.colors());
                if (seen.insert(std::move(cert)).second) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

struct OrderResult {
    std::vector<Graph> found;  // complete graphs with girth exactly g (deduped)
    long long nodes = 0;
    bool exhausted_budget = false;
};

// Enumerate order v: find_first stops at the first witness (by subtree
// index), full mode collects every isomorphism class.  `skip` marks subtree
// indices already completed by an earlier (resumed) run; `on_root_done` fires
// after each root completes, for checkpointing.
inline OrderResult enumerate_order(
    int v, const SearchSpec& spec, Budget& bud, bool find_first,
    const std::set<int>* skip = nullptr,
    const std::function<void(int, const std::vector<Graph>&)>& on_root_done = {},
    const std::vector<Graph>* preloaded = nullptr) {
    OrderResult res;
    auto roots = subtree_roots(v, spec.params, 2, res.nodes);
    bud.global_nodes->fetch_add(res.nodes, std::memory_order_relaxed);

    const int nroots = static_cast<int>(roots.size());
    std::vector<std::vector<Graph>> per_root(nroots);
    std::vector<long long> per_nodes(nroots, 0);
    std::vector<char> per_complete(nroots, 0);
    std::atomic<int> next{0};
    std::atomic<int> best_hit{nroots};

    // A root stops its own DFS at its first witness (find-first).  Roots with
    // a smaller index than the current best hit always run to completion, so
    // the winning witness never depends on worker scheduling.
    auto run_root = [&](int i) {
        if (skip && skip->count(i)) {
            per_complete[i] = 1;
            return;
        }
        State st = roots[i];
        long long local = 0;
        bool local_stop = false;
        std::function<void(const State&)> emit = [&](const State& s) {
            Graph g = s.freeze();
            if (girth(g) != spec.params.g) return;
            per_root[i].push_back(std::move(g));
            if (find_first) {
                local_stop = true;
                int cur = best_hit.load();
                while (i < cur && !best_hit.compare_exchange_weak(cur, i)) {}
            }
        };
        bool done = complete(st, bud, local, emit,
                             find_first ? &local_stop : nullptr, -1, 0);
        per_nodes[i] = local;
        per_complete[i] = done ? 1 : 0;
        if (done && on_root_done) on_root_done(i, per_root[i]);
    };

    int workers = std::max(1, spec.workers);
    if (workers == 1 || nroots <= 1) {
        for (int i = 0; i < nroots; ++i) {
            run_root(i);
            if (find_first && !per_root[i].empty()) break;
            if (bud.exhausted->load()) break;
        }
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    int i = next.fetch_add(1);
                    if (i >= nroots) return;
                    if (bud.exhausted->load()) return;
                    if (find_first && i > best_hit.load()) continue;
                    run_root(i);
                }
            });
        for (auto& t : pool) t.join();
    }

    // deterministic merge by root index; in find-first mode, results beyond
    // the first hit (and their node counts) are discarded so the outcome is
    // scheduling-independent
    bool budget_died = false;
    for (int i = 0; i < nroots; ++i) {
        res.nodes += per_nodes[i];
        if (!per_complete[i]) budget_died = true;
        for (auto& g : per_root[i]) res.found.push_back(std::move(g));
        if (find_first && !per_root[i].empty()) break;
        if (budget_died) break;
    }
    res.exhausted_budget = budget_died || bud.exhausted->load();

    if (preloaded)
        for (const auto& g : *preloaded) res.found.push_back(g);
    if (!find_first && res.found.size() > 1) {
        // duplicates may arrive from different subtrees: canonical dedup
        std::set<Certificate64> seen;
        std::vector<Graph> uniq;
        std::vector<int> col(v);
        for (auto& g : res.found) {
            for (int u = 0; u < v; ++u) col[u] = u < v / 2 ? 1 : 0;
            if (seen.insert(canonical_form(g, col)).second) uniq.push_back(std::move(g));
        }
        res.found = std::move(uniq);
    }
    return res;
}

}  // namespace search_detail

// Smallest order <= v_max carrying an (r,s;g)-babi-graph, by orderly
// edge-augmentation from the parity-adjusted lower bound upward.
inline SearchOutcome exhaustive_min(const SearchSpec& spec) {
    SearchOutcome out;
    std::atomic<long long> nodes{0};
    std::atomic<bool> exhausted{false};
    search_detail::Budget bud{
        spec.node_limit,
        std::chrono::steady_clock::now() +
            std::chrono::microseconds(
                spec.time_limit_s > 0 ? static_cast<long long>(spec.time_limit_s * 1e6)
                                      : 0),
        spec.time_limit_s > 0, &nodes, &exhausted};

    for (int v = search_detail::first_admissible_order(spec.params); v <= spec.v_max;
         ++v) {
        if (!search_detail::admissible_order(v, spec.params)) continue;
        auto res = search_detail::enumerate_order(
            v, spec, bud, spec.mode == SearchSpec::Mode::find_first);
        out.nodes += res.nodes;
        if (!res.found.empty()) {
            out.min_order = v;
            out.witness = res.found.front();
            // minimality proven only if no earlier order was budget-truncated
            out.exhaustive = out.exhaustive && !res.exhausted_budget;
            return out;
        }
        if (res.exhausted_budget) {
            out.exhaustive = false;
            return out;
        }
    }
    return out;
}

// True iff exhaustive search proves no smaller babi-graph exists.
inline bool certify_cage(const Graph& g, const BabiParams& p,
                         long long node_limit = -1, double time_limit_s = -1) {
    Certificate c = verify_babi(g, p);
    if (!c.balanced) return false;
    SearchSpec spec{p, g.order(), SearchSpec::Mode::find_first, node_limit,
                    time_limit_s, 1};
    SearchOutcome out = exhaustive_min(spec);
    if (!out.exhaustive)
        throw SearchBudgetError("certify_cage: search budget exhausted");
    return out.min_order == g.order();
}

// Number of isomorphism classes of (r,s;g)-babi-graphs on v vertices.
inline long long count_nonisomorphic(const BabiParams& p, int v, int workers = 1,
                                     long long node_limit = -1) {
    if (!search_detail::admissible_order(v, p)) return 0;
    if (v < babi_lower(p.r, p.s, p.g).value) return 0;
    SearchSpec spec{p, v, SearchSpec::Mode::prove_min, node_limit, -1, workers};
    std::atomic<long long> nodes{0};
    std::atomic<bool> exhausted{false};
    search_detail::Budget bud{node_limit, std::chrono::steady_clock::now(), false,
                              &nodes, &exhausted};
    auto res = search_detail::enumerate_order(v, spec, bud, false);
    if (res.exhausted_budget)
        throw SearchBudgetError("count_nonisomorphic: search budget exhausted");
    return static_cast<long long>(res.found.size());
}

// All witnesses at a fixed order (used by the asset generator and tests).
inline std::vector<Graph> enumerate_babi(const BabiParams& p, int v, int workers = 1) {
    if (!search_detail::admissible_order(v, p)) return {};
    SearchSpec spec{p, v, SearchSpec::Mode::prove_min, -1, -1, workers};
    std::atomic<long long> nodes{0};
    std::atomic<bool> exhausted{false};
    search_detail::Budget bud{-1, std::chrono::steady_clock::now(), false, &nodes,
                              &exhausted};
    auto res = search_detail::enumerate_order(v, spec, bud, false);
    return res.found;
}

}  // namespace babi
