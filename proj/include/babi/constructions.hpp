#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "babi/bounds.hpp"
#include "babi/graph.hpp"
#include "babi/named_graphs.hpp"
#include "babi/oval.hpp"
#include "babi/plane.hpp"

namespace babi {

struct ConstructionResult {
    Graph graph;
    Certificate cert;
};

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline ConstructionResult validated(Graph g, const BabiParams& p, long long expect_order,
                                    std::string provenance) {
    Certificate c = verify_babi(g, p, std::move(provenance));
    if (g.order() != expect_order)
        throw ConstructionError(c.provenance + ": order " + std::to_string(g.order()) +
                                " != expected " + std::to_string(expect_order));
    if (!c.balanced)
        throw ConstructionError(c.provenance + ": output failed babi verification");
    return {std::move(g), std::move(c)};
}

inline std::string deletion_note(const std::vector<int>& dels) {
    std::ostringstream os;
    os << "; deleted vertices [";
    for (std::size_t i = 0; i < dels.size(); ++i) os << (i ? "," : "") << dels[i];
    os << "], survivors re-indexed densely in ascending order";
    return os.str();
}

// K_n (n even) split into n-1 perfect matchings by the circle method.
inline std::vector<std::vector<Edge>> one_factorization(int n) {
    std::vector<std::vector<Edge>> fs;
    const int m = n - 1;
    for (int j = 0; j < m; ++j) {
        std::vector<Edge> f{make_edge(m, j)};
        for (int i = 1; i < n / 2; ++i)
            f.push_back(make_edge((j + i) % m, ((j - i) % m + m) % m));
        fs.push_back(std::move(f));
    }
    return fs;
}

// K_n (n odd) split into (n-1)/2 Hamilton cycles (Walecki's zigzag).
inline std::vector<std::vector<int>> hamilton_decomposition(int n) {
    const int m = n - 1;  // finite part Z_m plus the hub n-1
    std::vector<int> zig{0};
    for (int t = 1; t < m; ++t)
        zig.push_back(t % 2 ? (t + 1) / 2 : (m - t / 2) % m);
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < m / 2; ++i) {
        std::vector<int> c{n - 1};
        for (int x : zig) c.push_back((x + i) % m);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Girth 3: exact babi-cages for all 2 <= r < s.

inline ConstructionResult babi_g3(int r, int s) {
    if (r < 2 || s <= r) throw std::invalid_argument("babi_g3: 2 <= r < s required");
    const long long expect = babi_g3_exact(r, s).value;
    std::string prov = "babi_g3(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
    if (s + 1 >= 2 * r) {
        // complete graph on the u_i, each w_i joined to u_{i+j}, j < r
        const int n = s - r + 1;  // u: 0..n-1, w: n..2n-1
        GraphBuilder b(2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < r; ++j) b.add_edge(n + i, (i + j) % n);
        return detail::validated(b.freeze(), BabiParams(r, s, 3), expect, prov);
    }
    // K_{s+i} with i-1 U-W matchings removed, then s-r factors (or (s-r)/2
    // Hamilton cycles) removed from the W side
    const int v = static_cast<int>(expect);
    const int i_case = v - s;
    const int n = v / 2;  // U: 0..n-1, W: n..2n-1
    GraphBuilder b(v);
    for (int a = 0; a < v; ++a)
        for (int c = a + 1; c < v; ++c) b.add_edge(a, c);
    for (int j = 0; j < i_case - 1; ++j)
        for (int a = 0; a < n; ++a) b.remove_edge(a, n + (a + j) % n);
    if (n % 2 == 0) {
        auto fs = detail::one_factorization(n);
        for (int t = 0; t < s - r; ++t)
            for (auto [a, c] : fs[t]) b.remove_edge(n + a, n + c);
    } else {
        if ((s - r) % 2) throw std::logic_error("babi_g3: odd s-r with odd v/2");
        auto hc = detail::hamilton_decomposition(n);
        for (int t = 0; t < (s - r) / 2; ++t)
            for (std::size_t i = 0; i < hc[t].size(); ++i)
                b.remove_edge(n + hc[t][i], n + hc[t][(i + 1) % hc[t].size()]);
    }
    return detail::validated(b.freeze(), BabiParams(r, s, 3), expect, prov);
}

// ---------------------------------------------------------------------------
// Girth 4: exact babi-cages for all 2 <= r < s.

inline ConstructionResult babi_g4(int r, int s) {
    if (r < 2 || s <= r) throw std::invalid_argument("babi_g4: 2 <= r < s required");
    const long long expect = babi_g4_exact(r, s).value;
    std::string prov = "babi_g4(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";

    auto gamma2 = [&](int ss) {
        // complete bipartite on (u,x) vs (w,y) minus the u_i w_{i+j} edges
        const int n = ss / 2;  // u: 0..n-1, x: n..2n-1, w: 2n..3n-1, y: 3n..4n-1
        GraphBuilder b(4 * n);
        for (int a = 0; a < 2 * n; ++a)
            for (int c = 0; c < 2 * n; ++c) b.add_edge(a, 2 * n + c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < ss - r; ++j) b.remove_edge(i, 2 * n + (i + j) % n);
        return b;
    };

    if (s >= 2 * r) {
        // K_{s-r,s-r} core on x/y plus the u/w attachments
        const int n = s - r;  // u: 0..n-1, x: n..2n-1, w: 2n..3n-1, y: 3n..4n-1
        GraphBuilder b(4 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.add_edge(n + i, 3 * n + j);
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j < r; ++j) {
                b.add_edge(n + i - 1, 2 * n + (i + j) % n);  // x_i w_{i+j}
                b.add_edge(3 * n + i - 1, (i + j) % n);      // y_i u_{i+j}
            }
        return detail::validated(b.freeze(), BabiParams(r, s, 4), expect, prov);
    }
    if (s % 2 == 0)
        return detail::validated(gamma2(s).freeze(), BabiParams(r, s, 4), expect, prov);
    // s odd: build for s+1, then drop the diagonal x_i y_i
    GraphBuilder b = gamma2(s + 1);
    const int n = (s + 1) / 2;
    for (int i = 0; i < n; ++i) b.remove_edge(n + i, 3 * n + i);
    return detail::validated(b.freeze(), BabiParams(r, s, 4), expect, prov);
}

// ---------------------------------------------------------------------------
// Girth 5 by deletion from cages.

// Delete both endpoints of an edge of the Petersen graph.
inline ConstructionResult babi_235() {
    Graph pet = petersen();
    int u = 0, v = pet.neighbors(0).front();
    GraphBuilder b(pet);
    b.delete_vertices({u, v});
    return detail::validated(b.freeze(), BabiParams(2, 3, 5), 8,
                             "babi_235: Petersen minus an edge's endpoints" +
                                 detail::deletion_note({u, v}));
}

// Delete the three vertices of a path of the Robertson graph.
inline ConstructionResult babi_345() {
    Graph rob = robertson();
    int u1 = 0;
    int u2 = rob.neighbors(u1).front();
    int u3 = -1;
    for (int w : rob.neighbors(u2))
        if (w != u1) { u3 = w; break; }
    GraphBuilder b(rob);
    b.delete_vertices({u1, u2, u3});
    return detail::validated(b.freeze(), BabiParams(3, 4, 5), 16,
                             "babi_345: Robertson minus a 3-path" +
                                 detail::deletion_note({u1, u2, u3}));
}

// Delete a 4-path joining two distance-3 vertices of the (6,5)-cage.
inline ConstructionResult babi_565(const Graph& cage65) {
    if (cage65.order() != 40 || !cage65.is_regular(6) || girth(cage65) != 5)
        throw std::invalid_argument("babi_565: input is not the (6,5)-cage");
    for (int u1 = 0; u1 < cage65.order(); ++u1) {
        // BFS with parent tracking; smallest distance-3 target wins
        std::vector<int> dist(cage65.order(), -1), par(cage65.order(), -1);
        std::vector<int> queue{u1};
        dist[u1] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : cage65.neighbors(queue[qi]))
                if (dist[w] < 0) {
                    dist[w] = dist[queue[qi]] + 1;
                    par[w] = queue[qi];
                    queue.push_back(w);
                }
        for (int u4 = 0; u4 < cage65.order(); ++u4) {
            if (dist[u4] != 3) continue;
            int u3 = par[u4], u2 = par[u3];
            GraphBuilder b(cage65);
            b.delete_vertices({u1, u2, u3, u4});
            return detail::validated(b.freeze(), BabiParams(5, 6, 5), 36,
                                     "babi_565: (6,5)-cage minus a 4-path" +
                                         detail::deletion_note({u1, u2, u3, u4}));
        }
    }
    throw ConstructionError("babi_565: no distance-3 pair found");
}

namespace detail {

// Enumerate perfect matchings in lexicographic order, invoking the visitor
// until it returns true.  Used for the bounded 1-factor retries.
inline bool for_each_perfect_matching(const Graph& g, int max_count,
                                      const std::function<bool(const std::vector<Edge>&)>& visit) {
    std::vector<int> mate(g.order(), -1);
    std::vector<Edge> cur;
    int seen = 0;
    auto rec = [&](auto&& self) -> bool {
        int u = -1;
        for (int v = 0; v < g.order(); ++v)
            if (mate[v] < 0) { u = v; break; }
        if (u < 0) {
            ++seen;
            return visit(cur) || seen >= max_count;
        }
        for (int w : g.neighbors(u)) {
            if (mate[w] >= 0) continue;
            mate[u] = w;
            mate[w] = u;
            cur.push_back(make_edge(u, w));
            bool done = self(self);
            cur.pop_back();
            mate[u] = mate[w] = -1;
            if (done) return true;
        }
        return false;
    };
    rec(rec);
    return seen > 0;
}

}  // namespace detail

// From a 1-factor of Hoffman-Singleton: delete one matched edge's endpoints,
// then six of the matching edges that kept both endpoints at full degree.
inline ConstructionResult babi_675() {
    Graph hs = hoffman_singleton();
    std::optional<ConstructionResult> result;
    int attempt = 0;
    detail::for_each_perfect_matching(hs, 8, [&](const std::vector<Edge>& f) {
        ++attempt;
        auto [u1, u2] = f.front();
        GraphBuilder b(hs);
        auto remap = b.delete_vertices({u1, u2});
        std::vector<Edge> full;  // surviving F-edges with both endpoints still degree 7
        for (std::size_t i = 1; i < f.size(); ++i) {
            int x = remap[f[i].first], y = remap[f[i].second];
            if (x >= 0 && y >= 0 && b.degree(x) == 7 && b.degree(y) == 7)
                full.push_back(make_edge(x, y));
        }
        if (full.size() != 12) return false;  // 12/12 split failed; try the next 1-factor
        for (int i = 0; i < 6; ++i) b.remove_edge(full[i].first, full[i].second);
        result = detail::validated(
            b.freeze(), BabiParams(6, 7, 5), 48,
            "babi_675: Hoffman-Singleton 1-factor deletion (matching #" +
                std::to_string(attempt) + ")" + detail::deletion_note({u1, u2}));
        return true;
    });
    if (!result) throw ConstructionError("babi_675: no usable 1-factor within retry bound");
    return std::move(*result);
}

// The 24-vertex (4,5;5)-babi-cage: Robertson plus a 5-cycle C=(a,b,c,d,e)
// and eleven joining edges.
inline ConstructionResult babi_455_24() {
    Graph rob = robertson();
    GraphBuilder b(rob);
    const int a = b.add_vertex(), c_b = b.add_vertex(), c = b.add_vertex(),
              d = b.add_vertex(), e = b.add_vertex();
    for (auto [u, v] : {Edge{a, c_b}, Edge{c_b, c}, Edge{c, d}, Edge{d, e}, Edge{e, a}})
        b.add_edge(u, v);
    // joining edges against Robertson's 1-indexed labels:
    // a11 a12 a13 b2 b6 c3 c15 d8 d17 e1 e7
    const std::pair<int, int> joins[] = {{a, 11}, {a, 12}, {a, 13}, {c_b, 2}, {c_b, 6},
                                         {c, 3},  {c, 15}, {d, 8},  {d, 17},  {e, 1},
                                         {e, 7}};
    for (auto [x, t] : joins) b.add_edge(x, t - 1);
    auto res = detail::validated(b.freeze(), BabiParams(4, 5, 5), 24,
                                 "babi_455_24: Robertson + C5 + 11 edges");
    // the degree-5 set this construction must produce
    const std::vector<int> want5 = {0, 1, 2, 5, 6, 7, 10, 11, 12, 14, 16, a};
    for (int v : want5)
        if (res.graph.degree(v) != 5)
            throw ConstructionError("babi_455_24: degree-5 set mismatch");
    return res;
}

// The 28-vertex (4,5;5)-babi-graph: Levi graph of PG(2,4) minus a Fano
// subplane, plus the seven tangent-pair edges e_i f_i.
inline ConstructionResult babi_455_28() {
    FanoSubplane fs = fano_subplane_pg24();
    const int np = fs.plane.num_points();
    Graph lv = levi(fs.plane);
    GraphBuilder b(lv);
    std::vector<int> dels = fs.sub_points;
    for (int l : fs.sub_lines) dels.push_back(np + l);
    auto remap = b.delete_vertices(dels);
    for (auto [e, f] : fs.tangent_pairs) b.add_edge(remap[np + e], remap[np + f]);
    auto res = detail::validated(b.freeze(), BabiParams(4, 5, 5), 28,
                                 "babi_455_28: PG(2,4) minus Fano subplane, tangents matched" +
                                     detail::deletion_note(dels));
    // 14 points of degree 4 and 14 lines of degree 5
    if (res.cert.degrees.at(4) != 14 || res.cert.degrees.at(5) != 14)
        throw ConstructionError("babi_455_28: 14/14 degree split failed");
    return res;
}

// ---------------------------------------------------------------------------
// The (3,5;5)-babi-graph of order 28 from the Robertson-Wegner graph.

inline ConstructionResult babi_3555_from_rw() {
    RobertsonWegner rw = robertson_wegner();
    const auto& cube = rw.cubes.front();

    // the chosen cube's two tetrahedral vertices
    std::vector<int> tetra;
    for (std::size_t t = 0; t < rw.tetra_cube.size(); ++t)
        if (rw.tetra_cube[t] == 0) tetra.push_back(20 + static_cast<int>(t));
    if (tetra.size() != 2) throw std::logic_error("babi_3555: tetra lookup failed");

    // cube faces: 4-subsets inducing a 4-cycle of the cube-edge relation
    std::vector<std::vector<int>> crel(20);
    for (auto [u, v] : rw.cube_edge_pairs) {
        crel[u].push_back(v);
        crel[v].push_back(u);
    }
    auto cube_deg_in = [&](int v, const std::vector<int>& set) {
        int c = 0;
        for (int w : crel[v])
            if (std::find(set.begin(), set.end(), w) != set.end()) ++c;
        return c;
    };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k)
                for (int l = k + 1; l < 8; ++l) {
                    std::vector<int> f{cube[i], cube[j], cube[k], cube[l]};
                    bool cyc = true;
                    for (int v : f)
                        if (cube_deg_in(v, f) != 2) cyc = false;
                    if (cyc) faces.push_back(f);
                }
    if (faces.size() != 6) throw std::logic_error("babi_3555: face count");
    const std::vector<int>& face1 = faces.front();
    const std::vector<int>* face2 = nullptr;
    for (const auto& f : faces) {
        bool disjoint = true;
        for (int v : f)
            if (std::find(face1.begin(), face1.end(), v) != face1.end()) disjoint = false;
        if (disjoint) face2 = &f;
    }
    if (!face2) throw std::logic_error("babi_3555: opposite face not found");

    // dodecahedron adjacency (without tetrahedral vertices)
    Graph dodeca = Graph::from_edges(20, rw.dodeca_edges);

    // the unique dodecahedron edge EF with E adjacent to two face vertices
    // and F adjacent to the other two
    auto find_EF = [&](const std::vector<int>& face) {
        std::optional<Edge> found;
        for (auto [x, y] : rw.dodeca_edges) {
            auto nb_in_face = [&](int v) {
                std::vector<int> r;
                for (int w : face)
                    if (dodeca.has_edge(v, w)) r.push_back(w);
                return r;
            };
            auto nx = nb_in_face(x), ny = nb_in_face(y);
            if (nx.size() == 2 && ny.size() == 2) {
                if (found) throw ConstructionError("babi_3555: EF edge not unique");
                found = make_edge(x, y);
            }
        }
        if (!found) throw ConstructionError("babi_3555: EF edge not found");
        return *found;
    };
    Edge EF1 = find_EF(face1);
    Edge EF2 = find_EF(*face2);

    // all 5-cycles of the dodecahedron are its twelve faces
    std::vector<std::vector<int>> pentagons;
    {
        std::vector<int> path;
        auto rec = [&](auto&& self) -> void {
            int u = path.back();
            for (int w : dodeca.neighbors(u)) {
                if (w == path.front() && path.size() == 5) {
                    if (path[1] < path.back()) pentagons.push_back(path);
                } else if (w > path.front() && path.size() < 5 &&
                           std::find(path.begin(), path.end(), w) == path.end()) {
                    path.push_back(w);
                    self(self);
                    path.pop_back();
                }
            }
        };
        for (int s = 0; s < 20; ++s) {
            path.assign(1, s);
            rec(rec);
        }
        if (pentagons.size() != 12) throw std::logic_error("babi_3555: pentagon count");
    }
    // pentagon through v and its two neighbors a,b in `face`; delete its
    // three edges not incident to v
    auto pentagon_deletions = [&](int v, const std::vector<int>& face,
                                  std::vector<Edge>& out) {
        std::vector<int> nb;
        for (int w : face)
            if (dodeca.has_edge(v, w)) nb.push_back(w);
        if (nb.size() != 2) throw std::logic_error("babi_3555: EF orientation");
        const std::vector<int>* pent = nullptr;
        for (const auto& c : pentagons) {
            bool has = std::find(c.begin(), c.end(), v) != c.end() &&
                       std::find(c.begin(), c.end(), nb[0]) != c.end() &&
                       std::find(c.begin(), c.end(), nb[1]) != c.end();
            if (!has) continue;
            if (pent) throw ConstructionError("babi_3555: pentagon not unique");
            pent = &c;
        }
        if (!pent) throw ConstructionError("babi_3555: pentagon not found");
        for (std::size_t i = 0; i < 5; ++i) {
            int x = (*pent)[i], y = (*pent)[(i + 1) % 5];
            if (x != v && y != v) out.push_back(make_edge(x, y));
        }
    };

    // step 1: delete the two tetrahedral vertices
    GraphBuilder b(rw.graph);
    auto remap = b.delete_vertices(tetra);
    {
        Graph mid = b.freeze();
        auto cen = mid.degree_counts();
        if (mid.order() != 28 || cen.at(5) != 20 || cen.at(4) != 8)
            throw ConstructionError("babi_3555: RW' census failed");
    }
    // step 2, square 1: the four edges from E1 and F1 into face1
    std::vector<Edge> dele;
    for (int v : {EF1.first, EF1.second})
        for (int w : face1)
            if (dodeca.has_edge(v, w)) dele.push_back(make_edge(v, w));
    // step 2, square 2: the outer pentagon paths around E2 and F2
    pentagon_deletions(EF2.first, *face2, dele);
    pentagon_deletions(EF2.second, *face2, dele);
    if (dele.size() != 10) throw std::logic_error("babi_3555: deletion count");
    for (auto [u, v] : dele) b.remove_edge(remap[u], remap[v]);

    return detail::validated(b.freeze(), BabiParams(3, 5, 5), 28,
                             "babi_3555_from_rw: Robertson-Wegner deletion" +
                                 detail::deletion_note(tetra));
}

// ---------------------------------------------------------------------------
// Amalgamation into biaffine planes (girth 5).

inline ConstructionResult amalgamate(int q, BiaffineKind kind, const Graph& gamma,
                                     const std::string& gamma_name = "gamma") {
    const int need_order = kind == BiaffineKind::type1 ? q : q - 1;
    if (gamma.order() != need_order)
        throw std::invalid_argument("amalgamate: gamma must have order " +
                                    std::to_string(need_order));
    const int k = gamma.order() ? gamma.degree(0) : 0;
    if (k < 1 || !gamma.is_regular(k))
        throw std::invalid_argument("amalgamate: gamma must be k-regular, k >= 1");
    if (!girth_at_least(girth(gamma), 5))
        throw std::invalid_argument("amalgamate: gamma must have girth >= 5");

    IncidenceStructure ba = biaffine(q, kind);
    GraphBuilder b(levi(ba));
    for (const auto& cls : ba.classes)
        for (auto [x, y] : gamma.edges()) b.add_edge(cls[x], cls[y]);

    const long long v = kind == BiaffineKind::type1 ? 2LL * q * q : 2LL * q * q - 2;
    auto res = detail::validated(
        b.freeze(), BabiParams(q, q + k, 5), v,
        "amalgamate(q=" + std::to_string(q) + ",type" +
            (kind == BiaffineKind::type1 ? std::string("1") : std::string("2")) +
            ",gamma=" + gamma_name + ")");
    if (v * k % 4 != 0) throw std::logic_error("amalgamate: vk/4 not integral");
    if (!res.cert.census || res.cert.census->thin != 0 ||
        res.cert.census->fat != v * k / 4)
        throw ConstructionError("amalgamate: census (v/4)k fat, 0 thin failed");
    return res;
}

// ---------------------------------------------------------------------------
// General existence: equalize orders by replication, then connect through
// switching an edge off a girth cycle of the s-regular side.

namespace detail {

inline Graph disjoint_copies(const Graph& g, int n) {
    GraphBuilder b(g.order() * n);
    for (int i = 0; i < n; ++i)
        for (auto [u, v] : g.edges()) b.add_edge(i * g.order() + u, i * g.order() + v);
    return b.freeze();
}

}  // namespace detail

inline ConstructionResult compose_babi(const Graph& g_r, const Graph& g_s, int g) {
    const int r = g_r.order() ? g_r.degree(0) : 0;
    const int s = g_s.order() ? g_s.degree(0) : 0;
    if (!g_r.is_regular(r) || !g_s.is_regular(s))
        throw std::invalid_argument("compose_babi: inputs must be regular");
    if (!(2 <= r && r < s && s > 2))
        throw std::invalid_argument("compose_babi: need 2 <= r < s, s > 2");
    if (girth(g_r) != g || girth(g_s) != g)
        throw std::invalid_argument("compose_babi: inputs must both have girth exactly " +
                                    std::to_string(g));
    const long long vr = g_r.order(), vs = g_s.order();
    const long long l = std::lcm(vr, vs);
    // r = 2 graphs cannot pass through replicate (k > 2); disjoint copies
    // keep 2-regularity and girth
    Graph gr_big = r > 2 ? replicate(g_r, static_cast<int>(l / vr))
                         : detail::disjoint_copies(g_r, static_cast<int>(l / vr));
    Graph gs_big = replicate(g_s, static_cast<int>(l / vs));
    Edge er = gr_big.edges().front();
    Edge es = detail::edge_off_girth_cycle(gs_big);
    Graph joined = connect_switch(gr_big, er, gs_big, es);
    return detail::validated(
        joined, BabiParams(r, s, g), 2 * l,
        "compose_babi: orders equalized to lcm=" + std::to_string(l) +
            " (proof uses the product; lcm deviation flagged), then switched");
}

// ---------------------------------------------------------------------------
// Girth 6 from projective planes.

namespace detail {

// Delete `count` independent edges whose endpoints currently have degree
// `fat_deg`; greedy with exact fallback (independent_edges).
inline Graph delete_balancing_edges(const Graph& g, int fat_deg, long long count,
                                    const char* who) {
    auto picked = independent_edges(g, static_cast<int>(count),
                                    [&](int v) { return g.degree(v) == fat_deg; });
    if (!picked) throw ConstructionError(std::string(who) + ": balancing matching not found");
    GraphBuilder b(g);
    for (auto [u, v] : *picked) b.remove_edge(u, v);
    return b.freeze();
}

}  // namespace detail

// Levi graph of PG(2,q) minus a non-incident point-line pair, then
// (q^2-q-2)/2 independent fat-fat edges.
inline ConstructionResult babi_g6_pair(int q) {
    IncidenceStructure pg = pg2(q);
    const FieldTable& f = gf(q);
    const int n = pg.num_points();
    ProjTriple P{{1, 0, 0}};
    int pi = -1, li = -1;
    for (int i = 0; i < n; ++i)
        if (pg.point_coords[i] == P) pi = i;
    for (int j = 0; j < n; ++j)
        if (dot(f, pg.line_coords[j], P) != 0) { li = j; break; }
    GraphBuilder b(levi(pg));
    b.delete_vertices({pi, n + li});
    Graph g1 = b.freeze();
    Graph g2 = detail::delete_balancing_edges(g1, q + 1, (1LL * q * q - q - 2) / 2,
                                              "babi_g6_pair");
    return detail::validated(g2, BabiParams(q, q + 1, 6), 2LL * (q * q + q),
                             "babi_g6_pair(q=" + std::to_string(q) + ")" +
                                 detail::deletion_note({pi, n + li}));
}

// Levi graph of PG(2,q), q > 3, minus three non-collinear points and their
// joining lines, then (q-1)(q-4)/2 independent fat-fat edges.
inline ConstructionResult babi_g6_triangle(int q) {
    if (q <= 3) throw std::invalid_argument("babi_g6_triangle: q > 3 required");
    IncidenceStructure pg = pg2(q);
    const FieldTable& f = gf(q);
    const int n = pg.num_points();
    auto on = [&](int i, int j) { return dot(f, pg.point_coords[i], pg.line_coords[j]) == 0; };
    auto line_through = [&](int a, int c) {
        for (int j = 0; j < n; ++j)
            if (on(a, j) && on(c, j)) return j;
        throw std::logic_error("no joining line");
    };
    const int p1 = 0, p2 = 1;
    const int l12 = line_through(p1, p2);
    int p3 = -1;
    for (int i = 0; i < n; ++i)
        if (i != p1 && i != p2 && !on(i, l12)) { p3 = i; break; }
    const int l13 = line_through(p1, p3), l23 = line_through(p2, p3);
    GraphBuilder b(levi(pg));
    std::vector<int> dels{p1, p2, p3, n + l12, n + l13, n + l23};
    b.delete_vertices(dels);
    Graph g2 = detail::delete_balancing_edges(b.freeze(), q + 1,
                                              1LL * (q - 1) * (q - 4) / 2,
                                              "babi_g6_triangle");
    return detail::validated(g2, BabiParams(q, q + 1, 6), 2LL * (q * q + q - 2),
                             "babi_g6_triangle(q=" + std::to_string(q) + ")" +
                                 detail::deletion_note(dels));
}

// For q = 1 (mod 4): delete an incident pair's line and its points except P,
// then unhook (q-1)/4 point-line incidences at P's remaining lines.
inline ConstructionResult babi_g6_mod4(int q) {
    if (q % 4 != 1) throw std::invalid_argument("babi_g6_mod4: q = 1 (mod 4) required");
    IncidenceStructure pg = pg2(q);
    const FieldTable& f = gf(q);
    const int n = pg.num_points();
    ProjTriple P{{1, 0, 0}};
    int pi = -1, li = -1;
    for (int i = 0; i < n; ++i)
        if (pg.point_coords[i] == P) pi = i;
    for (int j = 0; j < n; ++j)
        if (dot(f, pg.line_coords[j], P) == 0) { li = j; break; }

    std::vector<int> dels{n + li};
    for (int p : pg.lines[li])
        if (p != pi) dels.push_back(p);
    GraphBuilder b(levi(pg));
    auto remap = b.delete_vertices(dels);

    // lowest-index surviving lines through P, one lowest-index non-P point each
    int need = (q - 1) / 4;
    std::vector<char> pt_used(n, 0);
    for (int j = 0; j < n && need > 0; ++j) {
        if (j == li || dot(f, pg.line_coords[j], P) != 0) continue;
        for (int p : pg.lines[j]) {
            if (p == pi || remap[p] < 0 || pt_used[p]) continue;
            b.remove_edge(remap[p], remap[n + j]);
            pt_used[p] = 1;
            --need;
            break;
        }
    }
    if (need != 0) throw ConstructionError("babi_g6_mod4: could not place edge deletions");
    return detail::validated(b.freeze(), BabiParams(q, q + 1, 6), 2LL * q * q + q + 1,
                             "babi_g6_mod4(q=" + std::to_string(q) + ")" +
                                 detail::deletion_note(dels));
}

// Oval construction: delete the oval and tangent-at-P points, all tangents,
// and the other lines through P; leaves an (q-2, q; 6)-babi-graph.
inline ConstructionResult babi_g6_oval(int q) {
    if (q % 2 == 0 || q <= 3)
        throw std::invalid_argument("babi_g6_oval: odd q > 3 required");
    OvalClassification oc = conic_oval(q);
    const auto& pg = oc.plane;
    const int n = pg.num_points();
    const int P = oc.infinite_point;

    auto through_P = [&](int j) {
        return std::binary_search(pg.lines[j].begin(), pg.lines[j].end(), P);
    };
    int tP = -1;
    for (int j = 0; j < n; ++j)
        if (through_P(j) && oc.line_tags[j] == LineTag::tangent) tP = j;
    if (tP < 0) throw std::logic_error("babi_g6_oval: tangent at P not found");

    std::vector<char> del_pt(n, 0), del_ln(n, 0);
    for (int p : oc.oval) del_pt[p] = 1;
    for (int p : pg.lines[tP]) del_pt[p] = 1;
    for (int j = 0; j < n; ++j)
        if (oc.line_tags[j] == LineTag::tangent || through_P(j)) del_ln[j] = 1;

    std::vector<int> dels;
    for (int i = 0; i < n; ++i)
        if (del_pt[i]) dels.push_back(i);
    for (int j = 0; j < n; ++j)
        if (del_ln[j]) dels.push_back(n + j);
    GraphBuilder b(levi(pg));
    auto remap = b.delete_vertices(dels);
    Graph g2 = b.freeze();

    // per-vertex classification check: external points and secants have
    // degree q-2, internal points and external lines degree q
    for (int i = 0; i < n; ++i) {
        if (del_pt[i]) continue;
        int want = oc.point_tags[i] == PointTag::external ? q - 2 : q;
        if (g2.degree(remap[i]) != want)
            throw ConstructionError("babi_g6_oval: point degree mismatch");
    }
    for (int j = 0; j < n; ++j) {
        if (del_ln[j]) continue;
        int want = oc.line_tags[j] == LineTag::secant ? q - 2 : q;
        if (g2.degree(remap[n + j]) != want)
            throw ConstructionError("babi_g6_oval: line degree mismatch");
    }
    return detail::validated(g2, BabiParams(q - 2, q, 6), 2LL * q * (q - 1),
                             "babi_g6_oval(q=" + std::to_string(q) + ")" +
                                 detail::deletion_note(dels));
}

}  // namespace babi
