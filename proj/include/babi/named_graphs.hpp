#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "babi/graph.hpp"
#include "babi/graph6.hpp"
#include "babi/plane.hpp"

namespace babi {

// ---------------------------------------------------------------------------
// Petersen graph as the Kneser graph K(5,2): vertices are 2-subsets of a
// 5-set, edges join disjoint pairs.

inline Graph petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    GraphBuilder g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    Graph out = g.freeze();
    if (!out.is_regular(3) || girth(out) != 5 || out.order() != 10)
        throw std::logic_error("petersen: validation failed");
    return out;
}

// ---------------------------------------------------------------------------
// Robertson graph, the (4,5)-cage on 19 vertices, from its adjacency table
// (House of Graphs no. 1288).  Vertex v of the table is index v-1.

inline Graph robertson() {
    static const std::array<std::array<int, 4>, 19> table{{
        {2, 3, 4, 5},    {1, 8, 9, 10},   {1, 12, 14, 16}, {1, 11, 18, 19},
        {1, 13, 15, 17}, {7, 14, 17, 19}, {6, 15, 16, 18}, {2, 13, 14, 18},
        {2, 11, 16, 17}, {2, 12, 15, 19}, {4, 9, 14, 15},  {3, 10, 17, 18},
        {5, 8, 16, 19},  {3, 6, 8, 11},   {5, 7, 10, 11},  {3, 7, 9, 13},
        {5, 6, 9, 12},   {4, 7, 8, 12},   {4, 6, 10, 13},
    }};
    std::vector<std::vector<int>> adj(19);
    for (int v = 0; v < 19; ++v)
        for (int w : table[v]) adj[v].push_back(w - 1);
    Graph g = Graph::from_adjacency(std::move(adj));
    if (!g.is_regular(4) || girth(g) != 5 || g.edge_count() != 38)
        throw std::logic_error("robertson: validation failed");
    return g;
}

// ---------------------------------------------------------------------------
// Heawood graph = Levi graph of the Fano plane.

inline Graph heawood() {
    Graph g = levi(pg2(2));
    if (g.order() != 14 || !g.is_regular(3) || girth(g) != 6)
        throw std::logic_error("heawood: validation failed");
    return g;
}

// ---------------------------------------------------------------------------
// Hoffman-Singleton graph, the (7,5)-cage on 50 vertices.  Five pentagons
// P_h and five pentagrams Q_h over Z_5: pentagon edges P_{h,i}P_{h,i+1},
// pentagram edges Q_{h,i}Q_{h,i+2}, cross edges P_{h,i}Q_{k,hk+i}.

inline Graph hoffman_singleton() {
    auto P = [](int h, int i) { return 5 * h + i; };
    auto Q = [](int h, int i) { return 25 + 5 * h + i; };
    GraphBuilder g(50);
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) {
            g.add_edge(P(h, i), P(h, (i + 1) % 5));
            g.add_edge(Q(h, i), Q(h, (i + 2) % 5));
        }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int k = 0; k < 5; ++k) g.add_edge(P(h, i), Q(k, (h * k + i) % 5));
    Graph out = g.freeze();
    if (out.order() != 50 || !out.is_regular(7) || girth(out) != 5)
        throw std::logic_error("hoffman_singleton: validation failed");
    if (!perfect_matching(out))
        throw std::logic_error("hoffman_singleton: no 1-factor found");
    return out;
}

// ---------------------------------------------------------------------------
// Robertson-Wegner graph, one of the (5,5)-cages on 30 vertices, built from
// the regular dodecahedron in exact arithmetic over Z[phi].

namespace zphi {

// a + b*phi with phi^2 = phi + 1
struct Num {
    long long a = 0, b = 0;
    friend Num operator+(Num x, Num y) { return {x.a + y.a, x.b + y.b}; }
    friend Num operator-(Num x, Num y) { return {x.a - y.a, x.b - y.b}; }
    friend Num operator*(Num x, Num y) {
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    bool operator==(const Num&) const = default;
};

inline bool is_positive(Num x) {
    // sign of a + b*phi via 2a+b + b*sqrt(5)
    long long u = 2 * x.a + x.b, w = x.b;
    if (u >= 0 && w >= 0) return u != 0 || w != 0;
    if (u < 0 && w < 0) return false;
    if (u >= 0) return u * u > 5 * w * w;  // w < 0
    return 5 * w * w > u * u;              // u < 0, w > 0
}

inline bool less(Num x, Num y) { return is_positive(y - x); }

using Vec3 = std::array<Num, 3>;

inline Num dist2(const Vec3& u, const Vec3& v) {
    Num s;
    for (int i = 0; i < 3; ++i) {
        Num d = u[i] - v[i];
        s = s + d * d;
    }
    return s;
}

}  // namespace zphi

// The labeled substructure the (3,5;5) deletion construction needs.
struct RobertsonWegner {
    Graph graph;                            // 30 vertices: 0..19 dodecahedron, 20..29 tetrahedral
    std::vector<std::vector<int>> cubes;    // five 8-vertex sets
    std::vector<int> tetra_cube;            // cube index of each tetrahedral vertex 20+t
    std::vector<std::vector<int>> tetra_members;  // its four determining vertices
    std::vector<Edge> dodeca_edges;         // the 30 dodecahedron edges
    std::vector<Edge> cube_edge_pairs;      // vertex pairs at cube-edge distance
};

inline RobertsonWegner robertson_wegner() {
    using zphi::Num, zphi::Vec3;
    const Num one{1, 0}, mone{-1, 0}, zero{0, 0}, phi{0, 1}, phiinv{-1, 1},
        mphi{0, -1}, mphiinv{1, -1};
    std::vector<Vec3> verts;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1})
                verts.push_back({Num{sx, 0}, Num{sy, 0}, Num{sz, 0}});
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            Num pi = s1 == 1 ? phiinv : mphiinv;
            Num ph = s2 == 1 ? phi : mphi;
            verts.push_back({zero, pi, ph});
            verts.push_back({pi, ph, zero});
            verts.push_back({ph, zero, pi});
        }
    if (verts.size() != 20) throw std::logic_error("dodecahedron: vertex count");

    // dodecahedron edges = pairs at minimal distance
    Num mind{0, 0};
    bool have = false;
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v) {
            Num d = zphi::dist2(verts[u], verts[v]);
            if (!have || zphi::less(d, mind)) { mind = d; have = true; }
        }
    RobertsonWegner rw;
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v) {
            Num d = zphi::dist2(verts[u], verts[v]);
            if (d == mind) rw.dodeca_edges.emplace_back(u, v);
            if (d == Num{4, 0}) rw.cube_edge_pairs.emplace_back(u, v);
        }
    if (rw.dodeca_edges.size() != 30) throw std::logic_error("dodecahedron: edge count");

    // the five cubes: 8-subsets inducing a 3-regular subgraph of the
    // cube-edge-distance relation
    std::vector<std::vector<int>> crel(20);
    for (auto [u, v] : rw.cube_edge_pairs) {
        crel[u].push_back(v);
        crel[v].push_back(u);
    }
    std::vector<int> comb;
    auto count_in = [&](int v, const std::vector<int>& set) {
        int c = 0;
        for (int w : crel[v])
            if (std::binary_search(set.begin(), set.end(), w)) ++c;
        return c;
    };
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (cur.size() == 8) {
            for (int v : cur)
                if (count_in(v, cur) != 3) return;
            rw.cubes.push_back(cur);
            return;
        }
        for (int v = start; v < 20; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    if (rw.cubes.size() != 5) throw std::logic_error("dodecahedron: cube count");

    GraphBuilder g(30);
    for (auto [u, v] : rw.dodeca_edges) g.add_edge(u, v);
    int next_tetra = 20;
    std::vector<int> cube_first_tetra;
    for (std::size_t c = 0; c < rw.cubes.size(); ++c) {
        const auto& cube = rw.cubes[c];
        // the two tetrahedra partition the cube by face-diagonal distance
        std::vector<int> t1{cube[0]};
        for (int v : cube)
            if (v != cube[0] && zphi::dist2(verts[cube[0]], verts[v]) == Num{8, 0})
                t1.push_back(v);
        std::vector<int> t2;
        for (int v : cube)
            if (std::find(t1.begin(), t1.end(), v) == t1.end()) t2.push_back(v);
        if (t1.size() != 4 || t2.size() != 4)
            throw std::logic_error("dodecahedron: tetrahedron split");
        for (auto& t : {t1, t2}) {
            int tv = next_tetra++;
            rw.tetra_cube.push_back(static_cast<int>(c));
            rw.tetra_members.push_back(t);
            for (int v : t) g.add_edge(tv, v);
        }
        g.add_edge(next_tetra - 2, next_tetra - 1);  // same cube
    }
    rw.graph = g.freeze();
    if (rw.graph.order() != 30 || !rw.graph.is_regular(5) || girth(rw.graph) != 5)
        throw std::logic_error("robertson_wegner: validation failed");
    return rw;
}

// ---------------------------------------------------------------------------
// graph6 assets: the (6,5)-cage and the two House of Graphs babi-cages.
// Each load validates the expected parameters before releasing the graph.

struct AssetFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AssetValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NamedGraphEntry {
    std::string name;
    std::string file;
    int order;
    std::map<int, int> degrees;  // degree -> count
    int girth;
    std::optional<int> diameter;            // checked when present
    std::optional<std::pair<long long, long long>> fat_thin;  // census check
};

inline const std::vector<NamedGraphEntry>& named_graph_entries() {
    static const std::vector<NamedGraphEntry> entries{
        {"cage_6_5", "cage_6_5.g6", 40, {{6, 40}}, 5, 3, std::nullopt},
        {"hog_53705", "hog_53705.g6", 14, {{2, 7}, {4, 7}}, 5, std::nullopt, std::nullopt},
        {"hog_54321", "hog_54321.g6", 12, {{2, 6}, {3, 6}}, 6, std::nullopt,
         std::make_pair(6LL, 3LL)},
    };
    return entries;
}

inline const NamedGraphEntry& named_graph_entry(const std::string& name) {
    for (const auto& e : named_graph_entries())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown named graph asset: " + name);
}

inline Graph load_named(const std::string& name, const std::string& path) {
    const NamedGraphEntry& e = named_graph_entry(name);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AssetFileError("cannot open asset file: " + path);
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    Graph g = graph6_decode(line);  // Graph6ParseError on malformed data

    auto fail = [&](const std::string& what) {
        throw AssetValidationError(name + ": " + what);
    };
    if (g.order() != e.order) fail("wrong order");
    if (g.degree_counts() != e.degrees) fail("wrong degree multiset");
    if (girth(g) != e.girth) fail("wrong girth");
    if (e.diameter && diameter(g) != *e.diameter) fail("wrong diameter");
    if (e.fat_thin) {
        auto it = e.degrees.begin();
        int r = it->first;
        int s = std::next(it)->first;
        auto c = edge_census(g, BabiParams(r, s, e.girth));
        if (c.fat != e.fat_thin->first || c.thin != e.fat_thin->second)
            fail("wrong edge census");
    }
    return g;
}

}  // namespace babi
