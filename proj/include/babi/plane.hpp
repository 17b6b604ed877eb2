#pragma once

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "babi/gf.hpp"
#include "babi/graph.hpp"

namespace babi {

// Homogeneous coordinate triple over GF(q), normalized so the first nonzero
// coordinate is 1.  Serves for both points and lines of PG(2,q).
struct ProjTriple {
    std::array<int, 3> c{0, 0, 0};

    bool operator==(const ProjTriple&) const = default;

    static ProjTriple normalized(const FieldTable& f, std::array<int, 3> v) {
        int lead = -1;
        for (int i = 0; i < 3; ++i)
            if (v[i] != 0) { lead = i; break; }
        if (lead < 0) throw std::invalid_argument("zero triple is not projective");
        int s = f.inv(v[lead]);
        for (int& x : v) x = f.mul(s, x);
        return ProjTriple{v};
    }

    std::string str() const {
        return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
               std::to_string(c[2]) + ")";
    }
};

inline int dot(const FieldTable& f, const ProjTriple& a, const ProjTriple& b) {
    int s = 0;
    for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a.c[i], b.c[i]));
    return s;
}

// Point-line incidence structure.  For amalgamation, `classes` optionally
// carries designated collinear point sets (indices into `points`).
struct IncidenceStructure {
    int q = 0;  // plane order when geometric, 0 otherwise
    std::vector<std::string> point_labels;
    std::vector<std::string> line_labels;
    std::vector<std::vector<int>> lines;        // per line, sorted point indices
    std::vector<std::vector<int>> classes;      // amalgamation classes (may be empty)
    std::vector<ProjTriple> point_coords;       // parallel to points when geometric
    std::vector<ProjTriple> line_coords;

    int num_points() const { return static_cast<int>(point_labels.size()); }
    int num_lines() const { return static_cast<int>(lines.size()); }

    std::vector<std::vector<int>> point_to_lines() const {
        std::vector<std::vector<int>> p2l(num_points());
        for (int j = 0; j < num_lines(); ++j)
            for (int p : lines[j]) p2l[p].push_back(j);
        return p2l;
    }
};

namespace detail {

// Canonical enumeration order of the projective triples over GF(q):
// (0,0,1), (0,1,a), (1,a,b).
inline std::vector<ProjTriple> proj_triples(const FieldTable& f) {
    int q = f.order();
    std::vector<ProjTriple> out;
    out.push_back(ProjTriple{{0, 0, 1}});
    for (int a = 0; a < q; ++a) out.push_back(ProjTriple{{0, 1, a}});
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) out.push_back(ProjTriple{{1, a, b}});
    return out;
}

inline void verify_plane_axioms(const IncidenceStructure& inc, bool exhaustive) {
    const int q = inc.q;
    const int n = inc.num_points();
    if (n != q * q + q + 1 || inc.num_lines() != n)
        throw std::logic_error("pg2: wrong point/line count");
    for (auto& l : inc.lines)
        if (static_cast<int>(l.size()) != q + 1)
            throw std::logic_error("pg2: axiom P3 failed");
    auto p2l = inc.point_to_lines();
    for (auto& ls : p2l)
        if (static_cast<int>(ls.size()) != q + 1)
            throw std::logic_error("pg2: axiom P4 failed");

    auto common_lines = [&](int a, int b) {
        int cnt = 0;
        for (int l : p2l[a])
            if (std::binary_search(inc.lines[l].begin(), inc.lines[l].end(), b)) ++cnt;
        return cnt;
    };
    auto common_points = [&](int l, int m) {
        int cnt = 0;
        std::size_t i = 0, j = 0;
        const auto& A = inc.lines[l];
        const auto& B = inc.lines[m];
        while (i < A.size() && j < B.size()) {
            if (A[i] == B[j]) { ++cnt; ++i; ++j; }
            else if (A[i] < B[j]) ++i;
            else ++j;
        }
        return cnt;
    };
    if (exhaustive) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (common_lines(a, b) != 1) throw std::logic_error("pg2: axiom P1 failed");
                if (common_points(a, b) != 1) throw std::logic_error("pg2: axiom P2 failed");
            }
    } else {
        // spot check: 1000 deterministic pseudo-random pairs
        std::mt19937 rng(12345);
        for (int t = 0; t < 1000; ++t) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a == b) continue;
            if (common_lines(a, b) != 1) throw std::logic_error("pg2: axiom P1 failed");
            if (common_points(a, b) != 1) throw std::logic_error("pg2: axiom P2 failed");
        }
    }
}

}  // namespace detail

// The Desarguesian projective plane PG(2,q).  Point i lies on line j iff the
// dot product of their triples vanishes.  Axioms P1-P4 are checked
// exhaustively for q <= 9 and on sampled pairs above that.
inline IncidenceStructure pg2(int q) {
    const FieldTable& f = gf(q);
    auto triples = detail::proj_triples(f);
    IncidenceStructure inc;
    inc.q = q;
    inc.point_coords = triples;
    inc.line_coords = triples;
    for (auto& t : triples) {
        inc.point_labels.push_back("P" + t.str());
        inc.line_labels.push_back("L" + t.str());
    }
    inc.lines.resize(triples.size());
    for (std::size_t j = 0; j < triples.size(); ++j)
        for (std::size_t i = 0; i < triples.size(); ++i)
            if (dot(f, triples[i], triples[j]) == 0)
                inc.lines[j].push_back(static_cast<int>(i));
    detail::verify_plane_axioms(inc, q <= 9);
    return inc;
}

// Levi (incidence) graph: vertices are points then lines, edges are
// incidences.
inline Graph levi(const IncidenceStructure& inc) {
    GraphBuilder b(inc.num_points() + inc.num_lines());
    for (int j = 0; j < inc.num_lines(); ++j)
        for (int p : inc.lines[j]) b.add_edge(p, inc.num_points() + j);
    return b.freeze();
}

enum class BiaffineKind { type1, type2 };  // incident / non-incident deleted pair

// Projective plane minus a point-line pair (P, l), the lines through P and
// the points on l.  The amalgamation classes are the leftover point sets of
// the deleted lines through P: q sets of size q (type 1) or q+1 sets of size
// q-1 (type 2).
//
// Canonical pair: P = (1,0,0); l = the first line through P (type 1) or the
// first line not through P (type 2) in enumeration order.
inline IncidenceStructure biaffine(int q, BiaffineKind kind) {
    const FieldTable& f = gf(q);
    IncidenceStructure pg = pg2(q);
    const int n = pg.num_points();

    ProjTriple P = ProjTriple{{1, 0, 0}};
    int pi = -1;
    for (int i = 0; i < n; ++i)
        if (pg.point_coords[i] == P) pi = i;
    auto through_P = [&](int j) { return dot(f, pg.line_coords[j], P) == 0; };
    int li = -1;
    for (int j = 0; j < n; ++j) {
        bool inc_pair = through_P(j);
        if ((kind == BiaffineKind::type1) == inc_pair) { li = j; break; }
    }

    std::vector<char> del_pt(n, 0), del_ln(n, 0);
    del_pt[pi] = 1;
    del_ln[li] = 1;
    for (int j = 0; j < n; ++j)
        if (through_P(j)) del_ln[j] = 1;
    for (int p : pg.lines[li]) del_pt[p] = 1;

    std::vector<int> pt_map(n, -1);
    int np = 0;
    for (int i = 0; i < n; ++i)
        if (!del_pt[i]) pt_map[i] = np++;

    IncidenceStructure out;
    out.q = q;
    for (int i = 0; i < n; ++i)
        if (!del_pt[i]) {
            out.point_labels.push_back(pg.point_labels[i]);
            out.point_coords.push_back(pg.point_coords[i]);
        }
    for (int j = 0; j < n; ++j) {
        if (del_ln[j]) continue;
        std::vector<int> pts;
        for (int p : pg.lines[j])
            if (!del_pt[p]) pts.push_back(pt_map[p]);
        out.lines.push_back(std::move(pts));
        out.line_labels.push_back(pg.line_labels[j]);
        out.line_coords.push_back(pg.line_coords[j]);
    }
    // classes: surviving points of each deleted line through P other than l
    for (int j = 0; j < n; ++j) {
        if (!through_P(j) || j == li) continue;
        std::vector<int> cls;
        for (int p : pg.lines[j])
            if (!del_pt[p]) cls.push_back(pt_map[p]);
        std::sort(cls.begin(), cls.end());
        out.classes.push_back(std::move(cls));
    }

    const int expect_pts = kind == BiaffineKind::type1 ? q * q : q * q - 1;
    const std::size_t expect_classes = kind == BiaffineKind::type1 ? q : q + 1;
    const std::size_t class_size = kind == BiaffineKind::type1 ? q : q - 1;
    if (out.num_points() != expect_pts || out.num_lines() != expect_pts)
        throw std::logic_error("biaffine: wrong size");
    if (out.classes.size() != expect_classes)
        throw std::logic_error("biaffine: wrong class count");
    for (auto& c : out.classes)
        if (c.size() != class_size) throw std::logic_error("biaffine: wrong class size");
    return out;
}

// The Fano (Baer) subplane of PG(2,4) with GF(2) coordinates, together with
// the tangent pairing: for each subplane point P_i the two lines of PG(2,4)
// through P_i that meet the subplane only at P_i.
struct FanoSubplane {
    IncidenceStructure plane;          // PG(2,4)
    std::vector<int> sub_points;       // 7 point indices
    std::vector<int> sub_lines;        // 7 line indices
    std::vector<std::pair<int, int>> tangent_pairs;  // (e_i, f_i) per sub point
};

inline FanoSubplane fano_subplane_pg24() {
    FanoSubplane fs;
    fs.plane = pg2(4);
    const auto& pg = fs.plane;
    auto is_sub = [&](const ProjTriple& t) {
        return t.c[0] <= 1 && t.c[1] <= 1 && t.c[2] <= 1;
    };
    for (int i = 0; i < pg.num_points(); ++i)
        if (is_sub(pg.point_coords[i])) fs.sub_points.push_back(i);
    for (int j = 0; j < pg.num_lines(); ++j)
        if (is_sub(pg.line_coords[j])) fs.sub_lines.push_back(j);
    if (fs.sub_points.size() != 7 || fs.sub_lines.size() != 7)
        throw std::logic_error("fano subplane: wrong size");

    // Baer property: every line meets the subplane in 1 or 3 points
    std::vector<int> meet(pg.num_lines(), 0);
    for (int j = 0; j < pg.num_lines(); ++j)
        for (int p : pg.lines[j])
            if (std::binary_search(fs.sub_points.begin(), fs.sub_points.end(), p)) ++meet[j];
    for (int j = 0; j < pg.num_lines(); ++j) {
        bool subline = std::binary_search(fs.sub_lines.begin(), fs.sub_lines.end(), j);
        if (subline ? meet[j] != 3 : meet[j] != 1)
            throw std::logic_error("fano subplane: Baer intersection property failed");
    }

    auto p2l = pg.point_to_lines();
    std::vector<char> used(pg.num_lines(), 0);
    for (int p : fs.sub_points) {
        std::vector<int> tangents;
        for (int l : p2l[p])
            if (meet[l] == 1) tangents.push_back(l);
        if (tangents.size() != 2) throw std::logic_error("fano subplane: tangent count");
        for (int l : tangents) {
            if (used[l]) throw std::logic_error("fano subplane: tangents not a matching");
            used[l] = 1;
        }
        fs.tangent_pairs.emplace_back(tangents[0], tangents[1]);
    }
    return fs;
}

}  // namespace babi
