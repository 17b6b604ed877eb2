#pragma once

#include <stdexcept>
#include <vector>

#include "babi/gf.hpp"
#include "babi/plane.hpp"

namespace babi {

enum class LineTag { tangent, secant, external };
enum class PointTag { on_oval, external, internal };

// Classification of PG(2,q), q odd, with respect to the conic oval
// {(x, x^2, 1)} u {(0,1,0)} (projective closure of Y = X^2).
//
// Geometric tags come from incidence counting: a line is tangent/secant/
// external by the size of its oval intersection, a non-oval point external or
// internal by lying on 2 or 0 tangents.  The algebraic route re-derives the
// same tags by square tests: the line Y = mX + k is a secant, tangent or
// external line according to whether m^2 + 4k is a nonzero square, zero, or a
// non-square, and the affine point (a,b) off the oval is external or internal
// according to whether a^2 - b is a nonzero square or a non-square.  The two
// routes are cross-checked element by element at construction.
struct OvalClassification {
    int q = 0;
    IncidenceStructure plane;
    std::vector<int> oval;              // point indices, the infinite point last
    std::vector<LineTag> line_tags;     // per line of the plane
    std::vector<PointTag> point_tags;   // per point of the plane
    int infinite_point = -1;            // (0,1,0), the oval point used as P
};

inline OvalClassification conic_oval(int q) {
    if (q % 2 == 0) throw std::invalid_argument("conic_oval: q must be odd");
    const FieldTable& f = gf(q);
    OvalClassification oc;
    oc.q = q;
    oc.plane = pg2(q);
    const auto& pg = oc.plane;
    const int n = pg.num_points();

    auto point_index = [&](ProjTriple t) {
        for (int i = 0; i < n; ++i)
            if (pg.point_coords[i] == t) return i;
        throw std::logic_error("point not found");
    };
    auto line_index = [&](ProjTriple t) {
        for (int j = 0; j < n; ++j)
            if (pg.line_coords[j] == t) return j;
        throw std::logic_error("line not found");
    };
    auto norm = [&](int a, int b, int c) {
        return ProjTriple::normalized(f, {a, b, c});
    };

    std::vector<char> on_oval(n, 0);
    for (int x = 0; x < q; ++x) {
        int i = point_index(norm(x, f.mul(x, x), 1));
        oc.oval.push_back(i);
        on_oval[i] = 1;
    }
    oc.infinite_point = point_index(norm(0, 1, 0));
    oc.oval.push_back(oc.infinite_point);
    on_oval[oc.infinite_point] = 1;

    // geometric line tags
    oc.line_tags.resize(n);
    std::vector<char> is_tangent(n, 0);
    for (int j = 0; j < n; ++j) {
        int cnt = 0;
        for (int p : pg.lines[j]) cnt += on_oval[p];
        if (cnt > 2) throw std::logic_error("conic_oval: three collinear oval points");
        oc.line_tags[j] = cnt == 2 ? LineTag::secant
                        : cnt == 1 ? LineTag::tangent
                                   : LineTag::external;
        is_tangent[j] = cnt == 1;
    }

    // geometric point tags
    auto p2l = pg.point_to_lines();
    oc.point_tags.resize(n);
    for (int i = 0; i < n; ++i) {
        if (on_oval[i]) { oc.point_tags[i] = PointTag::on_oval; continue; }
        int t = 0;
        for (int l : p2l[i]) t += is_tangent[l];
        if (t != 0 && t != 2)
            throw std::logic_error("conic_oval: point on neither 0 nor 2 tangents");
        oc.point_tags[i] = t == 2 ? PointTag::external : PointTag::internal;
    }

    // algebraic cross-check
    const int four = f.add(f.add(1, 1), f.add(1, 1));
    for (int m = 0; m < q; ++m)
        for (int k = 0; k < q; ++k) {
            int j = line_index(norm(m, f.neg(1), k));  // Y = mX + k
            int disc = f.add(f.mul(m, m), f.mul(four, k));
            LineTag alg = disc == 0 ? LineTag::tangent
                        : f.is_nonzero_square(disc) ? LineTag::secant
                                                    : LineTag::external;
            if (alg != oc.line_tags[j])
                throw std::logic_error("conic_oval: algebraic line tag disagrees");
        }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            int i = point_index(norm(a, b, 1));
            int disc = f.sub(f.mul(a, a), b);
            if (disc == 0) {
                if (!on_oval[i]) throw std::logic_error("conic_oval: a^2 = b off oval");
                continue;
            }
            PointTag alg = f.is_nonzero_square(disc) ? PointTag::external
                                                     : PointTag::internal;
            if (alg != oc.point_tags[i])
                throw std::logic_error("conic_oval: algebraic point tag disagrees");
        }

    // count invariants (plane order q)
    long long tan = 0, sec = 0, extl = 0, extp = 0, intp = 0;
    for (auto t : oc.line_tags)
        (t == LineTag::tangent ? tan : t == LineTag::secant ? sec : extl)++;
    for (auto t : oc.point_tags) {
        if (t == PointTag::external) ++extp;
        if (t == PointTag::internal) ++intp;
    }
    if (tan != q + 1 || sec != 1LL * q * (q + 1) / 2 || extl != 1LL * q * (q - 1) / 2 ||
        extp != 1LL * q * (q + 1) / 2 || intp != 1LL * q * (q - 1) / 2)
        throw std::logic_error("conic_oval: classification counts wrong");
    return oc;
}

}  // namespace babi
