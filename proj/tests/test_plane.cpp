#include <catch2/catch_amalgamated.hpp>

#include "babi/bounds.hpp"
#include "babi/plane.hpp"

using namespace babi;

TEST_CASE("pg2 sizes") {
    CHECK(pg2(2).num_points() == 7);
    CHECK(pg2(2).num_lines() == 7);
    CHECK(pg2(4).num_points() == 21);
    CHECK(pg2(19).num_points() == 381);
    for (const auto& l : pg2(4).lines) CHECK(l.size() == 5);
}

TEST_CASE("levi graphs of projective planes meet the even-girth Moore bound") {
    for (int q : {2, 3, 4, 5}) {
        Graph g = levi(pg2(q));
        CAPTURE(q);
        CHECK(g.order() == 2 * (q * q + q + 1));
        CHECK(g.order() == moore(q + 1, 6).value);
        CHECK(g.is_regular(q + 1));
        CHECK(girth(g) == 6);
    }
}

TEST_CASE("levi(pg2(2)) is the Heawood graph") {
    Graph g = levi(pg2(2));
    CHECK(g.order() == 14);
    CHECK(g.is_regular(3));
    CHECK(girth(g) == 6);
    // bipartite with parts of size 7 by construction: no point-point edges
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(!g.has_edge(i, j));
}

TEST_CASE("biaffine planes") {
    SECTION("type 1: q-regular Levi graph on 2q^2 vertices, girth 6") {
        for (int q : {3, 4, 5}) {
            IncidenceStructure ba = biaffine(q, BiaffineKind::type1);
            Graph g = levi(ba);
            CAPTURE(q);
            CHECK(g.order() == 2 * q * q);
            CHECK(g.is_regular(q));
            CHECK(girth(g) == 6);
            CHECK(ba.classes.size() == static_cast<std::size_t>(q));
            for (const auto& c : ba.classes) CHECK(c.size() == static_cast<std::size_t>(q));
        }
    }
    SECTION("type 2: q-regular Levi graph on 2q^2-2 vertices, girth 6") {
        for (int q : {3, 4, 5}) {
            IncidenceStructure ba = biaffine(q, BiaffineKind::type2);
            Graph g = levi(ba);
            CAPTURE(q);
            CHECK(g.order() == 2 * q * q - 2);
            CHECK(g.is_regular(q));
            CHECK(girth(g) == 6);
            CHECK(ba.classes.size() == static_cast<std::size_t>(q + 1));
            for (const auto& c : ba.classes)
                CHECK(c.size() == static_cast<std::size_t>(q - 1));
        }
    }
    SECTION("biaffine(11, type2) has 12 classes of 10 points") {
        IncidenceStructure ba = biaffine(11, BiaffineKind::type2);
        CHECK(ba.classes.size() == 12);
        for (const auto& c : ba.classes) CHECK(c.size() == 10);
    }
    SECTION("classes are collinear and pairwise non-adjacent in the Levi graph") {
        IncidenceStructure ba = biaffine(4, BiaffineKind::type1);
        Graph g = levi(ba);
        for (const auto& c : ba.classes)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    CHECK(!g.has_edge(c[i], c[j]));
    }
}

TEST_CASE("Fano subplane of PG(2,4)") {
    FanoSubplane fs = fano_subplane_pg24();
    CHECK(fs.sub_points.size() == 7);
    CHECK(fs.sub_lines.size() == 7);
    CHECK(fs.tangent_pairs.size() == 7);
    // 14 pairwise distinct tangents partitioned into 7 pairs
    std::vector<int> all;
    for (auto [e, f] : fs.tangent_pairs) {
        all.push_back(e);
        all.push_back(f);
    }
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.size() == 14);
    // every line meets the subplane in 1 or 3 points (checked at build);
    // every sub-point lies on exactly 3 sub-lines
    auto p2l = fs.plane.point_to_lines();
    for (int p : fs.sub_points) {
        int onsub = 0;
        for (int l : p2l[p])
            onsub += std::binary_search(fs.sub_lines.begin(), fs.sub_lines.end(), l);
        CHECK(onsub == 3);
    }
}
