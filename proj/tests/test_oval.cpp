#include <catch2/catch_amalgamated.hpp>

#include "babi/oval.hpp"

using namespace babi;

TEST_CASE("conic oval counts at q=5") {
    OvalClassification oc = conic_oval(5);
    CHECK(oc.oval.size() == 6);
    long long tan = 0, sec = 0, extl = 0, extp = 0, intp = 0;
    for (auto t : oc.line_tags) {
        tan += t == LineTag::tangent;
        sec += t == LineTag::secant;
        extl += t == LineTag::external;
    }
    for (auto t : oc.point_tags) {
        extp += t == PointTag::external;
        intp += t == PointTag::internal;
    }
    CHECK(tan == 6);
    CHECK(sec == 15);
    CHECK(extl == 10);
    CHECK(extp == 15);
    CHECK(intp == 10);
}

TEST_CASE("algebraic and geometric tags agree (checked at construction)") {
    // conic_oval throws if the square-test route disagrees with incidence
    // counting anywhere; q = 9 exercises a non-prime field
    for (int q : {5, 7, 9, 11, 13}) {
        CAPTURE(q);
        CHECK_NOTHROW(conic_oval(q));
    }
}

TEST_CASE("even q is rejected") {
    CHECK_THROWS_AS(conic_oval(4), std::invalid_argument);
    CHECK_THROWS_AS(conic_oval(8), std::invalid_argument);
}
