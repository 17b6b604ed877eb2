#include <catch2/catch_amalgamated.hpp>

#include "babi/bounds.hpp"

using namespace babi;

TEST_CASE("moore bound") {
    CHECK(moore(3, 5).value == 10);
    CHECK(moore(7, 5).value == 50);
    CHECK(moore(5, 6).value == 42);   // q = 4
    CHECK(moore(3, 6).value == 14);
    CHECK(moore(4, 5).value == 17);
    CHECK_THROWS_AS(moore(2, 5), std::invalid_argument);
}

TEST_CASE("babi_lower") {
    CHECK(babi_lower(2, 3, 3).value == 4);
    CHECK(babi_lower(2, 3, 4).value == 6);
    CHECK(babi_lower(2, 3, 5).value == 8);
    CHECK(babi_lower(2, 3, 6).value == 10);
    CHECK(babi_lower(2, 4, 5).value == 13);
    // Moore-tree values at (11,14;5) and (19,23;5): rs + (s-r)^2 + 1
    CHECK(babi_lower(11, 14, 5).value == 11 * 14 + 9 + 1);
    CHECK(babi_lower(19, 23, 5).value == 19 * 23 + 16 + 1);
    CHECK_THROWS_AS(babi_lower(1, 3, 5), std::invalid_argument);
}

TEST_CASE("exact girth-3 and girth-4 cage orders") {
    CHECK(babi_g3_exact(2, 5).value == 8);
    CHECK(babi_g3_exact(3, 4).value == 8);   // s=0 mod 4, r odd: s+4
    CHECK(babi_g3_exact(4, 5).value == 8);   // s=1 mod 4, r even: s+3
    CHECK(babi_g3_exact(2, 3).value == 4);
    CHECK(babi_g4_exact(2, 5).value == 12);
    CHECK(babi_g4_exact(3, 4).value == 8);
    CHECK(babi_g4_exact(4, 5).value == 12);
    CHECK(babi_g4_exact(2, 4).value == 8);
}

TEST_CASE("semi-regular lower bounds match the case tables for r <= 20") {
    CHECK(semireg5_lower(3).value == 16);
    CHECK(semireg5_lower(4).value == 24);
    CHECK(semireg5_lower(6).value == 48);
    for (int r = 3; r <= 20; ++r) {
        long long expect = (r % 4 == 0 || r % 4 == 3) ? r * r + r + 4 : r * r + r + 6;
        CHECK(semireg5_lower(r).value == expect);
    }
    CHECK(semireg6_lower(2).value == 12);
    CHECK(semireg6_lower(5).value == 56);
    CHECK(semireg6_lower(8).value == 136);
    for (int r = 2; r <= 20; ++r) {
        long long expect = (r == 2 || r == 4 || r == 6) ? 2 * (r * r + 2)
                         : (r % 2 == 1)                 ? 2 * (r * r + 3)
                                                        : 2 * (r * r + 4);
        CHECK(semireg6_lower(r).value == expect);
    }
    CHECK_THROWS_AS(semireg5_lower(2), std::invalid_argument);
}

TEST_CASE("equality feasibility") {
    CHECK(equality56_feasible(2, 3, 5).feasible);
    CHECK(!equality56_feasible(3, 4, 5).feasible);
    for (int r = 2; r <= 50; ++r)
        for (int s = r + 1; s <= 50; ++s) {
            CAPTURE(r, s);
            CHECK(equality56_feasible(r, s, 5).feasible == (r == 2 && s == 3));
        }
    // g = 6: s = 2r never works (h = 0 case of the theorem)
    for (int r = 2; r <= 25; ++r) CHECK(!equality56_feasible(r, 2 * r, 6).feasible);
    // a returned witness must actually solve the quadratic
    for (int r = 2; r <= 40; ++r)
        for (int s = r + 1; s <= 2 * r + 1 && s <= 81; ++s) {
            auto e = equality56_feasible(r, s, 6);
            if (e.feasible) {
                long long d = *e.witness_d;
                CHECK(1LL * s * s - (3LL * r + 1) * s + 4LL * r * r - 2 * d * d + 1 == 0);
                CHECK(s < 2 * r - 2);
            }
        }
}

TEST_CASE("fat edge lower bound and census caps") {
    CHECK(fat_edge_lower(8, 2, 3) == 2);
    CHECK(fat_edge_lower(240, 11, 14) == 180);
    CHECK(fat_edge_lower(14, 2, 4) == 7);
    CHECK_THROWS_AS(fat_edge_lower(7, 2, 3), std::invalid_argument);

    auto caps = census_caps(12, 2, 4);
    CHECK(caps.fat_cap_eighths == 48);   // fat < 48/8 = 6
    CHECK(caps.thin_cap_eighths == 24);  // thin < 24/8 = 3
    CHECK(!caps.validated);              // r = 2 sits outside the proof's range
    CHECK(census_caps(2 * 9 + 4, 3, 4).validated);
    CHECK_THROWS_AS(census_caps(12, 2, 2), std::invalid_argument);
}

TEST_CASE("general upper bound formula") {
    // 32 * sum_{t=1}^{g-2}(r-1)^t * sum(s-1)^t at (2,3;5): 32*(1+1+1)*(2+4+8)
    CHECK(babi_upper(2, 3, 5).value == 32LL * 3 * 14);
    CHECK(babi_upper(2, 3, 5).kind == BoundResult::Kind::upper);
}
