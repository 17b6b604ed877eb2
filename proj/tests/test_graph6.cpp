#include <catch2/catch_amalgamated.hpp>

#include "babi/graph6.hpp"
#include "babi/named_graphs.hpp"

using namespace babi;

TEST_CASE("graph6 basics") {
    CHECK(graph6_encode(Graph::from_edges(0, {})) == "?");
    // 5-cycle round trip
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(graph6_decode(graph6_encode(c5)) == c5);
    // reference encodings (cross-checked against nauty/networkx output)
    CHECK(graph6_encode(Graph::from_edges(2, {{0, 1}})) == "A_");
    Graph g4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(graph6_encode(g4) == "Cx");
    CHECK(graph6_encode(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) ==
          "Dhc");
}

TEST_CASE("graph6 round trip is the identity, including the long form") {
    auto check_rt = [](const Graph& g) {
        Graph h = graph6_decode(graph6_encode(g));
        REQUIRE(h.order() == g.order());
        CHECK(h == g);
    };
    check_rt(petersen());
    check_rt(heawood());
    check_rt(robertson());
    check_rt(hoffman_singleton());
    // force the >62-vertex long form: a 63-cycle
    std::vector<Edge> es;
    for (int i = 0; i < 63; ++i) es.push_back(make_edge(i, (i + 1) % 63));
    Graph c63 = Graph::from_edges(63, es);
    std::string enc = graph6_encode(c63);
    CHECK(enc[0] == '~');
    check_rt(c63);
}

TEST_CASE("graph6 round trip on pseudo-random graphs") {
    unsigned long long st = 0x9e3779b97f4a7c15ull;
    auto rnd = [&]() {
        st ^= st << 13;
        st ^= st >> 7;
        st ^= st << 17;
        return st;
    };
    for (int n = 0; n <= 20; ++n)
        for (int t = 0; t < 5; ++t) {
            std::vector<Edge> es;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rnd() % 100 < 40) es.emplace_back(i, j);
            Graph g = Graph::from_edges(n, es);
            CAPTURE(n, t);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6ParseError);
    CHECK_THROWS_AS(graph6_decode("D"), Graph6ParseError);      // truncated bits
    CHECK_THROWS_AS(graph6_decode("A_x"), Graph6ParseError);    // trailing bytes
    CHECK_THROWS_AS(graph6_decode("A\x19"), Graph6ParseError);  // byte out of range
    try {
        graph6_decode("D");
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset == 1);
    }
}
