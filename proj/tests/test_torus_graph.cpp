#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "dimers/torus_graph.hpp"

using namespace dimers;

TEST_CASE("fundamental domain: 27 edge classes with canonical labels") {
    const auto& labels = edge_labels();
    REQUIRE(labels.size() == 27);
    std::vector<std::string> expected = {
        "Aa", "Ba", "Ga", "Bb", "Cb", "Hb", "Ac", "Cc", "Ic",
        "Ad", "Dd", "Ed", "Be", "Ee", "Fe", "Cf", "Df", "Ff",
        "Dg", "Gg", "Hg", "Eh", "Hh", "Ih", "Fi", "Gi", "Ii"};
    CHECK(labels == expected);
    for (int i = 0; i < 27; ++i) CHECK(edge_label_index(labels[size_t(i)]) == i);
    CHECK_THROWS_AS(edge_label_index("Zz"), std::invalid_argument);
}

TEST_CASE("fundamental domain: marked edge classes") {
    std::set<std::string> x_marked, y_marked;
    for (int i = 0; i < 27; ++i) {
        Crossing c = base_edges()[size_t(i)].crossing;
        if (c == Crossing::x) x_marked.insert(edge_label(i));
        if (c == Crossing::y) y_marked.insert(edge_label(i));
    }
    CHECK(x_marked == std::set<std::string>{"Ga", "Hb", "Ic"});
    CHECK(y_marked == std::set<std::string>{"Ac", "Df", "Gi"});
}

TEST_CASE("torus graph sizes scale with the cover") {
    for (int n : {1, 2, 3}) {
        TorusGraph g = build_torus_graph(n);
        CHECK(g.n == n);
        CHECK(g.num_black() == 9 * n * n);
        CHECK(g.num_white() == 9 * n * n);
        CHECK(g.edges.size() == size_t(27 * n * n));
        // bipartite and 3-regular on both sides
        for (const auto& adj : g.white_adj) CHECK(adj.size() == 3);
        std::vector<int> black_deg(size_t(g.num_black()), 0);
        for (const TorusEdge& e : g.edges) ++black_deg[size_t(e.black)];
        for (int d : black_deg) CHECK(d == 3);
    }
    CHECK_THROWS_AS(build_torus_graph(0), std::invalid_argument);
}

TEST_CASE("each edge class appears n^2 times") {
    TorusGraph g = build_torus_graph(2);
    std::vector<int> count(27, 0);
    for (const TorusEdge& e : g.edges) ++count[size_t(e.base)];
    for (int c : count) CHECK(c == 4);
}

TEST_CASE("crossing flags match the marked classes") {
    // n = 1: every marked class crosses the boundary
    TorusGraph g = build_torus_graph(1);
    for (const TorusEdge& e : g.edges)
        CHECK(e.crossing == base_edges()[size_t(e.base)].crossing);

    // n = 2: a marked class crosses only from the boundary column/row,
    // so each of the three x classes contributes n crossings (same for y)
    TorusGraph g2 = build_torus_graph(2);
    int nx = 0, ny = 0;
    for (const TorusEdge& e : g2.edges) {
        nx += e.crossing == Crossing::x;
        ny += e.crossing == Crossing::y;
        if (e.crossing != Crossing::none)
            CHECK(e.crossing == base_edges()[size_t(e.base)].crossing);
    }
    CHECK(nx == 6);
    CHECK(ny == 6);
}

TEST_CASE("matching enumeration finds all 42 dimer configurations") {
    TorusGraph g = build_torus_graph(1);
    auto ms = enumerate_matchings(g);
    REQUIRE(ms.size() == 42);
    std::set<std::vector<int>> distinct;
    for (auto& m : ms) {
        CHECK(m.size() == 9);
        auto s = m;
        std::sort(s.begin(), s.end());
        distinct.insert(s);
        // perfect: every black vertex covered exactly once
        std::set<int> blacks;
        for (int id : m) blacks.insert(g.edges[size_t(id)].black);
        CHECK(blacks.size() == 9);
    }
    CHECK(distinct.size() == 42);
}

TEST_CASE("matching exponents count crossings") {
    TorusGraph g = build_torus_graph(1);
    auto ms = enumerate_matchings(g);
    std::map<std::pair<int, int>, int> hist;
    for (const auto& m : ms) ++hist[matching_exponents(g, m)];
    // exponent histogram of the 42 matchings: one per corner monomial,
    // three per edge monomial of the triangle, 21 in the middle
    CHECK(hist[{0, 0}] == 1);
    CHECK(hist[{3, 0}] == 1);
    CHECK(hist[{0, 3}] == 1);
    CHECK(hist[{1, 1}] == 21);
    for (auto [a, b] : {std::pair{2, 1}, {1, 2}, {2, 0}, {0, 2}, {1, 0}, {0, 1}})
        CHECK(hist[{a, b}] == 3);
    int total = 0;
    for (auto [k, c] : hist) total += c;
    CHECK(total == 42);
}

TEST_CASE("matching signs depend only on the crossing exponents") {
    TorusGraph g = build_torus_graph(1);
    auto ms = enumerate_matchings(g);
    std::map<std::pair<int, int>, std::set<int>> signs;
    for (const auto& m : ms) {
        int sign = matching_sign(g, m);
        CHECK((sign == 1 || sign == -1));
        signs[matching_exponents(g, m)].insert(sign);
    }
    for (auto& [k, s] : signs) CHECK(s.size() == 1);
    CHECK(signs[{0, 0}] == std::set<int>{1});  // the no-crossing sector is the sign anchor
    CHECK(signs[{1, 1}] == std::set<int>{-1});
}

TEST_CASE("enumeration work bound") {
    TorusGraph g2 = build_torus_graph(2);
    CHECK_THROWS_WITH(enumerate_matchings(g2), Catch::Matchers::ContainsSubstring("work bound"));
    EnumerationOptions opts;
    opts.override_work_bound = true;
    auto ms = enumerate_matchings(g2, opts);
    CHECK(ms.size() > 42); // the 2x2 cover has many more configurations
    for (const auto& m : ms) CHECK(m.size() == 36);
}
