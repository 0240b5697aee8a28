#include <catch2/catch_amalgamated.hpp>

#include "dimers/tiling.hpp"
#include "dimers/weighting.hpp"

using namespace dimers;

namespace {
size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}
}  // namespace

TEST_CASE("a matching becomes nine rhombi on the n=1 torus") {
    TorusGraph g = build_torus_graph(1);
    EdgeWeighting w = uniform_weighting();
    auto ms = enumerate_matchings(g);
    for (const auto& m : {ms.front(), ms.back()}) {
        RhombusTiling t = to_rhombus_tiling(g, m, w);
        CHECK(t.n == 1);
        CHECK(t.rhombi.size() == 9);
        CHECK(t.forced.empty());
        for (const Rhombus& r : t.rhombi) {
            CHECK((r.orientation >= 0 && r.orientation <= 2));
            // unit rhombus: all four sides have length 1
            for (int i = 0; i < 4; ++i) {
                double side = std::abs(r.quad[size_t(i)] - r.quad[size_t((i + 1) % 4)]);
                CHECK(side == Catch::Approx(1.0).margin(1e-12));
            }
        }
    }
}

TEST_CASE("zero-weight classes show up as forced segments") {
    TorusGraph g = build_torus_graph(1);
    auto ex = example_weighting(3, Rational(1), Rational(1)); // six classes forced to 0
    auto ms = enumerate_matchings(g);
    int usable = 0;
    for (const auto& m : ms) {
        bool nonzero = true;
        for (int id : m)
            if (ex.weighting.at(edge_label(g.edges[size_t(id)].base)) == 0) nonzero = false;
        if (!nonzero) {
            CHECK_THROWS_WITH(to_rhombus_tiling(g, m, ex.weighting),
                              Catch::Matchers::ContainsSubstring("weight is 0"));
            continue;
        }
        ++usable;
        RhombusTiling t = to_rhombus_tiling(g, m, ex.weighting);
        CHECK(t.rhombi.size() == 9);
        CHECK(t.forced.size() == 6);
    }
    // the surviving configurations are exactly the weighted matching count at m=w=1
    CHECK(usable == 6);
}

TEST_CASE("svg rendering is deterministic and well formed") {
    TorusGraph g = build_torus_graph(1);
    auto ex = example_weighting(6, Rational(2), Rational(3));
    auto ms = enumerate_matchings(g);
    Matching chosen;
    for (const auto& m : ms) {
        bool nonzero = true;
        for (int id : m)
            if (ex.weighting.at(edge_label(g.edges[size_t(id)].base)) == 0) nonzero = false;
        if (nonzero) {
            chosen = m;
            break;
        }
    }
    REQUIRE(!chosen.empty());
    RhombusTiling t = to_rhombus_tiling(g, chosen, ex.weighting);
    std::string svg = render_tiling_svg(t);
    CHECK(svg == render_tiling_svg(t)); // byte-identical rerun
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count_occurrences(svg, "<polygon") == 9);
    CHECK(count_occurrences(svg, "<path") == t.forced.size());
    CHECK(count_occurrences(svg, "</svg>") == 1);
}

TEST_CASE("orientation classes are balanced for a torus matching") {
    // each matching covers the 9 whites; orientations partition as 3+3+3 only
    // for the translation-invariant matchings, but the total is always 9
    TorusGraph g = build_torus_graph(1);
    EdgeWeighting w = uniform_weighting();
    auto ms = enumerate_matchings(g);
    std::array<int, 3> seen = {0, 0, 0};
    for (const auto& m : ms) {
        RhombusTiling t = to_rhombus_tiling(g, m, w);
        std::array<int, 3> c = {0, 0, 0};
        for (const Rhombus& r : t.rhombi) ++c[size_t(r.orientation)];
        CHECK(c[0] + c[1] + c[2] == 9);
        for (int i = 0; i < 3; ++i)
            if (c[size_t(i)] == 9) ++seen[size_t(i)];
    }
    // exactly one all-plain, one all-x-type and one all-y-type matching
    CHECK(seen == std::array<int, 3>{1, 1, 1});
}
