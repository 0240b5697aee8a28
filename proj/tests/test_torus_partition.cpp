#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dimers/kasteleyn.hpp"
#include "dimers/mahler.hpp"
#include "dimers/torus_partition.hpp"

using namespace dimers;

namespace {
// Dehomogenized form used by the finite-size formulas: F = (xy)^{-1} P(x,y).
LaurentPoly2 dehom(const LaurentPoly2& p) { return LaurentPoly2::monomial(-1, -1) * p; }
}  // namespace

TEST_CASE("sector evaluation of the three-term model") {
    // F = x/y + y + 1/x - 3 vanishes in the (0,0) sector and gives -4 in the
    // other three
    LaurentPoly2 f = LaurentPoly2::monomial(1, -1) + LaurentPoly2::monomial(0, 1) +
                     LaurentPoly2::monomial(-1, 0) - LaurentPoly2(Rational(3));
    SectorValues s = sector_values(f, 1);
    CHECK(s.z(0, 0) == Catch::Approx(0.0).margin(1e-12));
    CHECK(s.z(0, 1) == Catch::Approx(-4.0).margin(1e-12));
    CHECK(s.z(1, 0) == Catch::Approx(-4.0).margin(1e-12));
    CHECK(s.z(1, 1) == Catch::Approx(-4.0).margin(1e-12));

    PartitionValue z = partition_function_full(f, 1);
    CHECK(z.value() == Catch::Approx(6.0).margin(1e-10)); // |0 - 4 - 4 - 4| / 2
    CHECK(partition_function(f, 1) == Catch::Approx(6.0).margin(1e-10));
}

TEST_CASE("n=1 partition function counts weighted matchings") {
    TorusGraph g = build_torus_graph(1);

    // all weights 1: the bare matching count
    EdgeWeighting ones = uniform_weighting();
    CHECK(partition_function_exact(dehom(char_poly(g, ones))) == 42);
    CHECK(brute_force_partition(g, ones) == 42);

    // forced edges thin the count down
    auto ex3 = example_weighting(3, Rational(1), Rational(1));
    CHECK(partition_function_exact(dehom(char_poly(g, ex3.weighting))) == 6);
    CHECK(brute_force_partition(g, ex3.weighting) == 6);

    auto ex6 = example_weighting(6, Rational(1), Rational(1));
    CHECK(partition_function_exact(dehom(char_poly(g, ex6.weighting))) == 17);
    CHECK(brute_force_partition(g, ex6.weighting) == 17);
}

TEST_CASE("spectral formula matches enumeration for random weightings") {
    TorusGraph g = build_torus_graph(1);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(0, 5), den(1, 6);
    for (int rep = 0; rep < 10; ++rep) {
        EdgeWeighting w;
        for (const auto& l : edge_labels()) w[l] = Rational(num(rng), den(rng));
        Rational brute = brute_force_partition(g, w);
        LaurentPoly2 f = dehom(char_poly(g, w));
        CHECK(partition_function_exact(f) == brute);
        if (brute != 0)
            CHECK(partition_function(f, 1) ==
                  Catch::Approx(to_double(brute)).epsilon(1e-10));
    }
}

TEST_CASE("all-zero weighting has an empty partition sum") {
    TorusGraph g = build_torus_graph(1);
    EdgeWeighting zero = uniform_weighting(0);
    CHECK(brute_force_partition(g, zero) == 0);
    CHECK(partition_function_exact(dehom(char_poly(g, zero))) == 0);
}

TEST_CASE("sector values validate the cover size") {
    LaurentPoly2 f = LaurentPoly2::monomial(1, -1) + LaurentPoly2::monomial(0, 1) +
                     LaurentPoly2::monomial(-1, 0) - LaurentPoly2(Rational(3));
    for (int n : {1, 2, 3, 5}) CHECK_NOTHROW(sector_values(f, n));
    CHECK_THROWS_AS(sector_values(f, 0), std::invalid_argument);
}

TEST_CASE("free energy converges to the Mahler measure") {
    // dominant-constant regime: F = x/y + y + 1/x - 10
    LaurentPoly2 f = LaurentPoly2::monomial(1, -1) + LaurentPoly2::monomial(0, 1) +
                     LaurentPoly2::monomial(-1, 0) - LaurentPoly2(Rational(10));
    double m_ref = mahler_quadrature(f, 1024).value;
    double g2 = free_energy_gap(f, 2, m_ref);
    double g4 = free_energy_gap(f, 4, m_ref);
    double g8 = free_energy_gap(f, 8, m_ref);
    double g16 = free_energy_gap(f, 16, m_ref);
    CHECK(g4 < g2);
    CHECK(g8 < g4);
    CHECK(g8 < 1e-7);
    CHECK(g16 < 1e-11);
}

TEST_CASE("brute force refuses covers beyond the work bound") {
    TorusGraph g2 = build_torus_graph(2);
    CHECK_THROWS_WITH(brute_force_partition(g2, uniform_weighting()),
                      Catch::Matchers::ContainsSubstring("work bound"));
}
