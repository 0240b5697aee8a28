#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "dimers/families.hpp"
#include "dimers/json_io.hpp"
#include "dimers/weighting.hpp"

using namespace dimers;

TEST_CASE("weighting round-trips through json") {
    EdgeWeighting w = example_weighting(6, Rational(2, 3), Rational(5)).weighting;
    nlohmann::json j = weighting_to_json(w);
    REQUIRE(j.contains("weights"));
    CHECK(j["weights"].size() == 27);
    CHECK(j["weights"]["Hb"] == "2/3");
    EdgeWeighting back = weighting_from_json(j);
    CHECK(back.weights == w.weights);
}

TEST_CASE("weighting json validation") {
    nlohmann::json j;
    CHECK_THROWS_AS(weighting_from_json(j), std::invalid_argument);

    j["weights"] = nlohmann::json::object();
    CHECK_THROWS_AS(weighting_from_json(j), std::invalid_argument);

    // all 27 keys but one misspelled
    nlohmann::json good = weighting_to_json(uniform_weighting());
    nlohmann::json bad = good;
    bad["weights"].erase("Aa");
    bad["weights"]["Zz"] = "1";
    CHECK_THROWS_AS(weighting_from_json(bad), std::invalid_argument);

    // numeric weight instead of a rational string
    bad = good;
    bad["weights"]["Aa"] = 1;
    CHECK_THROWS_AS(weighting_from_json(bad), std::invalid_argument);

    bad = good;
    bad["weights"]["Aa"] = "1/0";
    CHECK_THROWS_AS(weighting_from_json(bad), std::invalid_argument);
}

TEST_CASE("polynomial round-trips through json") {
    LaurentPoly2 p = family_poly(4, Rational(7, 2));
    nlohmann::json j = poly_to_json(p);
    REQUIRE(j.contains("terms"));
    CHECK(j["terms"].is_array());
    CHECK(j["terms"].size() == p.terms().size());
    // terms come out sorted by (a, b)
    CHECK(j["terms"][0]["a"] == -1);
    LaurentPoly2 back = poly_from_json(j);
    CHECK(back == p);
}

TEST_CASE("polynomial json validation") {
    nlohmann::json j;
    CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument);

    j["terms"] = "nope";
    CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument);

    j["terms"] = nlohmann::json::array();
    CHECK(poly_from_json(j).is_zero());

    j["terms"].push_back({{"a", 1}, {"b", 0}});
    CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument); // missing coefficient

    j["terms"][0]["c"] = "x";
    CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument);

    j["terms"][0]["c"] = "3/4";
    CHECK(poly_from_json(j).coeff(1, 0) == Rational(3, 4));

    // repeated exponent pairs accumulate
    j["terms"].push_back({{"a", 1}, {"b", 0}, {"c", "1/4"}});
    CHECK(poly_from_json(j).coeff(1, 0) == 1);
}

TEST_CASE("file io errors name the offending path") {
    CHECK_THROWS_WITH(read_json_file("/nonexistent/weights.json"),
                      Catch::Matchers::ContainsSubstring("/nonexistent/weights.json"));

    std::string path = "bad_json_test_file.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_WITH(read_json_file(path), Catch::Matchers::ContainsSubstring(path));
    std::remove(path.c_str());
}

TEST_CASE("file write and read back") {
    std::string path = "roundtrip_test_file.json";
    nlohmann::json j = weighting_to_json(example_weighting(3, Rational(4), Rational(1)).weighting);
    write_text_file(path, j.dump(2));
    nlohmann::json back = read_json_file(path);
    CHECK(back == j);
    std::remove(path.c_str());
}
