#pragma once

// JSON serialization for edge weightings and Laurent polynomials, plus small
// file helpers shared by the CLI. Formats:
//   weighting:  {"weights": {"Aa": "1", "Ba": "2/3", ...}}   (all 27 labels)
//   polynomial: {"terms": [{"a": -1, "b": 0, "c": "1"}, ...]}

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dimers/laurent.hpp"
#include "dimers/torus_graph.hpp"
#include "dimers/weighting.hpp"

namespace dimers {

inline nlohmann::json weighting_to_json(const EdgeWeighting& w) {
    w.validate();
    nlohmann::json obj;
    for (const auto& label : edge_labels())
        obj["weights"][label] = to_string(w.at(label));
    return obj;
}

inline EdgeWeighting weighting_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_object())
        throw std::invalid_argument("weighting JSON needs a \"weights\" object");
    EdgeWeighting w;
    for (const auto& [key, val] : j["weights"].items()) {
        if (!val.is_string())
            throw std::invalid_argument("weight of '" + key + "' must be a rational string");
        w.weights[key] = parse_rational(val.get<std::string>());
    }
    w.validate();
    return w;
}

inline nlohmann::json poly_to_json(const LaurentPoly2& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["a"] = e.first;
        t["b"] = e.second;
        t["c"] = to_string(c);
        terms.push_back(t);
    }
    nlohmann::json obj;
    obj["terms"] = terms;
    return obj;
}

inline LaurentPoly2 poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
    LaurentPoly2 p;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("a") || !t.contains("b") || !t.contains("c"))
            throw std::invalid_argument("each term needs integer \"a\", \"b\" and rational \"c\"");
        if (!t["a"].is_number_integer() || !t["b"].is_number_integer() || !t["c"].is_string())
            throw std::invalid_argument("each term needs integer \"a\", \"b\" and rational \"c\"");
        p.add_term(t["a"].get<int>(), t["b"].get<int>(),
                   parse_rational(t["c"].get<std::string>()));
    }
    return p;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << body;
}

}  // namespace dimers
