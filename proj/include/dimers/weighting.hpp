#pragma once
// Edge weightings of the fundamental domain (invariant under the torus
// translations, so one rational per edge class) and the operations that
// leave or predictably change the characteristic polynomial: gauge moves
// at a vertex and global rescaling.

#include <map>
#include <stdexcept>
#include <string>

#include "rational.hpp"
#include "torus_graph.hpp"

namespace dimers {

struct EdgeWeighting {
    // keyed by edge label Aa..Ii; must contain all 27 classes
    std::map<std::string, Rational> weights;

    const Rational& at(const std::string& label) const {
        auto it = weights.find(label);
        if (it == weights.end()) throw std::invalid_argument("weighting has no edge '" + label + "'");
        return it->second;
    }
    Rational& operator[](const std::string& label) { return weights[label]; }

    void validate() const {
        if (weights.size() != 27) throw std::invalid_argument("weighting must assign all 27 edge classes");
        for (const auto& l : edge_labels())
            if (!weights.count(l)) throw std::invalid_argument("weighting missing edge '" + l + "'");
    }
    bool has_negative() const {
        for (const auto& [l, w] : weights)
            if (w < 0) return true;
        return false;
    }
};

inline EdgeWeighting uniform_weighting(const Rational& value = 1) {
    EdgeWeighting w;
    for (const auto& l : edge_labels()) w.weights[l] = value;
    return w;
}

// Weight of a matching times x^a y^b, reported as (coefficient, a, b).
struct MatchingMonomial {
    Rational coeff;
    int a = 0;
    int b = 0;
};

inline MatchingMonomial matching_monomial(const TorusGraph& g, const Matching& m, const EdgeWeighting& w) {
    MatchingMonomial out;
    out.coeff = 1;
    for (int id : m) {
        const TorusEdge& e = g.edges[static_cast<size_t>(id)];
        out.coeff *= w.at(edge_label(e.base));
        if (e.crossing == Crossing::x) ++out.a;
        else if (e.crossing == Crossing::y) ++out.b;
    }
    return out;
}

// Multiply the three edges at one vertex by k (vertex label A..I or a..i).
// Every matching uses exactly one such edge, so the characteristic
// polynomial just picks up the factor k.
inline EdgeWeighting gauge_transform(const EdgeWeighting& w, const std::string& vertex, const Rational& k) {
    if (k == 0) throw std::invalid_argument("gauge factor must be nonzero");
    if (vertex.size() != 1 || !((vertex[0] >= 'A' && vertex[0] <= 'I') || (vertex[0] >= 'a' && vertex[0] <= 'i')))
        throw std::invalid_argument("vertex must be one of A..I or a..i");
    EdgeWeighting out = w;
    for (const auto& l : edge_labels())
        if (l[0] == vertex[0] || l[1] == vertex[0]) out[l] = w.at(l) * k;
    return out;
}

inline EdgeWeighting scale_all(const EdgeWeighting& w, const Rational& c) {
    if (c <= 0) throw std::invalid_argument("scale factor must be positive");
    EdgeWeighting out;
    for (const auto& [l, v] : w.weights) out.weights[l] = v * c;
    return out;
}

// The three two-parameter model weightings built from {0, 1, m, w}. Each
// forces a few edges (weight 0), pins a few to 1 or m, and fills the rest
// with w; the characteristic polynomial then lands on the corresponding
// one-parameter cubic family, with the parameter value s reported alongside.
struct ExampleWeighting {
    EdgeWeighting weighting;
    int family = 6;  // 6, 3 or 4: which cubic family the weighting hits
    Rational m = 1;
    Rational w = 1;
    Rational s;      // predicted coefficient of -XYZ after dividing out m*w^6
};

inline ExampleWeighting example_weighting(int family, const Rational& m, const Rational& w = 1) {
    if (m == 0) throw std::invalid_argument("parameter m must be nonzero (s is undefined)");
    if (w == 0) throw std::invalid_argument("parameter w must be nonzero");
    ExampleWeighting ex;
    ex.family = family;
    ex.m = m;
    ex.w = w;
    auto& W = ex.weighting;
    W = uniform_weighting(w);
    if (family == 6) {
        W["Hg"] = W["Dd"] = W["Eh"] = 0;
        W["Hb"] = W["Ee"] = W["Df"] = m;
        W["Ii"] = W["Ic"] = W["Gi"] = W["Aa"] = W["Ac"] = W["Ga"] = 1;
        ex.s = (4 + 3 * m + 3 * m * m + m * m * m) / m;
    } else if (family == 3) {
        W["Hg"] = W["Dd"] = W["Eh"] = W["Be"] = W["Cb"] = W["Ff"] = 0;
        W["Hb"] = W["Ee"] = W["Df"] = m;
        W["Ii"] = W["Ic"] = W["Gi"] = W["Aa"] = W["Ac"] = W["Ga"] = 1;
        ex.s = (2 + m * m * m) / m;
    } else if (family == 4) {
        W["Aa"] = W["Bb"] = W["Cf"] = W["Gi"] = W["Fe"] = 0;
        W["Cb"] = W["Ff"] = W["Be"] = 1;
        W["Cc"] = W["Fi"] = W["Ba"] = m;
        ex.s = (2 + m * m + m * m * m) / m;
    } else {
        throw std::invalid_argument("family must be 6, 3 or 4");
    }
    return ex;
}

} // namespace dimers
