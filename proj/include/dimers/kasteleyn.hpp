#pragma once
// The weighted adjacency operator of the torus graph and its determinant,
// the characteristic polynomial P(x,y). Rows are white vertices, columns
// black; the entry for an edge is its weight times x or y when the edge
// crosses the fundamental-parallelogram boundary. The determinant is taken
// exactly over the rational Laurent ring, with the sign anchored so that
// the all-diagonal matching Aa..Ii contributes +(product of weights), the
// +Z^3 term of the homogeneous form.

#include <array>
#include <vector>

#include "laurent.hpp"
#include "torus_graph.hpp"
#include "weighting.hpp"

namespace dimers {

using KasteleynMatrix = std::vector<std::vector<LaurentPoly2>>;

inline KasteleynMatrix kasteleyn_matrix(const TorusGraph& g, const EdgeWeighting& w) {
    w.validate();
    size_t N = static_cast<size_t>(g.num_white());
    KasteleynMatrix m(N, std::vector<LaurentPoly2>(N));
    for (const TorusEdge& e : g.edges) {
        int a = e.crossing == Crossing::x ? 1 : 0;
        int b = e.crossing == Crossing::y ? 1 : 0;
        m[static_cast<size_t>(e.white)][static_cast<size_t>(e.black)] =
            LaurentPoly2::monomial(a, b, w.at(edge_label(e.base)));
    }
    return m;
}

namespace detail {
// Exact quotient of Laurent polynomials; the divisions performed by the
// fraction-free elimination below are guaranteed to come out even.
inline LaurentPoly2 divide_exact(LaurentPoly2 num, const LaurentPoly2& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& lead = *den.terms().rbegin(); // lex-largest term
    LaurentPoly2 q;
    size_t steps = 0;
    while (!num.is_zero()) {
        const auto& top = *num.terms().rbegin();
        int da = top.first.first - lead.first.first;
        int db = top.first.second - lead.first.second;
        Rational qc = top.second / lead.second;
        q.add_term(da, db, qc);
        num -= den * LaurentPoly2::monomial(da, db, qc);
        if (++steps > 2000000) throw std::runtime_error("polynomial division does not terminate");
    }
    return q;
}

// Bareiss fraction-free determinant with row pivoting.
inline LaurentPoly2 det_fraction_free(KasteleynMatrix m) {
    size_t N = m.size();
    if (N == 0) return LaurentPoly2(Rational(1));
    int sign = 1;
    LaurentPoly2 prev(Rational(1));
    for (size_t k = 0; k + 1 < N; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < N && m[r][k].is_zero()) ++r;
            if (r == N) return LaurentPoly2(); // zero column: singular
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < N; ++i) {
            for (size_t j = k + 1; j < N; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly2();
        }
        prev = m[k][k];
    }
    return sign == 1 ? m[N - 1][N - 1] : -m[N - 1][N - 1];
}
} // namespace detail

// Exact characteristic polynomial P(x,y) = det of the weighted adjacency
// operator. The zero polynomial is a legal return (every matching blocked
// by weight-0 edges).
inline LaurentPoly2 char_poly(const TorusGraph& g, const EdgeWeighting& w) {
    return detail::det_fraction_free(kasteleyn_matrix(g, w));
}

// One term of the fully symbolic n=1 determinant: a matching read as a
// product of 9 edge symbols with the permutation sign and the (a,b)
// crossing exponents.
struct SymTerm {
    int sign;
    std::array<int, 9> bases; // edge class indices, ascending
    int a;
    int b;
};

struct SymCharPoly {
    std::vector<SymTerm> terms;
};

inline const SymCharPoly& symbolic_char_poly() {
    static const SymCharPoly sym = [] {
        SymCharPoly s;
        TorusGraph g = build_torus_graph(1);
        for (const Matching& m : enumerate_matchings(g)) {
            SymTerm t{};
            t.sign = matching_sign(g, m);
            for (size_t i = 0; i < 9; ++i) t.bases[i] = m[i];
            auto [a, b] = matching_exponents(g, m);
            t.a = a;
            t.b = b;
            s.terms.push_back(t);
        }
        return s;
    }();
    return sym;
}

inline LaurentPoly2 specialize(const SymCharPoly& sym, const EdgeWeighting& w) {
    LaurentPoly2 p;
    for (const SymTerm& t : sym.terms) {
        Rational c = t.sign;
        for (int base : t.bases) c *= w.at(edge_label(base));
        p.add_term(t.a, t.b, c);
    }
    return p;
}

// The n=1 characteristic polynomial as a homogeneous cubic: x^a y^b becomes
// X^a Y^b Z^(3-a-b).
inline Cubic charpoly_cubic(const LaurentPoly2& p) {
    Cubic h;
    for (const auto& [k, c] : p.terms()) {
        if (k.first < 0 || k.second < 0 || k.first + k.second > 3)
            throw std::domain_error("not an n=1 characteristic polynomial");
        h[{k.first, k.second}] = c;
    }
    return h;
}

} // namespace dimers
