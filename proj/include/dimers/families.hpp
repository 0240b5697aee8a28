#pragma once
// The three one-parameter families of homogeneous cubics that the example
// weightings produce, keyed by the torsion order 6, 3, 4 of the associated
// elliptic-curve family, together with the s(m) parameter maps.

#include "laurent.hpp"

namespace dimers {

// family 6: X^2Y+XY^2+X^2Z+XZ^2+Y^2Z+YZ^2 - s XYZ
// family 3: X^2Y+Y^2Z+Z^2X - s XYZ
// family 4: X^2Y+XY^2+XZ^2+YZ^2 - s XYZ
inline Cubic family_cubic(int family, const Rational& s) {
    Cubic h;
    if (family == 6) {
        for (auto k : {std::pair{2, 1}, {1, 2}, {2, 0}, {1, 0}, {0, 2}, {0, 1}}) h[k] = 1;
    } else if (family == 3) {
        for (auto k : {std::pair{2, 1}, {0, 2}, {1, 0}}) h[k] = 1;
    } else if (family == 4) {
        for (auto k : {std::pair{2, 1}, {1, 2}, {1, 0}, {0, 1}}) h[k] = 1;
    } else {
        throw std::invalid_argument("family must be 6, 3 or 4");
    }
    h[{1, 1}] = -s;
    return h;
}

// Centered Laurent form of the family cubic, the input both the torus
// partition formulas and the Mahler measure act on.
inline LaurentPoly2 family_poly(int family, const Rational& s) {
    return dehomogenize3(family_cubic(family, s));
}

inline Rational family_s_of_m(int family, const Rational& m) {
    if (m == 0) throw std::invalid_argument("parameter m must be nonzero");
    if (family == 6) return (4 + 3 * m + 3 * m * m + m * m * m) / m;
    if (family == 3) return (2 + m * m * m) / m;
    if (family == 4) return (2 + m * m + m * m * m) / m;
    throw std::invalid_argument("family must be 6, 3 or 4");
}

} // namespace dimers
