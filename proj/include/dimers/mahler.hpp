#pragma once
// Logarithmic Mahler measure m(P) of a bivariate Laurent polynomial: the
// mean of log|P| over the unit torus. Two independent routes are provided
// and cross-checked: tensor-product trapezoid quadrature (spectrally
// accurate once the zero set avoids the torus) and a Jensen-formula
// reduction that integrates log of the leading coefficient plus the
// log-moduli of the y-roots outside the unit circle.

#include <cmath>
#include <numbers>
#include <complex>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"

namespace dimers {

struct MahlerEstimate {
    double value = 0;
    double error_indicator = 0; // |estimate - half-resolution estimate|
    int perturbed_nodes = 0;    // nodes nudged off near-zeros of P
};

namespace detail {
inline double quad_pass(const LaurentPoly2& p, int res, int& perturbed) {
    double sum = 0;
    for (int j = 0; j < res; ++j) {
        for (int k = 0; k < res; ++k) {
            double tj = 2 * std::numbers::pi * j / res, tk = 2 * std::numbers::pi * k / res;
            std::complex<double> v = p.eval(std::polar(1.0, tj), std::polar(1.0, tk));
            if (std::abs(v) < 1e-300) { // nudge off a zero hit by the grid
                ++perturbed;
                v = p.eval(std::polar(1.0, tj + std::numbers::pi / res), std::polar(1.0, tk + std::numbers::pi / res));
            }
            sum += std::log(std::abs(v));
        }
    }
    return sum / (double(res) * double(res));
}
} // namespace detail

inline MahlerEstimate mahler_quadrature(const LaurentPoly2& p, int resolution = 512) {
    if (p.is_zero()) throw std::invalid_argument("Mahler measure of the zero polynomial is undefined");
    if (resolution < 16) throw std::invalid_argument("resolution must be at least 16");
    MahlerEstimate e;
    e.value = detail::quad_pass(p, resolution, e.perturbed_nodes);
    double half = detail::quad_pass(p, resolution / 2, e.perturbed_nodes);
    e.error_indicator = std::abs(e.value - half);
    return e;
}

namespace detail {
// Aberth-Ehrlich roots of a complex polynomial given by coefficients
// c[0] + c[1] z + ... + c[d] z^d with c[d] != 0.
inline std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> c) {
    using C = std::complex<double>;
    size_t d = c.size() - 1;
    std::vector<C> roots;
    if (d == 0) return roots;
    double norm = 0;
    for (const C& a : c) norm += std::abs(a);
    // Cauchy-style inclusion radius
    double radius = 0;
    for (size_t i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[i] / c[d]));
    radius = 1 + radius;
    roots.resize(d);
    for (size_t k = 0; k < d; ++k)
        roots[k] = std::polar(radius * (0.5 + 0.5 * double(k + 1) / double(d)),
                              2 * std::numbers::pi * (double(k) + 0.37) / double(d));
    auto eval = [&](C z, C& pv, C& dv) {
        pv = c[d];
        dv = 0;
        for (size_t i = d; i-- > 0;) {
            dv = dv * z + pv;
            pv = pv * z + c[i];
        }
    };
    for (int iter = 0; iter < 200; ++iter) {
        double worst = 0;
        for (size_t k = 0; k < d; ++k) {
            C pv, dv;
            eval(roots[k], pv, dv);
            if (std::abs(pv) == 0) continue;
            C w = dv == C(0) ? C(0) : pv / dv;
            C s = 0;
            for (size_t j = 0; j < d; ++j)
                if (j != k) s += C(1) / (roots[k] - roots[j]);
            C denom = C(1) - w * s;
            C step = denom == C(0) ? w : w / denom;
            roots[k] -= step;
            worst = std::max(worst, std::abs(step) / (1 + std::abs(roots[k])));
        }
        if (worst < 1e-15) break;
    }
    // residual certification: every root must actually annihilate p
    for (size_t k = 0; k < d; ++k) {
        C pv, dv;
        eval(roots[k], pv, dv);
        for (int polish = 0; polish < 8 && std::abs(pv) > 1e-12 * norm && dv != C(0); ++polish) {
            roots[k] -= pv / dv;
            eval(roots[k], pv, dv);
        }
        if (std::abs(pv) > 1e-10 * norm) throw std::runtime_error("root residual certification failed");
    }
    return roots;
}
} // namespace detail

inline double mahler_jensen(const LaurentPoly2& p, int n_theta = 2048) {
    if (p.is_zero()) throw std::invalid_argument("Mahler measure of the zero polynomial is undefined");
    if (n_theta < 1) throw std::invalid_argument("n_theta must be positive");
    int blo = p.min_b(), bhi = p.max_b();
    size_t deg = static_cast<size_t>(bhi - blo);
    // coefficient functions of y^d as Laurent polynomials in x
    std::vector<LaurentPoly2> cf(deg + 1);
    for (const auto& [k, c] : p.terms()) cf[static_cast<size_t>(k.second - blo)].add_term(k.first, 0, c);
    double scale = 0;
    for (const auto& f : cf) scale = std::max(scale, f.max_abs_coeff());
    double sum = 0;
    for (int j = 0; j < n_theta; ++j) {
        std::complex<double> x = std::polar(1.0, 2 * std::numbers::pi * j / n_theta);
        std::vector<std::complex<double>> c(deg + 1);
        for (size_t dgr = 0; dgr <= deg; ++dgr) c[dgr] = cf[dgr].eval(x, 1.0);
        size_t top = deg;
        while (top > 0 && std::abs(c[top]) <= 1e-14 * scale) --top;
        c.resize(top + 1);
        size_t bot = 0;
        while (bot < top && std::abs(c[bot]) <= 1e-300) ++bot; // y=0 roots contribute nothing
        c.erase(c.begin(), c.begin() + static_cast<long>(bot));
        double node = std::log(std::abs(c.back()));
        for (const auto& r : detail::poly_roots(c)) {
            double ar = std::abs(r);
            if (ar > 1) node += std::log(ar);
        }
        sum += node;
    }
    return sum / n_theta;
}

// Both routes with the agreement gap, the cross-validation contract.
struct MahlerCrossCheck {
    double quadrature;
    double jensen;
    double gap;
    double quad_error_indicator;
};

inline MahlerCrossCheck mahler_cross_check(const LaurentPoly2& p, int resolution = 512, int n_theta = 2048) {
    MahlerCrossCheck c{};
    MahlerEstimate q = mahler_quadrature(p, resolution);
    c.quadrature = q.value;
    c.quad_error_indicator = q.error_indicator;
    c.jensen = mahler_jensen(p, n_theta);
    c.gap = std::abs(c.quadrature - c.jensen);
    return c;
}

} // namespace dimers
