#pragma once
// Finite-torus partition functions from the characteristic polynomial: the
// n-fold lift P_n as a product over roots of unity, the four theta sectors
// Z_n^{(a,b)}, the matching-count partition function, and its per-cell
// free energy whose n -> infinity limit is the Mahler measure.

#include <cmath>
#include <numbers>
#include <complex>
#include <limits>
#include <stdexcept>

#include "laurent.hpp"
#include "torus_graph.hpp"
#include "weighting.hpp"

namespace dimers {

// P_n(x,y) = product of P(u,v) over the n-th roots u of x and v of y,
// each root set ordered as principal root times successive powers of
// exp(2*pi*i/n).
inline std::complex<double> pn_eval(const LaurentPoly2& p, int n, std::complex<double> x,
                                    std::complex<double> y) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (x == 0.0 || y == 0.0) throw std::invalid_argument("x and y must be nonzero");
    auto principal = [n](std::complex<double> z) {
        return std::polar(std::pow(std::abs(z), 1.0 / n), std::arg(z) / n);
    };
    std::complex<double> u0 = principal(x), v0 = principal(y);
    std::complex<double> prod = 1;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::complex<double> u = u0 * std::polar(1.0, 2 * std::numbers::pi * j / n);
            std::complex<double> v = v0 * std::polar(1.0, 2 * std::numbers::pi * k / n);
            prod *= p.eval(u, v);
        }
    return prod;
}

namespace detail {
struct LogComplex {
    double log_abs;               // -inf marks an exact zero
    std::complex<double> phase;   // unit modulus
};

// Same product as pn_eval but accumulated as log-magnitude plus phase, so
// n^2 factors cannot overflow.
inline LogComplex pn_log(const LaurentPoly2& p, int n, std::complex<double> x, std::complex<double> y) {
    auto principal = [n](std::complex<double> z) {
        return std::polar(std::pow(std::abs(z), 1.0 / n), std::arg(z) / n);
    };
    std::complex<double> u0 = principal(x), v0 = principal(y);
    LogComplex r{0.0, {1.0, 0.0}};
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::complex<double> u = u0 * std::polar(1.0, 2 * std::numbers::pi * j / n);
            std::complex<double> v = v0 * std::polar(1.0, 2 * std::numbers::pi * k / n);
            std::complex<double> f = p.eval(u, v);
            double a = std::abs(f);
            if (a == 0.0) return {-std::numeric_limits<double>::infinity(), {1.0, 0.0}};
            r.log_abs += std::log(a);
            r.phase *= f / a;
        }
    r.phase /= std::abs(r.phase);
    return r;
}
} // namespace detail

struct SectorEntry {
    double log_abs = 0; // -inf for an exact zero
    int sign = 1;       // 0 for an exact zero
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

struct SectorValues {
    int n = 1;
    SectorEntry entries[2][2]; // indexed by (a, b)
    double z(int a, int b) const { return entries[a][b].value(); }
};

// Z_n^{(a,b)} = P_n((-1)^a, (-1)^b). The products pair every factor with
// its complex conjugate, so the values are real; a residual imaginary
// phase beyond 1e-9 relative signals a bug and throws.
inline SectorValues sector_values(const LaurentPoly2& p, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    SectorValues s;
    s.n = n;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            detail::LogComplex lc = detail::pn_log(p, n, a ? -1.0 : 1.0, b ? -1.0 : 1.0);
            SectorEntry& e = s.entries[a][b];
            if (std::isinf(lc.log_abs)) {
                e.log_abs = lc.log_abs;
                e.sign = 0;
                continue;
            }
            if (std::abs(lc.phase.imag()) > 1e-9)
                throw std::runtime_error("theta sector value is not real (relative imaginary part " +
                                         std::to_string(std::abs(lc.phase.imag())) + ")");
            e.log_abs = lc.log_abs;
            e.sign = lc.phase.real() >= 0 ? 1 : -1;
        }
    return s;
}

struct PartitionValue {
    double log_z;      // log of the partition function
    int combo_sign;    // sign of the signed combination -Z00+Z01+Z10+Z11
    double value() const { return std::exp(log_z); }
};

// Z(n) = (1/2)|-Z_n^(0,0)+Z_n^(0,1)+Z_n^(1,0)+Z_n^(1,1)|, combined in
// log-space. The absolute value is deliberate: with the adjacency matrix
// taken with all-positive entries the signed combination comes out
// negative (e.g. -6 where the matching count is 6), so the magnitude is
// validated against brute-force enumeration instead of trusting the sign.
inline PartitionValue partition_function_full(const LaurentPoly2& p, int n) {
    SectorValues s = sector_values(p, n);
    double top = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if (s.entries[a][b].sign != 0) top = std::max(top, s.entries[a][b].log_abs);
    PartitionValue r{-std::numeric_limits<double>::infinity(), 0};
    if (std::isinf(top)) return r; // all four sectors vanish
    double combo = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const SectorEntry& e = s.entries[a][b];
            if (e.sign == 0) continue;
            double scaled = e.sign * std::exp(e.log_abs - top);
            combo += (a == 0 && b == 0) ? -scaled : scaled;
        }
    if (combo == 0) return r;
    r.combo_sign = combo > 0 ? 1 : -1;
    r.log_z = std::log(std::abs(combo) / 2) + top;
    return r;
}

inline double log_partition_function(const LaurentPoly2& p, int n) {
    return partition_function_full(p, n).log_z;
}

inline double partition_function(const LaurentPoly2& p, int n) {
    return partition_function_full(p, n).value();
}

// Exact n=1 evaluation: the four sector values are P(+-1, +-1), rational
// for rational coefficients, so the matching count comes out exact.
inline Rational partition_function_exact(const LaurentPoly2& p) {
    Rational z00 = p.eval_exact(1, 1), z01 = p.eval_exact(1, -1);
    Rational z10 = p.eval_exact(-1, 1), z11 = p.eval_exact(-1, -1);
    Rational combo = -z00 + z01 + z10 + z11;
    if (combo < 0) combo = -combo;
    return combo / 2;
}

// Weighted matching count by direct enumeration, the oracle the torus
// formulas are validated against.
inline Rational brute_force_partition(const TorusGraph& g, const EdgeWeighting& w,
                                      EnumerationOptions opts = {}) {
    Rational total = 0;
    for (const Matching& m : enumerate_matchings(g, opts)) {
        Rational prod = 1;
        for (int id : m) prod *= w.at(edge_label(g.edges[static_cast<size_t>(id)].base));
        total += prod;
    }
    return total;
}

// |(1/n^2) log Z(n) - m_ref|: the free energy per fundamental domain minus
// the target Mahler measure.
inline double free_energy_gap(const LaurentPoly2& p, int n, double m_ref) {
    double lz = log_partition_function(p, n);
    if (!std::isfinite(lz)) throw std::domain_error("partition function is not positive");
    return std::abs(lz / (double(n) * double(n)) - m_ref);
}

} // namespace dimers
