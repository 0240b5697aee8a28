#pragma once

// Arithmetic probe of the spectral plane cubic: point counts over prime
// fields, Dirichlet coefficients of the associated L-series, evaluation of
// L'(0) through the functional equation, and continued-fraction detection of
// a rational ratio against the Mahler measure.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimers/families.hpp"
#include "dimers/laurent.hpp"
#include "dimers/rational.hpp"

namespace dimers {

// A projective plane cubic, keyed like Cubic: (i, j) -> coefficient of
// X^i Y^j Z^(3-i-j).
using PlaneCubic = Cubic;

inline PlaneCubic spectral_cubic(int family, const Rational& s) {
    return family_cubic(family, s);
}

namespace detail {

inline unsigned long long mod_pow(unsigned long long b, unsigned long long e,
                                  unsigned long long p) {
    unsigned long long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline unsigned long long mod_inv(unsigned long long a, unsigned long long p) {
    return mod_pow(a, p - 2, p);
}

inline std::vector<long long> sieve_primes(long long limit) {
    std::vector<long long> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
    for (long long i = 2; i <= limit; ++i) {
        if (comp[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (long long j = i * i; j <= limit; j += i)
            comp[static_cast<size_t>(j)] = true;
    }
    return primes;
}

// Primitive integer model of the cubic: clear denominators, divide out the
// coefficient gcd. The curve over Q is unchanged and every residue field
// sees a nonzero reduction.
inline std::map<std::pair<int, int>, BigInt> integral_cubic(const PlaneCubic& c) {
    if (c.empty()) throw std::invalid_argument("cubic has no terms");
    BigInt den = 1;
    for (const auto& [k, v] : c) {
        (void)k;
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    }
    std::map<std::pair<int, int>, BigInt> out;
    BigInt content = 0;
    for (const auto& [k, v] : c) {
        if (v == 0) continue;
        Rational scaled = v * Rational(den);
        BigInt n = boost::multiprecision::numerator(scaled);
        out[k] = n;
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(n));
    }
    if (out.empty()) throw std::invalid_argument("cubic has no nonzero terms");
    for (auto& [k, v] : out) {
        (void)k;
        v /= content;
    }
    return out;
}

// Reduction of a homogeneous form mod p, stored as coeff[i][j] of
// X^i Y^j Z^(degree-i-j) with i + j <= degree. The cubic itself has degree
// 3, its partial derivatives degree 2.
struct ModForm {
    long long p = 0;
    int degree = 3;
    unsigned long long c[4][4] = {};

    unsigned long long eval(unsigned long long x, unsigned long long y,
                            unsigned long long z) const {
        const auto pp = static_cast<unsigned long long>(p);
        unsigned long long zp[4] = {1, z % pp, z * z % pp, z * z % pp * z % pp};
        unsigned long long acc = 0;
        unsigned long long xi = 1;
        for (int i = 0; i <= degree; ++i) {
            unsigned long long yj = 1;
            for (int j = 0; i + j <= degree; ++j) {
                if (c[i][j])
                    acc = (acc + c[i][j] * xi % pp * yj % pp * zp[degree - i - j]) % pp;
                yj = yj * y % pp;
            }
            xi = xi * x % pp;
        }
        return acc;
    }
};

inline ModForm reduce_mod(const std::map<std::pair<int, int>, BigInt>& zc, long long p) {
    ModForm m;
    m.p = p;
    for (const auto& [k, v] : zc) {
        BigInt r = v % p;
        if (r < 0) r += p;
        m.c[k.first][k.second] = r.convert_to<unsigned long long>();
    }
    return m;
}

// X, Y and Z partial derivatives, each again stored on the (i, j) grid of
// the differentiated monomial.
struct ModGradient {
    ModForm fx, fy, fz;
};

inline ModGradient gradient_mod(const std::map<std::pair<int, int>, BigInt>& zc,
                                long long p) {
    ModGradient g;
    g.fx.p = g.fy.p = g.fz.p = p;
    g.fx.degree = g.fy.degree = g.fz.degree = 2;
    for (const auto& [k, v] : zc) {
        int i = k.first, j = k.second, kk = 3 - i - j;
        BigInt r = v % p;
        if (r < 0) r += p;
        auto u = r.convert_to<unsigned long long>();
        const auto pp = static_cast<unsigned long long>(p);
        if (i) g.fx.c[i - 1][j] = (g.fx.c[i - 1][j] + u * (i % pp)) % pp;
        if (j) g.fy.c[i][j - 1] = (g.fy.c[i][j - 1] + u * (j % pp)) % pp;
        if (kk) g.fz.c[i][j] = (g.fz.c[i][j] + u * (kk % pp)) % pp;
    }
    return g;
}

// Dense univariate polynomials over F_p, lowest degree first; the zero
// polynomial is the empty vector.
using ModPoly = std::vector<unsigned long long>;

inline void poly_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly poly_mod(ModPoly a, const ModPoly& b, unsigned long long p) {
    poly_trim(a);
    if (b.empty()) throw std::logic_error("polynomial division by zero");
    const unsigned long long lead_inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
        unsigned long long f = a.back() * lead_inv % p;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = (a[off + i] + p - f * b[i] % p) % p;
        poly_trim(a);
    }
    return a;
}

inline ModPoly poly_gcd(ModPoly a, ModPoly b, unsigned long long p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        ModPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        unsigned long long inv = mod_inv(a.back(), p);
        for (auto& v : a) v = v * inv % p;
    }
    return a;
}

inline ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& g,
                           unsigned long long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), g, p);
}

inline ModPoly poly_derivative(const ModPoly& a, unsigned long long p) {
    ModPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
    poly_trim(d);
    return d;
}

// Number of distinct roots in F_p. Degree <= 2 goes through the quadratic
// character table; degree 3 counts deg gcd(y^p - y, g), which ignores
// multiplicities because y^p - y is squarefree. Returns -1 for the zero
// polynomial (every y is a root).
inline int distinct_roots(ModPoly g, unsigned long long p,
                          const std::vector<signed char>& qr) {
    poly_trim(g);
    if (g.empty()) return -1;
    const int deg = static_cast<int>(g.size()) - 1;
    if (deg == 0) return 0;
    if (deg == 1) return 1;
    if (deg == 2) {
        unsigned long long a = g[2], b = g[1], c = g[0];
        unsigned long long disc = (b * b % p + p - 4 * a % p * c % p) % p;
        if (disc == 0) return 1;
        return qr[disc] > 0 ? 2 : 0;
    }
    // Monic reduction, then y^p mod g by binary powering.
    unsigned long long inv = mod_inv(g.back(), p);
    for (auto& v : g) v = v * inv % p;
    ModPoly r = {1};
    ModPoly base = {0, 1};
    unsigned long long e = p;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, g, p);
        base = poly_mulmod(base, base, g, p);
        e >>= 1;
    }
    // r - y
    if (r.size() < 2) r.resize(2, 0);
    r[1] = (r[1] + p - 1) % p;
    ModPoly h = poly_gcd(g, r, p);
    return h.empty() ? 0 : static_cast<int>(h.size()) - 1;
}

// Univariate restriction of a ModForm: fixing x (with z = 1) or the
// infinity line z = 0 parameterized by [1 : t : 0].
inline ModPoly restrict_affine_x(const ModForm& m, unsigned long long x0) {
    const auto p = static_cast<unsigned long long>(m.p);
    ModPoly g(4, 0);
    unsigned long long xi = 1;
    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; i + j <= 3; ++j)
            if (m.c[i][j]) g[j] = (g[j] + m.c[i][j] * xi) % p;
        xi = xi * x0 % p;
    }
    poly_trim(g);
    return g;
}

inline ModPoly restrict_infinity(const ModForm& m) {
    const auto p = static_cast<unsigned long long>(m.p);
    ModPoly g(4, 0);
    for (int j = 0; j <= 3; ++j)
        if (m.c[3 - j][j]) g[j] = (g[j] + m.c[3 - j][j]) % p;
    poly_trim(g);
    return g;
}

struct PrimeCount {
    long long count = 0;        // projective points on the curve
    long long singular = 0;     // F_p-rational singular points among them
    bool degenerate = false;    // a whole line lies on the reduction
};

// Exhaustive scan of P^2(F_p): [x : y : 1], [1 : t : 0], [0 : 1 : 0].
// Also counts rational singular points (common zero of all partials on the
// curve), which is what the smooth-locus convention at bad primes needs.
inline PrimeCount naive_prime_count(const ModForm& m, const ModGradient& gr) {
    const auto p = static_cast<unsigned long long>(m.p);
    PrimeCount out;
    auto visit = [&](unsigned long long x, unsigned long long y, unsigned long long z) {
        if (m.eval(x, y, z) != 0) return;
        ++out.count;
        if (gr.fx.eval(x, y, z) == 0 && gr.fy.eval(x, y, z) == 0 &&
            gr.fz.eval(x, y, z) == 0)
            ++out.singular;
    };
    for (unsigned long long x = 0; x < p; ++x)
        for (unsigned long long y = 0; y < p; ++y) visit(x, y, 1);
    for (unsigned long long t = 0; t < p; ++t) visit(1, t, 0);
    visit(0, 1, 0);
    return out;
}

// Fast path for p >= 50: count points column by column, then look for
// singular points. An irreducible cubic has at most one geometric singular
// point, which Galois then fixes, so scanning rational x-columns (plus the
// infinity line) finds it; reducible reductions that hide singular points at
// irrational coordinates are caught by the Hasse-bound check instead.
inline PrimeCount fast_prime_count(const ModForm& m, const ModGradient& gr) {
    const auto p = static_cast<unsigned long long>(m.p);
    PrimeCount out;
    std::vector<signed char> qr(p, -1);
    qr[0] = 0;
    for (unsigned long long t = 0; t < p; ++t) qr[t * t % p] = 1;

    for (unsigned long long x0 = 0; x0 < p; ++x0) {
        ModPoly g = restrict_affine_x(m, x0);
        int r = distinct_roots(g, p, qr);
        if (r < 0) {
            out.degenerate = true;
            return out;
        }
        out.count += r;
        // Singular y on this column: common root of G, dG/dy and dF/dX.
        ModPoly h = poly_gcd(g, poly_derivative(g, p), p);
        if (h.size() >= 2) {
            ModPoly h2 = poly_gcd(h, restrict_affine_x(gr.fx, x0), p);
            if (h2.size() >= 2) {
                int s = distinct_roots(h2, p, qr);
                if (s > 0) out.singular += s;
                // A nonconstant common factor certifies a singular point even
                // when its y-coordinate is irrational.
                if (s == 0) out.singular = -1;
            }
        }
    }

    ModPoly inf = restrict_infinity(m);
    int rinf = distinct_roots(inf, p, qr);
    if (rinf < 0) {
        out.degenerate = true;
        return out;
    }
    out.count += rinf;
    if (m.c[0][3] == 0) ++out.count;  // [0 : 1 : 0]
    for (unsigned long long t = 0; t < p; ++t) {
        if (m.eval(1, t, 0) == 0 && gr.fx.eval(1, t, 0) == 0 &&
            gr.fy.eval(1, t, 0) == 0 && gr.fz.eval(1, t, 0) == 0)
            ++out.singular;
    }
    if (m.c[0][3] == 0 && gr.fx.eval(0, 1, 0) == 0 && gr.fy.eval(0, 1, 0) == 0 &&
        gr.fz.eval(0, 1, 0) == 0)
        ++out.singular;
    return out;
}

}  // namespace detail

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Projective point count by brute iteration over the p^2 + p + 1 points of
// P^2(F_p), split into the charts [x:y:1], [1:t:0], [0:1:0].
inline long long count_points(const PlaneCubic& c, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("count_points requires a prime modulus");
    if (p >= 100000) throw std::invalid_argument("count_points is limited to p < 100000");
    auto zc = detail::integral_cubic(c);
    detail::ModForm m = detail::reduce_mod(zc, p);
    auto gr = detail::gradient_mod(zc, p);
    return detail::naive_prime_count(m, gr).count;
}

struct APEntry {
    long long count = 0;   // #points of the reduction over F_p
    long long ap = 0;      // p+1-count at good p, p-#smooth at bad p
    bool bad = false;      // singular reduction
    long long smooth = 0;  // #points on the smooth locus
};

struct APTable {
    PlaneCubic cubic;
    long long p_max = 0;
    std::map<long long, APEntry> entries;
};

inline APTable ap_table(const PlaneCubic& c, long long p_max) {
    if (p_max > 100000) throw std::invalid_argument("ap_table is limited to p_max <= 100000");
    APTable table;
    table.cubic = c;
    table.p_max = p_max;
    auto zc = detail::integral_cubic(c);
    for (long long p : detail::sieve_primes(p_max)) {
        detail::ModForm m = detail::reduce_mod(zc, p);
        auto gr = detail::gradient_mod(zc, p);
        detail::PrimeCount pc;
        bool bad = false;
        // A count outside the Hasse window certifies bad reduction even when
        // the singular locus is irrational and invisible to the point scans.
        auto hasse_violated = [p](long long count) {
            long long t = p + 1 - count;
            return t * t > 4 * p;
        };
        if (p < 50) {
            pc = detail::naive_prime_count(m, gr);
            bad = pc.singular != 0 || pc.degenerate || hasse_violated(pc.count);
        } else {
            pc = detail::fast_prime_count(m, gr);
            bad = pc.singular != 0 || pc.degenerate || hasse_violated(pc.count);
            if (bad) pc = detail::naive_prime_count(m, gr);
        }
        APEntry e;
        e.count = pc.count;
        e.bad = bad;
        e.smooth = pc.count - pc.singular;
        if (bad) {
            // smooth-locus convention: +1 split node, -1 nonsplit, 0 cusp.
            // Reducible or non-reduced fibres land outside that range; their
            // local factor is recorded as 0 (additive convention).
            long long t = p - e.smooth;
            e.ap = (t >= -1 && t <= 1) ? t : 0;
        } else {
            e.ap = p + 1 - e.count;
        }
        table.entries[p] = e;
    }
    return table;
}

// Multiplicative expansion a_1..a_n_max (returned 1-indexed in a vector of
// size n_max+1): a_{p^(k+1)} = a_p a_{p^k} - p a_{p^(k-1)} at good primes,
// a_{p^k} = a_p^k at bad ones.
inline std::vector<long long> dirichlet_coeffs(const APTable& t, int n_max) {
    if (n_max < 1) throw std::invalid_argument("dirichlet_coeffs needs n_max >= 1");
    std::vector<int> spf(static_cast<size_t>(n_max) + 1, 0);
    for (int i = 2; i <= n_max; ++i) {
        if (spf[i]) continue;
        for (int j = i; j <= n_max; j += i)
            if (!spf[j]) spf[j] = i;
    }
    std::vector<long long> a(static_cast<size_t>(n_max) + 1, 0);
    a[1] = 1;
    for (int n = 2; n <= n_max; ++n) {
        int p = spf[n];
        int pk = p, k = 1;
        int rest = n / p;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            ++k;
        }
        if (rest != 1) {
            a[n] = a[pk] * a[rest];
            continue;
        }
        auto it = t.entries.find(p);
        if (it == t.entries.end())
            throw std::runtime_error("coefficient table is missing prime " + std::to_string(p));
        const APEntry& e = it->second;
        if (k == 1) {
            a[n] = e.ap;
        } else if (e.bad) {
            a[n] = a[n / p] * e.ap;
        } else {
            a[n] = e.ap * a[n / p] - static_cast<long long>(p) * a[n / (p * p)];
        }
    }
    return a;
}

namespace detail {

inline double exp_integral_e1(double x) {
    if (x >= 745.0) return 0.0;
    return -std::expint(-x);
}

// Smoothed value of Lambda(2) = N/(4 pi^2) L(2) for the completed series
// Lambda(s) = (sqrt(N)/2pi)^s Gamma(s) L(s) with sign eps in
// Lambda(s) = eps Lambda(2-s). Splitting the Mellin integral at t0 gives
//   Lambda(2) = sum_n a_n [ e^{-c_n t0}(t0/c_n + 1/c_n^2) + eps E1(c_n/t0) ],
// c_n = 2 pi n / sqrt(N). The value is t0-independent exactly when (N, eps)
// match the functional equation, which is what the conductor search probes.
inline double lambda_two(const std::vector<long long>& a, double N, int eps,
                         int cutoff, double t0) {
    const double root_n = std::sqrt(N);
    double acc = 0.0;
    for (int n = 1; n <= cutoff; ++n) {
        if (a[static_cast<size_t>(n)] == 0) continue;
        const double c = 2.0 * std::numbers::pi * n / root_n;
        double term = std::exp(-c * t0) * (t0 / c + 1.0 / (c * c));
        term += eps * exp_integral_e1(c / t0);
        acc += static_cast<double>(a[static_cast<size_t>(n)]) * term;
    }
    return acc;
}

constexpr double kT0Grid[4] = {0.5, 0.8, 1.0, 1.25};
constexpr double kConsistencyThreshold = 1e-9;

struct GridEval {
    double value = 0.0;         // Lambda(2) at t0 = 1
    double inconsistency = 0.0; // spread across the t0 grid, relative
};

inline GridEval lambda_two_grid(const std::vector<long long>& a, long long N,
                                int eps, int cutoff) {
    GridEval g;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (double t0 : kT0Grid) {
        double v = lambda_two(a, static_cast<double>(N), eps, cutoff, t0);
        if (t0 == 1.0) g.value = v;
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    g.inconsistency = (hi - lo) / std::max(1.0, std::abs(g.value));
    return g;
}

}  // namespace detail

// L'(0) = eps * Lambda(2), evaluated with the smoothed sum. Throws when the
// value fails to be t0-stable, which signals a wrong conductor or sign.
inline double l_prime_zero(const std::vector<long long>& a, long long N, int eps,
                           int cutoff) {
    if (N < 1) throw std::invalid_argument("conductor must be positive");
    if (eps != 1 && eps != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (cutoff < 1 || cutoff >= static_cast<int>(a.size()))
        throw std::invalid_argument("cutoff exceeds the available coefficients");
    if (static_cast<double>(cutoff) < 10.0 * std::sqrt(static_cast<double>(N)))
        throw std::invalid_argument("cutoff below 10*sqrt(N): too few coefficients");
    auto g = detail::lambda_two_grid(a, N, eps, cutoff);
    if (g.inconsistency > 1e-6)
        throw std::runtime_error(
            "functional equation is inconsistent at this conductor/sign (spread " +
            std::to_string(g.inconsistency) + ")");
    return eps * g.value;
}

struct ConductorDiagnostic {
    long long N = 0;
    int eps = 0;
    double inconsistency = 0.0;
    double value = 0.0;
};

struct ConductorSearchResult {
    long long N = 0;
    int eps = 0;
    std::vector<ConductorDiagnostic> diagnostics;
};

namespace detail {

// Default candidate conductors: products of the table's bad primes with
// capped exponents (8 at 2, 5 at 3, 2 elsewhere), bounded by 10^6.
inline std::vector<long long> default_conductor_candidates(const APTable& t) {
    std::vector<long long> bad;
    for (const auto& [p, e] : t.entries)
        if (e.bad) bad.push_back(p);
    std::vector<long long> out = {1};
    for (long long p : bad) {
        int cap = p == 2 ? 8 : (p == 3 ? 5 : 2);
        std::vector<long long> next;
        for (long long base : out) {
            long long v = base;
            for (int e = 0; e <= cap; ++e) {
                if (v > 1000000) break;
                next.push_back(v);
                v *= p;
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// Grid search over candidate conductors and both signs; accepts the smallest
// N whose smoothed Lambda(2) is t0-independent, breaking ties by the smaller
// spread. Throws when nothing is consistent, rather than guessing.
inline ConductorSearchResult conductor_sign_search(const APTable& t,
                                                   std::vector<long long> candidates = {}) {
    if (candidates.empty()) candidates = detail::default_conductor_candidates(t);
    if (candidates.empty()) throw std::invalid_argument("empty candidate set");
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    int n_avail = 0;
    {
        long long consecutive = t.p_max;
        n_avail = static_cast<int>(std::min<long long>(consecutive, 100000));
    }
    std::vector<long long> a = dirichlet_coeffs(t, n_avail);

    ConductorSearchResult res;
    bool found = false;
    double best_inc = 0.0;
    for (long long N : candidates) {
        if (N < 1) continue;
        int cutoff = std::min(n_avail, std::max(200, static_cast<int>(
                                  std::ceil(12.0 * std::sqrt(static_cast<double>(N))))));
        if (static_cast<double>(cutoff) < 10.0 * std::sqrt(static_cast<double>(N)))
            continue;  // not enough coefficients to judge this candidate
        for (int eps : {+1, -1}) {
            auto g = detail::lambda_two_grid(a, N, eps, cutoff);
            res.diagnostics.push_back({N, eps, g.inconsistency, g.value});
            if (g.inconsistency >= detail::kConsistencyThreshold) continue;
            if (!found || N < res.N || (N == res.N && g.inconsistency < best_inc)) {
                found = true;
                res.N = N;
                res.eps = eps;
                best_inc = g.inconsistency;
            }
        }
    }
    if (!found)
        throw std::runtime_error(
            "no conductor/sign candidate is consistent with the functional equation");
    return res;
}

// Best continued-fraction convergent p/q with q <= max_den, accepted when
// |x - p/q| < 1e-4 * max(1, |x|).
inline std::optional<Rational> detect_rational(double x, long long max_den) {
    if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::floor(x));
    long long q_cur = 1;
    double frac = x - std::floor(x);
    long long best_p = p_cur, best_q = 1;
    double best_err = std::abs(x - static_cast<double>(p_cur));
    for (int iter = 0; iter < 64 && q_cur <= max_den; ++iter) {
        double err = std::abs(x - static_cast<double>(p_cur) / static_cast<double>(q_cur));
        if (err < best_err) {
            best_err = err;
            best_p = p_cur;
            best_q = q_cur;
        }
        if (frac < 1e-15) break;
        double inv = 1.0 / frac;
        auto digit = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        long long p_next = digit * p_cur + p_prev;
        long long q_next = digit * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    if (best_err < 1e-4 * std::max(1.0, std::abs(x)))
        return Rational(BigInt(best_p), BigInt(best_q));
    return std::nullopt;
}

}  // namespace dimers
