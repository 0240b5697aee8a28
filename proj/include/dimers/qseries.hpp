#pragma once
// Exact truncated q-series on the exponent grid (1/24)Z: eta quotients, the
// weight-counting products Q6/Q3/Q4 and their Eisenstein logarithmic
// derivatives, the plane-partition counting series, the modular parameter maps t(q), the
// numeric inversion s -> q0, and the Mahler-measure/product cross-check.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "families.hpp"
#include "laurent.hpp"
#include "mahler.hpp"
#include "rational.hpp"

namespace dimers {

// Series q^(off/24) * sum c_k q^(k*step/24), exact up to (not including)
// exponent bound/24. Constants carry an effectively infinite bound.
class QSeries {
  public:
    static constexpr long kInfBound = 1L << 40;

    QSeries() = default;
    explicit QSeries(Rational c) {
        if (c != 0) coeffs_ = {std::move(c)};
        bound24_ = kInfBound;
    }
    static QSeries make(long off24, long step24, std::vector<Rational> coeffs, long bound24) {
        QSeries s;
        s.off24_ = off24;
        s.step24_ = step24;
        s.coeffs_ = std::move(coeffs);
        s.bound24_ = bound24;
        s.normalize();
        return s;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long off24() const { return off24_; }
    long step24() const { return step24_; }
    long bound24() const { return bound24_; }
    size_t size() const { return coeffs_.size(); }
    Rational leading_exponent() const { return Rational(off24_, 24); }
    Rational step() const { return Rational(step24_, 24); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // coefficient at exponent e/24; demanding a coefficient at or beyond the
    // truncation bound is a caller bug
    Rational coeff24(long e24) const {
        if (e24 >= bound24_) throw std::out_of_range("coefficient beyond series truncation");
        if (e24 < off24_ || (e24 - off24_) % step24_ != 0) return 0;
        size_t k = static_cast<size_t>((e24 - off24_) / step24_);
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    Rational coeff_q(long e) const { return coeff24(24 * e); }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        if (a.is_zero()) return b.truncated(std::min(a.bound24_, b.bound24_));
        if (b.is_zero()) return a.truncated(std::min(a.bound24_, b.bound24_));
        long off = std::min(a.off24_, b.off24_);
        long g = std::gcd(std::gcd(a.step24_, b.step24_), std::abs(a.off24_ - b.off24_));
        if (g == 0) g = a.step24_;
        long bound = std::min(a.bound24_, b.bound24_);
        if (bound <= off) return QSeries::make(0, 24, {}, bound);
        size_t len = static_cast<size_t>((std::min(bound, off + kInfBound) - off + g - 1) / g);
        len = std::min(len, kMaxLen);
        std::vector<Rational> c(len);
        auto acc = [&](const QSeries& s) {
            for (size_t k = 0; k < s.coeffs_.size(); ++k) {
                long e = s.off24_ + static_cast<long>(k) * s.step24_;
                size_t idx = static_cast<size_t>((e - off) / g);
                if (idx < len) c[idx] += s.coeffs_[k];
            }
        };
        acc(a);
        acc(b);
        return QSeries::make(off, g, std::move(c), bound);
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (b * Rational(-1)); }
    QSeries operator*(const Rational& r) const {
        if (r == 0) return QSeries::make(0, 24, {}, bound24_);
        QSeries s = *this;
        for (Rational& c : s.coeffs_) c *= r;
        return s;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long bound = std::min({kInfBound, a.sat_add(a.bound24_, b.off24_), a.sat_add(b.bound24_, a.off24_)});
        if (a.is_zero() || b.is_zero()) return QSeries::make(0, 24, {}, bound);
        long off = a.off24_ + b.off24_;
        long g = std::gcd(a.step24_, b.step24_);
        size_t len = static_cast<size_t>((std::min(bound, off + kInfBound) - off + g - 1) / g);
        len = std::min(len, kMaxLen);
        std::vector<Rational> c(len);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            long ea = static_cast<long>(i) * a.step24_;
            if (ea >= static_cast<long>(len) * g) break;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                long e = ea + static_cast<long>(j) * b.step24_;
                if (e >= static_cast<long>(len) * g) break;
                if (b.coeffs_[j] == 0) continue;
                c[static_cast<size_t>(e / g)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return QSeries::make(off, g, std::move(c), bound);
    }

    // power-series inverse; requires a nonzero leading coefficient
    QSeries inverse() const {
        if (is_zero()) throw std::domain_error("cannot invert the zero series");
        long rel = bound24_ >= kInfBound ? kInfBound : bound24_ - off24_;
        size_t len = std::min(kMaxLen, static_cast<size_t>((rel + step24_ - 1) / step24_));
        std::vector<Rational> d(len);
        d[0] = Rational(1) / coeffs_[0];
        for (size_t k = 1; k < len; ++k) {
            Rational acc = 0;
            for (size_t j = 1; j <= k && j < coeffs_.size(); ++j) acc += coeffs_[j] * d[k - j];
            d[k] = -acc / coeffs_[0];
        }
        long bound = bound24_ >= kInfBound ? kInfBound : -off24_ + rel;
        return QSeries::make(-off24_, step24_, std::move(d), bound);
    }
    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

    QSeries pow_int(long e) const {
        if (e < 0) return inverse().pow_int(-e);
        QSeries r(Rational(1)), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    // A^alpha for A = q^(off/24) (1 + u); needs leading coefficient 1 and
    // alpha*off on the grid. Used for the cube root of the t^3 relation.
    QSeries rational_pow(const Rational& alpha) const {
        if (is_zero()) throw std::domain_error("rational power of the zero series");
        if (coeffs_[0] != 1) throw std::domain_error("rational power needs leading coefficient 1");
        Rational off_new = Rational(off24_) * alpha;
        if (denominator(off_new) != 1) throw std::domain_error("fractional leading exponent leaves the grid");
        QSeries u = *this;
        u.off24_ = 0;
        u.bound24_ = bound24_ >= kInfBound ? kInfBound : bound24_ - off24_;
        u.coeffs_[0] = 0;
        u.normalize();
        QSeries sum(Rational(1)), upow(Rational(1));
        sum.bound24_ = u.bound24_;
        Rational binom = 1;
        size_t terms = u.is_zero() ? 0 : static_cast<size_t>((u.bound24_ - u.off24_) / u.off24_ + 1);
        for (size_t k = 1; k <= terms; ++k) {
            binom *= (alpha - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
            if (binom == 0) break;
            upow = upow * u;
            if (upow.is_zero()) break;
            sum = sum + upow * binom;
        }
        sum.off24_ += numerator(off_new).convert_to<long>();
        sum.bound24_ = sat_add(sum.bound24_, numerator(off_new).convert_to<long>());
        sum.normalize();
        return sum;
    }

    // q d/dq: multiplies the q^e term by e
    QSeries qdq() const {
        QSeries s = *this;
        for (size_t k = 0; k < s.coeffs_.size(); ++k)
            s.coeffs_[k] *= Rational(off24_ + static_cast<long>(k) * step24_, 24);
        s.normalize();
        return s;
    }

    QSeries substitute_q_power(long a) const { // q -> q^a
        if (a < 1) throw std::invalid_argument("substitution power must be positive");
        QSeries s = *this;
        s.off24_ *= a;
        s.step24_ *= a;
        s.bound24_ = bound24_ >= kInfBound ? kInfBound : bound24_ * a;
        return s;
    }

    QSeries truncated(long bound24) const {
        QSeries s = *this;
        s.bound24_ = std::min(s.bound24_, bound24);
        s.normalize();
        return s;
    }

    double evalf(double q) const {
        double sum = 0;
        for (size_t k = 0; k < coeffs_.size(); ++k)
            sum += to_double(coeffs_[k]) *
                   std::pow(q, double(off24_ + static_cast<long>(k) * step24_) / 24.0);
        return sum;
    }

  private:
    static constexpr size_t kMaxLen = 200000;
    static long sat_add(long a, long b) {
        if (a >= kInfBound && b >= kInfBound) return kInfBound;
        return std::min(kInfBound, a + b);
    }
    void normalize() {
        if (step24_ <= 0) step24_ = 24;
        size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            off24_ = 0;
            step24_ = 24;
            return;
        }
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            off24_ += static_cast<long>(lead) * step24_;
        }
        if (bound24_ < kInfBound) {
            while (!coeffs_.empty() &&
                   off24_ + static_cast<long>(coeffs_.size() - 1) * step24_ >= bound24_)
                coeffs_.pop_back();
        }
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.empty()) {
            off24_ = 0;
            step24_ = 24;
        }
    }

    long off24_ = 0;
    long step24_ = 24;
    long bound24_ = kInfBound;
    std::vector<Rational> coeffs_;
};

inline int chi(int d, long n) {
    if (n < 0) throw std::invalid_argument("character argument must be nonnegative");
    if (d == -3) {
        static const int v[3] = {0, 1, -1};
        return v[n % 3];
    }
    if (d == -4) {
        static const int v[4] = {0, 1, 0, -1};
        return v[n % 4];
    }
    throw std::invalid_argument("character modulus must be -3 or -4");
}

namespace detail {
// (1 - q^n)^e truncated below exponent bound24, exact for any integer e
inline QSeries one_minus_qn_pow(long n, long e, long bound24) {
    std::vector<Rational> c;
    Rational binom = 1;
    for (long k = 0; 24 * n * k < bound24; ++k) {
        if (k > 0) {
            binom *= Rational(e - (k - 1)) / Rational(k);
            if (binom == 0) break;
        }
        c.resize(static_cast<size_t>(k) + 1);
        c[static_cast<size_t>(k)] = (k % 2 == 0) ? binom : -binom;
    }
    return QSeries::make(0, 24 * n, std::move(c), bound24);
}
} // namespace detail

// eta(q^a) = q^(a/24) prod (1 - q^(a n)), truncated below q^order
inline QSeries eta(long a, long order) {
    if (a < 1 || order < 1) throw std::invalid_argument("eta needs positive scale and order");
    long bound24 = 24 * order;
    QSeries p(Rational(1));
    for (long n = 1; a * n * 24 < bound24; ++n)
        p = p * detail::one_minus_qn_pow(a * n, 1, bound24);
    return QSeries::make(a, 24, {1}, QSeries::kInfBound) * p;
}

inline QSeries eta_quotient(const std::vector<std::pair<long, long>>& spec, long order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    QSeries r(Rational(1));
    long neg24 = 0; // negative eta powers shift the pole; widen the working bound
    for (auto [a, e] : spec)
        if (e < 0) neg24 -= a * e;
    for (auto [a, e] : spec) r = r * eta(a, order + neg24 / 24 + 2).pow_int(e);
    return r.truncated(24 * order);
}

// Q_f = q prod (1-q^n)^(E_f(n)) with E as printed: family 6 has
// (-1)^(n-1) n chi_-3(n), family 3 has 9 n chi_-3(n), family 4 has
// 4 n chi_-4(n).
inline long q_product_exponent(int family, long n) {
    if (family == 6) return (n % 2 ? 1 : -1) * n * chi(-3, n);
    if (family == 3) return 9 * n * chi(-3, n);
    if (family == 4) return 4 * n * chi(-4, n);
    throw std::invalid_argument("family must be 6, 3 or 4");
}

inline QSeries q_product(int family, long order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    long bound24 = 24 * (order + 1);
    QSeries p = QSeries::make(24, 24, {1}, QSeries::kInfBound);
    for (long n = 1; n <= order; ++n) {
        long e = q_product_exponent(family, n);
        if (e) p = p * detail::one_minus_qn_pow(n, e, bound24);
    }
    return p.truncated(bound24);
}

// The displayed Lambert-type series: 1 + sum chi_-3(n) n^2 (-q)^n/(1-q^n)
// for family 6, 1 - 9 sum chi_-3(n) n^2 q^n/(1-q^n) for family 3,
// 1 - 4 sum chi_-4(n) n^2 q^n/(1-q^n) for family 4.
inline QSeries eisenstein(int family, long order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = 1;
    for (long n = 1; n <= order; ++n) {
        Rational term;
        if (family == 6) term = Rational(chi(-3, n)) * n * n * (n % 2 ? -1 : 1);
        else if (family == 3) term = Rational(-9) * chi(-3, n) * n * n;
        else if (family == 4) term = Rational(-4) * chi(-4, n) * n * n;
        else throw std::invalid_argument("family must be 6, 3 or 4");
        if (term == 0) continue;
        for (long m = n; m <= order; m += n) c[static_cast<size_t>(m)] += term;
    }
    return QSeries::make(0, 24, std::move(c), 24 * (order + 1));
}

// M(q) = prod (1-q^n)^(-n); coefficients count plane partitions
inline QSeries plane_partition_series(long order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    long bound24 = 24 * (order + 1);
    QSeries p(Rational(1));
    for (long n = 1; n <= order; ++n) p = p * detail::one_minus_qn_pow(n, -n, bound24);
    return p.truncated(bound24);
}

// The modular parameter maps: family 6 and 4 are eta quotients as printed,
// family 3 is the cube root of 27 + eta(q)^12/eta(q^3)^12 on the branch
// with positive real leading coefficient (t ~ q^(-1/3)).
inline QSeries t_of_q(int family, long order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (family == 6) return eta_quotient({{2, 3}, {3, 9}, {1, -3}, {6, -9}}, order);
    if (family == 4) return eta_quotient({{2, 12}, {1, -4}, {4, -8}}, order);
    if (family == 3) {
        QSeries t3 = QSeries(Rational(27)) + eta_quotient({{1, 12}, {3, -12}}, order);
        return t3.rational_pow(Rational(1, 3));
    }
    throw std::invalid_argument("family must be 6, 3 or 4");
}

// Map s to the series target: the dictionary is t-2 = s for family 6 and
// t = s for families 3 and 4.
inline double t_target_of_s(int family, double s) {
    return family == 6 ? s + 2 : s;
}

namespace detail {
inline double bisect_t(const QSeries& t, double target, double lo, double hi) {
    double flo = t.evalf(lo) - target, fhi = t.evalf(hi) - target;
    if (!(flo > 0 && fhi < 0)) return -1; // t decreases in q on (0,1)
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = t.evalf(mid) - target;
        if (fm > 0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}
} // namespace detail

// Invert t(q) = t(s) numerically: bisection on the truncated series with
// the order doubled until two successive answers agree to 1e-12.
inline double solve_q(int family, double s, long order = 32) {
    double target = t_target_of_s(family, s);
    if (!(target > 0))
        throw std::domain_error("|s| too small (temperate regime): positive t target required");
    double prev = -1;
    for (long ord = std::max<long>(order, 8); ord <= 4096; ord *= 2) {
        QSeries t = t_of_q(family, ord);
        double q0 = detail::bisect_t(t, target, 1e-14, 0.5);
        if (q0 < 0)
            throw std::domain_error("|s| too small (temperate regime): no q in (0,1/2) reaches t");
        if (prev > 0 && std::abs(q0 - prev) < 1e-12) {
            if (std::abs(t.evalf(q0) - target) > 1e-12 * std::max(1.0, std::abs(target)))
                throw std::domain_error("series inversion did not reach the residual target");
            return q0;
        }
        prev = q0;
    }
    throw std::domain_error("|s| too small (temperate regime): series inversion did not stabilize");
}

// Both sides of the Mahler-measure/product identity: m(P_family(s)) against
// -e log Q_family(q0), e = 1, 1/3, 1/2. For family 4 the rejected q -> q^2
// normalization is evaluated as well so callers can confirm that exactly
// one variant validates.
struct MahlerProductCheck {
    double m_poly = 0;
    double m_product = 0;
    double gap = 0;
    double q0 = 0;
    double alt_gap = -1; // family 4 only: the q -> q^2 variant
};

inline MahlerProductCheck verify_mahler_product(int family, double s, int resolution = 512) {
    MahlerProductCheck r;
    r.q0 = solve_q(family, s);
    LaurentPoly2 p = family_poly(family, Rational(s));
    r.m_poly = mahler_quadrature(p, resolution).value;
    double e = family == 6 ? 1.0 : family == 3 ? 1.0 / 3.0 : 0.5;
    long ord = 32;
    double qf = 0, prev_qf = -1;
    for (; ord <= 4096; ord *= 2) {
        qf = q_product(family, ord).evalf(r.q0);
        if (prev_qf > 0 && std::abs(qf - prev_qf) < 1e-14 * std::abs(qf)) break;
        prev_qf = qf;
    }
    r.m_product = -e * std::log(qf);
    r.gap = std::abs(r.m_poly - r.m_product);
    if (family == 4) {
        double qf2 = q_product(4, ord).evalf(r.q0 * r.q0);
        r.alt_gap = std::abs(r.m_poly - (-e * std::log(qf2)));
    }
    return r;
}

} // namespace dimers
