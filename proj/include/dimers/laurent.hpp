#pragma once
// Bivariate Laurent polynomials sum c_{ab} x^a y^b with exact rational
// coefficients: the characteristic polynomials P(x,y) live here, together
// with the homogeneous degree-3 forms they come from and the centered
// dehomogenization P(x,y) = (xy)^{-1} Ptilde(x,y,1).

#include "rational.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace dimers {

class LaurentPoly2 {
  public:
    using Key = std::pair<int, int>; // (a, b) exponents of x, y
    using Terms = std::map<Key, Rational>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(Rational c) {
        if (c != 0) terms_[{0, 0}] = std::move(c);
    }
    static LaurentPoly2 monomial(int a, int b, Rational c = Rational(1)) {
        LaurentPoly2 p;
        if (c != 0) p.terms_[{a, b}] = std::move(c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void set(int a, int b, Rational c) {
        if (c == 0) terms_.erase({a, b});
        else terms_[{a, b}] = std::move(c);
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    LaurentPoly2 operator*(const Rational& c) const {
        LaurentPoly2 r;
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }
    LaurentPoly2 operator-() const { return *this * Rational(-1); }
    bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

    void add_term(int a, int b, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace({a, b}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const {
        std::complex<double> r = 0;
        for (const auto& [k, c] : terms_) r += to_double(c) * ipow(x, k.first) * ipow(y, k.second);
        return r;
    }
    // Exact evaluation at rational points (x, y nonzero).
    Rational eval_exact(const Rational& x, const Rational& y) const {
        Rational r = 0;
        for (const auto& [k, c] : terms_) r += c * rpow(x, k.first) * rpow(y, k.second);
        return r;
    }

    LaurentPoly2 substitute_inverse() const { // P(1/x, 1/y)
        LaurentPoly2 r;
        for (const auto& [k, c] : terms_) r.terms_[{-k.first, -k.second}] = c;
        return r;
    }
    LaurentPoly2 scale_exponents(int sx, int sy) const { // P(x^sx, y^sy) for sx,sy >= 1
        LaurentPoly2 r;
        for (const auto& [k, c] : terms_) r.terms_[{k.first * sx, k.second * sy}] = c;
        return r;
    }
    LaurentPoly2 flip_signs(bool fx, bool fy) const { // P(+-x, +-y)
        LaurentPoly2 r;
        for (const auto& [k, c] : terms_) {
            bool neg = (fx && (k.first & 1)) ^ (fy && (k.second & 1));
            r.terms_[k] = neg ? -c : c;
        }
        return r;
    }

    int min_a() const { return minmax_exp(true, true); }
    int min_b() const { return minmax_exp(false, true); }
    int max_a() const { return minmax_exp(true, false); }
    int max_b() const { return minmax_exp(false, false); }

    double max_abs_coeff() const {
        double m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, std::abs(to_double(c)));
        return m;
    }

    static std::complex<double> ipow(std::complex<double> z, int e) {
        if (e < 0) return 1.0 / ipow(z, -e);
        std::complex<double> r = 1;
        while (e) {
            if (e & 1) r *= z;
            z *= z;
            e >>= 1;
        }
        return r;
    }
    static Rational rpow(Rational z, int e) {
        bool inv = e < 0;
        if (inv) e = -e;
        Rational r = 1;
        while (e) {
            if (e & 1) r *= z;
            z *= z;
            e >>= 1;
        }
        if (inv) {
            if (r == 0) throw std::domain_error("0 to a negative power");
            return Rational(1) / r;
        }
        return r;
    }

  private:
    int minmax_exp(bool first, bool want_min) const {
        if (terms_.empty()) return 0;
        int r = first ? terms_.begin()->first.first : terms_.begin()->first.second;
        for (const auto& [k, c] : terms_) {
            int v = first ? k.first : k.second;
            r = want_min ? std::min(r, v) : std::max(r, v);
        }
        return r;
    }
    Terms terms_;
};

// Homogeneous degree-3 form in X, Y, Z as exponent map (i, j) -> coeff of
// X^i Y^j Z^(3-i-j).
using Cubic = std::map<std::pair<int, int>, Rational>;

// Ptilde(X,Y,Z) = Z^3 P(X/Z, Y/Z); the input must have exponents in [0,3]
// with a + b <= 3 (true for every n=1 characteristic polynomial).
inline Cubic homogenize3(const LaurentPoly2& p) {
    Cubic h;
    for (const auto& [k, c] : p.terms()) {
        if (k.first < 0 || k.second < 0 || k.first + k.second > 3)
            throw std::domain_error("polynomial is not a dehomogenized cubic");
        h[{k.first, k.second}] = c;
    }
    return h;
}

// Centered form: P(x,y) = (xy)^{-1} Ptilde(x,y,1), i.e. exponents shift by (-1,-1).
inline LaurentPoly2 dehomogenize3(const Cubic& h) {
    LaurentPoly2 p;
    for (const auto& [k, c] : h) p.add_term(k.first - 1, k.second - 1, c);
    return p;
}

// Canonical display order for homogeneous cubics: positive-coefficient terms
// first, then negative, each block ordered lexicographically by descending
// (i, j, k) exponents of (X, Y, Z). Matches forms like "X²Z+XY²+YZ²−3XYZ".
// The sign separators are ASCII '+' and U+2212 minus.
inline std::string cubic_to_string(const Cubic& h) {
    auto mono = [](int i, int j) {
        static const char* sup[4] = {"", "", "²", "³"};
        int k = 3 - i - j;
        std::string s;
        if (i) s += std::string("X") + sup[i];
        if (j) s += std::string("Y") + sup[j];
        if (k) s += std::string("Z") + sup[k];
        return s;
    };
    std::vector<std::pair<std::pair<int, int>, Rational>> pos, neg;
    for (const auto& t : h) (t.second > 0 ? pos : neg).push_back(t);
    auto desc = [](const auto& a, const auto& b) { return a.first > b.first; };
    std::sort(pos.begin(), pos.end(), desc);
    std::sort(neg.begin(), neg.end(), desc);
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : pos) {
        if (!first) out << "+";
        if (c != 1) out << to_string(c);
        out << mono(k.first, k.second);
        first = false;
    }
    for (const auto& [k, c] : neg) {
        out << "−";
        if (c != -1) out << to_string(-c);
        out << mono(k.first, k.second);
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace dimers
