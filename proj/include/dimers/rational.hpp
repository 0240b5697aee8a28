#pragma once
// Exact rational arithmetic used throughout the library. Thin layer over
// Boost.Multiprecision's header-only backends plus string parsing in the
// "p/q" form used by the JSON file formats.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace dimers {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational parse_rational(const std::string& s) {
    auto plain_int = [](const std::string& t) {
        size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!plain_int(s)) throw std::invalid_argument("not an integer");
            return Rational(BigInt(s));
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!plain_int(ns) || !plain_int(ds)) throw std::invalid_argument("not a fraction");
        BigInt num(ns);
        BigInt den(ds);
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::complex<double> to_complex(const Rational& r) { return {to_double(r), 0.0}; }

} // namespace dimers
