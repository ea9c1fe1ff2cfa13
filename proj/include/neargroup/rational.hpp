#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace neargroup {

// All exact arithmetic in the library runs on these two types; no floating
// point appears anywhere in the arithmetic layers.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Floor of sqrt(n) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

/// Tests n for being a perfect square; optionally hands back the root.
inline bool is_perfect_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/// n = square_part^2 * squarefree, with square_part > 0 and the sign of n
/// carried by the squarefree part.
struct SquarefreeSplit {
    Integer square_part;
    Integer squarefree;
};

/// Trial division; inputs here are desk-scale (radicands like k^2+4n).
inline SquarefreeSplit squarefree_decompose(Integer n) {
    if (n == 0) throw std::invalid_argument("squarefree_decompose: zero argument");
    Integer sign = 1;
    if (n < 0) {
        sign = -1;
        n = -n;
    }
    Integer square = 1;
    Integer free = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= p;
        if (e % 2 != 0) free *= p;
    }
    free *= n;  // remaining prime factor, if any
    return {square, sign * free};
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(num, den);
}

}  // namespace neargroup
