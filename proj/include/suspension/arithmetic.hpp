#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace suspension {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer gcd(const Integer& a, const Integer& b, const Integer& c) {
    return gcd(gcd(a, b), c);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

inline Integer power(const Integer& base, const Integer& exponent) {
    return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

inline Integer product(const std::vector<Integer>& xs) {
    Integer p = 1;
    for (const auto& x : xs) p *= x;
    return p;
}

// num / den when den divides num exactly.
inline std::optional<Integer> exact_quotient(const Integer& num, const Integer& den) {
    if (den == 0) return std::nullopt;
    Integer q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) return std::nullopt;
    return q;
}

inline std::optional<Integer> as_integer(const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1) return std::nullopt;
    return Integer(boost::multiprecision::numerator(r));
}

// boost::rational over cpp_int rejects negative denominators, so normalise the sign first.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den < 0) return Rational(Integer(-num), Integer(-den));
    return Rational(num, den);
}

// Exact k-th root of a non-negative integer, if there is one.
inline std::optional<Integer> exact_root(const Integer& x, unsigned k) {
    if (x < 0 || k == 0) return std::nullopt;
    if (k == 1 || x < 2) return x;
    Integer lo = 1;
    Integer hi = 1;
    while (boost::multiprecision::pow(hi, k) < x) hi *= 2;
    while (lo < hi) {
        Integer mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, k) < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (boost::multiprecision::pow(lo, k) == x) return lo;
    return std::nullopt;
}

inline std::optional<Integer> exact_sqrt(const Integer& x) { return exact_root(x, 2); }

// Positive divisors in increasing order; x must be positive and small enough to enumerate.
inline std::vector<Integer> divisors(const Integer& x) {
    std::vector<Integer> low, high;
    for (Integer d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
            low.push_back(d);
            if (d * d != x) high.push_back(x / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

struct Bezout {
    Integer g;
    Integer x;
    Integer y;
};

// g = gcd(a, b) = a*x + b*y, for non-negative a, b.
inline Bezout extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_x - q * x;
        old_x = std::move(x);
        x = std::move(t);
        t = old_y - q * y;
        old_y = std::move(y);
        y = std::move(t);
    }
    return {old_r, old_x, old_y};
}

// Representative in [0, m) of the inverse of a modulo m; a and m coprime, m >= 1.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    auto b = extended_gcd(r, m);
    Integer x = b.x % m;
    if (x < 0) x += m;
    return x;
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace suspension
