#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "h3/error.hpp"

namespace h3 {

using i128 = __int128;

inline std::string i128_to_string(i128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

// Exact rational with a small denominator. Property parameters (q, p, delta,
// eps, eta, C, alpha) are parsed from decimal strings so that all property
// inequalities can be decided in integer arithmetic.
struct Rational {
    long long num = 0;
    long long den = 1; // > 0, gcd(num, den) = 1

    Rational() = default;

    Rational(long long n, long long d)
    {
        require(d != 0, Err::INVALID_ARGUMENT, "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = n;
        den = d;
    }

    static Rational of_int(long long n) { return Rational(n, 1); }

    // Accepts "3", "-0.25", ".5", "1.", up to 9 fractional digits.
    static Rational parse(std::string_view s)
    {
        require(!s.empty(), Err::INVALID_ARGUMENT, "empty rational literal");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        long long ipart = 0;
        long long fpart = 0;
        long long fden = 1;
        bool saw_digit = false;
        for (; i < s.size() && s[i] != '.'; ++i) {
            require(s[i] >= '0' && s[i] <= '9', Err::INVALID_ARGUMENT,
                    "bad rational literal '" + std::string(s) + "'");
            require(ipart < 1000000000LL, Err::INVALID_ARGUMENT,
                    "rational integer part too large: '" + std::string(s) + "'");
            ipart = ipart * 10 + (s[i] - '0');
            saw_digit = true;
        }
        if (i < s.size() && s[i] == '.') {
            ++i;
            for (; i < s.size(); ++i) {
                require(s[i] >= '0' && s[i] <= '9', Err::INVALID_ARGUMENT,
                        "bad rational literal '" + std::string(s) + "'");
                require(fden <= 100000000LL, Err::INVALID_ARGUMENT,
                        "more than 9 fractional digits: '" + std::string(s) + "'");
                fpart = fpart * 10 + (s[i] - '0');
                fden *= 10;
                saw_digit = true;
            }
        }
        require(saw_digit, Err::INVALID_ARGUMENT, "bad rational literal '" + std::string(s) + "'");
        long long n = ipart * fden + fpart;
        return Rational(neg ? -n : n, fden);
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool positive() const { return num > 0; }
    bool zero() const { return num == 0; }

    std::string str() const
    {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        // Reduce crosswise first; parameters are small so this never overflows.
        Rational x(a.num, b.den);
        Rational y(b.num, a.den);
        return Rational(x.num * y.num, x.den * y.den);
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num == b.num && a.den == b.den;
    }
};

// Compares a/b vs c/d with b, d > 0. Falls back to long double if the cross
// products would overflow 128 bits (documented slack: ~1e-18 relative, far
// below the 1e-9 comparison slack used elsewhere).
inline int cmp_frac(i128 a, i128 b, i128 c, i128 d)
{
    i128 lhs, rhs;
    bool of1 = __builtin_mul_overflow(a, d, &lhs);
    bool of2 = __builtin_mul_overflow(c, b, &rhs);
    if (!of1 && !of2)
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    long double l = static_cast<long double>(a) / static_cast<long double>(b);
    long double r = static_cast<long double>(c) / static_cast<long double>(d);
    return l < r ? -1 : (l > r ? 1 : 0);
}

inline i128 iabs128(i128 v) { return v < 0 ? -v : v; }

} // namespace h3
