#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace acyclic {

/// Reduced exact fraction. The bounds this library cares about sit exactly
/// on integer boundaries for regular graphs, so comparisons must never go
/// through floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return {num, den};
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    /// Smallest integer strictly greater than the fraction.
    long long strict_ceil() const {
        long long q = num / den;
        long long r = num % den;
        if (r < 0) --q;  // floor for negatives
        return q + 1;
    }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace acyclic
