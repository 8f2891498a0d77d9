#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace wmk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rpow(const Rat& base, long long e) {
    if (e >= 0)
        return Rat(ipow(boost::multiprecision::numerator(base), (unsigned long)e),
                   ipow(boost::multiprecision::denominator(base), (unsigned long)e));
    return Rat(ipow(boost::multiprecision::denominator(base), (unsigned long)(-e)),
               ipow(boost::multiprecision::numerator(base), (unsigned long)(-e)));
}

// Exact integer n-th root: returns m with m^n == x, if one exists.
inline std::optional<Int> exact_nth_root(const Int& x, unsigned long n) {
    if (x < 0) return std::nullopt;
    if (x == 0 || x == 1 || n == 1) return x;
    Int lo = 1, hi = x;
    while (lo <= hi) {
        Int mid = (lo + hi) / 2;
        Int p = ipow(mid, n);
        if (p == x) return mid;
        if (p < x)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

inline long long llnum(const Rat& r) { return (long long)boost::multiprecision::numerator(r); }
inline long long llden(const Rat& r) { return (long long)boost::multiprecision::denominator(r); }

inline std::string rat_str(const Rat& r) {
    return r.str();  // "a/b" or "a"
}

}  // namespace wmk
