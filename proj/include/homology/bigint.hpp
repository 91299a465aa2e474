#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homology {

// Exact arithmetic used throughout: cone orders stay in int64, but group
// orders, genera and matrix entries routinely exceed 64 bits (k^n with k, n
// in the dozens), so they live in arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int &a, const Int &b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int &a, const Int &b) { return boost::multiprecision::lcm(a, b); }

/// lcm over int64 cone orders, checked against overflow.
inline std::int64_t checked_lcm64(std::int64_t a, std::int64_t b)
{
    Int l = int_lcm(Int(a), Int(b));
    if (l > Int(INT64_MAX)) {
        throw std::overflow_error("lcm of cone orders exceeds 64 bits: " + l.str());
    }
    return static_cast<std::int64_t>(l);
}

inline bool fits_int64(const Int &v)
{
    return v >= Int(INT64_MIN) && v <= Int(INT64_MAX);
}

} // namespace homology
