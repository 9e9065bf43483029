#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace ucn {

// Exact arithmetic substrate. Every group-theoretic and lattice computation
// in this library runs over these types; floating point appears only in the
// final charting / root-bisection steps.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRational& x) { return x.sign(); }

inline BigInt vector_gcd(const IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline BigInt coordinate_sum(const IntVector& v) {
    BigInt s = 0;
    for (const auto& x : v) s += x;
    return s;
}

} // namespace ucn
