#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ckq {

// Exact rational arithmetic. Arbitrary precision: elimination steps in the
// contraction checker multiply Laurent coefficients together, so fixed-width
// integers would overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ckq
