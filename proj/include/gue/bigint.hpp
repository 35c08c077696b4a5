#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gue {

// Exact integer and rational types. Coefficients in this project grow like
// (2l-1)!! and beyond, so fixed-width integers are never used for them.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double toDouble(const BigInt& x) { return x.convert_to<double>(); }
inline double toDouble(const Rational& x) { return x.convert_to<double>(); }

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// (2l-1)!! = 1*3*5*...*(2l-1); the number of perfect matchings of 2l points.
/// doubleFactorialOdd(0) = 1 (empty product).
BigInt doubleFactorialOdd(int l);

} // namespace gue
