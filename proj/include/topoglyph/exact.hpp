#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace topoglyph {

// All counting formulas run on arbitrary-precision integers; no floating
// point on any formula path.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(const BigInt& n, const BigInt& k);
BigInt double_factorial_odd(unsigned n);  // (2n-1)!! = 1*3*5*...*(2n-1)
BigInt catalan(unsigned n);

// Smallest integer s with s*s >= x (x >= 0).
BigInt ceil_isqrt(const BigInt& x);

// Exact division; throws if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

}  // namespace topoglyph
