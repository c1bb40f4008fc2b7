#include "topoglyph/exact.hpp"

#include <stdexcept>

namespace topoglyph {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n) return 0;
  BigInt kk = k;
  if (n - k < kk) kk = n - k;
  BigInt r = 1;
  for (BigInt i = 1; i <= kk; ++i) {
    r *= n - kk + i;
    r /= i;  // always exact at this point
  }
  return r;
}

BigInt double_factorial_odd(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
  return r;
}

BigInt catalan(unsigned n) {
  return exact_div(binomial(2 * (BigInt)n, n), (BigInt)n + 1);
}

BigInt ceil_isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("ceil_isqrt: negative input");
  if (x == 0) return 0;
  BigInt r = boost::multiprecision::sqrt(x);
  if (r * r < x) ++r;
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0) throw std::domain_error("exact_div: not divisible");
  return a / b;
}

}  // namespace topoglyph
