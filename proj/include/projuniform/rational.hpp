#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "projuniform/errors.hpp"

namespace projuniform {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Rising factorial (x)_n = x (x+1) ... (x+n-1).
inline BigRat pochhammer(const BigRat& x, int n) {
  BigRat result(1);
  BigRat factor = x;
  for (int i = 0; i < n; ++i) {
    result *= factor;
    factor += 1;
  }
  return result;
}

inline BigInt factorial(int n) {
  BigInt result(1);
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

// C(n, k) for integer n >= 0, 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt result(1);
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

inline BigInt rational_to_integer(const BigRat& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw NonIntegerMultiplicity(std::string(what) +
                                 ": exact rational value is not an integer");
  }
  return boost::multiprecision::numerator(value);
}

}  // namespace projuniform
