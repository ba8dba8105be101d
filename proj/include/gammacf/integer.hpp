#pragma once

// Arbitrary-precision scalars. Everything in the library is exact; there is
// no floating point on any computational path.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gammacf {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

Integer factorial(unsigned n);

// C(n, k) with C(n, k) = 0 for k > n or k < 0.
Integer binomial(long n, long k);

// Binomial with the Jacobi-Rogers boundary convention C(p, -1) = [p == -1].
Integer binomial_jr(long p, long k);

Integer ipow(const Integer& base, unsigned e);

// Generic repeated squaring for any ring with a multiplicative identity.
template <class R>
R ring_pow(R base, unsigned e) {
  R acc(1);
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return acc;
}

}  // namespace gammacf
