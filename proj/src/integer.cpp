#include "gammacf/integer.hpp"

namespace gammacf {

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

Integer binomial_jr(long p, long k) {
  if (k == -1) return Integer(p == -1 ? 1 : 0);
  if (k < 0) return Integer(0);
  if (p >= 0) return binomial(p, k);
  // Upper negation: C(p, k) = (-1)^k C(k - p - 1, k) for p < 0.
  Integer c = binomial(k - p - 1, k);
  return (k % 2 == 0) ? c : Integer(-c);
}

Integer ipow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace gammacf
