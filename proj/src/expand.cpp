#include "gammacf/expand.hpp"

namespace gammacf {

IntPoly q_int(unsigned n) { return IntPoly(std::vector<Integer>(n, Integer(1))); }

BiPoly pq_int(unsigned n) {
  std::vector<IntPoly> v;
  v.reserve(n);
  for (unsigned i = 0; i < n; ++i) v.push_back(IntPoly::monomial(Integer(1), n - 1 - i));
  return BiPoly(std::move(v));
}

std::vector<Integer> expand_SZ_basis(const IntPoly& p, unsigned n) {
  if (p.degree() > static_cast<int>(2 * n))
    throw NotExpressible("expand_SZ_basis: degree exceeds 2n = " + std::to_string(2 * n), format(p));
  const IntPoly one_plus_t2({Integer(1), Integer(0), Integer(1)});
  std::vector<Integer> out;
  out.reserve(n + 1);
  IntPoly residual = p;
  for (unsigned k = 0; k <= n; ++k) {
    Integer c = residual.coeff(k);
    if (!is_zero(c)) residual -= c * pow(one_plus_t2, n - k).shifted(k);
    out.push_back(std::move(c));
  }
  if (!residual.is_zero()) throw NotExpressible("expand_SZ_basis: no exact expansion", format(residual));
  return out;
}

IntPoly eval_AS_form(const std::vector<Integer>& coeffs, unsigned n) {
  if (coeffs.size() != n + 1) throw std::invalid_argument("eval_AS_form: expected n+1 coefficients");
  IntPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    if (is_zero(coeffs[k])) continue;
    acc += coeffs[k] * one_plus_t_pow<Integer>(n - k).shifted((k + 1) / 2);
  }
  return acc;
}

bool is_symmetric(const IntPoly& p, unsigned d) {
  if (p.degree() > static_cast<int>(d)) return false;
  for (unsigned i = 0; i <= d; ++i)
    if (p.coeff(i) != p.coeff(d - i)) return false;
  return true;
}

bool is_unimodal(const IntPoly& p) {
  const auto& a = p.coeffs();
  if (a.size() <= 1) return true;
  // Longest weakly increasing prefix, then the rest must strictly decrease.
  std::size_t m = 0;
  while (m + 1 < a.size() && a[m] <= a[m + 1]) ++m;
  for (std::size_t i = m; i + 1 < a.size(); ++i)
    if (!(a[i] > a[i + 1])) return false;
  return true;
}

bool is_strictly_unimodal_symmetric(const IntPoly& p, unsigned d) {
  if (!is_symmetric(p, d)) return false;
  if (sgn(p.coeff(0)) < 0) return false;
  for (unsigned k = 0; k < d / 2; ++k)
    if (!(p.coeff(k) < p.coeff(k + 1))) return false;
  return true;
}

bool is_spiral(const std::vector<Integer>& coeffs, unsigned n) {
  auto at = [&](unsigned k) { return k < coeffs.size() ? coeffs[k] : Integer(0); };
  if (sgn(at(0)) < 0) return false;
  for (unsigned k = 0; k < n / 2; ++k) {
    if (!(at(k) < at(n - k))) return false;
    if (!(at(n - k) < at(k + 1))) return false;
  }
  if (n % 2 == 1 && !(at(n / 2) < at((n + 1) / 2))) return false;
  return true;
}

}  // namespace gammacf
