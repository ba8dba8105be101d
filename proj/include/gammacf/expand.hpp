#pragma once

// q-integers and the symmetric-basis expansions used by the gamma-type
// identities: t^k (1+t)^{d-2k}, t^k (1+t^2)^{n-k} and the non-basis family
// t^{ceil(k/2)} (1+t)^{n-k}.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammacf/poly.hpp"

namespace gammacf {

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
IntPoly q_int(unsigned n);
// [n]_{p,q} = sum_{i<n} p^i q^{n-1-i}, as a polynomial in p (outer) with
// coefficients in q (inner).
BiPoly pq_int(unsigned n);

// [n]_x evaluated in an arbitrary ring.
template <class R>
R q_int_value(unsigned n, const R& x) {
  R acc(0);
  R power(1);
  for (unsigned i = 0; i < n; ++i) {
    acc = acc + power;
    power = power * x;
  }
  return acc;
}

// [n]_{p,q} evaluated in an arbitrary ring.
template <class R>
R pq_int_value(unsigned n, const R& p, const R& q) {
  R acc(0);
  for (unsigned i = 0; i < n; ++i) acc = acc + ring_pow(p, i) * ring_pow(q, n - 1 - i);
  return acc;
}

template <class C>
struct GammaVector {
  // The source polynomial is symmetric about center2 / 2.
  unsigned center2 = 0;
  std::vector<C> gammas;
};

// Raised when a polynomial has no exact expansion in the requested basis.
// The residual left after triangular peeling is kept for diagnostics.
class NotExpressible : public std::runtime_error {
 public:
  NotExpressible(const std::string& what, std::string residual)
      : std::runtime_error(what + " (residual " + residual + ")"), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

namespace detail {
inline std::string residual_text(const IntPoly& p) { return format(p, "t"); }
inline std::string residual_text(const BiPoly& p) { return format(p, "t", "q"); }
}  // namespace detail

// Expand p in the basis {t^k (1+t)^{d-2k}}_{k=0..floor(d/2)}.
template <class C>
GammaVector<C> gamma_expand(const Poly<C>& p, unsigned d) {
  if (p.degree() > static_cast<int>(d))
    throw NotExpressible("gamma_expand: degree exceeds d = " + std::to_string(d), detail::residual_text(p));
  GammaVector<C> out;
  out.center2 = d;
  Poly<C> residual = p;
  for (unsigned k = 0; 2 * k <= d; ++k) {
    C g = residual.coeff(k);
    if (!is_zero(g)) residual -= g * one_plus_t_pow<C>(d - 2 * k).shifted(k);
    out.gammas.push_back(std::move(g));
  }
  if (!residual.is_zero())
    throw NotExpressible("gamma_expand: not symmetric about " + std::to_string(d) + "/2",
                         detail::residual_text(residual));
  return out;
}

// sum_k gammas[k] t^k (1+t)^{center2-2k}.
template <class C>
Poly<C> gamma_reconstruct(const GammaVector<C>& g) {
  Poly<C> acc;
  for (std::size_t k = 0; k < g.gammas.size(); ++k)
    acc += g.gammas[k] * one_plus_t_pow<C>(g.center2 - 2 * static_cast<unsigned>(k)).shifted(k);
  return acc;
}

// Coefficients in the basis {t^k (1+t^2)^{n-k}}_{k=0..n}.
std::vector<Integer> expand_SZ_basis(const IntPoly& p, unsigned n);
// sum_k coeffs[k] t^{ceil(k/2)} (1+t)^{n-k}; coeffs must have length n+1.
IntPoly eval_AS_form(const std::vector<Integer>& coeffs, unsigned n);

// Coefficients are palindromic about d/2 and deg p <= d.
bool is_symmetric(const IntPoly& p, unsigned d);
// There is an index m with a_i <= a_{i+1} for i < m and a_i > a_{i+1} for
// i >= m (over the coefficient sequence up to the degree).
bool is_unimodal(const IntPoly& p);
// 0 <= a_0 < a_1 < ... < a_{floor(d/2)} and a_j = a_{d-j}.
bool is_strictly_unimodal_symmetric(const IntPoly& p, unsigned d);
// d_k < d_{n-k} < d_{k+1} for 0 <= k < floor(n/2), and for odd n also
// d_{floor(n/2)} < d_{ceil(n/2)}.
bool is_spiral(const std::vector<Integer>& coeffs, unsigned n);

}  // namespace gammacf
