#include "gammacf/series.hpp"

#include <stdexcept>

namespace gammacf {

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<RatPoly> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::from_egf(std::size_t order, const std::vector<IntPoly>& terms) {
  if (terms.size() < order + 1) throw std::invalid_argument("from_egf: not enough terms for the requested order");
  std::vector<RatPoly> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational inv_fact(Integer(1), factorial(static_cast<unsigned>(n)));
    c.push_back(inv_fact * to_rational(terms[n]));
  }
  return TruncSeries(order, std::move(c));
}

TruncSeries TruncSeries::constant(std::size_t order, RatPoly c) {
  TruncSeries s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

TruncSeries TruncSeries::exp_linear(std::size_t order, const RatPoly& c) {
  TruncSeries a(order);
  if (order >= 1) a.coeffs_[1] = c;
  return series_exp(a);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncSeries s(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncSeries s(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) s.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncSeries s(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

TruncSeries TruncSeries::scaled(const RatPoly& c) const {
  TruncSeries s(order());
  for (std::size_t n = 0; n <= order(); ++n) s.coeffs_[n] = c * coeffs_[n];
  return s;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) { return a + b; }
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }
TruncSeries series_scale_poly(const TruncSeries& a, const RatPoly& c) { return a.scaled(c); }

TruncSeries series_exp(const TruncSeries& a) {
  if (!a[0].is_zero()) throw std::domain_error("series_exp: constant term must be zero");
  // E' = A' E  =>  n E_n = sum_{k=1}^n k A_k E_{n-k}.
  const std::size_t order = a.order();
  std::vector<RatPoly> e(order + 1);
  e[0] = RatPoly(Rational(1));
  for (std::size_t n = 1; n <= order; ++n) {
    RatPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k].is_zero()) continue;
      acc += Rational(static_cast<long>(k)) * (a[k] * e[n - k]);
    }
    e[n] = Rational(Integer(1), Integer(static_cast<long>(n))) * acc;
  }
  return TruncSeries(order, std::move(e));
}

}  // namespace gammacf
