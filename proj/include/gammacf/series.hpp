#pragma once

// Truncated power series in z whose coefficients are polynomials in t over
// the rationals. Used to check exponential generating function identities
// after clearing denominators.

#include <cstddef>
#include <vector>

#include "gammacf/poly.hpp"

namespace gammacf {

class TruncSeries {
 public:
  // Zero series of the given truncation order (coefficients z^0..z^order).
  explicit TruncSeries(std::size_t order);
  TruncSeries(std::size_t order, std::vector<RatPoly> coeffs);

  // sum_n terms[n] z^n / n!, truncated at order.
  static TruncSeries from_egf(std::size_t order, const std::vector<IntPoly>& terms);
  static TruncSeries constant(std::size_t order, RatPoly c);
  // exp(c * z).
  static TruncSeries exp_linear(std::size_t order, const RatPoly& c);

  std::size_t order() const { return coeffs_.size() - 1; }
  const RatPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<RatPoly>& coeffs() const { return coeffs_; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  // Multiply every coefficient by the polynomial c.
  TruncSeries scaled(const RatPoly& c) const;

 private:
  std::vector<RatPoly> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale_poly(const TruncSeries& a, const RatPoly& c);
// exp(a) for a series with zero constant term; throws std::domain_error
// otherwise.
TruncSeries series_exp(const TruncSeries& a);

}  // namespace gammacf
