#pragma once

// Sparse multivariate polynomials over Integer in at most kMaxVars
// variables. Used for the nine-parameter Laguerre-history weights, where a
// dense representation would be wasteful.

#include <array>
#include <concepts>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "gammacf/integer.hpp"

namespace gammacf {

class MPoly {
 public:
  static constexpr std::size_t kMaxVars = 9;
  using Exponents = std::array<std::uint16_t, kMaxVars>;

  MPoly() = default;
  explicit MPoly(const Integer& c);
  template <std::integral I>
  explicit MPoly(I c) : MPoly(Integer(static_cast<long>(c))) {}

  static MPoly var(std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  // Coefficient of the monomial with the given exponents.
  Integer coeff(const Exponents& e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // Evaluate with values[i] substituted for variable i.
  Integer eval(std::span<const Integer> values) const;

  // e.g. "q^6*t^2*w". Terms are printed in descending lexicographic
  // exponent order.
  std::string format(std::span<const std::string> names) const;

 private:
  std::map<Exponents, Integer> terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

}  // namespace gammacf
