#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Poly<C> is used with C = Integer (IntPoly), C = Rational (RatPoly) and
// C = IntPoly (BiPoly, outer variable t, inner variable q). Coefficients are
// stored ascending with no trailing zeros; the zero polynomial is empty.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gammacf/integer.hpp"

namespace gammacf {

template <class C>
class Poly;

template <class C>
bool is_zero(const Poly<C>& p);

template <class C>
class Poly {
 public:
  using coeff_type = C;

  Poly() = default;
  explicit Poly(C c) {
    if (!gammacf::is_zero(c)) coeffs_.push_back(std::move(c));
  }
  template <std::integral I>
  explicit Poly(I c) : Poly(C(static_cast<long>(c))) {}
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  // c * t^k
  static Poly monomial(C c, std::size_t k) {
    if (gammacf::is_zero(c)) return Poly();
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly var() { return monomial(C(1), 1); }

  const std::vector<C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }
  // Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!gammacf::is_zero(coeffs_[i])) return static_cast<int>(i);
    return -1;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (gammacf::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const C& s, Poly a) {
    for (auto& c : a.coeffs_) c = s * c;
    a.trim();
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Multiply by t^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<C> v(k, C(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  // Horner evaluation in any ring R that accepts C through R(C).
  template <class R>
  R eval(const R& x) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + R(*it);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && gammacf::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero();
}

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;
// Polynomial in t whose coefficients are polynomials in q.
using BiPoly = Poly<IntPoly>;

template <class C>
Poly<C> pow(const Poly<C>& p, unsigned e) {
  return ring_pow(p, e);
}

// (1 + t)^e over C.
template <class C>
Poly<C> one_plus_t_pow(unsigned e) {
  std::vector<C> v;
  v.reserve(e + 1);
  for (unsigned k = 0; k <= e; ++k) v.push_back(C(binomial(e, k)));
  return Poly<C>(std::move(v));
}

// Quotient of a by b when b has leading coefficient 1 and the division is
// exact; std::nullopt when the remainder is nonzero.
template <class C>
std::optional<Poly<C>> divide_monic(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero() || !(b.coeffs().back() == C(1)))
    throw std::invalid_argument("divide_monic: divisor must have leading coefficient 1");
  std::vector<C> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (a.is_zero()) return Poly<C>();
    return std::nullopt;
  }
  std::vector<C> quo(static_cast<std::size_t>(a.degree() - db + 1), C(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    C lead = rem[static_cast<std::size_t>(k + db)];
    if (is_zero(lead)) continue;
    quo[static_cast<std::size_t>(k)] = lead;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] =
          rem[static_cast<std::size_t>(k + j)] - lead * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem)
    if (!is_zero(c)) return std::nullopt;
  return Poly<C>(std::move(quo));
}

// Substitute the variable of p by the polynomial v (composition p(v)).
template <class C>
Poly<C> compose(const Poly<C>& p, const Poly<C>& v) {
  Poly<C> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * v + Poly<C>(*it);
  return acc;
}

// Evaluate the outer variable of a bivariate polynomial at an inner-ring
// value: sum_k c_k(q) * v(q)^k.
inline IntPoly eval_outer(const BiPoly& p, const IntPoly& v) { return p.eval(v); }

// Apply f to every coefficient.
template <class C, class F>
auto map_coeffs(const Poly<C>& p, F&& f) {
  using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
  std::vector<D> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(f(c));
  return Poly<D>(std::move(out));
}

inline RatPoly to_rational(const IntPoly& p) {
  return map_coeffs(p, [](const Integer& c) { return Rational(c); });
}

// Build an IntPoly from machine-integer counts.
template <class Count>
IntPoly from_counts(const std::vector<Count>& counts) {
  std::vector<Integer> v;
  v.reserve(counts.size());
  for (const auto& c : counts) v.emplace_back(c);
  return IntPoly(std::move(v));
}

// counts[i][j] is the coefficient of t^i q^j.
template <class Count>
BiPoly from_counts2(const std::vector<std::vector<Count>>& counts) {
  std::vector<IntPoly> v;
  v.reserve(counts.size());
  for (const auto& row : counts) v.push_back(from_counts(row));
  return BiPoly(std::move(v));
}

// Compact text form, e.g. "1+11*t+11*t^2+t^3"; nested coefficients are
// parenthesised: "1+(q+q^2)*t".
std::string format(const IntPoly& p, const std::string& var = "t");
std::string format(const RatPoly& p, const std::string& var = "t");
std::string format(const BiPoly& p, const std::string& outer = "t", const std::string& inner = "q");

// Polynomial JSON: {"var":"t","coeffs":[c0,c1,...]}. Integers are written as
// exact decimal literals of arbitrary length.
std::string to_json(const IntPoly& p, const std::string& var = "t");
// {"vars":["q","t"],"coeffs":[[...],[...],...]}: outer index is the power of
// t, inner arrays are ascending in q.
std::string to_json(const BiPoly& p, const std::string& outer = "t", const std::string& inner = "q");
std::string json_int_array(const std::vector<Integer>& v);

// Accepts the JSON form above (numbers or decimal strings as coefficients).
IntPoly parse_int_poly_json(const std::string& text);

}  // namespace gammacf
