#pragma once

// Jacobi continued fractions
//
//   sum_n mu_n z^n = 1 / (1 - b_0 z - lam_1 z^2 / (1 - b_1 z - lam_2 z^2 / ...))
//
// Moments come from a height-indexed transfer over weighted Motzkin paths;
// the Jacobi-Rogers closed sum is an independent second evaluation. The
// named coefficient families are generic in the coefficient ring.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gammacf/expand.hpp"
#include "gammacf/integer.hpp"
#include "gammacf/weight_params.hpp"

namespace gammacf {

template <class R>
struct JFraction {
  std::vector<R> b;    // b_0, b_1, ...
  std::vector<R> lam;  // lam_1, lam_2, ... (lam[h-1] holds lam_h)
};

// Highest diagonal index and numerator index reached by paths of length <= N.
inline std::size_t jf_b_needed(std::size_t N) { return N == 0 ? 0 : (N - 1) / 2 + 1; }
inline std::size_t jf_lam_needed(std::size_t N) { return N / 2; }

// mu_0..mu_N. Throws std::invalid_argument if jf is too short for order N.
template <class R>
std::vector<R> jf_moments(const JFraction<R>& jf, std::size_t N) {
  if (jf.b.size() < jf_b_needed(N) || jf.lam.size() < jf_lam_needed(N))
    throw std::invalid_argument("jf_moments: not enough continued fraction coefficients for order " +
                                std::to_string(N));
  const std::size_t H = N / 2;
  std::vector<R> f(H + 2, R(0));
  f[0] = R(1);
  std::vector<R> out;
  out.reserve(N + 1);
  out.push_back(f[0]);
  for (std::size_t s = 1; s <= N; ++s) {
    const std::size_t top = std::min(s, N - s);
    std::vector<R> g(H + 2, R(0));
    for (std::size_t h = 0; h <= top; ++h) {
      R acc(0);
      if (h <= s - 1 && h < jf.b.size() && !is_zero(f[h])) acc = acc + f[h] * jf.b[h];
      if (h >= 1 && !is_zero(f[h - 1])) acc = acc + f[h - 1];
      if (h + 1 <= H && !is_zero(f[h + 1])) acc = acc + f[h + 1] * jf.lam[h];
      g[h] = std::move(acc);
    }
    f = std::move(g);
    out.push_back(f[0]);
  }
  return out;
}

namespace detail {

template <class R>
void jr_visit_m(const JFraction<R>& jf, const std::vector<long>& ns, std::vector<long>& ms, std::size_t l,
                long remaining, R& total) {
  const std::size_t h = ns.size();
  if (l == h) {
    // The last m absorbs the remainder.
    ms[l] = remaining;
    auto n_at = [&](long j) -> long {
      if (j < 0) return 1;
      if (j >= static_cast<long>(h)) return 0;
      return ns[static_cast<std::size_t>(j)];
    };
    Integer rho(1);
    for (std::size_t j = 0; j < h; ++j)
      rho *= binomial_jr(ns[j] + n_at(static_cast<long>(j) + 1) - 1, ns[j] - 1);
    for (std::size_t i = 0; i <= h; ++i) {
      const long li = static_cast<long>(i);
      rho *= binomial_jr(ms[i] + n_at(li) + n_at(li - 1) - 1, ms[i]);
      if (rho == 0) return;
    }
    R term(rho);
    for (std::size_t i = 0; i <= h; ++i)
      if (ms[i] > 0) term = term * ring_pow(jf.b[i], static_cast<unsigned>(ms[i]));
    for (std::size_t j = 0; j < h; ++j) term = term * ring_pow(jf.lam[j], static_cast<unsigned>(ns[j]));
    total = total + term;
    return;
  }
  for (long m = 0; m <= remaining; ++m) {
    ms[l] = m;
    jr_visit_m(jf, ns, ms, l + 1, remaining - m, total);
  }
}

template <class R>
void jr_visit_n(const JFraction<R>& jf, std::vector<long>& ns, std::size_t h, long remaining, R& total) {
  if (ns.size() == h) {
    std::vector<long> ms(h + 1, 0);
    jr_visit_m(jf, ns, ms, 0, remaining, total);
    return;
  }
  for (long v = 1; 2 * v <= remaining; ++v) {
    ns.push_back(v);
    jr_visit_n(jf, ns, h, remaining - 2 * v, total);
    ns.pop_back();
  }
}

}  // namespace detail

// mu_n from the closed Jacobi-Rogers multi-sum.
template <class R>
R jacobi_rogers(const JFraction<R>& jf, std::size_t n) {
  if (jf.b.size() < jf_b_needed(n) || jf.lam.size() < jf_lam_needed(n))
    throw std::invalid_argument("jacobi_rogers: not enough continued fraction coefficients for n = " +
                                std::to_string(n));
  R total(0);
  const long N = static_cast<long>(n);
  for (std::size_t h = 0; static_cast<long>(2 * h) <= N; ++h) {
    std::vector<long> ns;
    detail::jr_visit_n(jf, ns, h, N, total);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Coefficient families.

// Generates sum_{n>=1} A_n(p,q,t,u,v,w) x^{n-1} for the six-statistic
// Eulerian polynomial (res, les, des, da*, dd*, valley*).
template <class R>
struct Sz12AParams {
  R p{1}, q{1}, t{1}, u{1}, v{1}, w{1};
};

// Generates sum_n B_n(p,q,t,u,v,w,y) z^n with
// (nest, cros, drop, cda, cdd, cvalley, fix).
template <class R>
struct BFullParams {
  R p{1}, q{1}, t{1}, u{1}, v{1}, w{1}, y{1};
};

// fexc over colored derangements.
template <class R>
struct DerangeDParams {
  int r = 1;
  R t{1};
};

// Friends-order excedances over colored derangements.
template <class R>
struct DerangeSmallDParams {
  int r = 1;
  R t{1};
};

// Nine-parameter weight over the whole wreath product.
template <class R>
struct WreathParams {
  int r = 1;
  WeightParams<R> wp;
};

template <class R>
using CFFamily = std::variant<Sz12AParams<R>, BFullParams<R>, DerangeDParams<R>, DerangeSmallDParams<R>, WreathParams<R>>;

namespace detail {

template <class R>
R scalar(long v) {
  return R(v);
}

inline void check_radix(int r) {
  if (r < 1) throw std::invalid_argument("continued fraction family: r must be at least 1");
}

template <class R>
void fill(JFraction<R>& jf, std::size_t H, const Sz12AParams<R>& a) {
  const R uv = a.u + a.t * a.v;
  for (std::size_t h = 0; h <= H; ++h) jf.b.push_back(uv * pq_int_value(static_cast<unsigned>(h + 1), a.p, a.q));
  for (std::size_t h = 1; h <= H; ++h)
    jf.lam.push_back(pq_int_value(static_cast<unsigned>(h), a.p, a.q) *
                     pq_int_value(static_cast<unsigned>(h + 1), a.p, a.q) * a.t * a.w);
}

template <class R>
void fill(JFraction<R>& jf, std::size_t H, const BFullParams<R>& a) {
  const R quv = a.q * a.u + a.t * a.v;
  for (std::size_t h = 0; h <= H; ++h)
    jf.b.push_back(a.y * ring_pow(a.p, static_cast<unsigned>(h)) +
                   quv * pq_int_value(static_cast<unsigned>(h), a.p, a.q));
  for (std::size_t h = 1; h <= H; ++h) {
    const R c = pq_int_value(static_cast<unsigned>(h), a.p, a.q);
    jf.lam.push_back(a.t * a.w * c * c);
  }
}

template <class R>
void fill(JFraction<R>& jf, std::size_t H, const DerangeDParams<R>& a) {
  check_radix(a.r);
  const R rm1 = q_int_value(static_cast<unsigned>(a.r - 1), a.t);
  const R rr = q_int_value(static_cast<unsigned>(a.r), a.t);
  const R one_t = R(1) + a.t;
  for (std::size_t h = 0; h <= H; ++h) jf.b.push_back(a.t * rm1 + scalar<R>(static_cast<long>(h)) * one_t * rr);
  for (std::size_t h = 1; h <= H; ++h) {
    const long hh = static_cast<long>(h * h);
    jf.lam.push_back(a.t * rr * rr * scalar<R>(hh));
  }
}

template <class R>
void fill(JFraction<R>& jf, std::size_t H, const DerangeSmallDParams<R>& a) {
  check_radix(a.r);
  const long r = a.r;
  const R one_t = R(1) + a.t;
  for (std::size_t h = 0; h <= H; ++h)
    jf.b.push_back(scalar<R>(r - 1) * a.t + scalar<R>(r * static_cast<long>(h)) * one_t);
  for (std::size_t h = 1; h <= H; ++h) {
    const long rh = r * static_cast<long>(h);
    jf.lam.push_back(scalar<R>(rh * rh) * a.t);
  }
}

template <class R>
void fill(JFraction<R>& jf, std::size_t H, const WreathParams<R>& a);

}  // namespace detail

template <class R>
struct WreathCoefficients {
  R a, b, c;
};

// a_h, b_h and c_h of the nine-parameter family:
//   a_h = (t + w y [r-1]_y q^h)(tt + ww yy [r-1]_yy q^{h+1})
//   b_h = (tt + ww yy [r-1]_yy q^h)[h]_q + t(x + q[h]_q) + w y [r-1]_y q^h ([h]_q + xx q^h)
//   c_h = [h]_q^2
template <class R>
WreathCoefficients<R> wreath_coefficients(unsigned h, int r, const WeightParams<R>& p) {
  detail::check_radix(r);
  const unsigned rm1 = static_cast<unsigned>(r - 1);
  const R wy = p.w * p.y * q_int_value(rm1, p.y);
  const R wwyy = p.ww * p.yy * q_int_value(rm1, p.yy);
  const R qh = ring_pow(p.q, h);
  const R hq = q_int_value(h, p.q);
  WreathCoefficients<R> out;
  out.a = (p.t + wy * qh) * (p.tt + wwyy * qh * p.q);
  out.b = (p.tt + wwyy * qh) * hq + p.t * (p.x + p.q * hq) + wy * qh * (hq + p.xx * qh);
  out.c = hq * hq;
  return out;
}

namespace detail {

template <class R>
void fill(JFraction<R>& jf, std::size_t H, const WreathParams<R>& a) {
  for (std::size_t h = 0; h <= H; ++h) jf.b.push_back(wreath_coefficients(static_cast<unsigned>(h), a.r, a.wp).b);
  for (std::size_t h = 1; h <= H; ++h) {
    const unsigned hh = static_cast<unsigned>(h);
    jf.lam.push_back(wreath_coefficients(hh - 1, a.r, a.wp).a * wreath_coefficients(hh, a.r, a.wp).c);
  }
}

}  // namespace detail

// b_0..b_H and lam_1..lam_H of a named family.
template <class R>
JFraction<R> family_jfraction(const CFFamily<R>& fam, std::size_t H) {
  JFraction<R> jf;
  std::visit([&](const auto& params) { detail::fill(jf, H, params); }, fam);
  return jf;
}

// Height needed for moments up to order N.
inline std::size_t height_for_order(std::size_t N) { return N / 2 + 1; }

template <class R>
std::vector<R> family_moments(const CFFamily<R>& fam, std::size_t N) {
  return jf_moments(family_jfraction(fam, height_for_order(N)), N);
}

// b_h = (2h+1) r, lam_h = r^2 h^2; moments n! r^n.
JFraction<Integer> r_euler_jfraction(int r, std::size_t H);

// b_h = (2h+1)(1+t), lam_h = 4 t h^2; moments sum over signed permutations of
// t^exc.
JFraction<IntPoly> b_exc_jfraction(std::size_t H);

}  // namespace gammacf
