#include <random>

#include "doctest.h"
#include "gammacf/cfrac.hpp"
#include "gammacf/colored.hpp"
#include "helpers.hpp"

using namespace gammacf;
using gammacf::testing::P;
using gammacf::testing::V;

namespace {

JFraction<Integer> constant_family(long b, long lam, std::size_t H) {
  JFraction<Integer> jf;
  for (std::size_t h = 0; h <= H; ++h) jf.b.emplace_back(b);
  for (std::size_t h = 1; h <= H; ++h) jf.lam.emplace_back(lam);
  return jf;
}

}  // namespace

TEST_CASE("Laguerre moments are factorials") {
  std::vector<Integer> mu = jf_moments(r_euler_jfraction(1, 6), 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(mu[n] == factorial(n));
  for (int r = 1; r <= 4; ++r) {
    std::vector<Integer> m = jf_moments(r_euler_jfraction(r, 6), 10);
    for (unsigned n = 0; n <= 10; ++n) CHECK(m[n] == factorial(n) * ipow(Integer(r), n));
  }
}

TEST_CASE("Dyck paths give Catalan numbers") {
  std::vector<Integer> mu = jf_moments(constant_family(0, 1, 6), 10);
  CHECK(mu == V({1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42}));
  // Motzkin numbers.
  CHECK(jf_moments(constant_family(1, 1, 6), 8) == V({1, 1, 2, 4, 9, 21, 51, 127, 323}));
}

TEST_CASE("coefficient length checks") {
  JFraction<Integer> jf = constant_family(1, 1, 1);
  CHECK_NOTHROW(jf_moments(jf, 3));
  CHECK_THROWS_AS(jf_moments(jf, 4), std::invalid_argument);
  JFraction<Integer> empty;
  CHECK(jf_moments(empty, 0) == V({1}));
  CHECK(jacobi_rogers(empty, 0) == 1);
  CHECK_THROWS_AS(jacobi_rogers(empty, 1), std::invalid_argument);
}

TEST_CASE("Jacobi-Rogers closed sum") {
  JFraction<Integer> jf = r_euler_jfraction(1, 6);
  CHECK(jacobi_rogers(jf, 0) == 1);
  CHECK(jacobi_rogers(jf, 1) == jf.b[0]);
  CHECK(jacobi_rogers(jf, 4) == 24);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    JFraction<Integer> f;
    for (int h = 0; h <= 6; ++h) f.b.emplace_back(coef(rng));
    for (int h = 1; h <= 6; ++h) f.lam.emplace_back(coef(rng));
    std::vector<Integer> mu = jf_moments(f, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(jacobi_rogers(f, n) == mu[n]);
  }
}

TEST_CASE("Jacobi-Rogers over polynomial coefficients") {
  JFraction<IntPoly> f;
  for (int h = 0; h <= 4; ++h) f.b.push_back(P({h, 1}));
  for (int h = 1; h <= 4; ++h) f.lam.push_back(P({0, h}));
  std::vector<IntPoly> mu = jf_moments(f, 7);
  for (std::size_t n = 0; n <= 7; ++n) CHECK(jacobi_rogers(f, n) == mu[n]);
}

TEST_CASE("derangement families") {
  const IntPoly t = IntPoly::var();
  JFraction<IntPoly> d = family_jfraction<IntPoly>(DerangeSmallDParams<IntPoly>{2, t}, 3);
  for (int h = 0; h <= 3; ++h) CHECK(d.b[static_cast<std::size_t>(h)] == P({2 * h, 1 + 2 * h}));
  for (int h = 1; h <= 3; ++h) CHECK(d.lam[static_cast<std::size_t>(h - 1)] == P({0, 4 * h * h}));

  std::vector<IntPoly> D = family_moments<IntPoly>(DerangeDParams<IntPoly>{2, t}, 3);
  CHECK(D[3] == P({0, 1, 7, 13, 7, 1}));

  for (int r = 1; r <= 3; ++r) {
    std::vector<IntPoly> cfD = family_moments<IntPoly>(DerangeDParams<IntPoly>{r, t}, 6);
    std::vector<IntPoly> cfd = family_moments<IntPoly>(DerangeSmallDParams<IntPoly>{r, t}, 6);
    for (int n = 0; n <= 6; ++n) {
      CHECK_MESSAGE(cfD[static_cast<std::size_t>(n)] == D_poly(n, r), "n = " << n << ", r = " << r);
      CHECK_MESSAGE(cfd[static_cast<std::size_t>(n)] == d_poly(n, r), "n = " << n << ", r = " << r);
    }
  }
}

TEST_CASE("signed-permutation excedance family") {
  std::vector<IntPoly> mu = jf_moments(b_exc_jfraction(4), 6);
  for (int n = 0; n <= 6; ++n) {
    std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
    for_each_colored(n, 2, [&](const ColoredPermutation& s) {
      ++counts[static_cast<std::size_t>(colored_stats(s).exc_friends)];
    });
    CHECK(mu[static_cast<std::size_t>(n)] == from_counts(counts));
  }
}

TEST_CASE("families collapse to factorials at unit parameters") {
  std::vector<Integer> a = family_moments<Integer>(Sz12AParams<Integer>{}, 8);
  for (unsigned n = 1; n <= 9; ++n) CHECK(a[n - 1] == factorial(n));
  std::vector<Integer> b = family_moments<Integer>(BFullParams<Integer>{}, 8);
  for (unsigned n = 0; n <= 8; ++n) CHECK(b[n] == factorial(n));
  for (int r = 1; r <= 3; ++r) {
    WreathParams<Integer> w;
    w.r = r;
    std::vector<Integer> m = family_moments<Integer>(w, 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK(m[n] == factorial(n) * ipow(Integer(r), n));
  }
  CHECK_THROWS_AS(family_jfraction<Integer>(WreathParams<Integer>{0, {}}, 3), std::invalid_argument);
}

TEST_CASE("one-color wreath family is the classical Laguerre family") {
  WreathParams<Integer> w;
  w.r = 1;
  w.wp.y = Integer(5);
  w.wp.yy = Integer(-3);
  w.wp.w = Integer(7);
  JFraction<Integer> jf = family_jfraction<Integer>(w, 4);
  JFraction<Integer> lag = r_euler_jfraction(1, 4);
  CHECK(jf.b == lag.b);
  CHECK(jf.lam == lag.lam);
}
