#include <map>

#include "doctest.h"
#include "gammacf/colored.hpp"
#include "gammacf/expand.hpp"
#include "helpers.hpp"

using namespace gammacf;
using gammacf::testing::P;

TEST_CASE("parsing and printing colored permutations") {
  ColoredPermutation s = ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3);
  CHECK(s.size() == 7);
  CHECK(s.value(2) == 7);
  CHECK(s.color(2) == 1);
  CHECK(s.color(5) == 2);
  CHECK(s.to_string() == "4 7^1 2 5^1 1^2 6 3");

  ColoredPermutation b = ColoredPermutation::parse("4 -7 2 -5 1 6 3", 2);
  CHECK(b.to_string() == "4 7^1 2 5^1 1 6 3");
  CHECK(b.to_signed_string() == "4 -7 2 -5 1 6 3");
  CHECK_THROWS_AS(ColoredPermutation::parse("-1", 3), std::invalid_argument);
  CHECK_THROWS_AS(ColoredPermutation::parse("1^3", 3), std::invalid_argument);
  CHECK_THROWS_AS(ColoredPermutation::parse("1^x", 3), std::invalid_argument);
  CHECK_THROWS_AS(ColoredPermutation::parse("1 1", 3), std::invalid_argument);
}

TEST_CASE("enumeration of the wreath product") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n) {
      std::uint64_t count = 0;
      ColoredPermutation prev;
      bool increasing = true;
      for_each_colored(n, r, [&](const ColoredPermutation& s) {
        if (count > 0 && !(prev < s)) increasing = false;
        prev = s;
        ++count;
      });
      CHECK(count == colored_count(n, r));
      CHECK(increasing);
    }
}

TEST_CASE("letter orders") {
  // friends: 1 < 1^1 < 2 < 2^1
  CHECK(letter_less(OrderKind::Friends, 1, 0, 1, 1, 2));
  CHECK(letter_less(OrderKind::Friends, 1, 1, 2, 0, 2));
  // color: 1^2 < 2^2 < 1^1 < 2^1 < 1 < 2
  CHECK(letter_less(OrderKind::Color, 2, 2, 1, 1, 3));
  CHECK(letter_less(OrderKind::Color, 2, 1, 1, 0, 3));
  CHECK(letter_less(OrderKind::Color, 1, 1, 2, 1, 3));
  // natural: -2 < -1 < 1 < 2
  CHECK(letter_less(OrderKind::Natural, 2, 1, 1, 1, 2));
  CHECK(letter_less(OrderKind::Natural, 1, 1, 1, 0, 2));
  CHECK_THROWS_AS(letter_less(OrderKind::Natural, 1, 0, 2, 0, 3), std::invalid_argument);
}

TEST_CASE("colored statistics of the running example") {
  ColoredStats st = colored_stats(ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3));
  CHECK(st.fixa == 1);
  CHECK(st.wexa == 2);
  CHECK(st.dropa == 2);
  CHECK(st.wexc == 2);
  CHECK(st.dropc == 1);
  CHECK(st.fixc == 0);
  CHECK(st.csumw == 2);
  CHECK(st.csumd == 2);
  CHECK(st.csum == 4);
  CHECK(st.exca == 1);
  CHECK(st.fexc == 3 * 1 + 4);
  CHECK(cros_colored(ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3)) == 6);
}

TEST_CASE("degenerate colorings") {
  Permutation p = Permutation::parse("3 1 4 2 5");
  for (int r = 1; r <= 3; ++r) {
    ColoredStats st = colored_stats(ColoredPermutation::uncolored(p, r));
    CHECK(st.fexc == r * linear_stats(p).exc);
    CHECK(st.csum == 0);
  }
  const int n = 4, r = 3;
  ColoredPermutation top(Permutation::identity(n), std::vector<int>(n, r - 1), r);
  ColoredStats st = colored_stats(top);
  CHECK(st.fixc == n);
  CHECK(st.fixa == 0);
  CHECK(st.csum == n * (r - 1));
  CHECK(cros_colored(ColoredPermutation::uncolored(Permutation::identity(5), 2)) == 0);
  CHECK(cros_colored(ColoredPermutation::uncolored(Permutation::parse("9 3 7 4 6 10 5 8 1 2"), 1)) == 5);
}

TEST_CASE("statistic identities over small wreath products") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= (r <= 2 ? 6 : 5); ++n) {
      bool ok = true;
      for_each_colored(n, r, [&](const ColoredPermutation& s) {
        ColoredStats st = colored_stats(s);
        if (st.exc_friends != (st.wexa - st.fixa) + st.wexc) ok = false;
        if (st.fexc != r * (st.wexa - st.fixa) + st.csum) ok = false;
        if (st.csum != st.csumw + st.csumd) ok = false;
        if (st.dropa + st.dropc + st.wexa + st.wexc != n) ok = false;
      });
      CHECK_MESSAGE(ok, "n = " << n << ", r = " << r);
    }
}

TEST_CASE("colored crossings reduce to type A crossings") {
  for (int n = 0; n <= 8; ++n) {
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& p) {
      if (cros_colored(ColoredPermutation::uncolored(p, 1)) != crossing_stats(p).cros) ok = false;
    });
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("B-excedances and B-descents") {
  ColoredPermutation id = ColoredPermutation::uncolored(Permutation::identity(3), 2);
  CHECK(b_excedance_stats(id).exc_B == 0);
  CHECK(b_excedance_stats(ColoredPermutation::parse("-1", 2)).exc_B == 1);
  CHECK_THROWS_AS(b_excedance_stats(ColoredPermutation::parse("1", 3)), std::invalid_argument);

  for (int n = 1; n <= 6; ++n) {
    std::vector<long> exc(static_cast<std::size_t>(n) + 1), excb(exc), desb(exc);
    for_each_colored(n, 2, [&](const ColoredPermutation& s) {
      ++exc[static_cast<std::size_t>(colored_stats(s).exc_friends)];
      BExcedanceStats b = b_excedance_stats(s);
      ++excb[static_cast<std::size_t>(b.exc_B)];
      ++desb[static_cast<std::size_t>(b.des_B)];
    });
    CHECK_MESSAGE(from_counts(exc) == from_counts(excb), "n = " << n);
    CHECK_MESSAGE(from_counts(exc) == from_counts(desb), "n = " << n);
  }
}

TEST_CASE("colored derangements") {
  CHECK(derangements_r(1, 2).size() == 1);
  CHECK(derangements_r(1, 2)[0].to_signed_string() == "-1");
  CHECK(derangements_r(2, 2).size() == 5);
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 4; ++n) counts.push_back(derangements_r(n, 1).size());
  CHECK(counts == std::vector<std::size_t>{0, 1, 2, 9});
  for (const auto& s : derangements_r(3, 3)) CHECK(is_colored_derangement(s));
}

TEST_CASE("derangement polynomials") {
  CHECK(D_poly(0, 2) == P({1}));
  CHECK(d_poly(0, 3) == P({1}));
  CHECK(D_poly(1, 2) == P({0, 1}));
  CHECK(D_poly(2, 2) == P({0, 1, 3, 1}));
  CHECK(D_poly(3, 2) == P({0, 1, 7, 13, 7, 1}));
  CHECK(D_poly(4, 2) == P({0, 1, 15, 57, 87, 57, 15, 1}));
  CHECK(d_poly(1, 2) == P({0, 1}));
  CHECK(d_poly(2, 2) == P({0, 4, 1}));
  CHECK(d_poly(3, 2) == P({0, 8, 20, 1}));
  CHECK(d_poly(4, 2) == P({0, 16, 144, 72, 1}));
  CHECK(D_poly(2, 1) == P({0, 1}));

  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 6; ++n) {
      IntPoly D = D_poly(n, r);
      CHECK_MESSAGE(is_strictly_unimodal_symmetric(D, static_cast<unsigned>(r * n)), "n = " << n << ", r = " << r);
    }
}
