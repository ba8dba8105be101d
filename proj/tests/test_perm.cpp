#include <map>
#include <set>
#include <tuple>

#include "doctest.h"
#include "gammacf/expand.hpp"
#include "gammacf/perm.hpp"
#include "helpers.hpp"

using namespace gammacf;
using gammacf::testing::P;

namespace {

std::vector<std::string> compact_all(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.compact());
  return out;
}

// Eulerian numbers from the recurrence A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
IntPoly eulerian_recurrence(int n) {
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n) + 1);
  a[0] = {Integer(1)};
  for (int m = 1; m <= n; ++m) {
    a[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m), Integer(0));
    for (int k = 0; k < m; ++k) {
      const auto& prev = a[static_cast<std::size_t>(m - 1)];
      Integer v = 0;
      if (k < static_cast<int>(prev.size())) v += (k + 1) * prev[static_cast<std::size_t>(k)];
      if (k >= 1 && k - 1 < static_cast<int>(prev.size())) v += (m - k) * prev[static_cast<std::size_t>(k - 1)];
      a[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = v;
    }
  }
  return IntPoly(a[static_cast<std::size_t>(n)]);
}

}  // namespace

TEST_CASE("construction, parsing and printing") {
  Permutation p = Permutation::parse("9 3 7 4 6 10 5 8 1 2");
  CHECK(p.size() == 10);
  CHECK(p(1) == 9);
  CHECK(p(10) == 2);
  CHECK(p.to_string() == "9 3 7 4 6 10 5 8 1 2");
  CHECK(Permutation::parse("").size() == 0);
  CHECK_THROWS_AS(Permutation::parse("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1 x"), std::invalid_argument);
  CHECK(p * p.inverse() == Permutation::identity(10));
  CHECK(Permutation::parse("2 3 1").inverse() == Permutation::parse("3 1 2"));
}

TEST_CASE("lexicographic enumeration") {
  std::vector<std::string> seen;
  for_each_permutation(3, [&](const Permutation& p) { seen.push_back(p.compact()); });
  CHECK(seen == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  int count = 0;
  for_each_permutation(0, [&](const Permutation& p) {
    CHECK(p.size() == 0);
    ++count;
  });
  CHECK(count == 1);
  CHECK(permutation_count(8) == 40320);
}

TEST_CASE("linear statistics") {
  LinearStats id = linear_stats(Permutation::identity(4));
  CHECK(id.des == 0);
  CHECK(id.inv == 0);
  CHECK(id.exc == 0);
  CHECK(id.drop == 0);
  CHECK(id.fix == 4);
  CHECK(id.wex == 4);

  LinearStats s = linear_stats(Permutation::parse("9 3 7 4 6 10 5 8 1 2"));
  CHECK(s.drop == 3);
  CHECK(s.fix == 2);
  CHECK(s.exc == 5);

  LinearStats t = linear_stats(Permutation::parse("3 1 4 2"));
  CHECK(t.des == 2);
  CHECK(t.maj == 4);
  CHECK(t.inv == 3);

  LinearStats empty = linear_stats(Permutation());
  CHECK(empty.des + empty.inv + empty.fix == 0);
}

TEST_CASE("Eulerian equidistribution of des, exc and drop") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<long> des(static_cast<std::size_t>(n)), exc(des), drop(des);
    for_each_permutation(n, [&](const Permutation& p) {
      LinearStats s = linear_stats(p);
      ++des[static_cast<std::size_t>(s.des)];
      ++exc[static_cast<std::size_t>(s.exc)];
      ++drop[static_cast<std::size_t>(s.drop)];
    });
    CHECK(from_counts(des) == eulerian_recurrence(n));
    CHECK(from_counts(exc) == from_counts(des));
    CHECK(from_counts(drop) == from_counts(des));
  }
  CHECK(eulerian_recurrence(4) == P({1, 11, 11, 1}));
}

TEST_CASE("crossings and nestings") {
  CrossingStats s = crossing_stats(Permutation::parse("9 3 7 4 6 10 5 8 1 2"));
  CHECK(s.cros == 5);
  CHECK(s.nest == 10);
  CrossingStats id = crossing_stats(Permutation::identity(5));
  CHECK(id.cros == 0);
  CHECK(id.nest == 0);
  CrossingStats two = crossing_stats(Permutation::parse("2 1"));
  CHECK(two.cros == 0);
  CHECK(two.nest == 0);
  // 3 1 2: arcs 1->3, 2->1, 3->2; the lower arcs 2->1 and 3->2 do not cross.
  CrossingStats three = crossing_stats(Permutation::parse("3 1 2"));
  CHECK(three.cros == 0);
  CHECK(three.nest == 0);
  // 2 3 1: upper arcs 1->2, 2->3 share the vertex 2 and count as a crossing.
  CHECK(crossing_stats(Permutation::parse("2 3 1")).cros == 1);
}

TEST_CASE("inversions decompose as drop + cros + 2 nest") {
  for (int n = 0; n <= 8; ++n) {
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& p) {
      LinearStats l = linear_stats(p);
      CrossingStats c = crossing_stats(p);
      if (l.inv != l.drop + c.cros + 2 * c.nest) ok = false;
      LinearStats li = linear_stats(p.inverse());
      if (li.inv != l.inv || li.exc != l.drop) ok = false;
    });
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("cyclic statistics") {
  CyclicStats id = cyclic_stats(Permutation::identity(5));
  CHECK(id.fix == 5);
  CHECK(id.cpeak + id.cvalley + id.cda + id.cdd == 0);

  CyclicStats s = cyclic_stats(Permutation::parse("2 1 4 3"));
  CHECK(s.cvalley == 2);
  CHECK(s.cpeak == 2);
  CHECK(s.cda == 0);
  CHECK(s.cdd == 0);

  for (int n = 1; n <= 7; ++n) {
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& p) {
      CyclicStats c = cyclic_stats(p);
      if (c.cpeak + c.cvalley + c.cda + c.cdd + c.fix != n || c.cpeak != c.cvalley) ok = false;
    });
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("boundary conventions") {
  for (int n = 1; n <= 7; ++n) {
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& p) {
      BoundaryStats zz = boundary_stats(p, BoundaryConvention::PadZeroZero);
      BoundaryStats zn = boundary_stats(p, BoundaryConvention::PadZeroNp1);
      if (zz.peak != zz.valley + 1 || zn.peak != zn.valley) ok = false;
      if (zz.peak + zz.valley + zz.da + zz.dd != n) ok = false;
      if (zn.peak + zn.valley + zn.da + zn.dd != n) ok = false;
    });
    CHECK_MESSAGE(ok, "n = " << n);
  }
  CHECK(boundary_stats(Permutation::parse("1 2 3 4"), BoundaryConvention::PadRightZero).dd == 0);
  CHECK(boundary_stats(Permutation::parse("2 1 3 4"), BoundaryConvention::PadRightZero).dd == 0);
  CHECK(boundary_stats(Permutation::parse("3 2 1"), BoundaryConvention::PadRightZero).dd == 2);
  CHECK(linear_stats(Permutation::parse("2 1 3 4")).des == 1);
}

TEST_CASE("pattern statistics") {
  PatternStats id = pattern_stats(Permutation::identity(6));
  CHECK(id.res + id.res2 + id.les + id.les2 == 0);

  // res: 1 <= i < j <= n-1 with s(j+1) > s(i) > s(j).
  PatternStats s = pattern_stats(Permutation::parse("2 1 3"));
  CHECK(s.res == 1);
  CHECK(s.res2 == 0);
  CHECK(s.les == 0);
  // les: 2 <= i < j <= n with s(i-1) > s(j) > s(i).
  PatternStats t = pattern_stats(Permutation::parse("3 1 2"));
  CHECK(t.les == 1);
  CHECK(t.les2 == 0);
  PatternStats u = pattern_stats(Permutation::parse("1 3 2"));
  CHECK(u.les2 == 1);
  CHECK(pattern_stats(Permutation::parse("2 3 1")).res2 == 1);

  std::vector<long> q(8, 0);
  for (const auto& p : class_DD(4, 1)) {
    PatternStats ps = pattern_stats(p);
    ++q[static_cast<std::size_t>(2 * ps.res + ps.les)];
  }
  CHECK(from_counts(q) == P({0, 2, 3, 2, 1}));
}

TEST_CASE("foremaxima") {
  CHECK(fmax(Permutation::parse("4 2 1 5 7 3 6 8")) == 2);
  for (int n = 0; n <= 7; ++n) CHECK(fmax(Permutation::identity(n)) == n);
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> w;
    for (int v = n; v >= 1; --v) w.push_back(v);
    CHECK(fmax(Permutation(w)) == 0);
  }
  for_each_permutation(6, [](const Permutation& p) {
    if (p(1) == 6 && p(2) < p(1)) {
      // A leading maximum that is followed by a descent blocks all later foremaxima.
      CHECK(fmax(p) == 0);
    }
  });
}

TEST_CASE("distinguished classes") {
  CHECK(compact_all(class_DD(4, 1)) ==
        std::vector<std::string>{"1324", "1423", "2134", "2314", "2413", "3124", "3412", "4123"});
  CHECK(compact_all(class_DD(4, 0)) == std::vector<std::string>{"1234"});
  CHECK(class_DD(0, 0).size() == 1);

  CHECK(compact_all(class_DE(4, 2)) == std::vector<std::string>{"2143", "3412", "3421", "4312", "4321"});
  for (const auto& p : class_DE(4, 2)) {
    CyclicStats c = cyclic_stats(p);
    CHECK(c.cda == 0);
    CHECK(c.cvalley == 2);
  }

  CHECK(compact_all(class_coderangements(4)) ==
        std::vector<std::string>{"2143", "3142", "3241", "4123", "4132", "4213", "4231", "4312", "4321"});

  std::vector<std::size_t> derangement_counts;
  for (int n = 1; n <= 7; ++n) derangement_counts.push_back(class_derangements(n).size());
  CHECK(derangement_counts == std::vector<std::size_t>{0, 1, 2, 9, 44, 265, 1854});

  CHECK(class_Snkj(4, 2, 0).size() == class_DE(4, 2).size());
  CHECK_THROWS_AS(class_DD(10, 1), std::invalid_argument);
}

TEST_CASE("Foata-Schutzenberger expansion of Eulerian polynomials") {
  for (int n = 1; n <= 8; ++n) {
    GammaVector<Integer> g = gamma_expand(eulerian_recurrence(n), static_cast<unsigned>(n - 1));
    std::vector<long> sizes(g.gammas.size(), 0);
    for_each_permutation(n, [&](const Permutation& p) {
      if (boundary_stats(p, BoundaryConvention::PadRightZero).dd != 0) return;
      int des = linear_stats(p).des;
      if (static_cast<std::size_t>(des) < sizes.size()) ++sizes[static_cast<std::size_t>(des)];
    });
    std::vector<Integer> expect;
    for (long s : sizes) expect.emplace_back(s);
    CHECK(g.gammas == expect);
  }
}

TEST_CASE("vincular patterns") {
  VincularCounts id = vincular_counts(Permutation::identity(5));
  CHECK(id.p132 == 0);
  CHECK(id.p231 == 0);
  CHECK(vincular_counts(Permutation::parse("2 3 1")).p231 == 1);
  CHECK(vincular_counts(Permutation::parse("1 3 2")).p132 == 1);

  // Joint distribution of (13-2, 2-31, des) agrees with (nest, cros, drop).
  for (int n = 1; n <= 6; ++n) {
    std::map<std::tuple<int, int, int>, long> lhs, rhs;
    for_each_permutation(n, [&](const Permutation& p) {
      VincularCounts v = vincular_counts(p);
      ++lhs[{v.p132, v.p231, linear_stats(p).des}];
      CrossingStats c = crossing_stats(p);
      ++rhs[{c.nest, c.cros, linear_stats(p).drop}];
    });
    CHECK_MESSAGE(lhs == rhs, "n = " << n);
  }
}

TEST_CASE("joint equidistribution of cyclic and linear statistic vectors") {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, long> lhs, rhs;
    for_each_permutation(n, [&](const Permutation& p) {
      CrossingStats c = crossing_stats(p);
      CyclicStats cy = cyclic_stats(p);
      ++lhs[{c.nest, c.cros, linear_stats(p).drop, cy.cda, cy.cdd, cy.cvalley, cy.fix}];
      PatternStats ps = pattern_stats(p);
      BoundaryStats b = boundary_stats(p, BoundaryConvention::PadZeroNp1);
      int fm = fmax(p);
      ++rhs[{ps.res2, ps.les, linear_stats(p).des, b.da - fm, b.dd, b.valley, fm}];
    });
    CHECK_MESSAGE(lhs == rhs, "n = " << n);
  }
}
