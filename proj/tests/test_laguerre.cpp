#include <set>

#include "doctest.h"
#include "gammacf/laguerre.hpp"

using namespace gammacf;

namespace {

LaguerreHistory make_history(const std::vector<std::string>& steps, const std::vector<Label>& labels, int r) {
  LaguerreHistory h;
  h.r = r;
  for (const std::string& s : steps) h.path.steps.push_back(parse_step(s));
  h.labels = labels;
  return h;
}

MPoly monomial(const std::vector<std::pair<std::size_t, unsigned>>& powers) {
  MPoly m(1);
  for (const auto& [var, e] : powers) m = m * ring_pow(MPoly::var(var), e);
  return m;
}

}  // namespace

TEST_CASE("path heights and validity") {
  MotzkinPath p;
  p.steps = {Step::NE, Step::E, Step::SE};
  CHECK(p.heights() == std::vector<int>{0, 1, 1, 0});
  CHECK(p.is_valid());
  p.steps = {Step::SE, Step::NE};
  CHECK_FALSE(p.is_valid());
  p.steps = {Step::NE};
  CHECK_FALSE(p.is_valid());
  CHECK_THROWS_AS(parse_step("N"), InvalidHistory);
}

TEST_CASE("eleven-step history is valid") {
  const LaguerreHistory h = make_history(
      {"E", "NE", "NE", "E", "NE", "SE", "SE", "E", "NE", "SE", "SE"},
      {{-1, 1}, {0, -2}, {-2, 0}, {-2, 3}, {0, -1}, {3, 1}, {1, 1}, {1, 0}, {0, 0}, {1, 2}, {1, 1}}, 3);
  const HistoryCheck c = validate_history(h);
  CHECK(c.ok);
  const ColoredPermutation s = phi_inverse(h);
  CHECK(phi(s) == h);
}

TEST_CASE("invalid histories are rejected") {
  const LaguerreHistory e0 = make_history({"E"}, {{1, 0}}, 2);
  const HistoryCheck c = validate_history(e0);
  CHECK_FALSE(c.ok);
  CHECK(c.step == 1);
  CHECK_THROWS_AS(phi_inverse(e0), InvalidHistory);

  CHECK_FALSE(validate_history(make_history({"NE"}, {{0, 0}}, 1)).ok);
  CHECK_FALSE(validate_history(make_history({"SE", "NE"}, {{1, 1}, {0, 0}}, 1)).ok);
  CHECK_FALSE(validate_history(make_history({"NE", "SE"}, {{0, 0}, {2, 1}}, 1)).ok);
  CHECK_FALSE(validate_history(make_history({"NE", "SE"}, {{-1, 0}, {1, 1}}, 1)).ok);
  CHECK_FALSE(validate_history(make_history({"E"}, {{0, 1}, {0, 1}}, 1)).ok);
  CHECK(validate_history(make_history({"E"}, {{-1, 1}}, 2)).ok);
}

TEST_CASE("history counts are n! r^n") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 6; ++n) CHECK(count_histories(n, r) == colored_count(n, r));
}

TEST_CASE("admissible label counts") {
  for (int r = 1; r <= 4; ++r)
    for (int h = 0; h <= 4; ++h) {
      CHECK(admissible_labels(Step::NE, h, r).size() == static_cast<std::size_t>(r * r));
      CHECK(admissible_labels(Step::E, h, r).size() == static_cast<std::size_t>(r * (h + 1) + h * r));
      CHECK(admissible_labels(Step::SE, h, r).size() == static_cast<std::size_t>(h * h));
    }
}

TEST_CASE("figure example") {
  const ColoredPermutation s = ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3);
  const LaguerreHistory h = phi(s);
  const LaguerreHistory expected = make_history({"NE", "NE", "E", "E", "SE", "E", "SE"},
                                                {{0, -2}, {-1, 0}, {1, 0}, {-1, 1}, {2, 2}, {0, 1}, {1, 1}}, 3);
  CHECK(h == expected);
  CHECK(phi_inverse(expected) == s);

  const WeightParams<MPoly> wp = symbolic_weight_params();
  const MPoly want = monomial({{0, 6}, {1, 2}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {7, 2}, {8, 2}});
  CHECK(history_weight(h, wp) == want);
  CHECK(sigma_weight(s, wp) == want);
  CHECK(format_weight(want) == "q^6*t^2*tt^2*w^2*ww*x*y^2*yy^2");
  CHECK(history_crossings(h) == 6);
}

TEST_CASE("identity maps to a flat path") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      const LaguerreHistory h = phi(ColoredPermutation::uncolored(Permutation::identity(n), r));
      for (std::size_t k = 0; k < h.size(); ++k) {
        CHECK(h.path.steps[k] == Step::E);
        CHECK(h.labels[k] == Label{0, 1});
      }
    }
}

TEST_CASE("phi is a weight-preserving bijection") {
  const WeightParams<MPoly> wp = symbolic_weight_params();
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= (r == 3 ? 4 : 5); ++n) {
      std::set<std::string> images;
      std::uint64_t seen = 0;
      for_each_colored(n, r, [&](const ColoredPermutation& s) {
        const LaguerreHistory h = phi(s);
        REQUIRE(validate_history(h).ok);
        CHECK(phi_inverse(h) == s);
        CHECK(history_weight(h, wp) == sigma_weight(s, wp));
        CHECK(history_crossings(h) == cros_colored(s));
        images.insert(to_json(h));
        ++seen;
      });
      CHECK(images.size() == seen);
      CHECK(seen == count_histories(n, r));
    }
}

TEST_CASE("phi_inverse covers every history") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n)
      for_each_history(n, r, [&](const LaguerreHistory& h) { CHECK(phi(phi_inverse(h)) == h); });
}

TEST_CASE("label weight sums reproduce the wreath coefficients") {
  const WeightParams<MPoly> wp = symbolic_weight_params();
  for (int r = 1; r <= 3; ++r)
    for (unsigned h = 0; h <= 4; ++h) {
      const WreathCoefficients<MPoly> got = label_weight_sums(static_cast<int>(h), r, wp);
      const WreathCoefficients<MPoly> want = wreath_coefficients(h, r, wp);
      CHECK(got.a == want.a);
      CHECK(got.b == want.b);
      CHECK(got.c == want.c);
    }
}

TEST_CASE("JSON round trip and dump") {
  const LaguerreHistory h = phi(ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3));
  const std::string js = to_json(h);
  CHECK(js.rfind("{\"steps\":[\"NE\",\"NE\",\"E\"", 0) == 0);
  CHECK(history_from_json(js) == h);
  CHECK_THROWS_AS(history_from_json("{\"steps\":[\"X\"],\"labels\":[[0,1]],\"r\":1}"), InvalidHistory);
  CHECK_THROWS_AS(history_from_json("[1,2]"), InvalidHistory);
  CHECK_THROWS_AS(history_from_json("{\"steps\":[\"E\"],\"labels\":[[0]],\"r\":1}"), InvalidHistory);
  const std::string dump = ascii_dump(h);
  CHECK(dump.rfind("1 NE h=0 (0,-2) #\n", 0) == 0);
}
