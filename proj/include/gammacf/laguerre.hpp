#pragma once

// Motzkin paths, r-colored Laguerre histories and the bijection Phi from
// colored permutations to histories built from partial pignose diagrams.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammacf/cfrac.hpp"
#include "gammacf/colored.hpp"
#include "gammacf/mpoly.hpp"
#include "gammacf/weight_params.hpp"

namespace gammacf {

enum class Step { NE, E, SE };

const char* step_name(Step s);
Step parse_step(const std::string& name);

struct MotzkinPath {
  std::vector<Step> steps;

  std::size_t size() const { return steps.size(); }
  // Starting height of every step, plus the final height: n + 1 values.
  std::vector<int> heights() const;
  // Never below zero and ending at zero.
  bool is_valid() const;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
};

struct Label {
  int p = 0;
  int q = 0;
  friend bool operator==(const Label&, const Label&) = default;
};

struct LaguerreHistory {
  MotzkinPath path;
  std::vector<Label> labels;
  int r = 1;

  std::size_t size() const { return path.size(); }
  friend bool operator==(const LaguerreHistory&, const LaguerreHistory&) = default;
};

struct HistoryCheck {
  bool ok = true;
  // Index (1-based step) of the first violation; 0 when ok or when the
  // violation is global.
  std::size_t step = 0;
  std::string message;
};

HistoryCheck validate_history(const LaguerreHistory& h);

class InvalidHistory : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Admissible labels for a step of the given kind starting at height h.
std::vector<Label> admissible_labels(Step s, int h, int r);

// Every valid history of length n, depth-first with steps ordered NE, E, SE
// and labels in admissible_labels order.
template <class F>
void for_each_history(int n, int r, F&& f);

std::uint64_t count_histories(int n, int r);
std::vector<LaguerreHistory> enumerate_histories(int n, int r);

LaguerreHistory phi(const ColoredPermutation& s);
// Throws InvalidHistory if h is not a valid history.
ColoredPermutation phi_inverse(const LaguerreHistory& h);

// sum over steps of (p-1 for p > 0) + (q-1 for q > 0) plus the height met by
// every colored half-arc; equals the colored crossing number of the preimage.
int history_crossings(const LaguerreHistory& h);

// {"steps":["NE",...],"labels":[[p,q],...],"r":R}
std::string to_json(const LaguerreHistory& h);
LaguerreHistory history_from_json(const std::string& text);
// One line per step: index, step, height, label.
std::string ascii_dump(const LaguerreHistory& h);

// ---------------------------------------------------------------------------
// Weights.

// Variable order for symbolic weights.
inline const std::array<std::string, 9> kWeightVarNames = {"q", "t", "tt", "w", "ww", "x", "xx", "y", "yy"};
WeightParams<MPoly> symbolic_weight_params();
std::string format_weight(const MPoly& m);

template <class R>
R left_weight(int z, int h, const WeightParams<R>& wp) {
  if (z > 0) return ring_pow(wp.q, static_cast<unsigned>(z - 1));
  if (z == 0) return wp.t;
  return wp.w * ring_pow(wp.y, static_cast<unsigned>(-z)) * ring_pow(wp.q, static_cast<unsigned>(h));
}

template <class R>
R right_weight(int z, int h, const WeightParams<R>& wp) {
  if (z > 0) return ring_pow(wp.q, static_cast<unsigned>(z - 1));
  if (z == 0) return wp.tt;
  return wp.ww * ring_pow(wp.yy, static_cast<unsigned>(-z)) * ring_pow(wp.q, static_cast<unsigned>(h));
}

// Weight of a step starting at height h with label (p, q). A color-0 fixed
// point has label (0, 1) and a colored fixed point has label (p < 0, h + 1).
template <class R>
R step_weight(int h, Label l, const WeightParams<R>& wp) {
  if (l.p > 0) return left_weight(l.p, h, wp) * right_weight(l.q, h, wp);
  R base = left_weight(l.p, h, wp) * right_weight(l.q, h + 1, wp);
  if (l.p == 0 && l.q == 1) return wp.x * base;
  if (l.p < 0 && l.q == h + 1) return wp.xx * base;
  return base;
}

template <class R>
R history_weight(const LaguerreHistory& hist, const WeightParams<R>& wp) {
  const std::vector<int> hs = hist.path.heights();
  R acc(1);
  for (std::size_t k = 0; k < hist.size(); ++k) acc = acc * step_weight(hs[k], hist.labels[k], wp);
  return acc;
}

// q^cros t^wexa tt^dropa w^wexc ww^dropc x^fixa xx^fixc y^csumw yy^csumd.
template <class R>
R sigma_weight(const ColoredPermutation& s, const WeightParams<R>& wp) {
  const ColoredStats st = colored_stats(s);
  auto pw = [](const R& b, int e) { return ring_pow(b, static_cast<unsigned>(e)); };
  return pw(wp.q, cros_colored(s)) * pw(wp.t, st.wexa) * pw(wp.tt, st.dropa) * pw(wp.w, st.wexc) *
         pw(wp.ww, st.dropc) * pw(wp.x, st.fixa) * pw(wp.xx, st.fixc) * pw(wp.y, st.csumw) * pw(wp.yy, st.csumd);
}

// Sums of step weights over the admissible labels of NE (a), E (b) and SE
// (c) steps starting at height h.
template <class R>
WreathCoefficients<R> label_weight_sums(int h, int r, const WeightParams<R>& wp) {
  WreathCoefficients<R> out{R(0), R(0), R(0)};
  for (const Label& l : admissible_labels(Step::NE, h, r)) out.a = out.a + step_weight(h, l, wp);
  for (const Label& l : admissible_labels(Step::E, h, r)) out.b = out.b + step_weight(h, l, wp);
  for (const Label& l : admissible_labels(Step::SE, h, r)) out.c = out.c + step_weight(h, l, wp);
  return out;
}

namespace detail {

template <class F>
void history_dfs(int n, int r, LaguerreHistory& cur, int height, F& f) {
  const int k = static_cast<int>(cur.size());
  if (k == n) {
    if (height == 0) f(static_cast<const LaguerreHistory&>(cur));
    return;
  }
  const int remaining = n - k;
  for (Step s : {Step::NE, Step::E, Step::SE}) {
    const int next = height + (s == Step::NE ? 1 : s == Step::SE ? -1 : 0);
    if (next < 0 || next > remaining - 1) continue;
    for (const Label& l : admissible_labels(s, height, r)) {
      cur.path.steps.push_back(s);
      cur.labels.push_back(l);
      history_dfs(n, r, cur, next, f);
      cur.path.steps.pop_back();
      cur.labels.pop_back();
    }
  }
}

}  // namespace detail

template <class F>
void for_each_history(int n, int r, F&& f) {
  if (n < 0 || r < 1) throw std::invalid_argument("for_each_history: need n >= 0 and r >= 1");
  LaguerreHistory cur;
  cur.r = r;
  detail::history_dfs(n, r, cur, 0, f);
}

}  // namespace gammacf
