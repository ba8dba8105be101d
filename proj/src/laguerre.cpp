#include "gammacf/laguerre.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace gammacf {

const char* step_name(Step s) {
  switch (s) {
    case Step::NE:
      return "NE";
    case Step::E:
      return "E";
    case Step::SE:
      return "SE";
  }
  return "?";
}

Step parse_step(const std::string& name) {
  if (name == "NE") return Step::NE;
  if (name == "E") return Step::E;
  if (name == "SE") return Step::SE;
  throw InvalidHistory("unknown step '" + name + "'");
}

std::vector<int> MotzkinPath::heights() const {
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t k = 0; k < steps.size(); ++k)
    h[k + 1] = h[k] + (steps[k] == Step::NE ? 1 : steps[k] == Step::SE ? -1 : 0);
  return h;
}

bool MotzkinPath::is_valid() const {
  const std::vector<int> h = heights();
  return std::all_of(h.begin(), h.end(), [](int v) { return v >= 0; }) && h.back() == 0;
}

std::vector<Label> admissible_labels(Step s, int h, int r) {
  std::vector<Label> out;
  const int lo = -(r - 1);
  switch (s) {
    case Step::NE:
      for (int p = lo; p <= 0; ++p)
        for (int q = lo; q <= 0; ++q) out.push_back({p, q});
      break;
    case Step::E:
      for (int p = lo; p <= 0; ++p)
        for (int q = 1; q <= h + 1; ++q) out.push_back({p, q});
      for (int p = 1; p <= h; ++p)
        for (int q = lo; q <= 0; ++q) out.push_back({p, q});
      break;
    case Step::SE:
      for (int p = 1; p <= h; ++p)
        for (int q = 1; q <= h; ++q) out.push_back({p, q});
      break;
  }
  return out;
}

namespace {

bool in_range(Step s, int h, int r, Label l) {
  const int lo = -(r - 1);
  auto non_pos = [&](int v) { return lo <= v && v <= 0; };
  switch (s) {
    case Step::NE:
      return non_pos(l.p) && non_pos(l.q);
    case Step::E:
      return (1 <= l.p && l.p <= h && non_pos(l.q)) || (non_pos(l.p) && 1 <= l.q && l.q <= h + 1);
    case Step::SE:
      return 1 <= l.p && l.p <= h && 1 <= l.q && l.q <= h;
  }
  return false;
}

std::string label_text(Label l) { return "(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")"; }

}  // namespace

HistoryCheck validate_history(const LaguerreHistory& h) {
  HistoryCheck res;
  auto fail = [&](std::size_t step, std::string msg) {
    res.ok = false;
    res.step = step;
    res.message = std::move(msg);
    return res;
  };
  if (h.r < 1) return fail(0, "radix r must be at least 1");
  if (h.labels.size() != h.path.size()) return fail(0, "label count differs from path length");
  const std::vector<int> hs = h.path.heights();
  for (std::size_t k = 0; k < h.path.size(); ++k) {
    if (hs[k + 1] < 0) return fail(k + 1, "path goes below height 0 at step " + std::to_string(k + 1));
    if (!in_range(h.path.steps[k], hs[k], h.r, h.labels[k]))
      return fail(k + 1, std::string("label ") + label_text(h.labels[k]) + " not admissible for " +
                             step_name(h.path.steps[k]) + " step at height " + std::to_string(hs[k]) + " (step " +
                             std::to_string(k + 1) + ")");
  }
  if (hs.back() != 0) return fail(0, "path ends at height " + std::to_string(hs.back()));
  return res;
}

std::uint64_t count_histories(int n, int r) {
  std::uint64_t c = 0;
  for_each_history(n, r, [&](const LaguerreHistory&) { ++c; });
  return c;
}

std::vector<LaguerreHistory> enumerate_histories(int n, int r) {
  std::vector<LaguerreHistory> out;
  for_each_history(n, r, [&](const LaguerreHistory& h) { out.push_back(h); });
  return out;
}

LaguerreHistory phi(const ColoredPermutation& s) {
  const int n = s.size();
  const std::vector<int> pre = s.pi().inverse().word();
  auto pi = [&](int i) { return s.value(i); };
  auto z = [&](int i) { return s.color(i); };

  LaguerreHistory out;
  out.r = s.radix();
  for (int k = 1; k <= n; ++k) {
    Label l;
    if (pi(k) >= k) {
      l.p = -z(k);
    } else {
      int count = 0;
      for (int j = 1; j <= n; ++j) {
        if (z(k) == 0) {
          if (z(j) == 0 && pi(k) < pi(j) && pi(j) < k && k < j) ++count;
        } else {
          if (z(j) == 0 && pi(j) < k && k < j) ++count;
          if (z(j) > 0 && pi(j) < pi(k) && pi(k) < k && k < j) ++count;
        }
      }
      l.p = count + 1;
    }

    const int ell = pre[static_cast<std::size_t>(k - 1)];
    if (k < ell) {
      l.q = -z(ell);
    } else {
      int count = 0;
      for (int j = 1; j <= n; ++j) {
        if (z(ell) == 0) {
          if (z(j) == 0 && ell < j && j <= k && k < pi(j)) ++count;
        } else {
          if (z(j) == 0 && j <= k && k < pi(j)) ++count;
          if (z(j) > 0 && j < ell && k < pi(j)) ++count;
        }
      }
      l.q = count + 1;
    }

    const int positive = (l.p > 0) + (l.q > 0);
    out.path.steps.push_back(positive == 2 ? Step::SE : positive == 1 ? Step::E : Step::NE);
    out.labels.push_back(l);
  }
  return out;
}

namespace {

struct HalfArc {
  int anchor;  // position (upper arcs) or value (lower arcs)
  int color;
};

// Plain arcs by decreasing anchor, then colored arcs by increasing anchor.
std::vector<HalfArc> candidate_order(const std::vector<HalfArc>& open) {
  std::vector<HalfArc> plain, colored;
  for (const HalfArc& a : open) (a.color == 0 ? plain : colored).push_back(a);
  std::sort(plain.begin(), plain.end(), [](const HalfArc& a, const HalfArc& b) { return a.anchor > b.anchor; });
  std::sort(colored.begin(), colored.end(), [](const HalfArc& a, const HalfArc& b) { return a.anchor < b.anchor; });
  plain.insert(plain.end(), colored.begin(), colored.end());
  return plain;
}

HalfArc take(std::vector<HalfArc>& open, int index, std::size_t step) {
  const std::vector<HalfArc> order = candidate_order(open);
  if (index < 1 || index > static_cast<int>(order.size()))
    throw InvalidHistory("label selects a missing half-arc at step " + std::to_string(step));
  const HalfArc chosen = order[static_cast<std::size_t>(index - 1)];
  open.erase(std::find_if(open.begin(), open.end(), [&](const HalfArc& a) { return a.anchor == chosen.anchor; }));
  return chosen;
}

}  // namespace

ColoredPermutation phi_inverse(const LaguerreHistory& h) {
  const HistoryCheck check = validate_history(h);
  if (!check.ok) throw InvalidHistory(check.message);
  const int n = static_cast<int>(h.size());
  std::vector<int> pi(static_cast<std::size_t>(n), 0), z(static_cast<std::size_t>(n), 0);
  std::vector<HalfArc> upper, lower;
  for (int k = 1; k <= n; ++k) {
    const Label l = h.labels[static_cast<std::size_t>(k - 1)];
    const std::size_t step = static_cast<std::size_t>(k);
    if (l.p > 0) {
      const HalfArc a = take(lower, l.p, step);
      pi[static_cast<std::size_t>(k - 1)] = a.anchor;
      z[static_cast<std::size_t>(k - 1)] = a.color;
    } else {
      z[static_cast<std::size_t>(k - 1)] = -l.p;
      upper.push_back({k, -l.p});
    }
    if (l.q > 0) {
      const HalfArc a = take(upper, l.q, step);
      pi[static_cast<std::size_t>(a.anchor - 1)] = k;
    } else {
      lower.push_back({k, -l.q});
    }
  }
  if (!upper.empty() || !lower.empty()) throw InvalidHistory("history leaves open half-arcs");
  return ColoredPermutation(Permutation(std::move(pi)), std::move(z), h.r);
}

int history_crossings(const LaguerreHistory& h) {
  const std::vector<int> hs = h.path.heights();
  int total = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const Label l = h.labels[k];
    const int height = hs[k];
    if (l.p > 0) total += l.p - 1;
    if (l.p < 0) total += height;
    const int right_height = l.p > 0 ? height : height + 1;
    if (l.q > 0) total += l.q - 1;
    if (l.q < 0) total += right_height;
  }
  return total;
}

std::string to_json(const LaguerreHistory& h) {
  std::string s = "{\"steps\":[";
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k) s += ',';
    s += '"';
    s += step_name(h.path.steps[k]);
    s += '"';
  }
  s += "],\"labels\":[";
  for (std::size_t k = 0; k < h.labels.size(); ++k) {
    if (k) s += ',';
    s += "[" + std::to_string(h.labels[k].p) + "," + std::to_string(h.labels[k].q) + "]";
  }
  s += "],\"r\":" + std::to_string(h.r) + "}";
  return s;
}

LaguerreHistory history_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidHistory(std::string("history JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("steps") || !j.contains("labels") || !j.contains("r"))
    throw InvalidHistory("history JSON needs \"steps\", \"labels\" and \"r\"");
  LaguerreHistory h;
  try {
    h.r = j.at("r").get<int>();
    for (const auto& s : j.at("steps")) h.path.steps.push_back(parse_step(s.get<std::string>()));
    for (const auto& l : j.at("labels")) {
      if (!l.is_array() || l.size() != 2) throw InvalidHistory("history JSON: each label is a pair [p,q]");
      h.labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidHistory(std::string("history JSON: ") + e.what());
  }
  return h;
}

std::string ascii_dump(const LaguerreHistory& h) {
  std::ostringstream os;
  const std::vector<int> hs = h.path.heights();
  for (std::size_t k = 0; k < h.size(); ++k) {
    os << (k + 1) << ' ' << step_name(h.path.steps[k]) << " h=" << hs[k] << ' ' << label_text(h.labels[k]) << ' '
       << std::string(static_cast<std::size_t>(hs[k + 1]), '#') << '\n';
  }
  return os.str();
}

WeightParams<MPoly> symbolic_weight_params() {
  WeightParams<MPoly> wp;
  wp.q = MPoly::var(0);
  wp.t = MPoly::var(1);
  wp.tt = MPoly::var(2);
  wp.w = MPoly::var(3);
  wp.ww = MPoly::var(4);
  wp.x = MPoly::var(5);
  wp.xx = MPoly::var(6);
  wp.y = MPoly::var(7);
  wp.yy = MPoly::var(8);
  return wp;
}

std::string format_weight(const MPoly& m) { return m.format(kWeightVarNames); }

}  // namespace gammacf
