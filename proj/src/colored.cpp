#include "gammacf/colored.hpp"

#include <sstream>
#include <stdexcept>

namespace gammacf {

ColoredPermutation::ColoredPermutation(Permutation pi, std::vector<int> z, int r)
    : pi_(std::move(pi)), z_(std::move(z)), r_(r) {
  if (r_ < 1) throw std::invalid_argument("radix r must be at least 1");
  if (static_cast<int>(z_.size()) != pi_.size()) throw std::invalid_argument("color vector has the wrong length");
  for (int c : z_)
    if (c < 0 || c >= r_) throw std::invalid_argument("color " + std::to_string(c) + " outside 0..r-1");
}

ColoredPermutation ColoredPermutation::uncolored(Permutation pi, int r) {
  std::vector<int> z(static_cast<std::size_t>(pi.size()), 0);
  return ColoredPermutation(std::move(pi), std::move(z), r);
}

ColoredPermutation ColoredPermutation::parse(std::string_view text, int r) {
  std::istringstream in{std::string(text)};
  std::vector<int> values, colors;
  std::string tok;
  auto to_int = [](const std::string& s, const std::string& whole) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad colored letter '" + whole + "'");
    }
    if (used != s.size() || s.empty() || s[0] == '+' || s[0] == '-')
      throw std::invalid_argument("bad colored letter '" + whole + "'");
    return v;
  };
  while (in >> tok) {
    std::string body = tok;
    int color = 0;
    if (!body.empty() && body[0] == '-') {
      if (r != 2) throw std::invalid_argument("signed letters are accepted only for r = 2");
      body = body.substr(1);
      color = 1;
    }
    const auto caret = body.find('^');
    if (caret != std::string::npos) {
      if (color != 0) throw std::invalid_argument("bad colored letter '" + tok + "'");
      color = to_int(body.substr(caret + 1), tok);
      body = body.substr(0, caret);
    }
    values.push_back(to_int(body, tok));
    colors.push_back(color);
  }
  return ColoredPermutation(Permutation(std::move(values)), std::move(colors), r);
}

std::string ColoredPermutation::to_string() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(value(i));
    if (color(i) != 0) out += "^" + std::to_string(color(i));
  }
  return out;
}

std::string ColoredPermutation::to_signed_string() const {
  if (r_ > 2) throw std::invalid_argument("signed notation needs r <= 2");
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) out += ' ';
    if (color(i) != 0) out += '-';
    out += std::to_string(value(i));
  }
  return out;
}

bool next_colored(ColoredPermutation& s) {
  for (auto it = s.z_.rbegin(); it != s.z_.rend(); ++it) {
    if (*it + 1 < s.r_) {
      ++*it;
      return true;
    }
    *it = 0;
  }
  return next_permutation(s.pi_);
}

std::uint64_t colored_count(int n, int r) {
  std::uint64_t c = permutation_count(n);
  for (int i = 0; i < n; ++i) c *= static_cast<std::uint64_t>(r);
  return c;
}

bool letter_less(OrderKind kind, int a, int ca, int b, int cb, int r) {
  switch (kind) {
    case OrderKind::Friends:
      return a != b ? a < b : ca < cb;
    case OrderKind::Color:
      return ca != cb ? ca > cb : a < b;
    case OrderKind::Natural: {
      if (r > 2) throw std::invalid_argument("natural order is defined only for r <= 2");
      const int sa = ca ? -a : a;
      const int sb = cb ? -b : b;
      return sa < sb;
    }
  }
  return false;
}

ColoredStats colored_stats(const ColoredPermutation& s) {
  ColoredStats st;
  const int r = s.radix();
  for (int i = 1; i <= s.size(); ++i) {
    const int v = s.value(i);
    const int c = s.color(i);
    if (letter_less(OrderKind::Friends, i, 0, v, c, r)) ++st.exc_friends;
    if (letter_less(OrderKind::Color, i, 0, v, c, r)) ++st.exca;
    st.csum += c;
    if (v >= i) {
      st.csumw += c;
      if (c == 0) ++st.wexa;
      else ++st.wexc;
      if (v == i) {
        if (c == 0) ++st.fixa;
        else ++st.fixc;
      }
    } else {
      st.csumd += c;
      if (c == 0) ++st.dropa;
      else ++st.dropc;
    }
  }
  st.fexc = r * st.exca + st.csum;
  return st;
}

int cros_colored(const ColoredPermutation& s) {
  const int n = s.size();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int pi = s.value(i);
    const int zi = s.color(i);
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int pj = s.value(j);
      const int zj = s.color(j);
      if (zi == 0 && zj == 0) {
        if (i < j && j <= pi && pi < pj) ++count;
        else if (pi < pj && pj < i && i < j) ++count;
      } else if (zi > 0 && zj == 0) {
        if (j <= pi && pi < pj) ++count;
        else if (pj < i && i < j) ++count;
      } else if (zi > 0 && zj > 0) {
        if (i < j && pj < pi) ++count;
      }
    }
  }
  return count;
}

BExcedanceStats b_excedance_stats(const ColoredPermutation& s) {
  if (s.radix() != 2) throw std::invalid_argument("B-excedances are defined for r = 2 only");
  const int n = s.size();
  auto signed_at = [&](int i) { return i == 0 ? 0 : (s.color(i) ? -s.value(i) : s.value(i)); };
  BExcedanceStats st;
  for (int i = 1; i <= n; ++i) {
    const int v = signed_at(i);
    const int a = v < 0 ? -v : v;
    if (v < signed_at(a) || v == -i) ++st.exc_B;
  }
  for (int i = 0; i < n; ++i)
    if (signed_at(i) > signed_at(i + 1)) ++st.des_B;
  return st;
}

bool is_colored_derangement(const ColoredPermutation& s) {
  for (int i = 1; i <= s.size(); ++i)
    if (s.value(i) == i && s.color(i) == 0) return false;
  return true;
}

std::vector<ColoredPermutation> derangements_r(int n, int r) {
  std::vector<ColoredPermutation> out;
  for_each_colored_derangement(n, r, [&](const ColoredPermutation& s) { out.push_back(s); });
  return out;
}

IntPoly D_poly(int n, int r) {
  std::vector<long> counts(static_cast<std::size_t>(r * n + 1), 0);
  for_each_colored_derangement(n, r, [&](const ColoredPermutation& s) {
    ++counts[static_cast<std::size_t>(colored_stats(s).fexc)];
  });
  return from_counts(counts);
}

IntPoly d_poly(int n, int r) {
  std::vector<long> counts(static_cast<std::size_t>(n + 1), 0);
  for_each_colored_derangement(n, r, [&](const ColoredPermutation& s) {
    ++counts[static_cast<std::size_t>(colored_stats(s).exc_friends)];
  });
  return from_counts(counts);
}

}  // namespace gammacf
