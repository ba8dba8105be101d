#include "gammacf/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gammacf {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> w;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad permutation entry '" + tok + "'");
    w.push_back(v);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composition of permutations of different sizes");
  std::vector<int> w(a.word_.size());
  for (int i = 1; i <= a.size(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::string Permutation::compact() const {
  std::string out;
  for (int v : word_) out += std::to_string(v);
  return out;
}

bool next_permutation(Permutation& p) { return std::next_permutation(p.word_.begin(), p.word_.end()); }

std::uint64_t permutation_count(int n) {
  std::uint64_t c = 1;
  for (int i = 2; i <= n; ++i) c *= static_cast<std::uint64_t>(i);
  return c;
}

LinearStats linear_stats(const Permutation& p) {
  LinearStats s;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    const int v = p(i);
    if (v > i) ++s.exc;
    else if (v < i) ++s.drop;
    else ++s.fix;
    if (i < n && v > p(i + 1)) {
      ++s.des;
      s.maj += i;
    }
    for (int j = i + 1; j <= n; ++j)
      if (v > p(j)) ++s.inv;
  }
  s.wex = s.exc + s.fix;
  return s;
}

CrossingStats crossing_stats(const Permutation& p) {
  CrossingStats s;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    const int si = p(i);
    for (int j = 1; j <= n; ++j) {
      const int sj = p(j);
      if ((i < j && j <= si && si < sj) || (i > j && j > si && si > sj)) ++s.cros;
      if ((i < j && j <= sj && sj < si) || (i > j && j > sj && sj > si)) ++s.nest;
    }
  }
  return s;
}

CyclicStats cyclic_stats(const Permutation& p) {
  CyclicStats s;
  const std::vector<int> pre = p.inverse().word();
  for (int x = 1; x <= p.size(); ++x) {
    const int before = pre[static_cast<std::size_t>(x - 1)];
    const int after = p(x);
    if (after == x) ++s.fix;
    else if (before < x && x > after) ++s.cpeak;
    else if (before > x && x < after) ++s.cvalley;
    else if (before < x && x < after) ++s.cda;
    else ++s.cdd;
  }
  return s;
}

BoundaryStats boundary_stats(const Permutation& p, BoundaryConvention conv) {
  BoundaryStats s;
  const int n = p.size();
  const int left = 0;
  const int right = conv == BoundaryConvention::PadZeroNp1 ? n + 1 : 0;
  auto at = [&](int i) { return i == 0 ? left : (i == n + 1 ? right : p(i)); };
  const int first = conv == BoundaryConvention::PadRightZero ? 2 : 1;
  for (int i = first; i <= n; ++i) {
    const int a = at(i - 1), b = at(i), c = at(i + 1);
    if (a < b && b > c) ++s.peak;
    else if (a > b && b < c) ++s.valley;
    else if (a < b && b < c) ++s.da;
    else ++s.dd;
  }
  return s;
}

PatternStats pattern_stats(const Permutation& p) {
  PatternStats s;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (i >= 2) {
        if (p(i - 1) > p(j) && p(j) > p(i)) ++s.les;
        if (p(i - 1) < p(j) && p(j) < p(i)) ++s.les2;
      }
      if (j <= n - 1) {
        if (p(j + 1) > p(i) && p(i) > p(j)) ++s.res;
        if (p(j + 1) < p(i) && p(i) < p(j)) ++s.res2;
      }
    }
  }
  return s;
}

int fmax(const Permutation& p) {
  const int n = p.size();
  int count = 0;
  int running_max = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = p(i);
    const int prev = i == 1 ? 0 : p(i - 1);
    const int next = i == n ? n + 1 : p(i + 1);
    if (prev < v && v < next && v > running_max) ++count;
    running_max = std::max(running_max, v);
  }
  return count;
}

VincularCounts vincular_counts(const Permutation& p) {
  VincularCounts c;
  const int n = p.size();
  for (int i = 1; i + 1 <= n; ++i) {
    for (int j = i + 2; j <= n; ++j)
      if (p(i) < p(j) && p(j) < p(i + 1)) ++c.p132;
  }
  for (int j = 2; j + 1 <= n; ++j) {
    for (int i = 1; i < j; ++i)
      if (p(j + 1) < p(i) && p(i) < p(j)) ++c.p231;
  }
  return c;
}

bool in_DD(const Permutation& p, int k) {
  return linear_stats(p).des == k && boundary_stats(p, BoundaryConvention::PadRightZero).dd == 0;
}

bool in_DE(const Permutation& p, int k) {
  const CyclicStats c = cyclic_stats(p);
  return c.fix == 0 && c.cda == 0 && linear_stats(p).exc == k;
}

bool in_Snkj(const Permutation& p, int k, int j) {
  const CyclicStats c = cyclic_stats(p);
  return c.cvalley == k && c.fix == j && c.cda == 0;
}

bool in_Snkj_star(const Permutation& p, int k, int j) {
  const BoundaryStats b = boundary_stats(p, BoundaryConvention::PadZeroNp1);
  return b.da == fmax(p) && b.valley == k && b.da == j;
}

bool is_coderangement(const Permutation& p) { return fmax(p) == 0; }

bool is_derangement(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) return false;
  return true;
}

namespace {

template <class Pred>
std::vector<Permutation> collect(int n, Pred&& pred) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  if (n > kMaxMaterialized)
    throw std::invalid_argument("class lists are materialized only for n <= " + std::to_string(kMaxMaterialized));
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (pred(p)) out.push_back(p);
  });
  return out;
}

}  // namespace

std::vector<Permutation> class_DD(int n, int k) {
  return collect(n, [k](const Permutation& p) { return in_DD(p, k); });
}

std::vector<Permutation> class_DE(int n, int k) {
  return collect(n, [k](const Permutation& p) { return in_DE(p, k); });
}

std::vector<Permutation> class_Snkj(int n, int k, int j) {
  return collect(n, [k, j](const Permutation& p) { return in_Snkj(p, k, j); });
}

std::vector<Permutation> class_coderangements(int n) { return collect(n, is_coderangement); }

std::vector<Permutation> class_derangements(int n) { return collect(n, is_derangement); }

}  // namespace gammacf
