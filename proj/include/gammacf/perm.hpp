#pragma once

// Permutations of [n] and their linear, cyclic and arc-diagram statistics.
//
// All external indexing is 1-based: for a permutation s of size n, s(i) is
// defined for 1 <= i <= n and returns a value in 1..n.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gammacf {

class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless word is a bijection of {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  // Space-separated 1-based values, e.g. "9 3 7 4 6 10 5 8 1 2".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  // Composition (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  std::string to_string() const;
  // Concatenated digits ("2143"); only meaningful for n <= 9.
  std::string compact() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Advance to the lexicographic successor; false after the last one.
  friend bool next_permutation(Permutation& p);

 private:
  std::vector<int> word_;
};

std::uint64_t permutation_count(int n);

// Visit every permutation of [n] in lexicographic order. The reference is
// only valid during the callback.
template <class F>
void for_each_permutation(int n, F&& f) {
  Permutation p = Permutation::identity(n);
  do {
    f(static_cast<const Permutation&>(p));
  } while (next_permutation(p));
}

struct LinearStats {
  int des = 0;
  int maj = 0;
  int inv = 0;
  int exc = 0;
  int drop = 0;
  int fix = 0;
  int wex = 0;
};

struct CrossingStats {
  int cros = 0;
  int nest = 0;
};

struct CyclicStats {
  int cpeak = 0;
  int cvalley = 0;
  int cda = 0;
  int cdd = 0;
  int fix = 0;
};

enum class BoundaryConvention {
  PadZeroZero,   // s(0) = s(n+1) = 0
  PadZeroNp1,    // s(0) = 0, s(n+1) = n+1
  PadRightZero,  // s(n+1) = 0 only; positions 1 < i <= n are classified
};

struct BoundaryStats {
  int peak = 0;
  int valley = 0;
  int da = 0;
  int dd = 0;
};

struct PatternStats {
  int res = 0;
  int res2 = 0;
  int les = 0;
  int les2 = 0;
};

struct VincularCounts {
  int p132 = 0;  // occurrences of 13-2
  int p231 = 0;  // occurrences of 2-31
};

LinearStats linear_stats(const Permutation& p);
CrossingStats crossing_stats(const Permutation& p);
CyclicStats cyclic_stats(const Permutation& p);
BoundaryStats boundary_stats(const Permutation& p, BoundaryConvention conv);
PatternStats pattern_stats(const Permutation& p);
// Double ascents (with s(0) = 0, s(n+1) = n+1) that are left-to-right maxima.
int fmax(const Permutation& p);
VincularCounts vincular_counts(const Permutation& p);

// Class membership predicates, usable as streaming filters at any n.
bool in_DD(const Permutation& p, int k);      // des = k and no double descent in s(1)..s(n)0
bool in_DE(const Permutation& p, int k);      // derangement, exc = k, cda = 0
bool in_Snkj(const Permutation& p, int k, int j);  // cvalley = k, fix = j, cda = 0
bool in_Snkj_star(const Permutation& p, int k, int j);  // every da is a foremaximum, valley = k, da = j
bool is_coderangement(const Permutation& p);  // fmax = 0
bool is_derangement(const Permutation& p);

// Materialized classes in lexicographic order; n <= kMaxMaterialized.
inline constexpr int kMaxMaterialized = 9;
std::vector<Permutation> class_DD(int n, int k);
std::vector<Permutation> class_DE(int n, int k);
std::vector<Permutation> class_Snkj(int n, int k, int j);
std::vector<Permutation> class_coderangements(int n);
std::vector<Permutation> class_derangements(int n);

}  // namespace gammacf
