#pragma once

// Colored permutations (elements of the wreath product Z_r wr S_n), the
// friends / color / natural orders on colored letters, and the colored
// excedance, fixed-point and crossing statistics.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gammacf/perm.hpp"
#include "gammacf/poly.hpp"

namespace gammacf {

class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  // Throws std::invalid_argument on size mismatch, r < 1 or a color outside
  // 0..r-1.
  ColoredPermutation(Permutation pi, std::vector<int> z, int r);
  static ColoredPermutation uncolored(Permutation pi, int r = 1);

  // Tokens "v" or "v^c"; when r = 2 the signed token "-v" means color 1.
  static ColoredPermutation parse(std::string_view text, int r);

  int size() const { return pi_.size(); }
  int radix() const { return r_; }
  const Permutation& pi() const { return pi_; }
  const std::vector<int>& colors() const { return z_; }
  // 1-based number and color of sigma(i).
  int value(int i) const { return pi_(i); }
  int color(int i) const { return z_[static_cast<std::size_t>(i - 1)]; }

  // "4 7^1 2 5^1 1^2 6 3"
  std::string to_string() const;
  // Signed window notation, r <= 2 only: "4 -7 2".
  std::string to_signed_string() const;

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

  // Lexicographic successor on (pi, z) with z varying fastest.
  friend bool next_colored(ColoredPermutation& s);

 private:
  Permutation pi_;
  std::vector<int> z_;
  int r_ = 1;
};

std::uint64_t colored_count(int n, int r);

// Visit Z_r wr S_n in lexicographic order of (pi, z).
template <class F>
void for_each_colored(int n, int r, F&& f) {
  ColoredPermutation s(Permutation::identity(n), std::vector<int>(static_cast<std::size_t>(n), 0), r);
  do {
    f(static_cast<const ColoredPermutation&>(s));
  } while (next_colored(s));
}

enum class OrderKind { Friends, Color, Natural };

// Strict comparison of colored letters a^[ca] and b^[cb]. Natural order is
// the order of signed values and is only defined for r <= 2.
bool letter_less(OrderKind kind, int a, int ca, int b, int cb, int r);

struct ColoredStats {
  int exc_friends = 0;
  int fexc = 0;
  int exca = 0;
  int wexa = 0;
  int wexc = 0;
  int fixa = 0;
  int fixc = 0;
  int dropa = 0;
  int dropc = 0;
  int csum = 0;
  int csumw = 0;
  int csumd = 0;
};

ColoredStats colored_stats(const ColoredPermutation& s);
int cros_colored(const ColoredPermutation& s);

struct BExcedanceStats {
  int exc_B = 0;
  int des_B = 0;
};

// Signed permutations only (r = 2); throws std::invalid_argument otherwise.
BExcedanceStats b_excedance_stats(const ColoredPermutation& s);

// No i with pi_i = i and z_i = 0.
bool is_colored_derangement(const ColoredPermutation& s);

template <class F>
void for_each_colored_derangement(int n, int r, F&& f) {
  for_each_colored(n, r, [&](const ColoredPermutation& s) {
    if (is_colored_derangement(s)) f(s);
  });
}

std::vector<ColoredPermutation> derangements_r(int n, int r);

// Distribution of fexc (D) and of friends-order excedances (d) over the
// colored derangements; both are 1 at n = 0.
IntPoly D_poly(int n, int r);
IntPoly d_poly(int n, int r);

}  // namespace gammacf
