#include "gammacf/cfrac.hpp"

namespace gammacf {

JFraction<Integer> r_euler_jfraction(int r, std::size_t H) {
  if (r < 1) throw std::invalid_argument("r_euler_jfraction: r must be at least 1");
  JFraction<Integer> jf;
  const long rr = r;
  for (std::size_t h = 0; h <= H; ++h) jf.b.emplace_back((2 * static_cast<long>(h) + 1) * rr);
  for (std::size_t h = 1; h <= H; ++h) {
    const long rh = rr * static_cast<long>(h);
    jf.lam.emplace_back(rh * rh);
  }
  return jf;
}

JFraction<IntPoly> b_exc_jfraction(std::size_t H) {
  JFraction<IntPoly> jf;
  const IntPoly one_t(std::vector<Integer>{Integer(1), Integer(1)});
  for (std::size_t h = 0; h <= H; ++h) jf.b.push_back(Integer(2 * static_cast<long>(h) + 1) * one_t);
  for (std::size_t h = 1; h <= H; ++h) {
    const long hh = static_cast<long>(h * h);
    jf.lam.push_back(IntPoly::monomial(Integer(4 * hh), 1));
  }
  return jf;
}

}  // namespace gammacf
