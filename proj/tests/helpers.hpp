#pragma once

#include <initializer_list>
#include <vector>

#include "gammacf/poly.hpp"

namespace gammacf::testing {

inline IntPoly P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

inline std::vector<Integer> V(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

}  // namespace gammacf::testing
