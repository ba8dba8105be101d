#pragma once

namespace gammacf {

// The nine weight parameters of colored permutations and Laguerre
// histories. tt, ww, xx and yy are the "tilde" companions of t, w, x and y:
//   q^cros t^wexa tt^dropa w^wexc ww^dropc x^fixa xx^fixc y^csumw yy^csumd.
template <class R>
struct WeightParams {
  R q{1};
  R t{1};
  R tt{1};
  R w{1};
  R ww{1};
  R x{1};
  R xx{1};
  R y{1};
  R yy{1};
};

}  // namespace gammacf
