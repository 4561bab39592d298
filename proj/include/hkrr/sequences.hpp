#pragma once

#include "hkrr/poly.hpp"
#include "hkrr/rational.hpp"

namespace hkrr {

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = y,
/// T_{m+1} = 2y T_m - T_{m-1}.
UniPoly chebyshev_t(int k);

/// Bernoulli number B_m with the convention B_1 = -1/2.
Rational bernoulli(int m);

/// b_{2k} = B_{2k} / (4k (2k)!), with b_0 = 1. Argument is the even index 2k.
Rational modified_bernoulli(int two_k);

}  // namespace hkrr
