#pragma once

// Dimensions of elliptic cusp forms on Gamma_0(N), N in {1, 2, 4}, with
// trivial character.  Every function vanishes for odd weight and below
// weight 4.

#include "siegel2/reprings.hpp"

#include <stdexcept>

namespace siegel2 {

class LevelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// dim S_k(Gamma_0(N)).
long dim_cusp(int N, long k);

/// d_{N,k} = dim S_k(Gamma_0(N))^new.
long dim_new(int N, long k);

/// d^{+-}_{2,k}: newforms of level 2 with Fricke sign +1 (sign > 0) or -1.
long dim_new_fricke(int sign, long k);

/// S_k(Gamma(2)) as an S_3 representation:
/// d_{1,k} s[3] + (d_{1,k} + d_{2,k}) s[2,1] + d_{4,k} s[1^3].
S3Decomp cusp_gamma2_s3(long k);

}  // namespace siegel2
