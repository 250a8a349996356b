#pragma once

// S_6-equivariant Euler characteristic of the local system V_{l,m} on A_2[2]:
//
//   E_c = sum over strata  E_c(stratum)/|G|  sum_{g in G} s_<l,m>(xi(g)) p_{mu(g)}.

#include "siegel2/reprings.hpp"
#include "siegel2/strata.hpp"

#include <vector>

namespace siegel2 {

struct EulerResult {
  int l = 0, m = 0;
  S6Decomp decomp;
};

/// Coefficient of p_mu, per cycle type mu.  Throws NotRationalError if the
/// cyclotomic parts of some coefficient fail to cancel.
ClassCoeffs<6> euler_class_coefficients(int l, int m);

/// Throws WeightError unless l >= m >= 0.
EulerResult euler_characteristic(int l, int m);

/// Same sum over an explicit list of strata (used to test alternative
/// multiplier readings).
EulerResult euler_characteristic_of(int l, int m, const std::vector<StratumEnumeration>& strata);

}  // namespace siegel2
