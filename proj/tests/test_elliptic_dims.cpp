#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel2/elliptic_dims.hpp"

using namespace siegel2;

namespace {

// Count monomials in ring generators: level 1 by E4, E6; level 2 by forms
// of weight 2 and 4; level 4 by two forms of weight 2.
long monomials(long k, long a, long b) {
  long n = 0;
  for (long x = 0; a * x <= k; ++x)
    if ((k - a * x) % b == 0) ++n;
  return n;
}

long cusp_oracle(int N, long k) {
  if (k % 2 || k < 4) return 0;
  switch (N) {
    case 1: return monomials(k, 4, 6) - 1;
    case 2: return monomials(k, 2, 4) - 2;
    default: return monomials(k, 2, 2) - 3;
  }
}

long new_oracle(int N, long k) {
  if (N == 1) return cusp_oracle(1, k);
  if (N == 2) return cusp_oracle(2, k) - 2 * cusp_oracle(1, k);
  return cusp_oracle(4, k) - 2 * new_oracle(2, k) - 3 * cusp_oracle(1, k);
}

}  // namespace

TEST_CASE("examples") {
  CHECK(dim_cusp(1, 12) == 1);
  CHECK(dim_cusp(4, 6) == 1);
  CHECK(dim_cusp(2, 8) == 1);
  CHECK(dim_new(2, 8) == 1);
  CHECK(dim_new(4, 12) == 1);
  CHECK(dim_new(2, 12) == 0);
  CHECK(dim_new_fricke(+1, 8) == 1);
  CHECK(dim_new_fricke(-1, 8) == 0);
  CHECK(dim_new_fricke(-1, 10) == 1);
  CHECK(dim_new_fricke(+1, 10) == 0);
  CHECK(dim_new_fricke(+1, 6) == 0);
  CHECK(dim_new_fricke(-1, 6) == 0);
}

TEST_CASE("against generator counts") {
  for (long k = 0; k <= 200; ++k)
    for (int N : {1, 2, 4}) {
      CAPTURE(k);
      CAPTURE(N);
      CHECK(dim_cusp(N, k) == cusp_oracle(N, k));
      CHECK(dim_new(N, k) == new_oracle(N, k));
    }
}

TEST_CASE("Fricke signs split the new space") {
  for (long k = 0; k <= 200; ++k) {
    CHECK(dim_new_fricke(1, k) + dim_new_fricke(-1, k) == dim_new(2, k));
    CHECK(dim_new_fricke(1, k) >= 0);
    CHECK(dim_new_fricke(-1, k) >= 0);
  }
}

TEST_CASE("closed forms") {
  for (long q = 1; q <= 50; ++q) {
    CHECK(dim_new(2, 4 * q) == q - 1 - 2 * (q / 3));
    CHECK(dim_new(4, 4 * q) == q / 3);
    CHECK(dim_cusp(4, 4 * q) == 2 * (q - 1));
  }
}

TEST_CASE("cusp forms on Gamma(2) as S_3 representations") {
  const auto s = [](const Partition& p) { return S3Decomp::irreducible(p); };
  CHECK(cusp_gamma2_s3(6) == s({1, 1, 1}));
  CHECK(cusp_gamma2_s3(12) == s({3}) + s({2, 1}) + s({1, 1, 1}));
  for (long k = 0; k <= 100; ++k) {
    const auto v = cusp_gamma2_s3(k);
    CHECK(v.is_effective());
    // Gamma(2) and Gamma_0(4) are conjugate
    CHECK(v.dimension() == dim_cusp(4, k));
  }
}

TEST_CASE("odd weight and bad level") {
  for (int N : {1, 2, 4}) CHECK(dim_cusp(N, 13) == 0);
  CHECK(cusp_gamma2_s3(7).is_zero());
  CHECK_THROWS_AS(dim_cusp(3, 12), LevelError);
  CHECK_THROWS_AS(dim_new(3, 12), LevelError);
}
