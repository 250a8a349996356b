#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel2/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace siegel2;

namespace {

// numeric image under zeta_120 -> exp(2 pi i / 120)
std::complex<double> embed(const CycNum& a) {
  std::complex<double> s = 0;
  for (int i = 0; i < kCycDegree; ++i)
    s += a.coeffs()[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * i / kConductor);
  return s;
}

CycNum random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 119);
  CycNum x;
  for (int i = 0; i < 4; ++i) {
    mpq_class q(c(rng), 1 + (e(rng) % 3));
    q.canonicalize();
    x += CycNum::zeta_power(e(rng)) * q;
  }
  return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomial of order 120 vanishes at zeta") {
  const auto& phi = cyclotomic_polynomial_120();
  CHECK(phi.front() == 1);
  CHECK(phi.back() == 1);
  std::complex<double> v = 0;
  for (int i = 0; i <= kCycDegree; ++i) v += double(phi[i]) * std::polar(1.0, 2 * std::numbers::pi * i / kConductor);
  CHECK(std::abs(v) < 1e-9);
}

TEST_CASE("reduction agrees with the complex embedding") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const CycNum a = random_element(rng), b = random_element(rng);
    CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-8);
    CHECK(std::abs(embed(a + b) - embed(a) - embed(b)) < 1e-8);
    for (long e : {0L, 1L, 37L, 119L, 120L, 241L, -1L})
      CHECK(std::abs(embed(CycNum::zeta_power(e)) - std::polar(1.0, 2 * std::numbers::pi * e / 120)) < 1e-9);
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CycNum a = random_element(rng);
    if (a.is_zero()) continue;
    CHECK((a * a.inverse()).is_one());
  }
  CHECK_THROWS(CycNum().inverse());
}

TEST_CASE("rational recognition") {
  const CycNum s2 = CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
  CHECK((s2 * s2) == CycNum(2));
  CHECK(s2.try_rational() == std::nullopt);
  CHECK_THROWS_AS(s2.as_rational(), NotRationalError);
  CycNum total;
  for (int e = 0; e < 120; ++e) total += CycNum::zeta_power(e);
  CHECK(total.is_zero());
  CHECK((CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2)).as_rational() == -1);
}

TEST_CASE("roots of unity") {
  CHECK(RootOfUnity::of_order(4, 1).exponent() == 30);
  CHECK(RootOfUnity::of_order(6, 1).order() == 6);
  CHECK((-RootOfUnity(0)).exponent() == 60);
  CHECK(RootOfUnity(25).inverse().exponent() == 95);
  CHECK_THROWS(RootOfUnity::of_order(7, 1));
  for (int e = 0; e < 120; ++e) {
    const auto r = RootOfUnity::recognize(CycNum::zeta_power(e));
    REQUIRE(r);
    CHECK(r->exponent() == e);
  }
  CHECK_FALSE(RootOfUnity::recognize(CycNum(2)));
  const CycNum i = CycNum::root_of_unity(4, 1);
  const CycNum s = sqrt_of_root_of_unity(i);
  CHECK((s * s) == i);
  CHECK_THROWS(sqrt_of_root_of_unity(CycNum::root_of_unity(8, 3)));
}
