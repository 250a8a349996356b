#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel2/euler.hpp"
#include "siegel2/sp4_character.hpp"

using namespace siegel2;

namespace {

// No compression, no RootSum shortcut: every element, every class,
// multiplicity of s_lambda = sum_mu c_mu chi^lambda(mu).
S6Decomp brute_force(int l, int m) {
  const auto ch = character_polynomial(l, m);
  const auto& parts = partitions(6);
  std::vector<CycNum> c(parts.size());
  for (const auto& s : all_enumerations()) {
    mpq_class w(s.euler, s.group_order);
    w.canonicalize();
    for (const auto& g : s.elements) {
      std::array<CycNum, 4> x;
      for (int i = 0; i < 4; ++i) x[i] = g.eigs[i].to_cyc();
      c[partition_index(g.cycle_type)] += ch->evaluate(x) * w;
    }
  }
  S6Decomp out;
  for (std::size_t lam = 0; lam < parts.size(); ++lam) {
    mpq_class total = 0;
    for (std::size_t mu = 0; mu < parts.size(); ++mu) total += c[mu].as_rational() * character_value(parts[lam], parts[mu]);
    total.canonicalize();
    REQUIRE(total.get_den() == 1);
    out += total.get_num().get_si() * S6Decomp::irreducible(parts[lam]);
  }
  return out;
}

S6Decomp from_vector(const std::vector<long>& v) {
  S6Decomp out;
  for (std::size_t i = 0; i < v.size(); ++i) out += v[i] * S6Decomp::irreducible(partitions(6)[i]);
  return out;
}

}  // namespace

TEST_CASE("small weights") {
  CHECK(euler_characteristic(0, 0).decomp == from_vector({2, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0}));
  CHECK(euler_characteristic(1, 1).decomp == from_vector({-1, 0, -1, -1, 1, 0, 0, -1, 0, 0, 0}));
}

TEST_CASE("brute force over raw elements") {
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= l; ++m) {
      CAPTURE(l);
      CAPTURE(m);
      CHECK(euler_characteristic(l, m).decomp == brute_force(l, m));
    }
  CHECK(euler_characteristic(11, 7).decomp == brute_force(11, 7));
}

TEST_CASE("odd total weight vanishes") {
  for (int l = 0; l <= 12; ++l)
    for (int m = 0; m <= l; ++m)
      if ((l + m) % 2) CHECK(euler_characteristic(l, m).decomp.is_zero());
}

TEST_CASE("explicit strata list reproduces the default") {
  for (auto [l, m] : {std::pair{0, 0}, {4, 2}, {9, 3}, {10, 10}})
    CHECK(euler_characteristic_of(l, m, all_enumerations()).decomp == euler_characteristic(l, m).decomp);
}

TEST_CASE("bad weights") {
  CHECK_THROWS_AS(euler_characteristic(1, 2), WeightError);
  CHECK_THROWS_AS(euler_characteristic(-1, 0), WeightError);
}
