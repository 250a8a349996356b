#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel2/elliptic_dims.hpp"
#include "siegel2/packets.hpp"

#include <functional>

using namespace siegel2;

namespace {

S6Decomp s(const Partition& p) { return S6Decomp::irreducible(p); }

// Character of Sym^n V via the cycle index: sum over lambda |- n of
// prod_i chi(g^lambda_i) / z_lambda.
std::array<long, 11> sym_character(const S6Decomp& v, long n) {
  const auto& t = character_table(6);
  const auto chi = v.character();
  std::array<long, 11> out{};
  for (std::size_t c = 0; c < 11; ++c) {
    mpq_class total = 0;
    std::vector<long> parts;
    std::function<void(long, long)> rec = [&](long rest, long maxp) {
      if (rest == 0) {
        mpq_class term = 1;
        mpz_class z = 1;
        std::map<long, long> mult;
        for (long p : parts) {
          term *= chi[t.power_class(c, p)];
          z *= p;
          ++mult[p];
        }
        for (auto [p, k] : mult)
          for (long i = 2; i <= k; ++i) z *= i;
        total += term / mpq_class(z);
        return;
      }
      for (long p = std::min(rest, maxp); p >= 1; --p) {
        parts.push_back(p);
        rec(rest - p, p);
        parts.pop_back();
      }
    };
    rec(n, n);
    total.canonicalize();
    REQUIRE(total.get_den() == 1);
    out[c] = total.get_num().get_si();
  }
  return out;
}

S6Decomp igusa_oracle(long k) {
  if (k < 0) return {};
  if (k % 2) return sign_twist(igusa_oracle(k - 5));
  const S6Decomp v = s({2, 2, 2});
  S6Decomp out = S6Decomp::from_character(sym_character(v, k / 2));
  if (k >= 8) out -= S6Decomp::from_character(sym_character(v, k / 2 - 4));
  return out;
}

long igusa_dim(long k) { return k % 2 ? 0 : (k + 1) * (k * k + 2 * k + 12) / 12; }

}  // namespace

TEST_CASE("scalar totals") {
  CHECK(scalar_total(4) == s({6}) + s({4, 2}) + s({2, 2, 2}));
  CHECK(scalar_total(5) == s({1, 1, 1, 1, 1, 1}));
  CHECK(scalar_total(10) == 2 * s({6}) + 3 * s({4, 2}) + 2 * s({3, 2, 1}) + 3 * s({3, 1, 1, 1}) +
                                4 * s({2, 2, 2}) + 2 * s({2, 1, 1, 1, 1}));
  for (long k = 0; k <= 24; ++k) {
    CAPTURE(k);
    CHECK(scalar_total(k) == igusa_oracle(k));
    if (k % 2 == 0) CHECK(scalar_total(k).dimension() == igusa_dim(k));
  }
}

TEST_CASE("Eisenstein parts") {
  CHECK(eisenstein_F(0, 0) == s({6}));
  CHECK(eisenstein_F(2, 0) == s({2, 2, 2}));
  CHECK(eisenstein_F(8, 0) == s({6}) + s({4, 2}) + s({2, 2, 2}));
  CHECK(eisenstein_F(8, 2).is_zero());
  CHECK(eisenstein_Q(6, 0) == s({3, 1, 1, 1}) + s({2, 1, 1, 1, 1}));
  CHECK(eisenstein_Q(8, 0) == s({4, 2}) + s({3, 2, 1}) + s({2, 2, 2}));
  CHECK(eisenstein_Q(4, 2) == s({3, 1, 1, 1}) + s({2, 1, 1, 1, 1}));
  CHECK(eisenstein_Q(7, 0).is_zero());
  for (long k = 3; k <= 20; ++k)
    for (long j = 0; j <= 12; j += 2) {
      if (k % 2) continue;
      CHECK(eisenstein_Q(k, j) == induce_from_H(cusp_gamma2_s3(k + j)));
    }
  for (long kappa = 2; kappa <= 20; ++kappa)
    CHECK(eisenstein_Q(2 * kappa, 0).dimension() == 15 * dim_cusp(4, 2 * kappa));
}

TEST_CASE("Saito-Kurokawa lifts") {
  CHECK(saito_kurokawa(5, 0) == s({1, 1, 1, 1, 1, 1}));
  CHECK(saito_kurokawa(7, 0) == s({3, 3}));
  CHECK(saito_kurokawa(10, 0) == s({6}) + s({4, 2}) + 2 * s({2, 2, 2}));
  CHECK(saito_kurokawa(10, 2).is_zero());
}

TEST_CASE("Yoshida lifts") {
  CHECK(yoshida(3, 6) == s({1, 1, 1, 1, 1, 1}));
  CHECK(yoshida(3, 2).is_zero());
  const auto y = yoshida(4, 8);
  CHECK(y == s({2, 2, 2}) + s({2, 1, 1, 1, 1}) + s({1, 1, 1, 1, 1, 1}));
  CHECK(y.dimension() == 11);
  CHECK(yoshida(6, 0).is_zero());
}

TEST_CASE("auxiliary combinations and the Euler pieces") {
  CHECK(aux::C_prime() == s({4, 1, 1}) + s({3, 3}));
  CHECK(aux::A() == s({6}) + s({5, 1}) + s({4, 2}));
  CHECK(euler_eis(1, 1) == -aux::C_prime());
  CHECK(euler_endo(1, 1).is_zero());
  CHECK_THROWS(euler_eis(2, 1));
  CHECK_THROWS(euler_eis(0, 0));
}

TEST_CASE("general type and full decompositions") {
  CHECK(general_type(4, 2).is_zero());
  const auto d42 = decompose(4, 2);
  CHECK(d42.M() == s({3, 1, 1, 1}) + s({2, 1, 1, 1, 1}));
  CHECK(d42.M().dimension() == 15);
  CHECK_FALSE(d42.conjectural);

  const auto d36 = decompose(3, 6);
  CHECK(d36.S() == s({1, 1, 1, 1, 1, 1}));
  CHECK(d36.G.is_zero());
  CHECK(d36.conjectural);
  CHECK(d36.part_is_conjectural(Part::S));
  CHECK_FALSE(d36.part_is_conjectural(Part::Y));
  CHECK(decompose(3, 8).S().dimension() == 5);

  const auto d11 = decompose(11, 0);
  CHECK(d11.S() == s({5, 1}) + s({4, 1, 1}) + 2 * s({3, 3}) + s({2, 2, 1, 1}) + s({1, 1, 1, 1, 1, 1}));
  CHECK(d11.P == s({5, 1}) + s({3, 3}) + s({1, 1, 1, 1, 1, 1}));
  const auto d8 = decompose(8, 0);
  CHECK(d8.F == s({6}) + s({4, 2}) + s({2, 2, 2}));
  CHECK(d8.Q == s({4, 2}) + s({3, 2, 1}) + s({2, 2, 2}));

  CHECK(decompose(6, 3).M().is_zero());
  CHECK_THROWS_AS(decompose(2, 2), UnsupportedError);
  CHECK_THROWS_AS(general_type(2, 4), UnsupportedError);
  CHECK(decompose(1, 4).M().is_zero());
  CHECK(decompose(0, 2).M().is_zero());
}

TEST_CASE("general type refuses a bad Euler characteristic") {
  CHECK_THROWS_AS(general_type_from(6, 4, s({6})), PacketError);
  CHECK_THROWS_AS(general_type_from(6, 4, 4 * s({6})), PacketError);
}

TEST_CASE("closed dimension formulas") {
  CHECK(tsushima_dim(4, 2) == 15);
  CHECK(tsushima_dim(3, 8) == 5);
  CHECK(tsushima_dim(3, 4) == 0);
  for (long k = 4; k <= 12; ++k)
    for (long j = 2; j <= 20; j += 2) {
      CAPTURE(k);
      CAPTURE(j);
      const auto d = decompose(k, j);
      CHECK(d.M().dimension() == tsushima_dim(k, j));
    }
  for (long j = 2; j <= 30; j += 2) CHECK(decompose(3, j).S().dimension() == (j - 2) * (j - 3) * (j - 4) / 24);
  for (long kappa = 2; kappa <= 15; ++kappa) {
    CHECK(decompose(2 * kappa, 0).S().dimension() == (kappa - 2) * (2 * kappa * kappa + 7 * kappa - 24) / 3);
    CHECK(decompose(2 * kappa + 1, 0).S().dimension() ==
          (2 * kappa * kappa * kappa - 9 * kappa * kappa + 19 * kappa - 15) / 3);
  }
}

TEST_CASE("assembly and effectivity") {
  for (long k = 0; k <= 30; ++k)
    for (long j = 0; j <= 16; j += 2) {
      if (k == 2 && j > 0) continue;
      CAPTURE(k);
      CAPTURE(j);
      const auto d = decompose(k, j);
      for (const auto* x : {&d.F, &d.Q, &d.P, &d.Y, &d.G}) CHECK(x->is_effective());
      CHECK(d.M() == d.F + d.Q + d.P + d.Y + d.G);
      if (j > 0) {
        CHECK(d.F.is_zero());
        CHECK(d.P.is_zero());
      }
    }
}

TEST_CASE("other groups") {
  const auto m4 = decompose(4, 0).M();
  CHECK(restrict_dimension(m4, Level::Gamma0) == 3);
  CHECK(restrict_dimension(m4, Level::Sp4Z) == 1);
  CHECK(restrict_dimension(m4, Level::Gamma2) == 15);
  CHECK(restrict_dimension(decompose(5, 0).M(), Level::Sp4ZEps) == 1);
  CHECK(restrict_gamma1(s({4, 2})) == S3Decomp::irreducible({3}) + S3Decomp::irreducible({2, 1}));
  for (long k = 0; k <= 20; ++k) {
    const auto m = decompose(k, 0).M();
    CHECK(restrict_gamma1(m).dimension() == restrict_dimension(m, Level::Gamma1));
  }
  CHECK(parse_level("sp4z-eps") == Level::Sp4ZEps);
  CHECK(level_name(Level::Gamma0) == "gamma0");
  CHECK_THROWS(parse_level("gamma3"));
  CHECK(parse_part("Y") == Part::Y);
  CHECK_THROWS(parse_part("B"));
}
