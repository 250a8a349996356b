#include "siegel2/euler.hpp"

#include "siegel2/cyclotomic.hpp"
#include "siegel2/sp4_character.hpp"
#include "siegel2/strata.hpp"

#include <algorithm>
#include <map>

namespace siegel2 {

namespace {

// Elements of one stratum grouped by (eigenvalues, cycle type); the Euler
// sum only depends on that profile.
struct Profile {
  std::array<RootOfUnity, 4> eigs;
  std::size_t cls;
  long count;
};

struct CompressedStratum {
  mpq_class weight;  // E_c / |G|
  std::vector<Profile> profiles;
};

std::vector<CompressedStratum> compress(const std::vector<StratumEnumeration>& strata) {
  std::vector<CompressedStratum> out;
  for (const auto& s : strata) {
    std::map<std::pair<std::array<int, 4>, std::size_t>, Profile> seen;
    for (const auto& e : s.elements) {
      std::array<int, 4> key;
      for (int i = 0; i < 4; ++i) key[i] = e.eigs[i].exponent();
      std::sort(key.begin(), key.end());
      const std::size_t cls = partition_index(e.cycle_type);
      auto [it, fresh] = seen.try_emplace({key, cls}, Profile{e.eigs, cls, 0});
      ++it->second.count;
    }
    CompressedStratum c;
    c.weight = mpq_class(s.euler, s.group_order);
    c.weight.canonicalize();
    for (auto& [k, p] : seen) c.profiles.push_back(p);
    out.push_back(std::move(c));
  }
  return out;
}

const std::vector<CompressedStratum>& compressed_strata() {
  static const std::vector<CompressedStratum> all = compress(all_enumerations());
  return all;
}

ClassCoeffs<6> class_coefficients(int l, int m, const std::vector<CompressedStratum>& strata) {
  const auto ch = character_polynomial(l, m);
  constexpr std::size_t n = partition_count(6);
  std::array<CycNum, n> acc;
  for (const auto& s : strata) {
    std::array<RootSum, n> sums{};
    std::array<bool, n> used{};
    for (const auto& p : s.profiles) {
      const RootSum v = ch->evaluate(p.eigs);
      for (int e = 0; e < kConductor; ++e) sums[p.cls][e] += p.count * v[e];
      used[p.cls] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!used[c]) continue;
      std::array<mpq_class, kConductor> dense;
      for (int e = 0; e < kConductor; ++e) dense[e] = sums[c][e];
      acc[c] += reduce_dense(dense.data(), dense.size()) * s.weight;
    }
  }
  ClassCoeffs<6> out;
  for (std::size_t c = 0; c < n; ++c) out[c] = acc[c].as_rational();
  return out;
}

}  // namespace

ClassCoeffs<6> euler_class_coefficients(int l, int m) { return class_coefficients(l, m, compressed_strata()); }

EulerResult euler_characteristic_of(int l, int m, const std::vector<StratumEnumeration>& strata) {
  EulerResult r;
  r.l = l;
  r.m = m;
  r.decomp = power_sum_to_schur<6>(class_coefficients(l, m, compress(strata)));
  return r;
}

EulerResult euler_characteristic(int l, int m) {
  EulerResult r;
  r.l = l;
  r.m = m;
  r.decomp = power_sum_to_schur<6>(euler_class_coefficients(l, m));
  return r;
}

}  // namespace siegel2
