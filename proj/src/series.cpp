#include "siegel2/series.hpp"

#include "siegel2/packets.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace siegel2 {

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// sum of c t^e
IntPoly terms(std::initializer_list<std::pair<long, int>> ts) {
  IntPoly r;
  for (auto [c, e] : ts) {
    if (r.size() <= static_cast<std::size_t>(e)) r.resize(e + 1, 0);
    r[e] += c;
  }
  return r;
}

IntPoly mono(int e) { return terms({{1, e}}); }

// prod (1 - t^a)
IntPoly D(std::initializer_list<int> as) {
  IntPoly r{1};
  for (int a : as) r = mul(r, terms({{1, 0}, {-1, a}}));
  return r;
}

IntPoly onep(int e) { return terms({{1, 0}, {1, e}}); }

enum Ix { s6, s51, s42, s411, s33, s321, s3111, s222, s2211, s21111, s16 };
constexpr int kDim = -1;

std::string irrep_label(int irrep) {
  if (irrep < 0) return "dim";
  return "s" + partition_label(partitions(6)[irrep]);
}

}  // namespace

std::vector<long> expand(const SeriesSpec& s, int order) {
  if (s.denominator.empty() || s.denominator[0] == 0)
    throw std::invalid_argument("series denominator needs a nonzero constant term");
  if (s.denominator[0] != 1 && s.denominator[0] != -1)
    throw std::invalid_argument("series denominator must have constant term +-1");
  std::vector<long> out(order + 1, 0);
  for (int n = 0; n <= order; ++n) {
    long acc = n < static_cast<int>(s.numerator.size()) ? s.numerator[n] : 0;
    for (int i = 1; i <= n && i < static_cast<int>(s.denominator.size()); ++i) acc -= s.denominator[i] * out[n - i];
    out[n] = acc * s.denominator[0];
  }
  return out;
}

const std::vector<SeriesSpec>& printed_series() {
  static const std::vector<SeriesSpec> all = [] {
    std::vector<SeriesSpec> v;
    auto add = [&v](const std::string& table, SeriesFamily f, Parity par, int irrep, IntPoly num, IntPoly den) {
      v.push_back({irrep_label(irrep) + "/" + table, f, irrep, std::move(num), std::move(den), par, {}});
    };
    const Parity A = Parity::All, E = Parity::Even, O = Parity::Odd;
    using F = SeriesFamily;

    // M_k, all weights
    add("M_k", F::M, A, s6, onep(35), D({4, 6, 10, 12}));
    add("M_k", F::M, A, s51, mul(mono(11), onep(1)), D({4, 6, 4, 6}));
    add("M_k", F::M, A, s42, mul(mono(4), onep(15)), D({2, 4, 4, 10}));
    add("M_k", F::M, A, s411, mul(mono(11), onep(4)), D({1, 4, 6, 12}));
    add("M_k", F::M, A, s33, mul(mono(7), onep(13)), D({2, 4, 6, 12}));
    add("M_k", F::M, A, s321, terms({{1, 8}, {-1, 16}}), D({2, 2, 5, 6, 6}));
    add("M_k", F::M, A, s3111, terms({{1, 6}, {1, 10}, {1, 17}, {1, 21}}), D({2, 4, 6, 12}));
    add("M_k", F::M, A, s222, mul(mono(2), onep(23)), D({2, 4, 6, 12}));
    add("M_k", F::M, A, s2211, mono(9), D({2, 4, 4, 5}));
    add("M_k", F::M, A, s21111, mul(mono(6), onep(11)), D({4, 6, 4, 6}));
    add("M_k", F::M, A, s16, mul(mono(5), onep(25)), D({4, 6, 10, 12}));
    add("M_k", F::M, A, kDim, mul(mul(onep(2), onep(4)), onep(5)), D({2, 2, 2, 2}));

    // S_{2k+1}
    add("S_odd", F::SOdd, O, s6, mono(35), D({4, 6, 10, 12}));
    add("S_odd", F::SOdd, O, s51, mono(11), D({4, 6, 4, 6}));
    add("S_odd", F::SOdd, O, s42, mono(19), D({2, 4, 4, 10}));
    add("S_odd", F::SOdd, O, s411, mul(mono(11), onep(4)), D({2, 4, 6, 12}));
    add("S_odd", F::SOdd, O, s33, mono(7), D({2, 4, 6, 12}));
    add("S_odd", F::SOdd, O, s321, terms({{1, 13}, {1, 15}, {1, 17}, {1, 19}}), D({2, 6, 6, 10}));
    add("S_odd", F::SOdd, O, s3111, mul(mono(17), onep(4)), D({2, 4, 6, 12}));
    add("S_odd", F::SOdd, O, s222, mono(25), D({2, 4, 6, 12}));
    add("S_odd", F::SOdd, O, s2211, mono(9), D({2, 4, 4, 10}));
    add("S_odd", F::SOdd, O, s21111, mono(17), D({4, 6, 4, 6}));
    add("S_odd", F::SOdd, O, s16, mono(5), D({4, 6, 10, 12}));
    add("S_odd", F::SOdd, O, kDim, terms({{1, 5}, {1, 7}, {1, 9}, {1, 11}}), D({2, 2, 2, 2}));

    // Saito-Kurokawa lifts, odd weight
    add("P_odd", F::POdd, O, s51, mono(11), D({4, 6}));
    add("P_odd", F::POdd, O, s33, mono(7), D({2, 6}));
    add("P_odd", F::POdd, O, s16, mono(5), D({4, 6}));
    add("P_odd", F::POdd, O, kDim, terms({{1, 5}, {5, 7}, {5, 9}, {5, 11}}), D({4, 6}));

    // general type, odd weight
    add("G_odd", F::GOdd, O, s51, terms({{1, 15}, {1, 17}, {-1, 21}}), D({4, 6, 4, 6}));
    add("G_odd", F::GOdd, O, s33, terms({{1, 11}, {1, 19}, {-1, 23}}), D({2, 4, 6, 12}));
    add("G_odd", F::GOdd, O, s16, terms({{1, 15}, {1, 17}, {-1, 27}}), D({4, 6, 10, 12}));
    add("G_odd", F::GOdd, O, kDim, terms({{9, 9}, {6, 11}, {10, 13}, {-2, 15}, {1, 17}}),
        mul(D({2, 2, 2, 6}), onep(2)));

    // M_{2k}
    add("M_even", F::MEven, E, s6, {1}, D({4, 6, 10, 12}));
    add("M_even", F::MEven, E, s51, mono(12), D({4, 6, 4, 6}));
    add("M_even", F::MEven, E, s42, mono(4), D({2, 4, 4, 10}));
    add("M_even", F::MEven, E, s411, mul(mono(12), onep(4)), D({2, 4, 6, 12}));
    add("M_even", F::MEven, E, s33, mono(20), D({2, 4, 6, 12}));
    add("M_even", F::MEven, E, s321, terms({{1, 8}, {1, 10}, {1, 12}, {1, 14}}), D({2, 6, 6, 10}));
    v.back().erratum =
        "printed numerator t^8(1+t^2+t^4+t^8); t^8(1+t^2+t^4+t^6) is the even part of the printed M_k series "
        "and gives the printed row k=14 (multiplicity 6, not 5)";
    add("M_even", F::MEven, E, s3111, mul(mono(6), onep(4)), D({2, 4, 6, 12}));
    add("M_even", F::MEven, E, s222, mono(2), D({2, 4, 6, 12}));
    add("M_even", F::MEven, E, s2211, mono(14), D({2, 4, 4, 10}));
    add("M_even", F::MEven, E, s21111, mono(6), D({4, 6, 4, 6}));
    add("M_even", F::MEven, E, s16, mono(30), D({4, 6, 10, 12}));
    add("M_even", F::MEven, E, kDim, mul(onep(2), onep(4)), D({2, 2, 2, 2}));

    // Siegel Eisenstein series
    add("E^F", F::EF, E, s6, terms({{1, 0}, {-1, 2}, {1, 4}}), D({2}));
    add("E^F", F::EF, E, s42, mono(4), D({2}));
    add("E^F", F::EF, E, s222, mono(2), D({2}));
    for (int i : {s51, s411, s33, s321, s3111, s2211, s21111, s16}) add("E^F", F::EF, E, i, {}, {1});

    // Klingen Eisenstein series
    add("E^Q", F::EQ, E, s6, mono(12), D({4, 6}));
    add("E^Q", F::EQ, E, s51, mono(12), D({4, 6}));
    add("E^Q", F::EQ, E, s42, mono(8), D({2, 4}));
    add("E^Q", F::EQ, E, s321, mono(8), D({2, 6}));
    add("E^Q", F::EQ, E, s3111, mono(6), D({4, 6}));
    add("E^Q", F::EQ, E, s222, mono(8), D({2, 6}));
    add("E^Q", F::EQ, E, s21111, mono(6), D({4, 6}));
    for (int i : {s411, s33, s2211, s16}) add("E^Q", F::EQ, E, i, {}, {1});
    add("E^Q", F::EQ, E, kDim, terms({{15, 6}}), D({2, 2}));

    // S_{2k}
    add("S_even", F::SEven, E, s6, terms({{1, 10}, {1, 12}, {-1, 22}}), D({4, 6, 10, 12}));
    add("S_even", F::SEven, E, s51, terms({{1, 16}, {1, 18}, {-1, 22}}), D({4, 6, 4, 6}));
    add("S_even", F::SEven, E, s42, terms({{1, 8}, {1, 14}, {-1, 18}}), D({2, 4, 4, 10}));
    add("S_even", F::SEven, E, s411, mul(mono(12), onep(4)), D({2, 4, 6, 12}));
    add("S_even", F::SEven, E, s33, mono(20), D({2, 4, 6, 12}));
    add("S_even", F::SEven, E, s321, terms({{1, 10}, {1, 12}, {2, 14}, {1, 18}, {-1, 24}}), D({2, 6, 6, 10}));
    add("S_even", F::SEven, E, s3111, terms({{1, 8}, {1, 10}, {1, 18}, {-1, 20}}), D({2, 4, 6, 12}));
    add("S_even", F::SEven, E, s222, terms({{1, 6}, {1, 14}, {-1, 18}}), D({2, 4, 6, 12}));
    add("S_even", F::SEven, E, s2211, mono(14), D({2, 4, 4, 10}));
    add("S_even", F::SEven, E, s21111, terms({{1, 10}, {1, 12}, {-1, 16}}), D({4, 6, 4, 6}));
    add("S_even", F::SEven, E, s16, mono(30), D({4, 6, 10, 12}));
    add("S_even", F::SEven, E, kDim, terms({{5, 6}, {4, 8}, {-5, 10}}), D({2, 2, 2, 2}));

    // Saito-Kurokawa lifts, even weight
    add("P_even", F::PEven, E, s6, mono(10), D({2, 6}));
    add("P_even", F::PEven, E, s42, mono(8), D({2, 4}));
    add("P_even", F::PEven, E, s222, mono(6), D({2, 4}));
    add("P_even", F::PEven, E, kDim, terms({{5, 6}, {14, 8}, {15, 10}, {10, 12}}), D({4, 6}));

    // general type, even weight
    add("G_even", F::GEven, E, s6, terms({{1, 20}, {1, 22}, {1, 24}, {-1, 32}, {-1, 34}}), D({4, 6, 10, 12}));
    add("G_even", F::GEven, E, s42, terms({{1, 12}, {1, 14}, {-1, 22}}), D({2, 4, 4, 10}));
    add("G_even", F::GEven, E, s222, terms({{1, 12}, {1, 14}, {-1, 24}}), D({2, 4, 6, 12}));
    add("G_even", F::GEven, E, kDim, terms({{10, 8}, {21, 10}, {9, 12}, {-1, 14}, {-15, 16}}), D({2, 2, 4, 6}));

    add("M_k(Gamma_0[2])", F::Gamma0M, A, kDim, onep(19), D({2, 4, 4, 6}));
    return v;
  }();
  return all;
}

long computed_coefficient(const SeriesSpec& s, long w) {
  const PacketDecomposition d = decompose(w, 0);
  S6Decomp x;
  switch (s.family) {
    case SeriesFamily::M:
    case SeriesFamily::MEven: x = d.M(); break;
    case SeriesFamily::SOdd:
    case SeriesFamily::SEven: x = d.S(); break;
    case SeriesFamily::EF: x = d.F; break;
    case SeriesFamily::EQ: x = d.Q; break;
    case SeriesFamily::POdd:
    case SeriesFamily::PEven: x = d.P; break;
    case SeriesFamily::GOdd:
    case SeriesFamily::GEven: x = d.G; break;
    case SeriesFamily::Gamma0M: return restrict_dimension(d.M(), Level::Gamma0);
  }
  return s.irrep < 0 ? x.dimension() : x[s.irrep];
}

std::vector<SeriesResult> verify_tables(int max_order, const std::vector<SeriesSpec>& specs) {
  std::vector<SeriesResult> out;
  for (const auto& s : specs) {
    SeriesResult r{s.label, std::nullopt};
    const auto coeffs = expand(s, max_order);
    for (int w = 0; w <= max_order && !r.mismatch; ++w) {
      const bool in_range = s.parity == Parity::All || (s.parity == Parity::Even) == (w % 2 == 0);
      // off-parity coefficients have to vanish in the series itself
      const long got = in_range ? computed_coefficient(s, w) : 0;
      if (coeffs[w] != got) r.mismatch = SeriesMismatch{w, coeffs[w], got};
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace siegel2
