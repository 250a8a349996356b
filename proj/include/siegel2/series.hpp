#pragma once

// Printed generating series for multiplicities and dimensions, used purely
// as test oracles against the computed decompositions.

#include <optional>
#include <string>
#include <vector>

namespace siegel2 {

using IntPoly = std::vector<long>;  // constant term first

enum class Parity { All, Even, Odd };

/// Which computed quantity a series encodes.
enum class SeriesFamily {
  M,        // M_k, every k
  SOdd,     // S_{2k+1}
  MEven,    // M_{2k}
  EF,       // E^(F)_{2k}
  EQ,       // E^(Q)_{2k}
  POdd,     // S^(P)_{2k+1}
  GOdd,     // S^(G)_{2k+1}
  SEven,    // S_{2k}
  PEven,    // S^(P)_{2k}
  GEven,    // S^(G)_{2k}
  Gamma0M,  // dim M_k(Gamma_0[2])
};

struct SeriesSpec {
  std::string label;
  SeriesFamily family = SeriesFamily::M;
  int irrep = -1;  // index into the S_6 partitions; -1 for total dimension
  IntPoly numerator;
  IntPoly denominator;
  Parity parity = Parity::All;
  /// Non-empty when the printed series was corrected; says what was printed
  /// and which other printed data fixes the correction.
  std::string erratum;
};

/// Coefficients of numerator/denominator up to t^order.  Throws
/// std::invalid_argument if the denominator has zero constant term.
std::vector<long> expand(const SeriesSpec& s, int order);

/// Every series printed in the scalar tables, with the total-dimension
/// series for the other groups.
const std::vector<SeriesSpec>& printed_series();

/// The computed value the series predicts at weight w.
long computed_coefficient(const SeriesSpec& s, long w);

struct SeriesMismatch {
  long weight;
  long expected;
  long got;
};

struct SeriesResult {
  std::string label;
  std::optional<SeriesMismatch> mismatch;
  bool passed() const { return !mismatch; }
};

/// Compares each series with the pipeline for weights 0..max_order.
std::vector<SeriesResult> verify_tables(int max_order, const std::vector<SeriesSpec>& specs = printed_series());

}  // namespace siegel2
