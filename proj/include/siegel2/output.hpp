#pragma once

// Records and their text / CSV / LaTeX / JSON-line renderings.

#include "siegel2/packets.hpp"

#include <string>
#include <utility>
#include <vector>

namespace siegel2 {

struct OutputRecord {
  long k = 0, j = 0;
  Level group = Level::Gamma2;
  Part part = Part::M;
  /// Partition-keyed, canonical order.  S_6 partitions for gamma2, S_3 for
  /// gamma1, empty for the scalar groups.
  std::vector<std::pair<Partition, long>> multiplicities;
  long dimension = 0;
  bool conjectural = false;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(long k, long j, Level g, Part p);

/// A (possibly virtual) S_6 decomposition without weight data, as used by
/// the euler command.
struct EulerRecord {
  long l = 0, m = 0;
  std::string piece;  // full | eis | endo
  S6Decomp decomp;
};

std::string to_json_line(const OutputRecord& r);
/// Throws std::invalid_argument on malformed input.
OutputRecord from_json_line(const std::string& line);
std::string to_json_line(const EulerRecord& r);

/// "s[6] + s[4,2] + s[2^3]  (dim 15)"
std::string to_text(const OutputRecord& r);
std::string to_text(const EulerRecord& r);

std::string csv_header(Level g);
std::string to_csv_row(const OutputRecord& r);
std::string csv_header_euler();
std::string to_csv_row(const EulerRecord& r);

/// One row per inner vector; several records in a row are split cells,
/// the first part drawn in blue.
std::string latex_table(const std::vector<std::vector<OutputRecord>>& rows, Level g);
std::string latex_row(const EulerRecord& r);

}  // namespace siegel2
