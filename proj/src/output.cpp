#include "siegel2/output.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace siegel2 {

namespace {

using ojson = nlohmann::ordered_json;

const char* kConjecturalNote = " [conjectural: k=3 Eisenstein convention]";

template <int N>
std::vector<std::pair<Partition, long>> keyed(const IsoDecomp<N>& d) {
  std::vector<std::pair<Partition, long>> out;
  for (std::size_t i = 0; i < IsoDecomp<N>::kSize; ++i) out.emplace_back(partitions(N)[i], d[i]);
  return out;
}

std::string decomp_text(const OutputRecord& r) {
  if (r.multiplicities.empty()) return "";
  if (r.group == Level::Gamma1) {
    S3Decomp d;
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i) d[i] = r.multiplicities[i].second;
    return d.to_string();
  }
  S6Decomp d;
  for (std::size_t i = 0; i < r.multiplicities.size(); ++i) d[i] = r.multiplicities[i].second;
  return d.to_string();
}

int group_degree(Level g) {
  if (g == Level::Gamma2) return 6;
  if (g == Level::Gamma1) return 3;
  return 0;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string latex_cell(const std::vector<long>& xs, bool dimension) {
  // first value blue, the rest plain; empty multiplicity cells stay blank
  if (xs.size() == 1) return xs[0] || dimension ? std::to_string(xs[0]) : "";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0 && !dimension) continue;
    if (!out.empty()) out += "+";
    out += i == 0 ? "{\\color{blue}" + std::to_string(xs[i]) + "}" : std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

OutputRecord make_record(long k, long j, Level g, Part p) {
  const PacketDecomposition d = decompose(k, j);
  const S6Decomp x = d.part(p);
  OutputRecord r;
  r.k = k;
  r.j = j;
  r.group = g;
  r.part = p;
  r.conjectural = d.part_is_conjectural(p);
  if (g == Level::Gamma2) r.multiplicities = keyed(x);
  if (g == Level::Gamma1) r.multiplicities = keyed(restrict_gamma1(x));
  r.dimension = restrict_dimension(x, g);
  return r;
}

std::string to_json_line(const OutputRecord& r) {
  ojson j;
  j["k"] = r.k;
  j["j"] = r.j;
  j["group"] = level_name(r.group);
  j["part"] = part_name(r.part);
  ojson m = ojson::object();
  for (const auto& [p, n] : r.multiplicities) m[partition_key(p)] = n;
  j["multiplicities"] = m;
  j["dimension"] = r.dimension;
  j["conjectural"] = r.conjectural;
  return j.dump();
}

OutputRecord from_json_line(const std::string& line) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
  try {
    OutputRecord r;
    r.k = j.at("k").get<long>();
    r.j = j.at("j").get<long>();
    r.group = parse_level(j.at("group").get<std::string>());
    r.part = parse_part(j.at("part").get<std::string>());
    const int n = group_degree(r.group);
    const auto& m = j.at("multiplicities");
    if (n == 0 && !m.empty()) throw std::invalid_argument("scalar group carries multiplicities");
    if (n != 0) {
      if (m.size() != partition_count(n)) throw std::invalid_argument("wrong number of multiplicities");
      for (const auto& p : partitions(n)) r.multiplicities.emplace_back(p, m.at(partition_key(p)).get<long>());
    }
    r.dimension = j.at("dimension").get<long>();
    r.conjectural = j.at("conjectural").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
}

std::string to_json_line(const EulerRecord& r) {
  ojson j;
  j["l"] = r.l;
  j["m"] = r.m;
  j["piece"] = r.piece;
  ojson m = ojson::object();
  for (const auto& [p, n] : keyed(r.decomp)) m[partition_key(p)] = n;
  j["multiplicities"] = m;
  j["dimension"] = r.decomp.dimension();
  return j.dump();
}

std::string to_text(const OutputRecord& r) {
  std::string out;
  if (r.multiplicities.empty())
    out = "dim " + std::to_string(r.dimension);
  else
    out = decomp_text(r) + "  (dim " + std::to_string(r.dimension) + ")";
  if (r.conjectural) out += kConjecturalNote;
  return out;
}

std::string to_text(const EulerRecord& r) { return r.decomp.to_string(); }

std::string csv_header(Level g) {
  std::string out = "k,j,group,part";
  const int n = group_degree(g);
  if (n) for (const auto& p : partitions(n)) out += "," + csv_quote(partition_key(p));
  return out + ",dimension,conjectural";
}

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream os;
  os << r.k << ',' << r.j << ',' << level_name(r.group) << ',' << part_name(r.part);
  for (const auto& [p, n] : r.multiplicities) os << ',' << n;
  os << ',' << r.dimension << ',' << (r.conjectural ? "true" : "false");
  return os.str();
}

std::string csv_header_euler() {
  std::string out = "l,m,piece";
  for (const auto& p : partitions(6)) out += "," + csv_quote(partition_key(p));
  return out + ",dimension";
}

std::string to_csv_row(const EulerRecord& r) {
  std::ostringstream os;
  os << r.l << ',' << r.m << ',' << r.piece;
  for (std::size_t i = 0; i < S6Decomp::kSize; ++i) os << ',' << r.decomp[i];
  os << ',' << r.decomp.dimension();
  return os.str();
}

std::string latex_table(const std::vector<std::vector<OutputRecord>>& rows, Level g) {
  const int n = group_degree(g);
  const std::size_t cols = n ? partition_count(n) : 0;
  bool vector_weight = false;
  for (const auto& row : rows)
    for (const auto& r : row) vector_weight = vector_weight || r.j != 0;

  std::ostringstream os;
  os << "\\begin{tabular}{" << (vector_weight ? "cc" : "c") << std::string(cols, 'c') << "|c}\n";
  os << (vector_weight ? "$k$ & $j$" : "$k$");
  if (n)
    for (const auto& p : partitions(n)) os << " & $s" << partition_label(p) << "$";
  os << " & $d$ \\\\\n\\hline\n";
  for (const auto& row : rows) {
    if (row.empty()) continue;
    os << row.front().k;
    if (vector_weight) os << " & " << row.front().j;
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<long> xs;
      for (const auto& r : row) xs.push_back(r.multiplicities.at(c).second);
      os << " & " << latex_cell(xs, false);
    }
    std::vector<long> ds;
    for (const auto& r : row) ds.push_back(r.dimension);
    os << " & " << latex_cell(ds, true) << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string latex_row(const EulerRecord& r) {
  std::ostringstream os;
  os << r.l << " & " << r.m;
  for (std::size_t i = 0; i < S6Decomp::kSize; ++i) os << " & " << (r.decomp[i] ? std::to_string(r.decomp[i]) : "");
  os << " & " << r.decomp.dimension() << " \\\\";
  return os.str();
}

}  // namespace siegel2
