// siegel2: isotypical decompositions of Siegel modular forms of degree 2 and level 2.
//
// exit codes: 0 ok, 1 verification failure, 2 usage, 3 unsupported region

#include "siegel2/euler.hpp"
#include "siegel2/output.hpp"
#include "siegel2/packets.hpp"
#include "siegel2/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace siegel2;

namespace {

enum class Format { Text, Csv, Latex, Json };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "latex") return Format::Latex;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv, latex or json)");
}

struct Range {
  long lo, hi;
};

// "7" or "3..12"
Range parse_range(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const auto dots = s.find("..");
    Range r;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
    } else {
      const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stol(a, &used);
      if (used != a.size()) throw std::invalid_argument("");
      r.hi = std::stol(b, &used);
      if (used != b.size()) throw std::invalid_argument("");
    }
    if (r.lo > r.hi) throw std::invalid_argument("");
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + " range '" + s + "' (expected N or A..B)");
  }
}

std::vector<Part> parse_parts(const std::string& s) {
  std::vector<Part> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_part(item));
  if (out.empty()) throw std::invalid_argument("empty --part");
  return out;
}

void check_weight(long k, long j) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (j < 0 || j % 2 != 0) throw std::invalid_argument("j must be even and non-negative");
  if (k == 2 && j > 0) throw UnsupportedError();
}

void emit(const std::vector<std::vector<OutputRecord>>& rows, Level g, Format f, bool label_rows) {
  switch (f) {
    case Format::Text:
      for (const auto& row : rows)
        for (const auto& r : row) {
          if (label_rows) std::cout << "k=" << r.k << " j=" << r.j << " ";
          if (label_rows || row.size() > 1) std::cout << part_name(r.part) << ": ";
          std::cout << to_text(r) << "\n";
        }
      break;
    case Format::Csv:
      std::cout << csv_header(g) << "\n";
      for (const auto& row : rows)
        for (const auto& r : row) std::cout << to_csv_row(r) << "\n";
      break;
    case Format::Latex: std::cout << latex_table(rows, g); break;
    case Format::Json:
      for (const auto& row : rows)
        for (const auto& r : row) std::cout << to_json_line(r) << "\n";
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotypical decompositions of Siegel modular forms on Gamma[2]"};
  app.require_subcommand(1);

  std::string format = "text", group = "gamma2", parts = "M";

  auto* dec = app.add_subcommand("decompose", "decomposition of M_{k,j}(Gamma[2]) or one of its parts");
  long k = 0, j = 0;
  dec->add_option("--k", k, "weight k")->required();
  dec->add_option("--j", j, "weight j (even)")->default_val(0);
  dec->add_option("--part", parts, "comma list of M,E,S,F,Q,P,Y,G")->default_val("M");
  dec->add_option("--group", group, "gamma2, gamma1, gamma0, sp4z or sp4z-eps")->default_val("gamma2");
  dec->add_option("--format", format, "text, csv, latex or json")->default_val("text");

  auto* tab = app.add_subcommand("table", "one row per (k,j)");
  std::string krange, jrange = "0";
  tab->add_option("--k", krange, "k or a..b")->required();
  tab->add_option("--j", jrange, "j or a..b; odd j skipped")->default_val("0");
  tab->add_option("--part", parts, "comma list; several parts give split cells")->default_val("M");
  tab->add_option("--group", group, "gamma2, gamma1, gamma0, sp4z or sp4z-eps")->default_val("gamma2");
  tab->add_option("--format", format, "text, csv, latex or json")->default_val("text");

  auto* eul = app.add_subcommand("euler", "S_6-equivariant Euler characteristic of V_{l,m}");
  int l = 0, m = 0;
  std::string piece = "full";
  eul->add_option("--l", l, "l >= m")->required();
  eul->add_option("--m", m, "m >= 0")->required();
  eul->add_option("--piece", piece, "full, eis or endo")->default_val("full");
  eul->add_option("--format", format, "text, csv, latex or json")->default_val("text");

  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  int max_weight = 60;
  ver->add_option("--max-weight", max_weight, "top weight for the scalar checks")->default_val(60);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*dec) {
      const Format f = parse_format(format);
      const Level g = parse_level(group);
      const auto ps = parse_parts(parts);
      check_weight(k, j);
      std::vector<OutputRecord> row;
      for (Part p : ps) row.push_back(make_record(k, j, g, p));
      emit({row}, g, f, false);
      return 0;
    }
    if (*tab) {
      const Format f = parse_format(format);
      const Level g = parse_level(group);
      const auto ps = parse_parts(parts);
      const Range kr = parse_range(krange, "k"), jr = parse_range(jrange, "j");
      if (kr.lo < 0 || jr.lo < 0) throw std::invalid_argument("weights must be non-negative");
      std::vector<std::vector<OutputRecord>> rows;
      for (long jj = jr.lo; jj <= jr.hi; ++jj) {
        if (jj % 2 != 0) continue;
        for (long kk = kr.lo; kk <= kr.hi; ++kk) {
          check_weight(kk, jj);
          std::vector<OutputRecord> row;
          for (Part p : ps) row.push_back(make_record(kk, jj, g, p));
          rows.push_back(std::move(row));
        }
      }
      if (rows.empty()) throw std::invalid_argument("empty range");
      emit(rows, g, f, f == Format::Text);
      return 0;
    }
    if (*eul) {
      const Format f = parse_format(format);
      if (m < 0 || l < m) throw std::invalid_argument("need l >= m >= 0");
      EulerRecord r{l, m, piece, {}};
      if (piece == "full")
        r.decomp = euler_characteristic(l, m).decomp;
      else if (piece == "eis")
        r.decomp = euler_eis(l, m);
      else if (piece == "endo")
        r.decomp = euler_endo(l, m);
      else
        throw std::invalid_argument("unknown piece '" + piece + "' (expected full, eis or endo)");
      switch (f) {
        case Format::Text: std::cout << to_text(r) << "\n"; break;
        case Format::Csv: std::cout << csv_header_euler() << "\n" << to_csv_row(r) << "\n"; break;
        case Format::Latex: std::cout << latex_row(r) << "\n"; break;
        case Format::Json: std::cout << to_json_line(r) << "\n"; break;
      }
      return 0;
    }
    if (*ver) {
      if (max_weight < 0) throw std::invalid_argument("--max-weight must be non-negative");
      VerifyOptions o;
      o.max_weight = max_weight;
      bool ok = true;
      for (const auto& r : run_criteria(o)) {
        std::cout << format_line(r) << "\n";
        for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
        ok = ok && r.passed;
      }
      std::cout << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const UnsupportedError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
