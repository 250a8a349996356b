#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel2/output.hpp"

#include <json.hpp>

using namespace siegel2;

namespace {

// commas inside double quotes do not separate
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char ch : s) {
    if (ch == '"') quoted = !quoted;
    if (ch == sep && !quoted)
      out.emplace_back();
    else
      out.back() += ch;
  }
  return out;
}

}  // namespace

TEST_CASE("text") {
  CHECK(to_text(make_record(4, 0, Level::Gamma2, Part::M)) == "s[6] + s[4,2] + s[2^3]  (dim 15)");
  CHECK(to_text(make_record(3, 6, Level::Gamma2, Part::S)) ==
        "s[1^6]  (dim 1) [conjectural: k=3 Eisenstein convention]");
  CHECK(to_text(make_record(3, 6, Level::Gamma2, Part::Y)) == "s[1^6]  (dim 1)");
  CHECK(to_text(make_record(4, 0, Level::Gamma0, Part::M)) == "dim 3");
  CHECK(to_text(make_record(4, 0, Level::Gamma1, Part::M)) == "3s[3] + s[2,1]  (dim 5)");
  CHECK(to_text(make_record(4, 0, Level::Gamma2, Part::G)) == "0  (dim 0)");
  CHECK(to_text(EulerRecord{1, 1, "eis", euler_eis(1, 1)}) == "-s[4,1^2] - s[3^2]");
}

TEST_CASE("JSON round trip") {
  for (Level g : {Level::Gamma2, Level::Gamma1, Level::Gamma0, Level::Sp4Z, Level::Sp4ZEps})
    for (auto [k, j] : {std::pair{4L, 0L}, {11L, 0L}, {3L, 6L}, {6L, 8L}})
      for (Part p : kAllParts) {
        const auto r = make_record(k, j, g, p);
        CHECK(from_json_line(to_json_line(r)) == r);
      }
  const auto j = nlohmann::json::parse(to_json_line(make_record(4, 0, Level::Gamma2, Part::M)));
  CHECK(j["multiplicities"]["[4,2]"] == 1);
  CHECK(j["multiplicities"]["[2,2,2]"] == 1);
  CHECK(j["dimension"] == 15);
  CHECK(j["conjectural"] == false);
  CHECK(nlohmann::json::parse(to_json_line(make_record(4, 0, Level::Sp4Z, Part::M)))["multiplicities"].empty());
}

TEST_CASE("malformed JSON") {
  CHECK_THROWS_AS(from_json_line("{"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_line("{\"k\":4}"), std::invalid_argument);
  auto good = nlohmann::json::parse(to_json_line(make_record(4, 0, Level::Gamma2, Part::M)));
  auto bad = good;
  bad["group"] = "gamma7";
  CHECK_THROWS_AS(from_json_line(bad.dump()), std::invalid_argument);
  bad = good;
  bad["multiplicities"].erase("[6]");
  CHECK_THROWS_AS(from_json_line(bad.dump()), std::invalid_argument);
  bad = good;
  bad["group"] = "sp4z";
  CHECK_THROWS_AS(from_json_line(bad.dump()), std::invalid_argument);
}

TEST_CASE("CSV agrees with JSON") {
  const auto header = split(csv_header(Level::Gamma2), ',');
  REQUIRE(header.size() == 4 + 11 + 2);
  CHECK(header[4] == "\"[6]\"");
  for (long k = 3; k <= 12; ++k) {
    const auto r = make_record(k, 4, Level::Gamma2, Part::M);
    const auto cells = split(to_csv_row(r), ',');
    REQUIRE(cells.size() == header.size());
    const auto j = nlohmann::json::parse(to_json_line(r));
    for (std::size_t i = 4; i < 15; ++i) {
      const std::string key = header[i].substr(1, header[i].size() - 2);
      CHECK(std::stol(cells[i]) == j["multiplicities"][key].get<long>());
    }
    CHECK(std::stol(cells[15]) == r.dimension);
    CHECK(cells[16] == (k == 3 ? "true" : "false"));
  }
  CHECK(split(csv_header(Level::Sp4Z), ',').size() == 6);
  CHECK(split(csv_header_euler(), ',').size() == 3 + 11 + 1);
  CHECK(to_csv_row(EulerRecord{0, 0, "full", S6Decomp::irreducible({6})}) == "0,0,full,1,0,0,0,0,0,0,0,0,0,0,1");
}

TEST_CASE("LaTeX") {
  const auto tab = latex_table({{make_record(11, 0, Level::Gamma2, Part::P), make_record(11, 0, Level::Gamma2, Part::G)}},
                               Level::Gamma2);
  CHECK(tab.find("\\begin{tabular}{ccccccccccccc}") == std::string::npos);
  CHECK(tab.find("11 &  & {\\color{blue}1} &  & 1 & {\\color{blue}1}+1 &") != std::string::npos);
  CHECK(tab.find("{\\color{blue}11}+24 \\\\") != std::string::npos);
  const auto one = latex_table({{make_record(4, 0, Level::Gamma2, Part::M)}}, Level::Gamma2);
  CHECK(one.find("4 & 1 &  & 1 &  &  &  &  & 1 &  &  &  & 15 \\\\") != std::string::npos);
  const auto vec = latex_table({{make_record(4, 2, Level::Gamma2, Part::M)}}, Level::Gamma2);
  CHECK(vec.find("$k$ & $j$") != std::string::npos);
  CHECK(latex_row(EulerRecord{1, 1, "full", euler_eis(1, 1)}) == "1 & 1 &  &  &  & -1 & -1 &  &  &  &  &  &  & -15 \\\\");
}
