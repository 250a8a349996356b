#include "siegel2/verify.hpp"

#include "siegel2/elliptic_dims.hpp"
#include "siegel2/euler.hpp"
#include "siegel2/packets.hpp"
#include "siegel2/sp4_character.hpp"
#include "siegel2/strata.hpp"

#include <exception>
#include <functional>
#include <string>
#include <sstream>

namespace siegel2 {

namespace {

using Row = std::array<long, 11>;

std::string wt(long k, long j) { return "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")"; }

// Runs body and turns any exception into a failure.
CriterionResult guarded(int id, const std::string& name, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  return r;
}

bool same(const S6Decomp& d, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (d[i] != row[i]) return false;
  return true;
}

std::string show(const Row& row) { return S6Decomp(row).to_string(); }

struct PlainRow {
  long w;
  Row mult;
  long dim;
};

struct SplitRow {
  long w;
  Row first, second;
  long dim_first, dim_second;
};

// Table order: [6] [5,1] [4,2] [4,1^2] [3^2] [3,2,1] [3,1^3] [2^3] [2^2,1^2] [2,1^4] [1^6]
const std::vector<PlainRow> kMkRows = {
    {0, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1},   {1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 0},
    {2, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}, 5},   {3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 0},
    {4, {1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0}, 15},  {5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 1},
    {6, {1, 0, 1, 0, 0, 0, 1, 2, 0, 1, 0}, 35},  {7, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}, 5},
    {8, {1, 0, 3, 0, 0, 1, 1, 3, 0, 0, 0}, 69},  {9, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1}, 15},
    {10, {2, 0, 3, 0, 0, 2, 3, 4, 0, 2, 0}, 121}, {11, {0, 1, 0, 1, 2, 0, 0, 0, 1, 0, 1}, 35},
};

const std::vector<PlainRow> kM2kRows = {
    {0, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1},    {2, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}, 5},
    {4, {1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0}, 15},   {6, {1, 0, 1, 0, 0, 0, 1, 2, 0, 1, 0}, 35},
    {8, {1, 0, 3, 0, 0, 1, 1, 3, 0, 0, 0}, 69},   {10, {2, 0, 3, 0, 0, 2, 3, 4, 0, 2, 0}, 121},
    {12, {3, 1, 6, 1, 0, 3, 4, 5, 0, 2, 0}, 195}, {14, {2, 0, 7, 1, 0, 6, 6, 8, 1, 3, 0}, 295},
    {16, {4, 2, 11, 3, 0, 8, 8, 9, 1, 4, 0}, 425},
};

// (P | G)
const std::vector<SplitRow> kSOddRows = {
    {1, {}, {}, 0, 0},
    {3, {}, {}, 0, 0},
    {5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {}, 1, 0},
    {7, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}, {}, 5, 0},
    {9, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, 6, 9},
    {11, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0}, 11, 24},
    {13, {0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 1, 0, 0, 3, 0, 0}, 11, 58},
    {15, {0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 1}, {0, 1, 0, 3, 2, 2, 0, 0, 3, 0, 1}, 16, 105},
};

// (F | Q)
const Row kAprime = {1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0};
const std::vector<SplitRow> kERows = {
    {0, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {}, 1, 0},
    {2, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}, {}, 5, 0},
    {4, kAprime, {}, 15, 0},
    {6, kAprime, {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}, 15, 15},
    {8, kAprime, {0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0}, 15, 30},
    {10, kAprime, {0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0}, 15, 45},
    {12, kAprime, {1, 1, 2, 0, 0, 1, 1, 1, 0, 1, 0}, 15, 60},
    {14, kAprime, {0, 0, 2, 0, 0, 2, 1, 2, 0, 1, 0}, 15, 75},
};

void compare_plain(CriterionResult& r, const std::string& table, const std::vector<PlainRow>& rows) {
  for (const auto& row : rows) {
    const S6Decomp got = decompose(row.w, 0).M();
    if (!same(got, row.mult) || got.dimension() != row.dim)
      r.fail(table + " row " + std::to_string(row.w) + ": expected " + show(row.mult) + " (dim " +
             std::to_string(row.dim) + ") got " + got.to_string() + " (dim " + std::to_string(got.dimension()) + ")");
  }
}

void compare_split(CriterionResult& r, const std::string& table, const std::vector<SplitRow>& rows,
                   const std::function<std::pair<S6Decomp, S6Decomp>(long)>& get) {
  for (const auto& row : rows) {
    const auto [a, b] = get(row.w);
    if (!same(a, row.first) || !same(b, row.second) || a.dimension() != row.dim_first ||
        b.dimension() != row.dim_second)
      r.fail(table + " row " + std::to_string(row.w) + ": expected " + show(row.first) + " | " + show(row.second) +
             " got " + a.to_string() + " | " + b.to_string());
  }
}

long igusa_dim(long k) {
  if (k < 0) return 0;
  if (k % 2 != 0) return igusa_dim(k - 5);
  return (k + 1) * (k * k + 2 * k + 12) / 12;
}

// dim M_k(SL_2(Z)) from the monomials E4^a E6^b.
long level_one_modular(long k) {
  long n = 0;
  for (long a = 0; 4 * a <= k; ++a)
    if ((k - 4 * a) % 6 == 0) ++n;
  return n;
}

// Reruns part of the vector grid with the printed multipliers of one
// stratum.  Returns why the printed reading is untenable, or "" if it
// survives as well as the derived one.
std::string adjudicate_printed_multiplier(const std::string& stratum) {
  const StratumSpec* spec = nullptr;
  for (const auto& s : genus2_strata())
    if (s.name == stratum) spec = &s;
  if (!spec) return "";
  std::vector<StratumEnumeration> alt;
  try {
    for (const auto& e : all_enumerations())
      alt.push_back(e.name == stratum ? enumerate_with_tabulated_multipliers(*spec) : e);
  } catch (const std::exception& e) {
    return std::string("does not define a group action (") + e.what() + ")";
  }
  for (long k = 4; k <= 6; ++k)
    for (long j = 2; j <= 6; j += 2) {
      try {
        const S6Decomp ec = euler_characteristic_of(static_cast<int>(j + k - 3), static_cast<int>(k - 3), alt).decomp;
        const S6Decomp g = general_type_from(k, j, ec);
        const long dim = (eisenstein_Q(k, j) + yoshida(k, j) + g).dimension();
        if (dim != tsushima_dim(k, j))
          return "gives dim " + std::to_string(dim) + " at " + wt(k, j) + " against " + std::to_string(tsushima_dim(k, j));
      } catch (const std::exception& e) {
        return std::string("fails at ") + wt(k, j) + " (" + e.what() + ")";
      }
    }
  return "";
}

}  // namespace

CriterionResult check_series(int max_weight, const std::vector<SeriesSpec>& specs) {
  return guarded(1, "scalar generating series", [&](CriterionResult& r) {
    const auto res = verify_tables(max_weight, specs);
    for (const auto& s : res) {
      if (s.passed()) continue;
      const auto& m = *s.mismatch;
      r.fail("at " + s.label + ", t^" + std::to_string(m.weight) + ": expected " + std::to_string(m.expected) +
             " got " + std::to_string(m.got));
    }
    // oracle against oracle: the M_2k series must be the even part of the M_k series
    for (const auto& even : specs) {
      if (even.family != SeriesFamily::MEven) continue;
      for (const auto& all : specs) {
        if (all.family != SeriesFamily::M || all.irrep != even.irrep) continue;
        const auto a = expand(all, max_weight), b = expand(even, max_weight);
        for (int w = 0; w <= max_weight; w += 2)
          if (a[w] != b[w]) {
            r.fail(even.label + " is not the even part of " + all.label + " at t^" + std::to_string(w));
            break;
          }
      }
    }
    for (const auto& s : specs)
      if (!s.erratum.empty()) r.notes.push_back(s.label + " corrected: " + s.erratum);
    if (r.passed) r.detail = std::to_string(res.size()) + " series agree up to t^" + std::to_string(max_weight);
  });
}

CriterionResult check_closed_formulas(int max_weight) {
  return guarded(2, "closed dimension formulas", [&](CriterionResult& r) {
    for (long k = 0; k <= max_weight; ++k) {
      const long got = decompose(k, 0).M().dimension();
      if (got != igusa_dim(k))
        r.fail("dim M_" + std::to_string(k) + ": Igusa gives " + std::to_string(igusa_dim(k)) + ", got " +
               std::to_string(got));
    }
    for (long k = 2; 2 * k <= max_weight; ++k) {
      const long want = (k - 2) * (2 * k * k + 7 * k - 24) / 3;
      const long got = decompose(2 * k, 0).S().dimension();
      if (got != want)
        r.fail("dim S_" + std::to_string(2 * k) + ": expected " + std::to_string(want) + " got " + std::to_string(got));
    }
    for (long k = 2; 2 * k + 1 <= max_weight; ++k) {
      const long want = (2 * k * k * k - 9 * k * k + 19 * k - 15) / 3;
      const long got = decompose(2 * k + 1, 0).S().dimension();
      if (got != want)
        r.fail("dim S_" + std::to_string(2 * k + 1) + ": expected " + std::to_string(want) + " got " +
               std::to_string(got));
    }
    if (r.passed) r.detail = "dim M_k, dim S_2k, dim S_2k+1 for weights <= " + std::to_string(max_weight);
  });
}

CriterionResult check_printed_rows() {
  return guarded(3, "printed table rows", [&](CriterionResult& r) {
    compare_plain(r, "M_k", kMkRows);
    compare_plain(r, "M_2k", kM2kRows);
    compare_split(r, "S_2k+1 (P|G)", kSOddRows, [](long w) {
      const auto d = decompose(w, 0);
      if (!d.F.is_zero() || !d.Q.is_zero() || !d.Y.is_zero()) throw PacketError("odd weight with Eisenstein part");
      return std::make_pair(d.P, d.G);
    });
    compare_split(r, "E_2k (F|Q)", kERows, [](long w) {
      const auto d = decompose(w, 0);
      return std::make_pair(d.F, d.Q);
    });
    if (r.passed)
      r.detail = std::to_string(kMkRows.size() + kM2kRows.size() + kSOddRows.size() + kERows.size()) +
                 " rows in 4 tables";
  });
}

CriterionResult check_vector_grid(const VerifyOptions& o) {
  return guarded(4, "vector-valued dimension grid", [&](CriterionResult& r) {
    long points = 0;
    for (long k = 4; k <= o.grid_k_max; ++k) {
      for (long j = 2; j <= o.grid_j_max; j += 2) {
        const auto d = decompose(k, j);
        // odd k: M = S, compared as the cusp dimension
        const long got = k % 2 != 0 ? d.S().dimension() : d.M().dimension();
        const long want = tsushima_dim(k, j);
        if (got != want)
          r.fail(wt(k, j) + ": closed formula " + std::to_string(want) + ", assembled " + std::to_string(got));
        ++points;
      }
    }
    for (long j = 2; j <= o.k3_j_max; j += 2) {
      const long got = decompose(3, j).S().dimension();
      const long want = (j - 2) * (j - 3) * (j - 4) / 24;
      if (got != want)
        r.fail(wt(3, j) + ": (j-2)(j-3)(j-4)/24 = " + std::to_string(want) + ", assembled " + std::to_string(got));
      ++points;
    }
    if (r.passed)
      r.detail = "4<=k<=" + std::to_string(o.grid_k_max) + ", 2<=j<=" + std::to_string(o.grid_j_max) +
                 "; k=3, 2<=j<=" + std::to_string(o.k3_j_max) + " (" + std::to_string(points) + " points)";
  });
}

CriterionResult check_euler(int l_max) {
  return guarded(5, "Euler characteristic integrality and parity", [&](CriterionResult& r) {
    long count = 0;
    for (int l = 0; l <= l_max; ++l) {
      for (int m = 0; m <= l; ++m) {
        S6Decomp e;
        try {
          e = euler_characteristic(l, m).decomp;
        } catch (const std::exception& ex) {
          r.fail("(l,m)=(" + std::to_string(l) + "," + std::to_string(m) + "): " + ex.what());
          continue;
        }
        if ((l + m) % 2 != 0 && !e.is_zero())
          r.fail("(l,m)=(" + std::to_string(l) + "," + std::to_string(m) + ") is odd but E_c = " + e.to_string());
        ++count;
      }
    }
    const long triv = euler_characteristic(0, 0).decomp[0];
    if (triv != 2) r.fail("m_s[6](E_c(V_0,0)) = " + std::to_string(triv) + ", expected 2");
    if (r.passed)
      r.detail = std::to_string(count) + " weights with l<=" + std::to_string(l_max) + "; m_s[6](E_c(V_0,0)) = 2";
  });
}

CriterionResult check_effectivity(const VerifyOptions& o) {
  return guarded(6, "packet effectivity", [&](CriterionResult& r) {
    auto check = [&](long k, long j) {
      const auto d = decompose(k, j);
      for (Part p : {Part::F, Part::Q, Part::P, Part::Y, Part::G})
        if (!d.part(p).is_effective()) r.fail(wt(k, j) + ": part " + part_name(p) + " = " + d.part(p).to_string());
      const S6Decomp sum = d.F + d.Q + d.P + d.Y + d.G;
      if (j == 0) {
        // scalar M comes independently from the plethysm
        if (!(sum == scalar_total(k)))
          r.fail(wt(k, j) + ": F+Q+P+Y+G = " + sum.to_string() + " but M = " + scalar_total(k).to_string());
      } else {
        if (!d.F.is_zero() || !d.P.is_zero()) r.fail(wt(k, j) + ": F or P nonzero in vector weight");
        const long want = k == 3 ? (j - 2) * (j - 3) * (j - 4) / 24 : tsushima_dim(k, j);
        if (sum.dimension() != want)
          r.fail(wt(k, j) + ": parts sum to dim " + std::to_string(sum.dimension()) + ", expected " +
                 std::to_string(want));
      }
    };
    for (long k = 0; k <= o.max_weight; ++k) check(k, 0);
    for (long k = 4; k <= o.grid_k_max; ++k)
      for (long j = 2; j <= o.grid_j_max; j += 2) check(k, j);
    for (long j = 2; j <= o.k3_j_max; j += 2) check(3, j);
    if (r.passed) r.detail = "F,Q,P,Y,G >= 0 and sum to M on the scalar range and the vector grid";
  });
}

CriterionResult check_properties(const VerifyOptions& o) {
  return guarded(7, "property suites", [&](CriterionResult& r) {
    // character tables
    for (int n : {3, 6}) {
      const auto& t = character_table(n);
      const std::size_t c = t.parts.size();
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) {
          long rows = 0, cols = 0;
          for (std::size_t x = 0; x < c; ++x) {
            rows += t.class_size[x] * t.chi[a][x] * t.chi[b][x];
            cols += t.chi[x][a] * t.chi[x][b];
          }
          if (rows != (a == b ? t.group_order : 0))
            r.fail("S_" + std::to_string(n) + " row orthogonality fails at (" + std::to_string(a) + "," +
                   std::to_string(b) + ")");
          if (cols != (a == b ? t.centralizer[a] : 0))
            r.fail("S_" + std::to_string(n) + " column orthogonality fails at (" + std::to_string(a) + "," +
                   std::to_string(b) + ")");
        }
    }

    // Weyl dimension and Weyl-group symmetry
    const std::array<RootOfUnity, 4> ones{};
    for (int l = 0; l <= o.weyl_l_max; ++l)
      for (int m = 0; m <= l; ++m) {
        const long want = static_cast<long>(l - m + 1) * (m + 1) * (l + 2) * (l + m + 3) / 6;
        const auto ch = character_polynomial(l, m);
        const RootSum v = ch->evaluate(ones);
        long total = 0;
        for (long x : v) total += x;
        if (total != want || ch->poly().value_at_one() != want || v[0] != want)
          r.fail("Weyl dimension of V_" + std::to_string(l) + "," + std::to_string(m) + ": expected " +
                 std::to_string(want));
        for (const auto& [mono, c] : ch->poly().terms()) {
          const auto [a, b] = mono;
          if (ch->poly().coeff(-a, b) != c || ch->poly().coeff(a, -b) != c || ch->poly().coeff(b, a) != c) {
            r.fail("character of V_" + std::to_string(l) + "," + std::to_string(m) + " is not Weyl invariant");
            break;
          }
        }
      }

    // elliptic dimensions
    for (long k = 0; k <= o.elliptic_max; ++k) {
      const long d1 = dim_new(1, k), d2 = dim_new(2, k), d4 = dim_new(4, k);
      std::string bad;
      if (k % 2 == 0 && k >= 4 && dim_cusp(1, k) != level_one_modular(k) - 1) bad = "level-1 valence count";
      if (dim_cusp(2, k) != d2 + 2 * d1) bad = "Gamma_0(2) old/new";
      if (dim_cusp(4, k) != d4 + 2 * d2 + 3 * d1) bad = "Gamma_0(4) old/new";
      if (k > 2 && dim_new_fricke(+1, k) + dim_new_fricke(-1, k) != d2) bad = "Fricke split";
      if (d1 < 0 || d2 < 0 || d4 < 0 || dim_new_fricke(1, k) < 0 || dim_new_fricke(-1, k) < 0) bad = "negativity";
      if (cusp_gamma2_s3(k).dimension() != dim_cusp(4, k)) bad = "S_3 decomposition of S_k(Gamma(2))";
      if (k % 4 == 0 && k >= 4) {
        const long q = k / 4;
        if (d2 != q - 1 - 2 * (q / 3)) bad = "closed form for new level 2";
        if (d4 != q / 3) bad = "closed form for new level 4";
      }
      if (!bad.empty()) r.fail("weight " + std::to_string(k) + ": " + bad);
    }

    // multipliers: derived against printed
    for (const auto& c : multiplier_checks()) {
      if (c.agrees()) continue;
      const std::string what = c.stratum + " rho(" + c.generator + "): printed " + c.tabulated.to_string() +
                               ", derived " + c.derived.to_string();
      const std::string verdict = adjudicate_printed_multiplier(c.stratum);
      if (verdict.empty())
        r.fail("multiplier mismatch " + what + " that the vector grid cannot decide");
      else
        r.notes.push_back(what + "; derived value used, printed value " + verdict);
    }

    if (r.passed)
      r.detail = "orthogonality, Weyl dimension l<=" + std::to_string(o.weyl_l_max) +
                 ", newform identities to weight " + std::to_string(o.elliptic_max) + ", multipliers (" +
                 std::to_string(r.notes.size()) + " logged discrepancies)";
  });
}

std::vector<CriterionResult> run_criteria(const VerifyOptions& o) {
  return {check_series(o.max_weight), check_closed_formulas(o.max_weight), check_printed_rows(),
          check_vector_grid(o), check_euler(o.euler_l_max), check_effectivity(o), check_properties(o)};
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace siegel2
