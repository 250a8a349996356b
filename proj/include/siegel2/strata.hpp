#pragma once

// Strata of A_2[2] by automorphism group: seven strata of smooth genus-two
// curves and seven of products of elliptic curves.  Each stratum is expanded
// into the list of its group elements, each carrying the eigenvalues on H^1
// and the cycle type of its action on the six Weierstrass points.

#include "siegel2/cyclotomic.hpp"
#include "siegel2/reprings.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace siegel2 {

/// [[a, b], [c, d]] over Q(zeta_120).
struct Matrix2 {
  CycNum a, b, c, d;

  static Matrix2 identity() { return {CycNum(1), CycNum(0), CycNum(0), CycNum(1)}; }
  CycNum det() const { return a * d - b * c; }
  CycNum trace() const { return a + d; }
  Matrix2 operator-() const { return {-a, -b, -c, -d}; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
  friend auto operator<=>(const Matrix2& x, const Matrix2& y) {
    return std::tie(x.a, x.b, x.c, x.d) <=> std::tie(y.a, y.b, y.c, y.d);
  }
};

/// Polynomial in two formal parameters alpha, beta with CycNum coefficients.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(const CycNum& c) { add({0, 0}, c); }
  static ParamPoly alpha() { return term(1, 0); }
  static ParamPoly beta() { return term(0, 1); }
  static ParamPoly term(int i, int j, const CycNum& c = CycNum(1));

  const std::map<std::pair<int, int>, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ParamPoly& operator+=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const CycNum& c, const ParamPoly& p);
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  void add(const std::pair<int, int>& m, const CycNum& c);
  std::map<std::pair<int, int>, CycNum> terms_;
};

/// Binary form of degree 6: coeff[i] multiplies x^i z^(6-i).  A quintic is
/// a sextic with coeff[6] = 0, whose sixth root is infinity.
struct BinarySextic {
  std::array<ParamPoly, 7> coeff;
};

class StratumError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The scalar c with sum_i f_i (ax+b)^i (cx+d)^(6-i) = c f, i.e. the forced
/// value of u^2 for (gamma, u) to be an automorphism of y^2 = f(x).
/// Throws StratumError if gamma does not preserve f up to a constant
/// independent of the parameters.
CycNum derive_multiplier(const BinarySextic& f, const Matrix2& gamma);

/// Image of i under a permutation of {0..5}.
using Perm6 = std::array<int, 6>;

Perm6 perm_identity();
/// Parses cycle notation on letters 1..6, e.g. "(12)(34)" or "id".
Perm6 perm_from_cycles(const std::string& cycles);
/// (p * q)(i) = p(q(i)).
Perm6 perm_compose(const Perm6& p, const Perm6& q);
Partition perm_cycle_type(const Perm6& p);

enum class Space { M2, A11 };

struct StratumSpec {
  std::string name;
  Space space = Space::M2;
  long euler = 0;

  // Smooth genus-two curves.
  long gamma_order = 0;  // |Gamma| inside SL(2, C)
  BinarySextic f;
  std::string f_label;
  Matrix2 S = Matrix2::identity();
  std::optional<Matrix2> U;
  CycNum rho_S_table;  // as printed, cross-check only
  std::optional<CycNum> rho_U_table;
  Perm6 sigma_S = perm_identity();
  std::optional<Perm6> sigma_U;

  // Pairs of elliptic curves: cyclic factors of orders n1, n2 in {2, 4, 6}.
  int n1 = 0, n2 = 0;
  bool wreath = false;
};

struct GroupElementData {
  std::array<RootOfUnity, 4> eigs;
  Partition cycle_type;
  // Genus-two strata only.
  std::optional<Matrix2> gamma;
  RootOfUnity lambda;
  RootOfUnity u;
  // Elliptic pairs only.
  bool swap = false;
};

struct StratumEnumeration {
  std::string name;
  Space space = Space::M2;
  long euler = 0;
  long group_order = 0;
  std::vector<GroupElementData> elements;
};

const std::vector<StratumSpec>& genus2_strata();
const std::vector<StratumSpec>& elliptic_pair_strata();

/// Materializes all group elements.  For genus-two strata this is the full
/// group Gamma(rho) of pairs (gamma, u) with u^2 = rho(gamma), of order
/// 2|Gamma|; identified pairs (gamma, u) ~ (-gamma, -u) share their data.
StratumEnumeration enumerate_elements(const StratumSpec& s);

/// Same closure, but seeded with the printed rho values and without the
/// u^2 consistency check.  Genus-2 strata only; throws StratumError if the
/// printed values do not close up to a group of order 2|Gamma|.
StratumEnumeration enumerate_with_tabulated_multipliers(const StratumSpec& s);

/// Multiset of (sorted eigenvalue exponents, cycle type): all the Euler sum sees.
std::map<std::pair<std::array<int, 4>, Partition>, long> profile_signature(const StratumEnumeration& e);

/// All fourteen strata, enumerated once.
const std::vector<StratumEnumeration>& all_enumerations();

/// The eigenvalue lambda with lambda + 1/lambda = trace(gamma), lambda of
/// order dividing the order of gamma.  Throws StratumError on failure.
RootOfUnity matrix_eigenvalue(const Matrix2& gamma);

struct MultiplierCheck {
  std::string stratum;
  std::string generator;  // "S" or "U"
  CycNum tabulated;
  CycNum derived;
  bool agrees() const { return tabulated == derived; }
};

/// Derived versus printed multipliers for every generator.
std::vector<MultiplierCheck> multiplier_checks();

}  // namespace siegel2
