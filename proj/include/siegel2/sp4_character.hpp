#pragma once

// Characters of irreducible Sp(4) representations V_{l,m} as integer Laurent
// polynomials in two variables x, y (eigenvalues x, 1/x, y, 1/y).

#include "siegel2/cyclotomic.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace siegel2 {

using Monomial = std::pair<int, int>;  // x^a y^b

/// Sparse integer Laurent polynomial in x, y.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  static LaurentPoly2 monomial(int a, int b, long c = 1);

  const std::map<Monomial, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long coeff(int a, int b) const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Exact quotient a / b.  Throws std::logic_error if b does not divide a.
  static LaurentPoly2 divide_exact(const LaurentPoly2& a, const LaurentPoly2& b);

  /// Sum of coefficients (value at x = y = 1).
  long value_at_one() const;

  std::string to_string() const;

 private:
  void add(const Monomial& m, long c);
  std::map<Monomial, long> terms_;
};

class WeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values of s_{<l,m>} on root-of-unity inputs as integer vectors over
/// zeta_120^0..119 (not reduced).
using RootSum = std::array<long, kConductor>;

/// s_{<l,m>} together with its highest weight.
class LaurentChar {
 public:
  LaurentChar(int l, int m, LaurentPoly2 poly) : l_(l), m_(m), poly_(std::move(poly)) {}

  int l() const { return l_; }
  int m() const { return m_; }
  const LaurentPoly2& poly() const { return poly_; }

  /// Value at the eigenvalue multiset {x, 1/x, y, 1/y}.  Throws
  /// std::invalid_argument if eigs is not closed under inversion.
  CycNum evaluate(const std::array<CycNum, 4>& eigs) const;

  /// Same on roots of unity, left unreduced as coefficients of zeta_120^e.
  RootSum evaluate(const std::array<RootOfUnity, 4>& eigs) const;

 private:
  int l_, m_;
  LaurentPoly2 poly_;
};

/// det[[x^p - x^-p, y^p - y^-p], [x^q - x^-q, y^q - y^-q]].
LaurentPoly2 alternant(int p, int q);

/// Memoized s_{<l,m>}; throws WeightError unless l >= m >= 0.
std::shared_ptr<const LaurentChar> character_polynomial(int l, int m);

/// Weyl dimension (l-m+1)(m+1)(l+2)(l+m+3)/6.
long sp4_dimension(int l, int m);

}  // namespace siegel2
