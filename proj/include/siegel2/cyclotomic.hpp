#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_120).
//
// Every eigenvalue, multiplier and character value met on the strata of
// A_2[2] has order dividing 120, so one fixed field suffices.  Elements are
// stored densely in the power basis {1, z, ..., z^31} and kept reduced
// modulo the 120th cyclotomic polynomial, which makes equality
// coefficient-wise.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace siegel2 {

inline constexpr int kConductor = 120;
inline constexpr int kCycDegree = 32;  // phi(120)

class CycNum;

class CyclotomicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(long n);
  explicit CycNum(const mpq_class& q);

  /// zeta_120^e for any integer e.
  static CycNum zeta_power(long e);

  /// eps_n^a = zeta_120^(120 a / n).  Throws CyclotomicError unless n | 120.
  static CycNum root_of_unity(int n, long a);

  const std::array<mpq_class, kCycDegree>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const mpq_class& q);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const mpq_class& q) { return a *= q; }
  friend CycNum operator*(const mpq_class& q, CycNum a) { return a *= q; }

  /// Multiplicative inverse.  Throws CyclotomicError on zero.
  CycNum inverse() const;
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

  CycNum pow(long e) const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  /// Lexicographic order on coordinates; only meaningful as a map key.
  friend std::strong_ordering operator<=>(const CycNum& a, const CycNum& b);

  /// The rational value if the element lies in Q.
  std::optional<mpq_class> try_rational() const;
  /// As try_rational, but throws NotRationalError carrying *this otherwise.
  mpq_class as_rational() const;

  std::string to_string() const;

 private:
  friend CycNum reduce_dense(const mpq_class* coeffs, std::size_t n);
  std::array<mpq_class, kCycDegree> c_{};
};

class NotRationalError : public std::domain_error {
 public:
  explicit NotRationalError(CycNum value)
      : std::domain_error("cyclotomic value is not rational: " + value.to_string()),
        value_(std::move(value)) {}
  const CycNum& value() const { return value_; }

 private:
  CycNum value_;
};

/// Reduce sum_i coeffs[i] z^i (any length) modulo Phi_120.
CycNum reduce_dense(const mpq_class* coeffs, std::size_t n);

/// Coefficients of Phi_120, constant term first (33 entries, monic).
const std::array<long, kCycDegree + 1>& cyclotomic_polynomial_120();

/// Returns s with s^2 = a.  a must be a root of unity of order d with
/// 2d | 120; otherwise throws CyclotomicError.
CycNum sqrt_of_root_of_unity(const CycNum& a);

/// A root of unity zeta_120^e, stored by its exponent mod 120.  This is the
/// compact form used for eigenvalues; to_cyc() embeds it in the field.
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  constexpr explicit RootOfUnity(long exponent)
      : e_(static_cast<int>(((exponent % kConductor) + kConductor) % kConductor)) {}

  /// eps_n^a.  Throws CyclotomicError unless n | 120.
  static RootOfUnity of_order(int n, long a);

  constexpr int exponent() const { return e_; }
  int order() const;
  RootOfUnity inverse() const { return RootOfUnity(-e_); }
  RootOfUnity pow(long k) const { return RootOfUnity(static_cast<long>(e_) * k); }
  CycNum to_cyc() const { return CycNum::zeta_power(e_); }

  /// Finds the exponent of `a` if it is a 120th root of unity.
  static std::optional<RootOfUnity> recognize(const CycNum& a);

  friend constexpr RootOfUnity operator*(RootOfUnity a, RootOfUnity b) {
    return RootOfUnity(a.e_ + b.e_);
  }
  friend constexpr RootOfUnity operator-(RootOfUnity a) { return RootOfUnity(a.e_ + kConductor / 2); }
  friend constexpr auto operator<=>(RootOfUnity, RootOfUnity) = default;

 private:
  int e_ = 0;
};

}  // namespace siegel2
