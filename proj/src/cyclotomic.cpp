#include "siegel2/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace siegel2 {

namespace {

using IntPoly = std::vector<long>;

// Exact division by a monic integer polynomial.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
  return q;
}

IntPoly cyclotomic(int n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic(d));
  return p;
}

const std::array<CycNum, kConductor>& zeta_table() {
  static const std::array<CycNum, kConductor> table = [] {
    std::array<CycNum, kConductor> t;
    std::vector<mpq_class> buf(kConductor);
    for (int e = 0; e < kConductor; ++e) {
      std::fill(buf.begin(), buf.end(), mpq_class(0));
      buf[e] = 1;
      t[e] = reduce_dense(buf.data(), buf.size());
    }
    return t;
  }();
  return table;
}

}  // namespace

const std::array<long, kCycDegree + 1>& cyclotomic_polynomial_120() {
  static const std::array<long, kCycDegree + 1> phi = [] {
    IntPoly p = cyclotomic(kConductor);
    if (p.size() != kCycDegree + 1 || p.back() != 1)
      throw std::logic_error("unexpected shape of Phi_120");
    std::array<long, kCycDegree + 1> out{};
    std::copy(p.begin(), p.end(), out.begin());
    return out;
  }();
  return phi;
}

CycNum reduce_dense(const mpq_class* coeffs, std::size_t n) {
  const auto& phi = cyclotomic_polynomial_120();
  std::vector<mpq_class> work(coeffs, coeffs + n);
  if (work.size() < kCycDegree) work.resize(kCycDegree);
  for (std::size_t i = work.size(); i-- > kCycDegree;) {
    if (sgn(work[i]) == 0) continue;
    const mpq_class c = work[i];
    for (int j = 0; j <= kCycDegree; ++j)
      if (phi[j] != 0) work[i - kCycDegree + j] -= c * phi[j];
  }
  CycNum r;
  for (int i = 0; i < kCycDegree; ++i) r.c_[i] = work[i];
  return r;
}

CycNum::CycNum(long n) { c_[0] = n; }

CycNum::CycNum(const mpq_class& q) { c_[0] = q; }

CycNum CycNum::zeta_power(long e) {
  const long r = ((e % kConductor) + kConductor) % kConductor;
  return zeta_table()[r];
}

CycNum CycNum::root_of_unity(int n, long a) {
  if (n <= 0 || kConductor % n != 0)
    throw CyclotomicError("root of unity of order " + std::to_string(n) +
                          " does not live in Q(zeta_120)");
  return zeta_power((kConductor / n) * a);
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < kCycDegree; ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum r;
  for (int i = 0; i < kCycDegree; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int i = 0; i < kCycDegree; ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int i = 0; i < kCycDegree; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const mpq_class& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  std::array<mpq_class, 2 * kCycDegree - 1> prod;
  for (int i = 0; i < kCycDegree; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < kCycDegree; ++j)
      if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return reduce_dense(prod.data(), prod.size());
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw CyclotomicError("inverse of zero in Q(zeta_120)");
  // Solve (multiplication-by-this) * v = 1 by Gaussian elimination.
  constexpr int n = kCycDegree;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (int j = 0; j < n; ++j) {
    const CycNum col = *this * zeta_power(j);
    for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw std::logic_error("singular multiplication matrix in Q(zeta_120)");
    std::swap(m[piv], m[col]);
    const mpq_class inv = 1 / m[col][col];
    for (int k = col; k <= n; ++k) m[col][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class f = m[r][col];
      for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  CycNum r;
  for (int i = 0; i < n; ++i) r.c_[i] = m[i][n];
  return r;
}

CycNum CycNum::pow(long e) const {
  CycNum base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycNum acc(1);
  while (k) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return acc;
}

bool operator==(const CycNum& a, const CycNum& b) {
  for (int i = 0; i < kCycDegree; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const CycNum& a, const CycNum& b) {
  for (int i = 0; i < kCycDegree; ++i) {
    const int c = cmp(a.c_[i], b.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::optional<mpq_class> CycNum::try_rational() const {
  for (int i = 1; i < kCycDegree; ++i)
    if (sgn(c_[i]) != 0) return std::nullopt;
  return c_[0];
}

mpq_class CycNum::as_rational() const {
  auto q = try_rational();
  if (!q) throw NotRationalError(*this);
  return *q;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < kCycDegree; ++i) {
    if (sgn(c_[i]) == 0) continue;
    mpq_class v = c_[i];
    if (!first) {
      out << (sgn(v) < 0 ? " - " : " + ");
      v = abs(v);
    }
    first = false;
    if (i == 0) {
      out << v.get_str();
    } else {
      if (v == -1) out << "-";
      else if (v != 1) out << v.get_str() << "*";
      out << "z^" << i;
    }
  }
  return first ? "0" : out.str();
}

CycNum sqrt_of_root_of_unity(const CycNum& a) {
  const auto r = RootOfUnity::recognize(a);
  if (!r) throw CyclotomicError("sqrt_of_root_of_unity: argument is not a 120th root of unity");
  if (r->exponent() % 2 != 0)
    throw CyclotomicError("sqrt_of_root_of_unity: square root leaves Q(zeta_120)");
  return CycNum::zeta_power(r->exponent() / 2);
}

RootOfUnity RootOfUnity::of_order(int n, long a) {
  if (n <= 0 || kConductor % n != 0)
    throw CyclotomicError("root of unity of order " + std::to_string(n) +
                          " does not live in Q(zeta_120)");
  return RootOfUnity((kConductor / n) * a);
}

int RootOfUnity::order() const { return kConductor / std::gcd(e_, kConductor); }

std::optional<RootOfUnity> RootOfUnity::recognize(const CycNum& a) {
  const auto& t = zeta_table();
  for (int e = 0; e < kConductor; ++e)
    if (t[e] == a) return RootOfUnity(e);
  return std::nullopt;
}

}  // namespace siegel2
