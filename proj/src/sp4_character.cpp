#include "siegel2/sp4_character.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

namespace siegel2 {

LaurentPoly2 LaurentPoly2::monomial(int a, int b, long c) {
  LaurentPoly2 p;
  p.add({a, b}, c);
  return p;
}

void LaurentPoly2::add(const Monomial& m, long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long LaurentPoly2::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

// Division with respect to the lexicographic order on exponents: the
// leading term of the remainder is always cancelled against the leading
// term of the divisor.
LaurentPoly2 LaurentPoly2::divide_exact(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (b.is_zero()) throw std::logic_error("Laurent division by zero");
  const auto [lead_m, lead_c] = *b.terms_.rbegin();
  LaurentPoly2 rem = a, q;
  if (a.is_zero()) return q;
  // The lowest term of a quotient times b is the lowest term of a.
  const Monomial lowest_a = a.terms_.begin()->first, lowest_b = b.terms_.begin()->first;
  const Monomial floor{lowest_a.first - lowest_b.first, lowest_a.second - lowest_b.second};
  while (!rem.is_zero()) {
    const auto [m, c] = *rem.terms_.rbegin();
    const Monomial shift{m.first - lead_m.first, m.second - lead_m.second};
    if (c % lead_c != 0 || shift < floor) throw std::logic_error("Laurent division is not exact");
    const long f = c / lead_c;
    q.add(shift, f);
    for (const auto& [mb, cb] : b.terms_) rem.add({mb.first + shift.first, mb.second + shift.second}, -f * cb);
  }
  return q;
}

long LaurentPoly2::value_at_one() const {
  long s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    long c = it->second;
    const auto [a, b] = it->first;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    c = c < 0 ? -c : c;
    const bool constant = a == 0 && b == 0;
    if (c != 1 || constant) out << c;
    if (a != 0) out << "x" << (a != 1 ? "^" + std::to_string(a) : "");
    if (b != 0) out << "y" << (b != 1 ? "^" + std::to_string(b) : "");
  }
  return out.str();
}

LaurentPoly2 alternant(int p, int q) {
  const LaurentPoly2 xp = LaurentPoly2::monomial(p, 0) - LaurentPoly2::monomial(-p, 0);
  const LaurentPoly2 yp = LaurentPoly2::monomial(0, p) - LaurentPoly2::monomial(0, -p);
  const LaurentPoly2 xq = LaurentPoly2::monomial(q, 0) - LaurentPoly2::monomial(-q, 0);
  const LaurentPoly2 yq = LaurentPoly2::monomial(0, q) - LaurentPoly2::monomial(0, -q);
  return xp * yq - yp * xq;
}

long sp4_dimension(int l, int m) {
  if (m < 0 || l < m) throw WeightError("Sp(4) weight needs l >= m >= 0");
  const long L = l, M = m;
  return (L - M + 1) * (M + 1) * (L + 2) * (L + M + 3) / 6;
}

std::shared_ptr<const LaurentChar> character_polynomial(int l, int m) {
  if (m < 0 || l < m) throw WeightError("Sp(4) weight needs l >= m >= 0, got (" + std::to_string(l) +
                                        "," + std::to_string(m) + ")");
  static std::mutex mu;
  static std::map<Monomial, std::shared_ptr<const LaurentChar>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({l, m});
    if (it != cache.end()) return it->second;
  }
  static const LaurentPoly2 denominator = alternant(2, 1);
  auto ch = std::make_shared<const LaurentChar>(
      l, m, LaurentPoly2::divide_exact(alternant(l + 2, m + 1), denominator));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace({l, m}, std::move(ch)).first->second;
}

namespace {

// Splits a multiset {x, 1/x, y, 1/y} into (x, y).
template <class T, class Inv>
std::pair<T, T> pair_up(const std::array<T, 4>& eigs, Inv inv) {
  std::vector<T> rest(eigs.begin(), eigs.end());
  const T x = rest.front();
  rest.erase(rest.begin());
  const T xi = inv(x);
  auto it = std::find(rest.begin(), rest.end(), xi);
  if (it == rest.end()) throw std::invalid_argument("eigenvalue multiset is not closed under inversion");
  rest.erase(it);
  if (!(rest[1] == inv(rest[0]))) throw std::invalid_argument("eigenvalue multiset is not closed under inversion");
  return {x, rest[0]};
}

}  // namespace

CycNum LaurentChar::evaluate(const std::array<CycNum, 4>& eigs) const {
  const auto [x, y] = pair_up(eigs, [](const CycNum& z) { return z.inverse(); });
  const auto xi = x.inverse(), yi = y.inverse();
  CycNum total;
  for (const auto& [mono, c] : poly_.terms()) {
    const auto [a, b] = mono;
    CycNum t = (a >= 0 ? x.pow(a) : xi.pow(-a)) * (b >= 0 ? y.pow(b) : yi.pow(-b));
    total += t * mpq_class(c);
  }
  return total;
}

RootSum LaurentChar::evaluate(const std::array<RootOfUnity, 4>& eigs) const {
  const auto [x, y] = pair_up(eigs, [](RootOfUnity z) { return z.inverse(); });
  RootSum out{};
  const long ex = x.exponent(), ey = y.exponent();
  for (const auto& [mono, c] : poly_.terms()) {
    long e = (mono.first * ex + mono.second * ey) % kConductor;
    if (e < 0) e += kConductor;
    out[static_cast<std::size_t>(e)] += c;
  }
  return out;
}

}  // namespace siegel2
