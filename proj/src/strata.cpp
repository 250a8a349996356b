#include "siegel2/strata.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

namespace siegel2 {

ParamPoly ParamPoly::term(int i, int j, const CycNum& c) {
  ParamPoly p;
  p.add({i, j}, c);
  return p;
}

void ParamPoly::add(const std::pair<int, int>& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

ParamPoly operator*(const CycNum& c, const ParamPoly& p) {
  ParamPoly r;
  for (const auto& [m, v] : p.terms_) r.add(m, c * v);
  return r;
}

namespace {

// Linear forms in x as coefficient vectors, constant term first.
using XPoly = std::vector<CycNum>;

XPoly xpoly_mul(const XPoly& p, const XPoly& q) {
  XPoly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

XPoly xpoly_pow(const XPoly& p, int e) {
  XPoly r{CycNum(1)};
  for (int i = 0; i < e; ++i) r = xpoly_mul(r, p);
  return r;
}

}  // namespace

CycNum derive_multiplier(const BinarySextic& f, const Matrix2& g) {
  const XPoly num{g.b, g.a}, den{g.d, g.c};
  std::array<ParamPoly, 7> t;
  for (int i = 0; i <= 6; ++i) {
    if (f.coeff[i].is_zero()) continue;
    const XPoly lin = xpoly_mul(xpoly_pow(num, i), xpoly_pow(den, 6 - i));
    for (int k = 0; k <= 6; ++k) t[k] += lin[k] * f.coeff[i];
  }
  std::optional<CycNum> c;
  for (int k = 0; k <= 6 && !c; ++k) {
    if (f.coeff[k].is_zero()) continue;
    const auto& [mono, v] = *f.coeff[k].terms().begin();
    auto it = t[k].terms().find(mono);
    c = it == t[k].terms().end() ? CycNum(0) : it->second / v;
  }
  if (!c) throw StratumError("derive_multiplier: zero polynomial");
  for (int k = 0; k <= 6; ++k)
    if (!(t[k] == *c * f.coeff[k])) throw StratumError("derive_multiplier: gamma does not stabilize stratum");
  if (c->is_zero()) throw StratumError("derive_multiplier: degenerate transformation");
  return *c;
}

Perm6 perm_identity() { return {0, 1, 2, 3, 4, 5}; }

Perm6 perm_from_cycles(const std::string& cycles) {
  Perm6 p = perm_identity();
  if (cycles == "id") return p;
  std::vector<int> cur;
  bool open = false;
  for (char ch : cycles) {
    if (ch == '(') {
      if (open) throw std::invalid_argument("bad cycle string " + cycles);
      open = true;
      cur.clear();
    } else if (ch == ')') {
      if (!open) throw std::invalid_argument("bad cycle string " + cycles);
      for (std::size_t i = 0; i < cur.size(); ++i) p[cur[i]] = cur[(i + 1) % cur.size()];
      open = false;
    } else if (ch >= '1' && ch <= '6') {
      cur.push_back(ch - '1');
    } else if (ch != ' ') {
      throw std::invalid_argument("bad cycle string " + cycles);
    }
  }
  std::vector<int> seen(p.begin(), p.end());
  std::sort(seen.begin(), seen.end());
  if (open || seen != std::vector<int>{0, 1, 2, 3, 4, 5}) throw std::invalid_argument("bad cycle string " + cycles);
  return p;
}

Perm6 perm_compose(const Perm6& p, const Perm6& q) {
  Perm6 r{};
  for (int i = 0; i < 6; ++i) r[i] = p[q[i]];
  return r;
}

Partition perm_cycle_type(const Perm6& p) {
  std::array<bool, 6> seen{};
  Partition out;
  for (int i = 0; i < 6; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

CycNum eps(int n, long a = 1) { return CycNum::root_of_unity(n, a); }

Matrix2 diag(const CycNum& x) { return {x, CycNum(0), CycNum(0), x.inverse()}; }

BinarySextic sextic(std::initializer_list<std::pair<int, ParamPoly>> terms) {
  BinarySextic f;
  for (const auto& [deg, c] : terms) f.coeff[deg] += c;
  return f;
}

ParamPoly num(long n) { return ParamPoly(CycNum(n)); }

StratumSpec genus2(std::string name, long euler, long order, std::string f_label, BinarySextic f, Matrix2 S,
                   CycNum rho_S, const std::string& sigma_S) {
  StratumSpec s;
  s.name = std::move(name);
  s.space = Space::M2;
  s.euler = euler;
  s.gamma_order = order;
  s.f_label = std::move(f_label);
  s.f = std::move(f);
  s.S = std::move(S);
  s.rho_S_table = std::move(rho_S);
  s.sigma_S = perm_from_cycles(sigma_S);
  return s;
}

StratumSpec with_U(StratumSpec s, CycNum rho_U, const std::string& sigma_U) {
  s.U = Matrix2{CycNum(0), CycNum(1), CycNum(-1), CycNum(0)};
  s.rho_U_table = std::move(rho_U);
  s.sigma_U = perm_from_cycles(sigma_U);
  return s;
}

std::vector<StratumSpec> build_genus2() {
  const ParamPoly a = ParamPoly::alpha(), b = ParamPoly::beta();
  std::vector<StratumSpec> v;
  // The generic stratum has no printed equation; any sextic with two free
  // parameters serves, since only -id acts.
  v.push_back(genus2("C2", -1, 2, "x^6+a*x^4+b*x^3+1", sextic({{6, num(1)}, {4, a}, {3, b}, {0, num(1)}}),
                     diag(CycNum(-1)), CycNum(1), "id"));
  v.push_back(genus2("C4", 3, 4, "x^6+a*x^4+b*x^2+1", sextic({{6, num(1)}, {4, a}, {2, b}, {0, num(1)}}),
                     diag(eps(4)), CycNum(-1), "(12)(34)(56)"));
  v.push_back(with_U(genus2("Q8", -2, 8, "x(x^4+a*x^2+1)", sextic({{5, num(1)}, {3, a}, {1, num(1)}}),
                            diag(eps(4)), CycNum(1), "(23)(45)"),
                     CycNum(-1), "(16)(24)(35)"));
  // Printed sigma_U = (14)(25)(36) does not conjugate (123)(456) to its
  // inverse, as U S U^-1 = S^-1 requires.  With roots 1,2,3 = r e3^i and
  // 4,5,6 = (-1/r) e3^i, x -> -1/x is (14)(26)(35).
  v.push_back(with_U(genus2("Q12", -2, 12, "x^6+a*x^3-1", sextic({{6, num(1)}, {3, a}, {0, num(-1)}}),
                            diag(eps(6)), CycNum(1), "(123)(456)"),
                     CycNum(-1), "(14)(26)(35)"));
  {
    // S = (-1/sqrt 2) [[1, e8], [e8^3, 1]], sqrt 2 = e8 + e8^-1.
    const CycNum k = -(eps(8) + eps(8, -1)) * mpq_class(1, 2);
    const Matrix2 S{k, k * eps(8), k * eps(8, 3), k};
    v.push_back(with_U(genus2("O", 1, 48, "x(x^4+1)", sextic({{5, num(1)}, {1, num(1)}}), S, eps(8, 3), "(1264)"),
                       CycNum(-1), "(16)(23)(45)"));
  }
  v.push_back(with_U(genus2("Q24", 1, 24, "x^6-1", sextic({{6, num(1)}, {0, num(-1)}}), diag(eps(12)),
                            CycNum(-1), "(123456)"),
                     CycNum(1), "(16)(25)(34)"));
  v.push_back(genus2("C10", 1, 10, "x(x^5-1)", sextic({{6, num(1)}, {1, num(-1)}}), diag(eps(10)), eps(10, 6),
                     "(23456)"));
  return v;
}

std::vector<StratumSpec> build_elliptic_pairs() {
  struct Row {
    const char* name;
    int n1, n2;
    bool wreath;
    long euler;
  };
  const Row rows[] = {
      {"C2xC2", 2, 2, false, 1}, {"C2wrS2", 2, 2, true, -1}, {"C2xC4", 2, 4, false, -1},
      {"C2xC6", 2, 6, false, -1}, {"C4wrS2", 4, 4, true, 1}, {"C4xC6", 4, 6, false, 1},
      {"C6wrS2", 6, 6, true, 1},
  };
  std::vector<StratumSpec> v;
  for (const auto& r : rows) {
    StratumSpec s;
    s.name = r.name;
    s.space = Space::A11;
    s.euler = r.euler;
    s.n1 = r.n1;
    s.n2 = r.n2;
    s.wreath = r.wreath;
    v.push_back(std::move(s));
  }
  return v;
}

// Multiplicative order of a finite-order matrix.
int matrix_order(const Matrix2& g) {
  const Matrix2 id = Matrix2::identity();
  Matrix2 p = g;
  for (int n = 1; n <= kConductor; ++n) {
    if (p == id) return n;
    p = p * g;
  }
  throw StratumError("matrix has no finite order dividing 120");
}

std::array<RootOfUnity, 4> h1_eigenvalues(RootOfUnity lambda, RootOfUnity u) {
  return {lambda * u.inverse(), lambda.inverse() * u.inverse(), lambda.inverse() * u, lambda * u};
}

struct Node {
  Matrix2 gamma;
  RootOfUnity u;
  Perm6 sigma;
};

StratumEnumeration enumerate_genus2(const StratumSpec& s, bool tabulated) {
  std::vector<Node> gens;
  auto add_generator = [&](const Matrix2& g, const Perm6& sigma, const CycNum& table) {
    if (!g.det().is_one()) throw StratumError(s.name + ": generator does not have determinant 1");
    const CycNum rho = tabulated ? table : derive_multiplier(s.f, g);
    const auto root = RootOfUnity::recognize(sqrt_of_root_of_unity(rho));
    gens.push_back({g, *root, sigma});
    gens.push_back({g, -*root, sigma});
  };
  add_generator(s.S, s.sigma_S, s.rho_S_table);
  if (s.U) add_generator(*s.U, *s.sigma_U, *s.rho_U_table);
  gens.push_back({-Matrix2::identity(), RootOfUnity::of_order(2, 1), perm_identity()});

  std::map<std::pair<Matrix2, RootOfUnity>, Perm6> seen;
  std::map<Matrix2, Perm6> perm_of;
  std::deque<Node> queue;
  const Node start{Matrix2::identity(), RootOfUnity(0), perm_identity()};
  seen.emplace(std::make_pair(start.gamma, start.u), start.sigma);
  perm_of.emplace(start.gamma, start.sigma);
  queue.push_back(start);
  const std::size_t limit = 2 * static_cast<std::size_t>(s.gamma_order);
  while (!queue.empty()) {
    const Node cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Node next{cur.gamma * g.gamma, cur.u * g.u, perm_compose(cur.sigma, g.sigma)};
      auto [pit, fresh_gamma] = perm_of.try_emplace(next.gamma, next.sigma);
      if (!fresh_gamma && pit->second != next.sigma)
        throw StratumError(s.name + ": the same matrix acts by two different permutations");
      if (seen.emplace(std::make_pair(next.gamma, next.u), next.sigma).second) {
        if (seen.size() > limit) throw StratumError(s.name + ": closure exceeds 2|Gamma| elements");
        queue.push_back(next);
      }
    }
  }
  if (seen.size() != limit) throw StratumError(s.name + ": closure has the wrong order");
  if (perm_of.size() != static_cast<std::size_t>(s.gamma_order))
    throw StratumError(s.name + ": |Gamma| does not match");

  StratumEnumeration out;
  out.name = s.name;
  out.space = Space::M2;
  out.euler = s.euler;
  out.group_order = static_cast<long>(limit);
  std::map<Matrix2, int> u_count;
  for (const auto& [key, sigma] : seen) {
    const auto& [gamma, u] = key;
    if (++u_count[gamma] == 1 && !tabulated && !(derive_multiplier(s.f, gamma) == u.pow(2).to_cyc()))
      throw StratumError(s.name + ": u^2 differs from the multiplier forced by f");
    GroupElementData e;
    e.gamma = gamma;
    e.u = u;
    e.lambda = matrix_eigenvalue(gamma);
    e.eigs = h1_eigenvalues(e.lambda, u);
    e.cycle_type = perm_cycle_type(sigma);
    out.elements.push_back(std::move(e));
  }
  for (const auto& [gamma, n] : u_count)
    if (n != 2) throw StratumError(s.name + ": expected exactly two values of u per matrix");
  return out;
}

// Generator of the automorphism group of the elliptic curve with |Aut| = n:
// exponent of its H^{1,0} eigenvalue in zeta_120, and its action on the three
// finite Weierstrass points.
RootOfUnity elliptic_eigenvalue(int n, long a) {
  switch (n) {
    case 2: return RootOfUnity::of_order(2, a);
    case 4: return RootOfUnity::of_order(4, a);
    case 6: return RootOfUnity::of_order(6, a);
    default: throw StratumError("elliptic automorphism group must have order 2, 4 or 6");
  }
}

std::array<int, 3> elliptic_perm(int n, long a) {
  if (n == 4 && a % 2 != 0) return {1, 0, 2};
  if (n == 6) {
    const int r = static_cast<int>(((a % 3) + 3) % 3);
    return {r, (1 + r) % 3, (2 + r) % 3};
  }
  return {0, 1, 2};
}

StratumEnumeration enumerate_elliptic_pair(const StratumSpec& s) {
  if (s.wreath && s.n1 != s.n2) throw StratumError(s.name + ": wreath product needs equal factors");
  StratumEnumeration out;
  out.name = s.name;
  out.space = Space::A11;
  out.euler = s.euler;
  out.group_order = static_cast<long>(s.n1) * s.n2 * (s.wreath ? 2 : 1);
  for (long a = 0; a < s.n1; ++a) {
    for (long b = 0; b < s.n2; ++b) {
      const RootOfUnity z1 = elliptic_eigenvalue(s.n1, a), z2 = elliptic_eigenvalue(s.n2, b);
      const auto p1 = elliptic_perm(s.n1, a), p2 = elliptic_perm(s.n2, b);
      Perm6 sigma{};
      for (int i = 0; i < 3; ++i) {
        sigma[i] = p1[i];
        sigma[3 + i] = 3 + p2[i];
      }
      GroupElementData e;
      e.eigs = {z1, z1.inverse(), z2, z2.inverse()};
      e.cycle_type = perm_cycle_type(sigma);
      out.elements.push_back(std::move(e));
      if (!s.wreath) continue;
      // (g1, g2) followed by the factor swap: on H^{1,0} the matrix
      // [[0, z2], [z1, 0]], whose eigenvalues square to z1 z2.
      const CycNum root = sqrt_of_root_of_unity((z1 * z2).to_cyc());
      const RootOfUnity r = *RootOfUnity::recognize(root);
      Perm6 tau{};
      for (int i = 0; i < 3; ++i) {
        tau[i] = 3 + p2[i];
        tau[3 + i] = p1[i];
      }
      GroupElementData w;
      w.swap = true;
      w.eigs = {r, -r, r.inverse(), -r.inverse()};
      w.cycle_type = perm_cycle_type(tau);
      out.elements.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

RootOfUnity matrix_eigenvalue(const Matrix2& gamma) {
  const int d = matrix_order(gamma);
  const CycNum tr = gamma.trace();
  for (int e = 0; e < kConductor; ++e) {
    const RootOfUnity z(e);
    if (z.pow(d).exponent() != 0) continue;
    if (z.to_cyc() + z.inverse().to_cyc() == tr) return z;
  }
  throw StratumError("no root-of-unity eigenvalue matches the trace");
}

const std::vector<StratumSpec>& genus2_strata() {
  static const std::vector<StratumSpec> v = build_genus2();
  return v;
}

const std::vector<StratumSpec>& elliptic_pair_strata() {
  static const std::vector<StratumSpec> v = build_elliptic_pairs();
  return v;
}

StratumEnumeration enumerate_elements(const StratumSpec& s) {
  return s.space == Space::M2 ? enumerate_genus2(s, false) : enumerate_elliptic_pair(s);
}

StratumEnumeration enumerate_with_tabulated_multipliers(const StratumSpec& s) {
  if (s.space != Space::M2) throw StratumError(s.name + ": no tabulated multipliers on elliptic pairs");
  return enumerate_genus2(s, true);
}

std::map<std::pair<std::array<int, 4>, Partition>, long> profile_signature(const StratumEnumeration& e) {
  std::map<std::pair<std::array<int, 4>, Partition>, long> out;
  for (const auto& g : e.elements) {
    std::array<int, 4> key;
    for (int i = 0; i < 4; ++i) key[i] = static_cast<int>(g.eigs[i].exponent());
    std::sort(key.begin(), key.end());
    ++out[{key, g.cycle_type}];
  }
  return out;
}

const std::vector<StratumEnumeration>& all_enumerations() {
  static const std::vector<StratumEnumeration> all = [] {
    std::vector<StratumEnumeration> v;
    for (const auto& s : genus2_strata()) v.push_back(enumerate_elements(s));
    for (const auto& s : elliptic_pair_strata()) v.push_back(enumerate_elements(s));
    return v;
  }();
  return all;
}

std::vector<MultiplierCheck> multiplier_checks() {
  std::vector<MultiplierCheck> out;
  for (const auto& s : genus2_strata()) {
    out.push_back({s.name, "S", s.rho_S_table, derive_multiplier(s.f, s.S)});
    if (s.U) out.push_back({s.name, "U", *s.rho_U_table, derive_multiplier(s.f, *s.U)});
  }
  return out;
}

}  // namespace siegel2
