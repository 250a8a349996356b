#include "siegel2/packets.hpp"

#include "siegel2/elliptic_dims.hpp"
#include "siegel2/euler.hpp"

#include <map>
#include <mutex>

namespace siegel2 {

namespace {

S6Decomp s(const Partition& p, long times = 1) { return S6Decomp::irreducible(p, times); }

const Partition p6{6}, p51{5, 1}, p42{4, 2}, p411{4, 1, 1}, p33{3, 3}, p321{3, 2, 1}, p3111{3, 1, 1, 1},
    p222{2, 2, 2}, p2211{2, 2, 1, 1}, p21111{2, 1, 1, 1, 1}, p111111{1, 1, 1, 1, 1, 1};

long d1(long k) { return dim_new(1, k); }
long d2(long k) { return dim_new(2, k); }
long d4(long k) { return dim_new(4, k); }
long dp(long k) { return dim_new_fricke(+1, k); }
long dm(long k) { return dim_new_fricke(-1, k); }

void require_eis_weight(long l, long m) {
  if (m < 0 || l < m) throw std::invalid_argument("need l >= m >= 0");
  if ((l + m) % 2 != 0) throw std::invalid_argument("need l + m even");
  if (l == 0 && m == 0) throw std::invalid_argument("(l, m) = (0, 0) is excluded");
}

}  // namespace

std::string part_name(Part p) {
  static const char* names[] = {"M", "E", "S", "F", "Q", "P", "Y", "G"};
  return names[static_cast<int>(p)];
}

Part parse_part(const std::string& str) {
  for (Part p : kAllParts)
    if (part_name(p) == str) return p;
  throw std::invalid_argument("unknown part '" + str + "' (expected one of M,E,S,F,Q,P,Y,G)");
}

S6Decomp PacketDecomposition::part(Part p) const {
  switch (p) {
    case Part::M: return M();
    case Part::E: return E();
    case Part::S: return S();
    case Part::F: return F;
    case Part::Q: return Q;
    case Part::P: return P;
    case Part::Y: return Y;
    case Part::G: return G;
  }
  return {};
}

bool PacketDecomposition::part_is_conjectural(Part p) const {
  return conjectural && (p == Part::G || p == Part::S || p == Part::M);
}

namespace aux {
S6Decomp A() { return s(p6) + s(p51) + s(p42); }
S6Decomp A_prime() { return s(p6) + s(p42) + s(p222); }
S6Decomp B() { return s(p42) + s(p321) + s(p222); }
S6Decomp B_prime() { return s(p51) + s(p42) + s(p321); }
S6Decomp C() { return s(p3111) + s(p21111); }
S6Decomp C_prime() { return s(p411) + s(p33); }
}  // namespace aux

S6Decomp scalar_total(long k) {
  if (k < 0) return {};
  if (k % 2 != 0) return sign_twist(scalar_total(k - 5));
  const S6Decomp v = s(p222);
  S6Decomp out = symmetric_power(v, k / 2);
  if (k >= 8) out -= symmetric_power(v, k / 2 - 4);
  return out;
}

S6Decomp eisenstein_F(long k, long j) {
  if (j != 0 || k % 2 != 0 || k < 0) return {};
  if (k == 0) return s(p6);
  if (k == 2) return s(p222);
  return aux::A_prime();
}

S6Decomp eisenstein_Q(long k, long j) {
  if (k % 2 != 0 || k <= 2 || j % 2 != 0) return {};
  const long w = k + j;
  return d1(w) * (s(p6) + s(p51)) + (2 * d1(w) + d2(w)) * s(p42) +
         (d1(w) + d2(w)) * (s(p321) + s(p222)) + d4(w) * aux::C();
}

S6Decomp saito_kurokawa(long k, long j) {
  if (j != 0 || k < 0) return {};
  if (k % 2 != 0) {
    const long w = 4 * ((k - 1) / 2);
    return dm(w) * s(p51) + d4(w) * s(p33) + dp(w) * s(p111111);
  }
  const long w = 4 * (k / 2) - 2;
  return d1(w) * s(p6) + (d1(w) + dp(w)) * s(p42) + (d1(w) + dm(w)) * s(p222);
}

S6Decomp yoshida(long k, long j) {
  if (k < 3 || j <= 0 || j % 2 != 0) return {};
  const long a = j + 2 * k - 2, b = j + 2;
  const long mu1 = dp(a) * dp(b) + dm(a) * dm(b);
  const long mu2 = d4(a) * d4(b);
  const long mu3 = dp(a) * dm(b) + dm(a) * dp(b);
  return mu1 * s(p222) + mu2 * s(p21111) + mu3 * s(p111111);
}

S6Decomp euler_eis(long l, long m) {
  require_eis_weight(l, m);
  using namespace aux;
  const long n = l + m + 4, np = l - m + 2;
  // Weight-2 values at m = 0 (k = 3): dim S_2(Gamma_0(N)) read as genus - 1.
  const long e1 = m == 0 ? -1 : d1(m + 2);
  const long e2 = m == 0 ? 1 : d2(m + 2);
  const long e4 = m == 0 ? 0 : d4(m + 2);
  S6Decomp r = (d1(np) - d1(n)) * (A_prime() + B_prime()) + (d2(np) - d2(n)) * B_prime() +
               (d4(np) - d4(n)) * C_prime();
  if (m % 2 == 0) r += A() + B();
  r += 2 * ((e1 - d1(l + 3)) * (A() + B()) + (e2 - d2(l + 3)) * B() + (e4 - d4(l + 3)) * C());
  return r;
}

S6Decomp euler_endo(long l, long m) {
  require_eis_weight(l, m);
  using namespace aux;
  const long n = l + m + 4, q = l - m + 2;
  S6Decomp t = d4(q) * (d4(n) * s(p3111) + d1(n) * s(p33) + (d1(n) + d2(n)) * s(p411));
  t += d2(q) * ((d1(n) + d2(n)) * s(p321) + d4(n) * s(p411) + d1(n) * s(p42) + d1(n) * s(p51));
  t += dp(q) * (dp(n) * s(p42) + dm(n) * s(p51));
  t += dm(q) * (dm(n) * s(p42) + dp(n) * s(p51));
  t += d1(q) * (d1(n) * (A_prime() + B_prime()) + d2(n) * B_prime() + d4(n) * C_prime());
  return -2 * t;
}

S6Decomp general_type_from(long k, long j, const S6Decomp& ec) {
  const long l = j + k - 3, m = k - 3;
  const S6Decomp r = ec - euler_eis(l, m) - euler_endo(l, m) + 2 * yoshida(k, j);
  std::array<long, S6Decomp::kSize> g{};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (r[i] % 4 != 0)
      throw PacketError("general type at (k,j)=(" + std::to_string(k) + "," + std::to_string(j) +
                        "): combination is not divisible by 4");
    g[i] = -r[i] / 4;
  }
  S6Decomp out(g);
  if (!out.is_effective())
    throw PacketError("general type at (k,j)=(" + std::to_string(k) + "," + std::to_string(j) +
                      ") has a negative multiplicity: " + out.to_string());
  return out;
}

namespace {

S6Decomp general_type_vector(long k, long j) {
  return general_type_from(k, j, euler_characteristic(static_cast<int>(j + k - 3), static_cast<int>(k - 3)).decomp);
}

PacketDecomposition compute(long k, long j) {
  PacketDecomposition d;
  d.k = k;
  d.j = j;
  if (k < 0 || j % 2 != 0) return d;
  if (j == 0) {
    const S6Decomp M = scalar_total(k);
    d.F = eisenstein_F(k, 0);
    d.Q = eisenstein_Q(k, 0);
    d.P = saito_kurokawa(k, 0);
    d.G = M - d.F - d.Q - d.P;
    if (!d.G.is_effective())
      throw PacketError("scalar weight " + std::to_string(k) + ": general type part is not effective: " +
                        d.G.to_string());
    return d;
  }
  if (k <= 1) return d;
  if (k == 2) throw UnsupportedError();
  d.Q = eisenstein_Q(k, j);
  d.Y = yoshida(k, j);
  d.G = general_type_vector(k, j);
  d.conjectural = k == 3;
  return d;
}

}  // namespace

S6Decomp general_type(long k, long j) { return decompose(k, j).G; }

long tsushima_dim(long k, long j) {
  if (k < 3 || j < 2 || j % 2 != 0) throw std::invalid_argument("closed dimension formula needs k >= 3, j >= 2 even");
  long num;
  if (k % 2 != 0) {
    num = 2 * (j + 1) * k * k * k + 3 * (j * j - 2 * j - 8) * k * k + (j * j * j - 9 * j * j - 42 * j + 118) * k -
          2 * j * j * j - 9 * j * j + 152 * j - 216;
  } else {
    num = 2 * (j + 1) * k * k * k + 3 * (j * j - 2 * j + 2) * k * k + (j * j * j - 9 * j * j - 12 * j + 28) * k -
          2 * j * j * j - 9 * j * j + 182 * j - 336;
  }
  if (num % 24 != 0) throw std::logic_error("closed dimension formula is not integral");
  return num / 24;
}

PacketDecomposition decompose(long k, long j) {
  if (j < 0) throw std::invalid_argument("j must be non-negative");
  static std::mutex mu;
  static std::map<std::pair<long, long>, PacketDecomposition> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, j});
    if (it != cache.end()) return it->second;
  }
  PacketDecomposition d = compute(k, j);
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace({k, j}, std::move(d)).first->second;
}

std::string level_name(Level g) {
  switch (g) {
    case Level::Gamma2: return "gamma2";
    case Level::Gamma1: return "gamma1";
    case Level::Gamma0: return "gamma0";
    case Level::Sp4Z: return "sp4z";
    case Level::Sp4ZEps: return "sp4z-eps";
  }
  return "";
}

Level parse_level(const std::string& str) {
  for (Level g : {Level::Gamma2, Level::Gamma1, Level::Gamma0, Level::Sp4Z, Level::Sp4ZEps})
    if (level_name(g) == str) return g;
  throw std::invalid_argument("unknown group '" + str + "' (expected gamma2, gamma1, gamma0, sp4z or sp4z-eps)");
}

S3Decomp restrict_gamma1(const S6Decomp& d) {
  return S3Decomp({d.at(p6) + d.at(p42) + d.at(p222), d.at(p51) + d.at(p42) + d.at(p321), d.at(p411) + d.at(p33)});
}

long restrict_dimension(const S6Decomp& d, Level g) {
  switch (g) {
    case Level::Gamma2: return d.dimension();
    case Level::Gamma1: return restrict_gamma1(d).dimension();
    case Level::Gamma0: return d.at(p6) + d.at(p42) + d.at(p222);
    case Level::Sp4Z: return d.at(p6);
    case Level::Sp4ZEps: return d.at(p111111);
  }
  return 0;
}

}  // namespace siegel2
