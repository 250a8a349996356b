#include "siegel2/reprings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace siegel2 {

namespace {

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  if (p.empty()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

// Reverse lexicographic enumeration, largest first part first.
void generate(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> make_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  generate(n, n, cur, out);
  return out;
}

// Murnaghan-Nakayama on beta-sets: removing an r-border strip is moving a
// bead from b to b - r; the sign counts beads jumped over.
long mn(std::vector<int> beta, const Partition& mu, std::size_t k) {
  if (k == mu.size()) return 1;
  const int r = mu[k];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int t = b - r;
    if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > t && c < b) ++between;
    std::vector<int> next = beta;
    next[i] = t;
    const long v = mn(std::move(next), mu, k + 1);
    total += (between % 2 == 0) ? v : -v;
  }
  return total;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long centralizer_order(const Partition& mu) {
  std::map<int, int> counts;
  for (int x : mu) ++counts[x];
  long z = 1;
  for (auto [len, c] : counts) {
    for (int i = 0; i < c; ++i) z *= len;
    z *= factorial(c);
  }
  return z;
}

Partition power_cycle_type(const Partition& mu, long r) {
  Partition out;
  for (int len : mu) {
    const long g = std::gcd(static_cast<long>(len), r);
    for (long i = 0; i < g; ++i) out.push_back(static_cast<int>(len / g));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

CharacterTable build_table(int n) {
  CharacterTable t;
  t.n = n;
  t.parts = make_partitions(n);
  t.group_order = factorial(n);
  const std::size_t sz = t.parts.size();
  t.chi.assign(sz, std::vector<long>(sz));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) t.chi[i][j] = character_value(t.parts[i], t.parts[j]);
  for (const auto& mu : t.parts) {
    const long z = centralizer_order(mu);
    t.centralizer.push_back(z);
    t.class_size.push_back(t.group_order / z);
  }
  return t;
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  static const std::vector<Partition> p3 = make_partitions(3);
  static const std::vector<Partition> p6 = make_partitions(6);
  if (n == 3) return p3;
  if (n == 6) return p6;
  throw std::invalid_argument("only partitions of 3 and 6 are tabulated");
}

std::size_t partition_index(const Partition& p) {
  const int n = partition_sum(p);
  if (n != 3 && n != 6) throw std::invalid_argument("partition " + partition_key(p) + " is not of 3 or 6");
  const auto& all = partitions(n);
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end()) throw std::invalid_argument("not a partition: " + partition_key(p));
  return static_cast<std::size_t>(it - all.begin());
}

std::string partition_label(const Partition& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (i > 0) out << ',';
    out << p[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  out << ']';
  return out.str();
}

std::string partition_key(const Partition& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ']';
  return out.str();
}

Partition parse_partition(const std::string& s) {
  std::string body = s;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  Partition p;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto caret = tok.find('^');
    try {
      std::size_t used = 0;
      const int part = std::stoi(tok.substr(0, caret), &used);
      int rep = 1;
      if (caret != std::string::npos) rep = std::stoi(tok.substr(caret + 1));
      for (int i = 0; i < rep; ++i) p.push_back(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse partition '" + s + "'");
    }
  }
  if (!is_partition(p)) throw std::invalid_argument("cannot parse partition '" + s + "'");
  return p;
}

long character_value(const Partition& irrep, const Partition& cls) {
  if (!is_partition(irrep) || !is_partition(cls))
    throw std::invalid_argument("character_value: malformed partition");
  if (partition_sum(irrep) != partition_sum(cls))
    throw std::invalid_argument("character_value: " + partition_key(irrep) + " and " +
                                partition_key(cls) + " partition different integers");
  const std::size_t len = irrep.size();
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = irrep[i] + static_cast<int>(len - 1 - i);
  return mn(std::move(beta), cls, 0);
}

std::size_t CharacterTable::power_class(std::size_t cls, long r) const {
  return partition_index(power_cycle_type(parts.at(cls), r));
}

const CharacterTable& character_table(int n) {
  static const CharacterTable t3 = build_table(3);
  static const CharacterTable t6 = build_table(6);
  if (n == 3) return t3;
  if (n == 6) return t6;
  throw std::invalid_argument("character tables exist only for S_3 and S_6");
}

template <int N>
IsoDecomp<N> IsoDecomp<N>::irreducible(const Partition& p, long times) {
  if (partition_sum(p) != N) throw std::invalid_argument("partition " + partition_key(p) + " has the wrong size");
  IsoDecomp d;
  d.mult_[partition_index(p)] = times;
  return d;
}

template <int N>
long IsoDecomp<N>::dimension() const {
  const auto& t = character_table(N);
  const std::size_t id = kSize - 1;  // class [1^N]
  long d = 0;
  for (std::size_t i = 0; i < kSize; ++i) d += mult_[i] * t.chi[i][id];
  return d;
}

template <int N>
bool IsoDecomp<N>::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](long x) { return x == 0; });
}

template <int N>
bool IsoDecomp<N>::is_effective() const {
  return std::all_of(mult_.begin(), mult_.end(), [](long x) { return x >= 0; });
}

template <int N>
std::array<long, IsoDecomp<N>::kSize> IsoDecomp<N>::character() const {
  const auto& t = character_table(N);
  std::array<long, kSize> chi{};
  for (std::size_t c = 0; c < kSize; ++c)
    for (std::size_t i = 0; i < kSize; ++i) chi[c] += mult_[i] * t.chi[i][c];
  return chi;
}

template <int N>
IsoDecomp<N> IsoDecomp<N>::from_character(const std::array<long, kSize>& chi) {
  const auto& t = character_table(N);
  IsoDecomp d;
  for (std::size_t i = 0; i < kSize; ++i) {
    long s = 0;
    for (std::size_t c = 0; c < kSize; ++c) s += t.class_size[c] * chi[c] * t.chi[i][c];
    if (s % t.group_order != 0) throw std::logic_error("class function is not a virtual character");
    d.mult_[i] = s / t.group_order;
  }
  return d;
}

template <int N>
std::string IsoDecomp<N>::to_string() const {
  const auto& parts = partitions(N);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < kSize; ++i) {
    long m = mult_[i];
    if (m == 0) continue;
    if (first) {
      if (m < 0) out << '-';
    } else {
      out << (m < 0 ? " - " : " + ");
    }
    first = false;
    m = m < 0 ? -m : m;
    if (m != 1) out << m;
    out << 's' << partition_label(parts[i]);
  }
  return first ? "0" : out.str();
}

template <int N>
IsoDecomp<N> power_sum_to_schur(const ClassCoeffs<N>& c) {
  const auto& t = character_table(N);
  constexpr std::size_t sz = partition_count(N);
  std::array<long, sz> m{};
  for (std::size_t w = 0; w < sz; ++w) {
    mpq_class s = 0;
    for (std::size_t mu = 0; mu < sz; ++mu) s += c[mu] * t.chi[w][mu];
    s.canonicalize();
    if (s.get_den() != 1)
      throw std::logic_error("power_sum_to_schur: multiplicity of s" + partition_label(t.parts[w]) +
                             " is " + s.get_str() + ", not an integer");
    if (!s.get_num().fits_slong_p()) throw std::overflow_error("power_sum_to_schur: multiplicity overflow");
    m[w] = s.get_num().get_si();
  }
  return IsoDecomp<N>(m);
}

template <int N>
IsoDecomp<N> tensor(const IsoDecomp<N>& a, const IsoDecomp<N>& b) {
  auto ca = a.character();
  const auto cb = b.character();
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] *= cb[i];
  return IsoDecomp<N>::from_character(ca);
}

template <int N>
IsoDecomp<N> symmetric_power(const IsoDecomp<N>& v, long n) {
  if (n < 0) return {};
  const auto& t = character_table(N);
  constexpr std::size_t sz = partition_count(N);
  const auto chi = v.character();
  std::array<long, sz> out{};
  for (std::size_t c = 0; c < sz; ++c) {
    // sym[i] = character of Sym^i at this class.
    std::vector<long> sym(static_cast<std::size_t>(n) + 1, 0);
    sym[0] = 1;
    for (long i = 1; i <= n; ++i) {
      long acc = 0;
      for (long r = 1; r <= i; ++r) acc += chi[t.power_class(c, r)] * sym[i - r];
      if (acc % i != 0) throw std::logic_error("symmetric_power: non-integral character value");
      sym[i] = acc / i;
    }
    out[c] = sym[n];
  }
  return IsoDecomp<N>::from_character(out);
}

S6Decomp induce_from_H(const S3Decomp& v) {
  const S6Decomp img[3] = {
      S6Decomp::irreducible({6}) + S6Decomp::irreducible({5, 1}) + S6Decomp::irreducible({4, 2}),
      S6Decomp::irreducible({4, 2}) + S6Decomp::irreducible({3, 2, 1}) + S6Decomp::irreducible({2, 2, 2}),
      S6Decomp::irreducible({3, 1, 1, 1}) + S6Decomp::irreducible({2, 1, 1, 1, 1}),
  };
  S6Decomp out;
  for (std::size_t i = 0; i < 3; ++i) out += v[i] * img[i];
  return out;
}

template class IsoDecomp<3>;
template class IsoDecomp<6>;
template IsoDecomp<3> power_sum_to_schur<3>(const ClassCoeffs<3>&);
template IsoDecomp<6> power_sum_to_schur<6>(const ClassCoeffs<6>&);
template IsoDecomp<3> tensor<3>(const IsoDecomp<3>&, const IsoDecomp<3>&);
template IsoDecomp<6> tensor<6>(const IsoDecomp<6>&, const IsoDecomp<6>&);
template IsoDecomp<3> symmetric_power<3>(const IsoDecomp<3>&, long);
template IsoDecomp<6> symmetric_power<6>(const IsoDecomp<6>&, long);

}  // namespace siegel2
