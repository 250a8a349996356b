#pragma once

// Representation rings of S_6 and S_3.
//
// Irreducibles and conjugacy classes are both indexed by partitions, in the
// canonical order of the S_6 dimension table: [6], [5,1], [4,2], [4,1^2],
// [3^2], [3,2,1], [3,1^3], [2^3], [2^2,1^2], [2,1^4], [1^6] (reverse
// lexicographic).  That order is part of every serialized output.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel2 {

using Partition = std::vector<int>;

constexpr std::size_t partition_count(int n) {
  return n == 3 ? 3 : n == 6 ? 11 : 0;
}

/// Partitions of n (n in {3, 6}) in canonical order.
const std::vector<Partition>& partitions(int n);

/// Index of `p` in partitions(n); throws std::invalid_argument if absent.
std::size_t partition_index(const Partition& p);

/// "[4,1^2]" style, as in the printed tables.
std::string partition_label(const Partition& p);
/// "[4,1,1]" style, used as structured-output keys.
std::string partition_key(const Partition& p);
/// Inverse of partition_key (also accepts exponent notation).
Partition parse_partition(const std::string& s);

/// chi^irrep(class) by the Murnaghan-Nakayama rule.
long character_value(const Partition& irrep, const Partition& cls);

/// Cached character table of S_n for n in {3, 6}.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> parts;
  std::vector<std::vector<long>> chi;  // chi[irrep][class]
  std::vector<long> class_size;
  std::vector<long> centralizer;       // z_mu
  long group_order = 0;

  /// Class of g^r when g has cycle type parts[cls].
  std::size_t power_class(std::size_t cls, long r) const;
};

const CharacterTable& character_table(int n);

/// A virtual representation of S_N in the Schur basis.
template <int N>
class IsoDecomp {
 public:
  static constexpr std::size_t kSize = partition_count(N);
  static_assert(kSize > 0, "only S_3 and S_6 are supported");

  IsoDecomp() = default;
  explicit IsoDecomp(const std::array<long, kSize>& m) : mult_(m) {}

  /// The irreducible s[p], or a multiple of it.
  static IsoDecomp irreducible(const Partition& p, long times = 1);
  static IsoDecomp trivial() { return irreducible(partitions(N).front()); }
  static IsoDecomp sign() { return irreducible(partitions(N).back()); }

  long operator[](std::size_t i) const { return mult_[i]; }
  long& operator[](std::size_t i) { return mult_[i]; }
  long at(const Partition& p) const { return mult_[partition_index(p)]; }
  const std::array<long, kSize>& multiplicities() const { return mult_; }

  long dimension() const;
  bool is_zero() const;
  bool is_effective() const;

  IsoDecomp& operator+=(const IsoDecomp& o) {
    for (std::size_t i = 0; i < kSize; ++i) mult_[i] += o.mult_[i];
    return *this;
  }
  IsoDecomp& operator-=(const IsoDecomp& o) {
    for (std::size_t i = 0; i < kSize; ++i) mult_[i] -= o.mult_[i];
    return *this;
  }
  friend IsoDecomp operator+(IsoDecomp a, const IsoDecomp& b) { return a += b; }
  friend IsoDecomp operator-(IsoDecomp a, const IsoDecomp& b) { return a -= b; }
  friend IsoDecomp operator-(IsoDecomp a) {
    for (auto& x : a.mult_) x = -x;
    return a;
  }
  friend IsoDecomp operator*(long c, IsoDecomp a) {
    for (auto& x : a.mult_) x *= c;
    return a;
  }
  friend bool operator==(const IsoDecomp&, const IsoDecomp&) = default;

  /// Character values, indexed by class.
  std::array<long, kSize> character() const;
  /// Inverse of character(); throws if the class function is not virtual-integral.
  static IsoDecomp from_character(const std::array<long, kSize>& chi);

  /// "s[6] + 2s[4,2] - s[2^3]", "0" for zero.
  std::string to_string() const;

 private:
  std::array<long, kSize> mult_{};
};

using S6Decomp = IsoDecomp<6>;
using S3Decomp = IsoDecomp<3>;

/// A virtual class function in power-sum coordinates: coeff[mu] multiplies p_mu.
template <int N>
using ClassCoeffs = std::array<mpq_class, partition_count(N)>;

/// mult[w] = sum_mu c[mu] chi^w(mu); throws std::logic_error on a
/// non-integral multiplicity.
template <int N>
IsoDecomp<N> power_sum_to_schur(const ClassCoeffs<N>& c);

template <int N>
IsoDecomp<N> tensor(const IsoDecomp<N>& a, const IsoDecomp<N>& b);

template <int N>
IsoDecomp<N> sign_twist(const IsoDecomp<N>& a) {
  return tensor(a, IsoDecomp<N>::sign());
}

/// n-th symmetric power, through the Newton-type recursion on characters.
template <int N>
IsoDecomp<N> symmetric_power(const IsoDecomp<N>& v, long n);

/// Induction from the order-48 stabiliser H of a one-dimensional boundary
/// component, along H -> S_3.
S6Decomp induce_from_H(const S3Decomp& v);

extern template class IsoDecomp<3>;
extern template class IsoDecomp<6>;

}  // namespace siegel2
