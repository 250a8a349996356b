#pragma once

// Isotypical decompositions of M_{k,j}(Gamma[2]) and its Arthur-packet
// constituents.  Scalar weights (j = 0) are assembled from Igusa's plethysm
// formula; vector weights (j > 0) from the Euler characteristic of V_{l,m}
// with l = j+k-3, m = k-3.

#include "siegel2/reprings.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace siegel2 {

enum class Part { M, E, S, F, Q, P, Y, G };

inline constexpr std::array<Part, 8> kAllParts = {Part::M, Part::E, Part::S, Part::F,
                                                   Part::Q, Part::P, Part::Y, Part::G};

std::string part_name(Part p);
/// Throws std::invalid_argument on an unknown name.
Part parse_part(const std::string& s);

/// The k = 2, j > 0 region, which is conjectural and deliberately absent.
class UnsupportedError : public std::runtime_error {
 public:
  UnsupportedError() : std::runtime_error("unsupported: k=2 vector-valued case is conjectural and not implemented") {}
};

/// A formula produced a negative multiplicity or a non-divisible quantity.
class PacketError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PacketDecomposition {
  long k = 0, j = 0;
  S6Decomp F, Q, P, Y, G;
  /// Set when the weight-2 convention for k = 3 entered (parts G, S, M).
  bool conjectural = false;

  S6Decomp E() const { return F + Q; }
  S6Decomp S() const { return P + Y + G; }
  S6Decomp M() const { return E() + S(); }
  S6Decomp part(Part p) const;
  bool part_is_conjectural(Part p) const;
};

namespace aux {
S6Decomp A();
S6Decomp A_prime();
S6Decomp B();
S6Decomp B_prime();
S6Decomp C();
S6Decomp C_prime();
}  // namespace aux

/// dim_{S_6} M_k(Gamma[2]) by Igusa's formula.
S6Decomp scalar_total(long k);

S6Decomp eisenstein_F(long k, long j);
S6Decomp eisenstein_Q(long k, long j);
S6Decomp saito_kurokawa(long k, long j);
S6Decomp yoshida(long k, long j);

/// Eisenstein part of E_c(A_2[2], V_{l,m}).  For m = 0 the weight-2 values
/// d_{1,2} = -1, d_{2,2} = 1, d_{4,2} = 0 are used in the 2(d_{N,m+2} - ...)
/// terms.
S6Decomp euler_eis(long l, long m);
/// Endoscopic part of E_c(A_2[2], V_{l,m}).
S6Decomp euler_endo(long l, long m);

/// S^(G)_{k,j}.  For j > 0 and k >= 3 from the Euler characteristic; for
/// j = 0 as M - F - Q - P.  Throws UnsupportedError for k = 2, j > 0.
S6Decomp general_type(long k, long j);

/// -1/4 (ec - E_eis - E_endo + 2 S^(Y)) for a given Euler characteristic
/// ec of V_{j+k-3,k-3}; throws PacketError unless divisible and effective.
S6Decomp general_type_from(long k, long j, const S6Decomp& ec);

/// Closed dimension formula for M_{k,j}(Gamma[2]), k >= 3, j >= 2 even.
long tsushima_dim(long k, long j);

/// Full decomposition; cached.  Odd j gives zero.
PacketDecomposition decompose(long k, long j);

enum class Level { Gamma2, Gamma1, Gamma0, Sp4Z, Sp4ZEps };

std::string level_name(Level g);
Level parse_level(const std::string& s);

/// Contribution to the S_3 decomposition for Gamma_1[2].
S3Decomp restrict_gamma1(const S6Decomp& d);
/// Dimension of the corresponding space for the given group.
long restrict_dimension(const S6Decomp& d, Level g);

}  // namespace siegel2
