#include "siegel2/elliptic_dims.hpp"

#include <algorithm>
#include <string>

namespace siegel2 {

long dim_cusp(int N, long k) {
  if (N != 1 && N != 2 && N != 4) throw LevelError("unsupported level N=" + std::to_string(N));
  if (k % 2 != 0 || k < 4) return 0;
  long d = 0;
  switch (N) {
    case 1: d = k / 12 - (k % 12 == 2 ? 1 : 0); break;
    case 2: d = k / 4 - 1; break;
    case 4: d = k / 2 - 2; break;
  }
  return std::max(d, 0L);
}

long dim_new(int N, long k) {
  if (N != 1 && N != 2 && N != 4) throw LevelError("unsupported level N=" + std::to_string(N));
  if (k % 2 != 0) return 0;
  const long d1 = dim_cusp(1, k);
  if (N == 1) return d1;
  const long d2 = dim_cusp(2, k) - 2 * d1;
  if (N == 2) return d2;
  return dim_cusp(4, k) - 2 * d2 - 3 * d1;
}

long dim_new_fricke(int sign, long k) {
  if (k % 2 != 0 || k <= 2) return 0;
  const long d = dim_new(2, k);
  const long s = sign > 0 ? 1 : -1;
  switch (k % 8) {
    case 0: return (d + s) / 2;
    case 2: return (d - s) / 2;
    default: return d / 2;
  }
}

S3Decomp cusp_gamma2_s3(long k) {
  const long d1 = dim_new(1, k), d2 = dim_new(2, k), d4 = dim_new(4, k);
  return S3Decomp({d1, d1 + d2, d4});
}

}  // namespace siegel2
