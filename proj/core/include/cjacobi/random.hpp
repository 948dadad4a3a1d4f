#pragma once

#include <cstdint>
#include <optional>

#include "cjacobi/types.hpp"

namespace cjacobi {

// Deterministic, platform-independent generator (splitmix64 stream).
// Identical seeds give bit-identical instances everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)

 private:
  std::uint64_t state_;
};

enum class DiagonalKind {
  complex_disk,  // b_j uniform in the disk |b| <= 2
  real,          // b_j uniform in [-2, 2]
  zero,          // b_j = 0
};

// Seeded instance: |a_j| uniform in [0.5, 2], diagonal per kind,
// arg(a_j) = arg_spec[j] when given (otherwise a_j > 0).
ComplexJacobi random_jacobi(std::uint64_t seed, int n,
                            DiagonalKind kind = DiagonalKind::complex_disk,
                            const std::optional<std::vector<double>>& arg_spec = std::nullopt);

// Smallest relative gap between consecutive singular values; used by the
// acceptance suite to regenerate nearly degenerate draws (documented rule).
double min_singular_gap(const ComplexJacobi& jac);

}  // namespace cjacobi
