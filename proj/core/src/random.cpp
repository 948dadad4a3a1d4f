#include "cjacobi/random.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace cjacobi {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

ComplexJacobi random_jacobi(std::uint64_t seed, int n, DiagonalKind kind,
                            const std::optional<std::vector<double>>& arg_spec) {
  if (n < 1) fail(errc::shape_error, "instance size must be >= 1");
  if (arg_spec && static_cast<int>(arg_spec->size()) != n - 1)
    fail(errc::shape_error, "arg_spec must have n - 1 angles");
  SplitMix64 rng(seed);

  std::vector<Complex> a(n - 1), b(n);
  for (int j = 0; j + 1 < n; ++j) {
    const double mag = rng.uniform(0.5, 2.0);
    a[j] = arg_spec ? std::polar(mag, (*arg_spec)[j]) : Complex(mag, 0.0);
  }
  for (int j = 0; j < n; ++j) {
    switch (kind) {
      case DiagonalKind::complex_disk: {
        double re, im;
        do {
          re = rng.uniform(-2.0, 2.0);
          im = rng.uniform(-2.0, 2.0);
        } while (re * re + im * im > 4.0);
        b[j] = Complex(re, im);
        break;
      }
      case DiagonalKind::real:
        b[j] = Complex(rng.uniform(-2.0, 2.0), 0.0);
        break;
      case DiagonalKind::zero:
        b[j] = 0.0;
        break;
    }
  }
  return validate(std::move(a), std::move(b), arg_spec);
}

double min_singular_gap(const ComplexJacobi& jac) {
  Eigen::JacobiSVD<MatrixXc> svd(dense(jac));
  const Eigen::VectorXd s = svd.singularValues();  // descending
  if (s.size() < 2) return 1.0;
  const double scale = std::max(s(0), 1e-300);
  double gap = scale;
  for (int i = 0; i + 1 < s.size(); ++i) gap = std::min(gap, s(i) - s(i + 1));
  return gap / scale;
}

}  // namespace cjacobi
