#include "cjacobi/types.hpp"

#include <cmath>
#include <numbers>

namespace cjacobi {

namespace {

// wrap-aware angle difference into (-pi, pi]
double angle_diff(double x, double y) {
  double d = std::remainder(x - y, 2.0 * std::numbers::pi);
  return d;
}

}  // namespace

ComplexJacobi validate(std::vector<Complex> a, std::vector<Complex> b,
                       std::optional<std::vector<double>> arg_spec,
                       const Tolerances& tol) {
  if (b.empty()) fail(errc::shape_error, "diagonal must have at least one entry");
  if (a.size() + 1 != b.size())
    fail(errc::shape_error, "off-diagonal length must be diagonal length - 1 (got " +
                                std::to_string(a.size()) + " and " + std::to_string(b.size()) + ")");
  if (arg_spec && arg_spec->size() != a.size())
    fail(errc::shape_error, "arg_spec length must match off-diagonal length");

  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(std::abs(a[j]) > tol.breakdown))
      fail(errc::zero_off_diagonal, "a[" + std::to_string(j) + "] has magnitude <= tol_breakdown");
    if (arg_spec) {
      if (std::abs(angle_diff(std::arg(a[j]), (*arg_spec)[j])) > 1e-9)
        fail(errc::arg_mismatch, "arg(a[" + std::to_string(j) + "]) does not equal the prescribed angle");
    } else {
      if (a[j].imag() != 0.0 || a[j].real() <= 0.0)
        fail(errc::arg_mismatch, "a[" + std::to_string(j) + "] must be positive real when arg_spec is absent");
    }
  }
  for (const Complex& v : b) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(errc::shape_error, "diagonal entries must be finite");
  }
  return ComplexJacobi{std::move(a), std::move(b), std::move(arg_spec)};
}

MatrixXc dense(const ComplexJacobi& jac) {
  const int n = jac.size();
  MatrixXc m = MatrixXc::Zero(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = jac.b[j];
  for (int j = 0; j + 1 < n; ++j) {
    m(j, j + 1) = jac.a[j];
    m(j + 1, j) = jac.a[j];
  }
  return m;
}

double DiscreteMeasure::total_mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double RealMeasure::total_mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

BlockJacobi block_embed(const ComplexJacobi& jac) {
  BlockJacobi out;
  out.A.reserve(jac.a.size());
  out.B.reserve(jac.b.size());
  for (const Complex& aj : jac.a) {
    Matrix2c A;
    A << 0.0, aj, std::conj(aj), 0.0;
    out.A.push_back(A);
  }
  for (const Complex& bj : jac.b) {
    Matrix2c B;
    B << 0.0, bj, std::conj(bj), 0.0;
    out.B.push_back(B);
  }
  return out;
}

ComplexJacobi un_embed(const BlockJacobi& blocks, const Tolerances& tol) {
  std::vector<Complex> a, b;
  a.reserve(blocks.A.size());
  b.reserve(blocks.B.size());
  for (const Matrix2c& B : blocks.B) {
    if (std::abs(B(0, 0)) > tol.herm || std::abs(B(1, 1)) > tol.herm ||
        std::abs(B(1, 0) - std::conj(B(0, 1))) > tol.herm)
      fail(errc::mismatch_error, "diagonal block is not of the structured form");
    b.push_back(B(0, 1));
  }
  for (const Matrix2c& A : blocks.A) {
    if (std::abs(A(0, 0)) > tol.herm || std::abs(A(1, 1)) > tol.herm ||
        std::abs(A(1, 0) - std::conj(A(0, 1))) > tol.herm)
      fail(errc::mismatch_error, "off-diagonal block is not of the structured form");
    a.push_back(A(0, 1));
  }
  return ComplexJacobi{std::move(a), std::move(b), std::nullopt};
}

MatrixXc block_dense(const BlockJacobi& blocks) {
  const int N = blocks.blocks();
  MatrixXc m = MatrixXc::Zero(2 * N, 2 * N);
  for (int j = 0; j < N; ++j) m.block<2, 2>(2 * j, 2 * j) = blocks.B[j];
  for (int j = 0; j + 1 < N; ++j) {
    m.block<2, 2>(2 * j, 2 * j + 2) = blocks.A[j];
    m.block<2, 2>(2 * j + 2, 2 * j) = blocks.A[j].adjoint();
  }
  return m;
}

}  // namespace cjacobi
