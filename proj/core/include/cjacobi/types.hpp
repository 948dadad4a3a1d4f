#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cjacobi/errors.hpp"

namespace cjacobi {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

// Shared tolerance configuration. The relative ones (cluster, gauge, rank)
// are scaled by the relevant matrix/measure magnitude at the point of use.
struct Tolerances {
  double mass = 1e-10;       // |sum of weights - 1|
  double phase = 1e-8;       // |psi| <= 1 + phase, Im psi for self-adjoint data
  double herm = 1e-12;       // Hermiticity of 2x2 blocks
  double breakdown = 1e-10;  // Lanczos residual Gram smallest eigenvalue (scaled)
  double cluster = 1e-7;     // singular value clustering, relative to ||J||
  double gauge = 1e-7;       // deviation of A A* from scalar, B from off-diagonal
  double rank = 1e-12;       // relative rank filter on 2x2 measure weights
};

// Finite truncation of a bounded tridiagonal matrix with nonzero
// off-diagonal entries a_j and complex diagonal b_j, symmetric under
// transposition. When arg_spec is absent the a_j are positive reals;
// otherwise arg(a_j) follows the prescribed angles in (-pi, pi].
struct ComplexJacobi {
  std::vector<Complex> a;  // n-1 off-diagonal values, all nonzero
  std::vector<Complex> b;  // n diagonal values
  std::optional<std::vector<double>> arg_spec;

  int size() const { return static_cast<int>(b.size()); }
};

// Checks the class invariants and returns a well-formed instance.
// Throws ShapeError / ZeroOffDiagonal / ArgMismatch.
ComplexJacobi validate(std::vector<Complex> a, std::vector<Complex> b,
                       std::optional<std::vector<double>> arg_spec = std::nullopt,
                       const Tolerances& tol = {});

// Dense n x n materialization; the result equals its own transpose.
MatrixXc dense(const ComplexJacobi& jac);

// Discrete probability measure on [0, inf): strictly increasing atoms with
// positive weights summing to one.
struct DiscreteMeasure {
  std::vector<double> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
  double total_mass() const;
};

// Discrete measure with atoms anywhere on the real line (used by the
// self-adjoint splitting, where reflected atoms are negative).
struct RealMeasure {
  std::vector<double> points;
  std::vector<double> weights;
  double total_mass() const;
};

// The spectral data (nu, psi): the measure of |J| at delta_0 together with
// the phase value at each atom. |psi| <= 1, and psi(0) = 1 by normalization.
struct SpectralData {
  DiscreteMeasure measure;
  std::vector<Complex> psi;

  int atoms() const { return measure.size(); }
};

// Sequence of 2x2 blocks of a self-adjoint block Jacobi matrix:
// B_j Hermitian on the diagonal, nonsingular A_j above it.
struct BlockJacobi {
  std::vector<Matrix2c> A;  // N-1 off-diagonal blocks
  std::vector<Matrix2c> B;  // N diagonal blocks

  int blocks() const { return static_cast<int>(B.size()); }
};

// omega_0, omega_1, ..., omega_M with omega_{2n} = <(J*J)^n d0, d0> and
// omega_{2n+1} = <J (J*J)^n d0, d0>.
struct MomentSequence {
  std::vector<Complex> omega;

  int order() const { return static_cast<int>(omega.size()) - 1; }
};

// Embedding into the self-adjoint 2x2 block Jacobi matrix:
// A_j = (0 a_j; conj(a_j) 0), B_j = (0 b_j; conj(b_j) 0).
// For positive a_j this is the familiar antidiagonal pair; the conjugate in
// A_j is what makes the block moments reproduce the moments of J when the
// off-diagonal entries carry nonzero arguments.
BlockJacobi block_embed(const ComplexJacobi& jac);

// Reads (a_j, b_j) back off the top-right entries of structured blocks.
ComplexJacobi un_embed(const BlockJacobi& blocks, const Tolerances& tol = {});

// Dense materialization of the block matrix (2N x 2N).
MatrixXc block_dense(const BlockJacobi& blocks);

}  // namespace cjacobi
