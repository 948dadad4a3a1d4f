#pragma once

#include <optional>
#include <vector>

#include "cjacobi/types.hpp"

namespace cjacobi {

// Discrete 2x2 PSD-matrix-valued measure on the real line. For spectral
// data this carries the weights w/2 (1 psi; conj(psi) 1) at +s and
// w/2 (1 -psi; -conj(psi) 1) at -s; the total mass is the identity.
struct MatrixMeasure2x2 {
  std::vector<double> points;
  std::vector<Matrix2c> weights;

  int size() const { return static_cast<int>(points.size()); }
  Matrix2c total_mass() const;
};

// Output of the block three-term recursion before gauge fixing: one
// representative of the equivalence class determined by the measure.
struct RawBlocks {
  std::vector<Matrix2c> A_raw;  // steps_completed - 1 entries
  std::vector<Matrix2c> B_raw;  // steps_completed entries
  int steps_completed = 0;
  bool breakdown = false;
};

// Builds the matrix measure of the block embedding from spectral data.
// An atom at 0 contributes the single rank-one weight w/2 (1 1; 1 1).
MatrixMeasure2x2 matrix_measure(const SpectralData& data, const Tolerances& tol = {});

// Block Lanczos for the operator of multiplication by the variable on the
// discrete space of C^2-valued functions on the support, inner product
// <f, g> = sum_i g(t_i)* W_i f(t_i), started from the constant block.
// Weights are rank-filtered at tol.rank (relative) so that atoms whose
// phase is unimodular up to rounding do not leak spurious sqrt(eps)-sized
// directions into the basis. Stops with breakdown = true when the residual
// Gram matrix has smallest eigenvalue below tol.breakdown * max(1, t_max^2).
RawBlocks block_lanczos(const MatrixMeasure2x2& measure, int max_steps,
                        const Tolerances& tol = {});

// Transforms a raw representative into the structured form
// A_j = (0 a_j; conj(a_j) 0), B_j = (0 b_j; conj(b_j) 0) by absorbing the
// block-diagonal gauge, with arg(a_j) = theta_j (0 when absent):
// maintain a unitary G_j (G_0 = I), read b_j off G_j* B_raw_j G_j, and
// split G_j* A_raw_j = S_j G_{j+1}* with S_j the structured block of
// magnitude sqrt(r_j). Throws GaugeViolation when A A* is not a scalar
// multiple of the identity or the transformed B is not off-diagonal.
ComplexJacobi gauge_fix(const RawBlocks& raw,
                        const std::optional<std::vector<double>>& arg_spec = std::nullopt,
                        const Tolerances& tol = {});

// The composed inverse map (nu, psi) -> J. The returned truncation size is
// the number of completed Lanczos steps; its moments match the input's for
// every order below twice that depth.
ComplexJacobi reconstruct(const SpectralData& data,
                          const std::optional<std::vector<double>>& arg_spec = std::nullopt,
                          const Tolerances& tol = {});

// Independent reconstruction straight from the moment identities:
// b_0 = omega_1, a_0 = sqrt(omega_2 - |omega_1|^2), and for n >= 1 the
// remainder terms Y_{2n+1}, Y_{2n+2} are summed over non-extremal paths of
// already-known blocks, leaving one equation for B_n resp. A_n A_n*.
// Serves as the oracle for reconstruct; n_max <= 8.
ComplexJacobi reconstruct_from_moments(const MomentSequence& omega, int n_max,
                                       const std::optional<std::vector<double>>& arg_spec = std::nullopt,
                                       const Tolerances& tol = {});

}  // namespace cjacobi
