#pragma once

#include <vector>

#include "cjacobi/types.hpp"

namespace cjacobi {

// One singular triple of dense(J): J v = s u, J* u = s v, ||v|| = ||u|| = 1.
// The right vectors v span E(s) = Ker(J*J - s^2); their componentwise
// conjugates span the corresponding subspace of |J*|.
struct SingularTriple {
  double s;
  VectorXc v;
  VectorXc u;
};

// Atoms of nu together with the singular subspace behind each atom.
// Clusters group singular values closer than tol.cluster * ||J||; the
// cluster dimension is the finite-matrix multiplicity (at most 2 for data
// coming from a valid instance).
struct SpectralDecomposition {
  DiscreteMeasure measure;
  std::vector<std::vector<SingularTriple>> clusters;
};

// nu: atoms are the clustered singular values, the weight of an atom is the
// squared norm of the projection of delta_0 onto its right singular
// subspace. Weights sum to one; the largest atom is the operator norm.
SpectralDecomposition spectral_measure(const ComplexJacobi& jac, const Tolerances& tol = {});

// The full direct map J -> (nu, psi). For each positive atom s with
// projection h of delta_0 onto the clustered right subspace,
//   psi(s) = <J h, conj(h)> / (s * nu({s})) = (h^T J h) / (s ||h||^2),
// which reduces to (1/s) J h = psi(s) conj(h) on simple clusters. An atom
// at 0 gets psi = 1 by normalization.
SpectralData phase_function(const ComplexJacobi& jac, const Tolerances& tol = {});

// Independent phase extractor: solves the linear system
//   sum_k psi_k s_k^{2n+1} w_k = omega_{2n+1},  n = 0..m-1
// (Vandermonde in s_k^2) for the m positive atoms. A zero atom is skipped
// and assigned psi = 1. Throws IllConditioned above condition 1e12.
std::vector<Complex> phase_from_moments(const ComplexJacobi& jac, const Tolerances& tol = {});

// omega_0..omega_M by iterated tridiagonal mat-vec products from delta_0.
// For the moment of order m, any truncation with n >= m + 2 yields the same
// value as the semi-infinite operator (banded support propagation).
MomentSequence moment_sequence(const ComplexJacobi& jac, int max_order);

// Residual of the projected identity
//   P0bar J f(|J|) delta_0 = |J*| psi(|J*|) f(|J*|) delta_0,
// where P0bar projects onto the invariant subspace of |J*| generated by
// delta_0 and psi(|J*|) takes the value psi(s_k) on the cluster of s_k.
// The polynomial f is given by ascending coefficients.
double verify_strong_psi(const ComplexJacobi& jac, const SpectralData& data,
                         const std::vector<Complex>& poly_coeffs,
                         const Tolerances& tol = {});

}  // namespace cjacobi
