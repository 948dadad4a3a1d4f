#include "cjacobi/direct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

namespace cjacobi {

namespace {

// y = J x and y = J^* x on the tridiagonal data, O(n) each.
VectorXc apply(const ComplexJacobi& jac, const VectorXc& x, bool adjoint) {
  const int n = jac.size();
  VectorXc y = VectorXc::Zero(n);
  for (int i = 0; i < n; ++i) {
    Complex bi = adjoint ? std::conj(jac.b[i]) : jac.b[i];
    Complex acc = bi * x[i];
    if (i > 0) acc += (adjoint ? std::conj(jac.a[i - 1]) : jac.a[i - 1]) * x[i - 1];
    if (i + 1 < n) acc += (adjoint ? std::conj(jac.a[i]) : jac.a[i]) * x[i + 1];
    y[i] = acc;
  }
  return y;
}

double matrix_scale(const ComplexJacobi& jac) {
  double s = 0.0;
  for (const Complex& v : jac.a) s = std::max(s, std::abs(v));
  for (const Complex& v : jac.b) s = std::max(s, std::abs(v));
  return std::max(s, 1e-300);
}

// Projection h of delta_0 onto the span of the (orthonormal) columns in the
// cluster: h = sum conj(v_k[0]) v_k.
VectorXc cluster_projection(const std::vector<SingularTriple>& cluster) {
  VectorXc h = VectorXc::Zero(cluster.front().v.size());
  for (const SingularTriple& t : cluster) h += std::conj(t.v[0]) * t.v;
  return h;
}

}  // namespace

SpectralDecomposition spectral_measure(const ComplexJacobi& jac, const Tolerances& tol) {
  const int n = jac.size();
  const MatrixXc m = dense(jac);
  Eigen::JacobiSVD<MatrixXc> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sv = svd.singularValues();
  if (!sv.allFinite()) fail(errc::svd_failure, "singular value decomposition produced non-finite values");

  // ascending order
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return sv[i] < sv[j]; });

  const double scale = std::max(sv.maxCoeff(), matrix_scale(jac));
  const double gap = tol.cluster * scale;

  SpectralDecomposition out;
  int i = 0;
  while (i < n) {
    int k = i;
    while (k + 1 < n && sv[order[k + 1]] - sv[order[k]] < gap) ++k;
    std::vector<SingularTriple> cluster;
    double s_mean = 0.0;
    for (int j = i; j <= k; ++j) {
      const int c = order[j];
      cluster.push_back({sv[c], svd.matrixV().col(c), svd.matrixU().col(c)});
      s_mean += sv[c];
    }
    s_mean /= (k - i + 1);
    if (s_mean < gap) s_mean = 0.0;  // zero atom

    const VectorXc h = cluster_projection(cluster);
    const double w = h.squaredNorm();
    if (w >= tol.mass) {
      out.measure.points.push_back(s_mean);
      out.measure.weights.push_back(w);
      out.clusters.push_back(std::move(cluster));
    }
    i = k + 1;
  }
  return out;
}

SpectralData phase_function(const ComplexJacobi& jac, const Tolerances& tol) {
  SpectralDecomposition dec = spectral_measure(jac, tol);
  const MatrixXc m = dense(jac);

  SpectralData data;
  data.measure = dec.measure;
  data.psi.resize(dec.measure.size());
  for (int k = 0; k < dec.measure.size(); ++k) {
    const double s = dec.measure.points[k];
    const double w = dec.measure.weights[k];
    if (w < tol.mass) fail(errc::zero_weight_atom, "atom with weight below tol_mass");
    if (s == 0.0) {
      data.psi[k] = 1.0;
      continue;
    }
    const VectorXc h = cluster_projection(dec.clusters[k]);
    // <J h, conj(h)> = h^T J h by the transposition symmetry of J
    const Complex quad = (h.transpose() * (m * h))(0);
    data.psi[k] = quad / (s * w);
  }
  for (const Complex& p : data.psi) {
    if (std::abs(p) > 1.0 + tol.phase)
      fail(errc::phase_out_of_range, "computed |psi| exceeds 1 + tol_phase");
  }
  return data;
}

std::vector<Complex> phase_from_moments(const ComplexJacobi& jac, const Tolerances& tol) {
  SpectralData data = phase_function(jac, tol);
  const int m_all = data.atoms();

  std::vector<int> positive;
  for (int k = 0; k < m_all; ++k)
    if (data.measure.points[k] > 0.0) positive.push_back(k);
  const int m = static_cast<int>(positive.size());
  if (m > 12) fail(errc::too_large, "more than 12 positive atoms (Vandermonde conditioning cap)");

  MomentSequence om = moment_sequence(jac, 2 * m - 1);

  MatrixXc sys(m, m);
  VectorXc rhs(m);
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      const double s = data.measure.points[positive[col]];
      const double w = data.measure.weights[positive[col]];
      sys(row, col) = std::pow(s, 2 * row + 1) * w;
    }
    rhs[row] = om.omega[2 * row + 1];
  }

  Eigen::JacobiSVD<MatrixXc> svd(sys, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double cond = svd.singularValues()(0) / svd.singularValues()(m - 1);
  if (!(cond < 1e12)) fail(errc::ill_conditioned, "phase system condition estimate exceeds 1e12");
  VectorXc sol = svd.solve(rhs);

  std::vector<Complex> psi(m_all, Complex(1.0, 0.0));  // zero atom keeps psi = 1
  for (int col = 0; col < m; ++col) psi[positive[col]] = sol[col];
  return psi;
}

MomentSequence moment_sequence(const ComplexJacobi& jac, int max_order) {
  if (max_order < 0) fail(errc::shape_error, "moment order must be nonnegative");
  const int n = jac.size();
  MomentSequence out;
  out.omega.reserve(max_order + 1);

  VectorXc x = VectorXc::Zero(n);  // (J*J)^k delta_0
  x[0] = 1.0;
  int m = 0;
  while (m <= max_order) {
    out.omega.push_back(x[0]);  // omega_{2k} = <(J*J)^k d0, d0>
    ++m;
    VectorXc y = apply(jac, x, false);
    if (m <= max_order) {
      out.omega.push_back(y[0]);  // omega_{2k+1} = <J (J*J)^k d0, d0>
      ++m;
    }
    x = apply(jac, y, true);
  }
  out.omega.resize(max_order + 1);
  return out;
}

double verify_strong_psi(const ComplexJacobi& jac, const SpectralData& data,
                         const std::vector<Complex>& poly_coeffs, const Tolerances& tol) {
  const int n = jac.size();
  const MatrixXc m = dense(jac);

  // |J| from the Hermitian eigenproblem of J*J; |J*| has the conjugate
  // eigenvectors since J J* = conj(J*J) for transpose-symmetric J.
  Eigen::SelfAdjointEigenSolver<MatrixXc> eig(m.adjoint() * m);
  if (eig.info() != Eigen::Success) fail(errc::svd_failure, "eigendecomposition of J*J failed");
  Eigen::VectorXd s(n);
  for (int i = 0; i < n; ++i) s[i] = std::sqrt(std::max(eig.eigenvalues()[i], 0.0));
  const MatrixXc V = eig.eigenvectors();

  auto eval_poly = [&](double x) {
    Complex acc = 0.0;
    for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  // psi value at the atom nearest to a given singular value
  auto psi_at = [&](double x) {
    if (data.atoms() == 0) return Complex(1.0, 0.0);
    int best = 0;
    for (int k = 1; k < data.atoms(); ++k)
      if (std::abs(data.measure.points[k] - x) < std::abs(data.measure.points[best] - x)) best = k;
    return data.psi[best];
  };

  VectorXc delta0 = VectorXc::Zero(n);
  delta0[0] = 1.0;

  // lhs_raw = J f(|J|) delta_0
  VectorXc c = V.adjoint() * delta0;
  VectorXc fc = c;
  for (int i = 0; i < n; ++i) fc[i] *= eval_poly(s[i]);
  VectorXc lhs_raw = m * (V * fc);

  // P0bar: projection onto span of conj(h_s) over eigenvalue clusters of |J*|.
  // The clusters of |J*| are the conjugates of the clusters of |J|.
  const double scale = std::max(s.maxCoeff(), 1e-300);
  const double gap = tol.cluster * scale;
  VectorXc lhs = VectorXc::Zero(n);
  {
    int i = 0;
    while (i < n) {
      int k = i;
      while (k + 1 < n && s[k + 1] - s[k] < gap) ++k;
      VectorXc h = VectorXc::Zero(n);
      for (int j = i; j <= k; ++j) h += std::conj(V(0, j)) * V.col(j);
      VectorXc hbar = h.conjugate();
      const double w = hbar.squaredNorm();
      if (w > tol.mass) lhs += hbar * (hbar.dot(lhs_raw) / w);  // dot conjugates its first arg
      i = k + 1;
    }
  }

  // rhs = |J*| psi(|J*|) f(|J*|) delta_0, eigenvectors conj(V)
  VectorXc cbar = V.transpose() * delta0;  // conj(V)^adj = V^T
  for (int i = 0; i < n; ++i) cbar[i] *= s[i] * psi_at(s[i]) * eval_poly(s[i]);
  VectorXc rhs = V.conjugate() * cbar;

  return (lhs - rhs).norm();
}

}  // namespace cjacobi
