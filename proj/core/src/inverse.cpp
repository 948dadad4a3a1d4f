#include "cjacobi/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "cjacobi/motzkin.hpp"

namespace cjacobi {

namespace {

// The discrete space is the orthogonal sum of the weight ranges: one
// coordinate per (support point, weight eigenvector) pair. In these
// coordinates the measure inner product is the Euclidean one and the
// multiplication operator is diagonal, so no spurious near-null weight
// directions can enter the arithmetic. A block vector is a D x 2 matrix.
using BlockVec = MatrixXc;

// 2x2 Gram Y^* X with Kahan-compensated accumulation over the rows.
Matrix2c gram2(const BlockVec& x, const BlockVec& y) {
  Matrix2c sum = Matrix2c::Zero();
  Matrix2c comp = Matrix2c::Zero();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const Complex term = std::conj(y(i, r)) * x(i, c);
        const Complex t1 = term - comp(r, c);
        const Complex t2 = sum(r, c) + t1;
        comp(r, c) = (t2 - sum(r, c)) - t1;
        sum(r, c) = t2;
      }
  }
  return sum;
}

double min_eig_herm2(const Matrix2c& g) {
  const double tr = g(0, 0).real() + g(1, 1).real();
  const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
  const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
  return tr / 2.0 - disc;
}

// Lower-triangular Cholesky factor of a Hermitian positive definite 2x2.
Matrix2c chol2(const Matrix2c& g) {
  Matrix2c l = Matrix2c::Zero();
  l(0, 0) = std::sqrt(g(0, 0).real());
  l(1, 0) = g(1, 0) / l(0, 0);
  l(1, 1) = std::sqrt(std::max(g(1, 1).real() - std::norm(l(1, 0)), 0.0));
  return l;
}

}  // namespace

Matrix2c MatrixMeasure2x2::total_mass() const {
  Matrix2c m = Matrix2c::Zero();
  for (const Matrix2c& w : weights) m += w;
  return m;
}

MatrixMeasure2x2 matrix_measure(const SpectralData& data, const Tolerances& tol) {
  MatrixMeasure2x2 out;
  for (int k = 0; k < data.atoms(); ++k) {
    const double s = data.measure.points[k];
    const double w = data.measure.weights[k];
    const Complex psi = data.psi[k];
    if (std::abs(psi) > 1.0 + tol.phase)
      fail(errc::phase_out_of_range, "|psi| exceeds 1 + tol_phase at atom " + std::to_string(k));
    if (s == 0.0) {
      Matrix2c m;
      m << 1.0, 1.0, 1.0, 1.0;
      out.points.push_back(0.0);
      out.weights.push_back(0.5 * w * m);
      continue;
    }
    Matrix2c plus, minus;
    plus << 1.0, psi, std::conj(psi), 1.0;
    minus << 1.0, -psi, -std::conj(psi), 1.0;
    out.points.push_back(s);
    out.weights.push_back(0.5 * w * plus);
    out.points.push_back(-s);
    out.weights.push_back(0.5 * w * minus);
  }
  return out;
}

RawBlocks block_lanczos(const MatrixMeasure2x2& measure, int max_steps, const Tolerances& tol) {
  if (max_steps < 1) fail(errc::shape_error, "max_steps must be >= 1");
  if (measure.size() == 0) fail(errc::degenerate_start, "empty measure");

  // Factor every weight into eigenpairs and keep one coordinate per pair
  // with eigenvalue above the relative rank cutoff. Rounded unimodular
  // phases would otherwise leave eps-rank directions whose sqrt(eps)
  // normalization pollutes the basis at exhaustion.
  std::vector<double> t_of_row;
  std::vector<Eigen::RowVector2cd> rows;
  double t_max = 0.0;
  for (int i = 0; i < measure.size(); ++i) {
    t_max = std::max(t_max, std::abs(measure.points[i]));
    Eigen::SelfAdjointEigenSolver<Matrix2c> eig(measure.weights[i]);
    const double lam_max = eig.eigenvalues()(1);
    for (int k = 0; k < 2; ++k) {
      const double lam = eig.eigenvalues()(k);
      if (lam < tol.rank * lam_max || lam <= 0.0) continue;
      t_of_row.push_back(measure.points[i]);
      rows.push_back(std::sqrt(lam) * eig.eigenvectors().col(k).adjoint());
    }
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(rows.size());
  const double breakdown_tol = tol.breakdown * std::max(1.0, t_max * t_max);

  // coordinates of the constant block (e_1, e_2)
  BlockVec q0(dim, 2);
  Eigen::VectorXd t(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    q0.row(i) = rows[i];
    t[i] = t_of_row[i];
  }
  {
    const Matrix2c g0 = gram2(q0, q0);  // = total mass of the measure
    if (min_eig_herm2(g0) < tol.breakdown)
      fail(errc::degenerate_start, "constant block has singular Gram matrix");
    q0 = q0 * chol2(g0).adjoint().inverse();
  }

  std::vector<BlockVec> q{q0};
  RawBlocks out;
  for (int j = 0; j < max_steps; ++j) {
    const BlockVec tq = t.asDiagonal() * q[j];
    Matrix2c bj = gram2(tq, q[j]);
    bj = 0.5 * (bj + bj.adjoint()).eval();
    out.B_raw.push_back(bj);
    out.steps_completed = j + 1;
    if (j + 1 == max_steps) break;

    BlockVec r = tq - q[j] * bj;
    if (j > 0) r -= q[j - 1] * out.A_raw[j - 1];
    // full re-orthogonalization against all previous blocks, twice
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k <= j; ++k) r -= q[k] * gram2(r, q[k]);

    Matrix2c g = gram2(r, r);
    g = 0.5 * (g + g.adjoint()).eval();
    if (min_eig_herm2(g) < breakdown_tol) {
      out.breakdown = true;
      break;
    }
    const Matrix2c l = chol2(g);  // g = l l*, residual = Q_{j+1} l*
    q.push_back(r * l.adjoint().inverse());
    out.A_raw.push_back(l);  // A_j = (A_j*)* = l
  }
  return out;
}

ComplexJacobi gauge_fix(const RawBlocks& raw, const std::optional<std::vector<double>>& arg_spec,
                        const Tolerances& tol) {
  const int n = raw.steps_completed;
  if (n == 0) fail(errc::shape_error, "no completed steps to gauge-fix");
  if (arg_spec && static_cast<int>(arg_spec->size()) < n - 1)
    fail(errc::shape_error, "arg_spec shorter than the reconstruction depth");

  for (const Matrix2c& b : raw.B_raw) {
    if ((b - b.adjoint()).cwiseAbs().maxCoeff() > tol.herm * std::max(1.0, b.norm()))
      fail(errc::gauge_violation, "raw diagonal block is not Hermitian");
  }

  std::vector<Complex> a, b;
  Matrix2c gauge = Matrix2c::Identity();
  for (int j = 0; j < n; ++j) {
    const Matrix2c bs = gauge.adjoint() * raw.B_raw[j] * gauge;
    const double bscale = std::max(1.0, bs.norm());
    if (std::abs(bs(0, 0)) > tol.gauge * bscale || std::abs(bs(1, 1)) > tol.gauge * bscale)
      fail(errc::gauge_violation, "transformed B_" + std::to_string(j) +
                                      " is not off-diagonal; data is not of the form Lambda(J)");
    b.push_back(bs(0, 1));

    if (j < n - 1) {
      const Matrix2c x = gauge.adjoint() * raw.A_raw[j];
      const Matrix2c xx = x * x.adjoint();
      const double r = 0.5 * (xx(0, 0).real() + xx(1, 1).real());
      if ((xx - r * Matrix2c::Identity()).cwiseAbs().maxCoeff() > tol.gauge * std::max(1.0, r))
        fail(errc::gauge_violation, "A A* deviates from a scalar multiple of the identity at step " +
                                        std::to_string(j));
      const double theta = arg_spec ? (*arg_spec)[j] : 0.0;
      const Complex aj = std::sqrt(r) * std::polar(1.0, theta);
      Matrix2c s;
      s << 0.0, aj, std::conj(aj), 0.0;
      // G_j* A_raw_j = S_j G_{j+1}*
      gauge = (s.inverse() * x).adjoint();
      a.push_back(aj);
    }
  }
  std::optional<std::vector<double>> spec;
  if (arg_spec) spec = std::vector<double>(arg_spec->begin(), arg_spec->begin() + (n - 1));
  return ComplexJacobi{std::move(a), std::move(b), std::move(spec)};
}

ComplexJacobi reconstruct(const SpectralData& data, const std::optional<std::vector<double>>& arg_spec,
                          const Tolerances& tol) {
  if (data.atoms() == 0) fail(errc::shape_error, "spectral data has no atoms");
  const MatrixMeasure2x2 m = matrix_measure(data, tol);
  // the discrete space supports at most sum(rank W_i)/2 steps
  const int max_steps = m.size() + 1;
  const RawBlocks raw = block_lanczos(m, max_steps, tol);
  return gauge_fix(raw, arg_spec, tol);
}

ComplexJacobi reconstruct_from_moments(const MomentSequence& omega, int n_max,
                                       const std::optional<std::vector<double>>& arg_spec,
                                       const Tolerances& tol) {
  if (n_max < 1) fail(errc::shape_error, "n_max must be >= 1");
  if (n_max > 8) fail(errc::too_large, "n_max > 8 (path enumeration cost)");
  if (static_cast<int>(omega.omega.size()) < 2 * n_max + 1)
    fail(errc::shape_error, "need at least 2 n_max + 1 moments");
  if (arg_spec && static_cast<int>(arg_spec->size()) < n_max - 1)
    fail(errc::shape_error, "arg_spec shorter than n_max - 1");
  const auto& om = omega.omega;
  if (std::abs(om[0] - 1.0) > tol.mass)
    fail(errc::moment_inconsistency, "omega_0 must be 1");

  auto theta = [&](int j) { return arg_spec ? (*arg_spec)[j] : 0.0; };
  auto structured = [](Complex v) {
    Matrix2c m;
    m << 0.0, v, std::conj(v), 0.0;
    return m;
  };

  BlockJacobi blocks;
  std::vector<Complex> a, b;

  b.push_back(om[1]);
  blocks.B.push_back(structured(b[0]));
  if (n_max > 1) {
    const double r0 = om[2].real() - std::norm(om[1]);
    if (r0 <= tol.breakdown) fail(errc::moment_inconsistency, "omega_2 - |omega_1|^2 not positive");
    a.push_back(std::sqrt(r0) * std::polar(1.0, theta(0)));
    blocks.A.push_back(structured(a[0]));
  }

  for (int n = 1; n < n_max; ++n) {
    // Y_{2n+1}: non-extremal paths use only B_0..B_{n-1}, A_0..A_{n-1}
    {
      const int m = 2 * n + 1;
      const std::vector<int> ext = detail::extremal_levels(m);
      BlockJacobi padded = blocks;
      padded.B.push_back(Matrix2c::Zero());  // placeholder for the unknown B_n
      Matrix2c y = Matrix2c::Zero();
      detail::for_each_path(m, [&](const std::vector<int>& levels) {
        if (levels == ext) return;
        y += detail::path_product(padded, levels, m);
      });
      Matrix2c rhs = structured(om[m]) - y;
      // A_{n-1}^{-1} ... A_0^{-1}; the blocks do not commute once the
      // off-diagonal entries carry nonzero arguments
      Matrix2c pre = Matrix2c::Identity();
      for (int j = n - 1; j >= 0; --j) pre = pre * blocks.A[j].inverse();
      const Matrix2c bn = pre * rhs * pre.adjoint();
      b.push_back(bn(0, 1));
      blocks.B.push_back(structured(b[n]));
    }
    if (n == n_max - 1) break;
    // A_n A_n* from omega_{2n+2}; non-extremal paths use B_0..B_n, A_0..A_{n-1}
    {
      const int m = 2 * n + 2;
      const std::vector<int> ext = detail::extremal_levels(m);
      BlockJacobi padded = blocks;
      padded.A.push_back(Matrix2c::Zero());  // placeholder for the unknown A_n
      Matrix2c y = Matrix2c::Zero();
      detail::for_each_path(m, [&](const std::vector<int>& levels) {
        if (levels == ext) return;
        y += detail::path_product(padded, levels, m);
      });
      double prod = 1.0;
      for (const Complex& aj : a) prod *= std::norm(aj);
      const double rn = (om[m].real() - y(0, 0).real()) / prod;
      if (om[m].real() - y(0, 0).real() <= tol.breakdown)
        fail(errc::moment_inconsistency,
             "omega_" + std::to_string(m) + " - y_" + std::to_string(m) +
                 " not positive: data does not come from a Jacobi matrix of depth " + std::to_string(n + 1));
      a.push_back(std::sqrt(rn) * std::polar(1.0, theta(n)));
      blocks.A.push_back(structured(a[n]));
    }
  }

  std::optional<std::vector<double>> spec;
  if (arg_spec) spec = std::vector<double>(arg_spec->begin(), arg_spec->begin() + (n_max - 1));
  return ComplexJacobi{std::move(a), std::move(b), std::move(spec)};
}

}  // namespace cjacobi
