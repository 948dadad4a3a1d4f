#include "cjacobi/qpolys.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cjacobi {

Complex QPolynomial::eval(Complex s) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

QPolynomial QPolynomial::conjugated() const {
  QPolynomial out;
  out.coeffs.reserve(coeffs.size());
  for (const Complex& c : coeffs) out.coeffs.push_back(std::conj(c));
  return out;
}

QPolynomial QPolynomial::even_part() const {
  QPolynomial out = *this;
  for (std::size_t i = 1; i < out.coeffs.size(); i += 2) out.coeffs[i] = 0.0;
  return out;
}

QPolynomial QPolynomial::odd_part() const {
  QPolynomial out = *this;
  for (std::size_t i = 0; i < out.coeffs.size(); i += 2) out.coeffs[i] = 0.0;
  return out;
}

QPolynomial operator+(const QPolynomial& x, const QPolynomial& y) {
  QPolynomial out;
  out.coeffs.assign(std::max(x.coeffs.size(), y.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) out.coeffs[i] += x.coeffs[i];
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
  return out;
}

QPolynomial operator-(const QPolynomial& x, const QPolynomial& y) {
  QPolynomial out;
  out.coeffs.assign(std::max(x.coeffs.size(), y.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) out.coeffs[i] += x.coeffs[i];
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) out.coeffs[i] -= y.coeffs[i];
  return out;
}

QPolynomial operator*(const QPolynomial& x, const QPolynomial& y) {
  QPolynomial out;
  if (x.coeffs.empty() || y.coeffs.empty()) return out;
  out.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
  return out;
}

QPolynomial operator*(Complex c, const QPolynomial& p) {
  QPolynomial out = p;
  for (Complex& v : out.coeffs) v *= c;
  return out;
}

std::vector<QPolynomial> q_polynomials(const ComplexJacobi& jac, int count) {
  if (count < 1) fail(errc::shape_error, "count must be >= 1");
  if (count > jac.size())
    fail(errc::depth_error, "count " + std::to_string(count) + " exceeds the truncation size " +
                                std::to_string(jac.size()));
  std::vector<QPolynomial> qs;
  qs.reserve(count);
  qs.push_back(QPolynomial{{1.0}});
  if (count == 1) return qs;

  // q_1 = (s conj(q_0) - b_0 q_0) / a_0
  qs.push_back(QPolynomial{{-jac.b[0] / jac.a[0], 1.0 / jac.a[0]}});
  for (int j = 1; j + 1 < count; ++j) {
    // a_j q_{j+1} = s conj(q_j) - b_j q_j - a_{j-1} q_{j-1}
    QPolynomial rhs;
    rhs.coeffs.assign(j + 2, 0.0);
    const QPolynomial qc = qs[j].conjugated();
    for (int i = 0; i <= j; ++i) rhs.coeffs[i + 1] = qc.coeffs[i];
    for (int i = 0; i <= j; ++i) rhs.coeffs[i] -= jac.b[j] * qs[j].coeffs[i];
    for (int i = 0; i <= j - 1; ++i) rhs.coeffs[i] -= jac.a[j - 1] * qs[j - 1].coeffs[i];
    qs.push_back((1.0 / jac.a[j]) * rhs);
  }
  return qs;
}

MatrixXc orthogonality_gram(const std::vector<QPolynomial>& qs, const SpectralData& data,
                            GramForm form, const Tolerances& tol) {
  const int r = static_cast<int>(qs.size());
  if (r > 2 * data.atoms())
    fail(errc::mismatch_error, "more polynomials than the data can resolve (atom count x 2)");

  MatrixXc g = MatrixXc::Zero(r, r);
  for (int idx = 0; idx < data.atoms(); ++idx) {
    const double s = data.measure.points[idx];
    const double w = data.measure.weights[idx];
    const Complex psi = data.psi[idx];
    if (std::abs(psi) > 1.0 + tol.phase) fail(errc::phase_out_of_range, "|psi| exceeds 1 + tol_phase");

    std::vector<Eigen::Vector2cd> vals(r);
    Matrix2c kernel;
    double factor;
    if (form == GramForm::vector_form) {
      kernel << 1.0 + psi.real(), Complex(0.0, -psi.imag()),
                Complex(0.0, psi.imag()), 1.0 - psi.real();
      factor = 0.5 * w;
      for (int j = 0; j < r; ++j) vals[j] = Eigen::Vector2cd(qs[j].eval(s), qs[j].eval(-s));
    } else {
      // even-first components; the conjugation-free entry psi sits below
      // the diagonal so that the unitary change of basis from the vector
      // form is exact (the displayed kernel pairs with odd-first vectors)
      kernel << 1.0, psi, std::conj(psi), 1.0;
      factor = w;
      for (int j = 0; j < r; ++j) {
        const Complex qp = qs[j].eval(s);
        const Complex qm = qs[j].eval(-s);
        vals[j] = Eigen::Vector2cd(0.5 * (qp + qm), 0.5 * (qp - qm));
      }
    }
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) g(j, k) += factor * (vals[k].adjoint() * (kernel * vals[j]))(0);
  }
  return g;
}

int gram_capacity(const SpectralData& data, const Tolerances& tol) {
  int capacity = 0;
  for (int k = 0; k < data.atoms(); ++k) {
    if (data.measure.points[k] == 0.0) {
      capacity += 1;  // kernel direction is one-dimensional
    } else {
      capacity += (std::abs(data.psi[k]) >= 1.0 - tol.phase) ? 1 : 2;
    }
  }
  return capacity;
}

SelfAdjointSplit selfadjoint_split(const SpectralData& data, const Tolerances& tol) {
  for (const Complex& p : data.psi) {
    if (std::abs(p.imag()) > tol.phase)
      fail(errc::not_self_adjoint_data, "psi has imaginary part beyond tol_phase");
  }

  SelfAdjointSplit out;
  std::vector<std::pair<double, double>> mu_atoms;
  for (int k = 0; k < data.atoms(); ++k) {
    const double s = data.measure.points[k];
    const double w = data.measure.weights[k];
    const double psi = data.psi[k].real();
    const double plus = 0.5 * w * (1.0 + psi);
    const double minus = 0.5 * w * (1.0 - psi);
    if (plus > tol.mass) mu_atoms.emplace_back(s, plus);
    if (s > 0.0 && minus > tol.mass) {
      mu_atoms.emplace_back(-s, minus);
      out.mu_tilde.points.push_back(s);
      out.mu_tilde.weights.push_back(minus);
    }
  }
  std::sort(mu_atoms.begin(), mu_atoms.end());
  for (const auto& [t, w] : mu_atoms) {
    out.mu.points.push_back(t);
    out.mu.weights.push_back(w);
  }
  return out;
}

}  // namespace cjacobi
