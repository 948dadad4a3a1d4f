#pragma once

#include <vector>

#include "cjacobi/types.hpp"

namespace cjacobi {

// Complex-coefficient polynomial with support for coefficient conjugation,
// the antilinear "bar" operation of the recurrence
//   a_{j-1} q_{j-1}(s) + b_j q_j(s) + a_j q_{j+1}(s) = s conj(q_j)(s).
struct QPolynomial {
  std::vector<Complex> coeffs;  // ascending degree

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex eval(Complex s) const;
  QPolynomial conjugated() const;          // conjugate the coefficients
  QPolynomial even_part() const;           // (q(s) + q(-s)) / 2
  QPolynomial odd_part() const;            // (q(s) - q(-s)) / 2
};

QPolynomial operator+(const QPolynomial& x, const QPolynomial& y);
QPolynomial operator-(const QPolynomial& x, const QPolynomial& y);
QPolynomial operator*(const QPolynomial& x, const QPolynomial& y);
QPolynomial operator*(Complex c, const QPolynomial& p);

// q_0 = 1 and the antilinear three-term recurrence above; q_j has degree j
// with leading coefficient 1/(a_0 ... a_{j-1}) conjugated on every other
// step. Requires count <= n.
std::vector<QPolynomial> q_polynomials(const ComplexJacobi& jac, int count);

enum class GramForm {
  vector_form,  // kernel (1+Re psi, -i Im psi; i Im psi, 1-Re psi) on (q(s), q(-s))
  even_odd,     // kernel (1, conj(psi); psi, 1) on (q_e(s), q_o(s))
};

// Discrete Gram matrix G[j][k] of the orthogonality relation in the chosen
// form. For data = phase_function(J) of the generating J, G is the identity
// for j,k < capacity (the total count of singular-subspace dimensions);
// the two forms agree entrywise.
MatrixXc orthogonality_gram(const std::vector<QPolynomial>& qs, const SpectralData& data,
                            GramForm form, const Tolerances& tol = {});

// Number of q-polynomials the data can resolve: the sum of cluster ranks,
// read off the phases (|psi| = 1 marks a one-dimensional cluster).
int gram_capacity(const SpectralData& data, const Tolerances& tol = {});

// For real phase data (self-adjoint J): the spectral measure mu of J on the
// real line, dmu = (1+psi)/2 dnu at +s and the reflection of
// dmu_tilde = (1-psi)/2 dnu at -s. Zero-mass atoms are dropped.
struct SelfAdjointSplit {
  RealMeasure mu;          // over the whole real line
  DiscreteMeasure mu_tilde;  // on s > 0
};

SelfAdjointSplit selfadjoint_split(const SpectralData& data, const Tolerances& tol = {});

}  // namespace cjacobi
