#pragma once

#include <functional>
#include <vector>

#include "cjacobi/qpolys.hpp"
#include "cjacobi/types.hpp"

namespace cjacobi {

// Closed-form spectral data of the family with a_j = 1, b_j = omega.
//
// With t_pm(s) = -Re(omega) +- sqrt(s^2 - Im(omega)^2):
//   Re omega > 2:      density (s/2pi) sqrt((4 - t_+^2)/(s^2 - Im^2)) on
//                      [|omega-2|, |omega+2|], phase (t_+ + omega)/s;
//   0 <= Re omega <= 2: both branches contribute on [|Im|, |omega-2|] and
//                      t_+ alone on [|omega-2|, |omega+2|];
//   Re omega < 0:      reflected through density(-omega), -phase(-omega).
struct DensityModel {
  Complex omega;          // as requested
  Complex omega_reduced;  // representative with Re >= 0 used by the formulas
  double phase_sign = 1.0;  // -1 when omega was reflected

  // integration segments of the support (one or two, contiguous)
  struct Segment {
    double s_lo, s_hi;
    bool two_branch;  // include the t_- term
  };
  std::vector<Segment> segments;

  double support_lo() const { return segments.front().s_lo; }
  double support_hi() const { return segments.back().s_hi; }

  double t_plus(double s) const;
  double t_minus(double s) const;
  double density(double s) const;
  Complex phase(double s) const;
};

DensityModel closed_form_spectral(Complex omega);

// Moments of the closed-form data: omega_m = int s^m dnu for even m and
// int s^m psi(s) dnu for odd m, by adaptive quadrature in the variable
// u = sqrt(s^2 - Im(omega)^2), which removes the endpoint singularity of
// the density. Throws QuadratureFailure when the error estimate cannot be
// brought below the absolute target (1e-8 by default).
MomentSequence closed_form_moments(Complex omega, int max_order, double target = 1e-8);

// Mass of the closed-form density (the m = 0 moment); equals 1.
double closed_form_mass(Complex omega, double target = 1e-8);

// For purely imaginary omega, the q-polynomials in closed form through
// Chebyshev polynomials of x = (2 - s^2 - omega^2)/2:
//   q_{2j+1}(s) = (-1)^j (s - omega) U_j(x),
//   q_{2j}(s)   = (-1)^j (U_j(x) - U_{j-1}(x)).
// Requires Re omega = 0 and index <= 14.
QPolynomial chebyshev_q(Complex omega, int index);

// The n x n truncation of the family: a_j = 1, b_j = omega.
ComplexJacobi constant_jacobi(Complex omega, int n);

}  // namespace cjacobi
