#include "cjacobi/constant_diagonal.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "cjacobi/quadrature.hpp"

namespace cjacobi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sqrt_clamped(double x) { return std::sqrt(std::max(x, 0.0)); }

// Chebyshev U_j coefficients (ascending), by the shared recurrence.
QPolynomial cheb_u(int j) {
  if (j < 0) return QPolynomial{{}};
  QPolynomial prev{{1.0}};
  if (j == 0) return prev;
  QPolynomial cur{{0.0, 2.0}};
  for (int k = 2; k <= j; ++k) {
    QPolynomial nxt;
    nxt.coeffs.assign(k + 1, 0.0);
    for (int i = 0; i <= k - 1; ++i) nxt.coeffs[i + 1] += 2.0 * cur.coeffs[i];
    for (int i = 0; i < static_cast<int>(prev.coeffs.size()); ++i) nxt.coeffs[i] -= prev.coeffs[i];
    prev = cur;
    cur = nxt;
  }
  return cur;
}

QPolynomial compose(const QPolynomial& outer, const QPolynomial& inner) {
  QPolynomial acc{{0.0}};
  QPolynomial power{{1.0}};
  for (const Complex& c : outer.coeffs) {
    acc = acc + c * power;
    power = power * inner;
  }
  return acc;
}

}  // namespace

double DensityModel::t_plus(double s) const {
  return -omega_reduced.real() + sqrt_clamped(s * s - omega_reduced.imag() * omega_reduced.imag());
}

double DensityModel::t_minus(double s) const {
  return -omega_reduced.real() - sqrt_clamped(s * s - omega_reduced.imag() * omega_reduced.imag());
}

double DensityModel::density(double s) const {
  const double y = omega_reduced.imag();
  const double rad = s * s - y * y;
  if (s < support_lo() || s > support_hi() || rad <= 0.0) return 0.0;
  const double rt = std::sqrt(rad);
  const double tp = -omega_reduced.real() + rt;
  double g = sqrt_clamped(4.0 - tp * tp);
  if (segments.front().two_branch && s <= segments.front().s_hi) {
    const double tm = -omega_reduced.real() - rt;
    g += sqrt_clamped(4.0 - tm * tm);
  }
  return s / (kTwoPi * rt) * g;
}

Complex DensityModel::phase(double s) const {
  const double y = omega_reduced.imag();
  const double rad = s * s - y * y;
  if (rad <= 0.0) return 0.0;
  const double rt = std::sqrt(rad);
  const double tp = -omega_reduced.real() + rt;
  Complex value;
  if (!(segments.front().two_branch && s <= segments.front().s_hi)) {
    value = (tp + omega_reduced) / s;  // equals (sqrt(s^2 - Im^2) + i Im)/s
  } else {
    const double tm = -omega_reduced.real() - rt;
    const double gp = sqrt_clamped(4.0 - tp * tp);
    const double gm = sqrt_clamped(4.0 - tm * tm);
    if (gp + gm == 0.0) return 0.0;
    value = ((tm + omega_reduced) * gm + (tp + omega_reduced) * gp) / (s * (gp + gm));
  }
  return phase_sign * value;
}

DensityModel closed_form_spectral(Complex omega) {
  DensityModel model;
  model.omega = omega;
  model.phase_sign = 1.0;
  if (omega.real() < 0.0) {
    // nu_{-w} = nu_w and psi_{-w} = -psi_w
    omega = -omega;
    model.phase_sign = -1.0;
  }
  model.omega_reduced = omega;
  const double y = std::abs(omega.imag());
  if (omega.real() > 2.0) {
    model.segments.push_back({std::abs(omega - 2.0), std::abs(omega + 2.0), false});
  } else {
    const double brk = std::abs(omega - 2.0);
    model.segments.push_back({y, brk, true});
    model.segments.push_back({brk, std::abs(omega + 2.0), false});
  }
  return model;
}

MomentSequence closed_form_moments(Complex omega, int max_order, double target) {
  if (max_order < 0 || max_order > 16)
    fail(errc::too_large, "moment order must be in [0, 16], got " + std::to_string(max_order));

  const DensityModel model = closed_form_spectral(omega);
  const Complex w = model.omega_reduced;
  const double y = w.imag();

  MomentSequence out;
  out.omega.reserve(max_order + 1);
  for (int m = 0; m <= max_order; ++m) {
    Complex value = 0.0;
    double err = 0.0;
    for (const auto& seg : model.segments) {
      const double u_lo = sqrt_clamped(seg.s_lo * seg.s_lo - y * y);
      const double u_hi = sqrt_clamped(seg.s_hi * seg.s_hi - y * y);
      if (u_hi - u_lo < 1e-15) continue;
      auto integrand = [&](double u) -> Complex {
        const double s2 = u * u + y * y;
        const double tp = -w.real() + u;
        const double gp = sqrt_clamped(4.0 - tp * tp);
        if (m % 2 == 0) {
          double g = gp;
          if (seg.two_branch) {
            const double tm = -w.real() - u;
            g += sqrt_clamped(4.0 - tm * tm);
          }
          return std::pow(s2, m / 2) * g / kTwoPi;
        }
        // s^m psi dnu = s^{m-1} ((t_- + w) g_- + (t_+ + w) g_+) / (2 pi) du
        Complex h = (tp + w) * gp;
        if (seg.two_branch) {
          const double tm = -w.real() - u;
          h += (tm + w) * sqrt_clamped(4.0 - tm * tm);
        }
        return std::pow(s2, (m - 1) / 2) * h / kTwoPi;
      };
      const QuadratureResult r = integrate(integrand, u_lo, u_hi, 0.25 * target);
      value += r.value;
      err += r.error_estimate;
    }
    if (err > target) {
      char est[32];
      std::snprintf(est, sizeof est, "%.3e", err);
      fail(errc::quadrature_failure, "error estimate " + std::string(est) +
                                         " exceeds target at moment order " + std::to_string(m));
    }
    if (m % 2 == 1) value *= model.phase_sign;
    out.omega.push_back(value);
  }
  return out;
}

double closed_form_mass(Complex omega, double target) {
  return closed_form_moments(omega, 0, target).omega[0].real();
}

QPolynomial chebyshev_q(Complex omega, int index) {
  if (omega.real() != 0.0) fail(errc::domain_error, "closed form requires purely imaginary omega");
  if (index < 0 || index > 14) fail(errc::domain_error, "index must be in [0, 14]");

  // x(s) = (2 - s^2 - omega^2) / 2
  QPolynomial x_of_s{{(2.0 - omega * omega) / 2.0, 0.0, -0.5}};
  const double sign = (index / 2) % 2 == 0 ? 1.0 : -1.0;
  if (index % 2 == 1) {
    const int j = (index - 1) / 2;
    QPolynomial u = compose(cheb_u(j), x_of_s);
    QPolynomial linear{{-omega, 1.0}};
    return sign * (linear * u);
  }
  const int j = index / 2;
  QPolynomial diff = compose(cheb_u(j), x_of_s);
  if (j >= 1) diff = diff - compose(cheb_u(j - 1), x_of_s);
  return sign * diff;
}

ComplexJacobi constant_jacobi(Complex omega, int n) {
  if (n < 1) fail(errc::shape_error, "truncation size must be >= 1");
  return ComplexJacobi{std::vector<Complex>(n - 1, Complex(1.0, 0.0)),
                       std::vector<Complex>(n, omega), std::nullopt};
}

}  // namespace cjacobi
