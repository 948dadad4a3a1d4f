#include <doctest.h>

#include <cmath>

#include <Eigen/SVD>

#include "cjacobi/direct.hpp"
#include "cjacobi/random.hpp"

using namespace cjacobi;
using namespace std::complex_literals;

namespace {

// Hand oracle for the 2x2 instance [[i,1],[1,0]]: eigenvalues of
// J*J = [[2,-i],[i,1]] are (3 +- sqrt 5)/2, i.e. phi^2 and 1/phi^2.
struct GoldenOracle {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double s_small() const { return 1.0 / phi; }
  double s_large() const { return phi; }
  double w_large() const { return phi * phi / (phi * phi + 1.0); }
  double w_small() const { return 1.0 / (phi * phi + 1.0); }
  // phases solve the 2x2 moment system with omega_1 = i, omega_3 = 3i
  Complex psi_small() const { return -1.0i; }
  Complex psi_large() const { return 1.0i; }
};

ComplexJacobi golden() { return validate({1.0}, {1.0i, 0.0}); }

double spectral_norm(const ComplexJacobi& jac) {
  return Eigen::JacobiSVD<MatrixXc>(dense(jac)).singularValues()(0);
}

}  // namespace

TEST_CASE("spectral measure of the 1x1 instance") {
  const SpectralDecomposition dec = spectral_measure(validate({}, {2.0i}));
  REQUIRE(dec.measure.size() == 1);
  CHECK(dec.measure.points[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(dec.measure.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spectral measure of the golden instance matches the hand eigensolve") {
  const GoldenOracle oracle;
  const SpectralDecomposition dec = spectral_measure(golden());
  REQUIRE(dec.measure.size() == 2);
  CHECK(std::abs(dec.measure.points[0] - oracle.s_small()) < 1e-12);
  CHECK(std::abs(dec.measure.points[1] - oracle.s_large()) < 1e-12);
  CHECK(std::abs(dec.measure.weights[0] - oracle.w_small()) < 1e-12);
  CHECK(std::abs(dec.measure.weights[1] - oracle.w_large()) < 1e-12);
}

TEST_CASE("a multiplicity-two cluster carries the full weight") {
  const SpectralDecomposition dec = spectral_measure(validate({1.0}, {0.0, 0.0}));
  REQUIRE(dec.measure.size() == 1);
  CHECK(dec.measure.points[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dec.measure.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("singular triples satisfy the defining relations") {
  const ComplexJacobi jac = random_jacobi(17, 7);
  const MatrixXc m = dense(jac);
  const double norm = spectral_norm(jac);
  const SpectralDecomposition dec = spectral_measure(jac);
  for (const auto& cluster : dec.clusters) {
    for (const SingularTriple& t : cluster) {
      CHECK(std::abs(t.v.norm() - 1.0) < 1e-13);
      CHECK(std::abs(t.u.norm() - 1.0) < 1e-13);
      CHECK((m * t.v - t.s * t.u).norm() < 1e-8 * norm);
      CHECK((m.adjoint() * t.u - t.s * t.v).norm() < 1e-8 * norm);
    }
  }
}

TEST_CASE("phase extraction caps and error paths") {
  // 13 well-separated atoms exceed the Vandermonde cap
  const ComplexJacobi big = random_jacobi(19, 13);
  if (min_singular_gap(big) >= 1e-3)
    CHECK_THROWS_WITH_AS(phase_from_moments(big), doctest::Contains("TooLarge"), Error);
  CHECK_THROWS_WITH_AS(moment_sequence(random_jacobi(1, 3), -1), doctest::Contains("ShapeError"),
                       Error);
}

TEST_CASE("phase function on the reference instances") {
  const SpectralData one = phase_function(validate({}, {2.0i}));
  CHECK(std::abs(one.psi[0] - 1.0i) < 1e-14);

  const GoldenOracle oracle;
  const SpectralData g = phase_function(golden());
  CHECK(std::abs(g.psi[0] - oracle.psi_small()) < 1e-12);
  CHECK(std::abs(g.psi[1] - oracle.psi_large()) < 1e-12);

  const SpectralData free2 = phase_function(validate({1.0}, {0.0, 0.0}));
  CHECK(std::abs(free2.psi[0]) < 1e-14);
}

TEST_CASE("phase from moments agrees with the geometric extractor") {
  const SpectralData one = phase_function(validate({}, {2.0i}));
  const auto psi = phase_from_moments(validate({}, {2.0i}));
  CHECK(std::abs(psi[0] - 1.0i) < 1e-14);

  const GoldenOracle oracle;
  const auto pg = phase_from_moments(golden());
  CHECK(std::abs(pg[0] - oracle.psi_small()) < 1e-12);
  CHECK(std::abs(pg[1] - oracle.psi_large()) < 1e-12);

  for (std::uint64_t seed : {21u, 22u, 23u}) {
    const ComplexJacobi jac = random_jacobi(seed, 6);
    const SpectralData data = phase_function(jac);
    const auto pm = phase_from_moments(jac);
    REQUIRE(pm.size() == static_cast<std::size_t>(data.atoms()));
    for (int k = 0; k < data.atoms(); ++k) CHECK(std::abs(pm[k] - data.psi[k]) < 1e-6);
  }
  (void)one;
}

TEST_CASE("moment sequence identities") {
  for (std::uint64_t seed : {31u, 32u, 33u}) {
    const ComplexJacobi jac = random_jacobi(seed, 7);
    const MomentSequence om = moment_sequence(jac, 4);
    CHECK(om.omega[0] == 1.0);
    CHECK(std::abs(om.omega[1] - jac.b[0]) < 1e-15);
    const double a0sq = std::norm(jac.a[0]);
    CHECK(std::abs(om.omega[2].real() - std::norm(jac.b[0]) - a0sq) < 1e-13);
    CHECK(std::abs(om.omega[2] - Complex(std::norm(jac.b[0]) + a0sq)) < 1e-13);
  }
}

TEST_CASE("free Jacobi even moments are the Catalan numbers") {
  const int n = 10;
  const ComplexJacobi free_n =
      validate(std::vector<Complex>(n - 1, 1.0), std::vector<Complex>(n, 0.0));
  const MomentSequence om = moment_sequence(free_n, 10);
  const double catalan[] = {1, 1, 2, 5, 14, 42};
  for (int k = 0; k <= 5; ++k) {
    CHECK(std::abs(om.omega[2 * k] - catalan[k]) < 1e-12);
    if (2 * k + 1 <= 10) CHECK(std::abs(om.omega[2 * k + 1]) < 1e-14);
  }
}

TEST_CASE("moments stabilize once the truncation exceeds the order") {
  const Complex w(0.4, -1.1);
  for (int m = 0; m <= 8; ++m) {
    const ComplexJacobi small = validate(std::vector<Complex>(m + 1, 1.3), std::vector<Complex>(m + 2, w));
    const ComplexJacobi large = validate(std::vector<Complex>(m + 7, 1.3), std::vector<Complex>(m + 8, w));
    CHECK(std::abs(moment_sequence(small, m).omega[m] - moment_sequence(large, m).omega[m]) == 0.0);
  }
}

TEST_CASE("projected phase identity holds on the truncation") {
  // f = 1 on the 1x1 instance
  const ComplexJacobi one = validate({}, {2.0i});
  CHECK(verify_strong_psi(one, phase_function(one), {1.0}) < 1e-14);

  // f = 1 on a self-adjoint instance
  const ComplexJacobi sa = validate({1.0}, {1.0, 1.0});
  CHECK(verify_strong_psi(sa, phase_function(sa), {1.0}) < 1e-10);

  // f = s^2 on seeded instances
  for (std::uint64_t seed : {41u, 42u, 43u}) {
    const ComplexJacobi jac = random_jacobi(seed, 8);
    const double norm = spectral_norm(jac);
    const double residual = verify_strong_psi(jac, phase_function(jac), {0.0, 0.0, 1.0});
    CHECK(residual < 1e-8 * std::pow(norm, 3));
  }
}

TEST_CASE("weights sum to one and the largest atom is the operator norm") {
  for (std::uint64_t seed : {51u, 52u, 53u, 54u}) {
    const ComplexJacobi jac = random_jacobi(seed, 9);
    const SpectralData data = phase_function(jac);
    CHECK(std::abs(data.measure.total_mass() - 1.0) < 1e-10);
    const double norm = spectral_norm(jac);
    CHECK(std::abs(data.measure.points.back() - norm) < 1e-7 * norm);
    for (const Complex& p : data.psi) CHECK(std::abs(p) <= 1.0 + 1e-8);
  }
}

TEST_CASE("intertwining J f(|J|) = f(|J*|) J on the truncation") {
  for (std::uint64_t seed : {61u, 62u}) {
    const ComplexJacobi jac = random_jacobi(seed, 8);
    const MatrixXc m = dense(jac);
    Eigen::SelfAdjointEigenSolver<MatrixXc> eig(m.adjoint() * m);
    Eigen::VectorXd s = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const MatrixXc v = eig.eigenvectors();
    const double norm = s.maxCoeff();
    for (int power = 1; power <= 6; ++power) {
      Eigen::VectorXd fs(s.size());
      for (int i = 0; i < s.size(); ++i) fs[i] = std::pow(s[i], power);
      const MatrixXc f_absJ = v * fs.asDiagonal() * v.adjoint();
      // |J*| has the conjugate eigenvectors
      const MatrixXc f_absJs = v.conjugate() * fs.asDiagonal() * v.transpose();
      const MatrixXc lhs = m * f_absJ - f_absJs * m;
      CHECK(Eigen::JacobiSVD<MatrixXc>(lhs).singularValues()(0) <
            1e-9 * std::pow(norm, power + 1));
    }
  }
}

TEST_CASE("classification through the phase function") {
  // real diagonal -> psi real
  for (std::uint64_t seed : {71u, 72u}) {
    const ComplexJacobi jac = random_jacobi(seed, 8, DiagonalKind::real);
    const SpectralData data = phase_function(jac);
    for (const Complex& p : data.psi) CHECK(std::abs(p.imag()) < 1e-9);
  }
  // zero diagonal -> psi = 0 off the kernel
  for (std::uint64_t seed : {73u, 74u}) {
    const ComplexJacobi jac = random_jacobi(seed, 8, DiagonalKind::zero);
    const SpectralData data = phase_function(jac);
    for (int k = 0; k < data.atoms(); ++k)
      if (data.measure.points[k] > 0.0) CHECK(std::abs(data.psi[k]) < 1e-9);
  }
  // simple singular spectrum -> |psi| = 1
  for (std::uint64_t seed : {75u, 76u}) {
    const ComplexJacobi jac = random_jacobi(seed, 8);
    if (min_singular_gap(jac) < 1e-3) continue;
    const SpectralData data = phase_function(jac);
    for (const Complex& p : data.psi) CHECK(std::abs(p) > 1.0 - 1e-7);
  }
}

TEST_CASE("moments respond proportionally to a perturbation") {
  const ComplexJacobi jac = random_jacobi(81, 8);
  SplitMix64 rng(123);
  std::vector<double> da(jac.size() - 1), db_re(jac.size()), db_im(jac.size());
  for (double& x : da) x = rng.uniform(-1.0, 1.0);
  for (double& x : db_re) x = rng.uniform(-1.0, 1.0);
  for (double& x : db_im) x = rng.uniform(-1.0, 1.0);

  const MomentSequence base = moment_sequence(jac, 8);
  auto deviation = [&](double eps) {
    std::vector<Complex> a = jac.a, b = jac.b;
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += eps * da[j];
    for (std::size_t j = 0; j < b.size(); ++j) b[j] += eps * Complex(db_re[j], db_im[j]);
    const MomentSequence pert = moment_sequence(validate(a, b), 8);
    double dev = 0.0;
    for (int m = 0; m <= 8; ++m) dev = std::max(dev, std::abs(pert.omega[m] - base.omega[m]));
    return dev;
  };
  const double d3 = deviation(1e-3);
  const double d4 = deviation(1e-4);
  const double d5 = deviation(1e-5);
  CHECK(d4 < d3 / 5.0);
  CHECK(d5 < d4 / 5.0);
  CHECK(d3 < 1e4 * 1e-3);  // Lipschitz at desk scale (slope ~ m ||J||^{m-1})
}
