#include <doctest.h>

#include "cjacobi/direct.hpp"
#include "cjacobi/random.hpp"
#include "cjacobi/types.hpp"

using namespace cjacobi;
using namespace std::complex_literals;

TEST_CASE("validate accepts a minimal well-formed instance") {
  const ComplexJacobi jac = validate({1.0}, {1.0i, 0.0});
  CHECK(jac.size() == 2);
  const ComplexJacobi single = validate({}, {1.0i});
  CHECK(single.size() == 1);
}

TEST_CASE("validate rejects bad shapes and zero off-diagonals") {
  CHECK_THROWS_WITH_AS(validate({0.0}, {1.0, 1.0}), doctest::Contains("ZeroOffDiagonal"), Error);
  CHECK_THROWS_WITH_AS(validate({1.0, 2.0}, {0.0}), doctest::Contains("ShapeError"), Error);
  CHECK_THROWS_WITH_AS(validate({}, {}), doctest::Contains("ShapeError"), Error);
  // negative real a without arg_spec is a normalization violation
  CHECK_THROWS_WITH_AS(validate({-1.0}, {0.0, 0.0}), doctest::Contains("ArgMismatch"), Error);
  // prescribed argument must match the actual argument
  CHECK_THROWS_WITH_AS(validate({1.0}, {0.0, 0.0}, std::vector<double>{1.0}),
                       doctest::Contains("ArgMismatch"), Error);
  CHECK_NOTHROW(validate({std::polar(1.5, 0.7)}, {0.0, 0.0}, std::vector<double>{0.7}));
}

TEST_CASE("dense transcribes the tridiagonal data and is exactly symmetric") {
  const ComplexJacobi jac = validate({1.0}, {1.0i, 0.0});
  const MatrixXc m = dense(jac);
  CHECK(m(0, 0) == 1.0i);
  CHECK(m(0, 1) == 1.0);
  CHECK(m(1, 0) == 1.0);
  CHECK(m(1, 1) == 0.0);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const ComplexJacobi r = random_jacobi(seed, 7);
    const MatrixXc d = dense(r);
    // bitwise: stored values are shared between (i,j) and (j,i)
    CHECK((d - d.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }

  const MatrixXc free3 = dense(validate({1.0, 1.0}, {0.0, 0.0, 0.0}));
  CHECK(free3.diagonal().cwiseAbs().maxCoeff() == 0.0);
  CHECK(free3(0, 1) == 1.0);
  CHECK(free3(1, 2) == 1.0);
}

TEST_CASE("block embedding has the structured form") {
  const ComplexJacobi jac = validate({1.0}, {1.0i, 0.0});
  const BlockJacobi blocks = block_embed(jac);
  Matrix2c a0_expected, b0_expected;
  a0_expected << 0.0, 1.0, 1.0, 0.0;
  b0_expected << 0.0, 1.0i, -1.0i, 0.0;
  CHECK((blocks.A[0] - a0_expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK((blocks.B[0] - b0_expected).cwiseAbs().maxCoeff() == 0.0);

  for (const Matrix2c& b : blocks.B) CHECK((b - b.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  for (const Matrix2c& a : blocks.A) CHECK(std::abs(a.determinant() + std::norm(jac.a[0])) < 1e-15);

  const BlockJacobi zero_diag = block_embed(validate({1.0, 1.5}, {0.0, 0.0, 0.0}));
  for (const Matrix2c& b : zero_diag.B) CHECK(b.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed then un-embed is the identity") {
  for (std::uint64_t seed : {4u, 5u}) {
    const ComplexJacobi jac = random_jacobi(seed, 6);
    const ComplexJacobi back = un_embed(block_embed(jac));
    for (int j = 0; j < jac.size(); ++j) CHECK(back.b[j] == jac.b[j]);
    for (int j = 0; j + 1 < jac.size(); ++j) CHECK(back.a[j] == jac.a[j]);
  }
  // also with prescribed arguments
  std::vector<double> thetas{0.3, -1.2, 2.0, 0.0};
  const ComplexJacobi jac = random_jacobi(99, 5, DiagonalKind::complex_disk, thetas);
  const ComplexJacobi back = un_embed(block_embed(jac));
  for (int j = 0; j + 1 < jac.size(); ++j) CHECK(back.a[j] == jac.a[j]);
}

TEST_CASE("multiplicity of J*J is at most two after clustering") {
  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    const ComplexJacobi jac = random_jacobi(seed, 9);
    const SpectralDecomposition dec = spectral_measure(jac);
    for (const auto& cluster : dec.clusters) CHECK(cluster.size() <= 2);
  }
  // the free instance has genuine two-dimensional clusters
  const ComplexJacobi free2 = validate({1.0}, {0.0, 0.0});
  const SpectralDecomposition dec = spectral_measure(free2);
  REQUIRE(dec.clusters.size() == 1);
  CHECK(dec.clusters[0].size() == 2);
}
