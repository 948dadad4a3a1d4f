#include <doctest.h>

#include "cjacobi/motzkin.hpp"
#include "cjacobi/random.hpp"

using namespace cjacobi;

namespace {

// independent count oracle: straight recursive walk, no shared code with
// the enumerator or the DP
std::int64_t walk_count(int level, int steps_left) {
  if (level < 0 || level > steps_left) return 0;
  if (steps_left == 0) return 1;
  return walk_count(level - 1, steps_left - 1) + walk_count(level, steps_left - 1) +
         walk_count(level + 1, steps_left - 1);
}

BlockJacobi random_blocks(std::uint64_t seed, int n) { return block_embed(random_jacobi(seed, n)); }

MatrixXc matrix_power(const MatrixXc& m, int p) {
  MatrixXc acc = MatrixXc::Identity(m.rows(), m.cols());
  for (int i = 0; i < p; ++i) acc = acc * m;
  return acc;
}

}  // namespace

TEST_CASE("path counts are the Motzkin numbers") {
  const std::int64_t motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835};
  for (int m = 0; m <= 13; ++m) {
    CHECK(motzkin_number(m) == motzkin[m]);
    CHECK(motzkin_number(m) == walk_count(0, m));
    if (m <= 10) CHECK(static_cast<std::int64_t>(enumerate_paths(m).size()) == motzkin[m]);
  }
  CHECK(static_cast<std::int64_t>(enumerate_paths(13).size()) == 41835);
  CHECK_THROWS_WITH_AS(enumerate_paths(14), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("enumeration order and membership") {
  const auto p2 = enumerate_paths(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].levels == std::vector<int>{0});
  CHECK(p2[1].levels == std::vector<int>{1});

  CHECK(enumerate_paths(3).size() == 4);

  // the worked pattern of length 13
  const std::vector<int> pattern{1, 1, 0, 0, 1, 1, 2, 3, 3, 2, 2, 1};
  bool found = false;
  for (const PathIndex& p : enumerate_paths(13))
    if (p.levels == pattern) found = true;
  CHECK(found);
}

TEST_CASE("dyck counts without flat steps") {
  const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int k = 0; k <= 6; ++k) {
    CHECK(path_count(2 * k, false) == catalan[k]);
    CHECK(path_count(2 * k + 1, false) == 0);
  }
  CHECK(path_count(6, true) == 51);
}

TEST_CASE("low-order path moments in closed form") {
  const BlockJacobi blocks = random_blocks(7, 4);
  const PathMoment m1 = path_moment(blocks, 1);
  CHECK((m1.total - blocks.B[0]).cwiseAbs().maxCoeff() == 0.0);
  CHECK(m1.remainder.cwiseAbs().maxCoeff() == 0.0);

  const PathMoment m2 = path_moment(blocks, 2);
  const Matrix2c expected = blocks.B[0] * blocks.B[0] + blocks.A[0] * blocks.A[0].adjoint();
  CHECK((m2.total - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((m2.extremal - blocks.A[0] * blocks.A[0].adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((m2.remainder - blocks.B[0] * blocks.B[0]).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("path totals equal dense block powers") {
  for (std::uint64_t seed : {3u, 4u}) {
    const BlockJacobi blocks = random_blocks(seed, 6);
    const MatrixXc d = block_dense(blocks);
    for (int m = 1; m <= 8; ++m) {
      const PathMoment pm = path_moment(blocks, m);
      const Matrix2c top = matrix_power(d, m).block<2, 2>(0, 0);
      CHECK((pm.total - top).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("odd remainders vanish when every diagonal block is zero") {
  const BlockJacobi blocks = block_embed(random_jacobi(5, 6, DiagonalKind::zero));
  for (int m = 1; m <= 9; m += 2) {
    const PathMoment pm = path_moment(blocks, m);
    CHECK(pm.remainder.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("total and remainder are Hermitian for structured blocks") {
  const BlockJacobi blocks = random_blocks(9, 6);
  for (int m = 1; m <= 8; ++m) {
    const PathMoment pm = path_moment(blocks, m);
    CHECK((pm.total - pm.total.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((pm.remainder - pm.remainder.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("odd remainders are off-diagonal, even ones diagonal") {
  const BlockJacobi blocks = random_blocks(10, 6);
  for (int m = 3; m <= 8; ++m) {
    const PathMoment pm = path_moment(blocks, m);
    if (m % 2 == 1) {
      CHECK(std::abs(pm.remainder(0, 0)) < 1e-12);
      CHECK(std::abs(pm.remainder(1, 1)) < 1e-12);
    } else {
      CHECK(std::abs(pm.remainder(0, 1)) < 1e-12);
      CHECK(std::abs(pm.remainder(1, 0)) < 1e-12);
      CHECK(std::abs(pm.remainder(0, 0).imag()) < 1e-12);
    }
  }
}

TEST_CASE("shallow blocks raise a depth error") {
  const BlockJacobi blocks = random_blocks(11, 2);
  CHECK_THROWS_WITH_AS(path_moment(blocks, 5), doctest::Contains("DepthError"), Error);
}
