#include "cjacobi/motzkin.hpp"

#include <string>

namespace cjacobi {

namespace detail {

std::vector<int> extremal_levels(int m) {
  std::vector<int> levels;
  if (m <= 1) return levels;  // empty sequence for m = 0, 1
  const int n = m / 2;
  for (int k = 1; k <= n; ++k) levels.push_back(k);
  if (m % 2 == 1) levels.push_back(n);  // the single flat step at the top
  for (int k = n - 1; k >= 1; --k) levels.push_back(k);
  return levels;
}

Matrix2c path_product(const BlockJacobi& blocks, const std::vector<int>& levels, int m) {
  Matrix2c prod = Matrix2c::Identity();
  int prev = 0;
  for (int i = 1; i <= m; ++i) {
    const int cur = i <= static_cast<int>(levels.size()) ? levels[i - 1] : 0;
    if (cur == prev + 1) {
      prod = prod * blocks.A[prev];
    } else if (cur == prev - 1) {
      prod = prod * blocks.A[cur].adjoint();
    } else {
      prod = prod * blocks.B[cur];
    }
    prev = cur;
  }
  return prod;
}

}  // namespace detail

std::vector<PathIndex> enumerate_paths(int m) {
  if (m < 0 || m > 13) fail(errc::too_large, "path length must be in [0, 13], got " + std::to_string(m));
  std::vector<PathIndex> out;
  detail::for_each_path(m, [&](const std::vector<int>& levels) { out.push_back({levels}); });
  return out;
}

std::int64_t motzkin_number(int m) {
  if (m < 0) fail(errc::too_large, "negative path length");
  // paths[k] = number of partial paths currently at level k
  std::vector<std::int64_t> cur(m + 2, 0), nxt(m + 2, 0);
  cur[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int k = 0; k <= m; ++k) {
      if (cur[k] == 0) continue;
      nxt[k] += cur[k];
      nxt[k + 1] += cur[k];
      if (k > 0) nxt[k - 1] += cur[k];
    }
    std::swap(cur, nxt);
  }
  return cur[0];
}

std::int64_t path_count(int m, bool with_flat_steps) {
  if (with_flat_steps) return motzkin_number(m);
  if (m < 0) fail(errc::too_large, "negative path length");
  if (m % 2 == 1) return 0;
  // Dyck count = Catalan(m/2)
  std::vector<std::int64_t> cur(m + 2, 0), nxt(m + 2, 0);
  cur[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int k = 0; k <= m; ++k) {
      if (cur[k] == 0) continue;
      nxt[k + 1] += cur[k];
      if (k > 0) nxt[k - 1] += cur[k];
    }
    std::swap(cur, nxt);
  }
  return cur[0];
}

PathMoment path_moment(const BlockJacobi& blocks, int m) {
  if (m < 0 || m > 13) fail(errc::too_large, "path length must be in [0, 13], got " + std::to_string(m));
  const int depth_needed = m / 2 + 1;
  if (blocks.blocks() < depth_needed)
    fail(errc::depth_error, "need " + std::to_string(depth_needed) + " diagonal blocks for order " +
                                std::to_string(m) + ", have " + std::to_string(blocks.blocks()));

  PathMoment out;
  out.total = Matrix2c::Zero();
  detail::for_each_path(m, [&](const std::vector<int>& levels) {
    out.total += detail::path_product(blocks, levels, m);
  });
  out.extremal = detail::path_product(blocks, detail::extremal_levels(m), m);
  out.remainder = out.total - out.extremal;
  return out;
}

}  // namespace cjacobi
