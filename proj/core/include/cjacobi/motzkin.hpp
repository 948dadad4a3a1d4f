#pragma once

#include <cstdint>
#include <vector>

#include "cjacobi/types.hpp"

namespace cjacobi {

// Level sequence (j_1, ..., j_{m-1}) of a lattice path of m steps that
// starts and ends at level 0, moves by at most one level per step and never
// goes negative. Indexes one product term of P0 J^m P0*:
// up-step at level k contributes A_k, down-step into level k contributes
// A_k*, flat step at level k contributes B_k.
struct PathIndex {
  std::vector<int> levels;
};

// All paths of length m in lexicographic order on the level sequences.
// The count is the m-th Motzkin number. Throws TooLarge for m > 13.
std::vector<PathIndex> enumerate_paths(int m);

// m-th Motzkin number by dynamic programming (no enumeration).
std::int64_t motzkin_number(int m);

// Integer path-count oracle: number of paths of length m, counting a flat
// step as 1 when with_flat_steps and as 0 otherwise. With flat steps this
// is the Motzkin number; without, paths with any flat step vanish and the
// count is the Dyck count: Catalan(m/2) for even m, 0 for odd m.
std::int64_t path_count(int m, bool with_flat_steps);

struct PathMoment {
  Matrix2c total;     // sum over all paths = P0 (block matrix)^m P0*
  Matrix2c extremal;  // the unique deepest term: A_0..A_{n-1} A_{n-1}*..A_0*
                      // for m = 2n, with B_n inserted for m = 2n+1
  Matrix2c remainder; // total - extremal (the induction's Y term)
};

// Evaluates the path expansion of P0 J^m P0* over the given blocks.
// Requires the blocks to reach depth floor(m/2) + 1; throws DepthError
// otherwise and TooLarge for m > 13.
PathMoment path_moment(const BlockJacobi& blocks, int m);

namespace detail {

// Uncapped visitors over the path set; used by the capped public entry
// points and by the moment-based reconstruction, which needs m up to
// 2 * n_max - 1 = 15.
template <typename Visit>
void for_each_path(int m, Visit&& visit) {
  // visit(const std::vector<int>& levels)
  std::vector<int> levels;
  if (m <= 0) {
    visit(levels);
    return;
  }
  levels.assign(m - 1, 0);
  const int len = m - 1;
  // depth-first over j_1..j_{m-1}, lexicographic in the level values
  struct Frame { int level; int next_choice; };
  std::vector<int> choice(len, -1);
  int pos = 0;
  if (len == 0) {
    visit(levels);
    return;
  }
  while (pos >= 0) {
    if (pos == len) {
      if (levels[len - 1] <= 1) visit(levels);
      --pos;
      continue;
    }
    const int prev = pos == 0 ? 0 : levels[pos - 1];
    int next = ++choice[pos];  // 0,1,2 -> prev-1, prev, prev+1
    if (next > 2) {
      choice[pos] = -1;
      --pos;
      continue;
    }
    const int level = prev - 1 + next;
    const int remaining = len - pos - 1;
    if (level < 0 || level > remaining + 1) continue;  // cannot end at <=1
    levels[pos] = level;
    ++pos;
  }
}

std::vector<int> extremal_levels(int m);

Matrix2c path_product(const BlockJacobi& blocks, const std::vector<int>& levels, int m);

}  // namespace detail

}  // namespace cjacobi
