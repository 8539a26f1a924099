#pragma once

#include <string>

#include "lre/trace.hpp"

namespace lre {

/// Moves spent turning K_{r,n} into K_{r+1,n}: L^(r-1), E, (RE)^(r-1),
/// so (r-1) + 1 + 2(r-1) = 3r - 2.
inline long long lre_stage_count(long long r) {
  if (r < 1) throw DomainError("lre_stage_count: r must be >= 1");
  return 3 * r - 2;
}

/// Moves from R_n to K_{n-2,n}: sum of 3r-2 over r = 1..n-3.
inline long long lre_A(long long n) {
  if (n < 3) throw UnsupportedSizeError("lre_A: defined for n >= 3");
  return (3 * n * n - 19 * n + 30) / 2;
}

/// Total move count of sort_lre: the stage sum plus the three-move finish.
inline long long lre_count(long long n) {
  if (n < 3) throw UnsupportedSizeError("lre_count: defined for n >= 3");
  return lre_A(n) + 3;
}

/// Sorts R_n through the checkpoint chain K_{1,n} -> K_{2,n} -> ... ->
/// K_{n-2,n} -> K_{n,n}. Each loop stage emits L^(r-1), E, (RE)^(r-1); the
/// finish from K_{n-2,n} is R^2, E. Trace length equals lre_count(n).
inline SortTrace sort_lre(int n) {
  if (n < 3) throw UnsupportedSizeError("sort_lre: defined for n >= 3");
  SortTrace t{reverse_perm(n), {}, {}, "lre"};
  t.moves.reserve(static_cast<std::size_t>(lre_count(n)));
  auto label = [n](int r) { return "K_{" + std::to_string(r) + "," + std::to_string(n) + "}"; };
  for (int r = 1; r <= n - 3; ++r) {
    for (int i = 0; i < r - 1; ++i) t.moves.push_back(Move::L);
    t.moves.push_back(Move::E);
    for (int i = 0; i < r - 1; ++i) {
      t.moves.push_back(Move::R);
      t.moves.push_back(Move::E);
    }
    t.checkpoints.push_back({label(r + 1), t.moves.size(), k_perm(r + 1, n)});
  }
  t.moves.push_back(Move::R);
  t.moves.push_back(Move::R);
  t.moves.push_back(Move::E);
  t.checkpoints.push_back({label(n), t.moves.size(), k_perm(n, n)});
  return t;
}

}  // namespace lre
