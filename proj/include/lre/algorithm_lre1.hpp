#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lre/trace.hpp"

namespace lre {

/// One D-stage of the halved construction: its move block and, where the
/// analysis pins one down, the exact state the block must exit into.
struct Stage {
  std::string label;
  MoveSequence block;
  std::optional<Permutation> exit;
};

/// The full stage schedule for a given n. Stages whose guards fail are
/// absent from `stages`, never present-but-empty. All guards depend on
/// (n, k, k') only, so the plan for a given n never varies.
struct StagePlan {
  int n;
  int k;        // floor(n/2)
  int k_prime;  // n - k = ceil(n/2)
  std::vector<Stage> stages;
};

namespace detail {

inline void rep_pair(MoveSequence& b, Move a, Move c, int times) {
  for (int i = 0; i < times; ++i) {
    b.push_back(a);
    b.push_back(c);
  }
}

/// Exit state of D2: (n-1, ..., k'+2, n, k', ..., 2, 1, k'+1). Valid
/// whenever D2 runs (k >= 3, i.e. n >= 6).
inline Permutation d2_exit(int n) {
  const int kp = n - n / 2;
  std::vector<std::uint8_t> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int v = n - 1; v >= kp + 2; --v) e.push_back(static_cast<std::uint8_t>(v));
  e.push_back(static_cast<std::uint8_t>(n));
  for (int v = kp; v >= 1; --v) e.push_back(static_cast<std::uint8_t>(v));
  e.push_back(static_cast<std::uint8_t>(kp + 1));
  return Permutation(std::move(e));
}

/// Exit state of D6: (1, k'-1, ..., 2, k', k'+1, ..., n). Valid whenever
/// D6 runs (k' >= 3, i.e. n >= 5); degenerates to the identity at k' = 3.
inline Permutation d6_exit(int n) {
  const int kp = n - n / 2;
  std::vector<std::uint8_t> e;
  e.reserve(static_cast<std::size_t>(n));
  e.push_back(1);
  for (int v = kp - 1; v >= 2; --v) e.push_back(static_cast<std::uint8_t>(v));
  for (int v = kp; v <= n; ++v) e.push_back(static_cast<std::uint8_t>(v));
  return Permutation(std::move(e));
}

/// Exit state of D8: (2, 3, ..., n, 1).
inline Permutation d8_exit(int n) {
  std::vector<std::uint8_t> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int v = 2; v <= n; ++v) e.push_back(static_cast<std::uint8_t>(v));
  e.push_back(1);
  return Permutation(std::move(e));
}

}  // namespace detail

/// Builds the deterministic stage schedule for sorting R_n.
///
/// The D3 and D8 blocks follow explicit iteration schedules rather than
/// runtime tests on the permutation: D3 runs i = 0 (E), i = 1 (L), then
/// E, (RE)^(i-1), L^i for i = 2..k-3; D8 runs i = 0 (E) and, only when
/// k' > 4, i = 1 (L), the same middle pattern for i = 2..k'-4, and a final
/// E, (RE)^(k'-4) with no trailing rotation block. At k' = 4 the D8 block
/// is the single E.
inline StagePlan lre1_stage_plan(int n) {
  if (n < 3) throw UnsupportedSizeError("lre1_stage_plan: defined for n >= 3");
  const int k = n / 2;
  const int kp = n - k;
  StagePlan plan{n, k, kp, {}};
  using detail::rep_pair;

  if (k != 1) plan.stages.push_back({"D1", {Move::E}, std::nullopt});

  if (k >= 3) {
    MoveSequence b;
    rep_pair(b, Move::L, Move::E, k - 2);
    rep_pair(b, Move::R, Move::E, k - 2);
    b.push_back(Move::L);
    plan.stages.push_back({"D2", std::move(b), detail::d2_exit(n)});
  }

  if (k >= 4) {
    MoveSequence b{Move::E, Move::L};
    for (int i = 2; i <= k - 3; ++i) {
      b.push_back(Move::E);
      rep_pair(b, Move::R, Move::E, i - 1);
      for (int j = 0; j < i; ++j) b.push_back(Move::L);
    }
    plan.stages.push_back({"D3", std::move(b), std::nullopt});
  }

  if (k != 1)
    plan.stages.push_back({"D4", {Move::L, Move::L}, k_prime_perm(k, n)});
  else
    plan.stages.push_back({"D4", {Move::L}, k_prime_perm(k, n)});

  plan.stages.push_back({"D5", {Move::E}, std::nullopt});

  if (kp >= 3) {
    MoveSequence b;
    rep_pair(b, Move::L, Move::E, kp - 2);
    rep_pair(b, Move::R, Move::E, kp - 2);
    plan.stages.push_back({"D6", std::move(b), detail::d6_exit(n)});
  }

  if (kp >= 4) {
    plan.stages.push_back({"D7", {Move::L}, std::nullopt});

    MoveSequence b{Move::E};
    if (kp > 4) {
      b.push_back(Move::L);
      for (int i = 2; i <= kp - 4; ++i) {
        b.push_back(Move::E);
        rep_pair(b, Move::R, Move::E, i - 1);
        for (int j = 0; j < i; ++j) b.push_back(Move::L);
      }
      b.push_back(Move::E);
      rep_pair(b, Move::R, Move::E, kp - 4);
    }
    plan.stages.push_back({"D8", std::move(b), detail::d8_exit(n)});

    plan.stages.push_back({"D9", {Move::R}, std::nullopt});
  }

  return plan;
}

/// Closed-form move count of sort_lre1.
inline long long lre1_count(long long n) {
  if (n < 3) throw UnsupportedSizeError("lre1_count: defined for n >= 3");
  switch (n) {
    case 3: return 2;
    case 4: return 4;
    case 5: return 8;
    case 6: return 13;
    case 7: return 20;
    default: break;
  }
  if (n % 2 == 0) return (3 * n * n - 20 * n + 72) / 4;
  return (3 * n * n - 20 * n + 73) / 4;
}

/// Stage-pair move counts in the full-stage regime (n >= 8), from the
/// per-pair parity formulas. Keys: "D1+D2", "D3+D4", "D5+D6", "D7+D8",
/// "D9". The values sum to lre1_count(n).
inline std::map<std::string, long long> lre1_stage_counts(long long n) {
  if (n < 8) throw UnsupportedSizeError("lre1_stage_counts: defined for n >= 8");
  std::map<std::string, long long> c;
  const bool even = (n % 2 == 0);
  c["D1+D2"] = even ? 2 * n - 6 : 2 * n - 8;
  c["D3+D4"] = even ? (3 * n * n - 34 * n + 112) / 8 : (3 * n * n - 40 * n + 149) / 8;
  c["D5+D6"] = even ? 2 * n - 7 : 2 * n - 5;
  c["D7+D8"] = even ? (3 * n * n - 38 * n + 128) / 8 : (3 * n * n - 32 * n + 93) / 8;
  c["D9"] = 1;
  return c;
}

/// Sorts R_n via the halved route: build the top half's descending block,
/// park it behind the bottom half (reaching K'_{k,n}), then sort the bottom
/// half in place and rotate once. Checkpoints land after D2, D4, D6 and D8
/// where the analysis fixes the exact state, plus the final identity.
inline SortTrace sort_lre1(int n) {
  StagePlan plan = lre1_stage_plan(n);
  SortTrace t{reverse_perm(n), {}, {}, "lre1"};
  t.moves.reserve(static_cast<std::size_t>(lre1_count(n)));
  for (Stage& s : plan.stages) {
    t.moves.insert(t.moves.end(), s.block.begin(), s.block.end());
    if (s.exit) t.checkpoints.push_back({s.label, t.moves.size(), std::move(*s.exit)});
  }
  t.checkpoints.push_back({"final", t.moves.size(), identity_perm(n)});
  return t;
}

}  // namespace lre
