#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lre/algorithm_lre.hpp"
#include "lre/algorithm_lre1.hpp"
#include "lre/trace.hpp"

namespace lre {

struct CheckpointOutcome {
  std::string label;
  bool pass;
  Permutation expected;
  Permutation actual;
};

/// Replay outcome for one trace. Overall pass requires every checkpoint,
/// the final state, and the move count to match.
struct VerificationReport {
  std::string trace_id;
  std::vector<CheckpointOutcome> checkpoints;
  bool final_pass;
  Permutation final_expected;
  Permutation final_actual;
  long long expected_count;
  long long actual_count;

  bool pass() const {
    if (!final_pass || expected_count != actual_count) return false;
    for (const auto& c : checkpoints)
      if (!c.pass) return false;
    return true;
  }
};

/// Move count the named algorithm is committed to for sorting R_n. The
/// sizes below the stage algorithms' domain follow the harness convention:
/// nothing to do at n = 1, a single exchange at n = 2.
inline std::optional<long long> expected_moves_for(std::string_view algorithm, int n) {
  if (algorithm != "lre" && algorithm != "lre1") return std::nullopt;
  if (n == 1) return 0;
  if (n == 2) return 1;
  return algorithm == "lre" ? lre_count(n) : lre1_count(n);
}

/// Replays t.moves from t.input, comparing every checkpoint prefix and the
/// final state against the identity. Mismatches are reported, never thrown;
/// only a malformed trace (checkpoint beyond the move list, illegal move
/// during replay) raises an error.
inline VerificationReport verify_trace(const SortTrace& t) {
  const int n = t.input.size();
  for (const auto& c : t.checkpoints)
    if (c.pos > t.moves.size())
      throw DomainError("verify_trace: checkpoint position beyond the move list");

  VerificationReport rep{
      t.algorithm + "(n=" + std::to_string(n) + ")",
      {},
      false,
      identity_perm(n),
      t.input,
      0,
      static_cast<long long>(t.moves.size())};
  rep.expected_count = expected_moves_for(t.algorithm, n).value_or(rep.actual_count);

  Permutation state = t.input;
  std::size_t applied = 0;
  auto advance_to = [&](std::size_t pos) {
    for (; applied < pos; ++applied) state = apply_move(state, t.moves[applied]);
  };
  for (const auto& c : t.checkpoints) {
    advance_to(c.pos);
    rep.checkpoints.push_back({c.label, state == c.expected, c.expected, state});
  }
  advance_to(t.moves.size());
  rep.final_actual = state;
  rep.final_pass = (state == rep.final_expected);
  return rep;
}

/// Trace for sorting R_n by the named algorithm ("lre" or "lre1"),
/// covering the tiny sizes the stage algorithms leave out.
inline SortTrace sort_rn(int n, std::string_view algorithm) {
  if (algorithm != "lre" && algorithm != "lre1")
    throw DomainError("unknown algorithm: " + std::string(algorithm));
  if (n < 1) throw DomainError("sort_rn: n must be >= 1");
  if (n == 1) return SortTrace{reverse_perm(1), {}, {{"final", 0, identity_perm(1)}}, std::string(algorithm)};
  if (n == 2)
    return SortTrace{reverse_perm(2), {Move::E}, {{"final", 1, identity_perm(2)}}, std::string(algorithm)};
  return algorithm == "lre" ? sort_lre(n) : sort_lre1(n);
}

}  // namespace lre
