#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "lre/ranking.hpp"

namespace lre {

/// Optional caps that make long searches reproducible and abortable.
/// Hitting any cap raises SearchAborted with the deepest completed level.
struct SearchLimits {
  std::optional<int> max_depth;
  std::optional<std::uint64_t> max_states;
  std::optional<std::uint64_t> max_memory_hint;  // bytes, approximate
};

struct SearchStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t peak_frontier = 0;
  std::chrono::duration<double> elapsed{0};
};

/// Exact distance from `source` to the identity, one optimal move sequence
/// witnessing it, and how much work the search did.
struct SearchResult {
  int n;
  Permutation source;
  int distance;
  MoveSequence witness;
  SearchStats stats;
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::uint64_t byte_size() const { return words_.size() * 8; }

 private:
  std::vector<std::uint64_t> words_;
};

/// 2-bit move code per state: the move that first discovered it. Together
/// with the implicit parent (apply the inverse move) this replaces
/// per-node path storage, which would be O(depth) bytes per state.
class MoveStore {
 public:
  explicit MoveStore(std::uint64_t states) : words_((states + 31) / 32, 0) {}
  Move get(std::uint64_t i) const {
    return static_cast<Move>((words_[i >> 5] >> ((i & 31) * 2)) & 3);
  }
  void put(std::uint64_t i, Move m) {
    const int shift = static_cast<int>(i & 31) * 2;
    std::uint64_t& w = words_[i >> 5];
    w = (w & ~(std::uint64_t{3} << shift)) | (static_cast<std::uint64_t>(m) << shift);
  }
  std::uint64_t byte_size() const { return words_.size() * 8; }

 private:
  std::vector<std::uint64_t> words_;
};

struct BfsOutcome {
  std::optional<int> target_depth;
  SearchStats stats;
};

/// Level-synchronous BFS over S_n under {E, R, L} with adjacent-inverse
/// pruning: from a state reached by move m, the generator inverse(m) is
/// never applied. Such a step either revisits the grandparent (already
/// seen) or extends a path that a shorter one dominates, so pruning leaves
/// every level — and hence every distance — unchanged. States are marked
/// visited when first generated; successors are emitted in E, R, L order,
/// which fixes the witness deterministically.
inline BfsOutcome run_bfs(int n, std::uint64_t src_rank,
                          std::optional<std::uint64_t> target_rank,
                          const SearchLimits& limits, MoveStore& pred,
                          std::vector<std::uint8_t>* dist_out,
                          std::ostream* progress) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t nfact = kFactorial[static_cast<std::size_t>(n)];
  SearchStats stats;
  auto finish = [&](std::optional<int> depth) {
    stats.elapsed = std::chrono::steady_clock::now() - t0;
    return BfsOutcome{depth, stats};
  };
  auto abort_run = [&](const std::string& why, int deepest) {
    stats.elapsed = std::chrono::steady_clock::now() - t0;
    throw SearchAborted(why, deepest, stats.states_expanded, stats.peak_frontier);
  };

  Bitset visited(nfact);
  const std::uint64_t fixed_bytes =
      visited.byte_size() + pred.byte_size() + (dist_out ? nfact : 0);
  if (limits.max_memory_hint && fixed_bytes > *limits.max_memory_hint)
    abort_run("search aborted: state tables exceed the memory hint", 0);

  visited.set(src_rank);
  if (dist_out) (*dist_out)[src_rank] = 0;
  stats.peak_frontier = 1;
  if (target_rank && src_rank == *target_rank) return finish(0);

  std::vector<std::uint64_t> current{src_rank}, next;
  std::array<std::uint8_t, 32> u{}, v{};
  int depth = 0;  // distance of the states in `current`

  while (true) {
    if (limits.max_depth && depth >= *limits.max_depth)
      abort_run("search aborted: depth limit reached", depth);
    if (limits.max_states && stats.states_expanded + current.size() > *limits.max_states)
      abort_run("search aborted: state-expansion limit reached", depth);
    if (limits.max_memory_hint &&
        fixed_bytes + (current.size() + next.size()) * 8 > *limits.max_memory_hint)
      abort_run("search aborted: frontier exceeds the memory hint", depth);

    next.clear();
    for (std::uint64_t ur : current) {
      unrank_into(ur, n, u.data());
      const bool at_source = (ur == src_rank);
      const Move banned = at_source ? Move{} : inverse(pred.get(ur));
      ++stats.states_expanded;
      for (int mc = 0; mc < 3; ++mc) {
        const Move m = static_cast<Move>(mc);
        if (m == Move::E && n < 2) continue;
        if (!at_source && m == banned) continue;
        std::copy(u.begin(), u.begin() + n, v.begin());
        apply_move_inplace(v.data(), n, m);
        const std::uint64_t vr = rank_into(v.data(), n);
        if (visited.test(vr)) continue;
        visited.set(vr);
        pred.put(vr, m);
        if (dist_out) (*dist_out)[vr] = static_cast<std::uint8_t>(depth + 1);
        if (target_rank && vr == *target_rank) {
          stats.peak_frontier = std::max<std::uint64_t>(stats.peak_frontier, next.size() + 1);
          return finish(depth + 1);
        }
        next.push_back(vr);
      }
    }
    ++depth;
    stats.peak_frontier = std::max<std::uint64_t>(stats.peak_frontier, next.size());
    if (progress)
      *progress << "level " << depth << ": frontier=" << next.size()
                << " expanded=" << stats.states_expanded << '\n';
    if (next.empty()) {
      if (target_rank)
        throw FrontierExhaustedError(
            "frontier exhausted before reaching the target; the generator "
            "set should connect all of S_n");
      return finish(std::nullopt);
    }
    current.swap(next);
  }
}

}  // namespace detail

/// True Cayley-graph distance from `source` to I_n under {L, R, E}, with
/// one optimal witness. The witness never contains an adjacent inverse
/// pair, and identical inputs always return the identical witness.
inline SearchResult optimal_distance(const Permutation& source,
                                     const SearchLimits& limits = {},
                                     std::ostream* progress = nullptr) {
  const int n = source.size();
  if (n > kMaxRankableN) throw DomainError("optimal_distance: n exceeds rankable width");
  const std::uint64_t nfact = kFactorial[static_cast<std::size_t>(n)];
  const std::uint64_t src_rank = rank_of(source);
  const std::uint64_t target = 0;  // identity is lexicographically first

  detail::MoveStore pred(nfact);
  detail::BfsOutcome out =
      detail::run_bfs(n, src_rank, target, limits, pred, nullptr, progress);
  const int distance = *out.target_depth;

  MoveSequence witness(static_cast<std::size_t>(distance), Move::E);
  std::array<std::uint8_t, 32> buf{};
  detail::unrank_into(target, n, buf.data());
  std::uint64_t at = target;
  for (int i = distance - 1; i >= 0; --i) {
    const Move m = pred.get(at);
    witness[static_cast<std::size_t>(i)] = m;
    detail::apply_move_inplace(buf.data(), n, inverse(m));
    at = detail::rank_into(buf.data(), n);
  }
  return SearchResult{n, source, distance, std::move(witness), out.stats};
}

/// Distance from I_n for every state of S_n, indexed by rank. The generator
/// set is closed under inverses, so these equal the distances *to* I_n; in
/// particular the entry at rank_of(reverse_perm(n)) is the optimal
/// sorting distance of R_n.
inline std::vector<std::uint8_t> distance_table(int n, const SearchLimits& limits = {},
                                                std::ostream* progress = nullptr) {
  if (n < 1 || n > kMaxRankableN) throw DomainError("distance_table: n out of [1, 20]");
  const std::uint64_t nfact = kFactorial[static_cast<std::size_t>(n)];
  std::vector<std::uint8_t> dist(nfact, 0xFF);
  detail::MoveStore pred(nfact);
  detail::run_bfs(n, 0, std::nullopt, limits, pred, &dist, progress);
  return dist;
}

}  // namespace lre
