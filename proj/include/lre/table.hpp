#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "lre/cache.hpp"
#include "lre/search.hpp"
#include "lre/verify.hpp"
#include "lre/version.hpp"

namespace lre {

/// One comparison row: move counts for sorting R_n by each route. The
/// optimal column is absent when the search was skipped or aborted.
struct TableRow {
  int n;
  long long lre;
  long long lre1;
  std::optional<long long> optimal;
};

/// Searches for n at or above this size are opt-in (`deep`): the n = 11
/// frontier alone is tens of millions of states.
inline constexpr int kDeepSearchThreshold = 11;

struct TableOptions {
  bool include_optimal = false;
  bool deep = false;
  SearchLimits limits;              // applied to the optimal-column searches
  ResultCache* cache = nullptr;     // optional result reuse across runs
  std::ostream* diag = nullptr;     // warnings
  std::ostream* progress = nullptr; // per-level search progress
};

namespace detail {

/// Column value from a verified trace. The trace must both replay cleanly
/// and agree with the closed-form count; either failure is a hard error
/// since it means the construction itself is broken.
inline long long verified_count(int n, const char* algorithm) {
  SortTrace t = sort_rn(n, algorithm);
  VerificationReport rep = verify_trace(t);
  if (!rep.pass())
    throw Error("trace verification failed for " + rep.trace_id +
                " (formula " + std::to_string(rep.expected_count) + ", trace " +
                std::to_string(rep.actual_count) + ")");
  return rep.actual_count;
}

inline std::optional<long long> optimal_column(int n, const TableOptions& opts) {
  if (n >= kDeepSearchThreshold && !opts.deep) {
    if (opts.diag)
      *opts.diag << "warning: skipping optimal search for n=" << n
                 << " (pass --deep to enable)\n";
    return std::nullopt;
  }
  if (opts.cache) {
    auto hit = opts.cache->verified_lookup(n, "optimal", std::string(kToolVersion));
    if (hit) return hit->count;
  }
  SearchLimits limits = opts.limits;
  if (!limits.max_depth) {
    // The constructive route certifies R_n reachable in lre1_count(n)
    // moves, so the bound cannot cut off this search.
    limits.max_depth = static_cast<int>(n >= 3 ? lre1_count(n) : n - 1);
  }
  try {
    SearchResult result = optimal_distance(reverse_perm(n), limits, opts.progress);
    if (opts.cache) {
      ResultCache::Entry entry;
      entry.count = result.distance;
      entry.moves = moves_to_string(result.witness);
      entry.stats = {{"states_expanded", result.stats.states_expanded},
                     {"peak_frontier", result.stats.peak_frontier},
                     {"elapsed_seconds", result.stats.elapsed.count()}};
      entry.timestamp = utc_timestamp();
      opts.cache->store(n, "optimal", std::string(kToolVersion), std::move(entry));
    }
    return result.distance;
  } catch (const SearchAborted& e) {
    if (opts.diag)
      *opts.diag << "warning: optimal search for n=" << n << " aborted: " << e.what()
                 << " (deepest completed level " << e.deepest_completed_level << ")\n";
    return std::nullopt;
  }
}

}  // namespace detail

/// One row per n in [n_min, n_max]. The lre and lre1 columns always come
/// from verified traces, never from the formulas alone.
inline std::vector<TableRow> build_table(int n_min, int n_max, const TableOptions& opts = {}) {
  if (n_min < 1 || n_min > n_max) throw DomainError("build_table: need 1 <= n_min <= n_max");
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    TableRow row{n, detail::verified_count(n, "lre"), detail::verified_count(n, "lre1"),
                 std::nullopt};
    if (opts.include_optimal) row.optimal = detail::optimal_column(n, opts);
    if (row.optimal && (*row.optimal > row.lre1 || row.lre1 > row.lre))
      throw Error("table invariant violated at n=" + std::to_string(n) +
                  ": expected optimal <= lre1 <= lre");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lre
