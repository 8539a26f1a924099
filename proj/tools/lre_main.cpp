// Command-line front end: sort R_n with either constructive algorithm,
// search exact distances, reproduce the comparison table, verify traces,
// and replay move strings.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lre/algorithm_lre.hpp"
#include "lre/algorithm_lre1.hpp"
#include "lre/cache.hpp"
#include "lre/search.hpp"
#include "lre/serialize.hpp"
#include "lre/table.hpp"
#include "lre/verify.hpp"
#include "lre/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimitAbort = 3;

struct LimitFlags {
  std::optional<int> max_depth;
  std::optional<std::uint64_t> max_states;
  std::optional<std::uint64_t> max_memory;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-depth", max_depth, "Abort when the search would pass this depth");
    cmd->add_option("--max-states", max_states, "Abort after expanding this many states");
    cmd->add_option("--max-memory", max_memory, "Approximate memory budget in bytes");
  }
  lre::SearchLimits to_limits() const { return {max_depth, max_states, max_memory}; }
};

struct CacheFlags {
  std::string path = ".lre-cache.json";
  bool disabled = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cache", path, "Result cache file")->capture_default_str();
    cmd->add_flag("--no-cache", disabled, "Do not read or write the result cache");
  }
};

void print_sequence_text(std::ostream& out, int n, const std::string& algo, long long count,
                         const std::string& moves, const lre::Permutation& final_state) {
  out << "n: " << n << '\n'
      << "algo: " << algo << '\n'
      << "count: " << count << '\n'
      << "moves: " << moves << '\n'
      << "final: " << lre::perm_to_string(final_state) << '\n';
}

int run_sort(int n, const std::string& algo, bool with_trace, const std::string& format,
             const LimitFlags& limit_flags, const CacheFlags& cache_flags, bool progress) {
  std::ostream* prog = progress ? &std::cerr : nullptr;
  if (algo == "optimal") {
    lre::ResultCache cache;
    const std::string version(lre::kToolVersion);
    if (!cache_flags.disabled) cache = lre::ResultCache::load(cache_flags.path);
    std::optional<lre::ResultCache::Entry> hit;
    if (!cache_flags.disabled) hit = cache.verified_lookup(n, "optimal", version);

    long long count;
    std::string moves;
    nlohmann::json stats = nlohmann::json::object();
    if (hit) {
      count = hit->count;
      moves = hit->moves;
      stats = hit->stats;
      std::cerr << "cache: hit for n=" << n << '\n';
    } else {
      lre::SearchLimits limits = limit_flags.to_limits();
      if (!limits.max_depth && n >= 3) limits.max_depth = static_cast<int>(lre::lre1_count(n));
      lre::SearchResult r = lre::optimal_distance(lre::reverse_perm(n), limits, prog);
      count = r.distance;
      moves = lre::moves_to_string(r.witness);
      stats = lre::stats_to_json(r.stats);
      if (!cache_flags.disabled) {
        cache.store(n, "optimal", version,
                    {count, moves, stats, lre::utc_timestamp()});
        cache.save(cache_flags.path);
      }
    }
    if (format == "json") {
      nlohmann::json doc{{"n", n},          {"algo", "optimal"},
                         {"count", count},  {"moves", moves},
                         {"checkpoints", nlohmann::json::array()},
                         {"stats", stats}};
      std::cout << doc.dump(2) << '\n';
    } else {
      print_sequence_text(std::cout, n, "optimal", count, moves,
                          lre::apply_sequence(lre::reverse_perm(n), lre::parse_moves(moves)));
    }
    return kExitOk;
  }

  lre::SortTrace t = lre::sort_rn(n, algo);
  if (format == "json") {
    std::cout << lre::trace_to_json(t).dump(2) << '\n';
    return kExitOk;
  }
  print_sequence_text(std::cout, n, algo, static_cast<long long>(t.moves.size()),
                      lre::moves_to_string(t.moves), lre::apply_sequence(t.input, t.moves));
  if (with_trace)
    for (const auto& c : t.checkpoints)
      std::cout << "checkpoint " << c.label << " @" << c.pos << ": "
                << lre::perm_to_string(c.expected) << '\n';
  return kExitOk;
}

int run_search(const std::string& perm_csv, const std::string& format,
               const LimitFlags& limit_flags, bool progress) {
  lre::Permutation source = lre::parse_perm(perm_csv);
  lre::SearchResult r = lre::optimal_distance(source, limit_flags.to_limits(),
                                              progress ? &std::cerr : nullptr);
  if (format == "json") {
    std::cout << lre::search_to_json(r).dump(2) << '\n';
  } else {
    std::cout << "source: " << lre::perm_to_string(r.source) << '\n'
              << "distance: " << r.distance << '\n'
              << "moves: " << lre::moves_to_string(r.witness) << '\n';
    std::cerr << "stats: expanded=" << r.stats.states_expanded
              << " peak_frontier=" << r.stats.peak_frontier
              << " elapsed=" << r.stats.elapsed.count() << "s\n";
  }
  return kExitOk;
}

int run_table(int n_min, int n_max, bool include_optimal, bool deep, const std::string& format,
              const LimitFlags& limit_flags, const CacheFlags& cache_flags, bool progress) {
  lre::ResultCache cache;
  if (!cache_flags.disabled) cache = lre::ResultCache::load(cache_flags.path);

  lre::TableOptions opts;
  opts.include_optimal = include_optimal;
  opts.deep = deep;
  opts.limits = limit_flags.to_limits();
  opts.cache = cache_flags.disabled ? nullptr : &cache;
  opts.diag = &std::cerr;
  opts.progress = progress ? &std::cerr : nullptr;

  std::vector<lre::TableRow> rows = lre::build_table(n_min, n_max, opts);
  if (!cache_flags.disabled && cache.dirty()) cache.save(cache_flags.path);

  if (format == "csv")
    std::cout << lre::table_to_csv(rows);
  else if (format == "json")
    std::cout << lre::table_to_json(rows).dump(2) << '\n';
  else
    std::cout << lre::table_to_text(rows);
  return kExitOk;
}

int run_verify(int n, const std::string& algo, const std::string& format,
               const LimitFlags& limit_flags, bool progress) {
  lre::SortTrace t = [&] {
    if (algo != "optimal") return lre::sort_rn(n, algo);
    lre::SearchLimits limits = limit_flags.to_limits();
    if (!limits.max_depth && n >= 3) limits.max_depth = static_cast<int>(lre::lre1_count(n));
    lre::SearchResult r =
        lre::optimal_distance(lre::reverse_perm(n), limits, progress ? &std::cerr : nullptr);
    return lre::SortTrace{r.source, r.witness, {}, "optimal"};
  }();
  lre::VerificationReport rep = lre::verify_trace(t);
  if (format == "json")
    std::cout << lre::report_to_json(rep).dump(2) << '\n';
  else
    std::cout << lre::report_to_text(rep);
  return rep.pass() ? kExitOk : kExitVerificationFailure;
}

int run_apply(const std::string& perm_csv, const std::string& moves_str,
              const std::string& format) {
  lre::Permutation p = lre::parse_perm(perm_csv);
  lre::MoveSequence seq = lre::parse_moves(moves_str);
  lre::Permutation result = lre::apply_sequence(p, seq);
  if (format == "json") {
    nlohmann::json doc{{"source", lre::perm_to_string(p)},
                       {"moves", moves_str},
                       {"result", lre::perm_to_json(result)},
                       {"sorted", result == lre::identity_perm(p.size())}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "result: " << lre::perm_to_string(result) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorting the reverse permutation with rotations and a leftmost exchange"};
  app.set_version_flag("--version", std::string(lre::kToolVersion));
  app.require_subcommand(1);

  // sort
  auto* sort_cmd = app.add_subcommand("sort", "Emit a move sequence that sorts R_n");
  int sort_n = 0;
  std::string sort_algo = "lre1";
  bool sort_trace = false;
  std::string sort_format = "text";
  bool sort_progress = false;
  LimitFlags sort_limits;
  CacheFlags sort_cache;
  sort_cmd->add_option("--n", sort_n, "Permutation size")->required()->check(CLI::PositiveNumber);
  sort_cmd->add_option("--algo", sort_algo, "Algorithm")
      ->check(CLI::IsMember({"lre", "lre1", "optimal"}))
      ->capture_default_str();
  sort_cmd->add_flag("--trace", sort_trace, "Print checkpoint states");
  sort_cmd->add_option("--format", sort_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sort_cmd->add_flag("--progress", sort_progress, "Progress lines on stderr (optimal only)");
  sort_limits.attach(sort_cmd);
  sort_cache.attach(sort_cmd);

  // search
  auto* search_cmd = app.add_subcommand("search", "Optimal distance from a permutation to I_n");
  std::string search_perm;
  std::string search_format = "text";
  bool search_progress = false;
  LimitFlags search_limits;
  search_cmd->add_option("--perm", search_perm, "Permutation, e.g. 2,1,3")->required();
  search_cmd->add_option("--format", search_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  search_cmd->add_flag("--progress", search_progress, "Progress lines on stderr");
  search_limits.attach(search_cmd);

  // table
  auto* table_cmd = app.add_subcommand("table", "Move-count comparison per n");
  int table_min = 3, table_max = 10;
  bool table_optimal = false, table_deep = false, table_progress = false;
  std::string table_format = "text";
  LimitFlags table_limits;
  CacheFlags table_cache;
  table_cmd->add_option("--min", table_min, "Smallest n")->capture_default_str();
  table_cmd->add_option("--max", table_max, "Largest n")->capture_default_str();
  table_cmd->add_flag("--optimal", table_optimal, "Include the exact-search column");
  table_cmd->add_flag("--deep", table_deep, "Allow searches for n >= 11");
  table_cmd->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  table_cmd->add_flag("--progress", table_progress, "Progress lines on stderr");
  table_limits.attach(table_cmd);
  table_cache.attach(table_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Replay a trace and report checkpoints");
  int verify_n = 0;
  std::string verify_algo = "lre1";
  std::string verify_format = "text";
  bool verify_progress = false;
  LimitFlags verify_limits;
  verify_cmd->add_option("--n", verify_n, "Permutation size")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--algo", verify_algo, "Algorithm")
      ->check(CLI::IsMember({"lre", "lre1", "optimal"}))
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify_cmd->add_flag("--progress", verify_progress, "Progress lines on stderr (optimal only)");
  verify_limits.attach(verify_cmd);

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "Replay a move string on a permutation");
  std::string apply_perm, apply_moves;
  std::string apply_format = "text";
  apply_cmd->add_option("--perm", apply_perm, "Start permutation")->required();
  apply_cmd->add_option("--moves", apply_moves, "Move string, e.g. ELLE")->required();
  apply_cmd->add_option("--format", apply_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (sort_cmd->parsed())
      return run_sort(sort_n, sort_algo, sort_trace, sort_format, sort_limits, sort_cache,
                      sort_progress);
    if (search_cmd->parsed())
      return run_search(search_perm, search_format, search_limits, search_progress);
    if (table_cmd->parsed())
      return run_table(table_min, table_max, table_optimal, table_deep, table_format,
                       table_limits, table_cache, table_progress);
    if (verify_cmd->parsed())
      return run_verify(verify_n, verify_algo, verify_format, verify_limits, verify_progress);
    if (apply_cmd->parsed())
      return run_apply(apply_perm, apply_moves, apply_format);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const lre::SearchAborted& e) {
    std::cerr << "error: " << e.what() << " (deepest completed level "
              << e.deepest_completed_level << ")\n";
    return kExitLimitAbort;
  } catch (const lre::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lre::InvalidMoveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lre::UnsupportedSizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lre::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}
