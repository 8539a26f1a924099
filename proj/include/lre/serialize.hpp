#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lre/search.hpp"
#include "lre/table.hpp"
#include "lre/trace.hpp"
#include "lre/verify.hpp"

namespace lre {

inline nlohmann::json perm_to_json(const Permutation& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(p.at(i));
  return a;
}

inline nlohmann::json stats_to_json(const SearchStats& s) {
  return {{"states_expanded", s.states_expanded},
          {"peak_frontier", s.peak_frontier},
          {"elapsed_seconds", s.elapsed.count()}};
}

/// { "n", "algo", "count", "moves", "checkpoints": [{"label","pos","perm"}],
///   "stats" } — the machine-readable form of a sorting run.
inline nlohmann::json trace_to_json(const SortTrace& t,
                                    nlohmann::json stats = nlohmann::json::object()) {
  nlohmann::json checkpoints = nlohmann::json::array();
  for (const auto& c : t.checkpoints)
    checkpoints.push_back(
        {{"label", c.label}, {"pos", c.pos}, {"perm", perm_to_json(c.expected)}});
  return {{"n", t.input.size()},
          {"algo", t.algorithm},
          {"count", t.moves.size()},
          {"moves", moves_to_string(t.moves)},
          {"checkpoints", std::move(checkpoints)},
          {"stats", std::move(stats)}};
}

/// Same schema as trace_to_json; a search has no checkpoints but carries
/// real stats and its source permutation.
inline nlohmann::json search_to_json(const SearchResult& r) {
  return {{"n", r.n},
          {"algo", "optimal"},
          {"count", r.distance},
          {"moves", moves_to_string(r.witness)},
          {"checkpoints", nlohmann::json::array()},
          {"stats", stats_to_json(r.stats)},
          {"source", perm_to_string(r.source)}};
}

inline nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json checkpoints = nlohmann::json::array();
  for (const auto& c : rep.checkpoints)
    checkpoints.push_back({{"label", c.label},
                           {"pass", c.pass},
                           {"expected", perm_to_json(c.expected)},
                           {"actual", perm_to_json(c.actual)}});
  return {{"trace", rep.trace_id},
          {"pass", rep.pass()},
          {"checkpoints", std::move(checkpoints)},
          {"final_pass", rep.final_pass},
          {"expected_count", rep.expected_count},
          {"actual_count", rep.actual_count}};
}

inline std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << "trace: " << rep.trace_id << '\n';
  for (const auto& c : rep.checkpoints) {
    out << "  checkpoint " << c.label << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass)
      out << " (expected " << perm_to_string(c.expected) << ", got "
          << perm_to_string(c.actual) << ")";
    out << '\n';
  }
  out << "  final state: " << (rep.final_pass ? "pass" : "FAIL");
  if (!rep.final_pass) out << " (got " << perm_to_string(rep.final_actual) << ")";
  out << '\n';
  out << "  move count: " << rep.actual_count << " (expected " << rep.expected_count
      << ", " << (rep.expected_count == rep.actual_count ? "pass" : "FAIL") << ")\n";
  out << "result: " << (rep.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

// --- table renderings; all three carry identical numeric values ---

inline std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,lre,lre1,optimal\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.lre << ',' << r.lre1 << ',';
    if (r.optimal) out << *r.optimal;
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"n", r.n}, {"lre", r.lre}, {"lre1", r.lre1}};
    row["optimal"] = r.optimal ? nlohmann::json(*r.optimal) : nlohmann::json(nullptr);
    arr.push_back(std::move(row));
  }
  return arr;
}

inline std::string table_to_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(8) << "lre" << std::setw(8) << "lre1"
      << std::setw(10) << "optimal" << '\n';
  for (const auto& r : rows) {
    out << std::setw(4) << r.n << std::setw(8) << r.lre << std::setw(8) << r.lre1;
    if (r.optimal)
      out << std::setw(10) << *r.optimal;
    else
      out << std::setw(10) << "-";
    out << '\n';
  }
  return out.str();
}

}  // namespace lre
