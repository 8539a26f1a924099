#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lre/error.hpp"

namespace lre {

/// One generator of the rotate/exchange set.
///
/// L shifts every element one position left (the first element wraps to the
/// back), R shifts one position right, E swaps the two leftmost elements.
/// The numeric values double as 2-bit codes in the search module's
/// predecessor store, and the E, R, L order is the successor emission order
/// of the optimal search.
enum class Move : std::uint8_t { E = 0, R = 1, L = 2 };

/// E undoes E; L and R undo each other.
constexpr Move inverse(Move m) {
  switch (m) {
    case Move::E: return Move::E;
    case Move::R: return Move::L;
    case Move::L: return Move::R;
  }
  return Move::E;  // unreachable
}

constexpr char move_char(Move m) {
  switch (m) {
    case Move::E: return 'E';
    case Move::R: return 'R';
    case Move::L: return 'L';
  }
  return '?';  // unreachable
}

using MoveSequence = std::vector<Move>;

/// A sequence over {1..n} in which every value occurs exactly once.
/// Immutable after construction; moves produce new values.
class Permutation {
 public:
  /// Validates bijectivity: throws DomainError unless `elems` is a
  /// permutation of {1..n} with n >= 1.
  explicit Permutation(std::vector<std::uint8_t> elems) : elems_(std::move(elems)) {
    const std::size_t n = elems_.size();
    if (n == 0) throw DomainError("permutation must have at least one element");
    if (n > 255) throw DomainError("permutation too long");
    std::vector<bool> seen(n + 1, false);
    for (std::uint8_t v : elems_) {
      if (v < 1 || v > n || seen[v])
        throw DomainError("not a permutation of {1..n}");
      seen[v] = true;
    }
  }

  int size() const { return static_cast<int>(elems_.size()); }

  /// Value at 0-based position `pos`; values are 1-based as printed.
  int at(int pos) const { return elems_[static_cast<std::size_t>(pos)]; }

  std::span<const std::uint8_t> elements() const { return elems_; }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  friend Permutation apply_move(const Permutation& p, Move m);
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint8_t> elems) : elems_(std::move(elems)) {}

  std::vector<std::uint8_t> elems_;
};

/// I_n = (1, 2, ..., n).
inline Permutation identity_perm(int n) {
  if (n < 1) throw DomainError("identity_perm: n must be >= 1");
  std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), std::uint8_t{1});
  return Permutation(std::move(e));
}

/// R_n = (n, n-1, ..., 1).
inline Permutation reverse_perm(int n) {
  if (n < 1) throw DomainError("reverse_perm: n must be >= 1");
  std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - i);
  return Permutation(std::move(e));
}

/// K_{r,n}: the largest r values sorted at the front, the rest descending.
/// K_{1,n} = R_n and K_{n,n} = I_n.
inline Permutation k_perm(int r, int n) {
  if (n < 1) throw DomainError("k_perm: n must be >= 1");
  if (r < 1 || r > n) throw DomainError("k_perm: r out of range [1, n]");
  std::vector<std::uint8_t> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int v = n - r + 1; v <= n; ++v) e.push_back(static_cast<std::uint8_t>(v));
  for (int v = n - r; v >= 1; --v) e.push_back(static_cast<std::uint8_t>(v));
  return Permutation(std::move(e));
}

/// K'_{r,n}: the complement of K_{r,n} layout — descending prefix first,
/// then the largest r values sorted. K'_{n,n} = I_n.
inline Permutation k_prime_perm(int r, int n) {
  if (n < 1) throw DomainError("k_prime_perm: n must be >= 1");
  if (r < 1 || r > n) throw DomainError("k_prime_perm: r out of range [1, n]");
  std::vector<std::uint8_t> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int v = n - r; v >= 1; --v) e.push_back(static_cast<std::uint8_t>(v));
  for (int v = n - r + 1; v <= n; ++v) e.push_back(static_cast<std::uint8_t>(v));
  return Permutation(std::move(e));
}

namespace detail {

/// In-place move application on a raw element buffer. Hot path of the
/// search module; the public interface stays value-semantic.
inline void apply_move_inplace(std::uint8_t* a, int n, Move m) {
  switch (m) {
    case Move::E: {
      std::swap(a[0], a[1]);
      break;
    }
    case Move::L: {
      std::uint8_t first = a[0];
      std::copy(a + 1, a + n, a);
      a[n - 1] = first;
      break;
    }
    case Move::R: {
      std::uint8_t last = a[n - 1];
      std::copy_backward(a, a + n - 1, a + n);
      a[0] = last;
      break;
    }
  }
}

}  // namespace detail

/// Applies one move. E requires n >= 2; L and R are no-ops on a singleton.
inline Permutation apply_move(const Permutation& p, Move m) {
  const int n = p.size();
  if (m == Move::E && n < 2)
    throw InvalidMoveError("Exchange needs at least two elements");
  std::vector<std::uint8_t> e(p.elements().begin(), p.elements().end());
  if (n > 1) detail::apply_move_inplace(e.data(), n, m);
  return Permutation(Permutation::Unchecked{}, std::move(e));
}

/// Left-to-right composition; the empty sequence is the identity map.
inline Permutation apply_sequence(const Permutation& p, const MoveSequence& s) {
  Permutation out = p;
  for (Move m : s) out = apply_move(out, m);
  return out;
}

/// Reversed sequence with every move inverted; applying a sequence and then
/// its inverse restores the input.
inline MoveSequence inverse_sequence(const MoveSequence& s) {
  MoveSequence out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

// --- textual formats shared by the CLI and file formats ---

/// "4,3,2,1" — comma-separated 1-based values.
inline std::string perm_to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p.at(i));
  }
  return out;
}

/// Accepts "4,3,2,1" or "(4,3,2,1)", with optional whitespace around values.
inline Permutation parse_perm(std::string_view text) {
  std::string s(text);
  auto drop = [&](char c, bool front) {
    if (s.empty()) return;
    if (front && s.front() == c) s.erase(s.begin());
    if (!front && s.back() == c) s.pop_back();
  };
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  drop('(', true);
  drop(')', false);
  std::vector<std::uint8_t> elems;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad permutation element: '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw ParseError("bad permutation element: '" + tok + "'");
    if (v < 1 || v > 255) throw ParseError("permutation element out of range: '" + tok + "'");
    elems.push_back(static_cast<std::uint8_t>(v));
  }
  if (elems.empty()) throw ParseError("empty permutation");
  try {
    return Permutation(std::move(elems));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

/// "ELELERRE" — one letter per move, no separators.
inline std::string moves_to_string(const MoveSequence& s) {
  std::string out;
  out.reserve(s.size());
  for (Move m : s) out.push_back(move_char(m));
  return out;
}

inline MoveSequence parse_moves(std::string_view text) {
  MoveSequence out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'E': out.push_back(Move::E); break;
      case 'R': out.push_back(Move::R); break;
      case 'L': out.push_back(Move::L); break;
      default: throw ParseError(std::string("bad move letter: '") + c + "'");
    }
  }
  return out;
}

}  // namespace lre
