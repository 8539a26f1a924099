#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "lre/permutation.hpp"

namespace lre {

/// Largest n whose n! fits the 64-bit rank width.
inline constexpr int kMaxRankableN = 20;

/// 0! .. 20!.
inline constexpr std::array<std::uint64_t, 21> kFactorial = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (int i = 1; i <= 20; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  return f;
}();

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankableN) throw DomainError("factorial: n out of [0, 20]");
  return kFactorial[static_cast<std::size_t>(n)];
}

namespace detail {

/// Lehmer rank of a raw element buffer (values 1..n), lexicographic order:
/// digit i counts the elements smaller than a[i] that sit to its right,
/// weighted by (n-1-i)!. Identity maps to 0 and R_n to n!-1.
inline std::uint64_t rank_into(const std::uint8_t* a, int n) {
  std::uint32_t seen = 0;
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    const int v = a[i] - 1;
    const int smaller_seen = std::popcount(seen & ((std::uint32_t{1} << v) - 1));
    r += static_cast<std::uint64_t>(v - smaller_seen) * kFactorial[static_cast<std::size_t>(n - 1 - i)];
    seen |= std::uint32_t{1} << v;
  }
  return r;
}

/// Inverse of rank_into; writes the permutation into `out`.
inline void unrank_into(std::uint64_t value, int n, std::uint8_t* out) {
  std::array<std::uint8_t, 32> avail;
  for (int v = 0; v < n; ++v) avail[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v + 1);
  int remaining = n;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = kFactorial[static_cast<std::size_t>(n - 1 - i)];
    const int d = static_cast<int>(value / f);
    value %= f;
    out[i] = avail[static_cast<std::size_t>(d)];
    for (int j = d; j < remaining - 1; ++j) avail[static_cast<std::size_t>(j)] = avail[static_cast<std::size_t>(j + 1)];
    --remaining;
  }
}

}  // namespace detail

/// Bijection S_n -> [0, n!). Stable across runs; used as the state key of
/// the search module's visited structures.
inline std::uint64_t rank_of(const Permutation& p) {
  if (p.size() > kMaxRankableN) throw DomainError("rank_of: n exceeds rankable width");
  return detail::rank_into(p.elements().data(), p.size());
}

inline Permutation unrank(std::uint64_t value, int n) {
  if (n < 1 || n > kMaxRankableN) throw DomainError("unrank: n out of [1, 20]");
  if (value >= kFactorial[static_cast<std::size_t>(n)]) throw DomainError("unrank: value >= n!");
  std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
  detail::unrank_into(value, n, e.data());
  return Permutation(std::move(e));
}

}  // namespace lre
