#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lre/permutation.hpp"
#include "lre/ranking.hpp"
#include "oracles.hpp"

using lre::Move;
using lre::Permutation;

namespace {
Permutation P(std::initializer_list<int> v) {
  std::vector<std::uint8_t> e;
  for (int x : v) e.push_back(static_cast<std::uint8_t>(x));
  return Permutation(std::move(e));
}
}  // namespace

TEST_CASE("move application matches the generator definitions") {
  CHECK(lre::apply_move(P({4, 3, 2, 1}), Move::E) == P({3, 4, 2, 1}));
  CHECK(lre::apply_move(P({1, 2, 3}), Move::L) == P({2, 3, 1}));
  CHECK(lre::apply_move(P({1, 2, 3}), Move::R) == P({3, 1, 2}));
  CHECK(lre::apply_move(P({5, 4, 3, 2, 1}), Move::E) == P({4, 5, 3, 2, 1}));
}

TEST_CASE("half-and-park prefix on the reverse of 8") {
  // E, (LE)^2, (RE)^2, L applied to (8,...,1).
  Permutation p = lre::reverse_perm(8);
  const lre::MoveSequence prefix = lre::parse_moves("ELELEREREL");
  CHECK(lre::apply_sequence(p, prefix) == P({7, 6, 8, 4, 3, 2, 1, 5}));
}

TEST_CASE("rotations invert each other on any permutation") {
  std::mt19937 rng(7);
  for (int n : {1, 2, 3, 5, 9, 12}) {
    for (int trial = 0; trial < 50; ++trial) {
      Permutation p = oracle::random_perm(n, rng);
      CHECK(lre::apply_move(lre::apply_move(p, Move::L), Move::R) == p);
      CHECK(lre::apply_move(lre::apply_move(p, Move::R), Move::L) == p);
    }
  }
}

TEST_CASE("sequence application folds left to right") {
  CHECK(lre::apply_sequence(P({3, 2, 1}), {Move::L, Move::E}) == P({1, 2, 3}));
  CHECK(lre::apply_sequence(lre::reverse_perm(6), {}) == lre::reverse_perm(6));
  CHECK(lre::apply_sequence(P({5, 4, 3, 2, 1}), {Move::E}) == P({4, 5, 3, 2, 1}));
}

TEST_CASE("sequence then its inverse restores the input") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> move_dist(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    Permutation p = oracle::random_perm(n, rng);
    lre::MoveSequence seq;
    for (int i = 0; i < 20; ++i) seq.push_back(static_cast<Move>(move_dist(rng)));
    Permutation q = lre::apply_sequence(p, seq);
    CHECK(lre::apply_sequence(q, lre::inverse_sequence(seq)) == p);
  }
}

TEST_CASE("canonical constructions") {
  CHECK(lre::reverse_perm(1) == P({1}));
  CHECK(lre::reverse_perm(2) == P({2, 1}));
  CHECK(lre::reverse_perm(4) == P({4, 3, 2, 1}));
  CHECK(lre::identity_perm(1) == P({1}));
  CHECK(lre::identity_perm(3) == P({1, 2, 3}));

  CHECK(lre::k_perm(1, 5) == P({5, 4, 3, 2, 1}));
  CHECK(lre::k_perm(5, 5) == P({1, 2, 3, 4, 5}));
  CHECK(lre::k_perm(2, 5) == P({4, 5, 3, 2, 1}));
  CHECK(lre::k_prime_perm(4, 8) == P({4, 3, 2, 1, 5, 6, 7, 8}));
  CHECK(lre::k_prime_perm(5, 10) == P({5, 4, 3, 2, 1, 6, 7, 8, 9, 10}));

  for (int n = 1; n <= 12; ++n) {
    CHECK(lre::k_perm(1, n) == lre::reverse_perm(n));
    CHECK(lre::k_perm(n, n) == lre::identity_perm(n));
    CHECK(lre::k_prime_perm(n, n) == lre::identity_perm(n));
  }
}

TEST_CASE("group identities hold exhaustively for small n") {
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_perm(n, [&](const Permutation& p) {
      CHECK(lre::apply_move(lre::apply_move(p, Move::L), Move::R) == p);
      CHECK(lre::apply_move(lre::apply_move(p, Move::R), Move::L) == p);
      if (n >= 2) CHECK(lre::apply_move(lre::apply_move(p, Move::E), Move::E) == p);
      Permutation q = p;
      for (int i = 0; i < n; ++i) q = lre::apply_move(q, Move::L);
      CHECK(q == p);
    });
  }
}

TEST_CASE("moves preserve bijectivity on random large inputs") {
  std::mt19937 rng(23);
  for (int n = 8; n <= 12; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      Permutation p = oracle::random_perm(n, rng);
      for (Move m : {Move::E, Move::R, Move::L}) {
        Permutation q = lre::apply_move(p, m);
        // Rebuilding through the validating constructor checks bijectivity.
        std::vector<std::uint8_t> e(q.elements().begin(), q.elements().end());
        CHECK_NOTHROW(Permutation(std::move(e)));
      }
    }
  }
}

TEST_CASE("degenerate sizes") {
  CHECK_THROWS_AS(lre::apply_move(P({1}), Move::E), lre::InvalidMoveError);
  CHECK(lre::apply_move(P({1}), Move::L) == P({1}));
  CHECK(lre::apply_move(P({1}), Move::R) == P({1}));
  // At n = 2 every generator acts as the swap.
  for (Move m : {Move::E, Move::R, Move::L}) CHECK(lre::apply_move(P({2, 1}), m) == P({1, 2}));
}

TEST_CASE("constructor rejects non-permutations") {
  CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{}), lre::DomainError);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{1, 1}), lre::DomainError);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{2, 3}), lre::DomainError);
  CHECK_THROWS_AS(lre::k_perm(0, 5), lre::DomainError);
  CHECK_THROWS_AS(lre::k_perm(6, 5), lre::DomainError);
  CHECK_THROWS_AS(lre::k_prime_perm(0, 4), lre::DomainError);
}

TEST_CASE("lehmer rank endpoints and round trip") {
  CHECK(lre::rank_of(lre::identity_perm(4)) == 0);
  CHECK(lre::unrank(0, 4) == P({1, 2, 3, 4}));
  CHECK(lre::rank_of(lre::reverse_perm(4)) == 23);
  for (int n = 1; n <= 7; ++n) CHECK(lre::rank_of(lre::reverse_perm(n)) == lre::factorial(n) - 1);

  std::mt19937 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    Permutation p = oracle::random_perm(8, rng);
    CHECK(lre::unrank(lre::rank_of(p), 8) == p);
  }
}

TEST_CASE("lehmer rank is a bijection for small n") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<bool> seen(lre::factorial(n), false);
    oracle::for_each_perm(n, [&](const Permutation& p) {
      const std::uint64_t r = lre::rank_of(p);
      REQUIRE(r < lre::factorial(n));
      CHECK_FALSE(seen[r]);
      seen[r] = true;
      CHECK(lre::unrank(r, n) == p);
    });
  }
}

TEST_CASE("rank domain errors") {
  CHECK_THROWS_AS(lre::unrank(lre::factorial(5), 5), lre::DomainError);
  CHECK_THROWS_AS(lre::unrank(0, 21), lre::DomainError);
}

TEST_CASE("textual round trips") {
  CHECK(lre::perm_to_string(P({4, 3, 2, 1})) == "4,3,2,1");
  CHECK(lre::parse_perm("4,3,2,1") == P({4, 3, 2, 1}));
  CHECK(lre::parse_perm("(4, 3, 2, 1)") == P({4, 3, 2, 1}));
  CHECK(lre::parse_perm(" 2,1 ") == P({2, 1}));

  CHECK(lre::moves_to_string({Move::E, Move::L, Move::R}) == "ELR");
  CHECK(lre::parse_moves("ELELERRE").size() == 8);
  CHECK(lre::parse_moves("") == lre::MoveSequence{});

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = oracle::random_perm(1 + trial % 12, rng);
    CHECK(lre::parse_perm(lre::perm_to_string(p)) == p);
  }
}

TEST_CASE("textual parsing rejects malformed input") {
  CHECK_THROWS_AS(lre::parse_perm("4,3,3,1"), lre::ParseError);
  CHECK_THROWS_AS(lre::parse_perm("a,b"), lre::ParseError);
  CHECK_THROWS_AS(lre::parse_perm(""), lre::ParseError);
  CHECK_THROWS_AS(lre::parse_perm("0,1"), lre::ParseError);
  CHECK_THROWS_AS(lre::parse_moves("ELX"), lre::ParseError);
  CHECK_THROWS_AS(lre::parse_moves("e"), lre::ParseError);
}
