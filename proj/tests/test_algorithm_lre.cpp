#include <catch2/catch_amalgamated.hpp>

#include "lre/algorithm_lre.hpp"
#include "lre/verify.hpp"

using lre::Move;

TEST_CASE("stage count formula") {
  CHECK(lre::lre_stage_count(1) == 1);
  CHECK(lre::lre_stage_count(4) == 10);
  CHECK_THROWS_AS(lre::lre_stage_count(0), lre::DomainError);
}

TEST_CASE("stage sum equals the closed form") {
  for (int n = 5; n <= 40; ++n) {
    long long sum = 0;
    for (int r = 1; r <= n - 3; ++r) sum += lre::lre_stage_count(r);
    CHECK(sum == lre::lre_A(n));
  }
}

TEST_CASE("closed-form values") {
  CHECK(lre::lre_A(3) == 0);
  CHECK(lre::lre_A(4) == 1);
  CHECK(lre::lre_A(10) == 70);
  CHECK(lre::lre_count(5) == 8);
  CHECK(lre::lre_count(9) == 54);
  CHECK_THROWS_AS(lre::lre_A(2), lre::UnsupportedSizeError);
  CHECK_THROWS_AS(lre::lre_count(2), lre::UnsupportedSizeError);
}

TEST_CASE("known trace lengths") {
  CHECK(lre::sort_lre(3).moves.size() == 3);
  CHECK(lre::sort_lre(6).moves.size() == 15);
  CHECK(lre::sort_lre(11).moves.size() == 95);
}

TEST_CASE("trace sorts the reverse permutation") {
  for (int n = 3; n <= 60; ++n) {
    lre::SortTrace t = lre::sort_lre(n);
    CHECK(lre::apply_sequence(t.input, t.moves) == lre::identity_perm(n));
    CHECK(t.moves.size() == static_cast<std::size_t>(lre::lre_count(n)));
    CHECK(t.moves.size() == static_cast<std::size_t>(3 * n * n - 19 * n + 36) / 2);
  }
}

TEST_CASE("every checkpoint prefix reproduces its staged permutation") {
  for (int n = 3; n <= 20; ++n) {
    lre::SortTrace t = lre::sort_lre(n);
    REQUIRE(t.checkpoints.size() == static_cast<std::size_t>(n - 2));
    lre::VerificationReport rep = lre::verify_trace(t);
    CHECK(rep.pass());
    for (const auto& c : rep.checkpoints) CHECK(c.pass);
  }
}

TEST_CASE("no wasted inverse pair inside a stage block") {
  for (int n = 3; n <= 30; ++n) {
    lre::SortTrace t = lre::sort_lre(n);
    std::size_t block_start = 0;
    for (const auto& c : t.checkpoints) {
      for (std::size_t i = block_start + 1; i < c.pos; ++i) {
        const Move a = t.moves[i - 1], b = t.moves[i];
        const bool rotation_pair = (a == Move::L && b == Move::R) || (a == Move::R && b == Move::L);
        CHECK_FALSE(rotation_pair);
      }
      block_start = c.pos;
    }
  }
}

TEST_CASE("sizes below three are rejected") {
  CHECK_THROWS_AS(lre::sort_lre(2), lre::UnsupportedSizeError);
  CHECK_THROWS_AS(lre::sort_lre(1), lre::UnsupportedSizeError);
}
