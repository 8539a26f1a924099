#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lre/permutation.hpp"

namespace lre {

/// A labelled intermediate state: applying the first `pos` moves of the
/// owning trace to its input must yield `expected`.
struct Checkpoint {
  std::string label;
  std::size_t pos;
  Permutation expected;
};

/// A move sequence together with the input it sorts and the intermediate
/// states the construction promises. The checkpoints are recorded while the
/// sequence is built, from the closed-form state descriptions, so a replay
/// genuinely cross-checks the construction.
struct SortTrace {
  Permutation input;
  MoveSequence moves;
  std::vector<Checkpoint> checkpoints;
  std::string algorithm;
};

}  // namespace lre
