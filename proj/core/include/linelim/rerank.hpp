#pragma once

#include <vector>

#include "linelim/model.hpp"

namespace linelim {

/// A maximal block of equal outcomes in a result vector.
struct Run {
  Outcome outcome = Outcome::kWin;
  int start_rank = 1;  // 1-based
  int length = 0;

  int end_rank() const noexcept { return start_rank + length - 1; }
  friend bool operator==(const Run&, const Run&) = default;
};

using RunDecomposition = std::vector<Run>;

/// Run-length encoding; runs are maximal and tile 1..N.
RunDecomposition decompose_runs(const ResultVector& results);

/// Single re-ranking pass. Every loser run that is directly followed by a
/// winner run trades places with it, all such pairs at once; nothing else
/// moves. Lowers the path change by exactly two, or returns the identity when
/// the results were already sorted (path change 1).
///
/// Returned in order form over pre-round ranks.
Permutation rerank_once(const ResultVector& results);

/// Repeats rerank_once on the re-indexed results up to `passes` times,
/// stopping once the path change reaches 1. The returned order form is the
/// composition of all passes.
Permutation rerank(const ResultVector& results, int passes = 1);

/// All winners in their previous order, then all losers in theirs. This is
/// the unconstrained displacement maximizer and the fixed point of rerank().
Permutation full_sort(const ResultVector& results);

}  // namespace linelim
