#include "linelim/rerank.hpp"

#include <string>

#include "linelim/error.hpp"

namespace linelim {

RunDecomposition decompose_runs(const ResultVector& results) {
  RunDecomposition runs;
  const auto outcomes = results.outcomes();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (runs.empty() || runs.back().outcome != outcomes[i]) {
      runs.push_back({outcomes[i], static_cast<int>(i) + 1, 1});
    } else {
      ++runs.back().length;
    }
  }
  return runs;
}

namespace {

void append_block(Permutation& order, const Run& run) {
  for (int r = run.start_rank; r <= run.end_rank(); ++r) order.push_back(r);
}

}  // namespace

Permutation rerank_once(const ResultVector& results) {
  const auto runs = decompose_runs(results);
  Permutation order;
  order.reserve(static_cast<std::size_t>(results.size()));

  // Runs alternate, so the (loser, winner) pairs never overlap and a single
  // left-to-right sweep finds all of them.
  std::size_t i = 0;
  while (i < runs.size()) {
    if (runs[i].outcome == Outcome::kLoss && i + 1 < runs.size()) {
      append_block(order, runs[i + 1]);
      append_block(order, runs[i]);
      i += 2;
    } else {
      append_block(order, runs[i]);
      ++i;
    }
  }
  return order;
}

Permutation rerank(const ResultVector& results, int passes) {
  if (passes < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pass count must be at least 1, got " + std::to_string(passes));
  }
  Permutation total = identity_permutation(results.size());
  ResultVector current = results;
  for (int p = 0; p < passes && path_change(current) > 1; ++p) {
    const Permutation step = rerank_once(current);
    total = compose_orders(total, step);
    current = current.permuted(step);
  }
  return total;
}

Permutation full_sort(const ResultVector& results) {
  Permutation order;
  order.reserve(static_cast<std::size_t>(results.size()));
  for (int r = 1; r <= results.size(); ++r) {
    if (results.won(r)) order.push_back(r);
  }
  for (int r = 1; r <= results.size(); ++r) {
    if (!results.won(r)) order.push_back(r);
  }
  return order;
}

}  // namespace linelim
