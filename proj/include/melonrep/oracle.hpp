#pragma once

#include <cstdint>
#include <optional>

#include "melonrep/graph.hpp"
#include "melonrep/words.hpp"

namespace melonrep {

struct SearchBudget {
  int max_vertices = 10;
  int max_k = 3;
  std::int64_t node_limit = 100'000'000;

  /// Throws PreconditionViolated unless every field is positive.
  void validate() const;
};

struct UniformResult {
  int k;
  Word witness;
  std::int64_t nodes;
};

struct PermResult {
  int k;
  PermSequence realizer;
  std::int64_t nodes;
};

/// Smallest k <= max_k with a k-uniform representant, or none when no such
/// k exists. Exhaustive; throws NodeLimitExceeded rather than returning none
/// when the budget runs out, and SizeGuard above max_vertices.
std::optional<UniformResult> min_uniform_rep(const Graph& g, const SearchBudget& budget = {});

/// A k-uniform representant of `g`, or none when none exists. Vertices are
/// added in the order of their first appearance in `seed` and the seed's own
/// placement is explored first, so a seed that already represents `g` is
/// returned after one descent.
std::optional<Word> seeded_uniform_search(const Graph& g, int k, const Word& seed,
                                          const SearchBudget& budget = {});

/// Smallest number of permutations (<= max_k) whose concatenation represents
/// `g`. None when `g` is not a comparability graph or needs more than max_k.
std::optional<PermResult> min_perm_rep(const Graph& g, const SearchBudget& budget = {});

}  // namespace melonrep
