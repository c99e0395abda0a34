#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "melonrep/graph.hpp"

namespace melonrep {

/// (pattern vertex, host vertex) pairs in the pattern's vertex order.
using Embedding = std::vector<std::pair<std::string, std::string>>;

inline constexpr int kInducedSearchMaxVertices = 24;
inline constexpr int kIsomorphismMaxVertices = 16;

/// Backtracking search for an induced copy of `pattern` in `host`.
/// Throws SizeGuard when the host exceeds `max_vertices`.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern,
                                          int max_vertices = kInducedSearchMaxVertices);

std::optional<Embedding> is_isomorphic(const Graph& g, const Graph& h,
                                       int max_vertices = kIsomorphismMaxVertices);

struct Bipartition {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

/// Two-colouring by BFS in vertex order; none iff an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

}  // namespace melonrep
