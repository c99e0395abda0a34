#pragma once

#include <optional>
#include <string>

#include "melonrep/graph.hpp"

namespace melonrep {

inline constexpr int kOrientationMaxEdges = 40;

/// Forcing-based search: orienting an edge forces its Gamma-class and closes
/// triangles, and the search only branches on edges left free. None means no
/// transitive orientation exists. Throws SizeGuard above `max_edges`.
std::optional<Orientation> find_transitive_orientation(const Graph& g,
                                                       int max_edges = kOrientationMaxEdges);

/// First vertex (in vertex order) whose open neighbourhood is not a
/// comparability graph. Such a vertex rules out word-representability.
std::optional<std::string> neighborhood_comparability_check(const Graph& g,
                                                            int max_edges = kOrientationMaxEdges);

}  // namespace melonrep
