#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "melonrep/graph.hpp"

namespace melonrep {

struct ReductionStep {
  enum class Kind { LocalComplement, Delete };
  Kind kind;
  std::string vertex;
};

enum class CoreKind { M3, B3 };

struct Reduction {
  CoreKind core;
  std::vector<ReductionStep> steps;
  Graph result;
};

/// Shortens every path longer than three by local complementation at its
/// intermediate vertex next to 0p followed by deletion of that vertex.
/// Accepts three paths of length >= 3, or those plus a single 0-0p edge;
/// anything else throws NotInFamily.
Reduction reduce_to_core(const MelonSpec& spec);

Graph replay(const Graph& g, std::span<const ReductionStep> steps);

/// The three-long-path sub-melon (plus the 0-0p edge when present) that any
/// spec with at least three paths of length >= 3 contains as an induced
/// subgraph; none when fewer than three such paths exist.
std::optional<MelonSpec> core_subspec(const MelonSpec& spec);

Graph core_graph(CoreKind core);

}  // namespace melonrep
