#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "melonrep/graph.hpp"
#include "melonrep/words.hpp"

namespace melonrep {

enum class ComparabilityTag { SameParity, EdgeAndShortEvens };
std::string_view to_string(ComparabilityTag tag);

/// Arithmetic test: same parity everywhere, or a 0-0p edge with every even
/// path of length two.
std::optional<ComparabilityTag> is_comparability_melon(const MelonSpec& spec);

/// "c1", ..., "cn".
std::vector<std::string> default_labels(int n);

/// Two permutations for the path c_1 ... c_2k (k >= 2).
PermSequence path_perms_even(std::span<const std::string> c);
/// Three permutations for the path c_1 ... c_{2k-1} (k >= 2).
PermSequence path_perms_odd(std::span<const std::string> c);
/// Three permutations for the cycle 0p c_1 ... c_2k 0 closed by 0-0p, given
/// as {0p, c_1, ..., c_2k, 0}. The 4-cycle (k = 1) uses a fixed realizer.
PermSequence even_cycle_perms(std::span<const std::string> cycle);

/// All paths odd, no 0-0p edge.
PermSequence melon_perms_odd_parity(const MelonSpec& spec);
/// All paths even.
PermSequence melon_perms_even_parity(const MelonSpec& spec);
/// 0-0p edge present, every even path of length two.
PermSequence melon_perms_adjacent(const MelonSpec& spec);
/// Whichever of the three applies; throws NotComparability.
PermSequence melon_realizer(const MelonSpec& spec);

enum class PrnWitness { Kn, PermutationGraph, InducedEvenCycle, InducedT2 };
std::string_view to_string(PrnWitness w);

struct PrnVerdict {
  int prn;
  PermSequence realizer;
  PrnWitness witness;
  int cycle_length = 0;  // set for InducedEvenCycle
};

/// Throws NotComparability.
PrnVerdict prn(const MelonSpec& spec);

enum class HasseCase { I, II, III, IV };
std::string_view to_string(HasseCase c);

struct HasseDiagram {
  HasseCase hasse_case;
  Orientation orientation;
  std::vector<int> layer;  // per vertex of orientation.base
};

/// Orientation from the two-colouring (0p's class at the bottom), with the
/// length-two paths threaded 0p < x < 0 when the 0-0p edge exists; layers
/// are longest chains from a minimal element. Throws NotComparability.
HasseDiagram hasse_orientation(const MelonSpec& spec);

/// Cover relations only, one rank=same group per layer.
std::string hasse_dot(const HasseDiagram& h, std::string_view name = "hasse");

}  // namespace melonrep
