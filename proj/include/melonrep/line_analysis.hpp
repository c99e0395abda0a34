#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "melonrep/graph.hpp"
#include "melonrep/search.hpp"
#include "melonrep/vertex_minor.hpp"
#include "melonrep/words.hpp"

namespace melonrep {

// Line graphs use the edge labels of build_melon: "e{i}p" at 0p, "e{i}" at 0,
// "e{i}_{j}" in between (counted from the 0p side) and "e_0" for the 0-0p edge.

/// False iff the spec has the 0-0p edge and at least three paths of length 2,
/// i.e. the melon contains the triangular book A_3.
bool line_word_representable(const MelonSpec& spec);

/// The vertices of L(M) along the path of M with index `path` (1-based),
/// from the 0p end.
std::vector<std::string> line_chain(const MelonSpec& spec, int path);

/// Two paths: L(M) is a cycle. 2-uniform, except 1-uniform for K_3.
Word line_word_cycle(const MelonSpec& spec);

/// Three paths, one of them the 0-0p edge: the cycle word of the other two
/// with e_0 inserted next to both ends. 2-uniform.
Word line_word_three_paths_adjacent(const MelonSpec& spec);

/// 3-uniform word for K_m box K_2 over e1..em and e1p..emp.
Word km_k2_word(int m);

/// No 0-0p edge. Starts from km_k2_word; length-3 paths get their middle
/// vertex by factor replacement, longer ones are attached. 3-uniform.
Word line_word_nonadjacent(const MelonSpec& spec);

/// Three permutations realizing the named graph H_m (two cliques a1..am and
/// b1..bm, edges a1b1 and a2b2, x joined to all), m >= 2.
PermSequence h_perms(int m);

/// 0-0p edge, at least two other paths, at most two of length 2. Built from
/// h_perms with subdivisions and attachments. 3-uniform.
Word line_word_adjacent(const MelonSpec& spec);

enum class LineClass { LP_n, LC_2n, LA_2, LK3, NotComparability };
std::string_view to_string(LineClass c);

struct InducedWitness {
  std::string name;  // "Pr3", "S1", "S2", "C5", ...
  Embedding embedding;
};

struct LineComparability {
  LineClass cls;
  std::optional<int> prn;
  /// Only for NotComparability, and only when L(M) is small enough to search.
  std::optional<InducedWitness> witness;
};

LineComparability line_comparability(const MelonSpec& spec);

struct LineVerdict {
  bool word_representable;
  std::optional<std::string> refuter;
  std::optional<int> r;
  std::optional<Word> certificate;
  std::string construction;
  LineComparability comparability;
};

/// Throws NotWordRepresentable when L(M) contains the refuting neighbourhood.
LineVerdict line_rep_number(const MelonSpec& spec);

/// Full verdict that never throws for non-representable specs.
LineVerdict analyse_line(const MelonSpec& spec);

/// For specs with at least three paths of length >= 2: deletions and local
/// complementations taking L(M) to K_3 box K_2 (vertices e{i}, e{i}p of the
/// first three such paths).
std::vector<ReductionStep> line_prism_steps(const MelonSpec& spec);

}  // namespace melonrep
