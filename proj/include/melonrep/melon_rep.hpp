#pragma once

#include <span>
#include <string>
#include <string_view>

#include "melonrep/graph.hpp"
#include "melonrep/words.hpp"

namespace melonrep {

enum class RepReason { CompleteK2K3, CircleConstruction, InducedM3, InducedM4 };
std::string_view to_string(RepReason reason);

struct RepVerdict {
  int r;
  Word certificate;
  RepReason reason;
  /// Which construction produced the certificate, e.g. "two-long-edge".
  std::string construction;
};

/// Cycle c_1 ... c_n (n >= 3): c_1 c_n c_2 c_1 c_3 c_2 ... c_n c_{n-1}.
Word cycle_word(std::span<const std::string> cycle);
/// Path c_1 ... c_n (n >= 2), 2-uniform.
Word path_word(std::span<const std::string> path);

/// All lengths <= 2. (1,) gives the 1-uniform "0 0p".
Word rep_word_all_short(const MelonSpec& spec);
/// One path of length >= 3, the rest of length 2, at least three paths.
Word rep2_one_long(const MelonSpec& spec);
/// Two paths of length >= 3, the rest of length 2.
Word rep2_two_long(const MelonSpec& spec);
/// One path of length >= 3, the 0-0p edge, the rest of length 2.
Word rep2_one_long_with_edge(const MelonSpec& spec);
/// Two paths of length >= 3, the 0-0p edge, the rest of length 2.
Word rep2_two_long_with_edge(const MelonSpec& spec);

/// A 3-uniform representant (1-uniform for K_2). Comparability melons use
/// their permutation realizer; the others lift a 2-uniform word of the
/// melon without its surplus long paths and attach those paths back,
/// confirmed by the seeded oracle search.
Word rep3_word(const MelonSpec& spec);

RepVerdict representation_number(const MelonSpec& spec);
RepVerdict book_rep_number(int pages);

}  // namespace melonrep
