#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "melonrep/graph.hpp"

namespace melonrep {

/// A word is a sequence of vertex labels; the empty word is written "eps".
using Word = std::vector<std::string>;

/// k permutations of one vertex set, read as their concatenation.
struct PermSequence {
  std::vector<std::string> vertex_set;
  std::vector<Word> perms;

  [[nodiscard]] int k() const { return static_cast<int>(perms.size()); }
  [[nodiscard]] Word flatten() const;
  /// Throws PreconditionViolated unless every perm is a permutation of vertex_set.
  void validate() const;
};

/// Edge {a,b} iff the restriction of `w` to {a,b} is abab... or baba...
/// Throws UnknownLetter / MissingLetter.
Graph alternation_graph(const Word& w, std::span<const std::string> vertex_set);

bool alternates(const Word& w, std::string_view a, std::string_view b);

bool represents(const Word& w, const Graph& g);

/// First vertex pair (in vertex order) where `w` and `g` disagree.
std::optional<std::pair<std::string, std::string>> first_mismatch(const Word& w, const Graph& g);

/// Throws EmptyWord.
std::optional<int> is_k_uniform(const Word& w);

Word restrict(const Word& w, std::span<const std::string> letters);
Word reverse(const Word& w);
Word concat(std::initializer_list<Word> parts);

/// Whitespace-separated tokens; "eps" alone is the empty word.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

}  // namespace melonrep
