#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "melonrep/graph.hpp"
#include "melonrep/words.hpp"

namespace melonrep {

/// Edge list: "u v" per line, "vertex u" for isolated vertices, '#' starts a
/// comment. Throws ParseError with the offending line number.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// One word per non-blank line; '#' comments allowed.
std::vector<Word> parse_words(std::string_view text);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace melonrep
