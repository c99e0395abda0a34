#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "melonrep/words.hpp"

namespace melonrep {

/// Prepends the order of first occurrences: a k-uniform representant becomes
/// a (k+1)-uniform representant of the same graph.
Word lift_uniform(const Word& w);

/// Rewrites letter `from` to `to` throughout.
Word rename(const Word& w, const std::vector<std::pair<std::string, std::string>>& mapping);

/// Extends a 3-uniform representant of some graph G by a new path
/// y - interior[0] - ... - interior.back() - z (at least two interior
/// vertices, none already in the word). The result is a 3-uniform
/// representant of G plus that path. Throws PreconditionViolated on bad
/// input and VerificationFailed if a new vertex ends up with the wrong
/// neighbours.
Word attach_path(const Word& w, std::string_view y, std::string_view z, const std::vector<std::string>& interior);

}  // namespace melonrep
