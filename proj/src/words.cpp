#include "melonrep/words.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "melonrep/error.hpp"

namespace melonrep {

namespace {

// Occurrence positions of each vertex of `vs`, validating letters both ways.
std::vector<std::vector<int>> positions(const Word& w, std::span<const std::string> vs) {
  std::unordered_map<std::string_view, int> at;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) at.emplace(vs[i], i);
  std::vector<std::vector<int>> pos(vs.size());
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    auto it = at.find(w[p]);
    if (it == at.end()) throw Error(ErrorCode::UnknownLetter, "letter '" + w[p] + "' is not a vertex");
    pos[it->second].push_back(p);
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (pos[i].empty()) throw Error(ErrorCode::MissingLetter, "vertex '" + vs[i] + "' does not occur in the word");
  return pos;
}

bool interleaved(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() > b.size() + 1 || b.size() > a.size() + 1) return false;
  // Merge and require the source to flip at every step.
  std::size_t i = 0, j = 0;
  int last = -1;
  while (i < a.size() || j < b.size()) {
    int from;
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      from = 0;
      ++i;
    } else {
      from = 1;
      ++j;
    }
    if (from == last) return false;
    last = from;
  }
  return true;
}

}  // namespace

Word PermSequence::flatten() const {
  Word out;
  for (const auto& p : perms) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void PermSequence::validate() const {
  std::vector<std::string> want = vertex_set;
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    std::vector<std::string> got = perms[i];
    std::sort(got.begin(), got.end());
    if (got != want)
      throw Error(ErrorCode::PreconditionViolated, "perm " + std::to_string(i + 1) + " is not a permutation of the vertex set");
  }
}

Graph alternation_graph(const Word& w, std::span<const std::string> vertex_set) {
  const auto pos = positions(w, vertex_set);
  Graph g;
  for (const auto& v : vertex_set) g.add_vertex(v);
  const int n = static_cast<int>(vertex_set.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (interleaved(pos[a], pos[b])) g.add_edge(a, b);
  return g;
}

bool alternates(const Word& w, std::string_view a, std::string_view b) {
  std::vector<int> pa, pb;
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    if (w[p] == a) pa.push_back(p);
    else if (w[p] == b) pb.push_back(p);
  }
  return interleaved(pa, pb);
}

bool represents(const Word& w, const Graph& g) { return !first_mismatch(w, g).has_value(); }

std::optional<std::pair<std::string, std::string>> first_mismatch(const Word& w, const Graph& g) {
  const auto pos = positions(w, g.labels());
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (interleaved(pos[a], pos[b]) != g.adjacent(a, b)) return std::make_pair(g.label(a), g.label(b));
  return std::nullopt;
}

std::optional<int> is_k_uniform(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "uniformity of the empty word is undefined");
  std::unordered_map<std::string_view, int> count;
  for (const auto& x : w) ++count[x];
  const int k = count.begin()->second;
  for (const auto& [_, c] : count)
    if (c != k) return std::nullopt;
  return k;
}

Word restrict(const Word& w, std::span<const std::string> letters) {
  const std::unordered_set<std::string_view> keep(letters.begin(), letters.end());
  Word out;
  for (const auto& x : w)
    if (keep.count(x)) out.push_back(x);
  return out;
}

Word reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  Word out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  if (out.size() == 1 && out[0] == "eps") out.clear();
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ' ';
    out += x;
  }
  return out;
}

}  // namespace melonrep
