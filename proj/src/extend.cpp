#include "melonrep/extend.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "melonrep/error.hpp"

namespace melonrep {

namespace {

std::array<int, 3> occurrences(const Word& w, std::string_view x) {
  std::array<int, 3> out{};
  int n = 0;
  for (int p = 0; p < static_cast<int>(w.size()); ++p)
    if (w[p] == x) {
      if (n == 3) throw Error(ErrorCode::PreconditionViolated, "letter '" + std::string(x) + "' occurs more than 3 times");
      out[n++] = p;
    }
  if (n != 3) throw Error(ErrorCode::PreconditionViolated, "letter '" + std::string(x) + "' does not occur 3 times");
  return out;
}

// Strictly inside the cyclic arc that runs forward from lo to hi.
bool in_arc(int x, int lo, int hi) { return lo < hi ? (lo < x && x < hi) : (x > lo || x < hi); }

// Word with letters spliced in: before[p] goes in front of w[p], after[p]
// right behind it.
struct Splice {
  explicit Splice(std::size_t n) : before(n), after(n) {}
  std::vector<std::vector<std::string>> before;
  std::vector<std::vector<std::string>> after;

  Word apply(const Word& w) const {
    Word out;
    for (std::size_t p = 0; p < w.size(); ++p) {
      out.insert(out.end(), before[p].begin(), before[p].end());
      out.push_back(w[p]);
      out.insert(out.end(), after[p].begin(), after[p].end());
    }
    return out;
  }
};

// z becomes a pendant of p: z p^i z, and z's third copy right behind p^(i+1).
Word add_pendant(const Word& w, const std::string& z, std::string_view p) {
  const auto at = occurrences(w, p);
  Splice s(w.size());
  s.before[at[0]].push_back(z);
  s.after[at[0]].push_back(z);
  s.after[at[1]].push_back(z);
  return s.apply(w);
}

std::vector<std::string> neighbours_in(const Word& w, std::string_view x) {
  std::vector<std::string> seen;
  std::unordered_set<std::string> done{std::string(x)};
  for (const auto& c : w)
    if (done.insert(c).second) {
      if (alternates(w, x, c)) seen.push_back(c);
    }
  std::sort(seen.begin(), seen.end());
  return seen;
}

}  // namespace

Word lift_uniform(const Word& w) {
  Word out;
  std::unordered_set<std::string_view> seen;
  for (const auto& x : w)
    if (seen.insert(x).second) out.push_back(x);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word rename(const Word& w, const std::vector<std::pair<std::string, std::string>>& mapping) {
  std::unordered_map<std::string, std::string> m(mapping.begin(), mapping.end());
  Word out;
  for (const auto& x : w) {
    auto it = m.find(x);
    out.push_back(it == m.end() ? x : it->second);
  }
  return out;
}

Word attach_path(const Word& w, std::string_view y, std::string_view z, const std::vector<std::string>& interior) {
  if (interior.size() < 2) throw Error(ErrorCode::PreconditionViolated, "path needs at least two interior vertices");
  if (y == z) throw Error(ErrorCode::PreconditionViolated, "path endpoints must differ");
  for (const auto& v : interior)
    if (std::find(w.begin(), w.end(), v) != w.end())
      throw Error(ErrorCode::PreconditionViolated, "vertex '" + v + "' already occurs in the word");

  const std::size_t r = interior.size();
  Word cur = w;
  std::string prev(y);
  for (std::size_t t = 0; t + 2 < r; ++t) {
    cur = add_pendant(cur, interior[t], prev);
    prev = interior[t];
  }

  // The last two interior vertices: a is a pendant of b placed so that its
  // third copy sits right in front of some z; then c = interior.back() goes
  // around that "a z" factor and once more inside a's first pair.
  const std::string& a = interior[r - 2];
  const std::string& c = interior[r - 1];
  const auto bs = occurrences(cur, prev);
  const auto zs = occurrences(cur, z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (!in_arc(zs[j], bs[(i + 1) % 3], bs[(i + 2) % 3])) continue;
      if (!in_arc(bs[i], zs[(j + 1) % 3], zs[(j + 2) % 3])) continue;
      Splice s(cur.size());
      s.before[bs[i]].push_back(a);
      s.after[bs[i]].push_back(c);
      s.after[bs[i]].push_back(a);
      s.before[zs[j]].push_back(c);
      s.before[zs[j]].push_back(a);
      s.after[zs[j]].push_back(c);
      Word out = s.apply(cur);

      // Each new vertex must see exactly its path neighbours.
      bool ok = true;
      for (std::size_t t = 0; t < r && ok; ++t) {
        std::vector<std::string> want{t == 0 ? std::string(y) : interior[t - 1], t + 1 == r ? std::string(z) : interior[t + 1]};
        std::sort(want.begin(), want.end());
        ok = neighbours_in(out, interior[t]) == want;
      }
      if (ok) return out;
    }
  throw Error(ErrorCode::VerificationFailed, "path attachment between '" + std::string(y) + "' and '" +
                                                 std::string(z) + "' failed");
}

}  // namespace melonrep
