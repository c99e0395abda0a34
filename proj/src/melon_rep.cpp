#include "melonrep/melon_rep.hpp"

#include "melonrep/comparability.hpp"
#include "melonrep/error.hpp"
#include "melonrep/extend.hpp"
#include "melonrep/oracle.hpp"

namespace melonrep {

namespace lb = melon_labels;

namespace {

const std::string kZ(lb::kZero);
const std::string kZp(lb::kZeroPrime);

struct Profile {
  std::vector<int> long_paths;  // 1-based, spec order
  std::vector<int> twos;
  bool edge = false;
};

Profile profile(const MelonSpec& spec) {
  Profile p;
  for (int i = 0; i < spec.paths(); ++i) {
    const int len = spec.length(i);
    if (len >= 3) p.long_paths.push_back(i + 1);
    else if (len == 2) p.twos.push_back(i + 1);
    else p.edge = true;
  }
  return p;
}

// a_j counted from the 0 end: a_1 is adjacent to 0, a_k to 0p.
std::string a(const MelonSpec& spec, int path, int j) { return lb::intermediate(path, spec.length(path - 1) - j); }

// a_2 a_1 a_3 a_2 ... a_k a_{k-1}
Word pairs_up(const MelonSpec& spec, int path) {
  const int k = spec.length(path - 1) - 1;
  Word out;
  for (int i = 2; i <= k; ++i) {
    out.push_back(a(spec, path, i));
    out.push_back(a(spec, path, i - 1));
  }
  return out;
}

// b_{k-1} b_k ... b_1 b_2
Word pairs_down(const MelonSpec& spec, int path) {
  const int k = spec.length(path - 1) - 1;
  Word out;
  for (int j = k; j >= 2; --j) {
    out.push_back(a(spec, path, j - 1));
    out.push_back(a(spec, path, j));
  }
  return out;
}

Word xs(const std::vector<int>& twos, bool backwards) {
  Word out;
  for (int i : twos) out.push_back(lb::intermediate(i, 1));
  return backwards ? reverse(out) : out;
}

void require(bool ok, const MelonSpec& spec, std::string_view what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, "spec " + spec.to_string() + " " + std::string(what));
}

Word checked(Word w, const MelonSpec& spec, std::string_view construction) {
  if (auto bad = first_mismatch(w, build_melon(spec)))
    throw Error(ErrorCode::VerificationFailed, std::string(construction) + " word for " + spec.to_string() +
                                                   " fails on pair " + bad->first + "," + bad->second);
  return w;
}

std::vector<std::string> cycle_of(const MelonSpec& spec, int p, int q) {
  // 0, path p from the 0 side, 0p, path q from the 0p side.
  std::vector<std::string> out{kZ};
  for (int j = 1; j < spec.length(p - 1); ++j) out.push_back(a(spec, p, j));
  out.push_back(kZp);
  for (int j = 1; j < spec.length(q - 1); ++j) out.push_back(lb::intermediate(q, j));
  return out;
}

}  // namespace

std::string_view to_string(RepReason reason) {
  switch (reason) {
    case RepReason::CompleteK2K3: return "CompleteK2K3";
    case RepReason::CircleConstruction: return "CircleConstruction";
    case RepReason::InducedM3: return "InducedM3";
    case RepReason::InducedM4: return "InducedM4";
  }
  return "?";
}

Word cycle_word(std::span<const std::string> c) {
  const std::size_t n = c.size();
  if (n < 3) throw Error(ErrorCode::PreconditionViolated, "cycle needs at least 3 vertices");
  Word out{c[0], c[n - 1]};
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back(c[i]);
    out.push_back(c[i - 1]);
  }
  return out;
}

Word path_word(std::span<const std::string> path) {
  if (path.size() < 2) throw Error(ErrorCode::PreconditionViolated, "path needs at least 2 vertices");
  std::vector<std::string> closed(path.begin(), path.end());
  closed.push_back("\x01");
  return restrict(cycle_word(closed), path);
}

Word rep_word_all_short(const MelonSpec& spec) {
  const Profile p = profile(spec);
  if (!p.long_paths.empty())
    throw Error(ErrorCode::SpecInvalid, "spec " + spec.to_string() + " has a path longer than two");
  if (p.edge) {
    if (p.twos.empty()) return {kZ, kZp};
    return concat({xs(p.twos, false), {kZ, kZp}, xs(p.twos, true), {kZ, kZp}});
  }
  return concat({xs(p.twos, false), {kZ, kZp}, xs(p.twos, true), {kZp, kZ}});
}

Word rep2_one_long(const MelonSpec& spec) {
  const Profile p = profile(spec);
  require(p.long_paths.size() == 1 && !p.edge && spec.paths() >= 3, spec,
          "needs one long path, no edge and at least three paths");
  const int e = p.long_paths[0];
  const int k = spec.length(e - 1) - 1;
  return checked(concat({{kZ}, xs(p.twos, false), {a(spec, e, 1), kZ}, pairs_up(spec, e), {kZp, a(spec, e, k)},
                         xs(p.twos, true), {kZp}}),
                 spec, "one-long");
}

Word rep2_two_long(const MelonSpec& spec) {
  const Profile p = profile(spec);
  require(p.long_paths.size() == 2 && !p.edge, spec, "needs exactly two long paths and no edge");
  const int e1 = p.long_paths[0], e2 = p.long_paths[1];
  const int k1 = spec.length(e1 - 1) - 1, k2 = spec.length(e2 - 1) - 1;
  return checked(concat({{kZ, a(spec, e2, 1)}, xs(p.twos, false), {a(spec, e1, 1), kZ}, pairs_up(spec, e1),
                         {kZp, a(spec, e1, k1)}, xs(p.twos, true), {a(spec, e2, k2), kZp}, pairs_down(spec, e2)}),
                 spec, "two-long");
}

Word rep2_one_long_with_edge(const MelonSpec& spec) {
  const Profile p = profile(spec);
  require(p.long_paths.size() == 1 && p.edge, spec, "needs one long path and the edge");
  const int e = p.long_paths[0];
  const int k = spec.length(e - 1) - 1;
  return checked(concat({xs(p.twos, false), {kZ, kZp}, xs(p.twos, true), {a(spec, e, 1), kZ}, pairs_up(spec, e),
                         {kZp, a(spec, e, k)}}),
                 spec, "one-long-edge");
}

Word rep2_two_long_with_edge(const MelonSpec& spec) {
  const Profile p = profile(spec);
  require(p.long_paths.size() == 2 && p.edge, spec, "needs exactly two long paths and the edge");
  const int e1 = p.long_paths[0], e2 = p.long_paths[1];
  const int k1 = spec.length(e1 - 1) - 1, k2 = spec.length(e2 - 1) - 1;
  return checked(concat({xs(p.twos, false), {a(spec, e2, 1), kZ}, reverse(pairs_down(spec, e2)),
                         {kZp, a(spec, e2, k2)}, xs(p.twos, true), {a(spec, e1, 1), kZ}, pairs_up(spec, e1),
                         {kZp, a(spec, e1, k1)}}),
                 spec, "two-long-edge");
}

namespace {

// r <= 2 certificate and the name of the construction used.
std::pair<Word, std::string> circle_word(const MelonSpec& spec) {
  const Profile p = profile(spec);
  if (p.long_paths.empty()) {
    return {checked(rep_word_all_short(spec), spec, "all-short"), p.edge ? "all-short" : "bipartite"};
  }
  if (spec.paths() == 1) {
    std::vector<std::string> path{kZp};
    for (int j = 1; j < spec.length(0); ++j) path.push_back(lb::intermediate(1, j));
    path.push_back(kZ);
    return {checked(path_word(path), spec, "path"), "path"};
  }
  if (p.long_paths.size() == 1) {
    if (p.edge) return {rep2_one_long_with_edge(spec), "one-long-edge"};
    if (spec.paths() == 2)
      return {checked(cycle_word(cycle_of(spec, p.long_paths[0], p.twos[0])), spec, "cycle"), "cycle"};
    return {rep2_one_long(spec), "one-long"};
  }
  if (p.edge) return {rep2_two_long_with_edge(spec), "two-long-edge"};
  return {rep2_two_long(spec), "two-long"};
}

}  // namespace

Word rep3_word(const MelonSpec& spec) {
  if (spec == MelonSpec({1})) return {kZ, kZp};
  const Graph g = build_melon(spec);
  if (is_comparability_melon(spec)) return checked(melon_realizer(spec).flatten(), spec, "realizer");

  const Profile p = profile(spec);
  if (p.long_paths.size() <= 2) return checked(lift_uniform(circle_word(spec).first), spec, "lifted");

  // Keep the first two long paths, lift, then add the others back.
  std::vector<int> kept_len, kept_index;
  for (int i = 1; i <= spec.paths(); ++i)
    if (spec.length(i - 1) < 3 || i == p.long_paths[0] || i == p.long_paths[1]) {
      kept_len.push_back(spec.length(i - 1));
      kept_index.push_back(i);
    }
  const MelonSpec base(kept_len);
  std::vector<std::pair<std::string, std::string>> relabel;
  for (int s = 1; s <= base.paths(); ++s)
    for (int j = 1; j < base.length(s - 1); ++j)
      relabel.emplace_back(lb::intermediate(s, j), lb::intermediate(kept_index[s - 1], j));
  Word w = lift_uniform(rename(circle_word(base).first, relabel));
  for (std::size_t t = 2; t < p.long_paths.size(); ++t) {
    const int i = p.long_paths[t];
    std::vector<std::string> interior;
    for (int j = 1; j < spec.length(i - 1); ++j) interior.push_back(lb::intermediate(i, j));
    w = attach_path(w, kZp, kZ, interior);
  }
  SearchBudget budget;
  budget.max_vertices = 1 << 12;
  auto found = seeded_uniform_search(g, 3, w, budget);
  if (!found) throw Error(ErrorCode::VerificationFailed, "seeded search refuted a 3-uniform word for " + spec.to_string());
  return *found;
}

RepVerdict representation_number(const MelonSpec& spec) {
  const Graph g = build_melon(spec);
  if (spec == MelonSpec({1}) || spec == MelonSpec({1, 2}) || spec == MelonSpec({2, 1}))
    return RepVerdict{1, checked(g.labels(), spec, "complete"), RepReason::CompleteK2K3, "permutation"};
  const Profile p = profile(spec);
  if (p.long_paths.size() >= 3) {
    Word w = checked(rep3_word(spec), spec, "rep3");
    if (is_k_uniform(w) != 3) throw Error(ErrorCode::VerificationFailed, "rep3 word is not 3-uniform");
    return RepVerdict{3, std::move(w), p.edge ? RepReason::InducedM4 : RepReason::InducedM3,
                      is_comparability_melon(spec) ? "realizer" : "attached-paths"};
  }
  auto [w, name] = circle_word(spec);
  if (is_k_uniform(w) != 2) throw Error(ErrorCode::VerificationFailed, name + " word is not 2-uniform");
  return RepVerdict{2, std::move(w), RepReason::CircleConstruction, std::move(name)};
}

RepVerdict book_rep_number(int pages) {
  if (pages < 1) throw Error(ErrorCode::SpecInvalid, "a book needs at least one page");
  std::vector<int> len{1};
  len.insert(len.end(), pages, 3);
  return representation_number(MelonSpec(len));
}

}  // namespace melonrep
