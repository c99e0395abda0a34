#include "melonrep/line_analysis.hpp"

#include <algorithm>

#include "melonrep/error.hpp"
#include "melonrep/extend.hpp"
#include "melonrep/melon_rep.hpp"
#include "melonrep/oracle.hpp"
#include "melonrep/orientation.hpp"

namespace melonrep {

namespace {

namespace lb = melon_labels;

Word checked(Word w, const Graph& g, std::string_view what) {
  if (auto bad = first_mismatch(w, g))
    throw Error(ErrorCode::VerificationFailed,
                std::string(what) + " word disagrees on " + bad->first + ", " + bad->second);
  return w;
}

int edge_path(const MelonSpec& spec) {
  for (int i = 1; i <= spec.paths(); ++i)
    if (spec.length(i - 1) == 1) return i;
  return 0;
}

std::size_t find_factor(const Word& w, std::string_view a, std::string_view b) {
  std::size_t at = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == a && w[i + 1] == b) {
      if (at != w.size())
        throw Error(ErrorCode::PreconditionViolated, "factor " + std::string(a) + " " + std::string(b) + " is not unique");
      at = i;
    }
  if (at == w.size())
    throw Error(ErrorCode::VerificationFailed, "factor " + std::string(a) + " " + std::string(b) + " not found");
  return at;
}

struct FactorEdit {
  std::string a, b;
  Word with;
};

// Replaces the unique occurrence of each factor, all located in the word as given.
void replace_factors(Word& w, const std::vector<FactorEdit>& edits) {
  std::vector<std::pair<std::size_t, const Word*>> at;
  for (const auto& e : edits) at.emplace_back(find_factor(w, e.a, e.b), &e.with);
  std::sort(at.begin(), at.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  for (const auto& [i, with] : at) {
    w.erase(w.begin() + i, w.begin() + i + 2);
    w.insert(w.begin() + i, with->begin(), with->end());
  }
}

void replace_factor(Word& w, std::string_view a, std::string_view b, const Word& with) {
  replace_factors(w, {FactorEdit{std::string(a), std::string(b), with}});
}

// Appends `extra` right after occurrence `nth` (1-based) of `letter`.
void append_after(Word& w, std::string_view letter, int nth, const std::string& extra) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == letter && --nth == 0) {
      w.insert(w.begin() + i + 1, extra);
      return;
    }
  throw Error(ErrorCode::VerificationFailed, "occurrence of " + std::string(letter) + " not found");
}

Word drop(const Word& w, std::string_view letter) {
  Word out;
  for (const auto& s : w)
    if (s != letter) out.push_back(s);
  return out;
}

// A subdivision vertex must alternate with its two path neighbours and nothing else.
void check_subdivision(const Word& w, const std::string& y, const std::string& a, const std::string& b) {
  std::vector<std::string> letters = w;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (const auto& z : letters) {
    if (z == y) continue;
    if (alternates(w, y, z) != (z == a || z == b))
      throw Error(ErrorCode::VerificationFailed, "subdivision vertex " + y + " wrongly relates to " + z);
  }
}

Word attach_and_confirm(Word w, const MelonSpec& spec, const Graph& line,
                        const std::vector<int>& long_paths) {
  for (int i : long_paths) {
    const auto chain = line_chain(spec, i);
    w = attach_path(w, chain.front(), chain.back(), {chain.begin() + 1, chain.end() - 1});
  }
  if (long_paths.empty()) return w;
  SearchBudget budget;
  budget.max_vertices = 1 << 12;
  auto found = seeded_uniform_search(line, 3, w, budget);
  if (!found) throw Error(ErrorCode::VerificationFailed, "seeded search refuted a 3-uniform line word for " + spec.to_string());
  return *found;
}

Word numbered(char c, int from, int to) {
  Word out;
  for (int j = from; j <= to; ++j) out.push_back(c + std::to_string(j));
  return out;
}

std::vector<std::pair<std::string, Graph>> witness_catalogue(int max_order) {
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("Pr3", build_named({NamedKind::Prism3}));
  out.emplace_back("S1", build_named({NamedKind::S1}));
  out.emplace_back("S2", build_named({NamedKind::S2}));
  for (int n = 5; n <= max_order; n += 2) out.emplace_back("C" + std::to_string(n), build_named({NamedKind::Cycle, n}));
  return out;
}

}  // namespace

bool line_word_representable(const MelonSpec& spec) {
  return !(spec.has_edge_path() && spec.count_equal(2) >= 3);
}

std::vector<std::string> line_chain(const MelonSpec& spec, int path) {
  const int len = spec.length(path - 1);
  if (len == 1) return {std::string(lb::kDirectEdge)};
  std::vector<std::string> out{lb::edge_at_zero_prime(path)};
  for (int j = 1; j + 1 < len; ++j) out.push_back(lb::edge_interior(path, j));
  out.push_back(lb::edge_at_zero(path));
  return out;
}

Word line_word_cycle(const MelonSpec& spec) {
  if (spec.paths() != 2) throw Error(ErrorCode::PreconditionViolated, "line_word_cycle needs exactly two paths");
  std::vector<std::string> cycle = line_chain(spec, 1);
  const auto back = line_chain(spec, 2);
  cycle.insert(cycle.end(), back.rbegin(), back.rend());
  const Graph line = line_graph(build_melon(spec));
  if (cycle.size() == 3) return checked(cycle, line, "triangle");
  return checked(cycle_word(cycle), line, "cycle");
}

Word line_word_three_paths_adjacent(const MelonSpec& spec) {
  const int e = edge_path(spec);
  if (spec.paths() != 3 || e == 0)
    throw Error(ErrorCode::PreconditionViolated, "needs three paths, one of them the 0-0p edge");
  std::vector<int> others;
  for (int i = 1; i <= 3; ++i)
    if (i != e) others.push_back(i);
  const auto p = line_chain(spec, others[0]);
  const auto q = line_chain(spec, others[1]);
  // c_1 = p's edge at 0p, then q from 0p to 0, then p back up from 0.
  std::vector<std::string> c{p.front()};
  c.insert(c.end(), q.begin(), q.end());
  c.insert(c.end(), p.rbegin(), p.rend() - 1);
  const std::size_t n = c.size();
  const std::size_t i = q.size() + 1;  // c_i = q's edge at 0, c_{i+1} = p's edge at 0
  const std::string x(lb::kDirectEdge);
  Word w{c[0], c[n - 1]};
  for (std::size_t j = 1; j < n; ++j) {
    w.push_back(c[j]);
    if (j == 1 || j == i) w.push_back(x);
    w.push_back(c[j - 1]);
  }
  return checked(w, line_graph(build_melon(spec)), "three-path");
}

Word km_k2_word(int m) {
  if (m < 1) throw Error(ErrorCode::SpecInvalid, "K_m box K_2 needs m >= 1");
  Word w;
  for (int i = 1; i <= m; ++i) w.push_back(lb::edge_at_zero(i));
  for (int i = 1; i <= m; ++i) w.insert(w.end(), {lb::edge_at_zero_prime(i), lb::edge_at_zero(i)});
  for (int i = 1; i <= m; ++i) w.push_back(lb::edge_at_zero_prime(i));
  for (int i = 1; i <= m; ++i) w.insert(w.end(), {lb::edge_at_zero(i), lb::edge_at_zero_prime(i)});
  return w;
}

Word line_word_nonadjacent(const MelonSpec& spec) {
  if (spec.has_edge_path() || spec.paths() < 2)
    throw Error(ErrorCode::PreconditionViolated, "needs at least two paths and no 0-0p edge");
  const Graph line = line_graph(build_melon(spec));
  Word w = km_k2_word(spec.paths());
  std::vector<int> long_paths;
  for (int i = 1; i <= spec.paths(); ++i) {
    if (spec.length(i - 1) < 3) continue;
    const auto chain = line_chain(spec, i);
    const std::string &e = chain.back(), &ep = chain.front(), &x = chain[1];
    replace_factors(w, {{ep, e, {x, e, ep, x}}, {e, ep, {e, x, ep}}});
    if (spec.length(i - 1) == 3) continue;
    w = drop(w, x);
    long_paths.push_back(i);
  }
  for (int i = 1; i <= spec.paths(); ++i)
    if (spec.length(i - 1) == 3) {
      const auto chain = line_chain(spec, i);
      check_subdivision(w, chain[1], chain.front(), chain.back());
    }
  return checked(attach_and_confirm(std::move(w), spec, line, long_paths), line, "nonadjacent");
}

PermSequence h_perms(int m) {
  if (m < 2) throw Error(ErrorCode::PreconditionViolated, "H needs m >= 2");
  PermSequence out;
  out.vertex_set = concat({numbered('a', 1, m), numbered('b', 1, m), {"x"}});
  Word q1{"a1", "b2"};
  for (int j = 3; j <= m; ++j) q1.insert(q1.end(), {"a" + std::to_string(j), "b" + std::to_string(j)});
  q1.insert(q1.end(), {"a2", "b1", "x"});
  Word q2 = concat({{"a1"}, numbered('a', 3, m), {"b2", "a2"}, numbered('b', 3, m), {"b1", "x"}});
  Word q3 = concat({{"b2"}, numbered('b', 3, m), {"a1", "b1"}, numbered('a', 3, m), {"a2", "x"}});
  out.perms = {q1, q2, q3};
  out.validate();
  return out;
}

Word line_word_adjacent(const MelonSpec& spec) {
  const int e = edge_path(spec);
  if (e == 0 || spec.paths() < 3)
    throw Error(ErrorCode::PreconditionViolated, "needs the 0-0p edge and at least two other paths");
  if (!line_word_representable(spec))
    throw Error(ErrorCode::PreconditionViolated, "L(M) is not word-representable: A_3 is induced");
  // E_1 .. E_m in non-decreasing length; a_i / b_i are E_i's edges at 0p / 0.
  std::vector<int> order;
  for (int i = 1; i <= spec.paths(); ++i)
    if (i != e) order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int l, int r) { return spec.length(l - 1) < spec.length(r - 1); });
  const int m = static_cast<int>(order.size());
  std::vector<std::pair<std::string, std::string>> relabel{{"x", std::string(lb::kDirectEdge)}};
  for (int i = 1; i <= m; ++i) {
    const auto chain = line_chain(spec, order[i - 1]);
    relabel.emplace_back("a" + std::to_string(i), chain.front());
    relabel.emplace_back("b" + std::to_string(i), chain.back());
  }
  const PermSequence h = h_perms(m);
  Word q1 = rename(h.perms[0], relabel), q2 = rename(h.perms[1], relabel), q3 = rename(h.perms[2], relabel);

  auto chain_of = [&](int i) { return line_chain(spec, order[i - 1]); };
  auto len_of = [&](int i) { return spec.length(order[i - 1] - 1); };
  if (len_of(1) >= 3) {
    const auto c = chain_of(1);
    replace_factor(q3, c.front(), c.back(), {c[1], c.back(), c.front(), c[1]});
    append_after(q1, c.back(), 1, c[1]);
  }
  if (len_of(2) >= 3) {
    const auto c = chain_of(2);
    replace_factor(q2, c.back(), c.front(), {c[1], c.front(), c.back(), c[1]});
    append_after(q3, c.front(), 1, c[1]);
  }
  for (int i = 3; i <= m; ++i) {
    if (len_of(i) != 3) continue;
    const auto c = chain_of(i);
    replace_factor(q1, c.front(), c.back(), {c[1], c.front(), c.back(), c[1]});
    append_after(q2, c.back(), 1, c[1]);
  }
  Word w = concat({q1, q2, q3});
  std::vector<int> long_paths;
  for (int i = 1; i <= m; ++i) {
    if (len_of(i) == 3) {
      const auto c = chain_of(i);
      check_subdivision(w, c[1], c.front(), c.back());
    } else if (len_of(i) >= 4) {
      if (i <= 2) w = drop(w, chain_of(i)[1]);
      long_paths.push_back(order[i - 1]);
    }
  }
  const Graph line = line_graph(build_melon(spec));
  return checked(attach_and_confirm(std::move(w), spec, line, long_paths), line, "adjacent");
}

std::string_view to_string(LineClass c) {
  switch (c) {
    case LineClass::LP_n: return "LP_n";
    case LineClass::LC_2n: return "LC_2n";
    case LineClass::LA_2: return "LA_2";
    case LineClass::LK3: return "LK3";
    case LineClass::NotComparability: return "NotComparability";
  }
  return "?";
}

LineComparability line_comparability(const MelonSpec& spec) {
  const auto& len = spec.lengths();
  if (spec.paths() == 1) return {LineClass::LP_n, len[0] <= 2 ? 1 : 2, std::nullopt};
  if (spec.paths() == 2) {
    const int n = len[0] + len[1];
    if (n == 3) return {LineClass::LK3, 1, std::nullopt};
    if (n % 2 == 0) return {LineClass::LC_2n, n == 4 ? 2 : 3, std::nullopt};
  }
  if (spec.paths() == 3 && spec.has_edge_path() && spec.count_equal(2) == 2) return {LineClass::LA_2, 2, std::nullopt};

  LineComparability out{LineClass::NotComparability, std::nullopt, std::nullopt};
  const Graph line = line_graph(build_melon(spec));
  if (line.order() > kInducedSearchMaxVertices) return out;
  for (const auto& [name, pattern] : witness_catalogue(line.order()))
    if (auto emb = contains_induced(line, pattern)) {
      out.witness = InducedWitness{name, *emb};
      break;
    }
  return out;
}

LineVerdict line_rep_number(const MelonSpec& spec) {
  LineVerdict v = analyse_line(spec);
  if (!v.word_representable)
    throw Error(ErrorCode::NotWordRepresentable, "L(" + spec.to_string() + ") fails at " + v.refuter.value_or("?"));
  return v;
}

LineVerdict analyse_line(const MelonSpec& spec) {
  LineVerdict v{true, std::nullopt, std::nullopt, std::nullopt, {}, line_comparability(spec)};
  const Graph line = line_graph(build_melon(spec));
  if (!line_word_representable(spec)) {
    v.word_representable = false;
    v.refuter = neighborhood_comparability_check(line);
    if (!v.refuter) throw Error(ErrorCode::VerificationFailed, "no refuting neighbourhood in L(" + spec.to_string() + ")");
    return v;
  }

  Word w;
  if (line.order() == 1 || line.size() == line.order() * (line.order() - 1) / 2) {
    v.r = 1;
    w = line.labels();
    v.construction = "permutation";
  } else if (spec.count_at_least(2) >= 3) {
    v.r = 3;
    v.construction = spec.has_edge_path() ? "adjacent" : "nonadjacent";
    w = spec.has_edge_path() ? line_word_adjacent(spec) : line_word_nonadjacent(spec);
  } else if (spec.paths() == 1) {
    v.r = 2;
    v.construction = "path";
    w = path_word(line_chain(spec, 1));
  } else if (spec.paths() == 2) {
    v.r = 2;
    v.construction = "cycle";
    w = line_word_cycle(spec);
  } else {
    v.r = 2;
    v.construction = "three-path";
    w = line_word_three_paths_adjacent(spec);
  }
  if (is_k_uniform(w) != v.r)
    throw Error(ErrorCode::VerificationFailed, v.construction + " line word is not " + std::to_string(*v.r) + "-uniform");
  v.certificate = checked(std::move(w), line, v.construction);
  return v;
}

std::vector<ReductionStep> line_prism_steps(const MelonSpec& spec) {
  std::vector<int> chosen;
  for (int i = 1; i <= spec.paths() && chosen.size() < 3; ++i)
    if (spec.length(i - 1) >= 2) chosen.push_back(i);
  if (chosen.size() < 3) throw Error(ErrorCode::NotInFamily, "needs three paths of length >= 2");
  std::vector<ReductionStep> steps;
  for (int i = 1; i <= spec.paths(); ++i) {
    if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
    for (const auto& v : line_chain(spec, i)) steps.push_back({ReductionStep::Kind::Delete, v});
  }
  // Contract each chosen path from the 0p side: complement then delete.
  for (int i : chosen) {
    const auto chain = line_chain(spec, i);
    for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
      steps.push_back({ReductionStep::Kind::LocalComplement, chain[j]});
      steps.push_back({ReductionStep::Kind::Delete, chain[j]});
    }
  }
  return steps;
}

}  // namespace melonrep
