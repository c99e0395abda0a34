#include "melonrep/comparability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "melonrep/error.hpp"
#include "melonrep/oracle.hpp"

namespace melonrep {

namespace lb = melon_labels;

namespace {

// 1-based view of a vertex sequence, matching the c_1, c_2, ... notation.
struct Chain {
  std::vector<std::string> v;
  const std::string& operator[](int i) const { return v.at(i - 1); }
};

// c_4 c_3 ... c_{2i} c_{2i-1} ... c_{2k-2} c_{2k-3}
Word eq_u(const Chain& c, int k) {
  Word out;
  for (int i = 2; i <= k - 1; ++i) {
    out.push_back(c[2 * i]);
    out.push_back(c[2 * i - 1]);
  }
  return out;
}

// c_{2k-2} c_{2k-1} ... c_{2j} c_{2j+1} ... c_2 c_3
Word eq_v(const Chain& c, int k) {
  Word out;
  for (int j = k - 1; j >= 1; --j) {
    out.push_back(c[2 * j]);
    out.push_back(c[2 * j + 1]);
  }
  return out;
}

void append(Word& w, const Word& part) { w.insert(w.end(), part.begin(), part.end()); }

std::string mid(int path, int j) { return lb::intermediate(path, j); }

// Path indices (1-based) sorted by length, stable.
std::vector<int> sorted_paths(const MelonSpec& spec, bool descending) {
  std::vector<int> idx(spec.paths());
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return descending ? spec.length(a - 1) > spec.length(b - 1) : spec.length(a - 1) < spec.length(b - 1);
  });
  return idx;
}

PermSequence finish(const MelonSpec& spec, std::vector<Word> perms) {
  PermSequence seq{build_melon(spec).labels(), std::move(perms)};
  seq.validate();
  return seq;
}

}  // namespace

std::string_view to_string(ComparabilityTag tag) {
  return tag == ComparabilityTag::SameParity ? "SameParity" : "EdgeAndShortEvens";
}

std::string_view to_string(PrnWitness w) {
  switch (w) {
    case PrnWitness::Kn: return "Kn";
    case PrnWitness::PermutationGraph: return "PermutationGraph";
    case PrnWitness::InducedEvenCycle: return "InducedEvenCycle";
    case PrnWitness::InducedT2: return "InducedT2";
  }
  return "?";
}

std::string_view to_string(HasseCase c) {
  switch (c) {
    case HasseCase::I: return "I";
    case HasseCase::II: return "II";
    case HasseCase::III: return "III";
    case HasseCase::IV: return "IV";
  }
  return "?";
}

std::optional<ComparabilityTag> is_comparability_melon(const MelonSpec& spec) {
  const auto& len = spec.lengths();
  const bool all_even = std::all_of(len.begin(), len.end(), [](int l) { return l % 2 == 0; });
  const bool all_odd = std::all_of(len.begin(), len.end(), [](int l) { return l % 2 == 1; });
  if (all_even || all_odd) return ComparabilityTag::SameParity;
  const bool evens_short = std::all_of(len.begin(), len.end(), [](int l) { return l % 2 == 1 || l == 2; });
  if (spec.has_edge_path() && evens_short) return ComparabilityTag::EdgeAndShortEvens;
  return std::nullopt;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

PermSequence path_perms_even(std::span<const std::string> c_in) {
  const int n = static_cast<int>(c_in.size());
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::PreconditionViolated, "even path needs 2k vertices with k >= 2");
  const Chain c{{c_in.begin(), c_in.end()}};
  const int k = n / 2;
  Word p{c[2], c[1]};
  append(p, eq_u(c, k));
  p.push_back(c[2 * k]);
  p.push_back(c[2 * k - 1]);
  Word q{c[2 * k]};
  append(q, eq_v(c, k));
  q.push_back(c[1]);
  PermSequence seq{c.v, {p, q}};
  seq.validate();
  return seq;
}

PermSequence path_perms_odd(std::span<const std::string> c_in) {
  const int n = static_cast<int>(c_in.size());
  if (n < 3 || n % 2 != 1) throw Error(ErrorCode::PreconditionViolated, "odd path needs 2k-1 vertices with k >= 2");
  const Chain c{{c_in.begin(), c_in.end()}};
  const int k = (n + 1) / 2;
  const Word u = eq_u(c, k);
  Word p{c[2], c[1]};
  append(p, u);
  p.push_back(c[2 * k - 1]);
  Word q = eq_v(c, k);
  q.push_back(c[1]);
  Word r{c[2]};
  append(r, u);
  r.push_back(c[2 * k - 1]);
  r.push_back(c[1]);
  PermSequence seq{c.v, {p, q, r}};
  seq.validate();
  return seq;
}

PermSequence even_cycle_perms(std::span<const std::string> cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::PreconditionViolated, "even cycle needs 2k+2 vertices with k >= 1");
  const std::string& zp = cycle.front();
  const std::string& z = cycle.back();
  const Chain c{{cycle.begin() + 1, cycle.end() - 1}};
  const int k = (n - 2) / 2;
  std::vector<std::string> vs(cycle.begin(), cycle.end());
  if (k == 1) {
    const Word l1{zp, c[2], c[1], z};
    const Word l2{c[2], zp, z, c[1]};
    return PermSequence{vs, {l1, l2, l2}};
  }
  const Word u = eq_u(c, k), v = eq_v(c, k);
  Word w1{zp, c[2], c[1]};
  append(w1, u);
  w1.insert(w1.end(), {c[2 * k], c[2 * k - 1], z});
  Word w2{c[2 * k]};
  append(w2, v);
  w2.insert(w2.end(), {zp, c[1], z});
  Word w3{zp, c[2 * k], z};
  append(w3, v);
  w3.push_back(c[1]);
  PermSequence seq{vs, {w1, w2, w3}};
  seq.validate();
  return seq;
}

PermSequence melon_perms_odd_parity(const MelonSpec& spec) {
  for (int l : spec.lengths())
    if (l % 2 == 0 || l < 3) throw Error(ErrorCode::PreconditionViolated, "every path must be odd and of length >= 3");
  const int m = spec.paths();
  const std::string zp(lb::kZeroPrime), z(lb::kZero);
  // Path i read as c_1 = 0p, c_2 .. c_{2k-1} = intermediates, c_{2k} = 0.
  std::vector<Word> u(m + 1), v(m + 1);
  std::vector<std::string> first(m + 1), last(m + 1);
  for (int i = 1; i <= m; ++i) {
    const int len = spec.length(i - 1);
    Chain c{{zp}};
    for (int j = 1; j < len; ++j) c.v.push_back(mid(i, j));
    c.v.push_back(z);
    const int k = (len + 1) / 2;
    u[i] = eq_u(c, k);
    v[i] = eq_v(c, k);
    first[i] = c[2];
    last[i] = c[2 * k - 1];
  }
  Word p1, p2{z}, p3{z};
  for (int i = 1; i <= m; ++i) p1.push_back(first[i]);
  p1.push_back(zp);
  for (int i = m; i >= 1; --i) append(p1, u[i]);
  p1.push_back(z);
  for (int i = m; i >= 1; --i) p1.push_back(last[i]);
  for (int i = 1; i <= m; ++i) append(p2, v[i]);
  p2.push_back(zp);
  for (int i = m; i >= 1; --i) append(p3, v[i]);
  p3.push_back(zp);
  return finish(spec, {p1, p2, p3});
}

PermSequence melon_perms_even_parity(const MelonSpec& spec) {
  for (int l : spec.lengths())
    if (l % 2 != 0) throw Error(ErrorCode::PreconditionViolated, "every path must be even");
  const std::string zp(lb::kZeroPrime), z(lb::kZero);
  const auto order = sorted_paths(spec, false);
  // Path i read as c_1 = 0p, c_2 .. c_{2k-2} = intermediates, c_{2k-1} = 0.
  // A length-two path has a' = a = x and no u or v'.
  Word p1, p2, p3;
  std::vector<Word> u, v_rest;
  std::vector<std::string> a_first, a_last;
  for (int i : order) {
    const int len = spec.length(i - 1);
    if (len == 2) {
      a_first.push_back(mid(i, 1));
      a_last.push_back(mid(i, 1));
      u.emplace_back();
      v_rest.emplace_back();
      continue;
    }
    Chain c{{zp}};
    for (int j = 1; j < len; ++j) c.v.push_back(mid(i, j));
    c.v.push_back(z);
    const int k = (len + 2) / 2;
    const Word v = eq_v(c, k);  // a 0 v'
    a_first.push_back(c[2]);
    a_last.push_back(c[2 * k - 2]);
    u.push_back(eq_u(c, k));
    v_rest.emplace_back(v.begin() + 2, v.end());
  }
  const int m = static_cast<int>(order.size());
  for (int i = 0; i < m; ++i) p1.push_back(a_first[i]);
  p1.push_back(zp);
  for (int i = 0; i < m; ++i) append(p1, u[i]);
  p1.push_back(z);
  for (int i = 0; i < m; ++i) p2.push_back(a_last[i]);
  p2.push_back(z);
  for (int i = 0; i < m; ++i) append(p2, v_rest[i]);
  p2.push_back(zp);
  for (int i = m - 1; i >= 0; --i) {
    p3.push_back(a_first[i]);
    append(p3, u[i]);
  }
  p3.push_back(z);
  p3.push_back(zp);
  return finish(spec, {p1, p2, p3});
}

PermSequence melon_perms_adjacent(const MelonSpec& spec) {
  if (!spec.has_edge_path()) throw Error(ErrorCode::PreconditionViolated, "the 0-0p edge is required");
  for (int l : spec.lengths())
    if (l % 2 == 0 && l != 2) throw Error(ErrorCode::PreconditionViolated, "even paths must have length two");
  const std::string zp(lb::kZeroPrime), z(lb::kZero);
  const auto order = sorted_paths(spec, true);

  // Long (odd) paths as cycles 0p c_1 .. c_2k 0: a' = c_1, y = c_2,
  // x = c_{2k-1}, a = c_2k. Paths of length three are spliced in afterwards.
  struct Long {
    std::string a_first, a_last, x, y;
    Word u, v;
  };
  std::vector<Long> longs;
  std::vector<std::string> twos;
  std::vector<std::pair<std::string, std::string>> threes;  // (a', a)
  for (int i : order) {
    const int len = spec.length(i - 1);
    if (len == 1) continue;
    if (len == 2) {
      twos.push_back(mid(i, 1));
      continue;
    }
    if (len == 3) {
      threes.emplace_back(mid(i, 1), mid(i, 2));
      continue;
    }
    Chain c;
    for (int j = 1; j < len; ++j) c.v.push_back(mid(i, j));
    const int k = (len - 1) / 2;
    longs.push_back(Long{c[1], c[2 * k], c[2 * k - 1], c[2], eq_u(c, k), eq_v(c, k)});
  }
  const int t = static_cast<int>(longs.size());

  Word q1{zp};
  for (int j = t - 1; j >= 0; --j) q1.insert(q1.end(), {longs[j].y, longs[j].a_first});
  for (int j = 0; j < t; ++j) append(q1, longs[j].u);
  for (int j = 0; j < t; ++j) q1.insert(q1.end(), {longs[j].a_last, longs[j].x});
  for (auto it = twos.rbegin(); it != twos.rend(); ++it) q1.push_back(*it);
  q1.push_back(z);

  Word q2;
  for (int j = t - 1; j >= 0; --j) {
    q2.push_back(longs[j].a_last);
    append(q2, longs[j].v);
  }
  q2.push_back(zp);
  for (int j = t - 1; j >= 0; --j) q2.push_back(longs[j].a_first);
  append(q2, twos);
  q2.push_back(z);

  Word q3{zp};
  append(q3, twos);
  for (int j = t - 1; j >= 0; --j) q3.push_back(longs[j].a_last);
  q3.push_back(z);
  for (int j = 0; j < t; ++j) {
    append(q3, longs[j].v);
    q3.push_back(longs[j].a_first);
  }

  // Each length-three path 0p a' a 0: every a at the bottom and every a'
  // at the top of q1; the pairs a a' just under 0 in q2 (ascending) and
  // just above 0p in q3 (descending).
  if (!threes.empty()) {
    Word low, high, up, down;
    for (const auto& [af, al] : threes) {
      low.push_back(al);
      high.push_back(af);
      up.insert(up.end(), {al, af});
    }
    for (auto it = threes.rbegin(); it != threes.rend(); ++it) down.insert(down.end(), {it->second, it->first});
    q1 = concat({low, q1, high});
    q2.insert(q2.end() - 1, up.begin(), up.end());
    q3.insert(q3.begin() + 1, down.begin(), down.end());
  }
  return finish(spec, {q1, q2, q3});
}

PermSequence melon_realizer(const MelonSpec& spec) {
  const auto tag = is_comparability_melon(spec);
  if (!tag) throw Error(ErrorCode::NotComparability, "melon " + spec.to_string() + " is not a comparability graph");
  if (spec.has_edge_path()) return melon_perms_adjacent(spec);
  if (spec.length(0) % 2 == 0) return melon_perms_even_parity(spec);
  return melon_perms_odd_parity(spec);
}

PrnVerdict prn(const MelonSpec& spec) {
  if (!is_comparability_melon(spec))
    throw Error(ErrorCode::NotComparability, "melon " + spec.to_string() + " is not a comparability graph");
  const Graph g = build_melon(spec);
  if (spec == MelonSpec({1}) || spec == MelonSpec({1, 2}) || spec == MelonSpec({2, 1}))
    return PrnVerdict{1, PermSequence{g.labels(), {g.labels()}}, PrnWitness::Kn};

  std::vector<int> len = spec.lengths();
  std::sort(len.rbegin(), len.rend());
  PrnWitness witness = PrnWitness::PermutationGraph;
  int cycle = 0;
  if (!spec.has_edge_path()) {
    if (len.size() >= 2 && len[0] + len[1] >= 6) {
      witness = PrnWitness::InducedEvenCycle;
      cycle = len[0] + len[1];
    }
  } else {
    const auto odd_long = std::find_if(len.begin(), len.end(), [](int l) { return l % 2 == 1 && l >= 5; });
    if (odd_long != len.end()) {
      witness = PrnWitness::InducedEvenCycle;
      cycle = *odd_long + 1;
    } else if (spec.count_at_least(3) >= 3) {
      witness = PrnWitness::InducedT2;
    }
  }

  PermSequence realizer;
  if (witness == PrnWitness::PermutationGraph) {
    SearchBudget budget;
    budget.max_vertices = 64;
    budget.max_k = 2;
    auto found = min_perm_rep(g, budget);
    if (!found || found->k != 2)
      throw Error(ErrorCode::VerificationFailed, "no 2-permutation realizer found for " + spec.to_string());
    realizer = std::move(found->realizer);
  } else {
    realizer = melon_realizer(spec);
  }
  if (!represents(realizer.flatten(), g))
    throw Error(ErrorCode::VerificationFailed, "realizer for " + spec.to_string() + " does not verify");
  return PrnVerdict{realizer.k(), std::move(realizer), witness, cycle};
}

HasseDiagram hasse_orientation(const MelonSpec& spec) {
  if (!is_comparability_melon(spec))
    throw Error(ErrorCode::NotComparability, "melon " + spec.to_string() + " is not a comparability graph");
  const Graph g = build_melon(spec);
  const bool edge = spec.has_edge_path();
  const bool all_even = std::all_of(spec.lengths().begin(), spec.lengths().end(), [](int l) { return l % 2 == 0; });
  HasseCase kind;
  if (!edge) kind = all_even ? HasseCase::I : HasseCase::II;
  else kind = spec.count_equal(2) > 0 ? HasseCase::IV : HasseCase::III;

  const int zero = g.index(lb::kZero);
  const int zero_p = g.index(lb::kZeroPrime);
  std::vector<char> middle(g.order(), 0);
  if (edge)
    for (int i = 0; i < spec.paths(); ++i)
      if (spec.length(i) == 2) middle[g.index(lb::intermediate(i + 1, 1))] = 1;

  // Two-colour everything except the 0-0p edge and the length-two middles.
  std::vector<int> side(g.order(), -1);
  side[zero_p] = 0;
  std::deque<int> queue{zero_p};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(v)) {
      if (middle[w] || (std::min(v, w) == std::min(zero, zero_p) && std::max(v, w) == std::max(zero, zero_p))) continue;
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      }
    }
  }
  if (side[zero] < 0) side[zero] = 1;

  HasseDiagram out{kind, Orientation{g, {}}, std::vector<int>(g.order(), 0)};
  for (const auto& e : g.edges()) {
    int tail;
    if ((e.u == zero && e.v == zero_p) || (e.u == zero_p && e.v == zero)) tail = zero_p;
    else if (middle[e.u] || middle[e.v]) tail = (e.u == zero_p || e.v == zero_p) ? zero_p : (middle[e.u] ? e.u : e.v);
    else tail = side[e.u] == 0 ? e.u : e.v;
    out.orientation.arcs.emplace_back(tail, tail == e.u ? e.v : e.u);
  }
  if (!out.orientation.is_transitive())
    throw Error(ErrorCode::VerificationFailed, "Hasse orientation of " + spec.to_string() + " is not transitive");

  for (int round = 0; round < g.order(); ++round)
    for (auto [a, b] : out.orientation.arcs) out.layer[b] = std::max(out.layer[b], out.layer[a] + 1);
  return out;
}

std::string hasse_dot(const HasseDiagram& h, std::string_view name) {
  const Graph& g = h.orientation.base;
  const int n = g.order();
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (auto [a, b] : h.orientation.arcs) less[a][b] = 1;
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  std::string out = "digraph \"" + std::string(name) + "\" {\n  rankdir=BT;\n";
  const int top = n == 0 ? 0 : *std::max_element(h.layer.begin(), h.layer.end());
  for (int l = 0; l <= top; ++l) {
    out += "  { rank=same;";
    for (int v = 0; v < n; ++v)
      if (h.layer[v] == l) out += " " + q(g.label(v)) + ";";
    out += " }\n";
  }
  for (auto [a, b] : h.orientation.arcs) {
    bool cover = true;
    for (int c = 0; c < n && cover; ++c) cover = !(less[a][c] && less[c][b]);
    if (cover) out += "  " + q(g.label(a)) + " -> " + q(g.label(b)) + ";\n";
  }
  return out + "}\n";
}

}  // namespace melonrep
