// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [path-to-melonrep-cli]
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "melonrep/comparability.hpp"
#include "melonrep/error.hpp"
#include "melonrep/line_analysis.hpp"
#include "melonrep/melon_rep.hpp"
#include "melonrep/oracle.hpp"
#include "melonrep/orientation.hpp"
#include "melonrep/report.hpp"

using namespace melonrep;

namespace {

using Clock = std::chrono::steady_clock;

// Pinned tolerances: every criterion allows zero failures within these limits.
constexpr double kSweepLimitS = 60;
constexpr double kOracleLimitS = 600;
constexpr double kComparabilityLimitS = 300;
constexpr double kRealizerLimitS = 600;
constexpr double kLineLimitS = 600;
constexpr double kHasseLimitS = 10;

struct Outcome {
  int checked = 0;
  std::vector<std::string> failures;

  void fail(const std::string& what) { failures.push_back(what); }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }
};

int failed_criteria = 0;

void report(int id, std::string_view title, const Outcome& o, double seconds, double limit) {
  const bool ok = o.failures.empty() && o.checked > 0 && seconds <= limit;
  if (!ok) ++failed_criteria;
  std::printf("[%s] %d %s: %d checks, %zu failures, %.2f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", id,
              std::string(title).c_str(), o.checked, o.failures.size(), seconds, limit);
  for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("       %s\n", o.failures[i].c_str());
  std::fflush(stdout);
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Non-decreasing length lists with at most one 1. `fits` prunes: a list it
// rejects is neither emitted nor extended.
std::vector<MelonSpec> enumerate(int max_paths, int max_len, const std::function<bool(const std::vector<int>&)>& fits) {
  std::vector<MelonSpec> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_paths) return;
    for (int l = lo; l <= max_len; ++l) {
      if (l == 1 && !cur.empty()) continue;
      cur.push_back(l);
      if (fits(cur)) rec(l);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

int inner_vertices(const std::vector<int>& v) {
  int n = 0;
  for (int l : v) n += l - 1;
  return n;
}

int edge_total(const std::vector<int>& v) {
  int n = 0;
  for (int l : v) n += l;
  return n;
}

// Specs with at most `n` vertices: 2 + sum(l - 1) <= n.
std::vector<MelonSpec> by_vertices(int n) {
  return enumerate(n, n, [n](const std::vector<int>& v) { return 2 + inner_vertices(v) <= n; });
}

std::vector<MelonSpec> by_edges(int e) {
  return enumerate(e, e, [e](const std::vector<int>& v) { return edge_total(v) <= e; });
}

std::vector<MelonSpec> sweep_specs() {
  return enumerate(5, 6, [](const std::vector<int>&) { return true; });
}

template <class F>
void guarded(Outcome& o, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++o.checked;
    o.fail(label + ": " + e.what());
  }
}

// ------------------------------------------------------------------ criteria

void construction_sweep() {
  const auto t0 = Clock::now();
  Outcome o;
  for (const auto& s : sweep_specs())
    guarded(o, s.to_string(), [&] {
      const RepVerdict v = representation_number(s);
      o.expect(represents(v.certificate, build_melon(s)) && is_k_uniform(v.certificate) == v.r, s.to_string());
    });
  report(1, "construction soundness sweep (m <= 5, lengths <= 6)", o, since(t0), kSweepLimitS);
}

void classifier_vs_oracle() {
  const auto t0 = Clock::now();
  Outcome o;
  SearchBudget budget;
  budget.max_vertices = 10;
  for (const auto& s : by_vertices(10))
    guarded(o, s.to_string(), [&] {
      const auto found = min_uniform_rep(build_melon(s), budget);
      o.expect(found && found->k == representation_number(s).r, s.to_string());
    });
  // The two refutations named explicitly: no 2-uniform word for M_3 and B_3.
  SearchBudget two = budget;
  two.max_k = 2;
  for (const auto& s : {MelonSpec({3, 3, 3}), MelonSpec({1, 3, 3, 3})})
    guarded(o, s.to_string(), [&] { o.expect(!min_uniform_rep(build_melon(s), two), "2-uniform word found for " + s.to_string()); });
  report(2, "representation number vs exhaustive oracle (<= 10 vertices)", o, since(t0), kOracleLimitS);
}

void comparability_vs_orientation() {
  const auto t0 = Clock::now();
  Outcome o;
  for (const auto& s : by_vertices(12))
    guarded(o, s.to_string(), [&] {
      const bool claimed = is_comparability_melon(s).has_value();
      const bool found = find_transitive_orientation(build_melon(s), 1 << 20).has_value();
      o.expect(claimed == found, s.to_string());
    });
  report(3, "comparability test vs orientation search (<= 12 vertices)", o, since(t0), kComparabilityLimitS);
}

void realizers() {
  const auto t0 = Clock::now();
  Outcome o;
  for (const auto& s : by_vertices(14)) {
    if (!is_comparability_melon(s)) continue;
    guarded(o, s.to_string(), [&] {
      const PermSequence ps = melon_realizer(s);
      o.expect(ps.k() == 3 && represents(ps.flatten(), build_melon(s)), "realizer " + s.to_string());
    });
  }
  SearchBudget budget;
  budget.max_vertices = 10;
  for (const auto& s : by_vertices(10)) {
    if (!is_comparability_melon(s)) continue;
    guarded(o, s.to_string(), [&] {
      const auto found = min_perm_rep(build_melon(s), budget);
      o.expect(found && found->k == prn(s).prn, "prn " + s.to_string());
    });
  }
  SearchBudget two = budget;
  two.max_k = 2;
  guarded(o, "C6", [&] { o.expect(!min_perm_rep(build_named({NamedKind::Cycle, 6}), two), "C6 has 2 permutations"); });
  report(4, "three-permutation realizers and prn vs oracle", o, since(t0), kRealizerLimitS);
}

void line_suite() {
  const auto t0 = Clock::now();
  Outcome o;
  // (a)
  guarded(o, "L(A3)", [&] {
    const auto v = analyse_line(MelonSpec({1, 2, 2, 2}));
    o.expect(!v.word_representable && v.refuter == "e_0", "L(A3) refuter");
    o.expect(neighborhood_comparability_check(line_graph(build_melon(MelonSpec({1, 2, 2, 2})))) == "e_0",
             "L(A3) neighbourhood check");
  });
  SearchBudget budget;
  budget.max_vertices = 10;
  for (const auto& s : by_edges(12)) {
    if (s.edge_count() < 1) continue;
    const Graph line = line_graph(build_melon(s));
    // (b)
    if (line_word_representable(s))
      guarded(o, s.to_string(), [&] {
        const LineVerdict v = line_rep_number(s);
        o.expect(v.certificate && represents(*v.certificate, line) && is_k_uniform(*v.certificate) == v.r,
                 "line word " + s.to_string());
      });
    else
      guarded(o, s.to_string(), [&] { o.expect(neighborhood_comparability_check(line).has_value(), "refuter " + s.to_string()); });
    // (c)
    if (line.order() <= 10 && line_word_representable(s))
      guarded(o, s.to_string(), [&] {
        const auto found = min_uniform_rep(line, budget);
        o.expect(found && found->k == line_rep_number(s).r, "line oracle " + s.to_string());
      });
    // (d)
    if (s.edge_count() <= 10)
      guarded(o, s.to_string(), [&] {
        const bool claimed = line_comparability(s).cls != LineClass::NotComparability;
        o.expect(claimed == find_transitive_orientation(line, 1 << 20).has_value(), "line class " + s.to_string());
      });
  }
  SearchBudget two = budget;
  two.max_k = 2;
  guarded(o, "K3xK2", [&] { o.expect(!min_uniform_rep(build_named({NamedKind::KmBoxK2, 3}), two), "K3xK2 is 2-representable"); });
  report(5, "line-graph suite (refuter, words, oracle, comparability)", o, since(t0), kLineLimitS);
}

void golden_values() {
  const auto t0 = Clock::now();
  Outcome o;
  guarded(o, "P4", [&] {
    Graph p4;
    p4.add_edge("c1", "c2");
    p4.add_edge("c2", "c3");
    p4.add_edge("c3", "c4");
    o.expect(represents(parse_word("c2 c1 c4 c3 c4 c2 c3 c1"), p4), "P4 word");
  });
  guarded(o, "K3xK2", [&] {
    o.expect(to_string(km_k2_word(3)) == "e1 e2 e3 e1p e1 e2p e2 e3p e3 e1p e2p e3p e1 e1p e2 e2p e3 e3p", "K3xK2 word text");
    o.expect(represents(km_k2_word(3), build_named({NamedKind::KmBoxK2, 3})), "K3xK2 word");
  });
  guarded(o, "H3", [&] {
    const PermSequence h = h_perms(3);
    o.expect(to_string(h.perms[0]) == "a1 b2 a3 b3 a2 b1 x" && to_string(h.perms[1]) == "a1 a3 b2 a2 b3 b1 x" &&
                 to_string(h.perms[2]) == "b2 b3 a1 b1 a3 a2 x",
             "H(3) permutations text");
    o.expect(represents(h.flatten(), build_named({NamedKind::H, 3})), "H(3) realizer");
  });
  guarded(o, "LC(M3, 0p)", [&] {
    // Vertices 1, 2, 3 sit next to 0p and 4, 5, 6 next to 0.
    const std::array<std::string, 7> fig{"", "p1_1", "p2_1", "p3_1", "p1_2", "p2_2", "p3_2"};
    Graph expected;
    for (auto v : {"0", "0p", "p1_1", "p1_2", "p2_1", "p2_2", "p3_1", "p3_2"}) expected.add_vertex(v);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}, {1, 3}, {1, 2}, {2, 3}})
      expected.add_edge(fig[a], fig[b]);
    for (int v : {4, 5, 6}) expected.add_edge("0", fig[v]);
    for (int v : {1, 2, 3}) expected.add_edge("0p", fig[v]);
    o.expect(local_complement(build_melon(MelonSpec({3, 3, 3})), "0p") == expected, "local complement edge set");
  });
  report(6, "golden values (P4 word, K3xK2 word, H(3), LC of M3)", o, since(t0), 60);
}

// Expected layer shape: 0p at the bottom; two layers except Case IV, whose
// length-2 paths give the chain 0p < x < 0 with 0 on layer 2. Case I keeps
// both endpoints on the bottom layer, Cases II and III put 0 on top.
bool hasse_shape(const MelonSpec& s, const HasseDiagram& h) {
  const Graph& g = h.orientation.base;
  int top = 0;
  for (int l : h.layer) top = std::max(top, l);
  const int zero = h.layer[g.index("0")], zero_p = h.layer[g.index("0p")];
  for (auto [t, hd] : h.orientation.arcs)
    if (h.layer[t] >= h.layer[hd]) return false;
  if (zero_p != 0) return false;
  switch (h.hasse_case) {
    case HasseCase::I: return !s.has_edge_path() && top == 1 && zero == 0;
    case HasseCase::II: return !s.has_edge_path() && top == 1 && zero == 1;
    case HasseCase::III: return s.has_edge_path() && s.count_equal(2) == 0 && top == 1 && zero == 1;
    case HasseCase::IV: return s.has_edge_path() && s.count_equal(2) > 0 && top == 2 && zero == 2;
  }
  return false;
}

void hasse() {
  const auto t0 = Clock::now();
  Outcome o;
  const std::vector<std::vector<int>> specs{
      {2, 2},    {2, 2, 2}, {2, 4},       {4, 4, 6},    {2, 2, 2, 2, 2},           // I
      {3, 3},    {3, 5},    {3, 3, 3},    {5, 5, 3, 3}, {3, 3, 3, 3, 3},           // II
      {1, 3},    {1, 3, 3}, {1, 5, 3},    {1, 3, 3, 3}, {1, 5, 5, 5},              // III
      {1, 2},    {1, 2, 2}, {1, 2, 3},    {1, 2, 2, 5}, {1, 2, 2, 2, 3},           // IV
  };
  std::array<int, 4> seen{};
  for (const auto& lengths : specs) {
    const MelonSpec s(lengths);
    guarded(o, s.to_string(), [&] {
      const HasseDiagram h = hasse_orientation(s);
      ++seen[static_cast<int>(h.hasse_case)];
      o.expect(h.orientation.is_transitive(), "transitivity " + s.to_string());
      o.expect(hasse_shape(s, h), "layer shape " + s.to_string() + " case " + std::string(to_string(h.hasse_case)));
    });
  }
  for (int c = 0; c < 4; ++c) o.expect(seen[c] == 5, "case count " + std::to_string(c));
  report(7, "Hasse orientation (20 specs, Cases I-IV)", o, since(t0), kHasseLimitS);
}

std::string run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " 2>&1; echo \"exit=$?\"";
  std::string out;
  if (FILE* p = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
  }
  return out;
}

void determinism(const std::string& cli) {
  const auto t0 = Clock::now();
  Outcome o;
  const auto specs = sweep_specs();
  auto transcript = [&] {
    std::ostringstream all;
    for (const auto& s : specs) {
      if (cli.empty()) {
        all << analyze_report(s);
        try {
          all << oracle_report(build_melon(s), s.to_string(), true, true);
        } catch (const Error& e) {
          all << e.what() << "\n";
        }
      } else {
        all << run_cli(cli, "analyze " + s.to_string());
        all << run_cli(cli, "oracle " + s.to_string());
      }
    }
    return all.str();
  };
  const std::string first = transcript();
  const std::string second = transcript();
  o.expect(!first.empty(), "empty transcript");
  o.expect(first == second, "transcripts differ");
  o.expect(first.find("exit=4") == std::string::npos, "a certificate failed to re-verify");
  report(8, cli.empty() ? "determinism (in-process analyze + oracle, full sweep)" : "determinism (CLI analyze + oracle, full sweep)",
         o, since(t0), 600);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  construction_sweep();
  classifier_vs_oracle();
  comparability_vs_orientation();
  realizers();
  line_suite();
  golden_values();
  hasse();
  determinism(cli);
  std::printf("%s: %d of 8 criteria failed\n", failed_criteria ? "FAIL" : "PASS", failed_criteria);
  return failed_criteria ? 1 : 0;
}
