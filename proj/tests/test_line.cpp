#include <doctest.h>

#include "melonrep/error.hpp"
#include "melonrep/line_analysis.hpp"
#include "melonrep/oracle.hpp"
#include "melonrep/orientation.hpp"
#include "melonrep/search.hpp"

using namespace melonrep;

namespace {
MelonSpec spec(std::vector<int> lengths) { return MelonSpec(std::move(lengths)); }
Graph line_of(const MelonSpec& s) { return line_graph(build_melon(s)); }
Graph named(std::string_view text) { return build_named(*parse_named(text)); }

void check_line_word(const Word& w, const MelonSpec& s, int k) {
  CAPTURE(s.to_string());
  CHECK(represents(w, line_of(s)));
  CHECK(is_k_uniform(w) == k);
}
}  // namespace

TEST_CASE("line word-representability") {
  CHECK_FALSE(line_word_representable(spec({1, 2, 2, 2})));
  CHECK(line_word_representable(spec({1, 2, 2})));
  CHECK(line_word_representable(spec({2, 2, 2})));
  // The arithmetic test matches an induced A_3 search.
  for (auto lengths : std::vector<std::vector<int>>{{1, 2, 2, 2}, {1, 2, 2, 3}, {1, 2, 2, 2, 4}, {2, 2, 2, 2}}) {
    const MelonSpec s(lengths);
    CHECK(line_word_representable(s) == !contains_induced(build_melon(s), named("A3")).has_value());
  }
}

TEST_CASE("L(A_3) fails at e_0") {
  const Graph l = line_of(spec({1, 2, 2, 2}));
  CHECK(neighborhood_comparability_check(l) == "e_0");
  const auto v = analyse_line(spec({1, 2, 2, 2}));
  CHECK_FALSE(v.word_representable);
  CHECK(v.refuter == "e_0");
  CHECK_THROWS_AS(line_rep_number(spec({1, 2, 2, 2})), Error);
}

TEST_CASE("cycle and three-path words") {
  check_line_word(line_word_cycle(spec({3, 3})), spec({3, 3}), 2);
  check_line_word(line_word_cycle(spec({2, 2})), spec({2, 2}), 2);
  check_line_word(line_word_cycle(spec({1, 2})), spec({1, 2}), 1);
  CHECK_THROWS_AS(line_word_cycle(spec({2, 2, 2})), Error);

  check_line_word(line_word_three_paths_adjacent(spec({1, 2, 2})), spec({1, 2, 2}), 2);
  check_line_word(line_word_three_paths_adjacent(spec({1, 3, 3})), spec({1, 3, 3}), 2);
  check_line_word(line_word_three_paths_adjacent(spec({1, 2, 4})), spec({1, 2, 4}), 2);
  check_line_word(line_word_three_paths_adjacent(spec({5, 1, 2})), spec({5, 1, 2}), 2);
  CHECK_THROWS_AS(line_word_three_paths_adjacent(spec({2, 2, 2})), Error);
}

TEST_CASE("K_m box K_2 word") {
  CHECK(to_string(km_k2_word(3)) == "e1 e2 e3 e1p e1 e2p e2 e3p e3 e1p e2p e3p e1 e1p e2 e2p e3 e3p");
  for (int m = 1; m <= 6; ++m) {
    const Word w = km_k2_word(m);
    CHECK(represents(w, build_named({NamedKind::KmBoxK2, m})));
    CHECK(is_k_uniform(w) == 3);
  }
  CHECK(is_isomorphic(line_of(spec({2, 2, 2})), build_named({NamedKind::KmBoxK2, 3})));
  CHECK_THROWS_AS(km_k2_word(0), Error);
}

TEST_CASE("no-edge line words") {
  CHECK(line_word_nonadjacent(spec({2, 2, 2})) == km_k2_word(3));
  check_line_word(line_word_nonadjacent(spec({3, 2, 2})), spec({3, 2, 2}), 3);
  check_line_word(line_word_nonadjacent(spec({4, 2})), spec({4, 2}), 3);
  check_line_word(line_word_nonadjacent(spec({3, 3, 3, 3})), spec({3, 3, 3, 3}), 3);
  check_line_word(line_word_nonadjacent(spec({2, 6, 3, 5})), spec({2, 6, 3, 5}), 3);
  CHECK_THROWS_AS(line_word_nonadjacent(spec({1, 2, 2})), Error);

  // The middle vertex of a length-3 path alternates with its two neighbours only.
  const Word w = line_word_nonadjacent(spec({3, 2, 2}));
  const Graph l = line_of(spec({3, 2, 2}));
  for (const auto& z : l.labels())
    if (z != "e1_1") CHECK(alternates(w, "e1_1", z) == (z == "e1" || z == "e1p"));
}

TEST_CASE("H permutations") {
  const PermSequence h3 = h_perms(3);
  CHECK(to_string(h3.perms[0]) == "a1 b2 a3 b3 a2 b1 x");
  CHECK(to_string(h3.perms[1]) == "a1 a3 b2 a2 b3 b1 x");
  CHECK(to_string(h3.perms[2]) == "b2 b3 a1 b1 a3 a2 x");
  for (int m = 2; m <= 6; ++m) CHECK(represents(h_perms(m).flatten(), build_named({NamedKind::H, m})));
  CHECK_THROWS_AS(h_perms(1), Error);
}

TEST_CASE("edge line words") {
  check_line_word(line_word_adjacent(spec({1, 2, 2, 3})), spec({1, 2, 2, 3}), 3);
  check_line_word(line_word_adjacent(spec({1, 3, 3})), spec({1, 3, 3}), 3);
  check_line_word(line_word_adjacent(spec({1, 2, 3, 3, 3})), spec({1, 2, 3, 3, 3}), 3);
  check_line_word(line_word_adjacent(spec({1, 4, 5, 3})), spec({1, 4, 5, 3}), 3);
  check_line_word(line_word_adjacent(spec({6, 1, 2, 4})), spec({6, 1, 2, 4}), 3);
  CHECK_THROWS_AS(line_word_adjacent(spec({1, 2, 2, 2})), Error);
}

TEST_CASE("line representation number") {
  CHECK(line_rep_number(spec({2, 2, 2})).r == 3);
  CHECK(line_rep_number(spec({3, 3})).r == 2);
  CHECK(line_rep_number(spec({1, 2, 2})).r == 2);
  CHECK(line_rep_number(spec({1, 2})).r == 1);
  CHECK(line_rep_number(spec({2})).r == 1);
  CHECK(line_rep_number(spec({4})).r == 2);
  CHECK(line_rep_number(spec({1, 3, 3, 3})).r == 3);
  // K_3 box K_2 has no 2-uniform representant.
  SearchBudget two;
  two.max_k = 2;
  CHECK_FALSE(min_uniform_rep(line_of(spec({2, 2, 2})), two));
}

TEST_CASE("r = 3 line graphs reach the prism") {
  for (auto lengths : std::vector<std::vector<int>>{{2, 2, 2}, {3, 4, 2}, {1, 2, 3, 3}, {2, 5, 3, 1, 2}}) {
    const MelonSpec s(lengths);
    CAPTURE(s.to_string());
    const Graph reduced = replay(line_of(s), line_prism_steps(s));
    CHECK(is_isomorphic(reduced, build_named({NamedKind::KmBoxK2, 3})));
  }
  CHECK_THROWS_AS(line_prism_steps(spec({1, 2, 2})), Error);
}

TEST_CASE("line comparability") {
  auto p = line_comparability(spec({5}));
  CHECK(p.cls == LineClass::LP_n);
  CHECK(p.prn == 2);
  CHECK(line_comparability(spec({1})).prn == 1);
  auto c6 = line_comparability(spec({3, 3}));
  CHECK(c6.cls == LineClass::LC_2n);
  CHECK(c6.prn == 3);
  CHECK(line_comparability(spec({2, 2})).prn == 2);
  auto a2 = line_comparability(spec({1, 2, 2}));
  CHECK(a2.cls == LineClass::LA_2);
  CHECK(a2.prn == 2);
  auto b2 = line_comparability(spec({1, 3, 3}));
  CHECK(b2.cls == LineClass::NotComparability);
  REQUIRE(b2.witness);
  CHECK((b2.witness->name == "S1" || b2.witness->name == "S2"));
  auto pr = line_comparability(spec({2, 2, 2}));
  REQUIRE(pr.witness);
  CHECK(pr.witness->name == "Pr3");
  auto odd = line_comparability(spec({2, 3}));
  REQUIRE(odd.witness);
  CHECK(odd.witness->name == "C5");

  for (auto lengths : std::vector<std::vector<int>>{{5}, {3, 3}, {2, 2}, {1, 2, 2}, {1, 3}}) {
    const MelonSpec s(lengths);
    auto o = min_perm_rep(line_of(s));
    REQUIRE(o);
    CHECK(line_comparability(s).prn == o->k);
  }
}
