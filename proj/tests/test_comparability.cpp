#include <doctest.h>

#include "melonrep/comparability.hpp"
#include "melonrep/error.hpp"
#include "melonrep/oracle.hpp"
#include "melonrep/orientation.hpp"

using namespace melonrep;

namespace {
MelonSpec spec(std::vector<int> lengths) { return MelonSpec(std::move(lengths)); }
Graph named(std::string_view text) { return build_named(*parse_named(text)); }

Graph labelled_path(const std::vector<std::string>& c) {
  Graph g;
  for (const auto& v : c) g.add_vertex(v);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) g.add_edge(c[i], c[i + 1]);
  return g;
}

Graph labelled_cycle(const std::vector<std::string>& c) {
  Graph g = labelled_path(c);
  g.add_edge(c.back(), c.front());
  return g;
}
}  // namespace

TEST_CASE("comparability test") {
  CHECK(is_comparability_melon(spec({3, 3, 5})) == ComparabilityTag::SameParity);
  CHECK(is_comparability_melon(spec({1, 2, 2, 3})) == ComparabilityTag::EdgeAndShortEvens);
  CHECK_FALSE(is_comparability_melon(spec({2, 3})));
  CHECK_FALSE(is_comparability_melon(spec({1, 3, 4})));
  CHECK(is_comparability_melon(spec({1, 2, 2, 2})));
}

TEST_CASE("path permutations") {
  const auto even = path_perms_even(default_labels(4));
  CHECK(to_string(even.flatten()) == "c2 c1 c4 c3 c4 c2 c3 c1");
  for (int n : {6, 8, 10}) {
    const auto c = default_labels(n);
    CHECK(represents(path_perms_even(c).flatten(), labelled_path(c)));
    CHECK(path_perms_even(c).k() == 2);
  }
  for (int n : {3, 5, 7, 9}) {
    const auto c = default_labels(n);
    CHECK(represents(path_perms_odd(c).flatten(), labelled_path(c)));
    CHECK(path_perms_odd(c).k() == 3);
  }
  CHECK_THROWS_AS(path_perms_even(default_labels(2)), Error);
  CHECK_THROWS_AS(path_perms_odd(default_labels(1)), Error);
}

TEST_CASE("even cycle permutations") {
  for (int k = 1; k <= 5; ++k) {
    std::vector<std::string> cyc{"0p"};
    for (const auto& c : default_labels(2 * k)) cyc.push_back(c);
    cyc.push_back("0");
    const PermSequence ps = even_cycle_perms(cyc);
    CAPTURE(k);
    CHECK(ps.k() == 3);
    CHECK(represents(ps.flatten(), labelled_cycle(cyc)));
    if (k >= 2) {
      // Restricted to the intermediate vertices, the word reads p q q.
      const auto inner = default_labels(2 * k);
      const PermSequence pq = path_perms_even(inner);
      CHECK(restrict(ps.flatten(), inner) == concat({pq.perms[0], pq.perms[1], pq.perms[1]}));
    }
  }
}

TEST_CASE("melon realizers") {
  for (auto lengths : std::vector<std::vector<int>>{{3, 3}, {3, 3, 5}, {3, 5}, {5, 5, 5, 3}}) {
    const auto ps = melon_perms_odd_parity(spec(lengths));
    CHECK(ps.k() == 3);
    CHECK(represents(ps.flatten(), build_melon(spec(lengths))));
  }
  CHECK_THROWS_AS(melon_perms_odd_parity(spec({2, 3})), Error);
  for (auto lengths : std::vector<std::vector<int>>{{2, 2, 2}, {2, 4}, {4, 4, 2}, {6, 2, 4, 4}}) {
    const auto ps = melon_perms_even_parity(spec(lengths));
    CHECK(represents(ps.flatten(), build_melon(spec(lengths))));
  }
  for (auto lengths : std::vector<std::vector<int>>{{1, 3, 3}, {1, 2, 2, 3}, {1, 2, 2, 2}, {1, 3, 3, 5}, {1, 2, 5, 3, 3}}) {
    const auto ps = melon_perms_adjacent(spec(lengths));
    CAPTURE(spec(lengths).to_string());
    CHECK(ps.k() == 3);
    CHECK(represents(ps.flatten(), build_melon(spec(lengths))));
  }
  CHECK_THROWS_AS(melon_realizer(spec({2, 3})), Error);
}

TEST_CASE("prn") {
  auto c6 = prn(spec({3, 3}));
  CHECK(c6.prn == 3);
  CHECK(c6.witness == PrnWitness::InducedEvenCycle);
  CHECK(prn(spec({1, 3, 3})).prn == 2);
  CHECK(prn(spec({1, 2})).prn == 1);
  auto b3 = prn(spec({1, 3, 3, 3}));
  CHECK(b3.prn == 3);
  CHECK(b3.witness == PrnWitness::InducedT2);
  CHECK_THROWS_AS(prn(spec({2, 3})), Error);
  for (auto lengths : std::vector<std::vector<int>>{{1, 3, 3}, {2, 2, 2}, {1, 2, 2, 2}, {1, 2}, {1}}) {
    auto v = prn(spec(lengths));
    CHECK(v.realizer.k() == v.prn);
    CHECK(represents(v.realizer.flatten(), build_melon(spec(lengths))));
  }
}

TEST_CASE("prn agrees with the permutation oracle") {
  for (auto lengths : std::vector<std::vector<int>>{{3, 3}, {2, 2, 2}, {1, 3, 3}, {1, 2, 3}, {2, 4}, {1, 5}, {1, 3, 3, 3}}) {
    const MelonSpec s(lengths);
    CAPTURE(s.to_string());
    auto o = min_perm_rep(build_melon(s));
    REQUIRE(o);
    CHECK(prn(s).prn == o->k);
  }
  CHECK(min_perm_rep(named("C6"))->k == 3);
}

TEST_CASE("Hasse orientation") {
  const auto i = hasse_orientation(spec({2, 2, 2}));
  CHECK(i.hasse_case == HasseCase::I);
  CHECK(i.orientation.is_transitive());
  const auto ii = hasse_orientation(spec({3, 3}));
  CHECK(ii.hasse_case == HasseCase::II);
  const auto iii = hasse_orientation(spec({1, 3, 3}));
  CHECK(iii.hasse_case == HasseCase::III);
  CHECK(iii.orientation.is_transitive());
  const auto iv = hasse_orientation(spec({1, 2, 3}));
  CHECK(iv.hasse_case == HasseCase::IV);
  CHECK(iv.orientation.is_transitive());
  CHECK_THROWS_AS(hasse_orientation(spec({3, 4})), Error);

  const std::string dot = hasse_dot(iii);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("comparability agrees with orientation search") {
  for (auto lengths : std::vector<std::vector<int>>{{2, 3}, {3, 5}, {1, 3, 4}, {1, 2, 2, 2}, {2, 4, 4}, {1, 2, 4}}) {
    const MelonSpec s(lengths);
    CHECK(is_comparability_melon(s).has_value() == find_transitive_orientation(build_melon(s)).has_value());
  }
}
