#include <doctest.h>

#include "json.hpp"
#include "melonrep/error.hpp"
#include "melonrep/report.hpp"

using namespace melonrep;
using nlohmann::json;

TEST_CASE("analyze report for M_3") {
  const auto j = json::parse(analyze_report(MelonSpec({3, 3, 3})));
  CHECK(j["schema"] == "melonrep/1");
  CHECK(j["melon"]["r"] == 3);
  CHECK(j["melon"]["comparability"] == "SameParity");
  CHECK(j["melon"]["prn"]["value"] == 3);
  CHECK(j["melon"]["certificate"]["uniform"] == 3);
  CHECK(j["line"]["r"] == 3);
  CHECK_FALSE(j.contains("oracle"));
  CHECK_FALSE(j.contains("timings"));
}

TEST_CASE("analyze report edge cases") {
  const auto a3 = json::parse(analyze_report(MelonSpec({1, 2, 2, 2})));
  CHECK(a3["line"]["word_representable"] == false);
  CHECK(a3["line"]["refuter"] == "e_0");
  CHECK(a3["line"]["r"].is_null());

  const auto k2 = json::parse(analyze_report(MelonSpec::parse("1,")));
  CHECK(k2["melon"]["r"] == 1);

  const auto c5 = json::parse(analyze_report(MelonSpec({2, 3})));
  CHECK(c5["melon"]["prn"].is_null());
  CHECK(c5["melon"]["hasse"].is_null());
}

TEST_CASE("oracle section agrees") {
  ReportOptions opts;
  opts.oracle = true;
  const auto j = json::parse(analyze_report(MelonSpec({1, 3, 3}), opts));
  CHECK(j["oracle"]["melon_uniform"]["agrees"] == true);
  CHECK(j["oracle"]["melon_perm"]["agrees"] == true);
  CHECK(j["oracle"]["line_uniform"]["agrees"] == true);

  opts.budget.max_vertices = 4;
  const auto skipped = json::parse(analyze_report(MelonSpec({1, 3, 3}), opts));
  CHECK(skipped["oracle"]["melon_uniform"]["skipped"] == "size guard");
}

TEST_CASE("reports are reproducible") {
  ReportOptions opts;
  opts.oracle = true;
  CHECK(analyze_report(MelonSpec({2, 3, 3}), opts) == analyze_report(MelonSpec({2, 3, 3}), opts));
  opts.timings = true;
  CHECK(json::parse(analyze_report(MelonSpec({2, 3}), opts)).contains("timings"));
}

TEST_CASE("oracle report") {
  const auto j = json::parse(oracle_report(build_named({NamedKind::Prism3}), "Prism3", false, true));
  CHECK(j["perm"]["k"].is_null());
  const auto k3 = json::parse(oracle_report(build_named({NamedKind::Complete, 3}), "K3", true, false));
  CHECK(k3["uniform"]["k"] == 1);
  SearchBudget small;
  small.max_vertices = 3;
  CHECK_THROWS_AS(oracle_report(build_melon(MelonSpec({3, 3, 3})), "3,3,3", true, false, {false, false, small}), Error);
}

TEST_CASE("dot output") {
  CHECK(dot_output(MelonSpec({3, 3}), "graph").find("graph") == 0);
  CHECK(dot_output(MelonSpec({1, 3, 3}), "line").find("e_0") != std::string::npos);
  CHECK(dot_output(MelonSpec({2, 2, 2}), "hasse").find("digraph") != std::string::npos);
  CHECK_THROWS_AS(dot_output(MelonSpec({3, 4}), "hasse"), Error);
  CHECK_THROWS_AS(dot_output(MelonSpec({3, 4}), "tree"), Error);
}
