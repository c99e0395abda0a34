#include "melonrep/report.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "json.hpp"
#include "melonrep/comparability.hpp"
#include "melonrep/error.hpp"
#include "melonrep/io.hpp"
#include "melonrep/line_analysis.hpp"
#include "melonrep/melon_rep.hpp"

namespace melonrep {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json certificate(const Word& w, const Graph& g, std::string_view what) {
  if (auto bad = first_mismatch(w, g))
    throw Error(ErrorCode::VerificationFailed,
                std::string(what) + " certificate fails on " + bad->first + ", " + bad->second);
  Json out;
  out["word"] = to_string(w);
  if (auto k = is_k_uniform(w)) out["uniform"] = *k;
  else out["uniform"] = nullptr;
  return out;
}

Json realizer_json(const PermSequence& ps, const Graph& g) {
  Json out = certificate(ps.flatten(), g, "realizer");
  Json perms = Json::array();
  for (const auto& p : ps.perms) perms.push_back(to_string(p));
  out["k"] = ps.k();
  out["perms"] = perms;
  return out;
}

Json layers_json(const HasseDiagram& h) {
  int top = 0;
  for (int l : h.layer) top = std::max(top, l);
  Json out = Json::array();
  for (int l = 0; l <= top; ++l) {
    Json row = Json::array();
    for (int v = 0; v < h.orientation.base.order(); ++v)
      if (h.layer[v] == l) row.push_back(h.orientation.base.label(v));
    out.push_back(row);
  }
  return out;
}

Json melon_section(const MelonSpec& spec, const Graph& g) {
  Json out;
  out["vertices"] = g.order();
  out["edges"] = g.size();
  const RepVerdict rep = representation_number(spec);
  out["r"] = rep.r;
  out["reason"] = to_string(rep.reason);
  out["construction"] = rep.construction;
  out["certificate"] = certificate(rep.certificate, g, "melon");
  const auto tag = is_comparability_melon(spec);
  out["comparability"] = tag ? Json(to_string(*tag)) : Json(nullptr);
  if (!tag) {
    out["prn"] = nullptr;
    out["hasse"] = nullptr;
    return out;
  }
  const PrnVerdict p = prn(spec);
  Json pj;
  pj["value"] = p.prn;
  pj["witness"] = to_string(p.witness);
  if (p.witness == PrnWitness::InducedEvenCycle) pj["cycle_length"] = p.cycle_length;
  pj["realizer"] = realizer_json(p.realizer, g);
  out["prn"] = pj;
  const HasseDiagram h = hasse_orientation(spec);
  if (!h.orientation.is_transitive()) throw Error(ErrorCode::VerificationFailed, "Hasse orientation is not transitive");
  Json hj;
  hj["case"] = to_string(h.hasse_case);
  hj["layers"] = layers_json(h);
  out["hasse"] = hj;
  return out;
}

Json line_section(const MelonSpec& spec, const Graph& line) {
  Json out;
  out["vertices"] = line.order();
  out["edges"] = line.size();
  const LineVerdict v = analyse_line(spec);
  out["word_representable"] = v.word_representable;
  out["refuter"] = v.refuter ? Json(*v.refuter) : Json(nullptr);
  out["r"] = v.r ? Json(*v.r) : Json(nullptr);
  out["construction"] = v.construction.empty() ? Json(nullptr) : Json(v.construction);
  out["certificate"] = v.certificate ? certificate(*v.certificate, line, "line") : Json(nullptr);
  out["class"] = to_string(v.comparability.cls);
  out["prn"] = v.comparability.prn ? Json(*v.comparability.prn) : Json(nullptr);
  if (v.comparability.witness) {
    Json emb = Json::object();
    for (const auto& [p, h] : v.comparability.witness->embedding) emb[p] = h;
    out["witness"] = {{"name", v.comparability.witness->name}, {"embedding", emb}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json uniform_json(const Graph& g, const SearchBudget& budget) {
  Json out;
  const auto r = min_uniform_rep(g, budget);
  if (!r) {
    out["k"] = nullptr;
    out["exhaustive"] = true;
    out["note"] = "none up to max_k " + std::to_string(budget.max_k);
    return out;
  }
  out["k"] = r->k;
  out["exhaustive"] = true;
  out["witness"] = certificate(r->witness, g, "oracle");
  out["nodes"] = r->nodes;
  return out;
}

Json perm_json(const Graph& g, const SearchBudget& budget) {
  Json out;
  const auto r = min_perm_rep(g, budget);
  if (!r) {
    out["k"] = nullptr;
    out["exhaustive"] = true;
    out["note"] = "not a comparability graph or more than max_k permutations";
    return out;
  }
  out["k"] = r->k;
  out["exhaustive"] = true;
  out["realizer"] = realizer_json(r->realizer, g);
  out["nodes"] = r->nodes;
  return out;
}

// Oracle cross-check inside analyze: sizes above the budget are skipped
// rather than fatal, and an exhausted node budget is reported as such.
Json guarded(const std::function<Json()>& run) {
  try {
    return run();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeGuard) return Json{{"skipped", "size guard"}};
    if (e.code() == ErrorCode::NodeLimitExceeded) return Json{{"skipped", "node limit"}};
    throw;
  }
}

void agree(Json& check, const Json& claimed) {
  if (check.contains("skipped")) return;
  check["agrees"] = check["k"] == claimed;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string analyze_report(const MelonSpec& spec, const ReportOptions& opts) {
  opts.budget.validate();
  Json report;
  report["schema"] = kReportSchema;
  report["input"] = {{"spec", spec.to_string()}, {"lengths", spec.lengths()}};
  const Graph g = build_melon(spec);
  const Graph line = line_graph(g);
  Json timings;

  auto t0 = Clock::now();
  report["melon"] = melon_section(spec, g);
  timings["melon_ms"] = ms_since(t0);

  t0 = Clock::now();
  report["line"] = line_section(spec, line);
  timings["line_ms"] = ms_since(t0);

  if (opts.oracle) {
    t0 = Clock::now();
    Json o;
    Json mu = guarded([&] { return uniform_json(g, opts.budget); });
    agree(mu, report["melon"]["r"]);
    o["melon_uniform"] = mu;
    if (!report["melon"]["prn"].is_null()) {
      Json mp = guarded([&] { return perm_json(g, opts.budget); });
      agree(mp, report["melon"]["prn"]["value"]);
      o["melon_perm"] = mp;
    }
    Json lu = guarded([&] { return uniform_json(line, opts.budget); });
    agree(lu, report["line"]["r"]);
    o["line_uniform"] = lu;
    if (!report["line"]["prn"].is_null()) {
      Json lp = guarded([&] { return perm_json(line, opts.budget); });
      agree(lp, report["line"]["prn"]);
      o["line_perm"] = lp;
    }
    report["oracle"] = o;
    timings["oracle_ms"] = ms_since(t0);
  }
  if (opts.timings) report["timings"] = timings;
  return dump(report);
}

std::string oracle_report(const Graph& g, std::string_view input, bool uniform, bool perm, const ReportOptions& opts) {
  opts.budget.validate();
  Json report;
  report["schema"] = kReportSchema;
  report["input"] = {{"graph", input}, {"vertices", g.order()}, {"edges", g.size()}};
  report["budget"] = {{"max_vertices", opts.budget.max_vertices},
                      {"max_k", opts.budget.max_k},
                      {"node_limit", opts.budget.node_limit}};
  Json timings;
  if (uniform) {
    const auto t0 = Clock::now();
    report["uniform"] = uniform_json(g, opts.budget);
    timings["uniform_ms"] = ms_since(t0);
  }
  if (perm) {
    const auto t0 = Clock::now();
    report["perm"] = perm_json(g, opts.budget);
    timings["perm_ms"] = ms_since(t0);
  }
  if (opts.timings) report["timings"] = timings;
  return dump(report);
}

std::string dot_output(const MelonSpec& spec, std::string_view what) {
  const std::string name = "melon_" + spec.to_string();
  if (what == "graph") return to_dot(build_melon(spec), name);
  if (what == "line") return to_dot(line_graph(build_melon(spec)), "line_" + spec.to_string());
  if (what == "hasse") return hasse_dot(hasse_orientation(spec), "hasse_" + spec.to_string());
  throw Error(ErrorCode::PreconditionViolated, "--what must be graph, line or hasse");
}

}  // namespace melonrep
