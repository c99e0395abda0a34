#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "melonrep/error.hpp"
#include "melonrep/io.hpp"
#include "melonrep/report.hpp"
#include "melonrep/words.hpp"

using namespace melonrep;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kSize = 3, kBug = 4, kNodes = 5 };

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SpecInvalid:
    case ErrorCode::UnknownLetter:
    case ErrorCode::MissingLetter:
    case ErrorCode::EmptyWord:
    case ErrorCode::EmptyEdgeSet:
    case ErrorCode::UnknownVertex:
    case ErrorCode::NotComparability:
    case ErrorCode::PreconditionViolated:
      return kInput;
    case ErrorCode::SizeGuard:
      return kSize;
    case ErrorCode::NodeLimitExceeded:
      return kNodes;
    case ErrorCode::VerificationFailed:
      return kBug;
    default:
      return kMismatch;
  }
}

// A file holds an edge list; otherwise a named graph ("C6", "Prism3") or a
// melon spec, optionally as its line graph.
Graph load_graph(const std::string& arg, bool line) {
  Graph g;
  if (std::filesystem::is_regular_file(arg)) g = parse_edge_list(read_file(arg));
  else if (auto named = parse_named(arg)) g = build_named(*named);
  else g = build_melon(MelonSpec::parse(arg));
  return line ? line_graph(g) : g;
}

int run_check(const std::string& graph_file, const std::string& word_file) {
  const Graph g = parse_edge_list(read_file(graph_file));
  const auto words = parse_words(read_file(word_file));
  if (words.size() != 1) throw Error(ErrorCode::ParseError, word_file + ": expected exactly one word");
  const Word& w = words.front();
  alternation_graph(w, g.labels());  // rejects unknown or missing letters
  if (auto bad = first_mismatch(w, g)) {
    const bool edge = g.adjacent(bad->first, bad->second);
    std::cout << "MISMATCH " << bad->first << " " << bad->second << ": "
              << (edge ? "adjacent but not alternating" : "alternating but not adjacent") << "\n";
    return kMismatch;
  }
  const auto k = is_k_uniform(w);
  std::cout << "REPRESENTS, " << (k ? std::to_string(*k) + "-uniform" : std::string("not uniform")) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"melonrep: word-representants of melon graphs and their line graphs"};
  app.require_subcommand(1);

  ReportOptions opts;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", opts.budget.max_vertices, "oracle size guard")->capture_default_str();
    sub->add_option("--max-k", opts.budget.max_k, "largest k tried by the oracle")->capture_default_str();
    sub->add_option("--node-limit", opts.budget.node_limit, "oracle search node budget")->capture_default_str();
    sub->add_flag("--timings", opts.timings, "add wall-clock timings (breaks byte-identical output)");
  };

  std::string spec_text, what = "graph", graph_arg, graph_file, word_file;
  bool uniform = false, perm = false, line = false;

  auto* analyze = app.add_subcommand("analyze", "classify a melon and its line graph (JSON)");
  analyze->add_option("spec", spec_text, "path lengths, e.g. 1,3,3,4")->required();
  analyze->add_flag("--oracle", opts.oracle, "cross-check against the exhaustive oracles");
  add_budget(analyze);

  auto* check = app.add_subcommand("check", "does a word represent a graph?");
  check->add_option("graph", graph_file, "edge-list file")->required();
  check->add_option("word", word_file, "file holding one word")->required();

  auto* dot = app.add_subcommand("dot", "DOT output for a melon, its line graph or its Hasse diagram");
  dot->add_option("spec", spec_text, "path lengths")->required();
  dot->add_option("--what", what, "graph, line or hasse")
      ->check(CLI::IsMember({"graph", "line", "hasse"}))
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "exhaustive representation numbers (JSON)");
  oracle->add_option("graph", graph_arg, "edge-list file, named graph or melon spec")->required();
  oracle->add_flag("--uniform", uniform, "minimum uniform representation");
  oracle->add_flag("--perm", perm, "minimum permutational representation");
  oracle->add_flag("--line", line, "use the line graph of the input");
  add_budget(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) {
      std::cout << analyze_report(MelonSpec::parse(spec_text), opts);
    } else if (*check) {
      return run_check(graph_file, word_file);
    } else if (*dot) {
      std::cout << dot_output(MelonSpec::parse(spec_text), what);
    } else if (*oracle) {
      if (!uniform && !perm) uniform = perm = true;
      std::cout << oracle_report(load_graph(graph_arg, line), graph_arg, uniform, perm, opts);
    }
  } catch (const Error& e) {
    std::cerr << "melonrep: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kOk;
}
