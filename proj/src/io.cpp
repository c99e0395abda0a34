#include "melonrep/io.hpp"

#include <fstream>
#include <sstream>

#include "melonrep/error.hpp"

namespace melonrep {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Graph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 2 && tok[0] == "vertex") {
      g.add_vertex(tok[1]);
    } else if (tok.size() == 2) {
      if (tok[0] == tok[1]) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": self-loop");
      g.add_edge(tok[0], tok[1]);
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'u v' or 'vertex u'");
    }
  }
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  std::vector<char> seen(g.order(), 0);
  for (const auto& e : g.edges()) {
    seen[e.u] = seen[e.v] = 1;
    out += g.label(e.u) + " " + g.label(e.v) + "\n";
  }
  for (int v = 0; v < g.order(); ++v)
    if (!seen[v]) out += "vertex " + g.label(v) + "\n";
  return out;
}

std::vector<Word> parse_words(std::string_view text) {
  std::vector<Word> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = strip_comment(line);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_word(body));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + quoted(name) + " {\n";
  for (const auto& v : g.labels()) out += "  " + quoted(v) + ";\n";
  for (const auto& e : g.edges()) out += "  " + quoted(g.label(e.u)) + " -- " + quoted(g.label(e.v)) + ";\n";
  return out + "}\n";
}

}  // namespace melonrep
