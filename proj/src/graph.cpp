#include "melonrep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <set>

#include "melonrep/error.hpp"

namespace melonrep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::MissingLetter: return "MissingLetter";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NodeLimitExceeded: return "NodeLimitExceeded";
    case ErrorCode::NotComparability: return "NotComparability";
    case ErrorCode::NotWordRepresentable: return "NotWordRepresentable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Graph

int Graph::add_vertex(std::string_view label) {
  auto it = index_.find(std::string(label));
  if (it != index_.end()) return it->second;
  const int id = order();
  labels_.emplace_back(label);
  index_.emplace(std::string(label), id);
  for (auto& row : adj_) row.push_back(0);
  adj_.emplace_back(labels_.size(), 0);
  return id;
}

void Graph::add_edge(std::string_view a, std::string_view b, std::string_view edge_label) {
  const int u = add_vertex(a);
  const int v = add_vertex(b);
  add_edge(u, v, edge_label);
}

void Graph::add_edge(int a, int b, std::string_view edge_label) {
  if (a == b) throw Error(ErrorCode::SpecInvalid, "self-loop at " + labels_[a]);
  if (adj_[a][b]) return;
  adj_[a][b] = adj_[b][a] = 1;
  edges_.push_back(Edge{std::min(a, b), std::max(a, b), std::string(edge_label)});
}

bool Graph::remove_edge(int a, int b) {
  if (!adj_[a][b]) return false;
  adj_[a][b] = adj_[b][a] = 0;
  const int u = std::min(a, b);
  const int v = std::max(a, b);
  std::erase_if(edges_, [&](const Edge& e) { return e.u == u && e.v == v; });
  return true;
}

std::optional<int> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::index(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(label) + "'");
}

bool Graph::adjacent(std::string_view a, std::string_view b) const {
  return adjacent(index(a), index(b));
}

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 0; u < order(); ++u)
    if (adj_[v][u]) out.push_back(u);
  return out;
}

int Graph::degree(int v) const {
  return static_cast<int>(std::count(adj_[v].begin(), adj_[v].end(), 1));
}

std::string Graph::edge_name(const Edge& e) const {
  if (!e.label.empty()) return e.label;
  return labels_[e.u] + "-" + labels_[e.v];
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Graph out;
  for (int v : keep) out.add_vertex(labels_[v]);
  for (const auto& e : edges_) {
    if (std::binary_search(keep.begin(), keep.end(), e.u) &&
        std::binary_search(keep.begin(), keep.end(), e.v))
      out.add_edge(labels_[e.u], labels_[e.v], e.label);
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (const auto& l : a.labels_)
    if (!b.find(l)) return false;
  for (const auto& e : a.edges_)
    if (!b.adjacent(a.labels_[e.u], a.labels_[e.v])) return false;
  return true;
}

// ---------------------------------------------------------------- MelonSpec

MelonSpec::MelonSpec(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw Error(ErrorCode::SpecInvalid, "melon needs at least one path");
  for (int len : lengths_)
    if (len < 1) throw Error(ErrorCode::SpecInvalid, "path length must be positive");
  if (count_equal(1) > 1)
    throw Error(ErrorCode::SpecInvalid, "at most one constituent path may have length one");
}

MelonSpec MelonSpec::parse(std::string_view text) {
  std::vector<int> lengths;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const bool last = comma == text.size() || comma + 1 == text.size();
    if (item.empty()) {
      if (!(last && !lengths.empty())) throw Error(ErrorCode::ParseError, "empty entry in melon spec");
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc{} || ptr != item.data() + item.size())
        throw Error(ErrorCode::ParseError, "bad length '" + std::string(item) + "'");
      lengths.push_back(value);
    }
    pos = comma + 1;
  }
  if (lengths.empty()) throw Error(ErrorCode::ParseError, "empty melon spec");
  return MelonSpec(std::move(lengths));
}

int MelonSpec::vertex_count() const {
  int n = 2;
  for (int len : lengths_) n += len - 1;
  return n;
}

int MelonSpec::edge_count() const {
  int m = 0;
  for (int len : lengths_) m += len;
  return m;
}

bool MelonSpec::has_edge_path() const { return count_equal(1) > 0; }

int MelonSpec::count_equal(int len) const {
  return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), len));
}

int MelonSpec::count_at_least(int len) const {
  return static_cast<int>(std::count_if(lengths_.begin(), lengths_.end(), [len](int l) { return l >= len; }));
}

std::string MelonSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out;
}

namespace melon_labels {
std::string intermediate(int path, int j) { return "p" + std::to_string(path) + "_" + std::to_string(j); }
std::string edge_at_zero(int path) { return "e" + std::to_string(path); }
std::string edge_at_zero_prime(int path) { return "e" + std::to_string(path) + "p"; }
std::string edge_interior(int path, int j) { return "e" + std::to_string(path) + "_" + std::to_string(j); }
}  // namespace melon_labels

// ---------------------------------------------------------------- Orientation

bool Orientation::is_transitive() const {
  const int n = base.order();
  if (arcs.size() != base.edges().size()) return false;
  std::vector<std::vector<char>> dir(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto [t, h] = arcs[i];
    const auto& e = base.edges()[i];
    if (!((t == e.u && h == e.v) || (t == e.v && h == e.u))) return false;
    dir[t][h] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!dir[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (dir[b][c] && !dir[a][c]) return false;
    }
  return true;
}

// ---------------------------------------------------------------- builders

Graph build_melon(const MelonSpec& spec) {
  using namespace melon_labels;
  Graph g;
  g.add_vertex(kZero);
  g.add_vertex(kZeroPrime);
  for (int i = 1; i <= spec.paths(); ++i) {
    const int len = spec.length(i - 1);
    if (len == 1) {
      g.add_edge(kZero, kZeroPrime, kDirectEdge);
      continue;
    }
    g.add_edge(kZeroPrime, intermediate(i, 1), edge_at_zero_prime(i));
    for (int j = 1; j + 1 < len; ++j) g.add_edge(intermediate(i, j), intermediate(i, j + 1), edge_interior(i, j));
    g.add_edge(intermediate(i, len - 1), kZero, edge_at_zero(i));
  }
  return g;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::SpecInvalid, what);
}

Graph numbered(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  return g;
}

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g = numbered(n);
  for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
  return g;
}

Graph km_box_k2(int m) {
  Graph g;
  for (int i = 1; i <= m; ++i) g.add_vertex(melon_labels::edge_at_zero(i));
  for (int i = 1; i <= m; ++i) g.add_vertex(melon_labels::edge_at_zero_prime(i));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      g.add_edge(i, j);
      g.add_edge(m + i, m + j);
    }
  for (int i = 0; i < m; ++i) g.add_edge(i, m + i);
  return g;
}

}  // namespace

Graph build_named(const NamedGraph& named) {
  switch (named.kind) {
    case NamedKind::Path: {
      require(named.a >= 1, "Path needs n >= 1");
      Graph g = numbered(named.a);
      for (int i = 0; i + 1 < named.a; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case NamedKind::Cycle: {
      require(named.a >= 3, "Cycle needs n >= 3");
      Graph g = numbered(named.a);
      for (int i = 0; i < named.a; ++i) g.add_edge(i, (i + 1) % named.a);
      return g;
    }
    case NamedKind::Complete: {
      require(named.a >= 1, "Complete needs n >= 1");
      Graph g = numbered(named.a);
      for (int i = 0; i < named.a; ++i)
        for (int j = i + 1; j < named.a; ++j) g.add_edge(i, j);
      return g;
    }
    case NamedKind::CompleteBipartite: {
      require(named.a >= 1 && named.b >= 1, "CompleteBipartite needs a, b >= 1");
      Graph g;
      for (int i = 1; i <= named.a; ++i) g.add_vertex("a" + std::to_string(i));
      for (int j = 1; j <= named.b; ++j) g.add_vertex("b" + std::to_string(j));
      for (int i = 0; i < named.a; ++i)
        for (int j = 0; j < named.b; ++j) g.add_edge(i, named.a + j);
      return g;
    }
    case NamedKind::Book:
      require(named.a >= 1, "Book needs m >= 1");
      return build_melon(MelonSpec([&] {
        std::vector<int> l{1};
        l.insert(l.end(), named.a, 3);
        return l;
      }()));
    case NamedKind::TriangularBook:
      require(named.a >= 1, "TriangularBook needs m >= 1");
      return build_melon(MelonSpec([&] {
        std::vector<int> l{1};
        l.insert(l.end(), named.a, 2);
        return l;
      }()));
    case NamedKind::Prism3:
      return km_box_k2(3);
    case NamedKind::KmBoxK2:
      require(named.a >= 1, "KmBoxK2 needs m >= 1");
      return km_box_k2(named.a);
    case NamedKind::T2:
      return from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 7}});
    case NamedKind::S1:
      return from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {1, 6}});
    case NamedKind::S2:
      return from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {1, 6}, {4, 5}});
    case NamedKind::H: {
      require(named.a >= 2, "H needs m >= 2");
      const int m = named.a;
      Graph g;
      for (int i = 1; i <= m; ++i) g.add_vertex("a" + std::to_string(i));
      for (int i = 1; i <= m; ++i) g.add_vertex("b" + std::to_string(i));
      const int x = g.add_vertex("x");
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          g.add_edge(i, j);
          g.add_edge(m + i, m + j);
        }
      for (int v = 0; v < 2 * m; ++v) g.add_edge(v, x);
      g.add_edge(0, m);
      g.add_edge(1, m + 1);
      return g;
    }
  }
  throw Error(ErrorCode::SpecInvalid, "unknown named graph");
}

std::optional<NamedGraph> parse_named(std::string_view text) {
  const std::string s(text);
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  if (s == "Prism3" || s == "Pr3") return NamedGraph{NamedKind::Prism3};
  if (s == "T2") return NamedGraph{NamedKind::T2};
  if (s == "S1") return NamedGraph{NamedKind::S1};
  if (s == "S2") return NamedGraph{NamedKind::S2};
  if (std::regex_match(s, m, std::regex(R"(K(\d+)xK2)"))) return NamedGraph{NamedKind::KmBoxK2, num(1)};
  if (std::regex_match(s, m, std::regex(R"(K(\d+),(\d+))"))) return NamedGraph{NamedKind::CompleteBipartite, num(1), num(2)};
  if (std::regex_match(s, m, std::regex(R"(([PCKBAH])(\d+))"))) {
    static const std::pair<char, NamedKind> kinds[] = {
        {'P', NamedKind::Path}, {'C', NamedKind::Cycle}, {'K', NamedKind::Complete},
        {'B', NamedKind::Book}, {'A', NamedKind::TriangularBook}, {'H', NamedKind::H}};
    for (auto [c, kind] : kinds)
      if (m[1].str()[0] == c) return NamedGraph{kind, num(2)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- operations

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "line graph of an edgeless graph");
  const auto& edges = g.edges();
  Graph out;
  for (const auto& e : edges) out.add_vertex(g.edge_name(e));
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& a = edges[i];
      const auto& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

Graph local_complement(const Graph& g, std::string_view v) {
  const int pivot = g.index(v);
  Graph out = g;
  const auto nbrs = g.neighbours(pivot);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.adjacent(nbrs[i], nbrs[j]))
        out.remove_edge(nbrs[i], nbrs[j]);
      else
        out.add_edge(nbrs[i], nbrs[j]);
    }
  return out;
}

Graph delete_vertex(const Graph& g, std::string_view v) {
  const int gone = g.index(v);
  std::vector<int> keep;
  for (int u = 0; u < g.order(); ++u)
    if (u != gone) keep.push_back(u);
  return g.induced(keep);
}

}  // namespace melonrep
