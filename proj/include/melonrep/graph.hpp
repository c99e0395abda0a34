#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace melonrep {

/// Undirected simple graph over string-labelled vertices.
///
/// Vertices keep their insertion order, and every algorithm in the library
/// iterates in that order, so emitted words and reports are reproducible.
/// Edges may carry an optional label which becomes the vertex name in the
/// line graph.
class Graph {
 public:
  struct Edge {
    int u;  // u < v
    int v;
    std::string label;
  };

  Graph() = default;

  /// Adds a vertex if absent; returns its index either way.
  int add_vertex(std::string_view label);
  void add_edge(std::string_view a, std::string_view b, std::string_view edge_label = {});
  void add_edge(int a, int b, std::string_view edge_label = {});
  bool remove_edge(int a, int b);

  [[nodiscard]] int order() const { return static_cast<int>(labels_.size()); }
  [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }

  [[nodiscard]] const std::string& label(int v) const { return labels_[v]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::optional<int> find(std::string_view label) const;
  /// Index of `label`; throws UnknownVertex when absent.
  [[nodiscard]] int index(std::string_view label) const;

  [[nodiscard]] bool adjacent(int a, int b) const { return adj_[a][b] != 0; }
  [[nodiscard]] bool adjacent(std::string_view a, std::string_view b) const;
  [[nodiscard]] std::vector<int> neighbours(int v) const;
  [[nodiscard]] int degree(int v) const;

  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  /// The edge label when one was given, otherwise "u-v" with u before v.
  [[nodiscard]] std::string edge_name(const Edge& e) const;

  /// Subgraph induced by `vertices`, kept in this graph's vertex order.
  [[nodiscard]] Graph induced(std::span<const int> vertices) const;

  /// Same labelled vertex set and edge set; order and edge labels ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<char>> adj_;
  std::vector<Edge> edges_;
};

/// Constituent-path lengths of a melon graph.
class MelonSpec {
 public:
  /// Throws SpecInvalid when a length is < 1, when two lengths equal 1, or
  /// when the list is empty.
  explicit MelonSpec(std::vector<int> lengths);

  /// Parses "1,3,3,4"; a trailing comma is accepted ("1," is K_2).
  /// Throws ParseError on malformed text, SpecInvalid on bad values.
  static MelonSpec parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& lengths() const { return lengths_; }
  [[nodiscard]] int paths() const { return static_cast<int>(lengths_.size()); }
  [[nodiscard]] int length(int i) const { return lengths_[i]; }
  [[nodiscard]] int vertex_count() const;
  [[nodiscard]] int edge_count() const;
  [[nodiscard]] bool has_edge_path() const;
  [[nodiscard]] int count_equal(int len) const;
  [[nodiscard]] int count_at_least(int len) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MelonSpec&, const MelonSpec&) = default;

 private:
  std::vector<int> lengths_;
};

/// Canonical labels of a melon graph. Paths are numbered from 1 in spec
/// order; intermediate vertex j of path i is counted from the 0p end.
namespace melon_labels {
inline constexpr std::string_view kZero = "0";
inline constexpr std::string_view kZeroPrime = "0p";
std::string intermediate(int path, int j);
/// Line-graph labels: edge at 0, edge at 0p, interior edge j (from the 0p
/// side) of path i, and the 0-0p edge itself.
std::string edge_at_zero(int path);
std::string edge_at_zero_prime(int path);
std::string edge_interior(int path, int j);
inline constexpr std::string_view kDirectEdge = "e_0";
}  // namespace melon_labels

/// A direction for every edge of `base`. arcs[i] belongs to base.edges()[i]
/// and is stored as (tail, head); in Hasse output the tail is the smaller
/// element.
struct Orientation {
  Graph base;
  std::vector<std::pair<int, int>> arcs;

  /// Exhaustive triple scan: a->b and b->c imply an arc a->c.
  [[nodiscard]] bool is_transitive() const;
};

Graph build_melon(const MelonSpec& spec);

enum class NamedKind {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Book,
  TriangularBook,
  Prism3,
  KmBoxK2,
  T2,
  S1,
  S2,
  H,
};

struct NamedGraph {
  NamedKind kind;
  int a = 0;
  int b = 0;
};

Graph build_named(const NamedGraph& named);

/// Recognises "P4", "C6", "K3", "K2,3", "B3", "A3", "Prism3", "K3xK2", "T2",
/// "S1", "S2" and "H3".
std::optional<NamedGraph> parse_named(std::string_view text);

/// Vertices are the edges of `g` in insertion order, named by edge_name().
/// Throws EmptyEdgeSet.
Graph line_graph(const Graph& g);

/// Complements the edges inside the open neighbourhood of `v`; edges at `v`
/// are untouched.
Graph local_complement(const Graph& g, std::string_view v);
Graph delete_vertex(const Graph& g, std::string_view v);

}  // namespace melonrep
