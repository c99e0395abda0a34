#include "melonrep/orientation.hpp"

#include <deque>

#include "melonrep/error.hpp"

namespace melonrep {

namespace {

// dir[e] is -1 while free, 0 for u->v and 1 for v->u.
class OrientationSearch {
 public:
  explicit OrientationSearch(const Graph& g) : g_(g), id_(g.order(), std::vector<int>(g.order(), -1)) {
    const auto& edges = g.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      id_[edges[e].u][edges[e].v] = e;
      id_[edges[e].v][edges[e].u] = e;
    }
    gamma_.resize(edges.size());
    apex_.resize(edges.size());
    for (int a = 0; a < g.order(); ++a) {
      const auto nb = g.neighbours(a);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = 0; j < nb.size(); ++j) {
          if (i == j) continue;
          if (g.adjacent(nb[i], nb[j])) {
            if (i < j) apex_[id_[nb[i]][nb[j]]].push_back(a);
          } else {
            gamma_[id_[a][nb[i]]].push_back({id_[a][nb[j]], a});
          }
        }
    }
  }

  std::optional<Orientation> run() {
    std::vector<signed char> dir(g_.size(), -1);
    if (!branch(dir)) return std::nullopt;
    Orientation out{g_, {}};
    for (int e = 0; e < g_.size(); ++e) {
      const auto& edge = g_.edges()[e];
      out.arcs.emplace_back(dir[e] == 0 ? edge.u : edge.v, dir[e] == 0 ? edge.v : edge.u);
    }
    return out;
  }

 private:
  struct Link {
    int edge;
    int shared;
  };

  int tail(int e, const std::vector<signed char>& dir) const {
    return dir[e] == 0 ? g_.edges()[e].u : g_.edges()[e].v;
  }

  static signed char with_tail(const Graph::Edge& edge, int t) { return edge.u == t ? 0 : 1; }

  bool set(int e, signed char d, std::vector<signed char>& dir, std::deque<int>& queue) const {
    if (dir[e] == d) return true;
    if (dir[e] != -1) return false;
    dir[e] = d;
    queue.push_back(e);
    return true;
  }

  // Arc x->y and y->z inside a triangle force x->z.
  bool close_triangle(int a, int b, int c, std::vector<signed char>& dir, std::deque<int>& queue) const {
    const int tri[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const int first = id_[tri[i]][tri[j]];
        if (dir[first] < 0 || tail(first, dir) != tri[i]) continue;
        const int k = 3 - i - j;
        const int second = id_[tri[j]][tri[k]];
        if (dir[second] < 0 || tail(second, dir) != tri[j]) continue;
        const int third = id_[tri[i]][tri[k]];
        if (!set(third, with_tail(g_.edges()[third], tri[i]), dir, queue)) return false;
      }
    return true;
  }

  bool propagate(std::vector<signed char>& dir, std::deque<int>& queue) const {
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      const auto& edge = g_.edges()[e];
      const int t = tail(e, dir);
      for (const Link& link : gamma_[e]) {
        const auto& other = g_.edges()[link.edge];
        const int other_end = other.u == link.shared ? other.v : other.u;
        const int want_tail = t == link.shared ? link.shared : other_end;
        if (!set(link.edge, with_tail(other, want_tail), dir, queue)) return false;
      }
      for (int c : apex_[e])
        if (!close_triangle(edge.u, edge.v, c, dir, queue)) return false;
    }
    return true;
  }

  bool branch(std::vector<signed char>& dir) const {
    int free_edge = -1;
    for (int e = 0; e < g_.size() && free_edge < 0; ++e)
      if (dir[e] < 0) free_edge = e;
    if (free_edge < 0) return true;
    for (signed char d : {0, 1}) {
      auto trial = dir;
      std::deque<int> queue;
      set(free_edge, d, trial, queue);
      if (propagate(trial, queue) && branch(trial)) {
        dir = std::move(trial);
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<int>> id_;
  std::vector<std::vector<Link>> gamma_;
  std::vector<std::vector<int>> apex_;
};

}  // namespace

std::optional<Orientation> find_transitive_orientation(const Graph& g, int max_edges) {
  if (g.size() > max_edges)
    throw Error(ErrorCode::SizeGuard, "orientation search limited to " + std::to_string(max_edges) + " edges");
  auto found = OrientationSearch(g).run();
  if (found && !found->is_transitive())
    throw Error(ErrorCode::VerificationFailed, "orientation search produced a non-transitive orientation");
  return found;
}

std::optional<std::string> neighborhood_comparability_check(const Graph& g, int max_edges) {
  for (int v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbours(v);
    const Graph sub = g.induced(nb);
    if (!find_transitive_orientation(sub, max_edges)) return g.label(v);
  }
  return std::nullopt;
}

}  // namespace melonrep
