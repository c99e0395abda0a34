#include "melonrep/search.hpp"

#include <algorithm>
#include <deque>

#include "melonrep/error.hpp"

namespace melonrep {

namespace {

// Pattern order: each next vertex has the most already-ordered neighbours,
// ties broken by degree and then by index.
std::vector<int> pattern_order(const Graph& h) {
  const int n = h.order();
  std::vector<int> order;
  std::vector<int> links(n, 0);
  std::vector<char> taken(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (taken[v]) continue;
      if (best < 0 || links[v] > links[best] ||
          (links[v] == links[best] && h.degree(v) > h.degree(best)))
        best = v;
    }
    taken[best] = 1;
    order.push_back(best);
    for (int u : h.neighbours(best)) ++links[u];
  }
  return order;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& pattern, bool exact)
      : host_(host), pattern_(pattern), exact_(exact), order_(pattern_order(pattern)),
        image_(pattern.order(), -1), used_(host.order(), 0) {}

  std::optional<Embedding> run() {
    if (!extend(0)) return std::nullopt;
    Embedding out;
    for (int x = 0; x < pattern_.order(); ++x) out.emplace_back(pattern_.label(x), host_.label(image_[x]));
    return out;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int x = order_[depth];
    const int need = pattern_.degree(x);
    for (int c = 0; c < host_.order(); ++c) {
      if (used_[c]) continue;
      const int have = host_.degree(c);
      if (exact_ ? have != need : have < need) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int y = order_[i];
        ok = pattern_.adjacent(x, y) == host_.adjacent(c, image_[y]);
      }
      if (!ok) continue;
      image_[x] = c;
      used_[c] = 1;
      if (extend(depth + 1)) return true;
      used_[c] = 0;
      image_[x] = -1;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  bool exact_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern, int max_vertices) {
  if (host.order() > max_vertices)
    throw Error(ErrorCode::SizeGuard, "induced-subgraph search limited to " + std::to_string(max_vertices) + " vertices");
  if (pattern.order() > host.order()) return std::nullopt;
  return EmbeddingSearch(host, pattern, false).run();
}

std::optional<Embedding> is_isomorphic(const Graph& g, const Graph& h, int max_vertices) {
  if (g.order() > max_vertices || h.order() > max_vertices)
    throw Error(ErrorCode::SizeGuard, "isomorphism search limited to " + std::to_string(max_vertices) + " vertices");
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  return EmbeddingSearch(h, g, true).run();
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbours(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? out.left : out.right).push_back(g.label(v));
  return out;
}

}  // namespace melonrep
