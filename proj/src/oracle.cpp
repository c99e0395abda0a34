#include "melonrep/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <unordered_map>

#include "melonrep/error.hpp"
#include "melonrep/orientation.hpp"

namespace melonrep {

void SearchBudget::validate() const {
  if (max_vertices <= 0 || max_k <= 0 || node_limit <= 0)
    throw Error(ErrorCode::PreconditionViolated, "search budget fields must be positive");
}

namespace {

void guard(const Graph& g, const SearchBudget& budget) {
  budget.validate();
  if (g.order() > budget.max_vertices)
    throw Error(ErrorCode::SizeGuard, "graph has " + std::to_string(g.order()) + " vertices, budget allows " +
                                          std::to_string(budget.max_vertices));
  if (g.order() == 0) throw Error(ErrorCode::PreconditionViolated, "graph has no vertices");
}

// Builds a k-uniform word one vertex at a time. Every inserted vertex gets
// all k occurrences at once, so the partial word is exactly the restriction
// of any completion to the placed vertices and the alternation test after
// each insertion is exact. Uniform words represent the same graph under
// cyclic shifts, so the first vertex's first occurrence stays at position 0.
class UniformSearch {
 public:
  UniformSearch(const Graph& g, int k, const std::vector<int>& seed, std::int64_t node_limit)
      : g_(g), k_(k), limit_(node_limit), seed_(seed) {
    make_order();
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> word;
    if (!dfs(0, word, !seed_.empty())) return std::nullopt;
    return word;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  void make_order() {
    const int n = g_.order();
    std::vector<char> placed(n, 0);
    for (int v : seed_)
      if (!placed[v]) {
        placed[v] = 1;
        order_.push_back(v);
      }
    std::vector<int> links(n, 0);
    for (int v : order_)
      for (int u : g_.neighbours(v)) ++links[u];
    while (static_cast<int>(order_.size()) < n) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] || (links[v] == links[best] && g_.degree(v) > g_.degree(best)))
          best = v;
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int u : g_.neighbours(best)) ++links[u];
    }
    std::vector<int> count(n, 0);
    for (int v : seed_) ++count[v];
    seed_usable_.assign(order_.size(), 0);
    for (std::size_t t = 0; t < order_.size(); ++t) seed_usable_[t] = count[order_[t]] == k_;
  }

  // Gaps at which the seed places `x` relative to the letters of order_[0..t).
  std::vector<int> seed_gaps(std::size_t t) const {
    std::vector<char> in(g_.order(), 0);
    for (std::size_t i = 0; i < t; ++i) in[order_[i]] = 1;
    const int x = order_[t];
    std::vector<int> gaps;
    int before = 0;
    for (int v : seed_) {
      if (v == x) gaps.push_back(before);
      else if (in[v]) ++before;
    }
    return gaps;
  }

  bool consistent(const std::vector<int>& word, int x, std::size_t placed) const {
    // state: 0 unseen, 1 x was last, 2 y was last
    std::vector<signed char> last(g_.order(), 0);
    std::vector<char> bad(g_.order(), 0);
    for (int c : word) {
      if (c == x) {
        for (std::size_t i = 0; i < placed; ++i) {
          const int y = order_[i];
          if (last[y] == 1) bad[y] = 1;
          last[y] = 1;
        }
      } else {
        if (last[c] == 2) bad[c] = 1;
        last[c] = 2;
      }
    }
    for (std::size_t i = 0; i < placed; ++i) {
      const int y = order_[i];
      if (!bad[y] != g_.adjacent(x, y)) return false;
    }
    return true;
  }

  std::vector<int> insert(const std::vector<int>& word, int x, const std::vector<int>& gaps) const {
    std::vector<int> out;
    out.reserve(word.size() + gaps.size());
    std::size_t gi = 0;
    for (std::size_t p = 0; p <= word.size(); ++p) {
      while (gi < gaps.size() && gaps[gi] == static_cast<int>(p)) {
        out.push_back(x);
        ++gi;
      }
      if (p < word.size()) out.push_back(word[p]);
    }
    return out;
  }

  bool try_gaps(std::size_t t, std::vector<int>& word, const std::vector<int>& gaps, bool on_seed) {
    if (++nodes_ > limit_)
      throw Error(ErrorCode::NodeLimitExceeded, "uniform search exceeded " + std::to_string(limit_) + " nodes");
    auto next = insert(word, order_[t], gaps);
    if (!consistent(next, order_[t], t)) return false;
    if (dfs(t + 1, next, on_seed)) {
      word = std::move(next);
      return true;
    }
    return false;
  }

  bool dfs(std::size_t t, std::vector<int>& word, bool on_seed) {
    if (t == order_.size()) return true;
    const int x = order_[t];
    if (t == 0) {
      std::vector<int> next(k_, x);
      if (++nodes_ > limit_)
        throw Error(ErrorCode::NodeLimitExceeded, "uniform search exceeded " + std::to_string(limit_) + " nodes");
      if (dfs(1, next, on_seed && seed_usable_[0])) {
        word = std::move(next);
        return true;
      }
      return false;
    }
    std::vector<int> preferred;
    if (on_seed && seed_usable_[t]) {
      preferred = seed_gaps(t);
      if (try_gaps(t, word, preferred, true)) return true;
    }
    // Non-decreasing gap tuples in lexicographic order; gap 0 is excluded.
    const int len = static_cast<int>(word.size());
    std::vector<int> gaps(k_, 1);
    while (true) {
      if (gaps != preferred && try_gaps(t, word, gaps, false)) return true;
      int i = k_ - 1;
      while (i >= 0 && gaps[i] == len) --i;
      if (i < 0) break;
      ++gaps[i];
      for (int j = i + 1; j < k_; ++j) gaps[j] = gaps[i];
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::int64_t limit_;
  std::int64_t nodes_ = 0;
  std::vector<int> seed_;
  std::vector<int> order_;
  std::vector<char> seed_usable_;
};

Word to_labels(const Graph& g, const std::vector<int>& word) {
  Word out;
  for (int v : word) out.push_back(g.label(v));
  return out;
}

std::vector<int> seed_indices(const Graph& g, const Word& seed) {
  std::vector<int> out;
  for (const auto& x : seed)
    if (auto v = g.find(x)) out.push_back(*v);
  return out;
}

// Realizer search over incomparable pairs. Ordered pair (a,b) of
// incomparable elements must be reversed (b before a) in some extension;
// each such pair gets a colour and every colour class, added to the poset,
// must stay acyclic. Closures are kept as bitsets (n <= 64).
class RealizerSearch {
 public:
  RealizerSearch(const Graph& g, const Orientation& o, int k, std::int64_t limit)
      : n_(g.order()), k_(k), limit_(limit) {
    base_.assign(n_, 0);
    for (auto [a, b] : o.arcs) base_[a] |= bit(b);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (a != b && !g.adjacent(a, b)) pairs_.push_back({a, b});
  }

  std::optional<std::vector<std::vector<int>>> run() {
    std::vector<std::vector<std::uint64_t>> below(k_, base_);  // below[c][a] = elements above a
    if (!dfs(0, below, 0)) return std::nullopt;
    std::vector<std::vector<int>> out;
    for (int c = 0; c < k_; ++c) out.push_back(linearize(solution_[c]));
    return out;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  // Adds u < v to the closure `up` (up[a] = set of elements above a).
  bool add(std::vector<std::uint64_t>& up, int u, int v) const {
    if (up[v] & bit(u)) return false;
    const std::uint64_t above = up[v] | bit(v);
    for (int x = 0; x < n_; ++x)
      if (x == u || (up[x] & bit(u))) up[x] |= above;
    return true;
  }

  bool dfs(std::size_t i, std::vector<std::vector<std::uint64_t>>& up, int colours_used) {
    if (++nodes_ > limit_)
      throw Error(ErrorCode::NodeLimitExceeded, "realizer search exceeded " + std::to_string(limit_) + " nodes");
    if (i == pairs_.size()) {
      solution_ = up;
      return true;
    }
    const auto [a, b] = pairs_[i];
    for (int c = 0; c < k_; ++c)
      if (up[c][b] & bit(a)) return dfs(i + 1, up, colours_used);
    // Colours beyond the first unused one are symmetric.
    const int limit = std::min(k_, colours_used + 1);
    for (int c = 0; c < limit; ++c) {
      auto trial = up[c];
      if (!add(trial, b, a)) continue;
      std::swap(trial, up[c]);
      if (dfs(i + 1, up, std::max(colours_used, c + 1))) return true;
      std::swap(trial, up[c]);
    }
    return false;
  }

  std::vector<int> linearize(const std::vector<std::uint64_t>& up) const {
    std::vector<int> out;
    std::uint64_t done = 0;
    while (static_cast<int>(out.size()) < n_) {
      for (int v = 0; v < n_; ++v) {
        if (done & bit(v)) continue;
        bool minimal = true;
        for (int u = 0; u < n_ && minimal; ++u)
          if (!(done & bit(u)) && u != v && (up[u] & bit(v))) minimal = false;
        if (minimal) {
          out.push_back(v);
          done |= bit(v);
          break;
        }
      }
    }
    return out;
  }

  int n_;
  int k_;
  std::int64_t limit_;
  std::int64_t nodes_ = 0;
  std::vector<std::uint64_t> base_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<std::uint64_t>> solution_;
};

}  // namespace

std::optional<UniformResult> min_uniform_rep(const Graph& g, const SearchBudget& budget) {
  guard(g, budget);
  std::int64_t spent = 0;
  for (int k = 1; k <= budget.max_k; ++k) {
    UniformSearch search(g, k, {}, budget.node_limit - spent);
    auto found = search.run();
    spent += search.nodes();
    if (found) {
      Word w = to_labels(g, *found);
      if (!represents(w, g)) throw Error(ErrorCode::VerificationFailed, "oracle witness does not verify");
      return UniformResult{k, std::move(w), spent};
    }
  }
  return std::nullopt;
}

std::optional<Word> seeded_uniform_search(const Graph& g, int k, const Word& seed, const SearchBudget& budget) {
  guard(g, budget);
  if (k <= 0 || k > budget.max_k)
    throw Error(ErrorCode::PreconditionViolated, "k must lie in 1.." + std::to_string(budget.max_k));
  UniformSearch search(g, k, seed_indices(g, seed), budget.node_limit);
  auto found = search.run();
  if (!found) return std::nullopt;
  Word w = to_labels(g, *found);
  if (!represents(w, g)) throw Error(ErrorCode::VerificationFailed, "seeded witness does not verify");
  return w;
}

std::optional<PermResult> min_perm_rep(const Graph& g, const SearchBudget& budget) {
  guard(g, budget);
  if (g.order() > 64) throw Error(ErrorCode::SizeGuard, "realizer search supports at most 64 vertices");
  const auto orientation = find_transitive_orientation(g, INT_MAX);
  if (!orientation) return std::nullopt;
  std::int64_t spent = 0;
  for (int k = 1; k <= budget.max_k; ++k) {
    RealizerSearch search(g, *orientation, k, budget.node_limit - spent);
    auto found = search.run();
    spent += search.nodes();
    if (!found) continue;
    PermSequence seq{g.labels(), {}};
    for (const auto& perm : *found) seq.perms.push_back(to_labels(g, perm));
    if (!represents(seq.flatten(), g)) throw Error(ErrorCode::VerificationFailed, "realizer does not verify");
    return PermResult{k, std::move(seq), spent};
  }
  return std::nullopt;
}

}  // namespace melonrep
