#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace embed3 {

// Node- and edge-coloured multigraph used as the input of canonical labelling.
struct ColouredGraph {
  int n = 0;
  std::vector<int> colour;
  std::vector<std::tuple<int, int, int>> edges;  // (u, v, colour), undirected

  explicit ColouredGraph(int nodes = 0) : n(nodes), colour(nodes, 0) {}

  int add_node(int c) {
    colour.push_back(c);
    return n++;
  }
  void add_edge(int u, int v, int c) { edges.emplace_back(u, v, c); }
};

// Individualisation-refinement canonical form. Two coloured graphs are
// isomorphic (colour-preserving) iff their certificates compare equal.
class Canonizer {
 public:
  explicit Canonizer(const ColouredGraph& g) : g_(g), adj_(g.n) {
    for (const auto& [u, v, c] : g.edges) {
      adj_[u].emplace_back(c, v);
      if (u != v) adj_[v].emplace_back(c, u);
    }
  }

  std::vector<std::int64_t> certificate() {
    std::vector<int> cell(g_.n);
    std::vector<int> order(g_.n);
    for (int i = 0; i < g_.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g_.colour[a] < g_.colour[b]; });
    int rank = -1;
    for (int i = 0; i < g_.n; ++i) {
      if (i == 0 || g_.colour[order[i]] != g_.colour[order[i - 1]]) rank = i;
      cell[order[i]] = rank;
    }
    best_.clear();
    have_best_ = false;
    search(refine(cell));
    return best_;
  }

  // Node relabelling (old -> new) realising the certificate.
  const std::vector<int>& labelling() const { return best_perm_; }

 private:
  // Cells are named by the position of their first member in the ordered
  // partition, so a cell id is also its rank.
  std::vector<int> refine(std::vector<int> cell) const {
    const int n = g_.n;
    std::vector<std::pair<std::pair<int, std::vector<std::pair<int, int>>>, int>> sig(n);
    while (true) {
      for (int x = 0; x < n; ++x) {
        std::vector<std::pair<int, int>> nb;
        nb.reserve(adj_[x].size());
        for (const auto& [c, y] : adj_[x]) nb.emplace_back(c, cell[y]);
        std::sort(nb.begin(), nb.end());
        sig[x] = {{cell[x], std::move(nb)}, x};
      }
      std::sort(sig.begin(), sig.end());
      std::vector<int> next(n);
      int cells_before = 0, cells_after = 0;
      {
        std::vector<int> seen = cell;
        std::sort(seen.begin(), seen.end());
        cells_before = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
      }
      int rank = 0;
      for (int i = 0; i < n; ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) {
          rank = i;
          ++cells_after;
        }
        next[sig[i].second] = rank;
      }
      cell = std::move(next);
      if (cells_after == cells_before) return cell;
    }
  }

  void search(const std::vector<int>& cell) {
    const int n = g_.n;
    std::vector<int> count(n, 0);
    for (int c : cell) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(cell);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (cell[x] != target) continue;
      std::vector<int> ind = cell;
      for (int y = 0; y < n; ++y)
        if (ind[y] == target && y != x) ind[y] = target + 1;
      search(refine(ind));
    }
  }

  void leaf(const std::vector<int>& perm) {
    std::vector<std::int64_t> cert;
    cert.reserve(g_.n + 3 * g_.edges.size() + 2);
    cert.push_back(g_.n);
    std::vector<int> colour_at(g_.n);
    for (int x = 0; x < g_.n; ++x) colour_at[perm[x]] = g_.colour[x];
    cert.insert(cert.end(), colour_at.begin(), colour_at.end());
    std::vector<std::tuple<int, int, int>> es;
    es.reserve(g_.edges.size());
    for (const auto& [u, v, c] : g_.edges) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      es.emplace_back(a, b, c);
    }
    std::sort(es.begin(), es.end());
    cert.push_back(static_cast<std::int64_t>(es.size()));
    for (const auto& [a, b, c] : es) {
      cert.push_back(a);
      cert.push_back(b);
      cert.push_back(c);
    }
    if (!have_best_ || cert < best_) {
      best_ = std::move(cert);
      best_perm_ = perm;
      have_best_ = true;
    }
  }

  const ColouredGraph& g_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<std::int64_t> best_;
  std::vector<int> best_perm_;
  bool have_best_ = false;
};

inline std::vector<std::int64_t> canonical_certificate(const ColouredGraph& g) {
  return Canonizer(g).certificate();
}

}  // namespace embed3
