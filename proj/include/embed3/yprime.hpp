#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "marked.hpp"
#include "planarity.hpp"

namespace embed3 {

// Membership in the strict catalogue without materialising it: the underlyer
// must be a subdivision of an X4 member at root arcs (each at most once), and
// the marked graph must have a marked minor in Y.
class YPrimeIndex {
 public:
  explicit YPrimeIndex(const StrictCatalogue& cat) : cat_(cat), ysearch_(cat.ycal_keys, 6) {
    for (std::size_t i = 0; i < cat.x4.size(); ++i) {
      const auto& u = cat.x4[i];
      x4_index_.emplace(unlabelled_key(u), static_cast<int>(i));
      invariants_.insert(invariant(u.graph, u.v, u.w, 0));
    }
  }

  const StrictCatalogue& catalogue() const { return cat_; }

  // Index of the X4 member that u subdivides, if any.
  std::optional<int> underlyer_base(const UnlabelledMarkedGraph& u) const {
    const Graph& g = u.graph;
    auto deg = g.degrees();
    auto inc = g.incidence();
    std::vector<int> cand;
    for (int x = 0; x < g.node_count(); ++x) {
      if (x == u.v || x == u.w || deg[x] != 2 || inc[x].size() != 2) continue;
      int a1 = arc_of(inc[x][0]), a2 = arc_of(inc[x][1]);
      if (a1 == a2 || g.is_loop(a1) || g.is_loop(a2)) continue;
      int p = g.opposite(a1, x), q = g.opposite(a2, x);
      if (p == q) continue;
      if (p != u.v && p != u.w && q != u.v && q != u.w) continue;
      cand.push_back(x);
    }
    for (std::size_t s = 0; s <= cand.size(); ++s) {
      if (!invariants_.count(invariant(g, u.v, u.w, static_cast<int>(s)))) continue;
      std::vector<int> chosen;
      std::optional<int> found;
      choose(u, cand, 0, s, chosen, found);
      if (found) return found;
    }
    return std::nullopt;
  }

  // X4 index of the base if s lies in the strict catalogue.
  std::optional<int> member(const StrictMarkedGraph& s) {
    auto base = underlyer_base(underlying(s));
    if (!base) return std::nullopt;
    if (!ysearch_.has_minor(s.marked())) return std::nullopt;
    return base;
  }

  MarkedMinorSearch& marked_search() { return ysearch_; }

 private:
  // node count, arc count, root degrees and the non-root degree multiset
  // after removing `drop` nodes of degree two
  static Key invariant(const Graph& g, int v, int w, int drop) {
    auto deg = g.degrees();
    std::vector<std::int64_t> rest;
    for (int x = 0; x < g.node_count(); ++x)
      if (x != v && x != w) rest.push_back(deg[x]);
    std::sort(rest.begin(), rest.end());
    for (int k = 0; k < drop; ++k) {
      auto it = std::find(rest.begin(), rest.end(), 2);
      if (it == rest.end()) return {-1};
      rest.erase(it);
    }
    Key k{g.node_count() - drop, g.arc_count() - drop, std::min(deg[v], deg[w]), std::max(deg[v], deg[w])};
    k.insert(k.end(), rest.begin(), rest.end());
    return k;
  }

  void choose(const UnlabelledMarkedGraph& u, const std::vector<int>& cand, std::size_t from, std::size_t need,
              std::vector<int>& chosen, std::optional<int>& found) const {
    if (found) return;
    if (chosen.size() == need) {
      auto it = x4_index_.find(unlabelled_key(unsubdivide(u, chosen)));
      if (it != x4_index_.end()) found = it->second;
      return;
    }
    for (std::size_t i = from; i < cand.size() && !found; ++i) {
      bool adjacent = false;
      for (int y : chosen)
        if (detail::has_arc_between(u.graph, y, cand[i])) adjacent = true;
      if (adjacent) continue;
      chosen.push_back(cand[i]);
      choose(u, cand, i + 1, need, chosen, found);
      chosen.pop_back();
    }
  }

  static UnlabelledMarkedGraph unsubdivide(const UnlabelledMarkedGraph& u, const std::vector<int>& nodes) {
    const Graph& g = u.graph;
    std::vector<bool> gone(g.node_count(), false);
    for (int x : nodes) gone[x] = true;
    std::vector<int> id(g.node_count(), -1);
    int n = 0;
    for (int x = 0; x < g.node_count(); ++x)
      if (!gone[x]) id[x] = n++;
    UnlabelledMarkedGraph out;
    out.graph = Graph(n);
    out.v = id[u.v];
    out.w = id[u.w];
    auto in = [](const std::vector<int>& s, int a) { return std::find(s.begin(), s.end(), a) != s.end(); };
    for (int a = 0; a < g.arc_count(); ++a) {
      const Arc& arc = g.arc(a);
      if (gone[arc.u] || gone[arc.v]) continue;
      int b = out.graph.add_arc(id[arc.u], id[arc.v]);
      if (in(u.A, a)) out.A.push_back(b);
      if (in(u.B, a)) out.B.push_back(b);
    }
    auto inc = g.incidence();
    for (int x : nodes) {
      int a1 = arc_of(inc[x][0]), a2 = arc_of(inc[x][1]);
      int p = g.opposite(a1, x), q = g.opposite(a2, x);
      int b = out.graph.add_arc(id[p], id[q]);
      if (in(u.A, a1) || in(u.A, a2)) out.A.push_back(b);
      if (in(u.B, a1) || in(u.B, a2)) out.B.push_back(b);
    }
    std::sort(out.A.begin(), out.A.end());
    std::sort(out.B.begin(), out.B.end());
    return out;
  }

  const StrictCatalogue& cat_;
  MarkedMinorSearch ysearch_;
  std::unordered_map<Key, int, KeyHash> x4_index_;
  KeySet invariants_;
};

struct StrictChain {
  std::vector<StrictOp> ops;
  StrictMarkedGraph result;
  int base = -1;  // X4 index of the result's underlyer base
};

// Exhaustive search for a strict marked minor in the strict catalogue.
// Forced deletions (non-root loops, parallel copies and pendant arcs, and
// root arcs to pendant nodes) are applied eagerly. With `prune_planar`,
// states whose marked graph is planar are abandoned, which is sound since
// marked minors of planar marked graphs are planar.
class StrictMinorSearch {
 public:
  explicit StrictMinorSearch(YPrimeIndex& index, bool prune_planar = false)
      : index_(index), prune_(prune_planar) {}

  std::optional<StrictChain> find(const StrictMarkedGraph& s) {
    visited_ = 0;
    StrictChain chain;
    if (!dfs(s, chain)) return std::nullopt;
    return chain;
  }

  bool has_minor(const StrictMarkedGraph& s) { return find(s).has_value(); }

  std::size_t states_visited() const { return visited_; }

 private:
  static bool marked_arc(const StrictMarkedGraph& s, int a) {
    for (const auto& [x, y] : s.pairs)
      if (x == a || y == a) return true;
    return false;
  }

  static bool at_root(const StrictMarkedGraph& s, int a) {
    const Arc& arc = s.graph.arc(a);
    return arc.u == s.v || arc.v == s.v || arc.u == s.w || arc.v == s.w;
  }

  static bool pair_deletable(const StrictMarkedGraph& s, int a) {
    for (int b : detail::iota_closure(s, a))
      if (marked_arc(s, b)) return false;
    return true;
  }

  // A forced operation, or kind DeleteArc with arc -2 if the state is dead.
  static std::optional<StrictOp> forced(const StrictMarkedGraph& s) {
    const Graph& g = s.graph;
    auto deg = g.degrees();
    auto root = [&](int x) { return x == s.v || x == s.w; };
    std::set<std::pair<int, int>> seen;
    for (int a = 0; a < g.arc_count(); ++a) {
      const Arc& arc = g.arc(a);
      if (at_root(s, a)) {
        int far = root(arc.u) ? arc.v : arc.u;
        if (!root(far) && deg[far] == 1) {
          if (!pair_deletable(s, a)) return StrictOp{StrictOpKind::DeleteArc, -2, -1};
          return StrictOp{StrictOpKind::DeletePair, a, -1};
        }
        continue;
      }
      if (arc.u == arc.v) return StrictOp{StrictOpKind::DeleteArc, a, -1};
      if (!seen.insert(std::minmax(arc.u, arc.v)).second) return StrictOp{StrictOpKind::DeleteArc, a, -1};
      if (deg[arc.u] == 1 || deg[arc.v] == 1) return StrictOp{StrictOpKind::DeleteArc, a, -1};
    }
    return std::nullopt;
  }

  bool dfs(const StrictMarkedGraph& s0, StrictChain& chain) {
    const std::size_t mark = chain.ops.size();
    StrictMarkedGraph s = s0;
    while (auto op = forced(s)) {
      if (op->arc == -2) {
        chain.ops.resize(mark);
        return false;
      }
      s = strict_minor_step(s, *op);
      chain.ops.push_back(*op);
    }
    if (s.graph.node_count() < 4 || s.graph.arc_count() < 6) {
      chain.ops.resize(mark);
      return false;
    }
    Key k = strict_key(s);
    if (negative_.count(k)) {
      chain.ops.resize(mark);
      return false;
    }
    ++visited_;
    if (prune_) {
      if (is_planar_marked(s.marked())) {
        negative_.insert(std::move(k));
        chain.ops.resize(mark);
        return false;
      }
    }
    if (auto base = index_.member(s)) {
      chain.result = s;
      chain.base = *base;
      return true;
    }
    const Graph& g = s.graph;
    auto try_op = [&](const StrictOp& op) {
      chain.ops.push_back(op);
      if (dfs(strict_minor_step(s, op), chain)) return true;
      chain.ops.pop_back();
      return false;
    };
    for (int a = 0; a < g.arc_count(); ++a)
      for (int keep : {g.arc(a).u, g.arc(a).v}) {
        int x = g.opposite(a, keep);
        if (strict_contractible(s, a, x) && try_op({StrictOpKind::ContractArc, a, keep})) return true;
      }
    for (int a = 0; a < g.arc_count(); ++a)
      if (!at_root(s, a) && try_op({StrictOpKind::DeleteArc, a, -1})) return true;
    for (int a = 0; a < g.arc_count(); ++a) {
      if (!at_root(s, a) || !pair_deletable(s, a)) continue;
      auto closure = detail::iota_closure(s, a);
      if (*std::min_element(closure.begin(), closure.end()) != a) continue;
      if (try_op({StrictOpKind::DeletePair, a, -1})) return true;
    }
    negative_.insert(std::move(k));
    chain.ops.resize(mark);
    return false;
  }

  YPrimeIndex& index_;
  bool prune_;
  KeySet negative_;
  std::size_t visited_ = 0;
};

// Members of the strict catalogue whose underlyer is an X4 member with at
// most max_nodes nodes, one per strict isomorphism class.
inline std::vector<StrictMarkedGraph> ycal_prime_slice(YPrimeIndex& index, int max_nodes) {
  std::vector<StrictMarkedGraph> out;
  KeySet seen;
  for (const auto& u : index.catalogue().x4) {
    if (u.graph.node_count() > max_nodes) continue;
    auto sv = star(u.graph, u.v), sw = star(u.graph, u.w);
    if (sv.size() != sw.size()) continue;
    std::vector<int> rest_v, rest_w;
    for (int a : sv)
      if (!std::binary_search(u.A.begin(), u.A.end(), a)) rest_v.push_back(a);
    for (int a : sw)
      if (!std::binary_search(u.B.begin(), u.B.end(), a)) rest_w.push_back(a);
    for (const auto& m : bijections(u)) {
      std::vector<int> perm(rest_w.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      do {
        StrictMarkedGraph s;
        s.graph = m.graph;
        s.v = m.v;
        s.w = m.w;
        s.pairs = m.pairs;
        for (const auto& p : m.pairs) s.iota.push_back(p);
        for (std::size_t i = 0; i < rest_v.size(); ++i) s.iota.emplace_back(rest_v[i], rest_w[perm[i]]);
        std::sort(s.iota.begin(), s.iota.end());
        if (!seen.insert(strict_key(s)).second) continue;
        if (index.marked_search().has_minor(s.marked())) out.push_back(s);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

}  // namespace embed3
