#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "planarity.hpp"

namespace embed3 {

using Key = std::vector<std::int64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : k) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
using KeySet = std::unordered_set<Key, KeyHash>;

// Graph with roots v, w and three pairs (a_i, b_i), a_i at v, b_i at w.
struct MarkedGraph {
  Graph graph;
  int v = 0;
  int w = 1;
  std::array<std::pair<int, int>, 3> pairs{};
};

// Marked graph plus a bijection iota from the arcs at v to the arcs at w
// (listed as pairs) extending a_i -> b_i.
struct StrictMarkedGraph {
  Graph graph;
  int v = 0;
  int w = 1;
  std::array<std::pair<int, int>, 3> pairs{};
  std::vector<std::pair<int, int>> iota;

  MarkedGraph marked() const { return {graph, v, w, pairs}; }
};

// Marked graph without the bijection between A and B.
struct UnlabelledMarkedGraph {
  Graph graph;
  int v = 0;
  int w = 1;
  std::vector<int> A;
  std::vector<int> B;
};

inline std::vector<int> star(const Graph& g, int x) {
  std::vector<int> s;
  for (int a = 0; a < g.arc_count(); ++a)
    if (g.arc(a).u == x || g.arc(a).v == x) s.push_back(a);
  return s;
}

inline UnlabelledMarkedGraph underlying(const MarkedGraph& m) {
  UnlabelledMarkedGraph u{m.graph, m.v, m.w, {}, {}};
  for (const auto& [a, b] : m.pairs) {
    u.A.push_back(a);
    u.B.push_back(b);
  }
  std::sort(u.A.begin(), u.A.end());
  std::sort(u.B.begin(), u.B.end());
  return u;
}

inline UnlabelledMarkedGraph underlying(const StrictMarkedGraph& s) { return underlying(s.marked()); }

// ---------------------------------------------------------------------------
// Validation

inline std::string marked_defect(const Graph& g, int v, int w, const std::array<std::pair<int, int>, 3>& pairs) {
  auto at = [&](int a, int x) { return a >= 0 && a < g.arc_count() && (g.arc(a).u == x || g.arc(a).v == x); };
  std::set<int> A, B;
  for (const auto& [a, b] : pairs) {
    if (!at(a, v)) return "a_i not incident with v";
    if (!at(b, w)) return "b_i not incident with w";
    A.insert(a);
    B.insert(b);
  }
  if (A.size() != 3 || B.size() != 3) return "marked arcs not distinct";
  return "";
}

inline std::string strict_defect(const StrictMarkedGraph& s) {
  std::string d = marked_defect(s.graph, s.v, s.w, s.pairs);
  if (!d.empty()) return d;
  if (s.v == s.w) return "v equals w";
  std::vector<int> sv = star(s.graph, s.v), sw = star(s.graph, s.w);
  for (int a : sv)
    if (s.graph.is_loop(a)) return "loop at v";
  for (int a : sw)
    if (s.graph.is_loop(a)) return "loop at w";
  std::vector<int> left, right;
  for (const auto& [a, b] : s.iota) {
    left.push_back(a);
    right.push_back(b);
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left != sv || right != sw) return "iota is not a bijection between the stars of v and w";
  for (const auto& [a, b] : s.pairs)
    if (std::find(s.iota.begin(), s.iota.end(), std::make_pair(a, b)) == s.iota.end()) return "iota does not extend the pairs";
  return "";
}

// ---------------------------------------------------------------------------
// Canonical keys (isomorphism classes respecting roots, marks, pairing)

namespace detail {

struct Encoding {
  const Graph* g;
  int v, w;
  std::vector<int> in_a, in_b;                    // per arc
  const std::array<std::pair<int, int>, 3>* pairs = nullptr;
  const std::vector<std::pair<int, int>>* iota = nullptr;
  bool swapped = false;
};

// Plain arcs become coloured edges; arcs at a root get a node of their own so
// that pairs and iota can refer to them.
inline Key encode(const Encoding& e) {
  const Graph& g = *e.g;
  int v = e.swapped ? e.w : e.v;
  int w = e.swapped ? e.v : e.w;
  ColouredGraph cg(g.node_count());
  for (int x = 0; x < g.node_count(); ++x) cg.colour[x] = (x == v ? 1 : 0) + (x == w ? 2 : 0);
  std::vector<int> arc_node(g.arc_count(), -1);
  std::vector<bool> in_pair(g.arc_count(), false);
  if (e.pairs)
    for (const auto& [a, b] : *e.pairs) in_pair[a] = true;
  for (int a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    int fa = e.swapped ? e.in_b[a] : e.in_a[a];
    int fb = e.swapped ? e.in_a[a] : e.in_b[a];
    bool at_root = arc.u == v || arc.v == v || arc.u == w || arc.v == w;
    if (!at_root) {
      cg.add_edge(arc.u, arc.v, 0);
      continue;
    }
    arc_node[a] = cg.add_node(8 + fa + 2 * fb);
    cg.add_edge(arc.u, arc_node[a], 0);
    cg.add_edge(arc.v, arc_node[a], 0);
  }
  if (e.pairs) {
    for (const auto& [a, b] : *e.pairs) {
      int p = cg.add_node(16);
      int src = e.swapped ? b : a, dst = e.swapped ? a : b;
      cg.add_edge(p, arc_node[src], 1);
      cg.add_edge(p, arc_node[dst], 2);
    }
  }
  if (e.iota) {
    for (const auto& [a, b] : *e.iota) {
      if (in_pair[a]) continue;
      int p = cg.add_node(17);
      int src = e.swapped ? b : a, dst = e.swapped ? a : b;
      cg.add_edge(p, arc_node[src], 3);
      cg.add_edge(p, arc_node[dst], 4);
    }
  }
  return canonical_certificate(cg);
}

inline Encoding base_encoding(const Graph& g, int v, int w, const std::vector<int>& A, const std::vector<int>& B) {
  Encoding e;
  e.g = &g;
  e.v = v;
  e.w = w;
  e.in_a.assign(g.arc_count(), 0);
  e.in_b.assign(g.arc_count(), 0);
  for (int a : A) e.in_a[a] = 1;
  for (int b : B) e.in_b[b] = 1;
  return e;
}

inline Key both_ways(Encoding e) {
  e.swapped = false;
  Key k1 = encode(e);
  e.swapped = true;
  Key k2 = encode(e);
  return std::min(k1, k2);
}

}  // namespace detail

// Keys identify objects up to isomorphism and up to the swap (v,A) <-> (w,B).
inline Key unlabelled_key(const UnlabelledMarkedGraph& u) {
  return detail::both_ways(detail::base_encoding(u.graph, u.v, u.w, u.A, u.B));
}

inline Key oriented_unlabelled_key(const UnlabelledMarkedGraph& u) {
  return detail::encode(detail::base_encoding(u.graph, u.v, u.w, u.A, u.B));
}

inline Key marked_key(const MarkedGraph& m) {
  auto u = underlying(m);
  auto e = detail::base_encoding(m.graph, m.v, m.w, u.A, u.B);
  e.pairs = &m.pairs;
  return detail::both_ways(e);
}

inline Key strict_key(const StrictMarkedGraph& s) {
  auto u = underlying(s);
  auto e = detail::base_encoding(s.graph, s.v, s.w, u.A, u.B);
  e.pairs = &s.pairs;
  e.iota = &s.iota;
  return detail::both_ways(e);
}

// ---------------------------------------------------------------------------
// Marked planarity

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool marked_condition(const Graph& g, const GraphRotation& r, int v, int w,
                             const std::array<std::pair<int, int>, 3>& pairs) {
  auto position = [&](int x, int a) {
    const auto& rot = r.rotator[x];
    for (std::size_t i = 0; i < rot.size(); ++i)
      if (arc_of(rot[i]) == a && g.node_of_end(rot[i]) == x) return static_cast<int>(i);
    return -1;
  };
  auto clockwise = [](int p1, int p2, int p3) {
    return (p1 < p2 && p2 < p3) || (p2 < p3 && p3 < p1) || (p3 < p1 && p1 < p2);
  };
  bool ov = clockwise(position(v, pairs[0].first), position(v, pairs[1].first), position(v, pairs[2].first));
  bool ow = clockwise(position(w, pairs[0].second), position(w, pairs[1].second), position(w, pairs[2].second));
  return ov != ow;
}

// Exhaustive marked planarity over all rotations, up to the budget.
inline bool is_planar_marked_exhaustive(const MarkedGraph& m, double budget = 1e6) {
  if (!is_planar(m.graph)) return false;
  if (rotation_count(m.graph) > budget) throw BudgetExceeded("marked planarity: rotation count exceeds budget");
  bool found = false;
  for_each_rotation(m.graph, [&](const GraphRotation& r) {
    if (is_planar_rotation(m.graph, r) && marked_condition(m.graph, r, m.v, m.w, m.pairs)) found = true;
    return !found;
  });
  return found;
}

namespace detail {

// Block (biconnected component) id per arc; loops form blocks of their own.
inline std::vector<int> arc_blocks(const Graph& g) {
  const int n = g.node_count();
  auto inc = g.incidence();
  std::vector<int> block(g.arc_count(), -1), disc(n, -1), low(n, 0), stack;
  int time = 0, count = 0;
  auto dfs = [&](auto&& self, int x, int parent_arc) -> void {
    disc[x] = low[x] = time++;
    for (int end : inc[x]) {
      int a = arc_of(end);
      if (a == parent_arc || g.is_loop(a)) continue;
      int y = g.opposite(a, x);
      if (disc[y] < 0) {
        stack.push_back(a);
        self(self, y, a);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) {
          while (true) {
            int b = stack.back();
            stack.pop_back();
            block[b] = count;
            if (b == a) break;
          }
          ++count;
        }
      } else if (disc[y] < disc[x]) {
        stack.push_back(a);
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  for (int x = 0; x < n; ++x)
    if (disc[x] < 0) dfs(dfs, x, -1);
  for (int a = 0; a < g.arc_count(); ++a)
    if (block[a] < 0) block[a] = count++;
  return block;
}

// Whether planar embeddings of g realise both relative orientations of the
// triples at v and w. Embeddings of a 2-connected graph are related by
// flipping and permuting the bridges of separation pairs, and the effect of
// each such move on either triple depends only on which bridges hold its arcs.
inline bool relative_orientation_free(const Graph& g, int v, int w, const std::array<int, 3>& ta,
                                      const std::array<int, 3>& tb) {
  auto block = arc_blocks(g);
  auto same = [&](const std::array<int, 3>& t) { return block[t[0]] == block[t[1]] && block[t[1]] == block[t[2]]; };
  if (!same(ta) || !same(tb) || block[ta[0]] != block[tb[0]]) return true;
  const int b0 = block[ta[0]];
  const int n = g.node_count();
  std::vector<int> arcs;
  for (int a = 0; a < g.arc_count(); ++a)
    if (block[a] == b0) arcs.push_back(a);
  std::vector<bool> in_block(n, false);
  for (int a : arcs) in_block[g.arc(a).u] = in_block[g.arc(a).v] = true;
  for (int x = 0; x < n; ++x) {
    if (!in_block[x]) continue;
    for (int y = x + 1; y < n; ++y) {
      if (!in_block[y]) continue;
      // bridges of {x, y}: components of the block minus x, y, and single arcs xy
      std::vector<int> comp(n, -1);
      int bridges = 0;
      std::vector<int> arc_bridge(g.arc_count(), -1);
      for (int a : arcs) {
        const Arc& arc = g.arc(a);
        if ((arc.u == x && arc.v == y) || (arc.u == y && arc.v == x)) arc_bridge[a] = bridges++;
      }
      for (int s = 0; s < n; ++s) {
        if (!in_block[s] || s == x || s == y || comp[s] >= 0) continue;
        const int id = bridges++;
        std::vector<int> todo{s};
        comp[s] = id;
        while (!todo.empty()) {
          int z = todo.back();
          todo.pop_back();
          for (int a : arcs) {
            const Arc& arc = g.arc(a);
            if (arc.u != z && arc.v != z) continue;
            int o = g.opposite(a, z);
            if (o == x || o == y || comp[o] >= 0) continue;
            comp[o] = id;
            todo.push_back(o);
          }
        }
      }
      if (bridges < 2) continue;
      for (int a : arcs) {
        if (arc_bridge[a] >= 0) continue;
        const Arc& arc = g.arc(a);
        arc_bridge[a] = comp[arc.u] >= 0 ? comp[arc.u] : comp[arc.v];
      }
      auto interior = [&](int r, int k) { return r != x && r != y && comp[r] == k; };
      auto count_in = [&](const std::array<int, 3>& t, int k) {
        int c = 0;
        for (int a : t) c += arc_bridge[a] == k ? 1 : 0;
        return c;
      };
      auto flips = [&](int r, const std::array<int, 3>& t, int k) {
        if (interior(r, k)) return true;
        return (r == x || r == y) && count_in(t, k) >= 2;
      };
      for (int k = 0; k < bridges; ++k)
        if (flips(v, ta, k) != flips(w, tb, k)) return true;
      auto spread = [&](int r, const std::array<int, 3>& t) {
        return (r == x || r == y) && arc_bridge[t[0]] != arc_bridge[t[1]] && arc_bridge[t[1]] != arc_bridge[t[2]] &&
               arc_bridge[t[0]] != arc_bridge[t[2]];
      };
      const bool sv = spread(v, ta), sw = spread(w, tb);
      if (!sv && !sw) continue;
      auto holds = [&](const std::array<int, 3>& t, int k) { return count_in(t, k) > 0; };
      for (int i = 0; i < bridges; ++i)
        for (int j = i + 1; j < bridges; ++j) {
          bool cv = sv && holds(ta, i) && holds(ta, j);
          bool cw = sw && holds(tb, i) && holds(tb, j);
          if (cv != cw) return true;
        }
    }
  }
  return false;
}

}  // namespace detail

// A marked graph is planar if some planar rotation orders (a_1, a_2, a_3) at
// v opposite to (b_1, b_2, b_3) at w. One embedding is checked; if it fails,
// the answer is whether the relative orientation can be changed.
inline bool is_planar_marked(const MarkedGraph& m, double = 1e6) {
  auto r = planar_embedding(m.graph);
  if (!r) return false;
  if (marked_condition(m.graph, *r, m.v, m.w, m.pairs)) return true;
  std::array<int, 3> ta{m.pairs[0].first, m.pairs[1].first, m.pairs[2].first};
  std::array<int, 3> tb{m.pairs[0].second, m.pairs[1].second, m.pairs[2].second};
  return detail::relative_orientation_free(m.graph, m.v, m.w, ta, tb);
}

// ---------------------------------------------------------------------------
// Structural rebuild helper: merge nodes, drop arcs, drop isolated nodes.

namespace detail {

struct Rebuilt {
  Graph graph;
  std::vector<int> node_map;  // old node -> new node or -1
  std::vector<int> arc_map;   // old arc -> new arc or -1
};

inline Rebuilt rebuild(const Graph& g, const std::vector<int>& rep, const std::vector<bool>& keep_arc,
                       std::initializer_list<int> pinned) {
  const int n = g.node_count();
  std::vector<bool> used(n, false);
  for (int a = 0; a < g.arc_count(); ++a)
    if (keep_arc[a]) used[rep[g.arc(a).u]] = used[rep[g.arc(a).v]] = true;
  for (int p : pinned) used[rep[p]] = true;
  Rebuilt r;
  std::vector<int> id(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (rep[x] == x && used[x]) id[x] = next++;
  r.graph = Graph(next);
  r.node_map.assign(n, -1);
  for (int x = 0; x < n; ++x) r.node_map[x] = id[rep[x]];
  r.arc_map.assign(g.arc_count(), -1);
  for (int a = 0; a < g.arc_count(); ++a)
    if (keep_arc[a]) r.arc_map[a] = r.graph.add_arc(r.node_map[g.arc(a).u], r.node_map[g.arc(a).v]);
  return r;
}

inline std::vector<int> identity_rep(int n) {
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;
  return rep;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Marked minor operations

enum class MarkedOpKind { DeleteArc, ContractArc, MergeParallel, MergeSerial, Swap };

struct MarkedOp {
  MarkedOpKind kind = MarkedOpKind::DeleteArc;
  int arc = -1;     // DeleteArc / ContractArc
  int pair_a = -1;  // merges: index i of a_i
  int pair_b = -1;  // merges: index j of b_j
};

namespace detail {

inline bool is_marked_arc(const MarkedGraph& m, int a) {
  for (const auto& [x, y] : m.pairs)
    if (x == a || y == a) return true;
  return false;
}

inline MarkedGraph remap_marked(const MarkedGraph& m, const Rebuilt& r, int v, int w) {
  MarkedGraph out;
  out.graph = r.graph;
  out.v = r.node_map[v];
  out.w = r.node_map[w];
  for (int i = 0; i < 3; ++i) out.pairs[i] = {r.arc_map[m.pairs[i].first], r.arc_map[m.pairs[i].second]};
  return out;
}

}  // namespace detail

class IllegalOperation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline MarkedGraph marked_minor_step(const MarkedGraph& m, const MarkedOp& op) {
  const Graph& g = m.graph;
  std::vector<bool> keep(g.arc_count(), true);
  std::vector<int> rep = detail::identity_rep(g.node_count());
  switch (op.kind) {
    case MarkedOpKind::Swap: {
      MarkedGraph out = m;
      std::swap(out.v, out.w);
      for (auto& p : out.pairs) std::swap(p.first, p.second);
      return out;
    }
    case MarkedOpKind::DeleteArc:
    case MarkedOpKind::ContractArc: {
      if (op.arc < 0 || op.arc >= g.arc_count() || detail::is_marked_arc(m, op.arc))
        throw IllegalOperation("arc is marked or unknown");
      keep[op.arc] = false;
      if (op.kind == MarkedOpKind::ContractArc && !g.is_loop(op.arc)) {
        int x = g.arc(op.arc).u, y = g.arc(op.arc).v;
        // keep the root as representative when a root is involved
        int keepn = (y == m.v || y == m.w) ? y : x;
        int gone = keepn == x ? y : x;
        rep[gone] = keepn;
      }
      auto r = detail::rebuild(g, rep, keep, {m.v, m.w});
      return detail::remap_marked(m, r, m.v, m.w);
    }
    case MarkedOpKind::MergeParallel:
    case MarkedOpKind::MergeSerial: {
      int a = m.pairs.at(op.pair_a).first;
      int b = m.pairs.at(op.pair_b).second;
      bool a_in_b = false, b_in_a = false;
      for (const auto& [x, y] : m.pairs) {
        if (y == a) a_in_b = true;
        if (x == b) b_in_a = true;
      }
      if (a_in_b || b_in_a || a == b) throw IllegalOperation("merge needs a in A\\B and b in B\\A");
      MarkedGraph out;
      if (op.kind == MarkedOpKind::MergeParallel) {
        auto ea = std::minmax(g.arc(a).u, g.arc(a).v), eb = std::minmax(g.arc(b).u, g.arc(b).v);
        if (ea != eb) throw IllegalOperation("arcs are not parallel");
        keep[b] = false;
        auto r = detail::rebuild(g, rep, keep, {m.v, m.w});
        out = detail::remap_marked(m, r, m.v, m.w);
        for (auto& p : out.pairs) {
          if (p.second == -1) p.second = r.arc_map[a];
        }
        return out;
      }
      // serial: a = v-x, b = x-w with x of degree two
      int x = g.opposite(a, m.v);
      auto deg = g.degrees();
      if (g.is_loop(a) || g.is_loop(b) || x == m.v || x == m.w || deg[x] != 2 ||
          (g.arc(b).u != x && g.arc(b).v != x))
        throw IllegalOperation("arcs are not in series");
      keep[a] = keep[b] = false;
      Graph h = g;
      int na = h.add_arc(m.v, g.opposite(b, x));
      keep.push_back(true);
      auto r = detail::rebuild(h, detail::identity_rep(h.node_count()), keep, {m.v, m.w});
      out.graph = r.graph;
      out.v = r.node_map[m.v];
      out.w = r.node_map[m.w];
      for (int i = 0; i < 3; ++i) {
        int pa = m.pairs[i].first == a ? na : m.pairs[i].first;
        int pb = m.pairs[i].second == b ? na : m.pairs[i].second;
        out.pairs[i] = {r.arc_map[pa], r.arc_map[pb]};
      }
      return out;
    }
  }
  throw IllegalOperation("unknown operation");
}

// ---------------------------------------------------------------------------
// Marked minor search

// Exhaustive search for a marked minor whose key lies in `targets`. Keys are
// swap-invariant, so the swap operation is implicit. Normalisation removes
// isolated nodes, unmarked loops, unmarked arcs parallel to another arc and
// unmarked pendant arcs; all targets are loopless, simple and of minimum
// degree three, so these removals are forced in every successful sequence.
class MarkedMinorSearch {
 public:
  MarkedMinorSearch(const KeySet& targets, int target_max_nodes) : targets_(targets), max_nodes_(target_max_nodes) {}

  // Results are memoised across queries: a state that was fully explored
  // without success stays negative.
  bool has_minor(const MarkedGraph& m) {
    visited_ = 0;
    path_ = nullptr;
    std::vector<MarkedOp> ops;
    return dfs(normalise(m, ops));
  }

  // The operations leading from m to a target, or nothing. The result ends
  // in a graph whose key is a target (up to a final swap).
  std::optional<std::vector<MarkedOp>> witness(const MarkedGraph& m) {
    visited_ = 0;
    std::vector<MarkedOp> ops;
    path_ = &ops;
    MarkedGraph start = normalise(m, ops);
    bool found = dfs(start);
    path_ = nullptr;
    if (!found) return std::nullopt;
    return ops;
  }

  std::size_t states_visited() const { return visited_; }

  // Applies forced deletions one at a time, appending them to ops.
  static MarkedGraph normalise(MarkedGraph m, std::vector<MarkedOp>& ops) {
    {
      // isolated nodes go without an operation; arc ids are unchanged
      std::vector<bool> keep(m.graph.arc_count(), true);
      auto r = detail::rebuild(m.graph, detail::identity_rep(m.graph.node_count()), keep, {m.v, m.w});
      if (r.graph.node_count() != m.graph.node_count()) m = detail::remap_marked(m, r, m.v, m.w);
    }
    while (true) {
      int a = forced_deletion(m);
      if (a < 0) break;
      m = marked_minor_step(m, {MarkedOpKind::DeleteArc, a, -1, -1});
      ops.push_back({MarkedOpKind::DeleteArc, a, -1, -1});
    }
    return m;
  }

  static MarkedGraph normalise(const MarkedGraph& m) {
    std::vector<MarkedOp> ops;
    return normalise(m, ops);
  }

 private:
  static int forced_deletion(const MarkedGraph& m) {
    const Graph& g = m.graph;
    auto deg = g.degrees();
    std::map<std::pair<int, int>, int> first_arc;
    for (int a = 0; a < g.arc_count(); ++a)
      if (detail::is_marked_arc(m, a)) first_arc.emplace(std::minmax(g.arc(a).u, g.arc(a).v), a);
    for (int a = 0; a < g.arc_count(); ++a) {
      if (detail::is_marked_arc(m, a)) continue;
      const Arc& arc = g.arc(a);
      if (arc.u == arc.v) return a;
      if (!first_arc.emplace(std::minmax(arc.u, arc.v), a).second) return a;
      if ((deg[arc.u] == 1 && arc.u != m.v && arc.u != m.w) || (deg[arc.v] == 1 && arc.v != m.v && arc.v != m.w))
        return a;
    }
    return -1;
  }

  bool dead(const MarkedGraph& m) const {
    if (m.v == m.w) return true;
    const Graph& g = m.graph;
    for (const auto& [a, b] : m.pairs)
      if (g.is_loop(a) || g.is_loop(b)) return true;
    if (g.node_count() < 4 || g.arc_count() < 6) return true;
    auto deg = g.degrees();
    for (int x = 0; x < g.node_count(); ++x)
      if (deg[x] < 2) return true;  // a marked pendant arc can never disappear
    return false;
  }

  bool dfs(const MarkedGraph& m) {
    if (dead(m)) return false;
    Key k = marked_key(m);
    if (negative_.count(k)) return false;
    if (!path_ && positive_.count(k)) return true;
    ++visited_;
    if ((m.graph.node_count() <= max_nodes_ && targets_.count(k)) || expand(m)) {
      positive_.insert(std::move(k));
      return true;
    }
    negative_.insert(std::move(k));
    return false;
  }

  bool step(const MarkedGraph& m, const MarkedOp& op) {
    std::size_t mark = path_ ? path_->size() : 0;
    if (path_) path_->push_back(op);
    MarkedGraph next = path_ ? normalise(marked_minor_step(m, op), *path_) : normalise(marked_minor_step(m, op));
    if (dfs(next)) return true;
    if (path_) path_->resize(mark);
    return false;
  }

  bool expand(const MarkedGraph& m) {
    const Graph& g = m.graph;
    for (int a = 0; a < g.arc_count(); ++a) {
      if (detail::is_marked_arc(m, a)) continue;
      for (auto kind : {MarkedOpKind::ContractArc, MarkedOpKind::DeleteArc}) {
        if (kind == MarkedOpKind::ContractArc) {
          const Arc& arc = g.arc(a);
          if ((arc.u == m.v && arc.v == m.w) || (arc.u == m.w && arc.v == m.v)) continue;
        }
        if (step(m, {kind, a, -1, -1})) return true;
      }
    }
    auto deg = g.degrees();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int a = m.pairs[i].first, b = m.pairs[j].second;
        bool a_in_b = false, b_in_a = false;
        for (const auto& [x, y] : m.pairs) {
          if (y == a) a_in_b = true;
          if (x == b) b_in_a = true;
        }
        if (a_in_b || b_in_a) continue;
        auto ea = std::minmax(g.arc(a).u, g.arc(a).v), eb = std::minmax(g.arc(b).u, g.arc(b).v);
        if (ea == eb) {
          if (step(m, {MarkedOpKind::MergeParallel, -1, i, j})) return true;
          continue;
        }
        int x = g.opposite(a, m.v);
        if (x != m.v && x != m.w && deg[x] == 2 && (g.arc(b).u == x || g.arc(b).v == x)) {
          if (step(m, {MarkedOpKind::MergeSerial, -1, i, j})) return true;
        }
      }
    return false;
  }

  const KeySet& targets_;
  int max_nodes_;
  KeySet positive_, negative_;
  std::size_t visited_ = 0;
  std::vector<MarkedOp>* path_ = nullptr;
};

// ---------------------------------------------------------------------------
// Strict marked minor operations

enum class StrictOpKind { DeleteArc, DeletePair, ContractArc, Swap };

struct StrictOp {
  StrictOpKind kind = StrictOpKind::DeleteArc;
  int arc = -1;
  int keep_node = -1;  // ContractArc: endpoint that survives (the other has degree two)
};

namespace detail {

inline StrictMarkedGraph remap_strict(const StrictMarkedGraph& s, const Rebuilt& r) {
  StrictMarkedGraph out;
  out.graph = r.graph;
  out.v = r.node_map[s.v];
  out.w = r.node_map[s.w];
  for (int i = 0; i < 3; ++i) out.pairs[i] = {r.arc_map[s.pairs[i].first], r.arc_map[s.pairs[i].second]};
  for (const auto& [a, b] : s.iota)
    if (r.arc_map[a] >= 0 && r.arc_map[b] >= 0) out.iota.emplace_back(r.arc_map[a], r.arc_map[b]);
  return out;
}

// Arcs that must be deleted together with a so that iota stays a bijection.
inline std::vector<int> iota_closure(const StrictMarkedGraph& s, int a) {
  std::vector<int> out{a};
  std::set<int> seen{a};
  for (std::size_t i = 0; i < out.size(); ++i) {
    int x = out[i];
    for (const auto& [p, q] : s.iota) {
      if (p == x && seen.insert(q).second) out.push_back(q);
      if (q == x && seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

}  // namespace detail

inline bool strict_contractible(const StrictMarkedGraph& s, int a, int x) {
  const Graph& g = s.graph;
  if (g.is_loop(a)) return false;
  if (g.arc(a).u != x && g.arc(a).v != x) return false;
  if (x == s.v || x == s.w) return false;
  auto deg = g.degrees();
  if (deg[x] != 2) return false;
  for (int b = 0; b < g.arc_count(); ++b) {
    const Arc& arc = g.arc(b);
    if (arc.u == x && (arc.v == s.v || arc.v == s.w)) return false;
    if (arc.v == x && (arc.u == s.v || arc.u == s.w)) return false;
  }
  return true;
}

// arc_map, if given, receives old arc -> new arc or -1.
inline StrictMarkedGraph strict_minor_step(const StrictMarkedGraph& s, const StrictOp& op,
                                           std::vector<int>* arc_map = nullptr) {
  const Graph& g = s.graph;
  std::vector<bool> keep(g.arc_count(), true);
  std::vector<int> rep = detail::identity_rep(g.node_count());
  auto at_root = [&](int a) {
    const Arc& arc = g.arc(a);
    return arc.u == s.v || arc.v == s.v || arc.u == s.w || arc.v == s.w;
  };
  auto marked = [&](int a) {
    for (const auto& [x, y] : s.pairs)
      if (x == a || y == a) return true;
    return false;
  };
  switch (op.kind) {
    case StrictOpKind::Swap: {
      StrictMarkedGraph out = s;
      std::swap(out.v, out.w);
      for (auto& p : out.pairs) std::swap(p.first, p.second);
      for (auto& p : out.iota) std::swap(p.first, p.second);
      if (arc_map) *arc_map = detail::identity_rep(g.arc_count());
      return out;
    }
    case StrictOpKind::DeleteArc: {
      if (op.arc < 0 || op.arc >= g.arc_count() || at_root(op.arc)) throw IllegalOperation("arc is incident with a root");
      keep[op.arc] = false;
      break;
    }
    case StrictOpKind::DeletePair: {
      if (op.arc < 0 || op.arc >= g.arc_count() || !at_root(op.arc)) throw IllegalOperation("arc is not incident with a root");
      for (int a : detail::iota_closure(s, op.arc)) {
        if (marked(a)) throw IllegalOperation("iota partner is marked");
        keep[a] = false;
      }
      break;
    }
    case StrictOpKind::ContractArc: {
      if (op.arc < 0 || op.arc >= g.arc_count()) throw IllegalOperation("unknown arc");
      int x = g.opposite(op.arc, op.keep_node);
      if (g.arc(op.arc).u != op.keep_node && g.arc(op.arc).v != op.keep_node)
        throw IllegalOperation("keep node is not an endpoint");
      if (!strict_contractible(s, op.arc, x)) throw IllegalOperation("contraction not allowed");
      keep[op.arc] = false;
      rep[x] = op.keep_node;
      break;
    }
  }
  auto r = detail::rebuild(g, rep, keep, {s.v, s.w});
  if (arc_map) *arc_map = r.arc_map;
  return detail::remap_strict(s, r);
}

}  // namespace embed3
