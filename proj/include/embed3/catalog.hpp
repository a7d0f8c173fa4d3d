#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "marked.hpp"

namespace embed3 {

namespace detail {

inline UnlabelledMarkedGraph make_unlabelled(int n, const std::vector<std::pair<int, int>>& arcs, int v, int w,
                                             const std::vector<int>& A, const std::vector<int>& B) {
  UnlabelledMarkedGraph u;
  u.graph = Graph(n);
  for (const auto& [x, y] : arcs) u.graph.add_arc(x, y);
  u.v = v;
  u.w = w;
  u.A = A;
  u.B = B;
  std::sort(u.A.begin(), u.A.end());
  std::sort(u.B.begin(), u.B.end());
  return u;
}

}  // namespace detail

// The four minimal unlabelled marked graphs with v != w on planar graphs.
inline std::vector<UnlabelledMarkedGraph> generate_xcal() {
  std::vector<UnlabelledMarkedGraph> x;
  // K4; A and B are the stars of v and w.
  x.push_back(detail::make_unlabelled(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0, 1, {0, 1, 2}, {0, 3, 4}));
  // 4-wheel, hub w = 0, v = rim node 1; B are the spokes avoiding v.
  x.push_back(detail::make_unlabelled(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}}, 1, 0,
                                      {0, 4, 7}, {1, 2, 3}));
  // Split hub: rim 2-3-4-5, v = 0 adjacent to 3, 4, 5, w = 1 adjacent to 2, 3, 5, arc vw unmarked.
  x.push_back(detail::make_unlabelled(
      6, {{2, 3}, {3, 4}, {4, 5}, {5, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 5}, {0, 1}}, 0, 1, {4, 5, 6},
      {7, 8, 9}));
  // K5 minus the arc u1 u2; v = 0, w = 1, x = 2, u1 = 3, u2 = 4.
  x.push_back(detail::make_unlabelled(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, 0, 1, {0, 1, 2}, {0, 4, 6}));
  return x;
}

// All bijections A -> B of an unlabelled marked graph as marked graphs,
// A and B taken in increasing arc order.
inline std::vector<MarkedGraph> bijections(const UnlabelledMarkedGraph& u) {
  std::vector<MarkedGraph> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    MarkedGraph m;
    m.graph = u.graph;
    m.v = u.v;
    m.w = u.w;
    for (int i = 0; i < 3; ++i) m.pairs[i] = {u.A[i], u.B[perm[i]]};
    out.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Non-planar marked graphs over the members of generate_xcal().
// Members are counted per drawing: two entries are the same only if they
// share the graph and the bijection, so isomorphic entries of different
// members (or related by an automorphism) are kept apart.
inline std::vector<MarkedGraph> generate_ycal() {
  std::vector<MarkedGraph> y;
  for (const auto& u : generate_xcal())
    for (const auto& m : bijections(u))
      if (!is_planar_marked(m)) y.push_back(m);
  return y;
}

namespace detail {

// New arcs at the roots; target >= 0 is an existing node, -1 and -2 are two
// fresh nodes.
inline UnlabelledMarkedGraph with_root_arcs(const UnlabelledMarkedGraph& u,
                                            const std::vector<std::pair<int, int>>& additions) {
  UnlabelledMarkedGraph out = u;
  int fresh[2] = {-1, -1};
  for (const auto& [root, target] : additions) {
    int t = target;
    if (t < 0) {
      int& f = fresh[-target - 1];
      if (f < 0) f = out.graph.add_node();
      t = f;
    }
    out.graph.add_arc(root, t);
  }
  return out;
}

inline bool has_arc_between(const Graph& g, int x, int y) {
  for (const Arc& a : g.arcs())
    if ((a.u == x && a.v == y) || (a.u == y && a.v == x)) return true;
  return false;
}

inline int star_size(const Graph& g, int x) { return static_cast<int>(star(g, x).size()); }

inline std::vector<int> outside(const Graph& g, int x, const std::vector<int>& marked) {
  std::vector<int> out;
  for (int a : star(g, x))
    if (!std::binary_search(marked.begin(), marked.end(), a)) out.push_back(a);
  return out;
}

}  // namespace detail

struct StrictCatalogue {
  std::vector<UnlabelledMarkedGraph> x0, x1, x2, x3, x4;
  KeySet x4_keys;
  std::vector<MarkedGraph> ycal;
  KeySet ycal_keys;
};

namespace detail {

inline void add_unique(std::vector<UnlabelledMarkedGraph>& list, KeySet& seen, const UnlabelledMarkedGraph& u) {
  if (seen.insert(unlabelled_key(u)).second) list.push_back(u);
}

// Subdivide arc a with a fresh node; the half at `root` keeps the marks of a
// at that root, the other half keeps the marks at the far end.
inline UnlabelledMarkedGraph subdivide(const UnlabelledMarkedGraph& u, int a, int root) {
  UnlabelledMarkedGraph out;
  out.graph = Graph(u.graph.node_count() + 1);
  const int s = u.graph.node_count();
  out.v = u.v;
  out.w = u.w;
  int far = u.graph.opposite(a, root);
  int near_arc = -1, far_arc = -1;
  for (int b = 0; b < u.graph.arc_count(); ++b) {
    if (b == a) {
      near_arc = out.graph.add_arc(root, s);
      far_arc = out.graph.add_arc(s, far);
      continue;
    }
    out.graph.add_arc(u.graph.arc(b).u, u.graph.arc(b).v);
  }
  auto map = [&](int b) { return b < a ? b : b + 1; };
  for (int b : u.A) {
    if (b != a) out.A.push_back(map(b));
    else out.A.push_back(root == u.v ? near_arc : far_arc);
  }
  for (int b : u.B) {
    if (b != a) out.B.push_back(map(b));
    else out.B.push_back(root == u.w ? near_arc : far_arc);
  }
  std::sort(out.A.begin(), out.A.end());
  std::sort(out.B.begin(), out.B.end());
  return out;
}

// Additions of arcs at the roots for the second closure stage.
inline std::vector<UnlabelledMarkedGraph> root_additions(const UnlabelledMarkedGraph& u) {
  std::vector<UnlabelledMarkedGraph> out;
  const Graph& g = u.graph;
  auto free_v = outside(g, u.v, u.A), free_w = outside(g, u.w, u.B);
  // arcs between v and w lie in both stars
  auto unmatched = [&](const std::vector<int>& free_here, const std::vector<int>& other_marks) {
    int c = 0;
    for (int a : free_here)
      if (!std::binary_search(other_marks.begin(), other_marks.end(), a)) ++c;
    return c;
  };
  int nv = unmatched(free_v, u.B), nw = unmatched(free_w, u.A);
  const int n = g.node_count();
  std::vector<int> targets_v, targets_w;
  for (int t = 0; t < n; ++t) {
    if (t != u.v) targets_v.push_back(t);
    if (t != u.w) targets_w.push_back(t);
  }
  targets_v.push_back(-1);
  targets_w.push_back(-1);
  targets_w.push_back(-2);
  bool vw_present = has_arc_between(g, u.v, u.w);
  if (nv == 0 && nw == 0) return out;
  if (nv == 1 && nw == 1) {
    for (int t1 : targets_v)
      for (int t2 : targets_w) out.push_back(with_root_arcs(u, {{u.v, t1}, {u.w, t2}}));
    out.push_back(with_root_arcs(u, {{u.v, u.w}}));
    if (!vw_present) {
      for (int t1 : targets_v)
        for (int t2 : targets_w)
          if (t1 != u.w && t2 != u.v) out.push_back(with_root_arcs(u, {{u.v, u.w}, {u.v, t1}, {u.w, t2}}));
    }
    return out;
  }
  // exactly one root has an unmatched arc; the partner goes to the other root
  int root = nw > 0 ? u.v : u.w;
  int other = root == u.v ? u.w : u.v;
  for (int t = 0; t < n; ++t)
    if (t != root) out.push_back(with_root_arcs(u, {{root, t}}));
  out.push_back(with_root_arcs(u, {{root, -1}}));
  if (!vw_present) {
    for (int t = 0; t < n; ++t)
      if (t != root && t != other) out.push_back(with_root_arcs(u, {{root, other}, {root, t}}));
    out.push_back(with_root_arcs(u, {{root, other}, {root, -1}}));
  }
  return out;
}

// Split node z into z and a fresh node z' joined by a new arc; `moved` lists
// the arc-ends at z that move to z'.
inline UnlabelledMarkedGraph coadd(const UnlabelledMarkedGraph& u, int z, const std::vector<int>& moved) {
  UnlabelledMarkedGraph out = u;
  Graph g(u.graph.node_count() + 1);
  const int zp = u.graph.node_count();
  std::vector<Arc> arcs = u.graph.arcs();
  for (int end : moved) {
    Arc& a = arcs[arc_of(end)];
    if (end & 1) a.v = zp;
    else a.u = zp;
  }
  for (const Arc& a : arcs) g.add_arc(a.u, a.v);
  g.add_arc(z, zp);
  out.graph = g;
  return out;
}

}  // namespace detail

inline StrictCatalogue build_strict_catalogue() {
  StrictCatalogue c;
  c.x0 = generate_xcal();
  c.ycal = generate_ycal();
  for (const auto& m : c.ycal) c.ycal_keys.insert(marked_key(m));

  KeySet seen;
  for (const auto& u : c.x0) detail::add_unique(c.x1, seen, u);
  // the 4-wheel member and the split-hub member with the v-w arc subdivided
  {
    const auto& m2 = c.x0[1];
    c.x1.push_back(detail::subdivide(m2, 0, m2.v));
    seen.insert(unlabelled_key(c.x1.back()));
    const auto& m3 = c.x0[2];
    auto s = detail::subdivide(m3, 10, m3.v);
    seen.insert(unlabelled_key(s));
    c.x1.push_back(s);
  }

  KeySet seen2;
  for (const auto& u : c.x1) detail::add_unique(c.x2, seen2, u);
  for (const auto& u : c.x1)
    for (const auto& x : detail::root_additions(u)) {
      if (detail::star_size(x.graph, x.v) != detail::star_size(x.graph, x.w)) continue;
      detail::add_unique(c.x2, seen2, x);
    }

  KeySet seen3;
  for (const auto& u : c.x2) detail::add_unique(c.x3, seen3, u);
  for (const auto& u : c.x2) {
    for (int a : u.A) {
      if (!std::binary_search(u.B.begin(), u.B.end(), a)) continue;
      // parallel split: a stays in A, a new parallel arc takes its place in B
      UnlabelledMarkedGraph p = u;
      int na = p.graph.add_arc(u.graph.arc(a).u, u.graph.arc(a).v);
      std::replace(p.B.begin(), p.B.end(), a, na);
      std::sort(p.B.begin(), p.B.end());
      detail::add_unique(c.x3, seen3, p);
      detail::add_unique(c.x3, seen3, detail::subdivide(u, a, u.v));
    }
  }

  KeySet seen4;
  std::deque<UnlabelledMarkedGraph> queue;
  for (const auto& u : c.x3)
    if (seen4.insert(unlabelled_key(u)).second) {
      c.x4.push_back(u);
      queue.push_back(u);
    }
  while (!queue.empty()) {
    UnlabelledMarkedGraph u = queue.front();
    queue.pop_front();
    auto inc = u.graph.incidence();
    for (int z = 0; z < u.graph.node_count(); ++z) {
      if (z == u.v || z == u.w) continue;
      const auto& ends = inc[z];
      const int d = static_cast<int>(ends.size());
      if (d < 4) continue;
      // subsets containing ends[0] stay; enumerate the moved part
      for (int mask = 1; mask < (1 << d); ++mask) {
        if (mask & 1) continue;
        int moved_count = __builtin_popcount(mask);
        if (moved_count < 2 || d - moved_count < 2) continue;
        std::vector<int> moved;
        for (int i = 0; i < d; ++i)
          if (mask >> i & 1) moved.push_back(ends[i]);
        auto x = detail::coadd(u, z, moved);
        if (seen4.insert(unlabelled_key(x)).second) {
          c.x4.push_back(x);
          queue.push_back(x);
        }
      }
    }
  }
  c.x4_keys = seen4;
  return c;
}

}  // namespace embed3
