#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"

namespace embed3 {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  int u = 0;
  int v = 0;
};

// Arc-ends are encoded as 2 * arc + side, side 0 at arc.u and side 1 at arc.v.
inline int arc_of(int end) { return end >> 1; }
inline int other_end(int end) { return end ^ 1; }
inline int make_end(int arc, int side) { return 2 * arc + side; }

// Undirected multigraph on nodes 0..n-1; loops and parallel arcs are allowed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int nodes) : n_(nodes) {}

  int add_node() { return n_++; }
  int add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("arc endpoint out of range");
    arcs_.push_back({u, v});
    return static_cast<int>(arcs_.size()) - 1;
  }

  int node_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int a) const { return arcs_.at(a); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  int node_of_end(int end) const {
    const Arc& a = arcs_.at(arc_of(end));
    return (end & 1) ? a.v : a.u;
  }
  bool is_loop(int a) const { return arcs_[a].u == arcs_[a].v; }
  int opposite(int a, int x) const { return arcs_[a].u == x ? arcs_[a].v : arcs_[a].u; }

  // Incident arc-ends per node, in arc order (a loop contributes two ends).
  std::vector<std::vector<int>> incidence() const {
    std::vector<std::vector<int>> inc(n_);
    for (int a = 0; a < arc_count(); ++a) {
      inc[arcs_[a].u].push_back(make_end(a, 0));
      inc[arcs_[a].v].push_back(make_end(a, 1));
    }
    return inc;
  }
  std::vector<int> degrees() const {
    std::vector<int> d(n_, 0);
    for (const Arc& a : arcs_) {
      ++d[a.u];
      ++d[a.v];
    }
    return d;
  }
  bool has_loop() const {
    return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.u == a.v; });
  }
  bool has_parallel() const {
    std::vector<std::pair<int, int>> keys;
    for (const Arc& a : arcs_) keys.emplace_back(std::min(a.u, a.v), std::max(a.u, a.v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
  return g;
}

inline Graph complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_arc(i, p + j);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

// Wheel with hub 0 and rim 1..n.
inline Graph wheel_graph(int n) {
  Graph g(n + 1);
  for (int i = 1; i <= n; ++i) g.add_arc(0, i);
  for (int i = 1; i <= n; ++i) g.add_arc(i, i % n + 1);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_arc(i, (i + 1) % 5);
    g.add_arc(i, i + 5);
    g.add_arc(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Connected components over nodes; returns component id per node.
inline std::vector<int> components(const Graph& g, int* count = nullptr) {
  std::vector<int> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : g.arcs()) parent[find(a.u)] = find(a.v);
  std::vector<int> comp(g.node_count(), -1);
  int next = 0;
  std::vector<int> id_of_root(g.node_count(), -1);
  for (int x = 0; x < g.node_count(); ++x) {
    int r = find(x);
    if (id_of_root[r] < 0) id_of_root[r] = next++;
    comp[x] = id_of_root[r];
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const Graph& g) {
  int c = 0;
  components(g, &c);
  return c <= 1;
}

// Connectivity of g with a set of nodes removed.
inline bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  int start = -1, alive = 0;
  for (int x = 0; x < g.node_count(); ++x)
    if (!removed[x]) {
      ++alive;
      if (start < 0) start = x;
    }
  if (alive <= 1) return true;
  std::vector<std::vector<int>> nb(g.node_count());
  for (const Arc& a : g.arcs()) {
    if (removed[a.u] || removed[a.v]) continue;
    nb[a.u].push_back(a.v);
    nb[a.v].push_back(a.u);
  }
  std::vector<bool> seen(g.node_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : nb[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == alive;
}

struct ConnectivityReport {
  bool ok = true;
  std::string defect;           // empty when ok
  std::vector<int> separator;   // offending node set, if any
};

// k-connectivity in the strict sense: at least k+1 nodes, no loops, no
// parallel arcs when k > 2, and no separator of fewer than k nodes.
inline ConnectivityReport k_connectivity(const Graph& g, int k) {
  ConnectivityReport r;
  const int n = g.node_count();
  if (n < k + 1) {
    r.ok = false;
    r.defect = "fewer than " + std::to_string(k + 1) + " nodes";
    return r;
  }
  if (g.has_loop()) {
    r.ok = false;
    r.defect = "loop";
    return r;
  }
  if (k > 2 && g.has_parallel()) {
    r.ok = false;
    r.defect = "parallel arcs";
    return r;
  }
  std::vector<bool> removed(n, false);
  std::vector<int> chosen;
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (found) return;
    if (!connected_without(g, removed)) {
      found = chosen;
      return;
    }
    if (left == 0) return;
    for (int x = start; x < n && !found; ++x) {
      removed[x] = true;
      chosen.push_back(x);
      self(self, x + 1, left - 1);
      chosen.pop_back();
      removed[x] = false;
    }
  };
  rec(rec, 0, k - 1);
  if (found) {
    r.ok = false;
    r.separator = *found;
    r.defect = found->empty() ? "disconnected" : "separator";
  }
  return r;
}

inline bool is_k_connected(const Graph& g, int k) { return k_connectivity(g, k).ok; }

// Rotation system: per node, the cyclic order of its incident arc-ends.
struct GraphRotation {
  std::vector<std::vector<int>> rotator;

  bool operator==(const GraphRotation& o) const { return rotator == o.rotator; }
};

inline GraphRotation reversed(const GraphRotation& r) {
  GraphRotation out = r;
  for (auto& cyc : out.rotator) {
    if (cyc.size() > 1) std::reverse(cyc.begin() + 1, cyc.end());
  }
  return out;
}

// Rotate every cycle to start at its least element.
inline GraphRotation normalised(const GraphRotation& r) {
  GraphRotation out = r;
  for (auto& cyc : out.rotator) {
    if (cyc.empty()) continue;
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
  }
  return out;
}

inline bool valid_rotation(const Graph& g, const GraphRotation& r) {
  if (static_cast<int>(r.rotator.size()) != g.node_count()) return false;
  auto inc = g.incidence();
  for (int x = 0; x < g.node_count(); ++x) {
    std::vector<int> a = r.rotator[x], b = inc[x];
    std::sort(a.begin(), a.end());
    if (a != b) return false;
  }
  return true;
}

struct TracedSurface {
  std::vector<std::vector<int>> walks;  // each walk is a sequence of arc-ends (darts)
  std::vector<int> component_of_node;
  std::vector<int> euler;               // per component
  std::vector<int> genus;               // per component, (2 - chi) / 2
};

// Face tracing: a dart is an arc-end d at its node; the walk leaves along d,
// arrives at the opposite end, and continues with the successor of that end
// in the rotator at the arrival node.
inline TracedSurface trace_faces(const Graph& g, const GraphRotation& r) {
  if (!valid_rotation(g, r)) throw GraphError("malformed rotation");
  const int ends = 2 * g.arc_count();
  std::vector<int> succ(ends, -1);
  for (const auto& cyc : r.rotator)
    for (std::size_t i = 0; i < cyc.size(); ++i) succ[cyc[i]] = cyc[(i + 1) % cyc.size()];
  TracedSurface s;
  std::vector<bool> used(ends, false);
  for (int d = 0; d < ends; ++d) {
    if (used[d]) continue;
    std::vector<int> walk;
    int cur = d;
    while (!used[cur]) {
      used[cur] = true;
      walk.push_back(cur);
      cur = succ[other_end(cur)];
    }
    s.walks.push_back(std::move(walk));
  }
  int comps = 0;
  s.component_of_node = components(g, &comps);
  std::vector<int> v(comps, 0), e(comps, 0), f(comps, 0);
  for (int x = 0; x < g.node_count(); ++x) ++v[s.component_of_node[x]];
  for (const Arc& a : g.arcs()) ++e[s.component_of_node[a.u]];
  for (const auto& w : s.walks) ++f[s.component_of_node[g.node_of_end(w.front())]];
  s.euler.resize(comps);
  s.genus.resize(comps);
  for (int c = 0; c < comps; ++c) {
    // an isolated node bounds a single face of its own sphere
    if (e[c] == 0) f[c] = 1;
    s.euler[c] = v[c] - e[c] + f[c];
    s.genus[c] = (2 - s.euler[c]) / 2;
  }
  return s;
}

inline bool is_planar_rotation(const Graph& g, const GraphRotation& r) {
  TracedSurface s = trace_faces(g, r);
  return std::all_of(s.euler.begin(), s.euler.end(), [](int chi) { return chi == 2; });
}

// Calls f(rotation) for every rotation system of g; f returns false to stop.
// Returns false when stopped early.
template <class F>
bool for_each_rotation(const Graph& g, F&& f) {
  auto inc = g.incidence();
  GraphRotation r;
  r.rotator = inc;
  std::vector<std::vector<int>> tails(g.node_count());
  for (int x = 0; x < g.node_count(); ++x)
    if (!inc[x].empty()) tails[x].assign(inc[x].begin() + 1, inc[x].end());
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == g.node_count()) return f(static_cast<const GraphRotation&>(r));
    if (inc[x].size() <= 2) return self(self, x + 1);
    std::vector<int> t = tails[x];
    std::sort(t.begin(), t.end());
    do {
      r.rotator[x].assign(1, inc[x].front());
      r.rotator[x].insert(r.rotator[x].end(), t.begin(), t.end());
      if (!self(self, x + 1)) return false;
    } while (std::next_permutation(t.begin(), t.end()));
    return true;
  };
  return rec(rec, 0);
}

// Number of rotation systems: product of (deg - 1)! over nodes, saturating.
inline double rotation_count(const Graph& g) {
  double total = 1;
  for (int d : g.degrees())
    for (int i = 2; i < d; ++i) total *= i;
  return total;
}

struct VertexSum {
  Graph graph;
  std::vector<int> node_from_h1;  // h1 node -> sum node (-1 for the summed vertex)
  std::vector<int> node_from_h2;
  std::vector<int> arc_from_h1;   // h1 arc -> sum arc (arcs at the summed vertex map to the joining arc)
  std::vector<int> arc_from_h2;
};

// Vertex sum over v1 in h1 and v2 in h2: delete both, join the far ends of
// every pair of arcs matched by iota (pairs h1-arc at v1, h2-arc at v2).
inline VertexSum vertex_sum(const Graph& h1, int v1, const Graph& h2, int v2,
                            const std::vector<std::pair<int, int>>& iota) {
  auto check_star = [](const Graph& h, int v, std::vector<int> given, const char* which) {
    std::vector<int> star;
    for (int a = 0; a < h.arc_count(); ++a) {
      if (h.is_loop(a) && h.arc(a).u == v) throw GraphError(std::string("loop at summed vertex in ") + which);
      if (h.arc(a).u == v || h.arc(a).v == v) star.push_back(a);
    }
    std::sort(given.begin(), given.end());
    if (given != star) throw GraphError(std::string("bad bijection for ") + which);
  };
  std::vector<int> left, right;
  for (const auto& [a, b] : iota) {
    left.push_back(a);
    right.push_back(b);
  }
  check_star(h1, v1, left, "first graph");
  check_star(h2, v2, right, "second graph");

  VertexSum s;
  s.node_from_h1.assign(h1.node_count(), -1);
  s.node_from_h2.assign(h2.node_count(), -1);
  s.arc_from_h1.assign(h1.arc_count(), -1);
  s.arc_from_h2.assign(h2.arc_count(), -1);
  for (int x = 0; x < h1.node_count(); ++x)
    if (x != v1) s.node_from_h1[x] = s.graph.add_node();
  for (int x = 0; x < h2.node_count(); ++x)
    if (x != v2) s.node_from_h2[x] = s.graph.add_node();
  for (int a = 0; a < h1.arc_count(); ++a) {
    const Arc& arc = h1.arc(a);
    if (arc.u != v1 && arc.v != v1) s.arc_from_h1[a] = s.graph.add_arc(s.node_from_h1[arc.u], s.node_from_h1[arc.v]);
  }
  for (int a = 0; a < h2.arc_count(); ++a) {
    const Arc& arc = h2.arc(a);
    if (arc.u != v2 && arc.v != v2) s.arc_from_h2[a] = s.graph.add_arc(s.node_from_h2[arc.u], s.node_from_h2[arc.v]);
  }
  for (const auto& [a, b] : iota) {
    int x = s.node_from_h1[h1.opposite(a, v1)];
    int y = s.node_from_h2[h2.opposite(b, v2)];
    int c = s.graph.add_arc(x, y);
    s.arc_from_h1[a] = c;
    s.arc_from_h2[b] = c;
  }
  return s;
}

// Rotation of a vertex sum assembled from rotations of the summands: every
// retained node keeps its rotator, transcribed to the sum's arc-ends.
inline GraphRotation combined_rotation(const Graph& h1, int v1, const GraphRotation& r1, const Graph& h2, int v2,
                                       const GraphRotation& r2, const VertexSum& s) {
  GraphRotation out;
  out.rotator.assign(s.graph.node_count(), {});
  auto transcribe = [&](const Graph& h, int v, const GraphRotation& r, const std::vector<int>& node_map,
                        const std::vector<int>& arc_map) {
    for (int x = 0; x < h.node_count(); ++x) {
      if (x == v) continue;
      int nx = node_map[x];
      for (int end : r.rotator[x]) {
        int a = arc_of(end);
        int na = arc_map[a];
        const Arc& arc = s.graph.arc(na);
        int side;
        if (arc.u == arc.v) {
          side = end & 1;
        } else {
          side = arc.u == nx ? 0 : 1;
        }
        out.rotator[nx].push_back(make_end(na, side));
      }
    }
  };
  transcribe(h1, v1, r1, s.node_from_h1, s.arc_from_h1);
  transcribe(h2, v2, r2, s.node_from_h2, s.arc_from_h2);
  return out;
}

struct GraphMinor {
  Graph graph;
  GraphRotation rotation;
  std::vector<int> node_map;  // old node -> new node
  std::vector<int> arc_map;   // old arc -> new arc (-1 if removed)
};

// Delete arc a; the rotation loses the two ends of a.
inline GraphMinor delete_arc(const Graph& g, const GraphRotation& r, int a) {
  GraphMinor m;
  m.graph = Graph(g.node_count());
  m.node_map.resize(g.node_count());
  std::iota(m.node_map.begin(), m.node_map.end(), 0);
  m.arc_map.assign(g.arc_count(), -1);
  for (int b = 0; b < g.arc_count(); ++b)
    if (b != a) m.arc_map[b] = m.graph.add_arc(g.arc(b).u, g.arc(b).v);
  m.rotation.rotator.resize(g.node_count());
  for (int x = 0; x < g.node_count(); ++x)
    for (int end : r.rotator[x])
      if (arc_of(end) != a) m.rotation.rotator[x].push_back(make_end(m.arc_map[arc_of(end)], end & 1));
  return m;
}

// Contract non-loop arc a = (v, w) onto v: the interval at a in the rotator
// of v is replaced by the rotator of w read from the successor of a, so the
// predecessor of a at v is followed by the successor of a at w.
inline GraphMinor contract_arc(const Graph& g, const GraphRotation& r, int a) {
  if (g.is_loop(a)) throw GraphError("cannot contract a loop");
  const int v = g.arc(a).u, w = g.arc(a).v;
  GraphMinor m;
  m.node_map.assign(g.node_count(), -1);
  int next = 0;
  for (int x = 0; x < g.node_count(); ++x)
    if (x != w) m.node_map[x] = next++;
  m.node_map[w] = m.node_map[v];
  m.graph = Graph(next);
  m.arc_map.assign(g.arc_count(), -1);
  for (int b = 0; b < g.arc_count(); ++b)
    if (b != a) m.arc_map[b] = m.graph.add_arc(m.node_map[g.arc(b).u], m.node_map[g.arc(b).v]);
  auto translate = [&](int end) { return make_end(m.arc_map[arc_of(end)], end & 1); };
  m.rotation.rotator.assign(next, {});
  for (int x = 0; x < g.node_count(); ++x) {
    if (x == w) continue;
    auto& out = m.rotation.rotator[m.node_map[x]];
    if (x != v) {
      for (int end : r.rotator[x]) out.push_back(translate(end));
      continue;
    }
    for (int end : r.rotator[v]) {
      if (arc_of(end) != a) {
        out.push_back(translate(end));
        continue;
      }
      const auto& rw = r.rotator[w];
      auto pos = std::find(rw.begin(), rw.end(), make_end(a, 1));
      std::size_t i = static_cast<std::size_t>(pos - rw.begin());
      for (std::size_t k = 1; k < rw.size(); ++k) out.push_back(translate(rw[(i + k) % rw.size()]));
    }
  }
  return m;
}

// Colour-refinement based isomorphism test for small multigraphs.
inline ColouredGraph coloured(const Graph& g) {
  ColouredGraph cg(g.node_count());
  for (int a = 0; a < g.arc_count(); ++a) {
    int x = cg.add_node(1);
    cg.add_edge(g.arc(a).u, x, 0);
    cg.add_edge(g.arc(a).v, x, 0);
  }
  return cg;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.arc_count() != b.arc_count()) return false;
  return canonical_certificate(coloured(a)) == canonical_certificate(coloured(b));
}

}  // namespace embed3
