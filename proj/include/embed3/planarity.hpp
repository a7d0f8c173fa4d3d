#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "graph.hpp"

namespace embed3 {

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Simple underlying graph: one representative per unordered node pair.
struct SimpleView {
  BoostGraph bg;
  std::vector<std::pair<int, int>> pairs;        // pair index -> (min node, max node)
  std::vector<std::vector<int>> arcs_of_pair;    // arcs in increasing id order
};

inline SimpleView simple_view(const Graph& g, const std::vector<bool>* keep = nullptr) {
  SimpleView s;
  s.bg = BoostGraph(g.node_count());
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < g.arc_count(); ++a) {
    if (keep && !(*keep)[a]) continue;
    const Arc& arc = g.arc(a);
    if (arc.u == arc.v) continue;
    auto key = std::make_pair(std::min(arc.u, arc.v), std::max(arc.u, arc.v));
    auto it = index.find(key);
    if (it == index.end()) {
      int k = static_cast<int>(s.pairs.size());
      index.emplace(key, k);
      s.pairs.push_back(key);
      s.arcs_of_pair.push_back({a});
      boost::add_edge(key.first, key.second, k, s.bg);
    } else {
      s.arcs_of_pair[it->second].push_back(a);
    }
  }
  return s;
}

inline bool boost_planar(SimpleView& s, std::vector<std::vector<BoostEdge>>* embedding) {
  namespace bp = boost::boyer_myrvold_params;
  if (!embedding) return boost::boyer_myrvold_planarity_test(s.bg);
  embedding->assign(boost::num_vertices(s.bg), {});
  return boost::boyer_myrvold_planarity_test(
      bp::graph = s.bg,
      bp::embedding = boost::make_iterator_property_map(embedding->begin(), boost::get(boost::vertex_index, s.bg)));
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
  auto s = detail::simple_view(g);
  return detail::boost_planar(s, nullptr);
}

// A planar rotation system of g, or nothing if g is nonplanar. Parallel arcs
// are reinserted as consecutive runs (reversed at the other end) and loops as
// adjacent end pairs; the result is checked by face tracing.
inline std::optional<GraphRotation> planar_embedding(const Graph& g) {
  auto s = detail::simple_view(g);
  std::vector<std::vector<detail::BoostEdge>> emb;
  if (!detail::boost_planar(s, &emb)) return std::nullopt;
  auto edge_index = boost::get(boost::edge_index, s.bg);
  GraphRotation r;
  r.rotator.assign(g.node_count(), {});
  for (int x = 0; x < g.node_count(); ++x) {
    for (const auto& e : emb[x]) {
      int k = edge_index[e];
      const auto& run = s.arcs_of_pair[k];
      bool low = s.pairs[k].first == x;
      auto push = [&](int a) { r.rotator[x].push_back(make_end(a, g.arc(a).u == x ? 0 : 1)); };
      if (low) {
        for (int a : run) push(a);
      } else {
        for (auto it = run.rbegin(); it != run.rend(); ++it) push(*it);
      }
    }
  }
  for (int a = 0; a < g.arc_count(); ++a) {
    if (!g.is_loop(a)) continue;
    auto& rot = r.rotator[g.arc(a).u];
    rot.push_back(make_end(a, 0));
    rot.push_back(make_end(a, 1));
  }
  if (!is_planar_rotation(g, r)) throw GraphError("internal: embedding failed verification");
  return r;
}

enum class KuratowskiKind { K5, K33 };

struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<int> branch_nodes;           // 5 or 6 nodes; for K33 the two sides are [0..2] and [3..5]
  std::vector<int> arcs;                   // all arcs of the subdivision, increasing
  std::vector<std::vector<int>> paths;     // arc sequences between branch nodes
  std::vector<std::pair<int, int>> path_ends;
};

// Kuratowski subdivision by deletion and retest: drop every arc whose removal
// keeps the graph nonplanar; the remaining arcs form an edge-minimal
// nonplanar subgraph, which is a subdivision of K5 or K3,3.
inline std::optional<KuratowskiWitness> kuratowski_witness(const Graph& g) {
  if (is_planar(g)) return std::nullopt;
  std::vector<bool> keep(g.arc_count(), false);
  {
    // one representative per parallel class, no loops
    auto s = detail::simple_view(g);
    for (const auto& run : s.arcs_of_pair) keep[run.front()] = true;
  }
  for (int a = 0; a < g.arc_count(); ++a) {
    if (!keep[a]) continue;
    keep[a] = false;
    auto s = detail::simple_view(g, &keep);
    if (detail::boost_planar(s, nullptr)) keep[a] = true;
  }
  KuratowskiWitness w;
  std::vector<std::vector<int>> inc(g.node_count());
  for (int a = 0; a < g.arc_count(); ++a)
    if (keep[a]) {
      w.arcs.push_back(a);
      inc[g.arc(a).u].push_back(a);
      inc[g.arc(a).v].push_back(a);
    }
  std::vector<bool> branch(g.node_count(), false);
  for (int x = 0; x < g.node_count(); ++x)
    if (inc[x].size() >= 3) {
      branch[x] = true;
      w.branch_nodes.push_back(x);
    }
  std::vector<bool> walked(g.arc_count(), false);
  for (int x : w.branch_nodes) {
    for (int a0 : inc[x]) {
      if (walked[a0]) continue;
      std::vector<int> path;
      int cur = x, a = a0;
      while (true) {
        walked[a] = true;
        path.push_back(a);
        cur = g.opposite(a, cur);
        if (branch[cur]) break;
        a = inc[cur][0] == a ? inc[cur][1] : inc[cur][0];
      }
      w.paths.push_back(path);
      w.path_ends.emplace_back(x, cur);
    }
  }
  if (w.branch_nodes.size() == 5) {
    w.kind = KuratowskiKind::K5;
  } else {
    w.kind = KuratowskiKind::K33;
    // order the branch nodes by side of the bipartition
    std::vector<int> side(g.node_count(), -1);
    side[w.branch_nodes[0]] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [p, q] : w.path_ends) {
        if (side[p] >= 0 && side[q] < 0) side[q] = 1 - side[p], changed = true;
        if (side[q] >= 0 && side[p] < 0) side[p] = 1 - side[q], changed = true;
      }
    }
    std::stable_sort(w.branch_nodes.begin(), w.branch_nodes.end(),
                     [&](int p, int q) { return side[p] < side[q]; });
  }
  return w;
}

// Structural validity of a Kuratowski witness inside g.
inline bool valid_kuratowski(const Graph& g, const KuratowskiWitness& w) {
  const std::size_t nb = w.kind == KuratowskiKind::K5 ? 5 : 6;
  if (w.branch_nodes.size() != nb) return false;
  if (w.paths.size() != (w.kind == KuratowskiKind::K5 ? 10u : 9u)) return false;
  std::vector<int> used_arc(g.arc_count(), 0), interior(g.node_count(), 0);
  std::vector<bool> is_branch(g.node_count(), false);
  for (int x : w.branch_nodes) is_branch[x] = true;
  std::set<std::pair<int, int>> seen_pairs;
  for (std::size_t i = 0; i < w.paths.size(); ++i) {
    int cur = w.path_ends[i].first;
    if (!is_branch[cur]) return false;
    for (std::size_t k = 0; k < w.paths[i].size(); ++k) {
      int a = w.paths[i][k];
      if (a < 0 || a >= g.arc_count() || used_arc[a]++) return false;
      if (g.arc(a).u != cur && g.arc(a).v != cur) return false;
      cur = g.opposite(a, cur);
      if (k + 1 < w.paths[i].size()) {
        if (is_branch[cur] || interior[cur]++) return false;
      }
    }
    if (cur != w.path_ends[i].second || !is_branch[cur] || cur == w.path_ends[i].first) return false;
    auto key = std::minmax(w.path_ends[i].first, w.path_ends[i].second);
    if (!seen_pairs.insert(key).second) return false;
  }
  if (w.kind == KuratowskiKind::K33) {
    for (const auto& [p, q] : seen_pairs) {
      auto side = [&](int x) {
        return std::find(w.branch_nodes.begin(), w.branch_nodes.end(), x) - w.branch_nodes.begin() < 3;
      };
      if (side(p) == side(q)) return false;
    }
  }
  return true;
}

// For 3-connected planar g, the two planar rotations (each normalised) with
// the lexicographically least one first. Nothing if g is nonplanar.
inline std::optional<std::pair<GraphRotation, GraphRotation>> canonical_rotation(const Graph& g) {
  auto conn = k_connectivity(g, 3);
  if (!conn.ok) throw GraphError("canonical rotation requires a 3-connected graph (" + conn.defect + ")");
  auto r = planar_embedding(g);
  if (!r) return std::nullopt;
  GraphRotation a = normalised(*r), b = normalised(reversed(*r));
  if (b.rotator < a.rotator) std::swap(a, b);
  return std::make_pair(a, b);
}

}  // namespace embed3
