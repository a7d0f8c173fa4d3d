#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "graph.hpp"
#include "marked.hpp"
#include "planarity.hpp"

namespace embed3 {

// Per edge, a cyclic order of its passages.
using ComplexRotation = std::map<std::string, std::vector<Passage>>;

namespace detail {

// Equality of cyclic sequences.
template <class T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[(i + off) % b.size()])) return false;
  return true;
}

template <class T>
std::vector<T> cyclic_reverse(std::vector<T> a) {
  if (a.size() > 1) std::reverse(a.begin() + 1, a.end());
  return a;
}

template <class T>
std::vector<T> least_first(std::vector<T> a) {
  if (!a.empty()) std::rotate(a.begin(), std::min_element(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace detail

// Empty if sigma lists every passage of every edge exactly once.
inline std::string rotation_defect(const Complex2& c, const ComplexRotation& sigma) {
  for (const auto& [e, ends] : c.edges) {
    auto it = sigma.find(e);
    if (it == sigma.end()) return "no cyclic order for edge '" + e + "'";
    auto have = it->second;
    auto want = passages(c, e);
    std::sort(have.begin(), have.end());
    if (have != want) return "cyclic order of edge '" + e + "' does not list its passages";
  }
  for (const auto& [e, cyc] : sigma)
    if (!c.edges.count(e)) return "cyclic order for unknown edge '" + e + "'";
  return "";
}

// Rotator at (e, head) is sigma_e, at (e, tail) its reverse, transcribed
// from passages to arc-ends of the link.
inline GraphRotation induce_link_rotation(const LinkGraph& L, const ComplexRotation& sigma) {
  GraphRotation r;
  r.rotator.resize(L.nodes.size());
  for (std::size_t x = 0; x < L.nodes.size(); ++x) {
    const auto& order = sigma.at(L.nodes[x].edge);
    std::vector<int> rot;
    for (const Passage& p : order)
      for (const auto& np : L.node_passages[x])
        if (np.passage == p) rot.push_back(np.arc_end);
    r.rotator[x] = L.nodes[x].end == End::Head ? rot : detail::cyclic_reverse(rot);
  }
  return r;
}

inline GraphRotation induce_link_rotation(const Complex2& c, const ComplexRotation& sigma, const std::string& v) {
  return induce_link_rotation(link_graph(c, v), sigma);
}

// The least vertex whose induced link rotation is not planar, if any.
inline std::optional<std::string> nonplanar_vertex(const Complex2& c, const ComplexRotation& sigma) {
  if (!rotation_defect(c, sigma).empty()) throw ComplexError(rotation_defect(c, sigma));
  for (const auto& v : c.vertices) {
    LinkGraph L = link_graph(c, v);
    if (!is_planar_rotation(L.graph, induce_link_rotation(L, sigma))) return v;
  }
  return std::nullopt;
}

inline bool is_planar_rotation_system(const Complex2& c, const ComplexRotation& sigma) {
  return rotation_defect(c, sigma).empty() && !nonplanar_vertex(c, sigma);
}

// Transcribe a link rotator at node x back to passages.
inline std::vector<Passage> rotator_passages(const LinkGraph& L, int x, const GraphRotation& r) {
  std::vector<Passage> out;
  for (int end : r.rotator[x])
    for (const auto& np : L.node_passages[x])
      if (np.arc_end == end) out.push_back(np.passage);
  return out;
}

// Rotators at the head and tail node of each loop are reverse under the
// pairing of arc-ends flanking the same traversal.
inline bool loop_condition(const LinkGraph& L, const GraphRotation& r) {
  for (const auto& loop : L.loops()) {
    int h = L.node_index(loop, End::Head), t = L.node_index(loop, End::Tail);
    std::map<int, int> to_head;
    for (const auto& p : L.loop_pairs)
      if (p.loop == loop) to_head[p.tail_end] = p.head_end;
    std::vector<int> mapped;
    for (int end : r.rotator[t]) mapped.push_back(to_head.at(end));
    if (!detail::cyclic_equal(r.rotator[h], detail::cyclic_reverse(mapped))) return false;
  }
  return true;
}

struct LoopPlanarity {
  bool ok = false;
  std::optional<GraphRotation> witness;
};

// Loop-planarity of the link at v. A 3-connected link has only its two
// canonical planar rotations; otherwise every rotation is tried within the
// budget.
inline LoopPlanarity is_loop_planar(const LinkGraph& L, double budget = 1e6) {
  if (!is_planar(L.graph)) return {};
  if (is_k_connected(L.graph, 3)) {
    auto pair = canonical_rotation(L.graph);
    for (const auto* r : {&pair->first, &pair->second})
      if (loop_condition(L, *r)) return {true, *r};
    return {};
  }
  if (L.loop_pairs.empty()) return {true, planar_embedding(L.graph)};
  if (rotation_count(L.graph) > budget) throw BudgetExceeded("loop planarity: rotation count exceeds budget");
  LoopPlanarity out;
  for_each_rotation(L.graph, [&](const GraphRotation& r) {
    if (is_planar_rotation(L.graph, r) && loop_condition(L, r)) out = {true, r};
    return !out.ok;
  });
  return out;
}

inline LoopPlanarity is_loop_planar(const Complex2& c, const std::string& v, double budget = 1e6) {
  return is_loop_planar(link_graph(c, v), budget);
}

// ---------------------------------------------------------------------------
// Brute force

struct BruteForceResult {
  std::optional<ComplexRotation> rotation;
  double candidates = 0;  // number of rotation systems covered
};

inline double rotation_system_count(const Complex2& c) {
  double total = 1;
  for (const auto& [e, d] : face_degrees(c))
    for (int i = 2; i < d; ++i) total *= i;
  return total;
}

// Every rotation system, edges in id order; a vertex is checked as soon as
// all its edges have an order.
inline BruteForceResult brute_force_rotation_search(const Complex2& c, double budget = 1e6) {
  BruteForceResult out;
  out.candidates = rotation_system_count(c);
  if (out.candidates > budget) throw BudgetExceeded("rotation system count exceeds budget");
  std::vector<std::string> edges;
  std::vector<std::vector<Passage>> ps;
  for (const auto& [e, ends] : c.edges) {
    edges.push_back(e);
    ps.push_back(passages(c, e));
  }
  std::map<std::string, int> last;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    last[c.edges.at(edges[i]).tail] = static_cast<int>(i);
    last[c.edges.at(edges[i]).head] = static_cast<int>(i);
  }
  std::vector<std::vector<std::string>> due(edges.size());
  for (const auto& [v, i] : last) due[i].push_back(v);
  std::map<std::string, LinkGraph> links;
  for (const auto& v : c.vertices) links.emplace(v, link_graph(c, v));
  ComplexRotation sigma;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) {
      out.rotation = sigma;
      return true;
    }
    std::vector<Passage> rest(ps[i].begin() + (ps[i].empty() ? 0 : 1), ps[i].end());
    do {
      std::vector<Passage> cyc;
      if (!ps[i].empty()) cyc.push_back(ps[i].front());
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      sigma[edges[i]] = cyc;
      bool ok = true;
      for (const auto& v : due[i]) {
        const LinkGraph& L = links.at(v);
        if (!is_planar_rotation(L.graph, induce_link_rotation(L, sigma))) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    sigma.erase(edges[i]);
    return false;
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Solver for locally 3-connected complexes

enum class EdgeColour { Green, Red, Incompatible };

inline const char* colour_name(EdgeColour k) {
  return k == EdgeColour::Green ? "green" : k == EdgeColour::Red ? "red" : "incompatible";
}

// A planar rotation of every link, indexed by vertex.
struct LinkAssignment {
  std::map<std::string, LinkGraph> links;
  std::map<std::string, GraphRotation> rotation;
};

// Compare the rotators at node e of the links at both ends of e.
inline EdgeColour colour_edge(const Complex2& c, const LinkAssignment& a, const std::string& e) {
  const EdgeEnds& ends = c.ends(e);
  if (ends.tail == ends.head) throw ComplexError("cannot colour loop '" + e + "'");
  const LinkGraph& Lt = a.links.at(ends.tail);
  const LinkGraph& Lh = a.links.at(ends.head);
  auto pt = rotator_passages(Lt, Lt.node_index(e, End::Tail), a.rotation.at(ends.tail));
  auto ph = rotator_passages(Lh, Lh.node_index(e, End::Head), a.rotation.at(ends.head));
  if (detail::cyclic_equal(pt, detail::cyclic_reverse(ph))) return EdgeColour::Green;
  if (detail::cyclic_equal(pt, ph)) return EdgeColour::Red;
  return EdgeColour::Incompatible;
}

enum class FailureKind { NonplanarLink, Incompatible, OddCycle, LoopNotPlanar, Hypothesis };

inline const char* failure_name(FailureKind k) {
  switch (k) {
    case FailureKind::NonplanarLink: return "nonplanar-link";
    case FailureKind::Incompatible: return "incompatible-edge";
    case FailureKind::OddCycle: return "odd-cycle";
    case FailureKind::LoopNotPlanar: return "loop-not-planar";
    case FailureKind::Hypothesis: return "hypothesis";
  }
  return "?";
}

struct SolverFailure {
  FailureKind kind = FailureKind::Hypothesis;
  std::string vertex;                      // NonplanarLink, LoopNotPlanar, Hypothesis
  std::string edge;                        // Incompatible; OddCycle: the edge kept
  EdgeCycle cycle;                         // OddCycle
  std::optional<KuratowskiWitness> kuratowski;
  std::string detail;
};

struct SolverResult {
  std::optional<ComplexRotation> rotation;
  std::optional<SolverFailure> failure;
};

namespace detail {

// Vertices of an edge cycle in order: vertex i is shared by edges i-1 and i.
inline std::vector<std::string> cycle_vertices(const Complex2& c, const EdgeCycle& o) {
  std::vector<std::string> vs;
  const std::size_t n = o.size();
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeEnds& prev = c.ends(o[(i + n - 1) % n]);
    const EdgeEnds& cur = c.ends(o[i]);
    if (n == 2) {
      vs.push_back(i == 0 ? c.ends(o[0]).tail : c.ends(o[0]).head);
      continue;
    }
    vs.push_back(cur.tail == prev.tail || cur.tail == prev.head ? cur.tail : cur.head);
  }
  return vs;
}

// Shortcut along chords, keeping the part with an odd number of red edges.
inline EdgeCycle odd_chordless(const Complex2& c, EdgeCycle o, const std::function<bool(const std::string&)>& red) {
  while (true) {
    auto vs = cycle_vertices(c, o);
    const std::size_t n = o.size();
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[vs[i]] = i;
    std::set<std::string> in_o(o.begin(), o.end());
    std::optional<std::tuple<std::string, std::size_t, std::size_t>> chord;
    for (const auto& [e, ends] : c.edges) {
      if (in_o.count(e) || ends.tail == ends.head) continue;
      auto it = pos.find(ends.tail), jt = pos.find(ends.head);
      if (it == pos.end() || jt == pos.end()) continue;
      std::size_t i = std::min(it->second, jt->second), j = std::max(it->second, jt->second);
      bool parallel = j == i + 1 || (i == 0 && j == n - 1);
      if (parallel) continue;
      chord = std::make_tuple(e, i, j);
      break;
    }
    if (!chord) return o;
    auto [e, i, j] = *chord;
    // edges i..j-1 run from vs[i] to vs[j]; the rest from vs[j] back to vs[i]
    EdgeCycle first(o.begin() + static_cast<long>(i), o.begin() + static_cast<long>(j));
    first.push_back(e);
    EdgeCycle second(o.begin() + static_cast<long>(j), o.end());
    second.insert(second.end(), o.begin(), o.begin() + static_cast<long>(i));
    second.push_back(e);
    auto reds = [&](const EdgeCycle& k) {
      int r = 0;
      for (const auto& x : k) r += red(x) ? 1 : 0;
      return r;
    };
    o = reds(first) % 2 ? first : second;
  }
}

}  // namespace detail

// Pick the canonical planar rotation at a BFS root, propagate along tree
// edges so they are green, and check the remaining edges and loops.
inline SolverResult find_planar_rotation_system(const Complex2& c) {
  SolverResult out;
  LinkAssignment a;
  for (const auto& v : c.vertices) a.links.emplace(v, link_graph(c, v));
  for (const auto& [v, L] : a.links) {
    if (auto k = kuratowski_witness(L.graph)) {
      SolverFailure f{FailureKind::NonplanarLink, v, "", {}, k, "link graph is not planar"};
      out.failure = f;
      return out;
    }
  }
  std::map<std::string, std::pair<GraphRotation, GraphRotation>> canon;
  for (const auto& [v, L] : a.links) {
    auto conn = k_connectivity(L.graph, 3);
    if (!conn.ok) {
      out.failure = SolverFailure{FailureKind::Hypothesis, v, "", {}, std::nullopt, "link graph is not 3-connected: " + conn.defect};
      return out;
    }
    canon.emplace(v, *canonical_rotation(L.graph));
  }
  for (const auto& [v, pair] : canon) a.rotation[v] = pair.first;
  // incompatibility does not depend on the choices
  for (const auto& [e, ends] : c.edges) {
    if (ends.tail == ends.head) continue;
    if (colour_edge(c, a, e) == EdgeColour::Incompatible) {
      out.failure = SolverFailure{FailureKind::Incompatible, "", e, {}, std::nullopt, "rotators at the edge neither agree nor are reverse"};
      return out;
    }
  }
  std::map<std::string, std::vector<std::string>> incident;
  for (const auto& [e, ends] : c.edges) {
    if (ends.tail == ends.head) continue;
    incident[ends.tail].push_back(e);
    incident[ends.head].push_back(e);
  }
  std::set<std::string> seen, tree;
  std::map<std::string, std::string> parent_edge;
  for (const auto& root : c.vertices) {
    if (seen.count(root)) continue;
    seen.insert(root);
    std::deque<std::string> queue{root};
    while (!queue.empty()) {
      std::string x = queue.front();
      queue.pop_front();
      for (const auto& e : incident[x]) {
        const EdgeEnds& ends = c.ends(e);
        std::string y = ends.tail == x ? ends.head : ends.tail;
        if (seen.count(y)) continue;
        seen.insert(y);
        tree.insert(e);
        parent_edge[y] = e;
        if (colour_edge(c, a, e) == EdgeColour::Red) a.rotation[y] = canon.at(y).second;
        queue.push_back(y);
      }
    }
  }
  auto red = [&](const std::string& e) { return colour_edge(c, a, e) == EdgeColour::Red; };
  for (const auto& [e, ends] : c.edges) {
    if (ends.tail == ends.head || tree.count(e) || !red(e)) continue;
    // fundamental cycle: tree paths from both ends to their meeting point
    auto path_up = [&](std::string x) {
      std::vector<std::pair<std::string, std::string>> p;  // (vertex, edge to parent)
      while (parent_edge.count(x)) {
        const std::string& pe = parent_edge.at(x);
        p.emplace_back(x, pe);
        const EdgeEnds& pe_ends = c.ends(pe);
        x = pe_ends.tail == x ? pe_ends.head : pe_ends.tail;
      }
      p.emplace_back(x, "");
      return p;
    };
    auto pt = path_up(ends.tail), ph = path_up(ends.head);
    std::set<std::string> on_h;
    for (const auto& [x, pe] : ph) on_h.insert(x);
    std::string meet;
    EdgeCycle up_t;
    for (const auto& [x, pe] : pt) {
      if (on_h.count(x)) {
        meet = x;
        break;
      }
      up_t.push_back(pe);
    }
    EdgeCycle up_h;
    for (const auto& [x, pe] : ph) {
      if (x == meet) break;
      up_h.push_back(pe);
    }
    // head -> ... -> meet -> ... -> tail -> head
    EdgeCycle o = up_h;
    o.insert(o.end(), up_t.rbegin(), up_t.rend());
    o.push_back(e);
    o = detail::odd_chordless(c, o, red);
    SolverFailure f{FailureKind::OddCycle, "", o.front(), o, std::nullopt, "chordless cycle with an odd number of red edges"};
    out.failure = f;
    return out;
  }
  for (const auto& [v, L] : a.links) {
    if (L.loop_pairs.empty()) continue;
    if (!loop_condition(L, a.rotation.at(v))) {
      out.failure = SolverFailure{FailureKind::LoopNotPlanar, v, "", {}, std::nullopt, "link graph is not loop-planar"};
      return out;
    }
  }
  ComplexRotation sigma;
  for (const auto& [e, ends] : c.edges) {
    const LinkGraph& L = a.links.at(ends.head);
    sigma[e] = detail::least_first(rotator_passages(L, L.node_index(e, End::Head), a.rotation.at(ends.head)));
  }
  if (!is_planar_rotation_system(c, sigma)) throw ComplexError("internal: assembled rotation system is not planar");
  out.rotation = sigma;
  return out;
}

// ---------------------------------------------------------------------------
// Associated strict marked graphs

struct AssociatedGraph {
  StrictMarkedGraph graph;
  std::array<std::string, 3> faces;
};

// For a loop at x: roots are the loop's head and tail nodes in the link,
// pairs come from three traversals by distinct faces, iota from all
// traversals.
inline std::vector<AssociatedGraph> associated_strict_marked_graphs(const LinkGraph& L, const std::string& loop) {
  std::vector<LoopPair> lp;
  for (const auto& p : L.loop_pairs)
    if (p.loop == loop) lp.push_back(p);
  std::vector<AssociatedGraph> out;
  if (lp.empty()) return out;
  StrictMarkedGraph base;
  base.graph = L.graph;
  base.v = L.node_index(loop, End::Head);
  base.w = L.node_index(loop, End::Tail);
  for (const auto& p : lp) base.iota.emplace_back(arc_of(p.head_end), arc_of(p.tail_end));
  const std::size_t n = lp.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::string &fi = lp[i].passage.face, &fj = lp[j].passage.face, &fk = lp[k].passage.face;
        if (fi == fj || fi == fk || fj == fk) continue;
        AssociatedGraph a{base, {fi, fj, fk}};
        std::size_t idx[3] = {i, j, k};
        for (int t = 0; t < 3; ++t) a.graph.pairs[t] = {arc_of(lp[idx[t]].head_end), arc_of(lp[idx[t]].tail_end)};
        out.push_back(a);
      }
  return out;
}

inline std::vector<AssociatedGraph> associated_strict_marked_graphs(const Complex2& c, const std::string& x,
                                                                    const std::string& loop) {
  if (!c.is_loop(loop) || c.ends(loop).tail != x) throw ComplexError("'" + loop + "' is not a loop at '" + x + "'");
  return associated_strict_marked_graphs(link_graph(c, x), loop);
}

}  // namespace embed3
