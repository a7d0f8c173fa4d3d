#pragma once

#include <algorithm>
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
#include "rotation.hpp"
#include "yprime.hpp"

namespace embed3 {

// ---------------------------------------------------------------------------
// Operations and traces

enum class OpKind { ContractEdge, DeleteFace, ContractFace, DeleteEdge, SplitVertex };

inline const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::ContractEdge: return "contract-edge";
    case OpKind::DeleteFace: return "delete-face";
    case OpKind::ContractFace: return "contract-face";
    case OpKind::DeleteEdge: return "delete-edge";
    case OpKind::SplitVertex: return "split-vertex";
  }
  return "?";
}

inline std::optional<OpKind> op_from_name(const std::string& s) {
  for (OpKind k : {OpKind::ContractEdge, OpKind::DeleteFace, OpKind::ContractFace, OpKind::DeleteEdge,
                   OpKind::SplitVertex})
    if (s == op_name(k)) return k;
  return std::nullopt;
}

struct SpaceMinorOp {
  OpKind kind = OpKind::ContractEdge;
  std::string target;

  bool operator==(const SpaceMinorOp& o) const { return kind == o.kind && target == o.target; }
};

inline std::string to_string(const SpaceMinorOp& op) { return std::string(op_name(op.kind)) + " " + op.target; }

// Applies op after checking its precondition.
inline Complex2 apply_op(const Complex2& c, const SpaceMinorOp& op) {
  switch (op.kind) {
    case OpKind::ContractEdge:
      if (!c.edges.count(op.target)) throw ComplexError("unknown edge '" + op.target + "'");
      if (c.is_loop(op.target)) throw ComplexError("edge '" + op.target + "' is a loop");
      return contract_edge(c, op.target);
    case OpKind::DeleteFace:
      return delete_face(c, op.target);
    case OpKind::ContractFace: {
      const Face& walk = c.face(op.target);
      if (walk.size() > 2) throw ComplexError("face '" + op.target + "' has size " + std::to_string(walk.size()));
      return contract_face(c, op.target);
    }
    case OpKind::DeleteEdge:
      c.ends(op.target);
      return delete_edge(c, op.target);
    case OpKind::SplitVertex:
      if (!c.vertices.count(op.target)) throw ComplexError("unknown vertex '" + op.target + "'");
      return split_vertex(c, op.target);
  }
  return c;
}

struct SpaceMinorTrace {
  Complex2 start;
  std::vector<SpaceMinorOp> ops;
  Complex2 end;
};

struct ReplayResult {
  bool ok = true;
  Complex2 end;
  int failed_step = -1;
  std::string error;
};

inline ReplayResult replay(const Complex2& start, const std::vector<SpaceMinorOp>& ops) {
  ReplayResult r;
  r.end = start;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    try {
      r.end = apply_op(r.end, ops[i]);
    } catch (const ComplexError& e) {
      r.ok = false;
      r.failed_step = static_cast<int>(i);
      r.error = e.what();
      return r;
    }
  }
  return r;
}

inline bool verify_trace(const SpaceMinorTrace& t) {
  auto r = replay(t.start, t.ops);
  return r.ok && r.end == t.end;
}

// (sum of face degrees, vertices + edges); lexicographic.
using Measure = std::pair<long, long>;

inline Measure measure(const Complex2& c) {
  long s = 0;
  for (const auto& [f, walk] : c.faces) s += static_cast<long>(walk.size());
  return {s, static_cast<long>(c.vertices.size() + c.edges.size())};
}

// ---------------------------------------------------------------------------
// Generalised cones

// Cone over a graph G at top "t": one spoke per node of G, one face per arc.
// Nodes in the same class share the far end of their spokes. An arc inside a
// class gives a face of size two, or of size three through a loop at the
// class vertex if its entry in `loop_arcs` is set; an arc between classes
// gives a face of size three through an edge between the class vertices.
inline Complex2 build_generalised_cone(const Graph& g, const std::vector<int>& classes,
                                       const std::vector<bool>& loop_arcs = {}) {
  const int n = g.node_count();
  if (static_cast<int>(classes.size()) != n) throw ComplexError("one class per node required");
  for (int a = 0; a < g.arc_count(); ++a)
    if (g.is_loop(a)) throw ComplexError("base graph has a loop");
  std::map<int, std::vector<int>> members;
  for (int x = 0; x < n; ++x) members[classes[x]].push_back(x);
  for (const auto& [k, xs] : members) {
    // nodes of a class must be joined by arcs inside it
    Graph sub(static_cast<int>(xs.size()));
    std::map<int, int> idx;
    for (std::size_t i = 0; i < xs.size(); ++i) idx[xs[i]] = static_cast<int>(i);
    for (int a = 0; a < g.arc_count(); ++a)
      if (idx.count(g.arc(a).u) && idx.count(g.arc(a).v)) sub.add_arc(idx[g.arc(a).u], idx[g.arc(a).v]);
    if (!is_connected(sub)) throw ComplexError("class " + std::to_string(k) + " is not connected");
  }
  Complex2 c;
  c.name = "cone";
  c.vertices.insert("t");
  auto cls = [&](int k) { return "w" + std::to_string(k); };
  for (const auto& [k, xs] : members) c.vertices.insert(cls(k));
  for (int x = 0; x < n; ++x) c.edges["s" + std::to_string(x)] = {"t", cls(classes[x])};
  for (int a = 0; a < g.arc_count(); ++a) {
    int x = g.arc(a).u, y = g.arc(a).v;
    std::string sx = "s" + std::to_string(x), sy = "s" + std::to_string(y);
    std::string f = "f" + std::to_string(a);
    bool inside = classes[x] == classes[y];
    bool looped = a < static_cast<int>(loop_arcs.size()) && loop_arcs[a];
    if (inside && !looped) {
      c.faces[f] = {{sx, true}, {sy, false}};
    } else {
      std::string h = "h" + std::to_string(a);
      c.edges[h] = {cls(classes[x]), cls(classes[y])};
      c.faces[f] = {{sx, true}, {h, true}, {sy, false}};
    }
  }
  return c;
}

inline Complex2 cone_over(const Graph& g) { return build_generalised_cone(g, [&] {
  std::vector<int> k(g.node_count());
  for (int x = 0; x < g.node_count(); ++x) k[x] = x;
  return k;
}()); }

// Adds a loop at the top of a cone, running once through each face listed in
// `through` (all of size two), plus `singles` faces of size one along it.
inline Complex2 add_top_loop(const Complex2& cone, const std::string& top, const std::vector<std::string>& through,
                             int singles, const std::string& loop = "l") {
  Complex2 c = cone;
  if (c.edges.count(loop)) throw ComplexError("edge '" + loop + "' exists");
  c.edges[loop] = {top, top};
  for (const auto& f : through) {
    Face& walk = c.faces.at(f);
    if (walk.size() != 2) throw ComplexError("face '" + f + "' does not have size two");
    // insert where the walk passes the top
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (c.arrival(walk[i]) == top) {
        walk.insert(walk.begin() + static_cast<long>(i) + 1, Traversal{loop, true});
        break;
      }
  }
  for (int k = 0; k < singles; ++k) c.faces[fresh_id(loop + "f", [&](const std::string& s) { return c.faces.count(s) > 0; })] = {{loop, true}};
  return c;
}

struct ConeStructure {
  std::string top;
  std::string loop;                 // empty unless looped
  Graph base;                       // link at the top with the loop removed
  std::vector<std::string> spoke;   // per base node
  std::vector<std::string> apex;    // per base node: far end of the spoke
  std::vector<std::string> face;    // per base arc
  std::vector<std::string> singles; // faces of size one along the loop
};

namespace detail {

inline std::optional<ConeStructure> cone_at(const Complex2& c, const std::string& t) {
  ConeStructure s;
  s.top = t;
  for (const auto& [e, ends] : c.edges) {
    if (ends.tail == t && ends.head == t) {
      if (!s.loop.empty()) return std::nullopt;
      s.loop = e;
    }
  }
  std::map<std::string, int> node;
  for (const auto& [e, ends] : c.edges) {
    if ((ends.tail == t) == (ends.head == t)) continue;
    node[e] = static_cast<int>(s.spoke.size());
    s.spoke.push_back(e);
    s.apex.push_back(ends.tail == t ? ends.head : ends.tail);
  }
  s.base = Graph(static_cast<int>(s.spoke.size()));
  std::map<std::string, int> h_uses;
  // within-class arcs, for class connectivity
  Graph inside(static_cast<int>(s.spoke.size()));
  for (const auto& [f, walk0] : c.faces) {
    Face walk;
    int loop_uses = 0;
    for (const auto& x : walk0) {
      if (!s.loop.empty() && x.edge == s.loop) ++loop_uses;
      else walk.push_back(x);
    }
    if (loop_uses > 1) return std::nullopt;
    if (walk.empty()) {
      s.singles.push_back(f);
      continue;
    }
    if (loop_uses == 1 && walk.size() != 2) return std::nullopt;
    if (walk.size() != 2 && walk.size() != 3) return std::nullopt;
    auto start = std::find_if(walk.begin(), walk.end(), [&](const Traversal& x) { return c.departure(x) == t; });
    if (start == walk.end()) return std::nullopt;
    std::rotate(walk.begin(), start, walk.end());
    if (!node.count(walk.front().edge) || !node.count(walk.back().edge)) return std::nullopt;
    int x = node[walk.front().edge], y = node[walk.back().edge];
    if (x == y || c.arrival(walk.back()) != t) return std::nullopt;
    bool within = walk.size() == 2;
    if (walk.size() == 3) {
      const std::string& h = walk[1].edge;
      const EdgeEnds& he = c.ends(h);
      if (he.tail == t || he.head == t) return std::nullopt;
      if (++h_uses[h] > 1) return std::nullopt;
      within = he.tail == he.head;
    }
    s.base.add_arc(x, y);
    s.face.push_back(f);
    if (within) inside.add_arc(x, y);
  }
  for (const auto& [e, ends] : c.edges) {
    if (ends.tail == t || ends.head == t) continue;
    if (h_uses[e] != 1) return std::nullopt;
  }
  // spokes ending at one vertex are joined by within-class faces
  auto comp = components(inside);
  std::map<std::string, int> class_comp;
  for (std::size_t x = 0; x < s.spoke.size(); ++x) {
    auto [it, fresh] = class_comp.emplace(s.apex[x], comp[x]);
    if (!fresh && it->second != comp[x]) return std::nullopt;
  }
  return s;
}

}  // namespace detail

// A cone structure at the least vertex admitting one.
inline std::optional<ConeStructure> recognise_cone(const Complex2& c) {
  for (const auto& t : c.vertices) {
    bool every = true;
    for (const auto& [f, walk] : c.faces) {
      bool at = false;
      for (const auto& x : walk) at = at || c.ends(x.edge).tail == t || c.ends(x.edge).head == t;
      every = every && at;
    }
    if (!every) continue;
    if (auto s = detail::cone_at(c, t)) return s;
  }
  return std::nullopt;
}

struct ZMembership {
  int family = 0;        // 1 or 2
  std::string kuratowski; // family 1: K5 or K33
  int base = -1;          // family 2: X4 index of the underlyer base
  std::string top;
};

inline std::optional<ZMembership> is_in_zcal(const Complex2& c, YPrimeIndex& index) {
  auto s = recognise_cone(c);
  if (!s) return std::nullopt;
  if (s->loop.empty()) {
    if (isomorphic(s->base, complete_graph(5))) return ZMembership{1, "K5", -1, s->top};
    if (isomorphic(s->base, complete_bipartite(3, 3))) return ZMembership{1, "K33", -1, s->top};
    return std::nullopt;
  }
  LinkGraph L = link_graph(c, s->top);
  for (const auto& a : associated_strict_marked_graphs(L, s->loop))
    if (auto b = index.member(a.graph)) return ZMembership{2, "", *b, s->top};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reductions

namespace detail {

struct Builder {
  Complex2 cur;
  std::vector<SpaceMinorOp> ops;

  void apply(OpKind k, const std::string& target) {
    SpaceMinorOp op{k, target};
    cur = apply_op(cur, op);
    ops.push_back(op);
  }
  bool touches(const std::string& f, const std::string& v) const {
    for (const auto& x : cur.face(f))
      if (cur.ends(x.edge).tail == v || cur.ends(x.edge).head == v) return true;
    return false;
  }
  std::set<std::string> face_vertices(const std::string& f) const {
    std::set<std::string> out;
    for (const auto& x : cur.face(f)) {
      out.insert(cur.ends(x.edge).tail);
      out.insert(cur.ends(x.edge).head);
    }
    return out;
  }
  void split_if_needed(const std::string& v) {
    if (!cur.vertices.count(v)) return;
    int count = 0;
    components(link_graph(cur, v).graph, &count);
    if (count > 1) apply(OpKind::SplitVertex, v);
  }
  // delete f, then split its other vertices where their links fell apart
  void delete_face_and_split(const std::string& f, const std::string& top) {
    auto vs = face_vertices(f);
    apply(OpKind::DeleteFace, f);
    for (const auto& v : vs)
      if (v != top) split_if_needed(v);
  }
};

// Suppress the link node shared by faces f and g, both at the top of a cone.
// Returns the face that survives.
inline std::string contract_series(Builder& b, const std::string& top, const std::string& f, const std::string& g) {
  if (b.cur.face(f).size() == 2) {
    b.apply(OpKind::ContractFace, f);
    return g;
  }
  if (b.cur.face(g).size() == 2) {
    b.apply(OpKind::ContractFace, g);
    return f;
  }
  std::string x;
  for (const auto& t : b.cur.face(f))
    if (b.cur.ends(t.edge).tail != top && b.cur.ends(t.edge).head != top) x = t.edge;
  if (x.empty() || b.cur.is_loop(x)) throw ComplexError("face '" + f + "' has no contractible edge away from the top");
  b.apply(OpKind::ContractEdge, x);
  b.apply(OpKind::ContractFace, f);
  return g;
}

}  // namespace detail

struct Reduction {
  Complex2 result;
  std::vector<SpaceMinorOp> ops;
};

// Space minor that is a generalised cone (looped if v carries a loop) with
// top v and the same link at v. With `bound_faces`, faces at v incident with
// more than three edges are first shortened by contracting edges away from v.
inline Reduction reduce_to_cone(const Complex2& c, const std::string& v, bool bound_faces = false) {
  if (!c.vertices.count(v)) throw ComplexError("unknown vertex '" + v + "'");
  int loops = 0;
  for (const auto& [e, ends] : c.edges) loops += ends.tail == v && ends.head == v ? 1 : 0;
  if (loops > 1) throw ComplexError("more than one loop at '" + v + "'");
  detail::Builder b{c, {}};
  std::vector<std::string> away;
  for (const auto& [f, walk] : b.cur.faces)
    if (!b.touches(f, v)) away.push_back(f);
  for (const auto& f : away) b.apply(OpKind::DeleteFace, f);
  if (bound_faces) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [f, walk] : b.cur.faces) {
        if (walk.size() <= 3) continue;
        for (const auto& t : walk) {
          const EdgeEnds& ends = b.cur.ends(t.edge);
          if (ends.tail == v || ends.head == v || ends.tail == ends.head) continue;
          b.apply(OpKind::ContractEdge, t.edge);
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
  }
  if (!is_3_bounded(b.cur)) throw ComplexError("complex is not 3-bounded");
  std::vector<std::string> shared;
  for (const auto& [e, ends] : b.cur.edges)
    if (ends.tail != v && ends.head != v && passages(b.cur, e).size() > 1) shared.push_back(e);
  for (const auto& e : shared) b.apply(OpKind::DeleteEdge, e);
  std::vector<std::string> others(b.cur.vertices.begin(), b.cur.vertices.end());
  for (const auto& x : others)
    if (x != v) b.split_if_needed(x);
  return {b.cur, b.ops};
}

// Keeps the faces of a cone at `top` listed in `keep` and suppresses link
// nodes of degree two, so a subdivided base becomes the plain graph.
inline Reduction cone_subdivision_reduce(const Complex2& cone, const std::string& top, const std::set<std::string>& keep) {
  detail::Builder b{cone, {}};
  std::vector<std::string> drop;
  for (const auto& [f, walk] : b.cur.faces)
    if (!keep.count(f)) drop.push_back(f);
  for (const auto& f : drop) b.delete_face_and_split(f, top);
  while (true) {
    LinkGraph L = link_graph(b.cur, top);
    auto deg = L.graph.degrees();
    int x = -1;
    for (int y = 0; y < L.graph.node_count() && x < 0; ++y) {
      if (deg[y] != 2) continue;
      auto st = star(L.graph, y);
      if (st.size() == 2 && !L.graph.is_loop(st[0]) && !L.graph.is_loop(st[1])) x = y;
    }
    if (x < 0) break;
    auto st = star(L.graph, x);
    detail::contract_series(b, top, L.arcs[st[0]].face, L.arcs[st[1]].face);
  }
  return {b.cur, b.ops};
}

// Replays a strict marked minor chain of an associated strict marked graph
// of the looped cone's top link on the cone itself.
inline Reduction looped_cone_strict_reduce(const Complex2& cone, const std::string& top, const AssociatedGraph& assoc,
                                           const std::vector<StrictOp>& chain) {
  LinkGraph L = link_graph(cone, top);
  detail::Builder b{cone, {}};
  StrictMarkedGraph s = assoc.graph;
  std::vector<std::string> face_of(L.arcs.size());
  for (std::size_t a = 0; a < L.arcs.size(); ++a) face_of[a] = L.arcs[a].face;
  for (const auto& op : chain) {
    std::optional<std::pair<int, std::string>> survivor;
    switch (op.kind) {
      case StrictOpKind::Swap:
        break;
      case StrictOpKind::DeleteArc:
        b.delete_face_and_split(face_of[op.arc], top);
        break;
      case StrictOpKind::DeletePair: {
        std::set<std::string> fs;
        for (int a : detail::iota_closure(s, op.arc)) fs.insert(face_of[a]);
        for (const auto& f : fs) b.delete_face_and_split(f, top);
        break;
      }
      case StrictOpKind::ContractArc: {
        int x = s.graph.opposite(op.arc, op.keep_node);
        int other = -1;
        for (int a : star(s.graph, x))
          if (a != op.arc) other = a;
        std::string kept = detail::contract_series(b, top, face_of[op.arc], face_of[other]);
        survivor = std::make_pair(other, kept);
        break;
      }
    }
    std::vector<int> amap;
    StrictMarkedGraph next = strict_minor_step(s, op, &amap);
    std::vector<std::string> moved(next.graph.arc_count());
    for (std::size_t a = 0; a < amap.size(); ++a)
      if (amap[a] >= 0) moved[amap[a]] = face_of[a];
    if (survivor) moved[amap[survivor->first]] = survivor->second;
    face_of = std::move(moved);
    s = std::move(next);
  }
  return {b.cur, b.ops};
}

// ---------------------------------------------------------------------------
// Obstruction extraction

struct Obstruction {
  SpaceMinorTrace trace;
  ZMembership member;
};

namespace detail {

inline std::optional<Obstruction> case_nonplanar(const Complex2& start, std::vector<SpaceMinorOp> ops, const Complex2& c,
                                                 const std::string& v, YPrimeIndex& index, std::string* why) {
  for (const auto& [e, ends] : c.edges)
    if (ends.tail == v && ends.head == v) {
      if (why) *why = "loop at the vertex with nonplanar link";
      return std::nullopt;
    }
  auto r1 = reduce_to_cone(c, v, true);
  ops.insert(ops.end(), r1.ops.begin(), r1.ops.end());
  LinkGraph L = link_graph(r1.result, v);
  auto k = kuratowski_witness(L.graph);
  if (!k) throw ComplexError("internal: link became planar");
  std::set<std::string> keep;
  for (int a : k->arcs) keep.insert(L.arcs[a].face);
  auto r2 = cone_subdivision_reduce(r1.result, v, keep);
  ops.insert(ops.end(), r2.ops.begin(), r2.ops.end());
  auto m = is_in_zcal(r2.result, index);
  if (!m) {
    if (why) *why = "reduced cone is not in the obstruction family";
    return std::nullopt;
  }
  return Obstruction{{start, ops, r2.result}, *m};
}

}  // namespace detail

// Turns a solver failure into a space minor in the obstruction family.
inline std::optional<Obstruction> extract_obstruction(const Complex2& c, const SolverFailure& f, YPrimeIndex& index,
                                                      std::string* why = nullptr) {
  auto fail = [&](const std::string& s) -> std::optional<Obstruction> {
    if (why) *why = s;
    return std::nullopt;
  };
  switch (f.kind) {
    case FailureKind::NonplanarLink:
      return detail::case_nonplanar(c, {}, c, f.vertex, index, why);
    case FailureKind::Incompatible: {
      SpaceMinorOp op{OpKind::ContractEdge, f.edge};
      std::string v = c.ends(f.edge).tail;
      Complex2 c1 = apply_op(c, op);
      if (is_planar(link_graph(c1, v).graph)) return fail("link at the contracted edge is planar");
      return detail::case_nonplanar(c, {op}, c1, v, index, why);
    }
    case FailureKind::OddCycle: {
      detail::Builder b{c, {}};
      for (const auto& e : f.cycle)
        if (e != f.edge) b.apply(OpKind::ContractEdge, e);
      if (!b.cur.edges.count(f.edge) || !b.cur.is_loop(f.edge)) return fail("kept edge did not become a loop");
      std::string v = b.cur.ends(f.edge).tail;
      LinkGraph L = link_graph(b.cur, v);
      if (!is_planar(L.graph)) {
        for (const auto& e : f.cycle) {
          if (e == f.edge) continue;
          SpaceMinorOp op{OpKind::ContractEdge, e};
          Complex2 c1 = apply_op(c, op);
          std::string u = c.ends(e).tail;
          if (!is_planar(link_graph(c1, u).graph)) return detail::case_nonplanar(c, {op}, c1, u, index, why);
        }
        return fail("merged link is nonplanar but no single contraction is");
      }
      if (is_loop_planar(L).ok) return fail("merged link is loop-planar");
      auto r1 = reduce_to_cone(b.cur, v, true);
      std::vector<SpaceMinorOp> ops = b.ops;
      ops.insert(ops.end(), r1.ops.begin(), r1.ops.end());
      LinkGraph top = link_graph(r1.result, v);
      StrictMinorSearch search(index, true);
      for (const auto& a : associated_strict_marked_graphs(top, f.edge)) {
        if (is_planar_marked(a.graph.marked())) continue;
        auto chain = search.find(a.graph);
        if (!chain) continue;
        auto r2 = looped_cone_strict_reduce(r1.result, v, a, chain->ops);
        auto m = is_in_zcal(r2.result, index);
        if (!m) return fail("replayed strict chain does not end in the obstruction family");
        std::vector<SpaceMinorOp> all = ops;
        all.insert(all.end(), r2.ops.begin(), r2.ops.end());
        return Obstruction{{c, all, r2.result}, *m};
      }
      return fail("no associated strict marked graph has a strict minor in the catalogue");
    }
    case FailureKind::LoopNotPlanar: {
      LinkGraph L = link_graph(c, f.vertex);
      auto loops = L.loops();
      if (loops.size() != 1) return fail("vertex carries more than one loop");
      auto r1 = reduce_to_cone(c, f.vertex, true);
      LinkGraph top = link_graph(r1.result, f.vertex);
      StrictMinorSearch search(index, true);
      for (const auto& a : associated_strict_marked_graphs(top, loops[0])) {
        auto chain = search.find(a.graph);
        if (!chain) continue;
        auto r2 = looped_cone_strict_reduce(r1.result, f.vertex, a, chain->ops);
        auto m = is_in_zcal(r2.result, index);
        if (!m) return fail("replayed strict chain does not end in the obstruction family");
        std::vector<SpaceMinorOp> all = r1.ops;
        all.insert(all.end(), r2.ops.begin(), r2.ops.end());
        return Obstruction{{c, all, r2.result}, *m};
      }
      return fail("no associated strict marked graph has a strict minor in the catalogue");
    }
    case FailureKind::Hypothesis:
      return fail("hypothesis failure: " + f.detail);
  }
  return fail("unknown failure");
}

}  // namespace embed3
