#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace embed3 {

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Traversal {
  std::string edge;
  bool forward = true;

  bool operator==(const Traversal& o) const { return edge == o.edge && forward == o.forward; }
  bool operator<(const Traversal& o) const { return std::tie(edge, forward) < std::tie(o.edge, o.forward); }
};

struct EdgeEnds {
  std::string tail;
  std::string head;

  bool operator==(const EdgeEnds& o) const { return tail == o.tail && head == o.head; }
};

using Face = std::vector<Traversal>;

// Directed 2-complex: faces are closed walks of edge traversals.
struct Complex2 {
  std::string name = "complex";
  std::set<std::string> vertices;
  std::map<std::string, EdgeEnds> edges;
  std::map<std::string, Face> faces;

  bool operator==(const Complex2& o) const {
    return vertices == o.vertices && edges == o.edges && faces == o.faces;
  }

  const EdgeEnds& ends(const std::string& e) const {
    auto it = edges.find(e);
    if (it == edges.end()) throw ComplexError("unknown edge '" + e + "'");
    return it->second;
  }
  const Face& face(const std::string& f) const {
    auto it = faces.find(f);
    if (it == faces.end()) throw ComplexError("unknown face '" + f + "'");
    return it->second;
  }
  bool is_loop(const std::string& e) const { return ends(e).tail == ends(e).head; }

  std::string departure(const Traversal& t) const { return t.forward ? ends(t.edge).tail : ends(t.edge).head; }
  std::string arrival(const Traversal& t) const { return t.forward ? ends(t.edge).head : ends(t.edge).tail; }
};

inline bool valid_id(const std::string& id) {
  static const std::regex re("[A-Za-z0-9_]+");
  return std::regex_match(id, re);
}

// base, or base_1, base_2, ... whichever is first not in taken.
inline std::string fresh_id(const std::string& base, const std::function<bool(const std::string&)>& taken) {
  if (!taken(base)) return base;
  for (int n = 1;; ++n) {
    std::string id = base + "_" + std::to_string(n);
    if (!taken(id)) return id;
  }
}

// ---------------------------------------------------------------------------
// Validation

inline std::vector<std::string> validate(const Complex2& c, bool strict_trails = false) {
  std::vector<std::string> out;
  std::set<std::string> vertex_used, edge_used;
  for (const auto& v : c.vertices)
    if (!valid_id(v)) out.push_back("vertex '" + v + "' has an invalid id");
  for (const auto& [e, ends] : c.edges) {
    if (!valid_id(e)) out.push_back("edge '" + e + "' has an invalid id");
    if (!c.vertices.count(ends.tail)) out.push_back("edge '" + e + "' has unknown tail '" + ends.tail + "'");
    if (!c.vertices.count(ends.head)) out.push_back("edge '" + e + "' has unknown head '" + ends.head + "'");
  }
  for (const auto& [f, walk] : c.faces) {
    if (!valid_id(f)) out.push_back("face '" + f + "' has an invalid id");
    if (walk.empty()) {
      out.push_back("face '" + f + "' is empty");
      continue;
    }
    bool known = true;
    for (const auto& t : walk)
      if (!c.edges.count(t.edge)) {
        out.push_back("face '" + f + "' uses unknown edge '" + t.edge + "'");
        known = false;
      }
    if (!known) continue;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& t = walk[i];
      const auto& next = walk[(i + 1) % walk.size()];
      if (c.arrival(t) != c.departure(next))
        out.push_back("face '" + f + "' is not a closed walk at position " + std::to_string(i));
      edge_used.insert(t.edge);
      vertex_used.insert(c.ends(t.edge).tail);
      vertex_used.insert(c.ends(t.edge).head);
    }
    if (strict_trails) {
      std::set<std::string> seen;
      for (const auto& t : walk)
        if (!seen.insert(t.edge).second) out.push_back("face '" + f + "' repeats edge '" + t.edge + "'");
    }
  }
  for (const auto& [e, ends] : c.edges)
    if (!edge_used.count(e)) out.push_back("edge '" + e + "' is not incident with a face");
  for (const auto& v : c.vertices)
    if (!vertex_used.count(v)) out.push_back("vertex '" + v + "' is not incident with a face");
  return out;
}

// ---------------------------------------------------------------------------
// Passages

// The occ-th traversal of an edge by a face.
struct Passage {
  std::string face;
  int occ = 0;

  bool operator==(const Passage& o) const { return face == o.face && occ == o.occ; }
  bool operator!=(const Passage& o) const { return !(*this == o); }
  bool operator<(const Passage& o) const { return std::tie(face, occ) < std::tie(o.face, o.occ); }
};

// Passages of e in (face, occurrence) order.
inline std::vector<Passage> passages(const Complex2& c, const std::string& e) {
  c.ends(e);
  std::vector<Passage> out;
  for (const auto& [f, walk] : c.faces) {
    int occ = 0;
    for (const auto& t : walk)
      if (t.edge == e) out.push_back({f, occ++});
  }
  return out;
}

// Position in the face of the passage.
inline int passage_position(const Complex2& c, const Passage& p, const std::string& e) {
  const Face& walk = c.face(p.face);
  int occ = 0;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (walk[i].edge == e && occ++ == p.occ) return static_cast<int>(i);
  throw ComplexError("face '" + p.face + "' has no passage " + std::to_string(p.occ) + " through '" + e + "'");
}

inline std::map<std::string, int> face_degrees(const Complex2& c) {
  std::map<std::string, int> deg;
  for (const auto& [e, ends] : c.edges) deg[e] = 0;
  for (const auto& [f, walk] : c.faces)
    for (const auto& t : walk) ++deg[t.edge];
  return deg;
}

// ---------------------------------------------------------------------------
// Link graphs

enum class End { Tail = 0, Head = 1 };

inline const char* end_name(End e) { return e == End::Tail ? "tail" : "head"; }

struct LinkNode {
  std::string edge;
  End end = End::Tail;
};

// Arc for the corner of a face between traversal `corner` and the next one.
// Side 0 is at the node where the face arrives, side 1 where it departs.
struct LinkArc {
  std::string face;
  int corner = 0;
};

// A passage of an edge seen from one of its end nodes.
struct NodePassage {
  Passage passage;
  int arc_end = 0;
};

// The two link arc-ends flanking one traversal of a loop.
struct LoopPair {
  std::string loop;
  Passage passage;
  int head_end = 0;
  int tail_end = 0;
};

struct LinkGraph {
  std::string vertex;
  Graph graph;
  std::vector<LinkNode> nodes;
  std::vector<LinkArc> arcs;
  std::vector<std::vector<NodePassage>> node_passages;  // per node, in passage order
  std::vector<LoopPair> loop_pairs;

  int node_index(const std::string& e, End end) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].edge == e && nodes[i].end == end) return static_cast<int>(i);
    return -1;
  }
  std::vector<std::string> loops() const {
    std::vector<std::string> out;
    for (const auto& p : loop_pairs)
      if (out.empty() || out.back() != p.loop) out.push_back(p.loop);
    return out;
  }
};

inline LinkGraph link_graph(const Complex2& c, const std::string& v) {
  if (!c.vertices.count(v)) throw ComplexError("unknown vertex '" + v + "'");
  LinkGraph L;
  L.vertex = v;
  for (const auto& [e, ends] : c.edges) {
    if (ends.tail == v) L.nodes.push_back({e, End::Tail});
    if (ends.head == v) L.nodes.push_back({e, End::Head});
  }
  L.graph = Graph(static_cast<int>(L.nodes.size()));
  L.node_passages.resize(L.nodes.size());
  std::map<std::pair<std::string, End>, int> index;
  for (std::size_t i = 0; i < L.nodes.size(); ++i) index[{L.nodes[i].edge, L.nodes[i].end}] = static_cast<int>(i);
  auto arrival_end = [](const Traversal& t) { return t.forward ? End::Head : End::Tail; };
  auto departure_end = [](const Traversal& t) { return t.forward ? End::Tail : End::Head; };
  std::map<std::pair<std::string, int>, int> corner_arc;
  for (const auto& [f, walk] : c.faces) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Traversal& t = walk[i];
      const Traversal& next = walk[(i + 1) % walk.size()];
      if (c.arrival(t) != v) continue;
      int x = index.at({t.edge, arrival_end(t)});
      int y = index.at({next.edge, departure_end(next)});
      int a = L.graph.add_arc(x, y);
      L.arcs.push_back({f, static_cast<int>(i)});
      corner_arc[{f, static_cast<int>(i)}] = a;
    }
  }
  for (const auto& [f, walk] : c.faces) {
    std::map<std::string, int> occ;
    const int n = static_cast<int>(walk.size());
    for (int i = 0; i < n; ++i) {
      const Traversal& t = walk[i];
      Passage p{f, occ[t.edge]++};
      int arrive_end = -1, depart_end = -1;
      if (c.arrival(t) == v) {
        arrive_end = make_end(corner_arc.at({f, i}), 0);
        L.node_passages[index.at({t.edge, arrival_end(t)})].push_back({p, arrive_end});
      }
      if (c.departure(t) == v) {
        depart_end = make_end(corner_arc.at({f, (i + n - 1) % n}), 1);
        L.node_passages[index.at({t.edge, departure_end(t)})].push_back({p, depart_end});
      }
      if (c.is_loop(t.edge) && c.ends(t.edge).tail == v) {
        int head_end = t.forward ? arrive_end : depart_end;
        int tail_end = t.forward ? depart_end : arrive_end;
        L.loop_pairs.push_back({t.edge, p, head_end, tail_end});
      }
    }
  }
  for (auto& np : L.node_passages)
    std::sort(np.begin(), np.end(), [](const NodePassage& a, const NodePassage& b) { return a.passage < b.passage; });
  std::sort(L.loop_pairs.begin(), L.loop_pairs.end(), [](const LoopPair& a, const LoopPair& b) {
    return std::tie(a.loop, a.passage) < std::tie(b.loop, b.passage);
  });
  return L;
}

// ---------------------------------------------------------------------------
// Structural operations

namespace detail {

// Drop empty faces, then edges and vertices on no face.
inline void prune(Complex2& c) {
  for (auto it = c.faces.begin(); it != c.faces.end();) it = it->second.empty() ? c.faces.erase(it) : std::next(it);
  std::set<std::string> used_edges, used_vertices;
  for (const auto& [f, walk] : c.faces)
    for (const auto& t : walk) used_edges.insert(t.edge);
  for (auto it = c.edges.begin(); it != c.edges.end();) {
    if (!used_edges.count(it->first)) {
      it = c.edges.erase(it);
    } else {
      used_vertices.insert(it->second.tail);
      used_vertices.insert(it->second.head);
      ++it;
    }
  }
  for (auto it = c.vertices.begin(); it != c.vertices.end();) it = used_vertices.count(*it) ? std::next(it) : c.vertices.erase(it);
}

// Cancel cyclically adjacent opposite traversals of the same edge.
inline void cancel_opposite(Face& walk, const std::set<std::string>& edges) {
  bool changed = true;
  while (changed && !walk.empty()) {
    changed = false;
    const std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = (i + 1) % n;
      if (i == j) break;
      if (walk[i].edge == walk[j].edge && walk[i].forward != walk[j].forward && edges.count(walk[i].edge)) {
        if (j == 0) {
          walk.erase(walk.begin() + static_cast<long>(i));
          walk.erase(walk.begin());
        } else {
          walk.erase(walk.begin() + static_cast<long>(i), walk.begin() + static_cast<long>(i) + 2);
        }
        changed = true;
        break;
      }
    }
  }
}

inline bool taken_anywhere(const Complex2& c, const std::string& id) {
  return c.vertices.count(id) || c.edges.count(id) || c.faces.count(id);
}

}  // namespace detail

// Identify the endpoints of e (the merged vertex keeps the tail's id) and
// remove e from every face.
inline Complex2 contract_edge(const Complex2& c, const std::string& e) {
  const EdgeEnds ends = c.ends(e);
  if (ends.tail == ends.head) throw ComplexError("cannot contract loop '" + e + "'");
  Complex2 out = c;
  out.edges.erase(e);
  out.vertices.erase(ends.head);
  for (auto& [id, ee] : out.edges) {
    if (ee.tail == ends.head) ee.tail = ends.tail;
    if (ee.head == ends.head) ee.head = ends.tail;
  }
  for (auto& [f, walk] : out.faces)
    walk.erase(std::remove_if(walk.begin(), walk.end(), [&](const Traversal& t) { return t.edge == e; }), walk.end());
  detail::prune(out);
  return out;
}

inline Complex2 delete_face(const Complex2& c, const std::string& f) {
  c.face(f);
  Complex2 out = c;
  out.faces.erase(f);
  detail::prune(out);
  return out;
}

// Size two: the two edges of f become one edge (named f, or a fresh id)
// carrying all their other incidences. Size one: the loop of f disappears
// from every face. Afterwards adjacent opposite traversals created by the
// operation cancel.
inline Complex2 contract_face(const Complex2& c, const std::string& f) {
  const Face walk = c.face(f);
  Complex2 out = c;
  out.faces.erase(f);
  std::set<std::string> touched;
  if (walk.size() == 1) {
    const std::string loop = walk[0].edge;
    if (!c.is_loop(loop)) throw ComplexError("face '" + f + "' of size one must run along a loop");
    out.edges.erase(loop);
    for (auto& [g, w] : out.faces) {
      auto before = w.size();
      w.erase(std::remove_if(w.begin(), w.end(), [&](const Traversal& t) { return t.edge == loop; }), w.end());
      if (w.size() != before)
        for (const auto& t : w) touched.insert(t.edge);
    }
    for (auto& [g, w] : out.faces) detail::cancel_opposite(w, touched);
  } else if (walk.size() == 2) {
    const Traversal t1 = walk[0], t2 = walk[1];
    if (c.is_loop(t1.edge) || c.is_loop(t2.edge)) throw ComplexError("face '" + f + "' runs along a loop");
    if (t1.edge == t2.edge) {
      touched.insert(t1.edge);
    } else {
      std::string id = fresh_id(f, [&](const std::string& s) { return out.edges.count(s) > 0 && s != t1.edge && s != t2.edge; });
      EdgeEnds merged{c.departure(t1), c.arrival(t1)};
      out.edges.erase(t1.edge);
      out.edges.erase(t2.edge);
      out.edges[id] = merged;
      for (auto& [g, w] : out.faces)
        for (auto& t : w) {
          if (t.edge == t1.edge) {
            t.forward = t.forward == t1.forward;
            t.edge = id;
          } else if (t.edge == t2.edge) {
            t.forward = t.forward != t2.forward;
            t.edge = id;
          }
        }
      touched.insert(id);
    }
    for (auto& [g, w] : out.faces) detail::cancel_opposite(w, touched);
  } else {
    throw ComplexError("face '" + f + "' has size " + std::to_string(walk.size()) + ", expected one or two");
  }
  detail::prune(out);
  return out;
}

// Replace e by one parallel copy per passage, e_1, e_2, ... in passage order.
// An edge with a single passage is left unchanged.
inline Complex2 delete_edge(const Complex2& c, const std::string& e) {
  const EdgeEnds ends = c.ends(e);
  auto ps = passages(c, e);
  if (ps.size() <= 1) return c;
  Complex2 out = c;
  out.edges.erase(e);
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    std::string id = fresh_id(e + "_" + std::to_string(k + 1), [&](const std::string& s) { return out.edges.count(s) > 0; });
    out.edges[id] = ends;
    ids.push_back(id);
  }
  std::size_t k = 0;
  for (auto& [f, walk] : out.faces)
    for (auto& t : walk)
      if (t.edge == e) t.edge = ids[k++];
  return out;
}

// One vertex per component of the link at v; the component holding the
// first link node keeps v, the others get fresh ids v_1, v_2, ...
inline Complex2 split_vertex(const Complex2& c, const std::string& v) {
  LinkGraph L = link_graph(c, v);
  int count = 0;
  auto comp = components(L.graph, &count);
  if (count <= 1) return c;
  // components numbered by first node
  std::map<int, int> renumber;
  for (int x = 0; x < L.graph.node_count(); ++x)
    if (!renumber.count(comp[x])) renumber.emplace(comp[x], static_cast<int>(renumber.size()));
  Complex2 out = c;
  std::vector<std::string> names{v};
  for (int k = 1; k < count; ++k) {
    std::string id = fresh_id(v + "_" + std::to_string(k), [&](const std::string& s) { return out.vertices.count(s) > 0; });
    out.vertices.insert(id);
    names.push_back(id);
  }
  for (int x = 0; x < L.graph.node_count(); ++x) {
    const std::string& name = names[renumber[comp[x]]];
    auto& ee = out.edges.at(L.nodes[x].edge);
    (L.nodes[x].end == End::Tail ? ee.tail : ee.head) = name;
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1-skeleton

struct Skeleton {
  Graph graph;
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;
  std::map<std::string, int> vertex_index;
  std::map<std::string, int> edge_index;
};

inline Skeleton skeleton(const Complex2& c) {
  Skeleton s;
  for (const auto& v : c.vertices) {
    s.vertex_index[v] = static_cast<int>(s.vertex_names.size());
    s.vertex_names.push_back(v);
  }
  s.graph = Graph(static_cast<int>(s.vertex_names.size()));
  for (const auto& [e, ends] : c.edges) {
    s.edge_index[e] = s.graph.add_arc(s.vertex_index.at(ends.tail), s.vertex_index.at(ends.head));
    s.edge_names.push_back(e);
  }
  return s;
}

// A cycle of the 1-skeleton as its edge names in order.
using EdgeCycle = std::vector<std::string>;

// Every chordless cycle without loops, once each up to rotation and
// reflection. Parallel edges give distinct cycles and never act as chords.
// f returns false to stop.
inline void for_each_chordless_cycle(const Complex2& c, const std::function<bool(const EdgeCycle&)>& f) {
  Skeleton s = skeleton(c);
  const int n = s.graph.node_count();
  std::vector<std::vector<std::vector<int>>> between(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < s.graph.arc_count(); ++a) {
    const Arc& arc = s.graph.arc(a);
    if (arc.u == arc.v) continue;
    between[arc.u][arc.v].push_back(a);
    between[arc.v][arc.u].push_back(a);
  }
  auto adjacent = [&](int x, int y) { return !between[x][y].empty(); };
  bool stop = false;
  auto emit_choices = [&](const std::vector<int>& path) {
    // every choice of parallel representative along the vertex cycle
    std::vector<std::size_t> pick(path.size(), 0);
    while (!stop) {
      EdgeCycle cyc;
      for (std::size_t i = 0; i < path.size(); ++i)
        cyc.push_back(s.edge_names[between[path[i]][path[(i + 1) % path.size()]][pick[i]]]);
      if (!f(cyc)) stop = true;
      std::size_t i = 0;
      while (i < path.size()) {
        if (++pick[i] < between[path[i]][path[(i + 1) % path.size()]].size()) break;
        pick[i++] = 0;
      }
      if (i == path.size()) break;
    }
  };
  // 2-cycles from parallel pairs
  for (int x = 0; x < n && !stop; ++x)
    for (int y = x + 1; y < n && !stop; ++y) {
      const auto& par = between[x][y];
      for (std::size_t i = 0; i < par.size() && !stop; ++i)
        for (std::size_t j = i + 1; j < par.size() && !stop; ++j)
          if (!f({s.edge_names[par[i]], s.edge_names[par[j]]})) stop = true;
    }
  // induced cycles of length >= 3 with least vertex first
  std::vector<int> path;
  std::vector<bool> on(n, false);
  std::function<void()> extend = [&]() {
    if (stop) return;
    int start = path.front(), last = path.back();
    for (int y = start + 1; y < n && !stop; ++y) {
      if (on[y] || !adjacent(last, y)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (adjacent(path[i], y)) chord = true;
      if (chord) continue;
      bool closes = path.size() >= 2 && adjacent(y, start);
      if (closes) {
        if (path[1] < y) {
          path.push_back(y);
          emit_choices(path);
          path.pop_back();
        }
        continue;
      }
      path.push_back(y);
      on[y] = true;
      extend();
      on[y] = false;
      path.pop_back();
    }
  };
  for (int x = 0; x < n && !stop; ++x) {
    path = {x};
    on[x] = true;
    extend();
    on[x] = false;
  }
}

inline std::vector<EdgeCycle> chordless_cycles(const Complex2& c) {
  std::vector<EdgeCycle> out;
  for_each_chordless_cycle(c, [&](const EdgeCycle& cyc) {
    out.push_back(cyc);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Homology

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Rank over F_p of an integer matrix (rows of coefficients).
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m, int p) {
  if (!is_prime(p)) throw ComplexError("p = " + std::to_string(p) + " is not prime");
  auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inverse = [&](std::int64_t a) {
    std::int64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m)
    for (auto& x : row) x = mod(x);
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    std::int64_t inv = inverse(m[rank][col]);
    for (auto& x : m[rank]) x = x * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !m[r][col]) continue;
      std::int64_t factor = m[r][col];
      for (int k = 0; k < cols; ++k) m[r][k] = mod(m[r][k] - factor * m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

struct BoundaryMatrices {
  std::vector<std::vector<std::int64_t>> d1;  // vertices x edges
  std::vector<std::vector<std::int64_t>> d2;  // edges x faces
};

inline BoundaryMatrices boundary_matrices(const Complex2& c) {
  Skeleton s = skeleton(c);
  BoundaryMatrices b;
  const int V = static_cast<int>(c.vertices.size()), E = static_cast<int>(c.edges.size()), F = static_cast<int>(c.faces.size());
  b.d1.assign(V, std::vector<std::int64_t>(E, 0));
  b.d2.assign(E, std::vector<std::int64_t>(F, 0));
  for (const auto& [e, ends] : c.edges) {
    int k = s.edge_index.at(e);
    b.d1[s.vertex_index.at(ends.head)][k] += 1;
    b.d1[s.vertex_index.at(ends.tail)][k] -= 1;
  }
  int j = 0;
  for (const auto& [f, walk] : c.faces) {
    for (const auto& t : walk) b.d2[s.edge_index.at(t.edge)][j] += t.forward ? 1 : -1;
    ++j;
  }
  return b;
}

inline int homology_h1_dim(const Complex2& c, int p) {
  if (!is_prime(p)) throw ComplexError("p = " + std::to_string(p) + " is not prime");
  auto b = boundary_matrices(c);
  const int E = static_cast<int>(c.edges.size());
  return E - rank_mod_p(b.d1, p) - rank_mod_p(b.d2, p);
}

// ---------------------------------------------------------------------------
// Local connectivity

struct LocalConnectivity {
  bool ok = true;
  std::string vertex;
  std::string defect;
  std::vector<LinkNode> separator;
};

inline LocalConnectivity is_locally_k_connected(const Complex2& c, int k) {
  if (k != 2 && k != 3) throw ComplexError("local connectivity is defined for k = 2 or 3");
  for (const auto& v : c.vertices) {
    LinkGraph L = link_graph(c, v);
    auto r = k_connectivity(L.graph, k);
    if (r.ok) continue;
    LocalConnectivity out{false, v, r.defect, {}};
    for (int x : r.separator) out.separator.push_back(L.nodes[x]);
    return out;
  }
  return {};
}

// Every face is incident with at most three distinct edges.
inline bool is_3_bounded(const Complex2& c) {
  for (const auto& [f, walk] : c.faces) {
    std::set<std::string> es;
    for (const auto& t : walk) es.insert(t.edge);
    if (es.size() > 3) return false;
  }
  return true;
}

// Triangles on three distinct vertices, no loops or parallel edges, no two
// faces on the same edge set.
inline bool is_simplicial(const Complex2& c) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& [e, ends] : c.edges) {
    if (ends.tail == ends.head) return false;
    if (!pairs.insert(std::minmax(ends.tail, ends.head)).second) return false;
  }
  std::set<std::set<std::string>> seen;
  for (const auto& [f, walk] : c.faces) {
    if (walk.size() != 3) return false;
    std::set<std::string> es, vs;
    for (const auto& t : walk) {
      es.insert(t.edge);
      vs.insert(c.ends(t.edge).tail);
      vs.insert(c.ends(t.edge).head);
    }
    if (es.size() != 3 || vs.size() != 3) return false;
    if (!seen.insert(es).second) return false;
  }
  return true;
}

}  // namespace embed3
