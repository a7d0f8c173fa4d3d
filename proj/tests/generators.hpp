#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "embed3/catalog.hpp"
#include "embed3/complex.hpp"
#include "embed3/marked.hpp"

namespace embed3::gen {

// Random 2-complex on n vertices: m or m+1 parallel edges between each pair,
// every digon on a parallel pair and every triangle on three vertices kept
// with probability p percent. Faces have size at most three.
inline Complex2 random_multigraph_complex(std::mt19937& rng, int n, int m, int p) {
  Complex2 c;
  c.name = "random";
  auto vname = [](int i) { return "v" + std::to_string(i); };
  for (int i = 0; i < n; ++i) c.vertices.insert(vname(i));
  std::vector<std::string> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int k = m + static_cast<int>(rng() % 2);
      for (int a = 0; a < k; ++a) {
        std::string id = "e" + std::to_string(i) + std::to_string(j) + static_cast<char>('a' + a);
        c.edges[id] = {vname(i), vname(j)};
        edges.push_back(id);
      }
    }
  std::vector<Face> cand;
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (c.edges[edges[a]] == c.edges[edges[b]]) cand.push_back({{edges[a], true}, {edges[b], false}});
  for (const auto& x : edges)
    for (const auto& y : edges)
      for (const auto& z : edges) {
        const auto &X = c.edges[x], &Y = c.edges[y], &Z = c.edges[z];
        if (X.head == Y.tail && Z.tail == X.tail && Z.head == Y.head && X.tail != Y.head)
          cand.push_back({{x, true}, {y, true}, {z, false}});
      }
  int k = 0;
  for (const auto& f : cand)
    if (static_cast<int>(rng() % 100) < p) c.faces["f" + std::to_string(k++)] = f;
  detail::prune(c);
  return c;
}

// Random strict marked graph grown from a bijection of an X1 member by arc
// additions, subdivisions and new nodes at both roots; the unmarked part of
// iota is shuffled.
inline std::optional<StrictMarkedGraph> random_strict_graph(std::mt19937& rng, const StrictCatalogue& cat) {
  const auto& u = cat.x1[rng() % cat.x1.size()];
  auto bs = bijections(u);
  MarkedGraph m = bs[rng() % bs.size()];
  Graph g = m.graph;
  const int v = m.v, w = m.w;
  std::vector<std::pair<int, int>> pairs(m.pairs.begin(), m.pairs.end());
  int extra = static_cast<int>(rng() % 4);
  for (int k = 0; k < extra && g.node_count() < 8; ++k) {
    int t = static_cast<int>(rng() % 3);
    if (t == 0) {
      int x = static_cast<int>(rng() % g.node_count()), y = static_cast<int>(rng() % g.node_count());
      if (x != y && x != v && x != w && y != v && y != w) g.add_arc(x, y);
    } else if (t == 1) {
      int a = static_cast<int>(rng() % g.arc_count());
      Arc ar = g.arc(a);
      int s = g.node_count();
      Graph h(s + 1);
      for (int b = 0; b < g.arc_count(); ++b) {
        if (b == a) {
          h.add_arc(ar.u, s);
        } else {
          h.add_arc(g.arc(b).u, g.arc(b).v);
        }
      }
      int na = h.add_arc(s, ar.v);
      g = h;
      for (auto& p : pairs) {
        if (p.first == a && ar.v == v && ar.u != v) p.first = na;
        if (p.second == a && ar.v == w && ar.u != w) p.second = na;
      }
    } else {
      int s = g.node_count();
      Graph h(s + 1);
      for (int b = 0; b < g.arc_count(); ++b) h.add_arc(g.arc(b).u, g.arc(b).v);
      h.add_arc(v, s);
      h.add_arc(w, s);
      int z = static_cast<int>(rng() % s);
      if (z != v && z != w) h.add_arc(s, z);
      g = h;
    }
  }
  StrictMarkedGraph s;
  s.graph = g;
  s.v = v;
  s.w = w;
  for (int i = 0; i < 3; ++i) s.pairs[i] = pairs[i];
  auto sv = star(g, v), sw = star(g, w);
  if (sv.size() != sw.size()) return std::nullopt;
  auto marked = [&](int a, bool first) {
    for (const auto& p : pairs)
      if ((first ? p.first : p.second) == a) return true;
    return false;
  };
  std::vector<int> rv, rw;
  for (int a : sv)
    if (!marked(a, true)) rv.push_back(a);
  for (int a : sw)
    if (!marked(a, false)) rw.push_back(a);
  std::shuffle(rw.begin(), rw.end(), rng);
  for (const auto& p : pairs) s.iota.push_back(p);
  for (std::size_t i = 0; i < rv.size(); ++i) s.iota.emplace_back(rv[i], rw[i]);
  if (!strict_defect(s).empty()) return std::nullopt;
  return s;
}

}  // namespace embed3::gen
