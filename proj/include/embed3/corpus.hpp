#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "graph.hpp"
#include "space_minor.hpp"

namespace embed3 {

// Simplicial 2-complex on named vertices: edge "a_b" runs from the smaller
// name to the larger, face "a_b_c" runs a -> b -> c -> a for sorted a < b < c.
inline Complex2 simplicial_complex(const std::string& name, std::vector<std::array<std::string, 3>> triangles) {
  Complex2 c;
  c.name = name;
  auto edge = [&](const std::string& a, const std::string& b) {
    const std::string& lo = std::min(a, b);
    const std::string& hi = std::max(a, b);
    std::string id = lo + "_" + hi;
    c.edges[id] = {lo, hi};
    return Traversal{id, a == lo};
  };
  for (auto t : triangles) {
    std::sort(t.begin(), t.end());
    for (const auto& v : t) c.vertices.insert(v);
    c.faces[t[0] + "_" + t[1] + "_" + t[2]] = {edge(t[0], t[1]), edge(t[1], t[2]), edge(t[2], t[0])};
  }
  return c;
}

inline Complex2 tetra() {
  return simplicial_complex("tetra", {{{"a", "b", "c"}}, {{"a", "b", "d"}}, {{"a", "c", "d"}}, {{"b", "c", "d"}}});
}

inline Complex2 cone_complex(const Graph& g, const std::string& name) {
  Complex2 c = cone_over(g);
  c.name = name;
  return c;
}

// Octahedron with poles n, s and equator q0 q1 q2 q3, plus the first
// `squares` of the faces q0q1q2q3, n q0 s q2, n q1 s q3.
inline Complex2 octahedron(int squares) {
  if (squares < 0 || squares > 3) throw ComplexError("octahedron takes 0 to 3 squares");
  std::vector<std::array<std::string, 3>> tri;
  for (int i = 0; i < 4; ++i) {
    std::string a = "q" + std::to_string(i), b = "q" + std::to_string((i + 1) % 4);
    tri.push_back({"n", a, b});
    tri.push_back({"s", a, b});
  }
  Complex2 c = simplicial_complex("octa" + std::to_string(squares), tri);
  // walk a -> b -> c -> d -> a using the existing edge directions
  auto walk = [&](const std::vector<std::string>& vs) {
    Face f;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string& a = vs[i];
      const std::string& b = vs[(i + 1) % vs.size()];
      std::string id = std::min(a, b) + "_" + std::max(a, b);
      f.push_back({id, a < b});
    }
    return f;
  };
  const std::vector<std::vector<std::string>> quads = {
      {"q0", "q1", "q2", "q3"}, {"n", "q0", "s", "q2"}, {"n", "q1", "s", "q3"}};
  const std::vector<std::string> ids = {"equator", "square02", "square13"};
  for (int k = 0; k < squares; ++k) c.faces[ids[k]] = walk(quads[k]);
  return c;
}

// One vertex, one loop, one face running q times along it.
inline Complex2 crosscap(int q) {
  if (q < 1) throw ComplexError("crosscap needs q >= 1");
  Complex2 c;
  c.name = "crosscap_" + std::to_string(q);
  c.vertices = {"x"};
  c.edges["l"] = {"x", "x"};
  c.faces["f"] = Face(static_cast<std::size_t>(q), Traversal{"l", true});
  return c;
}

// Two vertices joined by x and y, a loop l at p, faces l, xy and the two
// faces x y l traversing l in opposite directions.
inline Complex2 bowtie_loop() {
  Complex2 c;
  c.name = "bowtie_loop";
  c.vertices = {"p", "q"};
  c.edges["x"] = {"p", "q"};
  c.edges["y"] = {"p", "q"};
  c.edges["l"] = {"p", "p"};
  c.faces["fl"] = {{"l", true}};
  c.faces["fxy"] = {{"x", true}, {"y", false}};
  c.faces["fxyl"] = {{"x", true}, {"y", false}, {"l", true}};
  c.faces["fxyr"] = {{"x", true}, {"y", false}, {"l", false}};
  return c;
}

// 2-skeleton of a non-orientable triangulated 3-manifold on nine vertices:
// the translates mod 9 of the tetrahedra 0124, 0127 and 0134.
inline Complex2 sc_case2() {
  std::set<std::array<int, 3>> tris;
  for (const auto& base : {std::array<int, 4>{0, 1, 2, 4}, {0, 1, 2, 7}, {0, 1, 3, 4}})
    for (int s = 0; s < 9; ++s) {
      std::array<int, 4> t;
      for (int i = 0; i < 4; ++i) t[i] = (base[i] + s) % 9;
      for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> tri;
        int k = 0;
        for (int i = 0; i < 4; ++i)
          if (i != skip) tri[k++] = t[i];
        std::sort(tri.begin(), tri.end());
        tris.insert(tri);
      }
    }
  std::vector<std::array<std::string, 3>> named;
  for (const auto& t : tris) named.push_back({"v" + std::to_string(t[0]), "v" + std::to_string(t[1]), "v" + std::to_string(t[2])});
  return simplicial_complex("sc_case2", named);
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"tetra", "cone_K5", "cone_K33", "octa0", "octa1", "octa3",
                                                  "crosscap_2", "crosscap_3", "bowtie_loop", "sc_case2"};
  return names;
}

// Named corpus complex; "crosscap" and "octa" take a parameter.
inline Complex2 corpus(const std::string& name, int param = -1) {
  if (name == "tetra") return tetra();
  if (name == "cone_K5" || (name == "cone" && param == 5)) return cone_complex(complete_graph(5), "cone_K5");
  if (name == "cone_K33" || (name == "cone" && param == 33)) return cone_complex(complete_bipartite(3, 3), "cone_K33");
  if (name == "octa") return octahedron(param);
  if (name == "octa0") return octahedron(0);
  if (name == "octa1") return octahedron(1);
  if (name == "octa3") return octahedron(3);
  if (name == "crosscap") return crosscap(param);
  if (name.rfind("crosscap_", 0) == 0) return crosscap(std::stoi(name.substr(9)));
  if (name == "bowtie_loop") return bowtie_loop();
  if (name == "sc_case2") return sc_case2();
  throw ComplexError("unknown corpus complex '" + name + "'");
}

}  // namespace embed3
