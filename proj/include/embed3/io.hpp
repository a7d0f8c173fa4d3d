#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "complex.hpp"
#include "marked.hpp"
#include "rotation.hpp"
#include "space_minor.hpp"

namespace embed3 {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline ParseError parse_error(int line, const std::string& what) {
  return ParseError("line " + std::to_string(line) + ": " + what);
}

inline void need_id(int line, const std::string& id) {
  if (!valid_id(id)) throw parse_error(line, "invalid id '" + id + "'");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Complexes

inline Complex2 parse_complex(std::istream& in) {
  Complex2 c;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto t = detail::tokens(line);
    if (t.empty()) continue;
    if (t[0] == "complex") {
      if (t.size() != 2) throw detail::parse_error(n, "expected 'complex <name>'");
      c.name = t[1];
    } else if (t[0] == "vertex") {
      if (t.size() != 2) throw detail::parse_error(n, "expected 'vertex <id>'");
      detail::need_id(n, t[1]);
      if (!c.vertices.insert(t[1]).second) throw detail::parse_error(n, "duplicate vertex '" + t[1] + "'");
    } else if (t[0] == "edge") {
      if (t.size() != 4) throw detail::parse_error(n, "expected 'edge <id> <tail> <head>'");
      for (int i = 1; i < 4; ++i) detail::need_id(n, t[i]);
      if (c.edges.count(t[1])) throw detail::parse_error(n, "duplicate edge '" + t[1] + "'");
      c.edges[t[1]] = {t[2], t[3]};
    } else if (t[0] == "face") {
      if (t.size() < 3) throw detail::parse_error(n, "expected 'face <id> <+-edge> ...'");
      detail::need_id(n, t[1]);
      if (c.faces.count(t[1])) throw detail::parse_error(n, "duplicate face '" + t[1] + "'");
      Face walk;
      for (std::size_t i = 2; i < t.size(); ++i) {
        const std::string& s = t[i];
        if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) throw detail::parse_error(n, "bad traversal '" + s + "'");
        detail::need_id(n, s.substr(1));
        walk.push_back({s.substr(1), s[0] == '+'});
      }
      c.faces[t[1]] = walk;
    } else {
      throw detail::parse_error(n, "unknown keyword '" + t[0] + "'");
    }
  }
  auto problems = validate(c);
  if (!problems.empty()) throw ParseError("invalid complex: " + problems.front());
  return c;
}

inline Complex2 parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

inline void write_complex(std::ostream& out, const Complex2& c) {
  out << "complex " << c.name << "\n";
  for (const auto& v : c.vertices) out << "vertex " << v << "\n";
  for (const auto& [e, ends] : c.edges) out << "edge " << e << " " << ends.tail << " " << ends.head << "\n";
  for (const auto& [f, walk] : c.faces) {
    out << "face " << f;
    for (const auto& t : walk) out << " " << (t.forward ? '+' : '-') << t.edge;
    out << "\n";
  }
}

inline std::string serialise(const Complex2& c) {
  std::ostringstream out;
  write_complex(out, c);
  return out.str();
}

// ---------------------------------------------------------------------------
// Rotation systems and traces

inline std::string format_rotator(const std::string& e, const std::vector<Passage>& ps) {
  std::string s = "rot " + e + ":";
  for (const auto& p : detail::least_first(ps)) s += " " + p.face + "@" + std::to_string(p.occ);
  return s;
}

inline std::pair<std::string, std::vector<Passage>> parse_rotator(const std::vector<std::string>& t, int line) {
  if (t.size() < 2 || t[0] != "rot" || t[1].empty() || t[1].back() != ':')
    throw detail::parse_error(line, "expected 'rot <edge>: <face>@<occ> ...'");
  std::string e = t[1].substr(0, t[1].size() - 1);
  std::vector<Passage> ps;
  for (std::size_t i = 2; i < t.size(); ++i) {
    auto at = t[i].find('@');
    if (at == std::string::npos) throw detail::parse_error(line, "bad passage '" + t[i] + "'");
    try {
      ps.push_back({t[i].substr(0, at), std::stoi(t[i].substr(at + 1))});
    } catch (const std::exception&) {
      throw detail::parse_error(line, "bad passage '" + t[i] + "'");
    }
  }
  return {e, ps};
}

inline SpaceMinorOp parse_op(const std::vector<std::string>& t, int line) {
  if (t.size() != 3 || t[0] != "op") throw detail::parse_error(line, "expected 'op <kind> <target>'");
  auto k = op_from_name(t[1]);
  if (!k) throw detail::parse_error(line, "unknown operation '" + t[1] + "'");
  return {*k, t[2]};
}

// Script for `minor`: one operation per line, with or without the "op" prefix.
inline std::vector<SpaceMinorOp> parse_op_script(std::istream& in) {
  std::vector<SpaceMinorOp> ops;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto t = detail::tokens(line);
    if (t.empty()) continue;
    if (t[0] != "op") t.insert(t.begin(), "op");
    ops.push_back(parse_op(t, n));
  }
  return ops;
}

// ---------------------------------------------------------------------------
// Catalogue dumps

inline std::string format_unlabelled(const UnlabelledMarkedGraph& u) {
  std::ostringstream out;
  out << "nodes " << u.graph.node_count() << " v " << u.v << " w " << u.w << " arcs";
  for (const auto& a : u.graph.arcs()) out << " " << a.u << "-" << a.v;
  out << " A";
  for (int a : u.A) out << " " << a;
  out << " B";
  for (int b : u.B) out << " " << b;
  return out.str();
}

inline std::string format_marked(const MarkedGraph& m) {
  std::ostringstream out;
  out << "nodes " << m.graph.node_count() << " v " << m.v << " w " << m.w << " arcs";
  for (const auto& a : m.graph.arcs()) out << " " << a.u << "-" << a.v;
  out << " pairs";
  for (const auto& [a, b] : m.pairs) out << " " << a << "/" << b;
  return out.str();
}

inline std::string format_strict(const StrictMarkedGraph& s) {
  std::ostringstream out;
  out << format_marked(s.marked()) << " iota";
  for (const auto& [a, b] : s.iota) out << " " << a << "/" << b;
  return out.str();
}

}  // namespace embed3
