// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "embed3/catalog.hpp"
#include "embed3/corpus.hpp"
#include "embed3/decide.hpp"
#include "embed3/planarity.hpp"
#include "embed3/space_minor.hpp"
#include "embed3/yprime.hpp"
#include "generators.hpp"

using namespace embed3;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

// ---------------------------------------------------------------------------
// Independent checks

// Faces of a rotation traced by hand; every component must have Euler
// characteristic two.
bool sphere_rotation(const Graph& g, const std::vector<std::vector<int>>& rot) {
  const int n = g.node_count(), m = g.arc_count();
  std::vector<int> node_of(2 * m), next_at(2 * m, -1);
  for (int a = 0; a < m; ++a) {
    node_of[2 * a] = g.arc(a).u;
    node_of[2 * a + 1] = g.arc(a).v;
  }
  for (int x = 0; x < n; ++x) {
    const auto& r = rot[x];
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (node_of[r[i]] != x || next_at[r[i]] != -1) return false;
      next_at[r[i]] = r[(i + 1) % r.size()];
    }
  }
  for (int d = 0; d < 2 * m; ++d)
    if (next_at[d] < 0) return false;
  // components by union-find
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
  for (int a = 0; a < m; ++a) up[find(g.arc(a).u)] = find(g.arc(a).v);
  std::map<int, long> chi;
  for (int x = 0; x < n; ++x) chi[find(x)] += 1;
  for (int a = 0; a < m; ++a) chi[find(g.arc(a).u)] -= 1;
  std::vector<bool> seen(2 * m, false);
  for (int d = 0; d < 2 * m; ++d) {
    if (seen[d]) continue;
    chi[find(node_of[d])] += 1;
    for (int e = d; !seen[e]; e = next_at[e ^ 1]) seen[e] = true;
  }
  for (int x = 0; x < n; ++x) {
    bool isolated = rot[x].empty();
    if (isolated && chi[find(x)] == 1) continue;  // a lone node has no face walk
    if (chi[find(x)] != 2) return false;
  }
  return true;
}

// Sigma transcribed to every link: at the head of e its cyclic order, at the
// tail the reverse.
bool sigma_is_planar(const Complex2& c, const ComplexRotation& sigma) {
  for (const auto& [e, ends] : c.edges) {
    auto it = sigma.find(e);
    if (it == sigma.end()) return false;
    auto have = it->second, want = passages(c, e);
    std::sort(have.begin(), have.end());
    if (have != want) return false;
  }
  for (const auto& v : c.vertices) {
    LinkGraph L = link_graph(c, v);
    std::vector<std::vector<int>> rot(L.nodes.size());
    for (std::size_t x = 0; x < L.nodes.size(); ++x) {
      for (const Passage& p : sigma.at(L.nodes[x].edge))
        for (const auto& np : L.node_passages[x])
          if (np.passage == p) rot[x].push_back(np.arc_end);
      if (L.nodes[x].end == End::Tail) std::reverse(rot[x].begin(), rot[x].end());
    }
    if (!sphere_rotation(L.graph, rot)) return false;
  }
  return true;
}

// Invariant factors of an integer matrix by elimination.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> a) {
  std::vector<std::int64_t> out;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // pivot: least nonzero absolute value in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) pr = i, pc = j;
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        std::int64_t q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        std::int64_t q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility of the rest of the block
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (int k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
            }
      }
    }
    out.push_back(std::llabs(a[t][t]));
  }
  return out;
}

// dim H1(c; F_p) from the integer invariant factors of the boundary maps.
int h1_by_smith(const Complex2& c, int p) {
  std::map<std::string, int> vi, ei;
  for (const auto& v : c.vertices) vi.emplace(v, static_cast<int>(vi.size()));
  for (const auto& [e, ends] : c.edges) ei.emplace(e, static_cast<int>(ei.size()));
  const int V = static_cast<int>(vi.size()), E = static_cast<int>(ei.size()), F = static_cast<int>(c.faces.size());
  std::vector<std::vector<std::int64_t>> d1(V, std::vector<std::int64_t>(E)), d2(E, std::vector<std::int64_t>(F));
  for (const auto& [e, ends] : c.edges) {
    d1[vi[ends.head]][ei[e]] += 1;
    d1[vi[ends.tail]][ei[e]] -= 1;
  }
  int j = 0;
  for (const auto& [f, walk] : c.faces) {
    for (const auto& t : walk) d2[ei[t.edge]][j] += t.forward ? 1 : -1;
    ++j;
  }
  auto s1 = smith_diagonal(d1), s2 = smith_diagonal(d2);
  int r1 = static_cast<int>(s1.size()), r2 = static_cast<int>(s2.size());
  int betti = E - r1 - r2;
  int torsion = 0;
  for (auto d : s2)
    if (d > 1 && d % p == 0) ++torsion;
  return betti + torsion;
}

// Passes every op of the trace through step checks on the measure.
std::string measure_violation(const Complex2& start, const std::vector<SpaceMinorOp>& ops) {
  Complex2 cur = start;
  for (const auto& op : ops) {
    Complex2 next = apply_op(cur, op);
    auto [s0, n0] = measure(cur);
    auto [s1, n1] = measure(next);
    bool strict = op.kind == OpKind::ContractEdge || op.kind == OpKind::DeleteFace || op.kind == OpKind::ContractFace;
    if (strict && s1 >= s0) return to_string(op) + " did not decrease S";
    if (!strict && s1 != s0) return to_string(op) + " changed S";
    if (op.kind == OpKind::DeleteEdge && passages(cur, op.target).size() > 1 && next.edges.size() <= cur.edges.size())
      return to_string(op) + " did not add edges";
    if (op.kind == OpKind::SplitVertex && !(next == cur) && next.vertices.size() <= cur.vertices.size())
      return to_string(op) + " did not add vertices";
    cur = std::move(next);
  }
  return "";
}

std::vector<SpaceMinorOp> applicable_ops(const Complex2& c) {
  std::vector<SpaceMinorOp> out;
  for (const auto& [e, ends] : c.edges) {
    if (!c.is_loop(e)) out.push_back({OpKind::ContractEdge, e});
    out.push_back({OpKind::DeleteEdge, e});
  }
  for (const auto& [f, walk] : c.faces) {
    out.push_back({OpKind::DeleteFace, f});
    bool along_loop = walk.size() == 2 && (c.is_loop(walk[0].edge) || c.is_loop(walk[1].edge));
    if (walk.size() <= 2 && !along_loop) out.push_back({OpKind::ContractFace, f});
  }
  for (const auto& v : c.vertices) out.push_back({OpKind::SplitVertex, v});
  return out;
}

// Sigma after op: rotators restricted to surviving passages; new edges of
// one passage get the trivial order. Empty when the op is a face contraction
// (occurrences are renumbered) or a new edge has several passages.
std::optional<ComplexRotation> carry(const ComplexRotation& sigma, const Complex2& after, const SpaceMinorOp& op) {
  if (op.kind == OpKind::ContractFace) return std::nullopt;
  ComplexRotation out;
  for (const auto& [e, ends] : after.edges) {
    auto ps = passages(after, e);
    auto it = sigma.find(e);
    if (it == sigma.end()) {
      if (ps.size() > 1) return std::nullopt;
      out[e] = ps;
      continue;
    }
    for (const auto& p : it->second)
      if (std::find(ps.begin(), ps.end(), p) != ps.end()) out[e].push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criteria

Outcome criterion1() {
  Outcome o;
  DecideOptions opt;
  opt.assume_sc = true;
  for (const auto& [name, kind] : {std::pair<std::string, std::string>{"cone_K5", "K5"}, {"cone_K33", "K33"}}) {
    Complex2 c = corpus(name);
    Verdict v = decide(c, opt);
    o.require(v.status == Status::NotEmbeddable, name + " status " + status_name(v.status));
    o.require(v.certificate.kind == CertificateKind::Obstruction && v.certificate.result == "zcal1" &&
                  v.certificate.argument == kind,
              name + " certificate is not a zcal1 " + kind + " trace");
    std::string why;
    o.require(verify(c, v.certificate, nullptr, 1e6, &why), name + " certificate: " + why);
    auto r = replay(c, v.certificate.ops);
    auto m = r.ok ? is_in_zcal(r.end, shared_index()) : std::nullopt;
    o.require(m && m->family == 1 && m->kuratowski == kind, name + " trace end not a cone over " + kind);
    o.detail << name << ": " << v.certificate.ops.size() << " ops; ";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  Complex2 c = octahedron(3);
  DecideOptions opt;
  opt.assume_sc = true;
  Verdict v = decide(c, opt);
  o.require(v.status == Status::NotEmbeddable, std::string("status ") + status_name(v.status));
  std::string why;
  o.require(verify(c, v.certificate, nullptr, 1e6, &why), "certificate: " + why);
  Complex2 t = apply_op(c, {OpKind::ContractEdge, "n_q0"});
  t = apply_op(t, {OpKind::ContractFace, "n_q0_q1"});
  t = apply_op(t, {OpKind::ContractEdge, "n_q0_q1"});
  o.require(isomorphic(link_graph(t, "n").graph, complete_bipartite(3, 3)), "contracted triangle link is not K33");
  auto b = brute_force_rotation_search(c);
  o.require(b.candidates == 4096, "oracle saw " + std::to_string(static_cast<long>(b.candidates)));
  o.require(!b.rotation, "oracle found a planar rotation system");
  o.detail << "certificate " << v.certificate.result << " " << v.certificate.argument << ", oracle 0/"
           << static_cast<long>(b.candidates);
  return o;
}

Outcome criterion3() {
  Outcome o;
  Complex2 c = octahedron(1);
  DecideOptions opt;
  opt.assume_sc = true;
  Verdict v = decide(c, opt);
  o.require(v.status == Status::Embeddable, std::string("status ") + status_name(v.status));
  o.require(v.certificate.kind == CertificateKind::PlanarRotation, "no rotation certificate");
  o.require(verify(c, v.certificate), "certificate does not verify");
  o.require(sigma_is_planar(c, v.certificate.rotation), "independent check rejects the rotation");
  auto b = brute_force_rotation_search(c);
  o.require(b.candidates <= 16, "oracle space " + std::to_string(static_cast<long>(b.candidates)));
  o.require(b.rotation.has_value(), "oracle found no planar rotation system");
  o.detail << "oracle space " << static_cast<long>(b.candidates);
  return o;
}

Outcome criterion4() {
  Outcome o;
  Complex2 c = bowtie_loop();
  auto b = brute_force_rotation_search(c);
  o.require(b.candidates == 8, "oracle saw " + std::to_string(static_cast<long>(b.candidates)));
  o.require(!b.rotation, "oracle found a planar rotation system");
  DecideOptions opt;
  opt.assume_sc = true;
  Verdict v = decide(c, opt);
  o.require(!v.has_rotation, "decide found a rotation system");
  o.require(v.status == Status::NotEmbeddable, std::string("status ") + status_name(v.status));
  o.require(verify(c, v.certificate), "certificate does not verify");
  o.detail << "oracle 0/8, decide " << status_name(v.status) << " via " << v.certificate.result;
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto x = generate_xcal();
  const auto& cat = shared_index().catalogue();
  auto y = generate_ycal();
  o.require(x.size() == 4, "|X| = " + std::to_string(x.size()));
  o.require(cat.x1.size() == 6, "|X1| = " + std::to_string(cat.x1.size()));
  o.require(y.size() == 12, "|Y| = " + std::to_string(y.size()));
  for (const auto& m : y) o.require(!is_planar_marked(m) && !is_planar_marked_exhaustive(m), "a Y member is planar");
  auto slice = ycal_prime_slice(shared_index(), 6);
  o.require(slice.size() == 1717, "|Y' up to 6 nodes| = " + std::to_string(slice.size()));
  o.detail << "|X|=" << x.size() << " |X1|=" << cat.x1.size() << " |Y|=" << y.size() << " |Y'(<=6)|=" << slice.size();
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto& cat = shared_index().catalogue();
  std::mt19937 rng(7);
  StrictMinorSearch strict(shared_index(), false);
  MarkedMinorSearch marked(cat.ycal_keys, 6);
  int tried = 0, mismatch = 0, positive = 0, largest = 0;
  while (tried < 300) {
    auto s = gen::random_strict_graph(rng, cat);
    if (!s) continue;
    ++tried;
    bool a = strict.has_minor(*s), b = marked.has_minor(s->marked());
    mismatch += a != b;
    positive += b;
    largest = std::max(largest, s->graph.node_count());
  }
  o.require(mismatch == 0, std::to_string(mismatch) + " mismatches");
  o.require(positive > 0 && positive < tried, "no mix of positive and negative cases");
  o.detail << tried << " graphs (up to " << largest << " nodes), " << positive << " with a minor, " << mismatch
           << " mismatches";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<Complex2> pool;
  for (const auto& name : corpus_names()) pool.push_back(corpus(name));
  const int corpus_size = static_cast<int>(pool.size());
  std::mt19937 rng(5);
  int two = 0, three = 0;
  for (int it = 0; it < 200000 && (two < 80 || three < 20); ++it) {
    bool want_three = three < 20 && (two >= 80 || it % 50 == 0);
    Complex2 c = want_three ? gen::random_multigraph_complex(rng, 3, 2, 45)
                            : gen::random_multigraph_complex(rng, 2, 4, 40 + static_cast<int>(rng() % 31));
    if (c.faces.empty() || !is_locally_k_connected(c, 3).ok || rotation_system_count(c) > 1e5) continue;
    (want_three ? three : two) += 1;
    pool.push_back(std::move(c));
  }
  o.require(two == 80 && three == 20, "generated " + std::to_string(two) + "+" + std::to_string(three));
  int compared = 0, structural = 0, planar = 0, skipped = 0;
  std::map<std::string, int> kinds;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Complex2& c = pool[i];
    if (rotation_system_count(c) > 1e6) {
      ++skipped;
      continue;
    }
    std::string label = static_cast<int>(i) < corpus_size ? c.name : "random #" + std::to_string(i - corpus_size);
    auto oracle = brute_force_rotation_search(c);
    auto s = find_planar_rotation_system(c);
    bool hypothesis = s.failure && s.failure->kind == FailureKind::Hypothesis;
    bool found = s.rotation.has_value();
    if (hypothesis) {
      found = decide(c).has_rotation;  // brute-force fallback
    } else {
      ++structural;
      kinds[s.failure ? failure_name(s.failure->kind) : "rotation"] += 1;
    }
    ++compared;
    planar += oracle.rotation.has_value();
    o.require(found == oracle.rotation.has_value(), label + ": solver " + (found ? "found" : "missed") + ", oracle " +
                                                        (oracle.rotation ? "found" : "missed"));
    if (s.rotation) o.require(sigma_is_planar(c, *s.rotation), label + ": returned rotation is not planar");
    if (oracle.rotation) o.require(sigma_is_planar(c, *oracle.rotation), label + ": oracle rotation is not planar");
  }
  o.detail << compared << " complexes (" << structural << " by the structural solver, " << planar << " planar, "
           << skipped << " over budget);";
  for (const auto& [k, n] : kinds) o.detail << " " << k << "=" << n;
  return o;
}

Outcome criterion8() {
  Outcome o;
  int single = 0, carried = 0, searched = 0, traces = 0, steps = 0;
  std::vector<Complex2> planar_pool;
  for (const auto& name : corpus_names()) {
    Complex2 c = corpus(name);
    if (rotation_system_count(c) > 1e6) continue;
    if (brute_force_rotation_search(c).rotation) planar_pool.push_back(c);
  }
  const std::size_t from_corpus = planar_pool.size();
  std::mt19937 gen_rng(29);
  while (planar_pool.size() < from_corpus + 20) {
    Complex2 c = gen::random_multigraph_complex(gen_rng, 3, 2, 30);
    if (c.faces.empty() || rotation_system_count(c) > 1e4) continue;
    if (brute_force_rotation_search(c).rotation) planar_pool.push_back(c);
  }
  auto still_planar = [&](const Complex2& before, const ComplexRotation& sigma, const SpaceMinorOp& op,
                          const Complex2& after) -> std::optional<ComplexRotation> {
    if (auto next = carry(sigma, after, op); next && sigma_is_planar(after, *next)) {
      ++carried;
      return next;
    }
    ++searched;
    auto b = brute_force_rotation_search(after);
    if (b.rotation) return b.rotation;
    o.require(false, before.name + " " + to_string(op) + " lost every planar rotation system");
    return std::nullopt;
  };
  for (const auto& c : planar_pool) {
    auto sigma = brute_force_rotation_search(c).rotation;
    for (const auto& op : applicable_ops(c)) {
      Complex2 d = apply_op(c, op);
      ++single;
      still_planar(c, *sigma, op, d);
      auto bad = measure_violation(c, {op});
      o.require(bad.empty(), c.name + ": " + bad);
    }
  }
  // random traces, carrying a planar rotation system along
  std::mt19937 rng(13);
  for (const auto& start : planar_pool)
    for (int t = 0; t < 20; ++t) {
      Complex2 cur = start;
      auto sigma = brute_force_rotation_search(cur).rotation;
      std::vector<SpaceMinorOp> ops;
      for (int k = 0; k < 6 && !cur.faces.empty(); ++k) {
        auto all = applicable_ops(cur);
        SpaceMinorOp op = all[rng() % all.size()];
        Complex2 next = apply_op(cur, op);
        auto s = still_planar(cur, *sigma, op, next);
        if (!s) break;
        sigma = s;
        ops.push_back(op);
        cur = std::move(next);
        ++steps;
      }
      ++traces;
      auto bad = measure_violation(start, ops);
      o.require(bad.empty(), start.name + " trace: " + bad);
    }
  // traces produced by the decision procedure
  for (const auto& name : corpus_names()) {
    Complex2 c = corpus(name);
    DecideOptions opt;
    opt.assume_sc = true;
    Verdict v = decide(c, opt);
    if (v.certificate.ops.empty()) continue;
    ++traces;
    auto bad = measure_violation(c, v.certificate.ops);
    o.require(bad.empty(), name + " certificate trace: " + bad);
  }
  o.detail << from_corpus << " planar corpus and " << planar_pool.size() - from_corpus << " random complexes, " << single << " single ops, " << traces << " traces ("
           << steps << " random steps); rotation carried " << carried << " times, re-searched " << searched;
  return o;
}

Outcome criterion9() {
  Outcome o;
  int checks = 0;
  for (int q = 2; q <= 6; ++q)
    for (int p : {2, 3, 5}) {
      Complex2 c = crosscap(q);
      int lib = homology_h1_dim(c, p), snf = h1_by_smith(c, p);
      int want = q % p == 0 ? 1 : 0;
      o.require(lib == want && snf == want, "crosscap " + std::to_string(q) + " over F" + std::to_string(p) + ": " +
                                                std::to_string(lib) + " / " + std::to_string(snf));
      ++checks;
    }
  for (const auto& c : {tetra(), octahedron(1)})
    for (int p : {2, 3, 5}) {
      o.require(homology_h1_dim(c, p) == 0 && h1_by_smith(c, p) == 0, c.name + " has H1 over F" + std::to_string(p));
      ++checks;
    }
  // the rest of the corpus against the integer computation
  for (const auto& name : corpus_names())
    for (int p : {2, 3, 5}) {
      Complex2 c = corpus(name);
      o.require(homology_h1_dim(c, p) == h1_by_smith(c, p), name + " over F" + std::to_string(p));
      ++checks;
    }
  o.detail << checks << " comparisons";
  return o;
}

struct Embedded {
  Graph g;
  GraphRotation r;
};

// Random simple planar graph grown by arcs that keep it planar.
Embedded random_planar(std::mt19937& rng, int n) {
  Graph g = cycle_graph(n);
  int target = n + static_cast<int>(rng() % (2 * n - 3));
  for (int tries = 0; tries < 200 && g.arc_count() < target; ++tries) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b) continue;
    bool dup = false;
    for (int k = 0; k < g.arc_count(); ++k)
      dup = dup || (g.arc(k).u == a && g.arc(k).v == b) || (g.arc(k).u == b && g.arc(k).v == a);
    if (dup) continue;
    Graph h = g;
    h.add_arc(a, b);
    if (is_planar(h)) g = h;
  }
  return {g, *planar_embedding(g)};
}

Outcome criterion10() {
  Outcome o;
  std::mt19937 rng(17);
  int instances = 0, planar_checked = 0, con2 = 0, con3 = 0;
  while (instances < 500) {
    Embedded h1 = random_planar(rng, 4 + static_cast<int>(rng() % 5));
    Embedded h2 = random_planar(rng, 4 + static_cast<int>(rng() % 5));
    int v1 = static_cast<int>(rng() % h1.g.node_count());
    auto d1 = h1.r.rotator[v1].size();
    std::vector<int> same;
    for (int x = 0; x < h2.g.node_count(); ++x)
      if (h2.r.rotator[x].size() == d1) same.push_back(x);
    if (same.empty()) continue;
    int v2 = same[rng() % same.size()];
    ++instances;
    // pair the rotator at v1 with the reverse of the rotator at v2
    const auto& a = h1.r.rotator[v1];
    const auto& b = h2.r.rotator[v2];
    const std::size_t d = a.size(), shift = rng() % d;
    std::vector<std::pair<int, int>> iota;
    for (std::size_t i = 0; i < d; ++i) iota.emplace_back(arc_of(a[i]), arc_of(b[(shift + d - i) % d]));
    auto s = vertex_sum(h1.g, v1, h2.g, v2, iota);
    auto r = combined_rotation(h1.g, v1, h1.r, h2.g, v2, h2.r, s);
    o.require(sphere_rotation(s.graph, r.rotator), "combined rotation not planar (instance " +
                                                       std::to_string(instances) + ")");
    ++planar_checked;
    // connectivity, with an arbitrary bijection as well
    std::vector<std::pair<int, int>> shuffled = iota;
    std::vector<int> rights;
    for (const auto& [x, y] : shuffled) rights.push_back(y);
    std::shuffle(rights.begin(), rights.end(), rng);
    for (std::size_t i = 0; i < d; ++i) shuffled[i].second = rights[i];
    auto t = vertex_sum(h1.g, v1, h2.g, v2, shuffled);
    for (int k : {2, 3})
      if (is_k_connected(h1.g, k) && is_k_connected(h2.g, k)) {
        o.require(is_k_connected(s.graph, k) && is_k_connected(t.graph, k),
                  std::to_string(k) + "-connectivity lost (instance " + std::to_string(instances) + ")");
        (k == 2 ? con2 : con3) += 1;
      }
  }
  o.require(con3 >= 50, "only " + std::to_string(con3) + " 3-connected instances");
  o.detail << instances << " sums, " << planar_checked << " rotations checked, " << con2 << " 2-connected and " << con3
           << " 3-connected pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cone over K5 and K33 not embeddable with verified trace", criterion1},
      {"three-square octahedron not embeddable; K33 link; oracle agrees", criterion2},
      {"one-square octahedron embeddable; oracle agrees", criterion3},
      {"bowtie with loop has no planar rotation system", criterion4},
      {"catalogue counts", criterion5},
      {"strict and marked minor searches agree", criterion6},
      {"solver agrees with oracle", criterion7},
      {"space minors preserve planar rotation systems; measure monotone", criterion8},
      {"first homology against Smith normal form", criterion9},
      {"vertex sums preserve planarity and connectivity", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s (%.1fs): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
