#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "embed3/corpus.hpp"
#include "embed3/decide.hpp"
#include "embed3/space_minor.hpp"
#include "generators.hpp"

using namespace embed3;

namespace {

// Every operation that applies to c, trivial ones included.
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

// Checks the measure rule for one step; empty when it holds.
std::string step_rule(const Complex2& before, const SpaceMinorOp& op, const Complex2& after) {
  auto [s0, n0] = measure(before);
  auto [s1, n1] = measure(after);
  switch (op.kind) {
    case OpKind::ContractEdge:
    case OpKind::DeleteFace:
    case OpKind::ContractFace:
      if (s1 >= s0) return "S did not decrease";
      break;
    case OpKind::DeleteEdge:
      if (s1 != s0) return "S changed";
      if (passages(before, op.target).size() > 1 && after.edges.size() <= before.edges.size()) return "edge count did not grow";
      break;
    case OpKind::SplitVertex: {
      if (s1 != s0) return "S changed";
      int count = 0;
      components(link_graph(before, op.target).graph, &count);
      if (count > 1 && after.vertices.size() <= before.vertices.size()) return "vertex count did not grow";
      break;
    }
  }
  return "";
}

std::string check_trace(const SpaceMinorTrace& t) {
  Complex2 cur = t.start;
  for (const auto& op : t.ops) {
    Complex2 next = apply_op(cur, op);
    auto why = step_rule(cur, op, next);
    if (!why.empty()) return to_string(op) + ": " + why;
    cur = std::move(next);
  }
  return "";
}

std::set<std::string> all_faces(const Complex2& c) {
  std::set<std::string> out;
  for (const auto& [f, walk] : c.faces) out.insert(f);
  return out;
}

Complex2 octa3_contracted() {
  Complex2 c = octahedron(3);
  c = apply_op(c, {OpKind::ContractEdge, "n_q0"});
  c = apply_op(c, {OpKind::ContractFace, "n_q0_q1"});
  return apply_op(c, {OpKind::ContractEdge, "n_q0_q1"});
}

}  // namespace

TEST(Measure, Examples) {
  Complex2 t = tetra();
  EXPECT_EQ(measure(t), Measure(12, 10));
  Complex2 d = apply_op(t, {OpKind::DeleteFace, "a_b_c"});
  EXPECT_EQ(measure(d).first, 9);
  Complex2 b = bowtie_loop();
  for (const auto& v : b.vertices) EXPECT_EQ(measure(apply_op(b, {OpKind::SplitVertex, v})).first, measure(b).first);
}

TEST(Replay, IdentityAndErrors) {
  Complex2 c = octahedron(1);
  auto r = replay(c, {});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.end, c);
  EXPECT_TRUE(verify_trace({c, {}, c}));

  auto bad = replay(crosscap(2), {{OpKind::DeleteEdge, "l"}, {OpKind::ContractEdge, "l_1"}});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.failed_step, 1);
  EXPECT_NE(bad.error.find("loop"), std::string::npos);

  EXPECT_FALSE(replay(c, {{OpKind::ContractFace, "equator"}}).ok);
  EXPECT_FALSE(replay(c, {{OpKind::DeleteFace, "nope"}}).ok);
  EXPECT_FALSE(verify_trace({c, {{OpKind::DeleteFace, "n_q0_q1"}}, c}));
}

TEST(Replay, SixOperationTrace) {
  // delete two faces, contract an edge and the digon it leaves, forget an
  // edge, split a vertex
  Complex2 c = octahedron(0);
  std::vector<SpaceMinorOp> ops = {{OpKind::DeleteFace, "n_q0_q1"},    {OpKind::DeleteFace, "q0_q1_s"},
                                   {OpKind::ContractEdge, "n_q1"},     {OpKind::ContractFace, "n_q1_q2"},
                                   {OpKind::DeleteEdge, "n_q0"},       {OpKind::SplitVertex, "n"}};
  auto r = replay(c, ops);
  ASSERT_TRUE(r.ok) << r.error;
  EXPECT_TRUE(validate(r.end).empty());
  EXPECT_EQ(r.end.faces.size(), 5u);
  EXPECT_EQ(r.end.edges.count("n_q1_q2"), 1u);
  EXPECT_EQ(check_trace({c, ops, r.end}), "");
  EXPECT_TRUE(verify_trace({c, ops, r.end}));
}

TEST(Monotonicity, EverySingleOperation) {
  for (const auto& name : {"tetra", "octa0", "octa1", "octa3", "crosscap_2", "crosscap_3", "bowtie_loop", "cone_K33"}) {
    Complex2 c = corpus(name);
    for (const auto& op : applicable_ops(c)) {
      Complex2 d = apply_op(c, op);
      EXPECT_EQ(step_rule(c, op, d), "") << name << " " << to_string(op);
    }
  }
}

TEST(ThreeBounded, ClosedUnderOperations) {
  std::mt19937 rng(21);
  std::vector<Complex2> pool = {tetra(), octahedron(0), corpus("cone_K5"), crosscap(2), bowtie_loop()};
  for (int i = 0; i < 20; ++i) pool.push_back(gen::random_multigraph_complex(rng, 3, 2, 40));
  for (const auto& c : pool) {
    ASSERT_TRUE(is_3_bounded(c));
    for (const auto& op : applicable_ops(c)) EXPECT_TRUE(is_3_bounded(apply_op(c, op))) << c.name << " " << to_string(op);
  }
}

TEST(GeneralisedCone, SingletonsGiveTheCone) {
  Complex2 c = build_generalised_cone(complete_graph(5), {0, 1, 2, 3, 4});
  c.name = "cone_K5";
  EXPECT_EQ(c, corpus("cone_K5"));
  EXPECT_TRUE(isomorphic(link_graph(c, "t").graph, complete_graph(5)));
}

TEST(GeneralisedCone, OneClassGivesTwoVertices) {
  for (const Graph& g : {complete_graph(4), wheel_graph(4), complete_bipartite(3, 3)}) {
    Complex2 c = build_generalised_cone(g, std::vector<int>(g.node_count(), 0));
    ASSERT_EQ(c.vertices.size(), 2u);
    for (const auto& v : c.vertices) EXPECT_TRUE(isomorphic(link_graph(c, v).graph, g)) << v;
  }
}

TEST(GeneralisedCone, InvalidPartition) {
  Graph g = cycle_graph(4);
  EXPECT_THROW(build_generalised_cone(g, {0, 1, 0, 1}), ComplexError);
  EXPECT_THROW(build_generalised_cone(g, {0, 0}), ComplexError);
  Graph loop(2);
  loop.add_arc(0, 1);
  loop.add_arc(1, 1);
  EXPECT_THROW(build_generalised_cone(loop, {0, 1}), ComplexError);
}

TEST(GeneralisedCone, RandomTopLinkRoundTrip) {
  std::mt19937 rng(8);
  int built = 0;
  while (built < 50) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g(n);
    for (int x = 1; x < n; ++x) g.add_arc(x, static_cast<int>(rng() % x));
    for (int k = static_cast<int>(rng() % 5); k > 0; --k) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a != b) g.add_arc(a, b);
    }
    // classes: union of a random subset of arcs, so each class is connected
    std::vector<int> cls(n);
    for (int x = 0; x < n; ++x) cls[x] = x;
    std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
    for (int a = 0; a < g.arc_count(); ++a)
      if (rng() % 3 == 0) cls[find(g.arc(a).u)] = find(g.arc(a).v);
    std::vector<int> classes(n);
    for (int x = 0; x < n; ++x) classes[x] = find(x);
    std::vector<bool> loops(g.arc_count());
    for (int a = 0; a < g.arc_count(); ++a) loops[a] = rng() % 4 == 0;
    Complex2 c = build_generalised_cone(g, classes, loops);
    ASSERT_TRUE(validate(c).empty());
    EXPECT_TRUE(isomorphic(link_graph(c, "t").graph, g));
    auto s = recognise_cone(c);
    ASSERT_TRUE(s);
    EXPECT_TRUE(isomorphic(s->base, g));
    ++built;
  }
}

TEST(Zcal, Membership) {
  auto& index = shared_index();
  auto k5 = is_in_zcal(corpus("cone_K5"), index);
  ASSERT_TRUE(k5);
  EXPECT_EQ(k5->family, 1);
  EXPECT_EQ(k5->kuratowski, "K5");
  EXPECT_EQ(k5->top, "t");
  auto k33 = is_in_zcal(corpus("cone_K33"), index);
  ASSERT_TRUE(k33);
  EXPECT_EQ(k33->kuratowski, "K33");
  EXPECT_FALSE(is_in_zcal(tetra(), index));
  EXPECT_FALSE(is_in_zcal(cone_over(complete_graph(4)), index));
  EXPECT_FALSE(is_in_zcal(octahedron(3), index));
}

TEST(ReduceToCone, ConeIsFixed) {
  Complex2 c = corpus("cone_K5");
  auto r = reduce_to_cone(c, "t");
  EXPECT_TRUE(r.ops.empty());
  EXPECT_EQ(r.result, c);
}

TEST(ReduceToCone, ContractedOctahedron) {
  Complex2 c = octa3_contracted();
  auto r = reduce_to_cone(c, "n", true);
  EXPECT_TRUE(verify_trace({c, r.ops, r.result}));
  EXPECT_EQ(check_trace({c, r.ops, r.result}), "");
  auto s = recognise_cone(r.result);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->top, "n");
  EXPECT_TRUE(isomorphic(s->base, link_graph(c, "n").graph));
  EXPECT_THROW(reduce_to_cone(octahedron(3), "n"), ComplexError);  // squares are not 3-bounded
  Complex2 two = crosscap(2);
  two.edges["m"] = {"x", "x"};
  two.faces["g"] = {{"m", true}};
  EXPECT_THROW(reduce_to_cone(two, "x"), ComplexError);
}

TEST(ConeSubdivisionReduce, SubdividedKuratowskiGraphs) {
  // K5 with a pendant path and a subdivided arc
  Graph g = complete_graph(5);
  int s = g.add_node();
  int p = g.add_node();
  g.add_arc(0, s);
  g.add_arc(s, 1);
  g.add_arc(2, p);
  Complex2 cone = cone_over(g);
  LinkGraph L = link_graph(cone, "t");
  auto k = kuratowski_witness(L.graph);
  ASSERT_TRUE(k);
  std::set<std::string> keep;
  for (int a : k->arcs) keep.insert(L.arcs[a].face);
  auto r = cone_subdivision_reduce(cone, "t", keep);
  EXPECT_TRUE(verify_trace({cone, r.ops, r.result}));
  auto m = is_in_zcal(r.result, shared_index());
  ASSERT_TRUE(m);
  EXPECT_EQ(m->kuratowski, "K5");

  // K33 with every arc subdivided
  Graph b = complete_bipartite(3, 3);
  Graph sub(6);
  for (int a = 0; a < b.arc_count(); ++a) {
    int mid = sub.add_node();
    sub.add_arc(b.arc(a).u, mid);
    sub.add_arc(mid, b.arc(a).v);
  }
  Complex2 c33 = cone_over(sub);
  auto r33 = cone_subdivision_reduce(c33, "t", all_faces(c33));
  EXPECT_TRUE(verify_trace({c33, r33.ops, r33.result}));
  auto m33 = is_in_zcal(r33.result, shared_index());
  ASSERT_TRUE(m33);
  EXPECT_EQ(m33->kuratowski, "K33");

  auto id = cone_subdivision_reduce(corpus("cone_K5"), "t", all_faces(corpus("cone_K5")));
  EXPECT_TRUE(id.ops.empty());
}

TEST(ExtractObstruction, CorpusFailures) {
  for (const auto& name : {"cone_K5", "cone_K33", "octa3", "sc_case2"}) {
    Complex2 c = corpus(name);
    auto s = find_planar_rotation_system(c);
    ASSERT_TRUE(s.failure) << name;
    std::string why;
    auto o = extract_obstruction(c, *s.failure, shared_index(), &why);
    ASSERT_TRUE(o) << name << ": " << why;
    EXPECT_TRUE(verify_trace(o->trace)) << name;
    EXPECT_EQ(check_trace(o->trace), "") << name;
    auto m = is_in_zcal(o->trace.end, shared_index());
    ASSERT_TRUE(m) << name;
    EXPECT_EQ(m->family, o->member.family);
    if (std::string(name) == "sc_case2") EXPECT_EQ(m->family, 2);
    try {
      EXPECT_FALSE(brute_force_rotation_search(o->trace.end, 1e6).rotation) << name;
    } catch (const BudgetExceeded&) {
    }
  }
}

TEST(ExtractObstruction, HypothesisFailure) {
  auto s = find_planar_rotation_system(octahedron(1));
  ASSERT_TRUE(s.failure);
  std::string why;
  EXPECT_FALSE(extract_obstruction(octahedron(1), *s.failure, shared_index(), &why));
  EXPECT_NE(why.find("hypothesis"), std::string::npos);
}
