#include "doctest.h"
#include "kpx/analysis.hpp"
#include "kpx/error.hpp"
#include "kpx/fixtures.hpp"
#include "kpx/groupoid.hpp"

using namespace kpx;

namespace {

  using AStatus = AperiodicityVerdict::Status;
  using CStatus = CofinalityVerdict::Status;

  // 1-graph: loop e at v and an edge f from the sink w into v.
  KGraphSpec loop_with_exit() {
    KGraphSpec s;
    s.k        = 1;
    s.vertices = {"v", "w"};
    s.edges    = {{"e", 1, "v", "v"}, {"f", 1, "v", "w"}};
    return s;
  }

  // 1-graph: one vertex with two loops.
  KGraphSpec two_loops() {
    KGraphSpec s;
    s.k        = 1;
    s.vertices = {"v"};
    s.edges    = {{"a", 1, "v", "v"}, {"b", 1, "v", "v"}};
    return s;
  }

  // 1-graph: two disjoint loops.
  KGraphSpec disjoint_loops() {
    KGraphSpec s;
    s.k        = 1;
    s.vertices = {"a", "b"};
    s.edges    = {{"ea", 1, "a", "a"}, {"eb", 1, "b", "b"}};
    return s;
  }

  std::vector<KGraph> acyclic_fixtures() {
    std::vector<KGraph> gs;
    gs.push_back(KGraph::validate(fixtures::lambda2()));
    gs.push_back(KGraph::validate(fixtures::two_vertices()));
    gs.push_back(omega_graph(1, Degree{3}));
    gs.push_back(omega_graph(2, Degree{1, 1}));
    gs.push_back(omega_graph(2, Degree{2, 1}));
    return gs;
  }

}  // namespace

TEST_CASE("tri logic") {
  CHECK(tri_and(Tri::True, Tri::True) == Tri::True);
  CHECK(tri_and(Tri::True, Tri::Unknown) == Tri::Unknown);
  CHECK(tri_and(Tri::Unknown, Tri::False) == Tri::False);
  CHECK(to_string(Tri::Unknown) == "unknown");
}

TEST_CASE("aperiodicity verdicts") {
  auto l2 = KGraph::validate(fixtures::lambda2());
  auto v  = check_aperiodic(l2);
  CHECK(v.status == AStatus::Aperiodic);
  CHECK(v.certificate == "acyclic");
  CHECK(check_aperiodic(omega_graph(2, Degree{1, 1})).status == AStatus::Aperiodic);

  auto loop = KGraph::validate(fixtures::loop());
  auto p    = check_aperiodic(loop);
  REQUIRE(p.status == AStatus::Periodic);
  CHECK(p.n == Degree{1});
  CHECK(p.m == Degree{0});
  CHECK(loop.to_string(p.mu) == "v");
  CHECK(loop.to_string(p.alpha) == "e");
  CHECK(loop.to_string(p.nu) == "e");

  auto l1 = KGraph::validate(fixtures::lambda1_truncated(3));
  auto q  = check_aperiodic(l1);
  REQUIRE(q.status == AStatus::Periodic);
  CHECK(q.n == Degree{1, 0});

  auto exit = KGraph::validate(loop_with_exit());
  CHECK(check_aperiodic(exit).status == AStatus::Aperiodic);
  auto two = KGraph::validate(two_loops());
  auto t   = check_aperiodic(two);
  CHECK(t.status == AStatus::Aperiodic);
  CHECK(t.certificate == "every cycle has an entry");
  CHECK(check_aperiodic(two, {.cycle_length = 0}).status == AStatus::Unknown);
}

TEST_CASE("cycle fixing boundary paths") {
  auto loop = KGraph::validate(fixtures::loop());
  CHECK(cycle_fixes_boundary(loop, loop.parse_path("e")));
  CHECK(cycle_fixes_boundary(loop, loop.parse_path("e.e")));
  auto two = KGraph::validate(two_loops());
  CHECK_FALSE(cycle_fixes_boundary(two, two.parse_path("a")));
  auto l1 = KGraph::validate(fixtures::lambda1_truncated(2));
  CHECK(cycle_fixes_boundary(l1, l1.parse_path("e")));
  CHECK_THROWS_AS(cycle_fixes_boundary(loop, loop.parse_path("v")), Error);
}

TEST_CASE("cofinality verdicts") {
  auto l2 = KGraph::validate(fixtures::lambda2());
  auto c  = check_cofinal(l2);
  REQUIRE(c.status == CStatus::NotCofinal);
  CHECK(l2.vertex_name(c.vertex) == "v5");
  CHECK(Boundary(l2).to_string(*c.x) == "e1.f1");

  CHECK(check_cofinal(omega_graph(1, Degree{3})).status == CStatus::Cofinal);
  CHECK(check_cofinal(KGraph::validate(fixtures::loop())).status == CStatus::Cofinal);

  auto exit = KGraph::validate(loop_with_exit());
  auto e    = check_cofinal(exit);
  REQUIRE(e.status == CStatus::NotCofinal);
  CHECK(exit.vertex_name(e.vertex) == "w");
  CHECK(Boundary(exit).to_string(*e.x) == "(e)^inf");

  auto dis = KGraph::validate(disjoint_loops());
  auto d   = check_cofinal(dis);
  REQUIRE(d.status == CStatus::NotCofinal);
  CHECK(dis.vertex_name(d.vertex) == "b");
}

TEST_CASE("effective and minimal") {
  auto l2 = KGraph::validate(fixtures::lambda2());
  CHECK(is_effective(l2).value == Tri::True);
  CHECK(is_minimal(l2).value == Tri::False);
  auto om = omega_graph(2, Degree{1, 1});
  CHECK(is_effective(om).value == Tri::True);
  CHECK(is_minimal(om).value == Tri::True);
  auto loop = KGraph::validate(fixtures::loop());
  CHECK(is_effective(loop).value == Tri::False);
  CHECK_FALSE(is_effective(loop).direct.has_value());
  for (auto const& g : acyclic_fixtures()) {
    auto eff = is_effective(g);
    auto min = is_minimal(g);
    REQUIRE(eff.direct.has_value());
    REQUIRE(min.direct.has_value());
    CHECK(tri(*eff.direct) == check_aperiodic(g).as_tri());
    CHECK(tri(*min.direct) == check_cofinal(g).as_tri());
    CHECK(*min.direct == (Boundary(g).orbits().size() == 1));
  }
}

TEST_CASE("the isotropy cell of the loop") {
  // Z(e ∗ v) contains (e^∞, 1, e^∞), a nontrivial isotropy element.
  auto     loop = KGraph::validate(fixtures::loop());
  Groupoid gr(loop);
  Boundary const& b  = gr.boundary();
  auto            x  = b.lasso(loop.vertex(0), loop.parse_path("e"));
  Cell            c  = gr.make_cell(loop.parse_path("e"), loop.vertex(0), {});
  CHECK_FALSE(gr.is_empty(c));
  CHECK(gr.contains(c, GroupoidElement{x, {1}, x}));
  CHECK_FALSE(gr.contains(c, GroupoidElement{x, {0}, x}));
}

TEST_CASE("boundary representation faithfulness") {
  auto l2 = KGraph::validate(fixtures::lambda2());
  auto f  = boundary_rep_faithful(l2);
  CHECK(f.faithful == Tri::True);
  CHECK(f.validated > 0);

  auto empty = KGraph::validate(fixtures::two_vertices());
  CHECK(boundary_rep_faithful(empty).faithful == Tri::True);

  auto loop = KGraph::validate(fixtures::loop());
  auto n    = boundary_rep_faithful(loop);
  REQUIRE(n.faithful == Tri::False);
  REQUIRE(n.kernel_witness.has_value());
  KPAlgebra kp(loop, Ring::rationals());
  CHECK(kp.to_string(*n.kernel_witness) == "s(e)*g(e) - s(e.e)*g(e)");
  CHECK_FALSE(kp.is_zero(*n.kernel_witness));
  CHECK(n.validated > 0);

  // Independent check: the witness kills e^∞ by direct action.
  Boundary   b(loop);
  FreeVector vec(kp.ring());
  b.accumulate(vec, b.lasso(loop.vertex(0), loop.parse_path("e")), Scalar(1));
  CHECK(b.boundary_rep(*n.kernel_witness, vec).empty());
}

TEST_CASE("simplicity reports") {
  auto l2 = KGraph::validate(fixtures::lambda2());
  auto r  = report(l2, Ring::rationals());
  CHECK(r.aperiodic.as_tri() == Tri::True);
  CHECK(r.cofinal.as_tri() == Tri::False);
  CHECK(r.basically_simple == Tri::False);
  CHECK(r.simple == Tri::False);
  CHECK(r.ck_uniqueness_applicable == Tri::True);

  auto om = omega_graph(1, Degree{3});
  auto q  = report(om, Ring::rationals());
  CHECK(q.basically_simple == Tri::True);
  CHECK(q.simple == Tri::True);
  auto z = report(om, Ring::integers());
  CHECK(z.basically_simple == Tri::True);
  CHECK(z.simple == Tri::False);
  CHECK_FALSE(z.ring_is_field);

  auto loop = report(KGraph::validate(fixtures::loop()), Ring::rationals());
  CHECK(loop.aperiodic.as_tri() == Tri::False);
  CHECK(loop.cofinal.as_tri() == Tri::True);
  CHECK(loop.basically_simple == Tri::False);

  // Unknown propagates.
  auto two = report(KGraph::validate(two_loops()), Ring::rationals(), {.cycle_length = 0});
  CHECK(two.aperiodic.as_tri() == Tri::Unknown);
  CHECK(two.simple == Tri::Unknown);
}
