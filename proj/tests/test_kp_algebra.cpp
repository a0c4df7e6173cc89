#include <set>

#include "doctest.h"
#include "kpx/boundary.hpp"
#include "kpx/error.hpp"
#include "kpx/fixtures.hpp"
#include "kpx/kp_algebra.hpp"
#include "support.hpp"

using namespace kpx;

namespace {

  struct Lambda2 {
    KGraph    g  = KGraph::validate(fixtures::lambda2());
    KPAlgebra kp = KPAlgebra(g, Ring::rationals());

    Path p(char const* s) const {
      return g.parse_path(s);
    }
  };

  std::set<std::string> names(KGraph const& g, std::vector<Path> const& ps) {
    std::set<std::string> r;
    for (auto const& p : ps) {
      r.insert(g.to_string(p));
    }
    return r;
  }

  Generator P(Path p) {
    return Generator::path_symbol(std::move(p));
  }

  Generator G(Path p) {
    return Generator::ghost_symbol(std::move(p));
  }

}  // namespace

TEST_CASE("rings") {
  auto z = Ring::integers();
  CHECK_THROWS_AS(z.embed(Scalar(2) / 3), Error);
  try {
    z.embed(Scalar(2) / 3);
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::CoefficientNotInRing);
  }
  auto z5 = Ring::integers_mod(5);
  CHECK(z5.embed(Scalar(2) / 3) == 4);
  CHECK(z5.embed(Scalar(-1)) == 4);
  CHECK_THROWS_AS(Ring::integers_mod(6).embed(Scalar(1) / 2), Error);
  CHECK(z5.is_field());
  CHECK_FALSE(Ring::integers_mod(6).is_field());
  CHECK(Ring::rationals().is_field());
  CHECK_FALSE(z.is_field());
  CHECK(Ring::parse("zmod:7") == Ring::integers_mod(7));
  CHECK_THROWS_AS(Ring::parse("zmod:1"), Error);
  CHECK_THROWS_AS(Ring::parse("r"), Error);
}

TEST_CASE("reduce") {
  Lambda2 L;
  auto const& kp = L.kp;
  auto        ef = L.p("e1.f1");
  CHECK(kp.reduce({G(ef), P(ef)}) == kp.term(L.p("v4"), L.p("v4")));
  CHECK(kp.reduce({P(L.p("v1")), P(L.p("v2"))}).empty());
  CHECK(kp.reduce({G(L.p("e1")), P(L.p("f2"))}) == kp.term(L.p("f1"), L.p("e2")));
  CHECK(kp.reduce({G(L.p("e3")), P(L.p("f2"))}).empty());
  CHECK(kp.reduce({P(L.p("e1")), P(L.p("f1"))}) == kp.s(L.p("f2.e2")));
  CHECK(kp.reduce({G(L.p("f1")), G(L.p("e1"))}) == kp.ghost(ef));
  CHECK(kp.reduce({G(L.p("v1"))}) == kp.s(L.p("v1")));

  Path bogus = L.p("e1");
  bogus.edges = {99};
  CHECK_THROWS_AS(kp.reduce({P(bogus)}), Error);
}

TEST_CASE("multiply and grade") {
  Lambda2 L;
  auto const& kp = L.kp;
  auto        a  = kp.term(L.p("e1"), L.p("e1"));
  auto        b  = kp.term(L.p("e1"), L.p("v2"));
  CHECK(kp.multiply(a, b) == kp.term(L.p("e1"), L.p("v2")));
  CHECK(kp.multiply(kp.ghost(L.p("e1")), kp.s(L.p("f2"))) == kp.term(L.p("f1"), L.p("e2")));
  CHECK(kp.multiply(a, kp.zero()).empty());

  auto parts = kp.grade(kp.term(L.p("e2"), L.p("f1")) + kp.s(L.p("v1")));
  REQUIRE(parts.size() == 2);
  CHECK(parts.count(GradeVector{1, -1}) == 1);
  CHECK(parts.count(GradeVector{0, 0}) == 1);
  CHECK(kp.grade(kp.zero()).empty());
}

TEST_CASE("multiply agrees with reducing concatenated words") {
  std::vector<KGraph> graphs;
  graphs.push_back(KGraph::validate(fixtures::lambda2()));
  graphs.push_back(KGraph::validate(fixtures::loop()));
  graphs.push_back(KGraph::validate(fixtures::lambda1_truncated(2)));
  graphs.push_back(omega_graph(2, Degree{1, 1}));
  for (auto const& g : graphs) {
    KPAlgebra        kp(g, Ring::rationals());
    support::Sampler sm(g, Degree(std::vector<int>(g.rank(), 1)), 7);
    for (int trial = 0; trial < 150; ++trial) {
      Word w1, w2;
      int  n1 = sm.uniform(1, 3);
      int  n2 = sm.uniform(1, 3);
      for (int i = 0; i < n1 + n2; ++i) {
        auto gen = sm.uniform(0, 1) ? P(sm.path()) : G(sm.path());
        (i < n1 ? w1 : w2).push_back(gen);
      }
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      auto a = kp.reduce(w1);
      auto b = kp.reduce(w2);
      auto ab = kp.multiply(a, b);
      CHECK(ab == kp.reduce(w));
      for (auto const& [n, an] : kp.grade(a)) {
        for (auto const& [m, bm] : kp.grade(b)) {
          auto prod = kp.multiply(an, bm);
          for (auto const& [key, r] : prod.terms()) {
            auto d = grade_of(key.first.degree, key.second.degree);
            for (std::size_t i = 0; i < d.size(); ++i) {
              CHECK(d[i] == n[i] + m[i]);
            }
          }
        }
      }
      auto c = sm.element(Ring::rationals(), 2);
      CHECK(kp.multiply(kp.multiply(a, b), c) == kp.multiply(a, kp.multiply(b, c)));
    }
  }
}

TEST_CASE("pi_closure, t_set and theta") {
  Lambda2 L;
  auto const& kp = L.kp;
  auto        pi = kp.pi_closure({L.p("e1"), L.p("f2")});
  CHECK(names(L.g, pi.paths) == std::set<std::string>{"e1", "f2", "e1.f1"});
  CHECK(names(L.g, kp.pi_closure({L.p("v1")}).paths) == std::set<std::string>{"v1"});

  auto      loop = KGraph::validate(fixtures::loop());
  KPAlgebra kl(loop, Ring::rationals());
  CHECK(names(loop, kl.pi_closure({loop.parse_path("e")}).paths) == std::set<std::string>{"e"});

  CHECK(names(L.g, kp.t_set(L.p("e1"), pi)) == std::set<std::string>{"f1"});
  CHECK(kp.t_set(L.p("e1.f1"), pi).empty());
  CHECK(names(L.g, kp.t_set(L.p("f2"), pi)) == std::set<std::string>{"e2"});
  CHECK_THROWS_AS(kp.t_set(L.p("e3"), pi), Error);

  auto ef = L.p("e1.f1");
  CHECK(kp.theta(ef, ef, pi) == kp.term(ef, ef));
  auto th = kp.theta(L.p("e1"), L.p("e1"), pi);
  CHECK(th == kp.term(L.p("e1"), L.p("e1")) - kp.term(ef, ef));
  CHECK_THROWS_AS(kp.theta(L.p("e1"), L.p("f2"), pi), Error);

  // T(e3) = ∅ at the source v5, so Θ_{e3,e3} is the nonzero s_{e3}s_{e3*}.
  auto pi3 = kp.pi_closure({L.p("e3"), L.p("e1")});
  CHECK_FALSE(kp.is_zero(kp.theta(L.p("e3"), L.p("e3"), pi3)));
}

TEST_CASE("expand_core_in_theta and core_is_zero") {
  Lambda2 L;
  auto const& kp = L.kp;
  auto        pi = kp.pi_closure({L.p("e1"), L.p("f2")});
  auto        ef = L.p("e1.f1");
  auto        c  = kp.expand_core_in_theta(kp.term(L.p("e1"), L.p("e1")), pi);
  CHECK(c.size() == 2);
  CHECK(c[{L.p("e1"), L.p("e1")}] == 1);
  CHECK(c[{ef, ef}] == 1);
  auto th = kp.theta(L.p("f2"), L.p("f2"), pi);
  auto ct = kp.expand_core_in_theta(th, pi);
  CHECK(ct.size() == 1);
  CHECK(ct[{L.p("f2"), L.p("f2")}] == 1);
  CHECK(kp.expand_core_in_theta(kp.zero(), pi).empty());
  CHECK_THROWS_AS(kp.expand_core_in_theta(kp.term(L.p("e1"), L.p("v2")), pi), Error);
  CHECK_THROWS_AS(kp.expand_core_in_theta(kp.term(L.p("e3"), L.p("e3")), pi), Error);

  auto a = kp.term(L.p("e1"), L.p("e1")) + kp.term(ef, ef);
  CHECK(kp.core_is_zero(a - a));
  CHECK_FALSE(kp.core_is_zero(a));
  // T(f2) = {e2} is exhaustive at v3, so Θ_{f2,f2} vanishes; T(e3) = ∅ does
  // not.
  CHECK(kp.core_is_zero(th));
  auto pi3 = kp.pi_closure({L.p("e3"), L.p("e1")});
  CHECK_FALSE(kp.core_is_zero(kp.theta(L.p("e3"), L.p("e3"), pi3).scaled(5)));
  auto v1 = L.g.vertex_id("v1");
  CHECK(kp.core_is_zero(kp.kp4_defect(v1, {L.p("e1"), L.p("e3")})));
  CHECK_FALSE(kp.core_is_zero(kp.kp4_defect(v1, {L.p("f2")})));
  CHECK_THROWS_AS(kp.core_is_zero(kp.s(L.p("e1"))), Error);
}

TEST_CASE("is_zero, equals and kp4_defect") {
  Lambda2 L;
  auto const& kp = L.kp;
  auto        v1 = L.g.vertex_id("v1");
  for (VertexId v = 0; v < L.g.number_of_vertices(); ++v) {
    CHECK_FALSE(kp.is_zero(kp.s(L.g.vertex(v)).scaled(3)));
  }
  auto e1 = L.p("e1");
  CHECK(kp.equals(kp.reduce({G(e1), P(e1)}), kp.s(L.p("v2"))));
  CHECK(kp.is_zero(kp.kp4_defect(v1, {L.p("e1"), L.p("f2"), L.p("e3")})));
  CHECK(kp.is_zero(kp.kp4_defect(v1, {L.p("e1"), L.p("e3")})));
  CHECK_FALSE(kp.is_zero(kp.kp4_defect(v1, {L.p("f2")})));
  CHECK(kp.kp4_defect(v1, {}) == kp.s(L.p("v1")));
  CHECK_THROWS_AS(kp.kp4_defect(v1, {L.p("e2")}), Error);
  CHECK(kp.equals(kp.s(L.p("e1.f1")), kp.s(L.p("f2.e2"))));

  auto      loop = KGraph::validate(fixtures::loop());
  KPAlgebra kl(loop, Ring::rationals());
  auto      e = loop.parse_path("e");
  CHECK_FALSE(kl.is_zero(kl.term(e, e) - kl.term(loop.parse_path("e.e"), e)));

  // Over Z/2 the element 2 s_v vanishes because the coefficient does.
  KPAlgebra k2(L.g, Ring::integers_mod(2));
  CHECK(k2.s(L.p("v1")).scaled(2).empty());
}

TEST_CASE("kp4 defect vanishes exactly on exhaustive sets") {
  std::vector<KGraph> graphs;
  graphs.push_back(KGraph::validate(fixtures::lambda2()));
  graphs.push_back(KGraph::validate(fixtures::lambda1_truncated(2)));
  graphs.push_back(KGraph::validate(fixtures::loop()));
  for (auto const& g : graphs) {
    KPAlgebra kp(g, Ring::rationals());
    for (VertexId v = 0; v < g.number_of_vertices(); ++v) {
      std::vector<Path> cands;
      for (auto const& p : g.paths_up_to(v, Degree(std::vector<int>(g.rank(), 1)))) {
        if (!p.is_vertex()) {
          cands.push_back(p);
        }
      }
      if (cands.size() > 6) {
        cands.resize(6);
      }
      for (std::size_t mask = 0; mask < (std::size_t(1) << cands.size()); ++mask) {
        std::vector<Path> E;
        for (std::size_t i = 0; i < cands.size(); ++i) {
          if (mask & (std::size_t(1) << i)) {
            E.push_back(cands[i]);
          }
        }
        auto d = kp.kp4_defect(v, E);
        CHECK(kp.is_zero(d, true) == g.is_exhaustive(v, E));
      }
    }
  }
}

TEST_CASE("Θ matrix units") {
  Lambda2 L;
  auto const& kp = L.kp;
  std::vector<std::vector<Path>> sets = {
      {L.p("e1"), L.p("f2")}, {L.p("e1"), L.p("e3")}, {L.p("v1"), L.p("f2")},
      {L.p("e1.f1"), L.p("e3"), L.p("f1")}, {L.p("e2"), L.p("f1")}};
  for (auto const& E : sets) {
    auto pi = kp.pi_closure(E);
    std::vector<std::pair<Path, Path>> pairs;
    for (auto const& a : pi.paths) {
      for (auto const& b : pi.paths) {
        if (a.degree == b.degree && a.source == b.source) {
          pairs.emplace_back(a, b);
        }
      }
    }
    for (auto const& [l, m] : pairs) {
      auto t = kp.theta(l, m, pi);
      CHECK(kp.is_zero(t) == L.g.is_exhaustive(l.source, kp.t_set(l, pi)));
      for (auto const& [r, s] : pairs) {
        auto lhs = kp.multiply(t, kp.theta(r, s, pi));
        auto rhs = m == r ? kp.theta(l, s, pi) : kp.zero();
        CHECK(kp.equals(lhs, rhs));
      }
    }
  }
}

TEST_CASE("zero tests agree") {
  std::vector<KGraph> graphs;
  graphs.push_back(KGraph::validate(fixtures::lambda2()));
  graphs.push_back(omega_graph(2, Degree{1, 1}));
  for (auto const& g : graphs) {
    KPAlgebra        kp(g, Ring::rationals());
    Boundary         b(g);
    support::Sampler sm(g, Degree{1, 1}, 11);
    int              zeros = 0;
    for (int trial = 0; trial < 150; ++trial) {
      auto a    = sm.tricky_element(kp);
      bool zero = kp.is_zero(a, true);
      zeros += zero;
      CHECK(zero == support::kills(b, a));
    }
    CHECK(zeros > 0);
  }
}
