#include "kpx/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

#include "kpx/error.hpp"
#include "kpx/groupoid.hpp"

namespace kpx {

  std::string_view to_string(Tri t) noexcept {
    switch (t) {
      case Tri::False:
        return "false";
      case Tri::True:
        return "true";
      case Tri::Unknown:
        break;
    }
    return "unknown";
  }

  Tri tri_and(Tri a, Tri b) noexcept {
    if (a == Tri::False || b == Tri::False) {
      return Tri::False;
    }
    if (a == Tri::True && b == Tri::True) {
      return Tri::True;
    }
    return Tri::Unknown;
  }

  namespace {

    std::string bounds_text(AnalysisBounds const& b) {
      return "cycle_length=" + std::to_string(b.cycle_length);
    }

    // Degrees with the given total, lexicographically.
    std::vector<Degree> degrees_of_total(std::size_t k, int total) {
      std::vector<Degree> out;
      std::vector<int>    c(k, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == k) {
          c[i] = left;
          out.emplace_back(c);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          c[i] = x;
          rec(i + 1, left - x);
        }
      };
      if (k > 0) {
        rec(0, total);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // reach[v] holds every s(λ) with λ ∈ vΛ.
    std::vector<std::vector<bool>> reachability(KGraph const& g) {
      std::size_t                    n = g.number_of_vertices();
      std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
      for (VertexId v = 0; v < n; ++v) {
        std::deque<VertexId> todo{v};
        reach[v][v] = true;
        while (!todo.empty()) {
          VertexId w = todo.front();
          todo.pop_front();
          for (EdgeId e : g.edges_into(w)) {
            VertexId s = g.source(e);
            if (!reach[v][s]) {
              reach[v][s] = true;
              todo.push_back(s);
            }
          }
        }
      }
      return reach;
    }

    bool is_total_source(KGraph const& g, VertexId w) {
      return g.edges_into(w).empty();
    }

    bool full_support(Degree const& d) {
      return d.support().size() == d.rank();
    }

    // Cycles at u of total degree 1..bound, shortest first.  Only cycles
    // whose lassos are certainly boundary paths are kept when certified is
    // set: those with full support, or any cycle when k = 1.
    std::vector<Path> cycles_at(KGraph const& g, VertexId u, int bound, bool certified) {
      std::vector<Path> out;
      for (int t = 1; t <= bound; ++t) {
        for (auto const& d : degrees_of_total(g.rank(), t)) {
          if (certified && g.rank() > 1 && !full_support(d)) {
            continue;
          }
          for (auto const& p : g.paths_from(u, d)) {
            if (p.source == u) {
              out.push_back(p);
            }
          }
        }
      }
      return out;
    }

    SpanForm periodic_kernel_element(KPAlgebra const& kp, AperiodicityVerdict const& v) {
      KGraph const& g  = kp.graph();
      Path          ma = g.compose(v.mu, v.alpha);
      Path          na = g.compose(v.nu, v.alpha);
      return kp.term(ma, ma) - kp.term(na, ma);
    }

  }  // namespace

  bool cycle_fixes_boundary(KGraph const& g, Path const& c) {
    if (c.source != c.range || c.is_vertex()) {
      throw Error(ErrorKind::DegreeOutOfRange, "not a cycle of nonzero degree: " + g.to_string(c));
    }
    std::set<Path>   seen{c};
    std::deque<Path> todo{c};
    while (!todo.empty()) {
      Path cyc = todo.front();
      todo.pop_front();
      for (EdgeId a : g.edges_into(cyc.source)) {
        Path ea          = g.edge(a);
        auto [head, rot] = g.factor(g.compose(cyc, ea), Degree::unit(g.rank(), g.color(a)));
        if (!(head == ea)) {
          return false;
        }
        if (seen.insert(rot).second) {
          todo.push_back(rot);
        }
      }
    }
    return true;
  }

  AperiodicityVerdict check_aperiodic(KGraph const& g, AnalysisBounds const& bounds) {
    AperiodicityVerdict out;
    out.bounds = bounds_text(bounds);
    if (g.is_acyclic()) {
      out.status      = AperiodicityVerdict::Status::Aperiodic;
      out.certificate = "acyclic";
      return out;
    }
    for (int t = 1; t <= bounds.cycle_length; ++t) {
      for (auto const& d : degrees_of_total(g.rank(), t)) {
        for (VertexId u = 0; u < g.number_of_vertices(); ++u) {
          for (auto const& c : g.paths_from(u, d)) {
            if (c.source != u || !cycle_fixes_boundary(g, c)) {
              continue;
            }
            out.status      = AperiodicityVerdict::Status::Periodic;
            out.certificate = "cycle " + g.to_string(c) + " fixes every boundary path at " +
                              g.vertex_name(u);
            out.vertex = u;
            out.n      = d;
            out.m      = g.zero_degree();
            out.mu     = g.vertex(u);
            out.alpha  = c;
            out.nu     = c;
            return out;
          }
        }
      }
    }
    auto reach = reachability(g);
    bool all   = true;
    for (VertexId v = 0; v < g.number_of_vertices() && all; ++v) {
      bool hit = false;
      for (VertexId w = 0; w < g.number_of_vertices() && !hit; ++w) {
        hit = reach[v][w] && is_total_source(g, w);
      }
      all = hit;
    }
    if (all) {
      out.status      = AperiodicityVerdict::Status::Aperiodic;
      out.certificate = "every vertex reaches a vertex receiving no edges";
      return out;
    }
    if (g.rank() == 1 && bounds.cycle_length >= static_cast<int>(g.number_of_vertices())) {
      out.status      = AperiodicityVerdict::Status::Aperiodic;
      out.certificate = "every cycle has an entry";
      return out;
    }
    out.status      = AperiodicityVerdict::Status::Unknown;
    out.certificate = "no periodic cycle of total degree <= " +
                      std::to_string(bounds.cycle_length);
    return out;
  }

  CofinalityVerdict check_cofinal(KGraph const& g, AnalysisBounds const& bounds) {
    CofinalityVerdict out;
    out.bounds  = bounds_text(bounds);
    auto   reach = reachability(g);
    auto   n     = g.number_of_vertices();
    // Cofinality at (v, x) holds iff s(x), or the base of its cycle, is
    // reachable from v, since every x(n) reaches it.
    auto tail_vertex = [](BoundaryPath const& x) {
      return x.is_finite() ? x.head().source : x.cycle().source;
    };
    auto first_failure = [&](std::vector<BoundaryPath> const& xs) {
      for (auto const& x : xs) {
        for (VertexId v = 0; v < n; ++v) {
          if (!reach[v][tail_vertex(x)]) {
            out.status      = CofinalityVerdict::Status::NotCofinal;
            out.vertex      = v;
            out.x           = x;
            out.certificate = "no path from " + g.vertex_name(v) + " meets the boundary path";
            return true;
          }
        }
      }
      return false;
    };

    Boundary b(g);
    if (g.is_acyclic()) {
      auto xs = b.enumerate();
      std::sort(xs.begin(), xs.end());
      if (!first_failure(xs)) {
        out.status      = CofinalityVerdict::Status::Cofinal;
        out.certificate = "every boundary path checked";
      }
      return out;
    }

    bool strongly_connected = true;
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w = 0; w < n; ++w) {
        strongly_connected = strongly_connected && reach[v][w];
      }
    }
    if (strongly_connected) {
      out.status      = CofinalityVerdict::Status::Cofinal;
      out.certificate = "every vertex reaches every vertex";
      return out;
    }

    std::vector<BoundaryPath> xs;
    for (VertexId w = 0; w < n; ++w) {
      if (is_total_source(g, w)) {
        xs.push_back(BoundaryPath::finite(g.vertex(w)));
      }
      for (auto const& c : cycles_at(g, w, bounds.cycle_length, true)) {
        xs.push_back(b.lasso(g.vertex(w), c));
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (first_failure(xs)) {
      return out;
    }
    if (g.rank() == 1 && bounds.cycle_length >= static_cast<int>(n)) {
      out.status      = CofinalityVerdict::Status::Cofinal;
      out.certificate = "every sink and simple cycle is reachable from every vertex";
      return out;
    }
    out.status      = CofinalityVerdict::Status::Unknown;
    out.certificate = "no witness among sinks and lassos of period <= " +
                      std::to_string(bounds.cycle_length);
    return out;
  }

  PropertyCheck is_effective(KGraph const& g, AnalysisBounds const& bounds) {
    PropertyCheck out;
    out.value = check_aperiodic(g, bounds).as_tri();
    if (g.is_acyclic()) {
      Groupoid gr(g);
      bool     ok = true;
      for (auto const& el : gr.elements()) {
        if (gr.boundary().equal(el.x, el.y) &&
            std::any_of(el.m.begin(), el.m.end(), [](long c) { return c != 0; })) {
          ok = false;
        }
      }
      out.direct = ok;
      if (tri(ok) != out.value) {
        throw Error(ErrorKind::Internal, "effectiveness disagrees with aperiodicity");
      }
    }
    return out;
  }

  PropertyCheck is_minimal(KGraph const& g, AnalysisBounds const& bounds) {
    PropertyCheck out;
    out.value = check_cofinal(g, bounds).as_tri();
    if (g.is_acyclic()) {
      Boundary b(g);
      bool     ok = b.orbits().size() == 1;
      out.direct  = ok;
      if (tri(ok) != out.value) {
        throw Error(ErrorKind::Internal, "minimality disagrees with cofinality");
      }
    }
    return out;
  }

  FaithfulnessVerdict boundary_rep_faithful(KGraph const& g, AnalysisBounds const& bounds) {
    FaithfulnessVerdict out;
    auto                ap = check_aperiodic(g, bounds);
    KPAlgebra           kp(g, Ring::integers());
    Boundary            b(g);

    if (ap.status == AperiodicityVerdict::Status::Unknown) {
      out.faithful = Tri::Unknown;
      out.note     = "aperiodicity undecided within " + ap.bounds;
      return out;
    }

    if (ap.status == AperiodicityVerdict::Status::Periodic) {
      SpanForm a = periodic_kernel_element(kp, ap);
      if (kp.is_zero(a)) {
        throw Error(ErrorKind::Internal, "periodic kernel element is zero");
      }
      for (auto const& c : cycles_at(g, ap.vertex, bounds.cycle_length, true)) {
        FreeVector vec(kp.ring());
        b.accumulate(vec, b.lasso(g.vertex(ap.vertex), c), Scalar(1));
        if (!b.boundary_rep(a, vec).empty()) {
          throw Error(ErrorKind::Internal, "periodic kernel element acts nontrivially");
        }
        ++out.validated;
      }
      out.faithful       = Tri::False;
      out.kernel_witness = std::move(a);
      out.note           = "nonzero element killed on " + std::to_string(out.validated) +
                           " boundary paths";
      return out;
    }

    out.faithful = Tri::True;
    if (!g.is_acyclic()) {
      out.note = ap.certificate;
      return out;
    }
    // Spot check: nonzero random elements act nontrivially.
    std::vector<Path> paths;
    for (VertexId v = 0; v < g.number_of_vertices(); ++v) {
      for (auto const& p : g.all_paths_from(v)) {
        paths.push_back(p);
      }
    }
    std::vector<std::pair<Path, Path>> pairs;
    for (auto const& p : paths) {
      for (auto const& q : paths) {
        if (p.source == q.source) {
          pairs.emplace_back(p, q);
        }
      }
    }
    std::mt19937                          rng(12345);
    std::uniform_int_distribution<size_t> pick(0, pairs.size() - 1);
    std::uniform_int_distribution<int>    coef(-3, 3);
    std::uniform_int_distribution<int>    len(1, 4);
    auto                                  basis = b.enumerate();
    for (int i = 0; i < bounds.samples; ++i) {
      SpanForm a = kp.zero();
      for (int j = len(rng); j > 0; --j) {
        auto const& [l, m] = pairs[pick(rng)];
        a.add(l, m, Scalar(coef(rng)));
      }
      if (kp.is_zero(a)) {
        continue;
      }
      bool acts = false;
      for (auto const& x : basis) {
        FreeVector vec(kp.ring());
        b.accumulate(vec, x, Scalar(1));
        if (!b.boundary_rep(a, vec).empty()) {
          acts = true;
          break;
        }
      }
      if (!acts) {
        throw Error(ErrorKind::Internal, "nonzero element " + kp.to_string(a) + " acts as zero");
      }
      ++out.validated;
    }
    out.note = ap.certificate;
    return out;
  }

  SimplicityReport report(KGraph const& g, Ring const& ring, AnalysisBounds const& bounds) {
    SimplicityReport r;
    r.ring                       = ring.name();
    r.ring_is_field              = ring.is_field();
    r.aperiodic                  = check_aperiodic(g, bounds);
    r.cofinal                    = check_cofinal(g, bounds);
    r.effective                  = is_effective(g, bounds);
    r.minimal                    = is_minimal(g, bounds);
    r.basically_simple           = tri_and(r.aperiodic.as_tri(), r.cofinal.as_tri());
    r.simple                     = tri_and(r.basically_simple, tri(r.ring_is_field));
    r.ck_uniqueness_applicable   = r.aperiodic.as_tri();
    return r;
  }

}  // namespace kpx
