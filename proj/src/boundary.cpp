#include "kpx/boundary.hpp"

#include <algorithm>
#include <numeric>

#include "kpx/error.hpp"

namespace kpx {

  namespace {
    // All d with lo <= d <= hi, ordered by total degree then
    // lexicographically.
    std::vector<Degree> box(Degree const& lo, Degree const& hi) {
      std::vector<Degree> result{lo};
      for (std::size_t i = 0; i < lo.rank(); ++i) {
        std::vector<Degree> next;
        for (auto const& d : result) {
          for (int x = lo[i]; x <= hi[i]; ++x) {
            Degree e = d;
            e[i]     = x;
            next.push_back(e);
          }
        }
        result = std::move(next);
      }
      std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
        return std::pair(a.total(), a) < std::pair(b.total(), b);
      });
      return result;
    }
  }  // namespace

  void Boundary::require_acyclic() const {
    if (!graph_.is_acyclic()) {
      throw Error(ErrorKind::NotAcyclic, "exact boundary enumeration needs an acyclic graph");
    }
  }

  // λ fails to be a boundary path exactly when some x(n) admits a finite
  // exhaustive set none of whose members is a prefix of σ^n λ.  By
  // monotonicity it suffices to test the set of all such non-prefixes.
  bool Boundary::is_boundary_finite(Path const& lambda) const {
    require_acyclic();
    {
      std::lock_guard lock(mutex_);
      if (auto it = boundary_cache_.find(lambda); it != boundary_cache_.end()) {
        return it->second;
      }
    }
    bool result = true;
    for (auto const& n : box(graph_.zero_degree(), lambda.degree)) {
      Path     y = graph_.segment(lambda, n, lambda.degree);
      VertexId w = y.range;
      std::vector<Path> from_w;
      {
        std::lock_guard lock(mutex_);
        auto            it = paths_cache_.find(w);
        if (it != paths_cache_.end()) {
          from_w = it->second;
        }
      }
      if (from_w.empty()) {
        from_w = graph_.all_paths_from(w);
        std::lock_guard lock(mutex_);
        paths_cache_.emplace(w, from_w);
      }
      std::vector<Path> avoid;
      for (auto const& p : from_w) {
        if (!p.is_vertex() && !graph_.has_prefix(y, p)) {
          avoid.push_back(p);
        }
      }
      if (graph_.is_exhaustive(w, avoid)) {
        result = false;
        break;
      }
    }
    std::lock_guard lock(mutex_);
    boundary_cache_.emplace(lambda, result);
    return result;
  }

  std::vector<BoundaryPath> Boundary::enumerate_from(VertexId v) const {
    require_acyclic();
    std::vector<BoundaryPath> result;
    for (auto const& p : graph_.all_paths_from(v)) {
      if (is_boundary_finite(p)) {
        result.push_back(BoundaryPath::finite(p));
      }
    }
    return result;
  }

  std::vector<BoundaryPath> Boundary::enumerate() const {
    require_acyclic();
    std::vector<BoundaryPath> result;
    for (VertexId v = 0; v < graph_.number_of_vertices(); ++v) {
      auto part = enumerate_from(v);
      result.insert(result.end(), part.begin(), part.end());
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<std::vector<BoundaryPath>> Boundary::orbits() const {
    auto                     all = enumerate();
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t i) {
      while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i         = parent[i];
      }
      return i;
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
      Path const& x = all[i].head();
      for (auto const& p : box(graph_.zero_degree(), x.degree)) {
        auto y = BoundaryPath::finite(graph_.segment(x, p, x.degree));
        auto j = std::lower_bound(all.begin(), all.end(), y) - all.begin();
        parent[find(i)] = find(static_cast<std::size_t>(j));
      }
    }
    std::map<std::size_t, std::vector<BoundaryPath>> classes;
    for (std::size_t i = 0; i < all.size(); ++i) {
      classes[find(i)].push_back(all[i]);
    }
    std::vector<std::vector<BoundaryPath>> result;
    for (auto& [root, members] : classes) {
      result.push_back(std::move(members));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  BoundaryPath Boundary::raw_lasso(Path const& head, Path const& cycle) const {
    if (head.source != cycle.range || cycle.range != cycle.source) {
      throw Error(ErrorKind::NotComposable,
                  graph_.to_string(head) + " followed by the cycle "
                      + graph_.to_string(cycle));
    }
    if (cycle.degree.is_zero()) {
      throw Error(ErrorKind::DegreeOutOfRange, "a lasso cycle needs nonzero degree");
    }
    BoundaryPath x;
    x.head_  = head;
    x.cycle_ = cycle;
    return x;
  }

  BoundaryPath Boundary::lasso(Path const& head, Path const& cycle) const {
    return canonical(raw_lasso(head, cycle));
  }

  ExtendedDegree Boundary::degree(BoundaryPath const& x) const {
    if (x.is_finite()) {
      return ExtendedDegree(x.head().degree);
    }
    std::vector<long> d(graph_.rank());
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = x.cycle().degree[i] != 0 ? ExtendedDegree::infinity : x.head().degree[i];
    }
    return ExtendedDegree(std::move(d));
  }

  Path Boundary::unroll(BoundaryPath const& x, Degree const& m) const {
    if (!degree(x).dominates(m)) {
      throw Error(ErrorKind::DegreeOutOfRange,
                  m.to_string() + " exceeds " + degree(x).to_string());
    }
    if (x.is_finite()) {
      return x.head();
    }
    Path const& h = x.head();
    Path const& c = x.cycle();
    int         J = 0;
    for (std::size_t i = 0; i < graph_.rank(); ++i) {
      if (c.degree[i] != 0 && m[i] > h.degree[i]) {
        J = std::max(J, (m[i] - h.degree[i] + c.degree[i] - 1) / c.degree[i]);
      }
    }
    Path p = h;
    for (int j = 0; j < J; ++j) {
      p = graph_.compose(p, c);
    }
    return p;
  }

  Path Boundary::segment(BoundaryPath const& x, Degree const& m, Degree const& n) const {
    return graph_.segment(unroll(x, n), m, n);
  }

  bool Boundary::has_prefix(BoundaryPath const& x, Path const& mu) const {
    if (mu.range != x.range() || !degree(x).dominates(mu.degree)) {
      return false;
    }
    return segment(x, graph_.zero_degree(), mu.degree) == mu;
  }

  BoundaryPath Boundary::shift(BoundaryPath const& x, Degree const& n) const {
    Path p    = unroll(x, n);
    Path tail = graph_.factor(p, n).second;
    if (x.is_finite()) {
      return BoundaryPath::finite(tail);
    }
    return canonical(raw_lasso(tail, x.cycle()));
  }

  BoundaryPath Boundary::prepend(Path const& lambda, BoundaryPath const& x) const {
    if (lambda.source != x.range()) {
      throw Error(ErrorKind::NotComposable,
                  graph_.to_string(lambda) + " and " + to_string(x));
    }
    Path head = graph_.compose(lambda, x.head());
    if (x.is_finite()) {
      return BoundaryPath::finite(head);
    }
    return canonical(raw_lasso(head, x.cycle()));
  }

  // Two lassos with the same extended degree agree as soon as they agree up
  // to T + a + b, where T covers both heads and a, b are the cycle degrees:
  // past T each is invariant under its own cycle shift, and agreement on a
  // window of length a + b propagates along both periods.
  bool Boundary::equal(BoundaryPath const& x, BoundaryPath const& y) const {
    if (x.is_finite() || y.is_finite()) {
      return x.is_finite() && y.is_finite() && x.head() == y.head();
    }
    if (x.range() != y.range() || !(degree(x) == degree(y))) {
      return false;
    }
    Degree N = join(x.head().degree, y.head().degree) + x.cycle().degree
               + y.cycle().degree;
    for (std::size_t i = 0; i < graph_.rank(); ++i) {
      if (x.cycle().degree[i] == 0) {
        N[i] = x.head().degree[i];
      }
    }
    Degree z = graph_.zero_degree();
    return segment(x, z, N) == segment(y, z, N);
  }

  // Shortest period (by total degree, then lexicographically) with the same
  // support as the stored cycle, then the shortest head.
  BoundaryPath Boundary::canonical(BoundaryPath const& x) const {
    if (x.is_finite()) {
      return x;
    }
    Path const& h = x.head();
    Path const& c = x.cycle();
    Degree      lo(graph_.rank());
    for (std::size_t i = 0; i < graph_.rank(); ++i) {
      lo[i] = c.degree[i] != 0 ? 1 : 0;
    }
    Degree period = c.degree;
    for (auto const& p : box(lo, c.degree)) {
      Path cyc = segment(x, h.degree, h.degree + p);
      if (cyc.source == cyc.range && equal(x, raw_lasso(h, cyc))) {
        period = p;
        break;
      }
    }
    Degree hlo = h.degree;
    for (std::size_t i = 0; i < graph_.rank(); ++i) {
      if (c.degree[i] != 0) {
        hlo[i] = 0;
      }
    }
    for (auto const& t : box(hlo, h.degree)) {
      Path hh  = segment(x, graph_.zero_degree(), t);
      Path cyc = segment(x, t, t + period);
      if (cyc.source == cyc.range && hh.source == cyc.range) {
        auto candidate = raw_lasso(hh, cyc);
        if (equal(x, candidate)) {
          return candidate;
        }
      }
    }
    return raw_lasso(h, segment(x, h.degree, h.degree + period));
  }

  std::optional<BoundaryPath> Boundary::act(Generator const& g, BoundaryPath const& x) const {
    if (!g.is_ghost() || g.path.is_vertex()) {
      if (g.path.source != x.range()) {
        return std::nullopt;
      }
      return prepend(g.path, x);
    }
    if (!has_prefix(x, g.path)) {
      return std::nullopt;
    }
    return shift(x, g.path.degree);
  }

  void Boundary::accumulate(FreeVector& vec, BoundaryPath const& x, Scalar const& r) const {
    Scalar c = vec.ring.embed(r);
    if (c == 0) {
      return;
    }
    for (auto it = vec.terms.begin(); it != vec.terms.end(); ++it) {
      if (equal(it->first, x)) {
        it->second = vec.ring.add(it->second, c);
        if (it->second == 0) {
          vec.terms.erase(it);
        }
        return;
      }
    }
    auto pos = std::lower_bound(vec.terms.begin(), vec.terms.end(), x,
                                [](auto const& t, auto const& y) { return t.first < y; });
    vec.terms.emplace(pos, x, c);
  }

  FreeVector Boundary::boundary_rep(SpanForm const& a, FreeVector const& vec) const {
    FreeVector result(vec.ring);
    for (auto const& [x, r] : vec.terms) {
      for (auto const& [key, c] : a.terms()) {
        auto y = act(Generator::ghost_symbol(key.second), x);
        if (!y) {
          continue;
        }
        auto z = act(Generator::path_symbol(key.first), *y);
        if (z) {
          accumulate(result, *z, vec.ring.mul(r, vec.ring.embed(c)));
        }
      }
    }
    return result;
  }

  FreeVector Boundary::basis_sum(Ring const& ring) const {
    FreeVector v(ring);
    for (auto const& x : enumerate()) {
      accumulate(v, x, Scalar(1));
    }
    return v;
  }

  std::string Boundary::to_string(BoundaryPath const& x) const {
    if (x.is_finite()) {
      return graph_.to_string(x.head());
    }
    std::string h = x.head().is_vertex() ? "" : graph_.to_string(x.head()) + ".";
    return h + "(" + graph_.to_string(x.cycle()) + ")^inf";
  }

}  // namespace kpx
