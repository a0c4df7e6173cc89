#include "kpx/kgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "kpx/error.hpp"

namespace kpx {

  namespace {
    std::string pair_name(KGraph const& g, EdgeId a, EdgeId b) {
      return "(" + g.edge_name(a) + "," + g.edge_name(b) + ")";
    }

    template <typename T>
    void sort_unique(std::vector<T>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace

  KGraph KGraph::validate(KGraphSpec const& spec) {
    if (spec.k < 1) {
      throw Error(ErrorKind::BadEdge, "rank must be at least 1");
    }
    KGraph g;
    g.k_    = static_cast<std::size_t>(spec.k);
    g.spec_ = spec;

    g.vertex_names_ = spec.vertices;
    std::sort(g.vertex_names_.begin(), g.vertex_names_.end());
    for (std::size_t i = 0; i < g.vertex_names_.size(); ++i) {
      if (g.vertex_names_[i].empty()) {
        throw Error(ErrorKind::BadEdge, "empty vertex id");
      }
      if (i > 0 && g.vertex_names_[i] == g.vertex_names_[i - 1]) {
        throw Error(ErrorKind::DuplicateId,
                    "vertex " + g.vertex_names_[i] + " listed twice");
      }
      g.vertex_index_.emplace(g.vertex_names_[i], static_cast<VertexId>(i));
    }

    std::vector<EdgeSpec> edges = spec.edges;
    std::sort(edges.begin(), edges.end(), [](auto const& a, auto const& b) {
      return a.id < b.id;
    });
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const& e = edges[i];
      if (e.id.empty() || e.id.find('.') != std::string::npos) {
        throw Error(ErrorKind::BadEdge, "bad edge id '" + e.id + "'");
      }
      if (i > 0 && e.id == edges[i - 1].id) {
        throw Error(ErrorKind::DuplicateId, "edge " + e.id + " listed twice");
      }
      if (g.vertex_index_.count(e.id) != 0) {
        throw Error(ErrorKind::DuplicateId,
                    "edge " + e.id + " has the id of a vertex");
      }
      if (e.color < 1 || e.color > spec.k) {
        throw Error(ErrorKind::BadEdge,
                    "edge " + e.id + " has color " + std::to_string(e.color)
                        + " outside 1.." + std::to_string(spec.k));
      }
      auto r = g.vertex_index_.find(e.range);
      auto s = g.vertex_index_.find(e.source);
      if (r == g.vertex_index_.end() || s == g.vertex_index_.end()) {
        throw Error(ErrorKind::MissingEndpoint,
                    "edge " + e.id + " has endpoint "
                        + (r == g.vertex_index_.end() ? e.range : e.source)
                        + " which is not a vertex");
      }
      g.edges_.push_back(EdgeData{e.id,
                                  static_cast<std::size_t>(e.color - 1),
                                  r->second,
                                  s->second});
      g.edge_index_.emplace(e.id, static_cast<EdgeId>(i));
    }

    std::size_t const n = g.vertex_names_.size();
    g.into_by_color_.assign(n, std::vector<std::vector<EdgeId>>(g.k_));
    g.into_.assign(n, {});
    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
      g.into_by_color_[g.edges_[e].range][g.edges_[e].color].push_back(e);
      g.into_[g.edges_[e].range].push_back(e);
    }

    auto lookup = [&g](std::string const& name) {
      auto it = g.edge_index_.find(name);
      if (it == g.edge_index_.end()) {
        throw Error(ErrorKind::BadSquare,
                    "square refers to unknown edge " + name);
      }
      return it->second;
    };
    for (auto const& sq : spec.squares) {
      EdgeId e  = lookup(sq.first[0]);
      EdgeId f  = lookup(sq.first[1]);
      EdgeId f2 = lookup(sq.second[0]);
      EdgeId e2 = lookup(sq.second[1]);
      auto const& E = g.edges_;
      std::string name = pair_name(g, e, f) + "=" + pair_name(g, f2, e2);
      if (E[e].color >= E[f].color) {
        throw Error(ErrorKind::BadSquare,
                    name + ": first pair must increase in color");
      }
      if (E[f2].color != E[f].color || E[e2].color != E[e].color) {
        throw Error(ErrorKind::BadSquare, name + ": colors do not match");
      }
      if (E[e].source != E[f].range || E[f2].source != E[e2].range) {
        throw Error(ErrorKind::BadSquare, name + ": pair not composable");
      }
      if (E[e].range != E[f2].range || E[f].source != E[e2].source) {
        throw Error(ErrorKind::BadSquare, name + ": endpoints differ");
      }
      if (!g.forward_.emplace(std::pair(e, f), std::pair(f2, e2)).second) {
        throw Error(ErrorKind::NotBijective,
                    "pair " + pair_name(g, e, f) + " has two factorizations");
      }
      if (!g.backward_.emplace(std::pair(f2, e2), std::pair(e, f)).second) {
        throw Error(ErrorKind::NotBijective,
                    "pair " + pair_name(g, f2, e2)
                        + " has two factorizations");
      }
      ++g.number_of_squares_;
    }

    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
      for (EdgeId f : g.into_[g.edges_[e].source]) {
        auto ce = g.edges_[e].color;
        auto cf = g.edges_[f].color;
        if (ce == cf) {
          continue;
        }
        auto const& table = ce < cf ? g.forward_ : g.backward_;
        if (table.count({e, f}) == 0) {
          throw Error(ErrorKind::NotBijective,
                      "pair " + pair_name(g, e, f) + " has no factorization");
        }
      }
    }

    if (g.k_ >= 3) {
      g.check_cubes();
    }

    // Cycle detection on the skeleton, following edges from range to source.
    std::vector<int> state(n, 0);
    g.acyclic_ = true;
    for (VertexId root = 0; root < n && g.acyclic_; ++root) {
      if (state[root] != 0) {
        continue;
      }
      std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
      state[root] = 1;
      while (!stack.empty() && g.acyclic_) {
        auto& [v, i] = stack.back();
        if (i == g.into_[v].size()) {
          state[v] = 2;
          stack.pop_back();
          continue;
        }
        VertexId w = g.edges_[g.into_[v][i++]].source;
        if (state[w] == 1) {
          g.acyclic_ = false;
        } else if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      }
    }
    return g;
  }

  void KGraph::check_cubes() const {
    auto apply = [this](std::array<EdgeId, 3> t, std::array<int, 3> order) {
      for (int i : order) {
        auto [a, b] = swap(t[i], t[i + 1]);
        t[i]        = a;
        t[i + 1]    = b;
      }
      return t;
    };
    for (EdgeId a = 0; a < edges_.size(); ++a) {
      for (EdgeId b : into_[edges_[a].source]) {
        if (edges_[b].color <= edges_[a].color) {
          continue;
        }
        for (EdgeId c : into_[edges_[b].source]) {
          if (edges_[c].color <= edges_[b].color) {
            continue;
          }
          auto x = apply({a, b, c}, {0, 1, 0});
          auto y = apply({a, b, c}, {1, 0, 1});
          if (x != y) {
            throw Error(ErrorKind::CubeInconsistent,
                        "triple (" + edge_name(a) + "," + edge_name(b) + ","
                            + edge_name(c) + ")");
          }
        }
      }
    }
  }

  std::optional<VertexId> KGraph::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeId> KGraph::find_edge(std::string_view name) const {
    auto it = edge_index_.find(name);
    if (it == edge_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  VertexId KGraph::vertex_id(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) {
      throw Error(ErrorKind::UnknownId, "no vertex " + std::string(name));
    }
    return *v;
  }

  std::pair<EdgeId, EdgeId> KGraph::swap(EdgeId a, EdgeId b) const {
    auto const& table
        = edges_[a].color < edges_[b].color ? forward_ : backward_;
    auto it = table.find({a, b});
    if (it == table.end()) {
      throw Error(ErrorKind::Internal, "no square for " + pair_name(*this, a, b));
    }
    return it->second;
  }

  void KGraph::check_degree(Degree const& d) const {
    if (d.rank() != k_) {
      throw Error(ErrorKind::DegreeOutOfRange,
                  "degree " + d.to_string() + " does not have rank "
                      + std::to_string(k_));
    }
  }

  Path KGraph::vertex(VertexId v) const {
    if (v >= vertex_names_.size()) {
      throw Error(ErrorKind::UnknownId, "vertex index out of range");
    }
    return Path{v, v, Degree(k_), {}};
  }

  Path KGraph::edge(EdgeId e) const {
    auto const& d = edges_.at(e);
    return Path{d.range, d.source, Degree::unit(k_, d.color), {e}};
  }

  Path KGraph::make_path(VertexId range, std::vector<EdgeId> const& edges) const {
    Path p = vertex(range);
    for (EdgeId e : edges) {
      if (e >= edges_.size()) {
        throw Error(ErrorKind::UnknownId, "edge index out of range");
      }
      if (edges_[e].range != p.source) {
        throw Error(ErrorKind::NotComposable,
                    edge_name(e) + " does not have range "
                        + vertex_name(p.source));
      }
      p.source = edges_[e].source;
      p.degree[edges_[e].color] += 1;
    }
    p.edges = edges;
    // Bubble lower colors to the left one transposition at a time.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
        if (edges_[p.edges[i]].color > edges_[p.edges[i + 1]].color) {
          std::tie(p.edges[i], p.edges[i + 1]) = swap(p.edges[i], p.edges[i + 1]);
          changed                              = true;
        }
      }
    }
    return p;
  }

  Path KGraph::compose(Path const& lambda, Path const& mu) const {
    if (lambda.source != mu.range) {
      throw Error(ErrorKind::NotComposable,
                  to_string(lambda) + " and " + to_string(mu));
    }
    std::vector<EdgeId> edges = lambda.edges;
    edges.insert(edges.end(), mu.edges.begin(), mu.edges.end());
    return make_path(lambda.range, edges);
  }

  std::pair<Path, Path> KGraph::factor(Path const& lambda, Degree const& m) const {
    check_degree(m);
    if (!leq(m, lambda.degree)) {
      throw Error(ErrorKind::DegreeOutOfRange,
                  m.to_string() + " is not below d(" + to_string(lambda)
                      + ")=" + lambda.degree.to_string());
    }
    std::vector<std::size_t> target;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < k_; ++c) {
        int count = pass == 0 ? m[c] : lambda.degree[c] - m[c];
        target.insert(target.end(), count, c);
      }
    }
    std::vector<EdgeId> seq = lambda.edges;
    for (std::size_t p = 0; p < seq.size(); ++p) {
      std::size_t q = p;
      while (edges_[seq[q]].color != target[p]) {
        ++q;
      }
      for (std::size_t j = q; j > p; --j) {
        std::tie(seq[j - 1], seq[j]) = swap(seq[j - 1], seq[j]);
      }
    }
    std::size_t         split = static_cast<std::size_t>(m.total());
    std::vector<EdgeId> head(seq.begin(), seq.begin() + split);
    std::vector<EdgeId> tail(seq.begin() + split, seq.end());
    Path                h = make_path(lambda.range, head);
    Path                t = make_path(h.source, tail);
    return {h, t};
  }

  Path KGraph::segment(Path const&   lambda,
                       Degree const& m,
                       Degree const& n) const {
    check_degree(m);
    if (!leq(m, n)) {
      throw Error(ErrorKind::DegreeOutOfRange,
                  m.to_string() + " is not below " + n.to_string());
    }
    return factor(factor(lambda, n).first, m).second;
  }

  bool KGraph::has_prefix(Path const& lambda, Path const& mu) const {
    if (lambda.range != mu.range || !leq(mu.degree, lambda.degree)) {
      return false;
    }
    return factor(lambda, mu.degree).first == mu;
  }

  // Depth-first over color-major sequences: all color-0 edges first, then
  // color 1, and so on.  Each normal form is produced exactly once.
  template <typename F>
  void KGraph::enumerate(VertexId      v,
                         Degree const& lo,
                         Degree const& hi,
                         F&&           f) const {
    Path current = vertex(v);
    auto go      = [&](auto& self, std::size_t stage) -> void {
      if (stage == k_) {
        f(current);
        return;
      }
      if (current.degree[stage] >= lo[stage]) {
        self(self, stage + 1);
      }
      if (current.degree[stage] >= hi[stage]) {
        return;
      }
      VertexId w = current.source;
      for (EdgeId e : into_by_color_[w][stage]) {
        current.edges.push_back(e);
        current.degree[stage] += 1;
        current.source = edges_[e].source;
        self(self, stage);
        current.source = w;
        current.degree[stage] -= 1;
        current.edges.pop_back();
      }
    };
    go(go, 0);
  }

  std::vector<Path> KGraph::paths_from(VertexId v, Degree const& n) const {
    check_degree(n);
    std::vector<Path> result;
    enumerate(v, n, n, [&result](Path const& p) { result.push_back(p); });
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Path> KGraph::paths_up_to(VertexId v, Degree const& bound) const {
    check_degree(bound);
    std::vector<Path> result;
    enumerate(v, Degree(k_), bound, [&result](Path const& p) {
      result.push_back(p);
    });
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Path> KGraph::paths_leq(VertexId v, Degree const& n) const {
    std::vector<Path> result;
    for (auto const& p : paths_up_to(v, n)) {
      bool keep = true;
      for (std::size_t i = 0; i < k_ && keep; ++i) {
        if (p.degree[i] < n[i] && !into_by_color_[p.source][i].empty()) {
          keep = false;
        }
      }
      if (keep) {
        result.push_back(p);
      }
    }
    return result;
  }

  std::vector<Path> KGraph::all_paths_from(VertexId v) const {
    if (!acyclic_) {
      throw Error(ErrorKind::NotAcyclic, "vΛ is infinite");
    }
    Degree unbounded(std::vector<int>(k_, std::numeric_limits<int>::max()));
    std::vector<Path> result;
    enumerate(v, Degree(k_), unbounded, [&result](Path const& p) {
      result.push_back(p);
    });
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<std::pair<Path, Path>> KGraph::lambda_min(Path const& lambda,
                                                        Path const& mu) const {
    std::vector<std::pair<Path, Path>> result;
    if (lambda.range != mu.range) {
      return result;
    }
    Degree D = join(lambda.degree, mu.degree);
    if (leq(lambda.degree, mu.degree)) {
      // Only ρ = μ(d(λ), d(μ)) can work.
      auto [head, tail] = factor(mu, lambda.degree);
      if (head == lambda) {
        result.emplace_back(tail, vertex(mu.source));
      }
      return result;
    }
    for (auto const& rho : paths_from(lambda.source, minus(D, lambda.degree))) {
      auto [head, tail] = factor(compose(lambda, rho), mu.degree);
      if (head == mu) {
        result.emplace_back(rho, tail);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Path> KGraph::mce(Path const& lambda, Path const& mu) const {
    std::vector<Path> result;
    for (auto const& [rho, tau] : lambda_min(lambda, mu)) {
      result.push_back(compose(lambda, rho));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Path> KGraph::ext(Path const&              lambda,
                                std::vector<Path> const& E) const {
    std::vector<Path> result;
    for (auto const& mu : E) {
      if (mu.range != lambda.range) {
        throw Error(ErrorKind::RangeMismatch,
                    to_string(mu) + " does not have range "
                        + vertex_name(lambda.range));
      }
      for (auto const& [rho, tau] : lambda_min(lambda, mu)) {
        result.push_back(rho);
      }
    }
    sort_unique(result);
    return result;
  }

  std::vector<Path> KGraph::minimal_members(std::vector<Path> E) const {
    sort_unique(E);
    for (auto const& p : E) {
      if (p.is_vertex()) {
        return {p};
      }
    }
    std::vector<Path> result;
    for (std::size_t i = 0; i < E.size(); ++i) {
      bool extends_other = false;
      for (std::size_t j = 0; j < E.size() && !extends_other; ++j) {
        extends_other = i != j && has_prefix(E[i], E[j]);
      }
      if (!extends_other) {
        result.push_back(E[i]);
      }
    }
    return result;
  }

  // Breadth-first search over the states (s(γ), Ext(γ;E)) reduced to
  // minimal members.  Ext(γa;E) = Ext(a;Ext(γ;E)) so the state determines
  // the subtree below γ, and there are finitely many states because Ext
  // never raises degrees above the join of E.
  ExhaustiveResult KGraph::exhaustive(VertexId                 v,
                                      std::vector<Path> const& E) const {
    for (auto const& mu : E) {
      if (mu.range != v) {
        throw Error(ErrorKind::RangeMismatch,
                    to_string(mu) + " does not have range " + vertex_name(v));
      }
    }
    auto start = minimal_members(E);
    if (start.empty()) {
      return {false, vertex(v)};
    }
    if (start.front().is_vertex()) {
      return {true, std::nullopt};
    }
    std::set<std::pair<VertexId, std::vector<Path>>> seen;
    std::deque<std::pair<Path, std::vector<Path>>>   queue;
    seen.emplace(v, start);
    queue.emplace_back(vertex(v), std::move(start));
    while (!queue.empty()) {
      auto [gamma, S] = std::move(queue.front());
      queue.pop_front();
      for (EdgeId a : into_[gamma.source]) {
        Path edge_a = edge(a);
        auto next   = minimal_members(ext(edge_a, S));
        if (!next.empty() && next.front().is_vertex()) {
          continue;
        }
        Path extended = compose(gamma, edge_a);
        if (next.empty()) {
          return {false, extended};
        }
        if (seen.emplace(extended.source, next).second) {
          queue.emplace_back(std::move(extended), std::move(next));
        }
      }
    }
    return {true, std::nullopt};
  }

  std::vector<std::vector<Path>> KGraph::fe_sets(VertexId      v,
                                                 std::size_t   max_size,
                                                 Degree const& max_degree) const {
    std::vector<Path> candidates;
    for (auto const& p : paths_up_to(v, max_degree)) {
      if (!p.is_vertex()) {
        candidates.push_back(p);
      }
    }
    std::vector<std::vector<Path>> result;
    std::vector<std::size_t>       chosen;
    for (std::size_t size = 1; size <= max_size && size <= candidates.size();
         ++size) {
      chosen.resize(size);
      for (std::size_t i = 0; i < size; ++i) {
        chosen[i] = i;
      }
      while (true) {
        std::vector<Path> E;
        for (auto i : chosen) {
          E.push_back(candidates[i]);
        }
        if (is_exhaustive(v, E)) {
          result.push_back(std::move(E));
        }
        // Next combination in lexicographic order.
        std::size_t i = size;
        while (i > 0 && chosen[i - 1] == candidates.size() - size + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++chosen[i - 1];
        for (std::size_t j = i; j < size; ++j) {
          chosen[j] = chosen[j - 1] + 1;
        }
      }
    }
    return result;
  }

  GraphPredicates KGraph::predicates() const {
    GraphPredicates p;
    p.is_acyclic        = acyclic_;
    p.is_row_finite     = true;
    p.is_locally_convex = true;
    for (VertexId v = 0; v < vertex_names_.size(); ++v) {
      for (std::size_t i = 0; i < k_; ++i) {
        if (into_by_color_[v][i].empty()) {
          p.has_sources = true;
        }
        for (std::size_t j = 0; j < k_; ++j) {
          if (i == j || into_by_color_[v][j].empty()) {
            continue;
          }
          for (EdgeId e : into_by_color_[v][i]) {
            if (into_by_color_[edges_[e].source][j].empty()) {
              p.is_locally_convex = false;
            }
          }
        }
      }
    }
    return p;
  }

  std::string KGraph::to_string(Path const& p) const {
    if (p.is_vertex()) {
      return vertex_name(p.range);
    }
    std::string s;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (i != 0) {
        s += '.';
      }
      s += edge_name(p.edges[i]);
    }
    return s;
  }

  Path KGraph::parse_path(std::string_view text) const {
    if (auto v = find_vertex(text)) {
      return vertex(*v);
    }
    std::vector<EdgeId> edges;
    std::size_t         start = 0;
    while (true) {
      auto dot   = text.find('.', start);
      auto token = text.substr(start, dot == std::string_view::npos
                                          ? std::string_view::npos
                                          : dot - start);
      auto e     = find_edge(token);
      if (!e) {
        throw Error(ErrorKind::UnknownId,
                    "no edge or vertex named '" + std::string(token) + "'");
      }
      edges.push_back(*e);
      if (dot == std::string_view::npos) {
        break;
      }
      start = dot + 1;
    }
    return make_path(edges_[edges.front()].range, edges);
  }

  namespace {
    std::string coords_name(Degree const& p) {
      std::string s;
      for (std::size_t i = 0; i < p.rank(); ++i) {
        if (i != 0) {
          s += '_';
        }
        s += std::to_string(p[i]);
      }
      return s;
    }

    std::vector<Degree> grid(Degree const& m) {
      std::vector<Degree> result;
      Degree              p(m.rank());
      while (true) {
        result.push_back(p);
        std::size_t i = m.rank();
        while (i > 0 && p[i - 1] == m[i - 1]) {
          p[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return result;
        }
        ++p[i - 1];
      }
    }
  }  // namespace

  KGraphSpec omega_spec(std::size_t k, Degree const& m) {
    if (m.rank() != k) {
      throw Error(ErrorKind::DegreeOutOfRange, "m must have rank k");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] < 0) {
        throw Error(ErrorKind::DegreeOutOfRange, "m must be in N^k");
      }
    }
    KGraphSpec spec;
    spec.k          = static_cast<int>(k);
    auto   vertices = grid(m);
    auto   vname    = [](Degree const& p) { return "p" + coords_name(p); };
    auto   ename    = [](std::size_t i, Degree const& p) {
      return "c" + std::to_string(i + 1) + "_" + coords_name(p);
    };
    for (auto const& p : vertices) {
      spec.vertices.push_back(vname(p));
      for (std::size_t i = 0; i < k; ++i) {
        if (p[i] < m[i]) {
          Degree q = p + Degree::unit(k, i);
          spec.edges.push_back(
              EdgeSpec{ename(i, p), static_cast<int>(i + 1), vname(p), vname(q)});
        }
      }
    }
    // The color-i edge at p followed by the color-j edge at p+e_i equals
    // the color-j edge at p followed by the color-i edge at p+e_j.
    for (auto const& p : vertices) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (p[i] < m[i] && p[j] < m[j]) {
            Degree pi = p + Degree::unit(k, i);
            Degree pj = p + Degree::unit(k, j);
            spec.squares.push_back(SquareSpec{{ename(i, p), ename(j, pi)},
                                              {ename(j, p), ename(i, pj)}});
          }
        }
      }
    }
    return spec;
  }

  KGraph omega_graph(std::size_t k, Degree const& m) {
    return KGraph::validate(omega_spec(k, m));
  }

}  // namespace kpx
