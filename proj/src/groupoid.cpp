#include "kpx/groupoid.hpp"

#include <algorithm>

#include "kpx/error.hpp"

namespace kpx {

  Cell Groupoid::make_cell(Path const&              lambda,
                           Path const&              mu,
                           std::vector<Path> const& G) const {
    if (lambda.source != mu.source) {
      throw Error(ErrorKind::RangeMismatch,
                  "cell needs s(" + graph_.to_string(lambda) + ") = s("
                      + graph_.to_string(mu) + ")");
    }
    for (auto const& nu : G) {
      if (nu.range != lambda.source) {
        throw Error(ErrorKind::RangeMismatch,
                    graph_.to_string(nu) + " does not start at s("
                        + graph_.to_string(lambda) + ")");
      }
    }
    return Cell{lambda, mu, graph_.minimal_members(G)};
  }

  bool Groupoid::is_empty(Cell const& c) const {
    auto key = std::pair(c.lambda.source, c.avoid);
    {
      std::lock_guard lock(mutex_);
      if (auto it = empty_cache_.find(key); it != empty_cache_.end()) {
        return it->second;
      }
    }
    bool result = graph_.is_exhaustive(c.lambda.source, c.avoid);
    std::lock_guard lock(mutex_);
    empty_cache_.emplace(std::move(key), result);
    return result;
  }

  std::vector<Groupoid::Piece> Groupoid::pieces(Cell const& a, Cell const& b) const {
    std::vector<Piece> result;
    auto               left  = graph_.lambda_min(a.lambda, b.lambda);
    auto               right = graph_.lambda_min(a.mu, b.mu);
    for (auto const& pair : left) {
      if (!std::binary_search(right.begin(), right.end(), pair)) {
        continue;
      }
      auto const& [gamma, gamma2] = pair;
      auto G                      = graph_.ext(gamma, a.avoid);
      auto G2                     = graph_.ext(gamma2, b.avoid);
      G.insert(G.end(), G2.begin(), G2.end());
      Cell c = make_cell(graph_.compose(a.lambda, gamma), graph_.compose(a.mu, gamma), G);
      if (!is_empty(c)) {
        result.push_back(Piece{gamma, gamma2, std::move(c)});
      }
    }
    return result;
  }

  std::vector<Cell> Groupoid::intersect(Cell const& a, Cell const& b) const {
    std::vector<Cell> result;
    for (auto& p : pieces(a, b)) {
      result.push_back(std::move(p.cell));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::pair<Cell, Cell> Groupoid::split(Cell const& c, Path const& gamma) const {
    if (gamma.range != c.lambda.source) {
      throw Error(ErrorKind::RangeMismatch,
                  graph_.to_string(gamma) + " does not start at s("
                      + graph_.to_string(c.lambda) + ")");
    }
    auto G = c.avoid;
    G.push_back(gamma);
    Cell avoid   = make_cell(c.lambda, c.mu, G);
    Cell through = make_cell(graph_.compose(c.lambda, gamma),
                             graph_.compose(c.mu, gamma),
                             graph_.ext(gamma, c.avoid));
    return {avoid, through};
  }

  // through and piece share λ and μ, and the avoided set of piece covers
  // that of through.  The difference is cut into the parts entering each
  // extra avoided path η_i but none of η_1..η_{i-1}.
  std::vector<Cell> Groupoid::remove_piece(Cell const& through, Cell const& piece) const {
    std::vector<Cell> result;
    std::vector<Path> G = through.avoid;
    for (auto const& eta : piece.avoid) {
      if (std::binary_search(through.avoid.begin(), through.avoid.end(), eta)) {
        continue;
      }
      Cell c = make_cell(graph_.compose(through.lambda, eta),
                         graph_.compose(through.mu, eta),
                         graph_.ext(eta, G));
      if (!is_empty(c)) {
        result.push_back(std::move(c));
      }
      G.push_back(eta);
    }
    return result;
  }

  std::vector<Cell> Groupoid::difference(Cell const& a, Cell const& b) const {
    if (is_empty(a)) {
      return {};
    }
    auto ps = pieces(a, b);
    if (ps.empty()) {
      return {a};
    }
    Piece const&      first = ps.front();
    std::vector<Cell> result;
    Cell              through = a;
    if (!first.gamma.is_vertex()) {
      auto [avoid, thr] = split(a, first.gamma);
      through           = std::move(thr);
      result            = difference(avoid, b);
    }
    auto rest = remove_piece(through, first.cell);
    result.insert(result.end(), rest.begin(), rest.end());
    return result;
  }

  std::vector<Cell> Groupoid::disjointify(std::vector<Cell> const& cells) const {
    std::vector<Cell> result;
    for (auto const& c : cells) {
      std::vector<Cell> parts;
      if (!is_empty(c)) {
        parts.push_back(c);
      }
      for (auto const& d : result) {
        std::vector<Cell> next;
        for (auto const& p : parts) {
          auto diff = difference(p, d);
          next.insert(next.end(), diff.begin(), diff.end());
        }
        parts = std::move(next);
      }
      result.insert(result.end(), parts.begin(), parts.end());
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  SteinbergFunction Groupoid::from_terms(
      Ring const&                                  ring,
      std::vector<std::pair<Scalar, Cell>> const& terms) const {
    std::vector<std::pair<Cell, Scalar>> atoms;
    for (auto const& [r0, c] : terms) {
      Scalar r = ring.embed(r0);
      if (r == 0 || is_empty(c)) {
        continue;
      }
      std::vector<std::pair<Cell, Scalar>> next;
      std::vector<Cell>                    residual{c};
      for (auto const& [A, a] : atoms) {
        auto common = intersect(A, c);
        if (common.empty()) {
          next.emplace_back(A, a);
          continue;
        }
        Scalar sum = ring.add(a, r);
        if (sum != 0) {
          for (auto const& p : common) {
            next.emplace_back(p, sum);
          }
        }
        for (auto const& p : difference(A, c)) {
          next.emplace_back(p, a);
        }
        std::vector<Cell> rest;
        for (auto const& q : residual) {
          auto diff = difference(q, A);
          rest.insert(rest.end(), diff.begin(), diff.end());
        }
        residual = std::move(rest);
      }
      for (auto const& q : residual) {
        next.emplace_back(q, r);
      }
      atoms = std::move(next);
    }
    std::sort(atoms.begin(), atoms.end());
    SteinbergFunction f(ring);
    f.terms = std::move(atoms);
    return f;
  }

  bool Groupoid::equal(SteinbergFunction const& f, SteinbergFunction const& g) const {
    std::vector<std::pair<Scalar, Cell>> terms;
    for (auto const& [c, r] : f.terms) {
      terms.emplace_back(r, c);
    }
    for (auto const& [c, r] : g.terms) {
      terms.emplace_back(f.ring.neg(r), c);
    }
    return is_zero(from_terms(f.ring, terms));
  }

  SteinbergFunction Groupoid::pi_t(SpanForm const& a) const {
    std::vector<std::pair<Scalar, Cell>> terms;
    for (auto const& [key, r] : a.terms()) {
      terms.emplace_back(r, make_cell(key.first, key.second, {}));
    }
    return from_terms(a.ring(), terms);
  }

  SpanForm Groupoid::pi_t_inv(SteinbergFunction const& f) const {
    KPAlgebra kp(graph_, f.ring);
    SpanForm  result(f.ring);
    for (auto const& [c, r] : f.terms) {
      result.add(kp.cell_element(c.lambda, c.mu, c.avoid), r);
    }
    return result;
  }

  SteinbergFunction Groupoid::convolve(SteinbergFunction const& f,
                                       SteinbergFunction const& g) const {
    KPAlgebra kp(graph_, f.ring);
    return pi_t(kp.multiply(pi_t_inv(f), pi_t_inv(g)));
  }

  bool Groupoid::contains(Cell const& c, GroupoidElement const& el) const {
    if (el.m != grade_of(c.lambda.degree, c.mu.degree)) {
      return false;
    }
    if (!boundary_.has_prefix(el.x, c.lambda) || !boundary_.has_prefix(el.y, c.mu)) {
      return false;
    }
    auto z = boundary_.shift(el.x, c.lambda.degree);
    if (!boundary_.equal(z, boundary_.shift(el.y, c.mu.degree))) {
      return false;
    }
    for (auto const& nu : c.avoid) {
      if (boundary_.has_prefix(z, nu)) {
        return false;
      }
    }
    return true;
  }

  Scalar Groupoid::eval(SteinbergFunction const& f, GroupoidElement const& el) const {
    Scalar total = 0;
    for (auto const& [c, r] : f.terms) {
      if (contains(c, el)) {
        total = f.ring.add(total, r);
      }
    }
    return total;
  }

  // On an acyclic graph σ^{d(x)}x = s(x), so x and y in one orbit determine
  // the unique m = d(x) - d(y).
  std::vector<GroupoidElement> Groupoid::elements() const {
    std::vector<GroupoidElement> result;
    for (auto const& orbit : boundary_.orbits()) {
      for (auto const& x : orbit) {
        for (auto const& y : orbit) {
          result.push_back(
              GroupoidElement{x, grade_of(x.head().degree, y.head().degree), y});
        }
      }
    }
    return result;
  }

  Integer Groupoid::dim_over_field(Ring const& ring) const {
    if (!graph_.is_acyclic()) {
      throw Error(ErrorKind::NotAcyclic, "the groupoid is infinite");
    }
    if (!ring.is_field()) {
      throw Error(ErrorKind::NotField, ring.name() + " is not a field");
    }
    Integer n = 0;
    for (auto const& orbit : boundary_.orbits()) {
      n += Integer(orbit.size()) * orbit.size();
    }
    return n;
  }

  std::string Groupoid::to_string(Cell const& c) const {
    std::string s = graph_.to_string(c.lambda) + ":" + graph_.to_string(c.mu);
    if (!c.avoid.empty()) {
      s += "\\";
      for (std::size_t i = 0; i < c.avoid.size(); ++i) {
        s += (i == 0 ? "" : ",") + graph_.to_string(c.avoid[i]);
      }
    }
    return s;
  }

  std::string Groupoid::to_string(SteinbergFunction const& f) const {
    if (f.terms.empty()) {
      return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      s += (i == 0 ? "" : " + ") + Ring::format(f.terms[i].second) + "*1["
           + to_string(f.terms[i].first) + "]";
    }
    return s;
  }

}  // namespace kpx
