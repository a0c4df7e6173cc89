#include "kpx/kp_algebra.hpp"

#include <algorithm>
#include <set>

#include "kpx/error.hpp"
#include "kpx/groupoid.hpp"

namespace kpx {

  void SpanForm::add(Path const& lambda, Path const& mu, Scalar const& r) {
    if (lambda.source != mu.source) {
      throw Error(ErrorKind::NotComposable,
                  "s_λ s_μ* needs s(λ) = s(μ)");
    }
    Scalar x = ring_.embed(r);
    if (x == 0) {
      return;
    }
    auto [it, fresh] = terms_.emplace(Key{lambda, mu}, x);
    if (!fresh) {
      it->second = ring_.add(it->second, x);
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  void SpanForm::add(SpanForm const& other, Scalar const& scale) {
    if (!(other.ring_ == ring_)) {
      throw Error(ErrorKind::BadRing, "mixing coefficient rings");
    }
    for (auto const& [key, r] : other.terms_) {
      add(key.first, key.second, ring_.mul(r, ring_.embed(scale)));
    }
  }

  SpanForm SpanForm::scaled(Scalar const& r) const {
    SpanForm result(ring_);
    result.add(*this, r);
    return result;
  }

  bool PiSet::contains(Path const& p) const {
    return std::binary_search(paths.begin(), paths.end(), p);
  }

  SpanForm KPAlgebra::term(Path const& lambda, Path const& mu, Scalar const& r) const {
    SpanForm a(ring_);
    a.add(lambda, mu, r);
    return a;
  }

  SpanForm KPAlgebra::s(Path const& lambda) const {
    return term(lambda, graph_.vertex(lambda.source));
  }

  SpanForm KPAlgebra::ghost(Path const& mu) const {
    return term(graph_.vertex(mu.source), mu);
  }

  namespace {
    struct PendingWord {
      Scalar coef;
      Word   word;
    };
  }  // namespace

  SpanForm KPAlgebra::reduce(std::vector<std::pair<Scalar, Word>> const& terms) const {
    SpanForm                 result(ring_);
    std::vector<PendingWord> work;
    for (auto const& [r, w] : terms) {
      for (auto const& g : w) {
        bool bad = g.path.range >= graph_.number_of_vertices()
                   || g.path.source >= graph_.number_of_vertices()
                   || g.path.degree.rank() != graph_.rank();
        for (auto e : g.path.edges) {
          bad = bad || e >= graph_.number_of_edges();
        }
        if (!bad) {
          try {
            bad = graph_.make_path(g.path.range, g.path.edges) != g.path;
          } catch (Error const&) {
            bad = true;
          }
        }
        if (bad) {
          throw Error(ErrorKind::UnknownSymbol, "symbol is not a path of the graph");
        }
      }
      if (w.empty()) {
        // The empty word is the unit Σ_v s_v.
        for (VertexId v = 0; v < graph_.number_of_vertices(); ++v) {
          work.push_back({ring_.embed(r), {Generator::path_symbol(graph_.vertex(v))}});
        }
      } else {
        work.push_back({ring_.embed(r), w});
      }
    }
    while (!work.empty()) {
      PendingWord cur = std::move(work.back());
      work.pop_back();
      Word& w = cur.word;
      for (auto& g : w) {
        if (g.is_ghost() && g.path.is_vertex()) {
          g.kind = Generator::Kind::Path;
        }
      }
      bool rewritten = false;
      bool vanished  = false;
      for (std::size_t i = 0; i + 1 < w.size() && !rewritten; ++i) {
        auto const& a = w[i];
        auto const& b = w[i + 1];
        if (!a.is_ghost() && !b.is_ghost()) {
          // (KP1), (KP2): s_λ s_μ = s_{λμ} or 0.
          if (a.path.source != b.path.range) {
            vanished = true;
          } else {
            w[i] = Generator::path_symbol(graph_.compose(a.path, b.path));
            w.erase(w.begin() + i + 1);
          }
          rewritten = true;
        } else if (a.is_ghost() && b.is_ghost()) {
          // s_{μ*} s_{λ*} = s_{(λμ)*} or 0.
          if (b.path.source != a.path.range) {
            vanished = true;
          } else {
            w[i] = Generator::ghost_symbol(graph_.compose(b.path, a.path));
            w.erase(w.begin() + i + 1);
          }
          rewritten = true;
        } else if (a.is_ghost() && !b.is_ghost()) {
          // (KP3): s_{λ*} s_μ = Σ_{(ρ,τ)∈Λ^min(λ,μ)} s_ρ s_{τ*}.
          Word prefix(w.begin(), w.begin() + i);
          Word suffix(w.begin() + i + 2, w.end());
          for (auto const& [rho, tau] : graph_.lambda_min(a.path, b.path)) {
            Word next = prefix;
            next.push_back(Generator::path_symbol(rho));
            next.push_back(Generator::ghost_symbol(tau));
            next.insert(next.end(), suffix.begin(), suffix.end());
            work.push_back({cur.coef, std::move(next)});
          }
          vanished  = true;
          rewritten = true;
        }
      }
      if (vanished) {
        continue;
      }
      if (rewritten) {
        work.push_back(std::move(cur));
        continue;
      }
      // Irreducible: s_λ, s_{μ*} or s_λ s_{μ*}.
      if (w.size() == 1) {
        auto const& g = w[0];
        Path        v = graph_.vertex(g.path.source);
        if (g.is_ghost()) {
          result.add(v, g.path, cur.coef);
        } else {
          result.add(g.path, v, cur.coef);
        }
      } else {
        if (w[0].path.source == w[1].path.source) {
          result.add(w[0].path, w[1].path, cur.coef);
        }
      }
    }
    return result;
  }

  SpanForm KPAlgebra::reduce(Word const& word) const {
    return reduce({{Scalar(1), word}});
  }

  SpanForm KPAlgebra::multiply(SpanForm const& a, SpanForm const& b) const {
    SpanForm result(ring_);
    for (auto const& [k1, r1] : a.terms()) {
      for (auto const& [k2, r2] : b.terms()) {
        auto const& [lambda, mu] = k1;
        auto const& [rho, tau]   = k2;
        Scalar r                 = ring_.mul(r1, r2);
        for (auto const& [mu2, rho2] : graph_.lambda_min(mu, rho)) {
          result.add(graph_.compose(lambda, mu2), graph_.compose(tau, rho2), r);
        }
      }
    }
    return result;
  }

  std::map<GradeVector, SpanForm> KPAlgebra::grade(SpanForm const& a) const {
    std::map<GradeVector, SpanForm> parts;
    for (auto const& [key, r] : a.terms()) {
      auto g = grade_of(key.first.degree, key.second.degree);
      parts.try_emplace(g, ring_).first->second.add(key.first, key.second, r);
    }
    return parts;
  }

  PiSet KPAlgebra::pi_closure(std::vector<Path> const& E) const {
    std::set<Path> F(E.begin(), E.end());
    bool           grew = true;
    while (grew) {
      grew = false;
      std::vector<Path>                 current(F.begin(), F.end());
      std::vector<std::pair<Path, Path>> pairs;
      for (auto const& x : current) {
        for (auto const& y : current) {
          if (x.degree == y.degree && x.source == y.source) {
            pairs.emplace_back(x, y);
          }
        }
      }
      for (auto const& [lambda, mu] : pairs) {
        for (auto const& [rho, tau] : pairs) {
          for (auto const& [alpha, beta] : graph_.lambda_min(mu, rho)) {
            grew |= F.insert(graph_.compose(lambda, alpha)).second;
            grew |= F.insert(graph_.compose(tau, beta)).second;
          }
        }
      }
    }
    PiSet pi;
    pi.generators = E;
    std::sort(pi.generators.begin(), pi.generators.end());
    pi.paths.assign(F.begin(), F.end());
    return pi;
  }

  std::vector<Path> KPAlgebra::t_set(Path const& lambda, PiSet const& pi) const {
    if (!pi.contains(lambda)) {
      throw Error(ErrorKind::NotInPi, graph_.to_string(lambda) + " is not in the set");
    }
    std::vector<Path> result;
    for (auto const& p : pi.paths) {
      if (p != lambda && graph_.has_prefix(p, lambda)) {
        result.push_back(graph_.factor(p, lambda.degree).second);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  SpanForm KPAlgebra::cell_element(Path const&              lambda,
                                   Path const&              mu,
                                   std::vector<Path> const& G) const {
    if (lambda.source != mu.source) {
      throw Error(ErrorKind::RangeMismatch, "s(λ) != s(μ)");
    }
    Path     v = graph_.vertex(lambda.source);
    SpanForm x = term(lambda, v);
    for (auto const& nu : G) {
      if (nu.range != lambda.source) {
        throw Error(ErrorKind::RangeMismatch,
                    graph_.to_string(nu) + " does not start at s(λ)");
      }
      SpanForm factor = term(v, v);
      factor.add(nu, nu, Scalar(-1));
      x = multiply(x, factor);
    }
    return multiply(x, term(v, mu));
  }

  SpanForm KPAlgebra::theta(Path const& lambda, Path const& mu, PiSet const& pi) const {
    if (!pi.contains(lambda) || !pi.contains(mu) || lambda.degree != mu.degree
        || lambda.source != mu.source) {
      throw Error(ErrorKind::PairNotEligible,
                  "(" + graph_.to_string(lambda) + "," + graph_.to_string(mu) + ")");
    }
    return cell_element(lambda, mu, t_set(lambda, pi));
  }

  std::map<SpanForm::Key, Scalar> KPAlgebra::expand_core_in_theta(
      SpanForm const& a,
      PiSet const&    pi) const {
    std::map<SpanForm::Key, Scalar> coords;
    for (auto const& [key, r] : a.terms()) {
      auto const& [lambda, mu] = key;
      if (lambda.degree != mu.degree) {
        throw Error(ErrorKind::NotCore, "term of nonzero degree");
      }
      if (!pi.contains(lambda) || !pi.contains(mu)) {
        throw Error(ErrorKind::IndexEscapesPi,
                    "(" + graph_.to_string(lambda) + "," + graph_.to_string(mu) + ")");
      }
      std::vector<Path> nus = t_set(lambda, pi);
      nus.push_back(graph_.vertex(lambda.source));
      for (auto const& nu : nus) {
        Path left  = graph_.compose(lambda, nu);
        Path right = graph_.compose(mu, nu);
        if (!pi.contains(right)) {
          throw Error(ErrorKind::IndexEscapesPi, graph_.to_string(right));
        }
        auto [it, fresh] = coords.emplace(SpanForm::Key{left, right}, r);
        if (!fresh) {
          it->second = ring_.add(it->second, r);
        }
      }
    }
    std::erase_if(coords, [](auto const& kv) { return kv.second == 0; });
    return coords;
  }

  bool KPAlgebra::core_is_zero(SpanForm const& a) const {
    std::vector<Path> index;
    for (auto const& [key, r] : a.terms()) {
      if (key.first.degree != key.second.degree) {
        throw Error(ErrorKind::NotCore, "term of nonzero degree");
      }
      index.push_back(key.first);
      index.push_back(key.second);
    }
    PiSet pi = pi_closure(index);
    for (auto const& [key, r] : expand_core_in_theta(a, pi)) {
      if (!graph_.is_exhaustive(key.first.source, t_set(key.first, pi))) {
        return false;
      }
    }
    return true;
  }

  bool KPAlgebra::is_zero(SpanForm const& a, bool cross_check) const {
    Groupoid groupoid(graph_);
    bool     zero = true;
    for (auto const& [g, part] : grade(a)) {
      bool part_zero = groupoid.is_zero(groupoid.pi_t(part));
      if (cross_check
          && std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })
          && core_is_zero(part) != part_zero) {
        throw Error(ErrorKind::Internal, "zero tests disagree on " + to_string(part));
      }
      zero = zero && part_zero;
      if (!zero && !cross_check) {
        return false;
      }
    }
    return zero;
  }

  SpanForm KPAlgebra::kp4_defect(VertexId v, std::vector<Path> const& E) const {
    Path     vp = graph_.vertex(v);
    SpanForm x  = term(vp, vp);
    for (auto const& lambda : E) {
      if (lambda.range != v) {
        throw Error(ErrorKind::RangeMismatch,
                    graph_.to_string(lambda) + " does not have range "
                        + graph_.vertex_name(v));
      }
      SpanForm factor = term(vp, vp);
      factor.add(lambda, lambda, Scalar(-1));
      x = multiply(x, factor);
    }
    return x;
  }

  std::string KPAlgebra::to_string(SpanForm const& a) const {
    if (a.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [key, r] : a.terms()) {
      auto const& [lambda, mu] = key;
      Scalar      c            = r;
      bool        negative     = c < 0;
      if (negative) {
        c = -c;
      }
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (c != 1) {
        out += Ring::format(c) + "*";
      }
      if (mu.is_vertex()) {
        out += "s(" + graph_.to_string(lambda) + ")";
      } else if (lambda.is_vertex()) {
        out += "g(" + graph_.to_string(mu) + ")";
      } else {
        out += "s(" + graph_.to_string(lambda) + ")*g(" + graph_.to_string(mu) + ")";
      }
    }
    return out;
  }

}  // namespace kpx
