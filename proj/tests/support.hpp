// Random elements and small linear algebra shared by the unit tests and the
// acceptance runner.
#ifndef KPX_TESTS_SUPPORT_HPP_
#define KPX_TESTS_SUPPORT_HPP_

#include <random>
#include <utility>
#include <vector>

#include "kpx/boundary.hpp"
#include "kpx/groupoid.hpp"
#include "kpx/kgraph.hpp"
#include "kpx/kp_algebra.hpp"

namespace support {

  using namespace kpx;

  inline std::vector<Path> all_paths(KGraph const& g, Degree const& bound) {
    std::vector<Path> r;
    for (VertexId v = 0; v < g.number_of_vertices(); ++v) {
      auto ps = g.paths_up_to(v, bound);
      r.insert(r.end(), ps.begin(), ps.end());
    }
    return r;
  }

  inline std::vector<std::pair<Path, Path>> eligible_pairs(std::vector<Path> const& ps) {
    std::vector<std::pair<Path, Path>> r;
    for (auto const& a : ps) {
      for (auto const& b : ps) {
        if (a.source == b.source) {
          r.emplace_back(a, b);
        }
      }
    }
    return r;
  }

  class Sampler {
   public:
    Sampler(KGraph const& g, Degree const& bound, unsigned seed)
        : g_(g), paths_(all_paths(g, bound)), pairs_(eligible_pairs(paths_)), rng_(seed) {}

    std::mt19937& rng() {
      return rng_;
    }

    std::vector<Path> const& paths() const {
      return paths_;
    }

    std::vector<std::pair<Path, Path>> const& pairs() const {
      return pairs_;
    }

    int uniform(int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Path const& path() {
      return paths_[uniform(0, static_cast<int>(paths_.size()) - 1)];
    }

    std::pair<Path, Path> const& pair() {
      return pairs_[uniform(0, static_cast<int>(pairs_.size()) - 1)];
    }

    SpanForm element(Ring const& ring, int max_terms = 4, int max_coef = 3) {
      SpanForm a(ring);
      int      n = uniform(0, max_terms);
      for (int i = 0; i < n; ++i) {
        auto const& [l, m] = pair();
        int c              = uniform(-max_coef, max_coef);
        a.add(l, m, Scalar(c));
      }
      return a;
    }

    // Elements that often vanish: combinations of (KP4) defects and
    // differences of equal products.
    SpanForm tricky_element(KPAlgebra const& kp) {
      SpanForm a = kp.zero();
      int      choice = uniform(0, 2);
      if (choice == 0) {
        VertexId v = static_cast<VertexId>(uniform(0, static_cast<int>(g_.number_of_vertices()) - 1));
        std::vector<Path> E;
        for (auto const& p : g_.paths_up_to(v, Degree(std::vector<int>(g_.rank(), 1)))) {
          if (!p.is_vertex() && uniform(0, 1) == 1) {
            E.push_back(p);
          }
        }
        auto const& [l, m] = pair();
        SpanForm    d      = kp.kp4_defect(v, E);
        if (l.source == v) {
          a = kp.multiply(kp.multiply(kp.term(l, g_.vertex(v)), d), kp.term(g_.vertex(v), m));
        } else {
          a = d;
        }
      } else if (choice == 1) {
        // s_λ s_{μ*} - Σ_{e ∈ s(λ)Λ^{e_i}} s_{λe} s_{(μe)*}, zero exactly when
        // s(λ)Λ^{e_i} is exhaustive.
        auto const& [l, m] = pair();
        std::size_t i      = static_cast<std::size_t>(uniform(0, static_cast<int>(g_.rank()) - 1));
        a                  = kp.term(l, m);
        for (auto e : g_.edges_into(l.source, i)) {
          a.add(g_.compose(l, g_.edge(e)), g_.compose(m, g_.edge(e)), Scalar(-1));
        }
      } else {
        a = element(kp.ring());
      }
      return a;
    }

   private:
    KGraph const&                      g_;
    std::vector<Path>                  paths_;
    std::vector<std::pair<Path, Path>> pairs_;
    std::mt19937                       rng_;
  };

  // π_S(a) = 0: every basis vector of F(∂Λ) is sent to zero.  Applying a to
  // the sum of the basis instead would let images cancel.
  inline bool kills(Boundary const& b, SpanForm const& a) {
    for (auto const& x : b.enumerate()) {
      FreeVector vec(a.ring());
      b.accumulate(vec, x, Scalar(1));
      if (!b.boundary_rep(a, vec).empty()) {
        return false;
      }
    }
    return true;
  }

  // A random cell (λ, μ, G) with G drawn from short paths at s(λ).
  inline Cell random_cell(Groupoid const& gr, Sampler& sm) {
    auto const& g      = gr.graph();
    auto const& [l, m] = sm.pair();
    std::vector<Path> G;
    for (auto const& p : g.paths_up_to(l.source, Degree(std::vector<int>(g.rank(), 1)))) {
      if (!p.is_vertex() && sm.uniform(0, 3) == 0) {
        G.push_back(p);
      }
    }
    return gr.make_cell(l, m, G);
  }

  // Rank over Q of a list of rational vectors.
  inline std::size_t rank(std::vector<std::vector<Scalar>> rows) {
    std::size_t r = 0;
    if (rows.empty()) {
      return 0;
    }
    std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t pivot = r;
      while (pivot < rows.size() && rows[pivot][c] == 0) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[r], rows[pivot]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != r && rows[i][c] != 0) {
          Scalar f = rows[i][c] / rows[r][c];
          for (std::size_t j = c; j < cols; ++j) {
            rows[i][j] -= f * rows[r][j];
          }
        }
      }
      ++r;
    }
    return r;
  }

  // Direct convolution on a finite groupoid from pointwise values.
  inline std::vector<Scalar> convolve_pointwise(std::vector<GroupoidElement> const& els,
                                                std::vector<Scalar> const&          f,
                                                std::vector<Scalar> const&          g) {
    std::vector<Scalar> h(els.size(), Scalar(0));
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = 0; j < els.size(); ++j) {
        if (!(els[i].y == els[j].x)) {
          continue;
        }
        GradeVector m = els[i].m;
        for (std::size_t t = 0; t < m.size(); ++t) {
          m[t] += els[j].m[t];
        }
        GroupoidElement prod{els[i].x, m, els[j].y};
        for (std::size_t k = 0; k < els.size(); ++k) {
          if (els[k] == prod) {
            h[k] += f[i] * g[j];
          }
        }
      }
    }
    return h;
  }

  inline std::vector<Scalar> values(Groupoid const&                     gr,
                                    SteinbergFunction const&            f,
                                    std::vector<GroupoidElement> const& els) {
    std::vector<Scalar> r;
    for (auto const& el : els) {
      r.push_back(gr.eval(f, el));
    }
    return r;
  }

}  // namespace support

#endif  // KPX_TESTS_SUPPORT_HPP_
