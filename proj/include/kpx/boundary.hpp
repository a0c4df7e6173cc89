#ifndef KPX_BOUNDARY_HPP_
#define KPX_BOUNDARY_HPP_

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "kpx/degree.hpp"
#include "kpx/kgraph.hpp"
#include "kpx/kp_algebra.hpp"
#include "kpx/ring.hpp"

namespace kpx {

  // Either a finite boundary path or an eventually periodic one h c c c ...
  // Lassos are built by Boundary::lasso, which stores a canonical
  // representative.
  class BoundaryPath {
   public:
    static BoundaryPath finite(Path p) {
      BoundaryPath x;
      x.head_ = std::move(p);
      return x;
    }

    bool is_finite() const noexcept {
      return !cycle_.has_value();
    }

    // The path itself for finite boundary paths.
    Path const& head() const noexcept {
      return head_;
    }

    Path const& cycle() const {
      return *cycle_;
    }

    VertexId range() const noexcept {
      return head_.range;
    }

    friend bool operator==(BoundaryPath const&, BoundaryPath const&) = default;
    friend auto operator<=>(BoundaryPath const& a, BoundaryPath const& b) {
      if (a.is_finite() != b.is_finite()) {
        return a.is_finite() ? std::weak_ordering::less : std::weak_ordering::greater;
      }
      if (auto c = a.head_ <=> b.head_; c != 0) {
        return c;
      }
      if (a.is_finite()) {
        return std::weak_ordering::equivalent;
      }
      return *a.cycle_ <=> *b.cycle_;
    }

   private:
    friend class Boundary;

    Path                head_;
    std::optional<Path> cycle_;
  };

  // Finite combination of boundary paths, the module F_R(∂Λ).
  struct FreeVector {
    explicit FreeVector(Ring r) : ring(std::move(r)) {}

    Ring                                       ring;
    std::vector<std::pair<BoundaryPath, Scalar>> terms;

    bool empty() const noexcept {
      return terms.empty();
    }
  };

  class Boundary {
   public:
    explicit Boundary(KGraph const& g) : graph_(g) {}

    KGraph const& graph() const noexcept {
      return graph_;
    }

    // Throws NotAcyclic.
    bool is_boundary_finite(Path const& lambda) const;
    // The whole of ∂Λ for an acyclic graph, sorted; throws NotAcyclic.
    std::vector<BoundaryPath> enumerate() const;
    std::vector<BoundaryPath> enumerate_from(VertexId v) const;
    // Classes of ∂Λ under shift equivalence; throws NotAcyclic.
    std::vector<std::vector<BoundaryPath>> orbits() const;

    // head·cycle·cycle·...  Throws NotComposable unless s(head) = r(cycle) =
    // s(cycle) and d(cycle) != 0.  The caller is responsible for the result
    // being a boundary path.
    BoundaryPath lasso(Path const& head, Path const& cycle) const;

    ExtendedDegree degree(BoundaryPath const& x) const;
    // x(m, n); throws DegreeOutOfRange.
    Path segment(BoundaryPath const& x, Degree const& m, Degree const& n) const;
    bool has_prefix(BoundaryPath const& x, Path const& mu) const;
    BoundaryPath shift(BoundaryPath const& x, Degree const& n) const;
    BoundaryPath prepend(Path const& lambda, BoundaryPath const& x) const;
    bool         equal(BoundaryPath const& x, BoundaryPath const& y) const;

    std::optional<BoundaryPath> act(Generator const& g, BoundaryPath const& x) const;

    // π_S(a) applied to vec.
    FreeVector boundary_rep(SpanForm const& a, FreeVector const& vec) const;
    // Sum of every boundary path; throws NotAcyclic.
    FreeVector basis_sum(Ring const& ring) const;
    void       accumulate(FreeVector& vec, BoundaryPath const& x, Scalar const& r) const;

    std::string to_string(BoundaryPath const& x) const;

   private:
    BoundaryPath raw_lasso(Path const& head, Path const& cycle) const;
    BoundaryPath canonical(BoundaryPath const& x) const;
    // head·cycle^J with degree at least m on the infinite coordinates.
    Path unroll(BoundaryPath const& x, Degree const& m) const;
    void require_acyclic() const;

    KGraph const& graph_;
    mutable std::mutex mutex_;
    mutable std::map<VertexId, std::vector<Path>> paths_cache_;
    mutable std::map<Path, bool>                  boundary_cache_;
  };

}  // namespace kpx

#endif  // KPX_BOUNDARY_HPP_
