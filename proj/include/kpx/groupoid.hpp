#ifndef KPX_GROUPOID_HPP_
#define KPX_GROUPOID_HPP_

#include <compare>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "kpx/boundary.hpp"
#include "kpx/kgraph.hpp"
#include "kpx/kp_algebra.hpp"
#include "kpx/ring.hpp"

namespace kpx {

  // Z(λ ∗_s μ \ G): the elements (λz, d(λ)-d(μ), μz) with z ∈ s(λ)∂Λ not
  // in ν∂Λ for any ν ∈ G.  G is kept as its minimal members.
  struct Cell {
    Path              lambda;
    Path              mu;
    std::vector<Path> avoid;

    friend bool operator==(Cell const&, Cell const&) = default;
    friend auto operator<=>(Cell const& a, Cell const& b) {
      if (auto c = a.lambda <=> b.lambda; c != 0) {
        return c;
      }
      if (auto c = a.mu <=> b.mu; c != 0) {
        return c;
      }
      return a.avoid <=> b.avoid;
    }
  };

  struct GroupoidElement {
    BoundaryPath x;
    GradeVector  m;
    BoundaryPath y;

    friend bool operator==(GroupoidElement const&, GroupoidElement const&) = default;
  };

  // Σ r_i 1_{C_i} with disjoint nonempty cells and nonzero coefficients.
  struct SteinbergFunction {
    explicit SteinbergFunction(Ring r) : ring(std::move(r)) {}

    Ring                               ring;
    std::vector<std::pair<Cell, Scalar>> terms;
  };

  class Groupoid {
   public:
    explicit Groupoid(KGraph const& g) : graph_(g), boundary_(g) {}

    KGraph const& graph() const noexcept {
      return graph_;
    }

    Boundary const& boundary() const noexcept {
      return boundary_;
    }

    // Throws RangeMismatch unless s(λ) = s(μ) and G ⊆ s(λ)Λ.
    Cell make_cell(Path const& lambda, Path const& mu, std::vector<Path> const& G) const;
    Cell unit_cell(Path const& lambda, std::vector<Path> const& G) const {
      return make_cell(lambda, lambda, G);
    }

    bool is_empty(Cell const& c) const;

    std::vector<Cell>          intersect(Cell const& a, Cell const& b) const;
    // (Z(λ∗μ\(G∪{γ})), Z(λγ∗μγ\Ext(γ;G))); throws RangeMismatch.
    std::pair<Cell, Cell>      split(Cell const& c, Path const& gamma) const;
    std::vector<Cell>          difference(Cell const& a, Cell const& b) const;
    std::vector<Cell>          disjointify(std::vector<Cell> const& cells) const;

    SteinbergFunction from_terms(Ring const&                                  ring,
                                 std::vector<std::pair<Scalar, Cell>> const& terms) const;
    bool              is_zero(SteinbergFunction const& f) const {
      return f.terms.empty();
    }
    bool equal(SteinbergFunction const& f, SteinbergFunction const& g) const;

    SteinbergFunction pi_t(SpanForm const& a) const;
    SpanForm          pi_t_inv(SteinbergFunction const& f) const;
    SteinbergFunction convolve(SteinbergFunction const& f, SteinbergFunction const& g) const;

    bool   contains(Cell const& c, GroupoidElement const& el) const;
    Scalar eval(SteinbergFunction const& f, GroupoidElement const& el) const;

    // Every element of G_Λ for an acyclic graph; throws NotAcyclic.
    std::vector<GroupoidElement> elements() const;
    // Throws NotAcyclic or NotField.
    Integer dim_over_field(Ring const& ring) const;

    std::string to_string(Cell const& c) const;
    std::string to_string(SteinbergFunction const& f) const;

   private:
    struct Piece {
      Path gamma;
      Path gamma2;
      Cell cell;
    };

    std::vector<Piece> pieces(Cell const& a, Cell const& b) const;
    std::vector<Cell>  remove_piece(Cell const& through, Cell const& piece) const;

    KGraph const& graph_;
    Boundary      boundary_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<VertexId, std::vector<Path>>, bool> empty_cache_;
  };

}  // namespace kpx

#endif  // KPX_GROUPOID_HPP_
