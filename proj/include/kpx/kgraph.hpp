#ifndef KPX_KGRAPH_HPP_
#define KPX_KGRAPH_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpx/degree.hpp"

namespace kpx {

  using VertexId = std::uint32_t;
  using EdgeId   = std::uint32_t;

  // Input description of a skeleton.  Colors are 1-based as in the file
  // format.
  struct EdgeSpec {
    std::string id;
    int         color = 0;
    std::string range;
    std::string source;
  };

  // e∘f = f2∘e2 with color(e) < color(f).
  struct SquareSpec {
    std::array<std::string, 2> first;
    std::array<std::string, 2> second;
  };

  struct KGraphSpec {
    int                      k = 0;
    std::vector<std::string> vertices;
    std::vector<EdgeSpec>    edges;
    std::vector<SquareSpec>  squares;
  };

  // A morphism in color-major normal form.  Ordering is by range, then edge
  // sequence, then degree and source, which is lexicographic on ids because
  // indices are assigned in sorted id order.
  struct Path {
    VertexId            range  = 0;
    VertexId            source = 0;
    Degree              degree;
    std::vector<EdgeId> edges;

    bool is_vertex() const noexcept {
      return edges.empty();
    }

    friend bool operator==(Path const& a, Path const& b) {
      return a.range == b.range && a.edges == b.edges && a.degree == b.degree;
    }

    friend std::weak_ordering operator<=>(Path const& a, Path const& b) {
      if (auto c = a.range <=> b.range; c != 0) {
        return c;
      }
      if (auto c = a.edges <=> b.edges; c != 0) {
        return c;
      }
      if (auto c = a.degree <=> b.degree; c != 0) {
        return c;
      }
      return a.source <=> b.source;
    }
  };

  struct ExhaustiveResult {
    bool exhaustive = false;
    // A path γ from v with Ext(γ;E) = ∅, present when not exhaustive.
    std::optional<Path> witness;
  };

  struct GraphPredicates {
    bool has_sources       = false;
    bool is_locally_convex = false;
    bool is_row_finite     = true;
    bool is_acyclic        = false;
  };

  class KGraph {
   public:
    // Throws Error with MissingEndpoint, BadSquare, BadEdge, DuplicateId,
    // NotBijective or CubeInconsistent.
    static KGraph validate(KGraphSpec const& spec);

    std::size_t rank() const noexcept {
      return k_;
    }

    std::size_t number_of_vertices() const noexcept {
      return vertex_names_.size();
    }

    std::size_t number_of_edges() const noexcept {
      return edges_.size();
    }

    std::size_t number_of_squares() const noexcept {
      return number_of_squares_;
    }

    std::string const& vertex_name(VertexId v) const {
      return vertex_names_.at(v);
    }

    std::string const& edge_name(EdgeId e) const {
      return edges_.at(e).name;
    }

    // 0-based.
    std::size_t color(EdgeId e) const {
      return edges_.at(e).color;
    }

    VertexId range(EdgeId e) const {
      return edges_.at(e).range;
    }

    VertexId source(EdgeId e) const {
      return edges_.at(e).source;
    }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;
    // Throws UnknownId.
    VertexId vertex_id(std::string_view name) const;

    // Edges with range v (of the given 0-based color), sorted.
    std::vector<EdgeId> const& edges_into(VertexId v, std::size_t color) const {
      return into_by_color_.at(v).at(color);
    }

    std::vector<EdgeId> const& edges_into(VertexId v) const {
      return into_.at(v);
    }

    KGraphSpec const& spec() const noexcept {
      return spec_;
    }

    bool is_acyclic() const noexcept {
      return acyclic_;
    }

    Degree zero_degree() const {
      return Degree(k_);
    }

    // Reorders a composable pair of differently colored edges through its
    // square.
    std::pair<EdgeId, EdgeId> swap(EdgeId a, EdgeId b) const;

    Path vertex(VertexId v) const;
    Path edge(EdgeId e) const;
    // Normalizes a composable edge sequence starting at range; throws
    // NotComposable.
    Path make_path(VertexId range, std::vector<EdgeId> const& edges) const;

    Path compose(Path const& lambda, Path const& mu) const;
    // (λ(0,m), λ(m,d(λ))); throws DegreeOutOfRange.
    std::pair<Path, Path> factor(Path const& lambda, Degree const& m) const;
    Path segment(Path const& lambda, Degree const& m, Degree const& n) const;
    // λ(0,d(μ)) = μ.
    bool has_prefix(Path const& lambda, Path const& mu) const;

    std::vector<Path> paths_from(VertexId v, Degree const& n) const;
    std::vector<Path> paths_leq(VertexId v, Degree const& n) const;
    // All paths from v of degree ≤ bound.
    std::vector<Path> paths_up_to(VertexId v, Degree const& bound) const;
    // The finite set vΛ; throws NotAcyclic.
    std::vector<Path> all_paths_from(VertexId v) const;

    std::vector<std::pair<Path, Path>> lambda_min(Path const& lambda,
                                                  Path const& mu) const;
    std::vector<Path> mce(Path const& lambda, Path const& mu) const;
    std::vector<Path> ext(Path const& lambda, std::vector<Path> const& E) const;

    ExhaustiveResult  exhaustive(VertexId v, std::vector<Path> const& E) const;
    bool is_exhaustive(VertexId v, std::vector<Path> const& E) const {
      return exhaustive(v, E).exhaustive;
    }

    std::vector<std::vector<Path>> fe_sets(VertexId      v,
                                           std::size_t   max_size,
                                           Degree const& max_degree) const;

    GraphPredicates predicates() const;

    // Sorted, deduplicated, with every member that extends another member
    // removed; a set containing the vertex collapses to it.
    std::vector<Path> minimal_members(std::vector<Path> E) const;

    std::string to_string(Path const& p) const;
    // "e1.f1" or a vertex id; throws UnknownId or NotComposable.
    Path parse_path(std::string_view text) const;

   private:
    struct EdgeData {
      std::string name;
      std::size_t color;
      VertexId    range;
      VertexId    source;
    };

    KGraph() = default;

    void check_cubes() const;
    void check_degree(Degree const& d) const;

    template <typename F>
    void enumerate(VertexId v, Degree const& lo, Degree const& hi, F&& f) const;

    std::size_t                                 k_ = 0;
    KGraphSpec                                  spec_;
    std::vector<std::string>                    vertex_names_;
    std::vector<EdgeData>                       edges_;
    std::map<std::string, VertexId, std::less<>> vertex_index_;
    std::map<std::string, EdgeId, std::less<>>   edge_index_;
    std::vector<std::vector<std::vector<EdgeId>>> into_by_color_;
    std::vector<std::vector<EdgeId>>              into_;
    // (e,f) with color(e) < color(f) maps to (f',e'), and backwards.
    std::map<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> forward_;
    std::map<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> backward_;
    std::size_t number_of_squares_ = 0;
    bool        acyclic_           = false;
  };

  // The grid graph Ω_{k,m}.  Vertices are named "p" followed by the
  // coordinates joined by '_' and the color-i edge at p is "c<i>_<coords>".
  KGraphSpec omega_spec(std::size_t k, Degree const& m);
  KGraph     omega_graph(std::size_t k, Degree const& m);

}  // namespace kpx

#endif  // KPX_KGRAPH_HPP_
