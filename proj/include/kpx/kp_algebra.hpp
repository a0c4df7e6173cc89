#ifndef KPX_KP_ALGEBRA_HPP_
#define KPX_KP_ALGEBRA_HPP_

#include <map>
#include <utility>
#include <vector>

#include "kpx/degree.hpp"
#include "kpx/kgraph.hpp"
#include "kpx/ring.hpp"

namespace kpx {

  // s_λ (a path symbol) or s_{λ*} (a ghost symbol).
  struct Generator {
    enum class Kind { Path, Ghost };

    Kind kind = Kind::Path;
    Path path;

    static Generator path_symbol(Path p) {
      return Generator{Kind::Path, std::move(p)};
    }

    static Generator ghost_symbol(Path p) {
      return Generator{Kind::Ghost, std::move(p)};
    }

    bool is_ghost() const noexcept {
      return kind == Kind::Ghost;
    }
  };

  using Word = std::vector<Generator>;

  // A finite combination Σ r·s_λ s_{μ*} with s(λ) = s(μ) and r != 0.
  class SpanForm {
   public:
    using Key = std::pair<Path, Path>;

    explicit SpanForm(Ring ring) : ring_(std::move(ring)) {}

    Ring const& ring() const noexcept {
      return ring_;
    }

    std::map<Key, Scalar> const& terms() const noexcept {
      return terms_;
    }

    bool empty() const noexcept {
      return terms_.empty();
    }

    std::size_t size() const noexcept {
      return terms_.size();
    }

    // Adds r·s_λ s_{μ*}; throws NotComposable if s(λ) != s(μ).
    void add(Path const& lambda, Path const& mu, Scalar const& r);
    void add(SpanForm const& other, Scalar const& scale);

    SpanForm scaled(Scalar const& r) const;

    // Structural equality of the stored span form; algebraic equality is
    // KPAlgebra::equals.
    friend bool operator==(SpanForm const&, SpanForm const&) = default;

    friend SpanForm operator+(SpanForm a, SpanForm const& b) {
      a.add(b, Scalar(1));
      return a;
    }

    friend SpanForm operator-(SpanForm a, SpanForm const& b) {
      a.add(b, Scalar(-1));
      return a;
    }

   private:
    Ring                  ring_;
    std::map<Key, Scalar> terms_;
  };

  // A finite set closed under the rule: λ,μ,ρ,τ in the set with
  // d(λ)=d(μ), s(λ)=s(μ), d(ρ)=d(τ), s(ρ)=s(τ) put λα and τβ in the set
  // for every (α,β) ∈ Λ^min(μ,ρ).
  struct PiSet {
    std::vector<Path> generators;
    std::vector<Path> paths;

    bool contains(Path const& p) const;
  };

  class KPAlgebra {
   public:
    KPAlgebra(KGraph const& g, Ring ring) : graph_(g), ring_(std::move(ring)) {}

    KGraph const& graph() const noexcept {
      return graph_;
    }

    Ring const& ring() const noexcept {
      return ring_;
    }

    SpanForm zero() const {
      return SpanForm(ring_);
    }

    // r·s_λ s_{μ*}.
    SpanForm term(Path const& lambda, Path const& mu, Scalar const& r = 1) const;
    SpanForm s(Path const& lambda) const;
    SpanForm ghost(Path const& mu) const;

    // Rewrites words to span form using (KP1)-(KP3); throws UnknownSymbol
    // for symbols that are not paths of the graph.
    SpanForm reduce(std::vector<std::pair<Scalar, Word>> const& terms) const;
    SpanForm reduce(Word const& word) const;

    SpanForm multiply(SpanForm const& a, SpanForm const& b) const;

    std::map<GradeVector, SpanForm> grade(SpanForm const& a) const;

    PiSet             pi_closure(std::vector<Path> const& E) const;
    // T(λ) = {ν : d(ν) != 0, λν ∈ Π}; throws NotInPi.
    std::vector<Path> t_set(Path const& lambda, PiSet const& pi) const;

    // s_λ ∏_{ν∈G} (s_{s(λ)} - s_ν s_{ν*}) s_{μ*}; throws RangeMismatch.
    SpanForm cell_element(Path const&              lambda,
                          Path const&              mu,
                          std::vector<Path> const& G) const;

    // Θ_{λ,μ} = cell_element(λ, μ, T(λ)); throws PairNotEligible.
    SpanForm theta(Path const& lambda, Path const& mu, PiSet const& pi) const;

    // Coefficients of a in the Θ matrix units; throws NotCore or
    // IndexEscapesPi.
    std::map<SpanForm::Key, Scalar> expand_core_in_theta(SpanForm const& a,
                                                         PiSet const& pi) const;

    // Throws NotCore.
    bool core_is_zero(SpanForm const& a) const;

    // Decided through the groupoid model; with cross_check set, degree-0
    // parts are also decided by core_is_zero and a disagreement throws
    // Internal.
    bool is_zero(SpanForm const& a, bool cross_check = false) const;
    bool equals(SpanForm const& a, SpanForm const& b) const {
      return is_zero(a - b);
    }

    // ∏_{λ∈E} (s_v - s_λ s_{λ*}); E must share the range v; throws
    // RangeMismatch.
    SpanForm kp4_defect(VertexId v, std::vector<Path> const& E) const;

    std::string to_string(SpanForm const& a) const;

   private:
    KGraph const& graph_;
    Ring          ring_;
  };

}  // namespace kpx

#endif  // KPX_KP_ALGEBRA_HPP_
