#ifndef KPX_ANALYSIS_HPP_
#define KPX_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kpx/boundary.hpp"
#include "kpx/kgraph.hpp"
#include "kpx/kp_algebra.hpp"
#include "kpx/ring.hpp"

namespace kpx {

  enum class Tri { False, True, Unknown };

  std::string_view to_string(Tri t) noexcept;
  Tri              tri_and(Tri a, Tri b) noexcept;

  inline Tri tri(bool b) noexcept {
    return b ? Tri::True : Tri::False;
  }

  struct AnalysisBounds {
    // Largest total degree of cycles and lasso periods that are searched.
    int cycle_length = 6;
    // Random elements used by the faithfulness validation.
    int samples = 40;
  };

  // Periodic(v, n, m) means σ^n x = σ^m x for every x ∈ v∂Λ, with μ, ν, α
  // as in the kernel element s_{μα}s_{(μα)*} - s_{να}s_{(μα)*}, so that
  // d(μ) = m and d(ν) = n.
  struct AperiodicityVerdict {
    enum class Status { Aperiodic, Periodic, Unknown };

    Status      status = Status::Unknown;
    std::string certificate;
    VertexId    vertex = 0;
    Degree      n;
    Degree      m;
    Path        mu;
    Path        nu;
    Path        alpha;
    std::string bounds;

    Tri as_tri() const noexcept {
      return status == Status::Aperiodic ? Tri::True
             : status == Status::Periodic ? Tri::False
                                          : Tri::Unknown;
    }
  };

  struct CofinalityVerdict {
    enum class Status { Cofinal, NotCofinal, Unknown };

    Status                      status = Status::Unknown;
    std::string                 certificate;
    VertexId                    vertex = 0;
    std::optional<BoundaryPath> x;
    std::string                 bounds;

    Tri as_tri() const noexcept {
      return status == Status::Cofinal ? Tri::True
             : status == Status::NotCofinal ? Tri::False
                                            : Tri::Unknown;
    }
  };

  struct PropertyCheck {
    Tri value = Tri::Unknown;
    // Result of the direct groupoid check, present for acyclic graphs.
    std::optional<bool> direct;
  };

  struct FaithfulnessVerdict {
    Tri                     faithful = Tri::Unknown;
    std::optional<SpanForm> kernel_witness;
    // Number of elements or boundary paths the verdict was validated on.
    int         validated = 0;
    std::string note;
  };

  struct SimplicityReport {
    AperiodicityVerdict aperiodic;
    CofinalityVerdict   cofinal;
    PropertyCheck       effective;
    PropertyCheck       minimal;
    Tri                 basically_simple = Tri::Unknown;
    Tri                 simple           = Tri::Unknown;
    Tri                 ck_uniqueness_applicable = Tri::Unknown;
    bool                ring_is_field    = false;
    std::string         ring;
  };

  AperiodicityVerdict check_aperiodic(KGraph const& g, AnalysisBounds const& bounds = {});
  CofinalityVerdict   check_cofinal(KGraph const& g, AnalysisBounds const& bounds = {});
  PropertyCheck       is_effective(KGraph const& g, AnalysisBounds const& bounds = {});
  PropertyCheck       is_minimal(KGraph const& g, AnalysisBounds const& bounds = {});
  FaithfulnessVerdict boundary_rep_faithful(KGraph const&         g,
                                            AnalysisBounds const& bounds = {});
  SimplicityReport    report(KGraph const& g, Ring const& ring, AnalysisBounds const& bounds = {});

  // True when every z ∈ s(c)∂Λ satisfies cz = z, decided on the finite
  // graph of rotations of c.
  bool cycle_fixes_boundary(KGraph const& g, Path const& c);

}  // namespace kpx

#endif  // KPX_ANALYSIS_HPP_
