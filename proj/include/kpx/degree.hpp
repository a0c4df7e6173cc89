#ifndef KPX_DEGREE_HPP_
#define KPX_DEGREE_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace kpx {

  // An element of N^k.  The total order given by <=> is lexicographic and
  // exists only for use in ordered containers; the partial order of N^k is
  // leq().
  class Degree {
   public:
    Degree() = default;
    explicit Degree(std::size_t k) : coords_(k, 0) {}
    Degree(std::initializer_list<int> coords);
    explicit Degree(std::vector<int> coords);

    static Degree unit(std::size_t k, std::size_t i);

    std::size_t rank() const noexcept {
      return coords_.size();
    }

    int operator[](std::size_t i) const {
      return coords_[i];
    }

    int& operator[](std::size_t i) {
      return coords_[i];
    }

    std::vector<int> const& coords() const noexcept {
      return coords_;
    }

    int  total() const noexcept;
    bool is_zero() const noexcept;

    // Indices i with coords[i] != 0.
    std::vector<std::size_t> support() const;

    std::string to_string() const;

    friend Degree operator+(Degree const& a, Degree const& b);

    friend bool operator==(Degree const&, Degree const&) = default;
    friend auto operator<=>(Degree const&, Degree const&) = default;

   private:
    std::vector<int> coords_;
  };

  bool   leq(Degree const& a, Degree const& b);
  Degree join(Degree const& a, Degree const& b);
  Degree meet(Degree const& a, Degree const& b);
  // a - b; throws DegreeOutOfRange unless b <= a.
  Degree minus(Degree const& a, Degree const& b);

  // Element of Z^k, used for the grading d(λ) - d(μ).
  using GradeVector = std::vector<long>;

  GradeVector grade_of(Degree const& a, Degree const& b);
  std::string to_string(GradeVector const& g);

  // Element of (N ∪ {∞})^k.
  class ExtendedDegree {
   public:
    static constexpr long infinity = std::numeric_limits<long>::max();

    ExtendedDegree() = default;
    explicit ExtendedDegree(Degree const& d);
    explicit ExtendedDegree(std::vector<long> coords) : coords_(std::move(coords)) {}

    std::size_t rank() const noexcept {
      return coords_.size();
    }

    long operator[](std::size_t i) const {
      return coords_[i];
    }

    bool is_finite() const noexcept;
    bool is_infinite(std::size_t i) const {
      return coords_[i] == infinity;
    }

    // n <= *this.
    bool dominates(Degree const& n) const;

    // *this - n, valid when dominates(n); ∞ - n = ∞.
    ExtendedDegree minus(Degree const& n) const;

    std::string to_string() const;

    friend bool operator==(ExtendedDegree const&, ExtendedDegree const&) = default;

   private:
    std::vector<long> coords_;
  };

}  // namespace kpx

#endif  // KPX_DEGREE_HPP_
