#include "kpx/degree.hpp"

#include <algorithm>
#include <numeric>

#include "kpx/error.hpp"

namespace kpx {

  Degree::Degree(std::initializer_list<int> coords) : coords_(coords) {}

  Degree::Degree(std::vector<int> coords) : coords_(std::move(coords)) {}

  Degree Degree::unit(std::size_t k, std::size_t i) {
    Degree d(k);
    d.coords_[i] = 1;
    return d;
  }

  int Degree::total() const noexcept {
    return std::accumulate(coords_.begin(), coords_.end(), 0);
  }

  bool Degree::is_zero() const noexcept {
    return std::all_of(
        coords_.begin(), coords_.end(), [](int x) { return x == 0; });
  }

  std::vector<std::size_t> Degree::support() const {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] != 0) {
        result.push_back(i);
      }
    }
    return result;
  }

  std::string Degree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i != 0) {
        s += ",";
      }
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

  namespace {
    void check_rank(Degree const& a, Degree const& b) {
      if (a.rank() != b.rank()) {
        throw Error(ErrorKind::DegreeOutOfRange,
                    "degrees of different rank " + a.to_string() + " and "
                        + b.to_string());
      }
    }
  }  // namespace

  Degree operator+(Degree const& a, Degree const& b) {
    check_rank(a, b);
    Degree r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      r[i] = a[i] + b[i];
    }
    return r;
  }

  bool leq(Degree const& a, Degree const& b) {
    check_rank(a, b);
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (a[i] > b[i]) {
        return false;
      }
    }
    return true;
  }

  Degree join(Degree const& a, Degree const& b) {
    check_rank(a, b);
    Degree r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      r[i] = std::max(a[i], b[i]);
    }
    return r;
  }

  Degree meet(Degree const& a, Degree const& b) {
    check_rank(a, b);
    Degree r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      r[i] = std::min(a[i], b[i]);
    }
    return r;
  }

  Degree minus(Degree const& a, Degree const& b) {
    if (!leq(b, a)) {
      throw Error(ErrorKind::DegreeOutOfRange,
                  b.to_string() + " is not below " + a.to_string());
    }
    Degree r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      r[i] = a[i] - b[i];
    }
    return r;
  }

  GradeVector grade_of(Degree const& a, Degree const& b) {
    check_rank(a, b);
    GradeVector g(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      g[i] = static_cast<long>(a[i]) - b[i];
    }
    return g;
  }

  std::string to_string(GradeVector const& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i != 0) {
        s += ",";
      }
      s += std::to_string(g[i]);
    }
    return s + ")";
  }

  ExtendedDegree::ExtendedDegree(Degree const& d)
      : coords_(d.coords().begin(), d.coords().end()) {}

  bool ExtendedDegree::is_finite() const noexcept {
    return std::none_of(
        coords_.begin(), coords_.end(), [](long x) { return x == infinity; });
  }

  bool ExtendedDegree::dominates(Degree const& n) const {
    if (n.rank() != coords_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] != infinity && n[i] > coords_[i]) {
        return false;
      }
    }
    return true;
  }

  ExtendedDegree ExtendedDegree::minus(Degree const& n) const {
    if (!dominates(n)) {
      throw Error(ErrorKind::DegreeOutOfRange,
                  n.to_string() + " is not below " + to_string());
    }
    std::vector<long> r(coords_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] != infinity) {
        r[i] -= n[i];
      }
    }
    return ExtendedDegree(std::move(r));
  }

  std::string ExtendedDegree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i != 0) {
        s += ",";
      }
      s += coords_[i] == infinity ? std::string("inf")
                                  : std::to_string(coords_[i]);
    }
    return s + ")";
  }

}  // namespace kpx
