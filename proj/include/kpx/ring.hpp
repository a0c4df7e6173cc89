#ifndef KPX_RING_HPP_
#define KPX_RING_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kpx {

  using Integer = boost::multiprecision::cpp_int;
  // Coefficients are stored as exact rationals; for Z/n they are always
  // canonical residues 0..n-1, for Z always integers.
  using Scalar = boost::multiprecision::cpp_rational;

  class Ring {
   public:
    enum class Kind { Integers, Rationals, IntegersMod };

    static Ring integers();
    static Ring rationals();
    // Throws BadRing unless n >= 2.
    static Ring integers_mod(Integer const& n);
    // "z", "q" or "zmod:N"; throws BadRing.
    static Ring parse(std::string_view text);

    Kind kind() const noexcept {
      return kind_;
    }

    Integer const& modulus() const noexcept {
      return modulus_;
    }

    bool is_field() const;

    // Maps a rational into the ring; throws CoefficientNotInRing when the
    // denominator has no inverse.
    Scalar embed(Scalar const& x) const;
    Scalar from_integer(long x) const {
      return embed(Scalar(x));
    }

    Scalar add(Scalar const& a, Scalar const& b) const;
    Scalar sub(Scalar const& a, Scalar const& b) const;
    Scalar mul(Scalar const& a, Scalar const& b) const;
    Scalar neg(Scalar const& a) const;

    std::string name() const;
    static std::string format(Scalar const& x);

    friend bool operator==(Ring const&, Ring const&) = default;

   private:
    Ring(Kind kind, Integer modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    Kind    kind_;
    Integer modulus_;
  };

}  // namespace kpx

#endif  // KPX_RING_HPP_
