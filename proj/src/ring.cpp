#include "kpx/ring.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include "kpx/error.hpp"

namespace kpx {

  namespace {
    Integer mod(Integer const& x, Integer const& n) {
      Integer r = x % n;
      return r < 0 ? r + n : r;
    }

    // Inverse of a modulo n, or 0 when gcd(a, n) != 1.
    Integer inverse(Integer const& a, Integer const& n) {
      Integer t = 0, new_t = 1, r = n, new_r = mod(a, n);
      while (new_r != 0) {
        Integer q = r / new_r;
        t         = t - q * new_t;
        std::swap(t, new_t);
        r = r - q * new_r;
        std::swap(r, new_r);
      }
      if (r != 1) {
        return 0;
      }
      return mod(t, n);
    }
  }  // namespace

  Ring Ring::integers() {
    return Ring(Kind::Integers, 0);
  }

  Ring Ring::rationals() {
    return Ring(Kind::Rationals, 0);
  }

  Ring Ring::integers_mod(Integer const& n) {
    if (n < 2) {
      throw Error(ErrorKind::BadRing, "modulus must be at least 2");
    }
    return Ring(Kind::IntegersMod, n);
  }

  Ring Ring::parse(std::string_view text) {
    if (text == "z" || text == "Z") {
      return integers();
    }
    if (text == "q" || text == "Q") {
      return rationals();
    }
    constexpr std::string_view prefix = "zmod:";
    if (text.substr(0, prefix.size()) == prefix) {
      auto digits = std::string(text.substr(prefix.size()));
      if (!digits.empty()
          && digits.find_first_not_of("0123456789") == std::string::npos
          && digits.size() < 200) {
        return integers_mod(Integer(digits));
      }
    }
    throw Error(ErrorKind::BadRing,
                "unknown ring '" + std::string(text) + "' (use z, q or zmod:N)");
  }

  bool Ring::is_field() const {
    switch (kind_) {
      case Kind::Integers: return false;
      case Kind::Rationals: return true;
      case Kind::IntegersMod:
        return boost::multiprecision::miller_rabin_test(modulus_, 25);
    }
    return false;
  }

  Scalar Ring::embed(Scalar const& x) const {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    switch (kind_) {
      case Kind::Rationals: return x;
      case Kind::Integers:
        if (den != 1) {
          throw Error(ErrorKind::CoefficientNotInRing,
                      format(x) + " is not an integer");
        }
        return x;
      case Kind::IntegersMod: {
        Integer inv = inverse(den, modulus_);
        if (inv == 0) {
          throw Error(ErrorKind::CoefficientNotInRing,
                      format(x) + " has a denominator that is not a unit mod "
                          + modulus_.str());
        }
        return Scalar(mod(num * inv, modulus_));
      }
    }
    return x;
  }

  Scalar Ring::add(Scalar const& a, Scalar const& b) const {
    return kind_ == Kind::IntegersMod ? embed(a + b) : a + b;
  }

  Scalar Ring::sub(Scalar const& a, Scalar const& b) const {
    return kind_ == Kind::IntegersMod ? embed(a - b) : a - b;
  }

  Scalar Ring::mul(Scalar const& a, Scalar const& b) const {
    return kind_ == Kind::IntegersMod ? embed(a * b) : a * b;
  }

  Scalar Ring::neg(Scalar const& a) const {
    return kind_ == Kind::IntegersMod ? embed(-a) : -a;
  }

  std::string Ring::name() const {
    switch (kind_) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::IntegersMod: return "Z/" + modulus_.str();
    }
    return "?";
  }

  std::string Ring::format(Scalar const& x) {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

}  // namespace kpx
