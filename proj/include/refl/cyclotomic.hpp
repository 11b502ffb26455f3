#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace refl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Element of the 12th cyclotomic field Q(z), z a primitive 12th root of
/// unity, stored as c0 + c1*z + c2*z^2 + c3*z^3 reduced mod z^4 - z^2 + 1.
/// The cube root of unity omega is z^4 = z^2 - 1.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
  explicit Cyclotomic(const Rational& c0) : c_{c0, 0, 0, 0} {}
  explicit Cyclotomic(long v) : c_{v, 0, 0, 0} {}

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(1); }
  static Cyclotomic zeta_pow(int k);
  static Cyclotomic omega() { return zeta_pow(4); }

  const Rational& coeff(int i) const { return c_[i]; }

  bool is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
  }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic inverse() const;
  Cyclotomic conj() const;  // field automorphism z -> z^-1

  bool operator==(const Cyclotomic& o) const { return c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return c_ != o.c_; }

  /// Renders "c0 + c1*z + c2*z^2 + c3*z^3" with rationals as "p/q".
  std::string to_string() const;
  static Cyclotomic parse(const std::string& text);

  size_t hash() const;

 private:
  std::array<Rational, 4> c_{};
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& a) {
  return Cyclotomic(q) * a;
}

}  // namespace refl
