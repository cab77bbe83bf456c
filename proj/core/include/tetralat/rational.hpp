#ifndef TETRALAT_RATIONAL_HPP
#define TETRALAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tetralat {

/// Exact rational number. Always stored canonically (reduced, positive
/// denominator); the canonical text form is "p" or "p/q".
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}        // NOLINT: implicit by design
  Rational(int n) : v_(n) {}         // NOLINT
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  Rational pow(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// Numerator/denominator as decimal strings (denominator is always positive).
  std::string num_string() const { return v_.get_num().get_str(); }
  std::string den_string() const { return v_.get_den().get_str(); }

  std::string to_string() const;

  /// Exact conversion to long; throws OutOfRange if not an integer fitting a long.
  long to_long() const;

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tetralat

#endif
