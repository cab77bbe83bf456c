#include "tetralat/rational.hpp"

#include <ostream>

#include "tetralat/error.hpp"

namespace tetralat {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) fail(Errc::PoleAtZero, "rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) fail(Errc::Parse, "bad rational literal '" + s + "'");
  if (v.get_den() == 0) fail(Errc::Parse, "zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::PoleAtZero, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::PoleAtZero, "inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) fail(Errc::PoleAtZero, "negative power of zero");
    return Rational(0);
  }
  mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
  Rational r;
  r.v_ = mpq_class(num) / mpq_class(den);
  return r;
}

std::string Rational::to_string() const { return v_.get_str(); }

long Rational::to_long() const {
  if (!is_integer()) fail(Errc::OutOfRange, "rational " + to_string() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) fail(Errc::OutOfRange, "integer too large for long");
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace tetralat
