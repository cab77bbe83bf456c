#ifndef TETRALAT_SERIES_HPP
#define TETRALAT_SERIES_HPP

#include <map>

#include "tetralat/laurent.hpp"

namespace tetralat {

using DegreeCaps = std::map<VarId, int>;

/// Truncated formal power series: a LaurentPoly together with per-variable
/// degree caps. Any term whose degree in a capped variable exceeds that cap is
/// discarded eagerly; uncapped variables stay exact.
class FormalSeries {
public:
  FormalSeries() = default;
  FormalSeries(LaurentPoly p, DegreeCaps caps);

  const LaurentPoly& poly() const { return poly_; }
  const DegreeCaps& caps() const { return caps_; }

  FormalSeries operator-() const { return FormalSeries(-poly_, caps_); }
  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.poly_ == b.poly_ && a.caps_ == b.caps_;
  }
  friend bool operator!=(const FormalSeries& a, const FormalSeries& b) { return !(a == b); }

  /// Multiplicative inverse. The capped-degree-zero part must be a single
  /// term (a unit of the Laurent ring); throws NotDivisible otherwise.
  FormalSeries inverse() const;

  FormalSeries pow(long e) const;

  std::string to_string() const { return poly_.to_string(); }

private:
  static DegreeCaps merge_caps(const DegreeCaps& a, const DegreeCaps& b);
  LaurentPoly truncate(const LaurentPoly& p) const;

  LaurentPoly poly_;
  DegreeCaps caps_;
};

}  // namespace tetralat

#endif
