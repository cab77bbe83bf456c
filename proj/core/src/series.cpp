#include "tetralat/series.hpp"

#include <algorithm>

#include "tetralat/error.hpp"

namespace tetralat {

FormalSeries::FormalSeries(LaurentPoly p, DegreeCaps caps) : caps_(std::move(caps)) {
  poly_ = truncate(p);
}

DegreeCaps FormalSeries::merge_caps(const DegreeCaps& a, const DegreeCaps& b) {
  DegreeCaps out = a;
  for (const auto& [v, c] : b) {
    auto it = out.find(v);
    if (it == out.end()) {
      out[v] = c;
    } else {
      it->second = std::min(it->second, c);
    }
  }
  return out;
}

LaurentPoly FormalSeries::truncate(const LaurentPoly& p) const {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    bool keep = true;
    for (const auto& [v, cap] : caps_) {
      if (mono_degree_in(m, v) > cap) {
        keep = false;
        break;
      }
    }
    if (keep) out += LaurentPoly::monomial(m, c);
  }
  return out;
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  return FormalSeries(a.poly_ + b.poly_, FormalSeries::merge_caps(a.caps_, b.caps_));
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
  return FormalSeries(a.poly_ - b.poly_, FormalSeries::merge_caps(a.caps_, b.caps_));
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  return FormalSeries(a.poly_ * b.poly_, FormalSeries::merge_caps(a.caps_, b.caps_));
}

FormalSeries FormalSeries::inverse() const {
  // Split into the capped-degree-zero part f0 and the rest; f0 must be a unit.
  LaurentPoly f0, fp;
  for (const auto& [m, c] : poly_.terms()) {
    bool zero_part = true;
    for (const auto& [v, cap] : caps_) {
      (void)cap;
      if (mono_degree_in(m, v) != 0) {
        zero_part = false;
        break;
      }
    }
    if (zero_part) {
      f0 += LaurentPoly::monomial(m, c);
    } else {
      fp += LaurentPoly::monomial(m, c);
    }
  }
  if (!f0.is_single_term())
    fail(Errc::NotDivisible, "series inverse needs a single-term leading part");

  LaurentPoly f0_inv = f0.pow(-1);
  // 1/f = (1/f0) * sum_j (-fp/f0)^j; each fp term carries positive capped
  // degree, so the sum terminates once j exceeds the total cap budget.
  long budget = 0;
  for (const auto& [v, cap] : caps_) {
    (void)v;
    budget += cap;
  }
  FormalSeries h(fp * f0_inv * Rational(-1), caps_);
  FormalSeries acc(LaurentPoly(1), caps_);
  FormalSeries power(LaurentPoly(1), caps_);
  for (long j = 1; j <= budget; ++j) {
    power = power * h;
    if (power.poly().is_zero()) break;
    acc = acc + power;
  }
  return FormalSeries(acc.poly() * f0_inv, caps_);
}

FormalSeries FormalSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FormalSeries acc(LaurentPoly(1), caps_);
  FormalSeries base = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

}  // namespace tetralat
