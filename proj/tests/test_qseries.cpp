#include <doctest.h>

#include "tetralat/error.hpp"
#include "tetralat/qseries.hpp"

using namespace tetralat;

namespace {
LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
}

TEST_CASE("finite q-Pochhammer") {
  VarId q = var("q"), q2 = var("qq"), Q = var("Q"), t = var("t");
  CHECK(q_pochhammer(P("a"), q, 0).is_one());
  CHECK(q_pochhammer(P("t"), Q, 1) == P("1 - t"));
  // (q^2; q^2)_2 = (1-q^2)(1-q^4) written in the base variable qq = q^2
  LaurentPoly got = q_pochhammer(LaurentPoly::variable(q2), q2, 2);
  CHECK(got == P("(1 - qq)*(1 - qq^2)"));
  (void)q;
}

TEST_CASE("q-binomials") {
  VarId q = var("q");
  CHECK(q_binomial(2, 1, q) == P("1 + q"));
  CHECK(q_binomial(5, 0, q).is_one());
  CHECK(q_binomial(4, 2, q) == P("1 + q + 2*q^2 + q^3 + q^4"));
  CHECK_THROWS_AS(q_binomial(2, 3, q), Error);
  // q -> 1 gives binomial coefficients
  for (int n = 0; n <= 6; ++n) {
    long binom = 1;
    for (int k = 0; k <= n; ++k) {
      auto val = q_binomial(n, k, q).substitute({{q, LaurentPoly(1)}});
      CHECK(val == LaurentPoly(Rational(binom)));
      binom = binom * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("q-binomial theorem as exact identity") {
  VarId q = var("q");
  for (int n = 0; n <= 6; ++n) {
    LaurentPoly lhs(0);
    for (int k = 0; k <= n; ++k) {
      LaurentPoly term = q_binomial(n, k, q);
      term *= LaurentPoly::variable(q, k * (k - 1) / 2);
      term *= (-P("zz")).pow(k);
      lhs += term;
    }
    CHECK(lhs == q_pochhammer(P("zz"), q, n));
  }
}

TEST_CASE("infinite products under caps") {
  VarId t = var("t"), Q = var("Q");
  DegreeCaps caps{{t, 2}, {Q, 2}};
  FormalSeries s = q_pochhammer_series(LaurentPoly::variable(t), Q, caps);
  // (t;Q)_inf = (1-t)(1-tQ)(1-tQ^2)... truncated
  CHECK(s.poly() == P("1 - t - t*Q - t*Q^2 + t^2*Q + t^2*Q^2"));
  CHECK(q_pochhammer_series(LaurentPoly(0), Q, caps).poly().is_one());
  CHECK_THROWS_AS(q_pochhammer_series(P("z1"), Q, caps), Error);
}

TEST_CASE("classical summation formulas to cap degree 5") {
  VarId t = var("t"), q = var("q");
  DegreeCaps caps{{t, 5}, {q, 5}};
  // sum t^n/(q;q)_n = 1/(t;q)_inf
  FormalSeries lhs(LaurentPoly(0), caps);
  for (int n = 0; n <= 5; ++n) {
    FormalSeries den(q_pochhammer(LaurentPoly::variable(q), q, n), caps);
    lhs = lhs + FormalSeries(LaurentPoly::variable(t, n), caps) * den.inverse();
  }
  FormalSeries rhs = q_pochhammer_series(LaurentPoly::variable(t), q, caps).inverse();
  CHECK(lhs == rhs);
  // sum q^{n(n-1)/2} t^n/(q;q)_n = (-t;q)_inf
  FormalSeries lhs2(LaurentPoly(0), caps);
  for (int n = 0; n <= 5; ++n) {
    FormalSeries den(q_pochhammer(LaurentPoly::variable(q), q, n), caps);
    lhs2 = lhs2 + FormalSeries(LaurentPoly::variable(t, n) *
                                   LaurentPoly::variable(q, n * (n - 1) / 2),
                               caps) *
                      den.inverse();
  }
  FormalSeries rhs2 = q_pochhammer_series(-LaurentPoly::variable(t), q, caps);
  CHECK(lhs2 == rhs2);
}

TEST_CASE("q-integers and factorials") {
  VarId q = var("q");
  CHECK(q_integer(3, q) == P("1 + q + q^2"));
  CHECK(q_factorial(3, q) == P("(1 + q)*(1 + q + q^2)"));
  CHECK(q_factorial(0, q).is_one());
}
