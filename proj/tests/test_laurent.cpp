#include <doctest.h>

#include <random>

#include "tetralat/error.hpp"
#include "tetralat/laurent.hpp"
#include "tetralat/series.hpp"

using namespace tetralat;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int terms) {
  LaurentPoly p(0);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (VarId v : vars) {
      int e = static_cast<int>(rng() % 5) - 2;
      if (e != 0) m.emplace_back(v, e);
    }
    p += LaurentPoly::monomial(m, Rational(static_cast<long>(rng() % 9) + 1));
  }
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic examples") {
  CHECK(P("(z1 + z2)*(z1 - z2)") == P("z1^2 - z2^2"));
  CHECK(P("z1") + LaurentPoly(0) == P("z1"));
  CHECK(P("(1 + q*z1^-1)*(1 - q*z1^-1)") == P("1 - q^2*z1^-2"));
  CHECK((P("z1") - P("z1")).is_zero());
}

TEST_CASE("exact division") {
  CHECK(P("z1^2 - z2^2").div_exact(P("z1 - z2")) == P("z1 + z2"));
  LaurentPoly p = P("3*z1^2*z2^-1 + 7*q - 2");
  CHECK(p.div_exact(p).is_one());
  CHECK_THROWS_AS(P("z1^2 + z2").div_exact(P("z1 + z2")), Error);
  // Laurent quotient with negative exponents
  CHECK(P("z1 - z2^2*z1^-1").div_exact(P("z1 - z2")) == P("1 + z2*z1^-1"));
}

TEST_CASE("substitution") {
  std::map<VarId, LaurentPoly> ones{{var("z1"), LaurentPoly(1)}, {var("z2"), LaurentPoly(1)}};
  CHECK(P("z1*z2^2").substitute(ones) == LaurentPoly(1));
  CHECK(P("1 - q^2").substitute({{var("q"), LaurentPoly(0)}}) == LaurentPoly(1));
  CHECK_THROWS_AS(P("z1^-1").substitute({{var("z1"), LaurentPoly(0)}}), Error);
  // polynomial binding
  CHECK(P("x^2").substitute({{var("x"), P("z1 + z2")}}) == P("z1^2 + 2*z1*z2 + z2^2"));
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(7);
  std::vector<VarId> vars{var("z1"), var("z2"), var("q")};
  for (int t = 0; t < 30; ++t) {
    LaurentPoly a = random_poly(rng, vars, 3);
    LaurentPoly b = random_poly(rng, vars, 3);
    LaurentPoly c = random_poly(rng, vars, 2);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a * b).div_exact(b) == a);
  }
}

TEST_CASE("canonical serialization round trip") {
  std::mt19937_64 rng(11);
  std::vector<VarId> vars{var("z1"), var("z2"), var("q")};
  for (int t = 0; t < 40; ++t) {
    LaurentPoly a = random_poly(rng, vars, 4) - random_poly(rng, vars, 2);
    std::string s = a.to_string();
    CHECK(LaurentPoly::parse(s) == a);
    CHECK(LaurentPoly::parse(s).to_string() == s);
  }
  CHECK(LaurentPoly(0).to_string() == "0");
}

TEST_CASE("monomial construction canonicalizes unsorted input") {
  VarId a = var("mc_a"), b = var("mc_b");
  Monomial unsorted{{b, 2}, {a, 1}};
  Monomial dup{{a, 1}, {b, 2}, {b, 0}};
  CHECK(LaurentPoly::monomial(unsorted, 1) == LaurentPoly::monomial(dup, 1));
  CHECK(LaurentPoly::monomial(Monomial{{a, 1}, {a, -1}}, 1).is_one());
}

TEST_CASE("formal series truncation and inverse") {
  VarId t = var("t"), Q = var("Q");
  DegreeCaps caps{{t, 2}, {Q, 2}};
  FormalSeries s(P("1 - t"), caps);
  FormalSeries inv = s.inverse();
  CHECK(inv.poly() == P("1 + t + t^2"));
  CHECK((s * inv).poly() == P("1"));
  // truncation drops capped degrees eagerly
  FormalSeries big(P("1 + t^3 + Q*t"), caps);
  CHECK(big.poly() == P("1 + Q*t"));
  // leading part must be a unit
  CHECK_THROWS_AS(FormalSeries(P("z1 + z2 + t"), caps).inverse(), Error);
  // units with uncapped symbols invert fine
  FormalSeries u(P("q + t"), caps);
  CHECK((u * u.inverse()).poly() == P("1"));
}
