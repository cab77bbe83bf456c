#include <doctest.h>

#include "tetralat/error.hpp"
#include "tetralat/pfunc.hpp"
#include "tetralat/qseries.hpp"

using namespace tetralat;

namespace {
LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
}

TEST_CASE("word parsing round trip") {
  auto w = OperatorWord::parse("X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)", Model::q0);
  CHECK(w.n == 3);
  CHECK(w.factors.size() == 2);
  CHECK(w.to_string() == "X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)");
  auto y = OperatorWord::parse("Y(l=5,k=1) Y(l=5,k=2)", Model::generic);
  CHECK(y.n == 5);
  CHECK(y.site_count() == 5);
  CHECK_THROWS_AS(OperatorWord::parse("X(n=3,i=2)", Model::q0), Error);
  CHECK_THROWS_AS(OperatorWord::parse("X(n=3,i=2,z=a) X(n=4,i=1,z=b)", Model::q0), Error);
  CHECK_THROWS_AS(OperatorWord::parse("Z(n=3)", Model::q0), Error);
}

TEST_CASE("vacuum expectations: weak-increase factorization") {
  VarId q = var("q");
  // <O| X_1(z1) X_2(z2) X_3(z3) |O> = z1 z2^2 z3^3 at rank 3
  auto w = OperatorWord::parse("X(n=3,i=1,z=z1) X(n=3,i=2,z=z2) X(n=3,i=3,z=z3)", Model::q0);
  CHECK(vacuum_expectation(w, q) == P("z1*z2^2*z3^3"));
  // empty word
  OperatorWord empty;
  empty.model = Model::q0;
  empty.n = 3;
  CHECK(vacuum_expectation(empty, q).is_one());
  // weakly increasing with repeats, n=4, m=4
  auto w2 = OperatorWord::parse(
      "X(n=4,i=1,z=u1) X(n=4,i=1,z=u2) X(n=4,i=3,z=u3) X(n=4,i=4,z=u4)", Model::q0);
  CHECK(vacuum_expectation(w2, q) == P("u1*u2*u3^3*u4^4"));
}

TEST_CASE("decreasing two-letter word gives a Schur factor") {
  VarId q = var("q");
  auto w = OperatorWord::parse("X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)", Model::q0);
  // z1 * s_{(1,1)}(z1,z2) = z1^2 z2
  CHECK(vacuum_expectation(w, q) == P("z1^2*z2"));
}

TEST_CASE("dual expectation against the 10010 example") {
  VarId q = var("q");
  auto w = OperatorWord::parse("Y(l=5,k=1) Y(l=5,k=2) Y(l=5,k=3)", Model::generic);
  LaurentPoly got = dual_expectation({1, 0, 0, 1, 0}, w, q);
  auto g = [&](int k, int j) { return LaurentPoly::variable(var_grid("z", k, j)); };
  LaurentPoly qq = LaurentPoly::variable(q);
  LaurentPoly want = g(1, 1) * g(2, 4) + qq * g(1, 4) * g(2, 1) + g(1, 1) * g(3, 4) +
                     qq * g(1, 4) * g(3, 1) + g(2, 1) * g(3, 4) + qq * g(2, 4) * g(3, 1);
  CHECK(got == want);
  // all-zero bra on Y words sees only the identity branch
  CHECK(dual_expectation({0, 0, 0, 0, 0}, w, q).is_one());
  CHECK_THROWS_AS(dual_expectation({1, 0}, w, q), Error);
}

TEST_CASE("plain trace stabilization and failure modes") {
  VarId q = var("q");
  auto w = OperatorWord::parse(
      "X(n=3,i=3,z=w3) X(n=3,i=2,z=w2) X(n=3,i=1,z=w1) X(n=3,i=0,z=w0)", Model::q0);
  TraceResult r = plain_trace(w, 0, 6, q);
  CHECK(r.value == P("w1*w2^2*w3^3"));
  CHECK(r.stabilized_at >= 1);
  // all variables to one
  std::map<VarId, Rational> ones{{var("w0"), 1}, {var("w1"), 1}, {var("w2"), 1}, {var("w3"), 1}};
  CHECK(r.value.evaluate(ones).is_one());
  // a word whose identity component survives has a divergent trace
  auto bad = OperatorWord::parse("X(n=2,i=0,z=a)", Model::q0);
  CHECK_THROWS_AS(plain_trace(bad, 0, 5, q), Error);
  // generic model rejected
  auto gw = OperatorWord::parse("X(n=2,i=1,z=a)", Model::generic);
  CHECK_THROWS_AS(plain_trace(gw, 0, 5, q), Error);
}

TEST_CASE("trace of the permuted example word") {
  VarId q = var("q");
  auto w = OperatorWord::parse(
      "X(n=3,i=3,z=v1) X(n=3,i=0,z=v2) X(n=3,i=0,z=v3) X(n=3,i=2,z=v4) X(n=3,i=1,z=v5)",
      Model::q0);
  TraceResult r = plain_trace(w, 0, 8, q);
  std::map<VarId, Rational> ones;
  for (const char* nm : {"v1", "v2", "v3", "v4", "v5"}) ones[var(nm)] = Rational(1);
  CHECK(r.value.evaluate(ones) == Rational(6));  // P(30021) = 6
}

TEST_CASE("weighted trace of the empty word gives the product measures") {
  VarId q = var("q");
  VarId t = var("t"), Q = var("Q");
  DegreeCaps caps{{t, 3}, {Q, 3}};
  OperatorWord empty;
  empty.model = Model::generic;
  empty.n = 2;  // one site
  TraceWeights wA{TraceKind::A, {t}, {Q}};
  FormalSeries got = weighted_trace(empty, wA, caps, q);
  FormalSeries want = q_pochhammer_series(LaurentPoly::variable(t), Q, caps).inverse();
  CHECK(got == want);
  TraceWeights wB{TraceKind::B, {t}, {Q}};
  FormalSeries gotB = weighted_trace(empty, wB, caps, q);
  FormalSeries wantB = q_pochhammer_series(-LaurentPoly::variable(t), Q, caps);
  CHECK(gotB == wantB);
}

TEST_CASE("q0 and generic vacuum expectations agree at q=0 with unit spectral values") {
  VarId q = var("q");
  std::map<VarId, Rational> unit{{var("r1"), 1}, {var("r2"), 1}, {var("r3"), 1}};
  std::map<VarId, LaurentPoly> q0bind{{q, LaurentPoly(0)}};
  for (const char* text : {"X(n=3,i=2,z=r1) X(n=3,i=1,z=r2)",
                           "X(n=3,i=3,z=r1) X(n=3,i=1,z=r2) X(n=3,i=0,z=r3)",
                           "X(n=2,i=1,z=r1) X(n=2,i=1,z=r2)"}) {
    auto w0 = OperatorWord::parse(text, Model::q0);
    auto wg = OperatorWord::parse(text, Model::generic);
    Rational a = vacuum_expectation(w0, q).evaluate(unit);
    Rational b = vacuum_expectation(wg, q).substitute(q0bind).evaluate(unit);
    CHECK(a == b);
  }
}
