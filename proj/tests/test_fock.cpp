#include <doctest.h>

#include "tetralat/error.hpp"
#include "tetralat/fock.hpp"

using namespace tetralat;

TEST_CASE("triangular layout") {
  FockLayout lay(4);
  CHECK(lay.site_count() == 6);
  CHECK(lay.position(1, 1) == 0);
  CHECK(lay.position(1, 3) == 2);
  CHECK(lay.position(3, 1) == 5);
  CHECK(lay.position(2, 3) == -1);  // outside D_4
  CHECK(lay.position(0, 1) == -1);
  FockLayout small(2);
  CHECK(small.site_count() == 1);
}

TEST_CASE("site operator actions") {
  VarId q = var("q");
  using K = SiteOpKind;
  // b- on the vacuum annihilates
  CHECK_FALSE(apply_site_op(K::BMinus, 0, 5, q).has_value());
  // k|2> = q^2 |2>
  auto r = apply_site_op(K::Kdiag, 2, 5, q);
  REQUIRE(r.has_value());
  CHECK(r->first == 2);
  CHECK(r->second == LaurentPoly::variable(q, 2));
  // a-|1> = (1-q^2)|0>
  auto r2 = apply_site_op(K::AMinus, 1, 5, q);
  REQUIRE(r2.has_value());
  CHECK(r2->first == 0);
  CHECK(r2->second == LaurentPoly::parse("1 - q^2"));
  // t projects onto the vacuum
  CHECK(apply_site_op(K::TProj, 0, 5, q).has_value());
  CHECK_FALSE(apply_site_op(K::TProj, 1, 5, q).has_value());
  // hard cutoff on creation
  CHECK_THROWS_AS(apply_site_op(K::BPlus, 5, 5, q), Error);
  CHECK_THROWS_AS(apply_site_op(K::APlus, 3, 3, q), Error);
}

TEST_CASE("pairing") {
  VarId q = var("q");
  CHECK(pairing(3, 3, q, true).is_one());
  for (int m = 0; m <= 5; ++m)
    for (int mp = 0; mp <= 5; ++mp)
      if (m != mp) {
        CHECK(pairing(m, mp, q, false).is_zero());
        CHECK(pairing(m, mp, q, true).is_zero());
      }
  // <2|2> = (q^2;q^2)_2 = (1-q^2)(1-q^4)
  CHECK(pairing(2, 2, q, false) == LaurentPoly::parse("(1-q^2)*(1-q^4)"));
  // q=0 reduces to the Kronecker pairing
  CHECK(pairing(2, 2, q, false).substitute({{q, LaurentPoly(0)}}).is_one());
}

TEST_CASE("oscillator relations hold on the truncated space") {
  VarId q = var("q");
  for (auto model : {OscillatorModel::q0, OscillatorModel::generic}) {
    for (const auto& check : oscillator_relation_check(model, 5, q)) {
      INFO(check.name);
      CHECK(check.ok);
    }
  }
  CHECK_THROWS_AS(oscillator_relation_check(OscillatorModel::q0, 1, q), Error);
}

TEST_CASE("generic site actions degenerate to the q0 actions at q=0") {
  VarId q = var("q");
  std::map<VarId, LaurentPoly> q0{{q, LaurentPoly(0)}};
  using K = SiteOpKind;
  for (int m = 0; m <= 4; ++m) {
    auto ap = apply_site_op(K::APlus, m, 6, q);
    auto bp = apply_site_op(K::BPlus, m, 6, q);
    CHECK(ap->first == bp->first);
    CHECK(ap->second.substitute(q0) == bp->second);
    auto am = apply_site_op(K::AMinus, m, 6, q);
    auto bm = apply_site_op(K::BMinus, m, 6, q);
    CHECK(am.has_value() == bm.has_value());
    if (am) {
      CHECK(am->first == bm->first);
      CHECK(am->second.substitute(q0) == bm->second);
    }
    auto kd = apply_site_op(K::Kdiag, m, 6, q);
    auto tp = apply_site_op(K::TProj, m, 6, q);
    LaurentPoly k_at0 = kd->second.substitute(q0);
    if (tp) {
      CHECK(k_at0 == tp->second);
    } else {
      CHECK(k_at0.is_zero());
    }
  }
}
