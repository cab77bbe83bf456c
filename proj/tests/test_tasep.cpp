#include <doctest.h>

#include "tetralat/error.hpp"
#include "tetralat/tasep.hpp"

using namespace tetralat;

TEST_CASE("sector enumeration and generator structure") {
  TasepSector sec{3, {2, 1, 1, 1}};
  auto configs = sector_configs(sec);
  CHECK(configs.size() == 60);
  CHECK(std::is_sorted(configs.begin(), configs.end()));
  RationalMatrix H = build_generator(sec);
  CHECK(H.rows == 60);
  // columns sum to zero (probability conservation)
  for (int c = 0; c < H.cols; ++c) {
    Rational s(0);
    for (int r = 0; r < H.rows; ++r) s += H.at(r, c);
    CHECK(s.is_zero());
  }
  // off-diagonal entries in {0,1}
  for (int r = 0; r < H.rows; ++r)
    for (int c = 0; c < H.cols; ++c)
      if (r != c) CHECK((H.at(r, c).is_zero() || H.at(r, c).is_one()));
}

TEST_CASE("two-site single-species chain is uniform") {
  TasepSector sec{1, {1, 1}};
  auto ss = steady_state_kernel(sec);
  CHECK(ss.at({0, 1}) == Rational(1));
  CHECK(ss.at({1, 0}) == Rational(1));
}

TEST_CASE("single-config sector") {
  TasepSector sec{1, {0, 3}};
  auto configs = sector_configs(sec);
  CHECK(configs.size() == 1);
  auto ss = steady_state_kernel(sec);
  CHECK(ss.at({1, 1, 1}) == Rational(1));
}

TEST_CASE("worked three-species example") {
  TasepSector sec{3, {2, 1, 1, 1}};
  auto ss = steady_state_kernel(sec);
  CHECK(ss.at({0, 0, 1, 2, 3}) == Rational(24));
  CHECK(ss.at({0, 1, 2, 0, 3}) == Rational(17));
  CHECK(ss.at({1, 0, 2, 0, 3}) == Rational(7));
  CHECK(ss.at({2, 1, 0, 0, 3}) == Rational(1));
  // translation invariance
  for (const auto& [cfg, v] : ss) {
    TasepConfig rot = cfg;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    CHECK(ss.at(rot) == v);
  }
  // positivity and integrality under the sorted-configuration normalization
  for (const auto& [cfg, v] : ss) {
    CHECK(v.sign() > 0);
    CHECK(v.is_integer());
  }
}

TEST_CASE("trace route agrees with the kernel on a full sector") {
  TasepSector sec{2, {1, 1, 1}};
  auto ss = steady_state_kernel(sec);
  for (const auto& [cfg, v] : ss) CHECK(steady_state_trace(sec, cfg) == v);
}

TEST_CASE("closed forms") {
  CHECK(steady_closed_form(3, 1, 2, {2, 1, 1, 1}) == Rational(6));
  CHECK(steady_closed_form(3, 2, 2, {2, 1, 1, 1}) == Rational(4));
  // k + 1 - j = 0 gives the empty partition
  CHECK(steady_closed_form(2, 2, 1, {1, 1, 1}) == Rational(1));
  CHECK(closed_form_config(3, 1, 2, {2, 1, 1, 1}) == TasepConfig{3, 0, 0, 2, 1});
  CHECK_THROWS_AS(steady_closed_form(3, 3, 1, {1, 1, 1, 1}), Error);
}

TEST_CASE("error paths") {
  TasepSector missing{3, {2, 0, 2, 1}};
  CHECK_THROWS_AS(steady_state_trace(missing, {0, 0, 2, 2, 3}), Error);
  TasepSector sec{2, {1, 1, 1}};
  CHECK_THROWS_AS(steady_state_trace(sec, {0, 0, 1}), Error);  // wrong sector
  TasepSector tiny{1, {1, 0}};
  CHECK_THROWS_AS(sector_configs(tiny), Error);  // single site
}

TEST_CASE("three-way agreement on closed-form configurations") {
  struct Case {
    int n, j, k;
    std::vector<int> sizes;
  };
  std::vector<Case> cases = {
      {2, 1, 1, {1, 1, 1}},     // L=3
      {2, 1, 1, {2, 1, 1}},     // L=4
      {2, 2, 2, {1, 1, 1}},     // L=3, empty partition branch
      {3, 1, 2, {2, 1, 1, 1}},  // L=5
      {3, 2, 2, {2, 1, 1, 1}},  // L=5
      {3, 1, 1, {1, 2, 1, 1}},  // L=5
      {3, 2, 3, {2, 1, 1, 2}},  // L=6
  };
  for (const auto& cse : cases) {
    TasepSector sec;
    sec.species = cse.n;
    sec.counts = cse.sizes;
    TasepConfig cfg = closed_form_config(cse.n, cse.j, cse.k, cse.sizes);
    Rational closed = steady_closed_form(cse.n, cse.j, cse.k, cse.sizes);
    Rational kern = steady_state_kernel(sec).at(cfg);
    Rational trac = steady_state_trace(sec, cfg);
    INFO("n=" << cse.n << " j=" << cse.j << " k=" << cse.k);
    CHECK(kern == closed);
    CHECK(trac == closed);
  }
}
