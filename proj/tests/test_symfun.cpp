#include <doctest.h>

#include <functional>
#include <random>

#include "tetralat/error.hpp"
#include "tetralat/symfun.hpp"

using namespace tetralat;

namespace {
LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
std::vector<VarId> zs(int n) {
  std::vector<VarId> v;
  for (int i = 1; i <= n; ++i) v.push_back(var_indexed("z", i));
  return v;
}
}  // namespace

TEST_CASE("schur basics") {
  CHECK(schur_bialternant(Partition{}, zs(2)).is_one());
  CHECK(schur_bialternant(Partition{1}, zs(2)) == P("z1 + z2"));
  CHECK(schur_bialternant(Partition{2, 1}, zs(2)) == P("z1^2*z2 + z1*z2^2"));
  CHECK(schur_at_ones(Partition{2}, 3) == Rational(6));
  CHECK(schur_at_ones(Partition{1}, 4) == Rational(4));
  CHECK(schur_at_ones(Partition{2, 1}, 3) == Rational(8));
  // alternant for a non-partition sequence: sorts with a sign or dies
  CHECK(alternant_schur({0, 2}, zs(2)) == -schur_bialternant(Partition{1, 1}, zs(2)));
  CHECK(alternant_schur({1, 2}, zs(2)).is_zero());
}

TEST_CASE("schur symmetry under variable swaps") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 6; ++t) {
    std::vector<int> parts;
    int prev = 4;
    for (int i = 0; i < 3; ++i) {
      prev = static_cast<int>(rng() % (static_cast<unsigned>(prev) + 1));
      parts.push_back(prev);
    }
    std::sort(parts.rbegin(), parts.rend());
    Partition lam(parts);
    auto vars = zs(4);
    LaurentPoly s = schur_bialternant(lam, vars);
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
      CHECK(s.swap_vars(vars[i], vars[i + 1]) == s);
  }
}

TEST_CASE("elementary symmetric polynomials") {
  CHECK(elementary(0, zs(3)).is_one());
  CHECK(elementary(2, zs(3)) == P("z1*z2 + z1*z3 + z2*z3"));
  CHECK(elementary(4, zs(3)).is_zero());
  for (int n = 1; n <= 8; ++n) {
    long binom = 1;
    for (int k = 0; k <= n; ++k) {
      std::map<VarId, Rational> ones;
      for (VarId v : zs(n)) ones[v] = Rational(1);
      CHECK(elementary(k, zs(n)).evaluate(ones) == Rational(binom));
      binom = binom * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("kostka numbers by tableau count") {
  CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka(Partition{2, 1}, {2, 1}) == 1);
  CHECK(kostka(Partition{1, 1}, {2}) == 0);
  CHECK(kostka(Partition{3, 2, 1}, {3, 2, 1}) == 1);
  CHECK(kostka(Partition{2}, {1, 1, 1}) == 0);  // weight mismatch
  // content reordering leaves K invariant
  CHECK(kostka(Partition{2, 1}, {0, 1, 2}) == kostka(Partition{2, 1}, {2, 1, 0}));
}

TEST_CASE("kostka expansion of schur polynomials") {
  for (auto lam : {Partition{2, 1}, Partition{3, 1}, Partition{2, 2}, Partition{4, 2}}) {
    int n = 3;
    auto vars = zs(n);
    LaurentPoly s = schur_bialternant(lam, vars);
    LaurentPoly sum(0);
    long w = lam.weight();
    for (int a1 = 0; a1 <= w; ++a1)
      for (int a2 = 0; a1 + a2 <= w; ++a2) {
        int a3 = static_cast<int>(w) - a1 - a2;
        long k = kostka(lam, {a1, a2, a3});
        if (k == 0) continue;
        Monomial m;
        if (a1) m.emplace_back(vars[0], a1);
        if (a2) m.emplace_back(vars[1], a2);
        if (a3) m.emplace_back(vars[2], a3);
        sum += LaurentPoly::monomial(m, Rational(k));
      }
    CHECK(sum == s);
  }
}

TEST_CASE("factorization under a constant shift") {
  auto vars = zs(3);
  for (auto lam : {Partition{2, 1}, Partition{3, 1, 1}}) {
    for (int c = 1; c <= 2; ++c) {
      std::vector<int> shifted = lam.parts();
      shifted.resize(3, 0);
      for (int& p : shifted) p += c;
      LaurentPoly lhs = schur_bialternant(Partition(shifted), vars);
      LaurentPoly rhs = schur_bialternant(lam, vars);
      for (VarId v : vars) rhs *= LaurentPoly::variable(v, c);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("loop elementary symmetric functions") {
  std::vector<std::vector<VarId>> grid;
  int n = 5, colors = 3;
  for (int i = 1; i <= n; ++i) {
    std::vector<VarId> row;
    for (int c = 1; c <= colors; ++c) row.push_back(var_grid("w", i, c));
    grid.push_back(row);
  }
  CHECK(loop_elementary(0, 1, n, colors, grid).is_one());
  LaurentPoly e1 = loop_elementary(1, 1, 2, colors, grid);
  CHECK(e1 == LaurentPoly::variable(var_grid("w", 1, 1)) + LaurentPoly::variable(var_grid("w", 2, 1)));
  // e_3^{(1)}(z_1..z_5): 10 monomials z_{i1}^{(1)} z_{i2}^{(2)} z_{i3}^{(3)}
  LaurentPoly e3 = loop_elementary(3, 1, 5, colors, grid);
  CHECK(e3.term_count() == 10);
  LaurentPoly probe = LaurentPoly::variable(var_grid("w", 1, 1)) *
                      LaurentPoly::variable(var_grid("w", 3, 2)) *
                      LaurentPoly::variable(var_grid("w", 4, 3));
  CHECK(e3.coeff(probe.terms().begin()->first).is_one());
  // cyclic color wraparound: k exceeding the number of colors reuses them
  LaurentPoly e4 = loop_elementary(4, 2, 5, colors, grid);
  CHECK(e4.term_count() == 5);
}

TEST_CASE("symmetrization formula against the bialternant") {
  std::mt19937_64 rng(9);
  auto sample = [&](int k) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < k) {
      Rational r(2 + static_cast<long>(rng() % 96), 1 + static_cast<long>(rng() % 13));
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
  };
  // single block: no symmetrization
  {
    auto pts = sample(2);
    Rational got = symmetrize_blocks({{2, 3}}, pts);
    CHECK(got == pts[0].pow(3) * pts[1].pow(3));
  }
  // spec example: blocks ((z1),1), ((z2),0) at (2,3) -> s_(1)(2,3) = 5
  CHECK(symmetrize_blocks({{1, 1}, {1, 0}}, {Rational(2), Rational(3)}) == Rational(5));
  // general block specs against the staircase Schur value
  struct Case {
    std::vector<std::pair<int, int>> blocks;
    std::vector<int> parts;
  };
  std::vector<Case> cases = {
      {{{1, 2}, {1, 1}, {1, 0}}, {2, 1, 0}},
      {{{2, 2}, {1, 1}}, {2, 2, 1}},
      {{{1, 3}, {2, 1}}, {3, 1, 1}},
      {{{2, 1}, {2, 0}}, {1, 1, 0, 0}},
  };
  for (const auto& cse : cases) {
    int total = 0;
    for (auto& [sz, e] : cse.blocks) total += sz;
    for (int rep = 0; rep < 3; ++rep) {
      auto pts = sample(total);
      CHECK(symmetrize_blocks(cse.blocks, pts) == schur_eval(cse.parts, pts));
    }
  }
  CHECK_THROWS_AS(symmetrize_blocks({{2, 1}}, {Rational(2), Rational(2)}), Error);
}

TEST_CASE("jacobi-trudi cross-check against the bialternant") {
  auto vars = zs(3);
  for (auto lam : {Partition{2, 1}, Partition{3, 1}, Partition{2, 2, 1}}) {
    int len = lam.length();
    // det(h_{lambda_i + j - i}) over the h-oracle
    std::vector<std::vector<LaurentPoly>> H(static_cast<std::size_t>(len),
                                            std::vector<LaurentPoly>(static_cast<std::size_t>(len)));
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j)
        H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            complete_homogeneous(lam.part(i) + j - i, vars);
    LaurentPoly det(0);
    std::vector<int> perm{0, 1, 2};
    perm.resize(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::function<void(int, int, LaurentPoly)> rec = [&](int depth, int sign, LaurentPoly acc) {
      if (depth == len) {
        det += Rational(sign) * acc;
        return;
      }
      for (int r = depth; r < len; ++r) {
        std::swap(perm[static_cast<std::size_t>(depth)], perm[static_cast<std::size_t>(r)]);
        rec(depth + 1, r == depth ? sign : -sign,
            acc * H[static_cast<std::size_t>(depth)][static_cast<std::size_t>(perm[static_cast<std::size_t>(depth)])]);
        std::swap(perm[static_cast<std::size_t>(depth)], perm[static_cast<std::size_t>(r)]);
      }
    };
    rec(0, 1, LaurentPoly(1));
    CHECK(det == schur_bialternant(lam, vars));
  }
}
