#include "tetralat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tetralat/error.hpp"
#include "tetralat/pfunc.hpp"
#include "tetralat/qseries.hpp"
#include "tetralat/schubert.hpp"
#include "tetralat/symfun.hpp"
#include "tetralat/tasep.hpp"
#include "tetralat/vertexmodel.hpp"

namespace tetralat::harness {

namespace {

using json = nlohmann::json;

// --------------------------------------------------------------------------
// shared helpers

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  Rational one() {
    long num = 2 + static_cast<long>(rng() % 96);  // [2, 97]
    long den = 1 + static_cast<long>(rng() % 13);  // [1, 13]
    return Rational(num, den);
  }

  std::vector<Rational> distinct(int k) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < k) {
      Rational r = one();
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
  }

  LaurentPoly laurent(const std::vector<VarId>& vars, int terms, int max_abs_exp) {
    LaurentPoly p(0);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (VarId v : vars) {
        int e = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * max_abs_exp + 1)) -
                max_abs_exp;
        if (e != 0) m.emplace_back(v, e);
      }
      std::sort(m.begin(), m.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      long c = static_cast<long>(rng() % 19) - 9;
      if (c == 0) c = 1;
      p += LaurentPoly::monomial(m, Rational(c));
    }
    return p;
  }
};

// all ways to split `values` into ordered blocks of the given sizes
void for_each_split(const std::vector<Rational>& values, const std::vector<int>& sizes,
                    const std::function<void(const std::vector<std::vector<Rational>>&)>& cb) {
  std::vector<std::vector<Rational>> blocks(sizes.size());
  std::vector<bool> used(values.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == sizes.size()) {
      cb(blocks);
      return;
    }
    std::function<void(int, int)> pick = [&](int start, int left) {
      if (left == 0) {
        rec(b + 1);
        return;
      }
      for (int v = start; v < static_cast<int>(values.size()); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        blocks[b].push_back(values[static_cast<std::size_t>(v)]);
        pick(v + 1, left - 1);
        blocks[b].pop_back();
        used[static_cast<std::size_t>(v)] = false;
      }
    };
    pick(0, sizes[b]);
  };
  rec(0);
}

// prod over x in A, y in B of (1 - y/x)
Rational one_minus_ratio(const std::vector<Rational>& A, const std::vector<Rational>& B) {
  Rational p(1);
  for (const auto& x : A)
    for (const auto& y : B) p *= Rational(1) - y / x;
  return p;
}

// prod over x in A, y in B of (x - y)
Rational diff_prod(const std::vector<Rational>& A, const std::vector<Rational>& B) {
  Rational p(1);
  for (const auto& x : A)
    for (const auto& y : B) p *= x - y;
  return p;
}

Rational pow_prod(const std::vector<Rational>& A, long e) {
  Rational p(1);
  for (const auto& x : A) p *= x.pow(e);
  return p;
}

// symbolic application of an X word to a state map
StateMap apply_x_word(int n, Model model, const std::vector<std::pair<int, VarId>>& factors,
                      const StateMap& in, int cutoff, VarId q, const LatticeOptions& opts) {
  StateMap cur = in;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    LatticeOperator op = build_x_operator(n, it->first, it->second, model, q, opts);
    StateMap next;
    for (const auto& [s, c] : cur)
      for (auto& [t, w] : op.apply(s, cutoff, q)) next[t] += c * w;
    for (auto jt = next.begin(); jt != next.end();) {
      if (jt->second.is_zero())
        jt = next.erase(jt);
      else
        ++jt;
    }
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly vacuum_coeff(const StateMap& m, int sites) {
  OccupationState vac(static_cast<std::size_t>(sites), 0);
  auto it = m.find(vac);
  return it == m.end() ? LaurentPoly(0) : it->second;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

CheckResult make_result(const std::string& name, const std::string& params,
                        const std::string& mode, bool pass, bool evidence,
                        const std::string& detail) {
  CheckResult r;
  r.name = name;
  r.params = params;
  r.mode = mode;
  r.pass = pass;
  r.evidence_only = evidence;
  r.detail = detail;
  return r;
}

// --------------------------------------------------------------------------
// individual checks

CheckResult check_zf_relations(const CheckContext& ctx) {
  VarId x = var("x"), y = var("y"), q = var("q");
  std::string fail_detail;
  bool ok = true;
  for (int n = 2; n <= 4 && ok; ++n) {
    FockLayout lay(n);
    auto states = states_up_to(lay.site_count(), 1);
    int M = 4;
    for (int i = 0; i <= n && ok; ++i) {
      for (int j = 0; j <= n && ok; ++j) {
        for (const auto& s : states) {
          StateMap s0{{s, LaurentPoly(1)}};
          StateMap lhs = apply_x_word(n, Model::q0, {{i, x}, {j, y}}, s0, M, q, {});
          StateMap rhs;
          if (i < j) {
            rhs = apply_x_word(n, Model::q0, {{i, y}, {j, x}}, s0, M, q, {});
            StateMap extra = apply_x_word(n, Model::q0, {{j, y}, {i, x}}, s0, M, q, {});
            LaurentPoly c =
                LaurentPoly(1) - LaurentPoly::variable(x) * LaurentPoly::variable(y, -1);
            for (auto& [t, w] : extra) rhs[t] += c * w;
          } else if (i == j) {
            rhs = apply_x_word(n, Model::q0, {{i, y}, {j, x}}, s0, M, q, {});
          } else {
            StateMap base = apply_x_word(n, Model::q0, {{i, y}, {j, x}}, s0, M, q, {});
            LaurentPoly c = LaurentPoly::variable(x) * LaurentPoly::variable(y, -1);
            for (auto& [t, w] : base) rhs[t] += c * w;
          }
          for (auto it = rhs.begin(); it != rhs.end();) {
            if (it->second.is_zero())
              it = rhs.erase(it);
            else
              ++it;
          }
          if (lhs != rhs) {
            ok = false;
            fail_detail = "n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) + "," +
                          std::to_string(j) + ")";
            break;
          }
        }
      }
    }
  }
  (void)ctx;
  return make_result("zf_relations", "n<=4, all (i,j), states occ<=1, symbolic in x,y",
                     "symbolic", ok, false, ok ? "all three exchange cases hold" : fail_detail);
}

CheckResult check_multi_comm(const CheckContext& ctx) {
  VarId q = var("q");
  Sampler smp(ctx.seed);
  struct Case {
    int n;
    std::vector<int> idx;    // strictly decreasing i_1 > ... > i_m
    std::vector<int> sizes;  // block sizes
  };
  std::vector<Case> cases = {{3, {2, 1}, {2, 1}}, {3, {3, 1, 0}, {1, 1, 1}}, {4, {3, 2}, {2, 2}}};
  bool ok = true;
  std::string detail;
  for (const auto& cse : cases) {
    int m = static_cast<int>(cse.idx.size());
    int total = 0;
    for (int s : cse.sizes) total += s;
    FockLayout lay(cse.n);
    auto states = states_up_to(lay.site_count(), 1);
    int M = total + 3;
    for (int sample = 0; sample < 3 && ok; ++sample) {
      auto values = smp.distinct(total);
      // symbolic word variables, bound to the sampled points at the end
      std::vector<std::pair<int, VarId>> fw;
      std::map<VarId, Rational> bind;
      {
        int vpos = 0;
        for (int k = 0; k < m; ++k)
          for (int c = 0; c < cse.sizes[static_cast<std::size_t>(k)]; ++c) {
            VarId v = var_indexed("mc_z", ++vpos);
            fw.emplace_back(cse.idx[static_cast<std::size_t>(k)], v);
            bind[v] = values[static_cast<std::size_t>(vpos - 1)];
          }
      }
      // block values in word order
      std::vector<std::vector<Rational>> zblocks;
      {
        int vpos = 0;
        for (int k = 0; k < m; ++k) {
          std::vector<Rational> blk;
          for (int c = 0; c < cse.sizes[static_cast<std::size_t>(k)]; ++c)
            blk.push_back(values[static_cast<std::size_t>(vpos++)]);
          zblocks.push_back(blk);
        }
      }
      Rational lhs_scale(1);
      for (int k = 0; k < m; ++k) lhs_scale *= pow_prod(zblocks[static_cast<std::size_t>(k)], m - 1 - k);

      for (const auto& s : states) {
        StateMap s0{{s, LaurentPoly(1)}};
        StateMap lhs_sym = apply_x_word(cse.n, Model::q0, fw, s0, M, q, {});
        std::map<OccupationState, Rational> lhs;
        for (auto& [t, c] : lhs_sym) {
          Rational v = c.evaluate(bind) / lhs_scale;
          if (!v.is_zero()) lhs[t] = v;
        }
        std::map<OccupationState, Rational> rhs;
        for_each_split(values, cse.sizes, [&](const std::vector<std::vector<Rational>>& w) {
          Rational denom(1);
          for (int k = 0; k < m; ++k) denom *= pow_prod(w[static_cast<std::size_t>(k)], m - 1 - k);
          for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
              denom *= one_minus_ratio(w[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(k)]);
          // reversed word: X_{i_m}(w_m) ... X_{i_1}(w_1)
          std::vector<std::pair<int, VarId>> rw;
          std::map<VarId, Rational> rbind;
          int vpos = 0;
          for (int k = m - 1; k >= 0; --k)
            for (const auto& val : w[static_cast<std::size_t>(k)]) {
              VarId v = var_indexed("mc_w", ++vpos);
              rw.emplace_back(cse.idx[static_cast<std::size_t>(k)], v);
              rbind[v] = val;
            }
          StateMap rhs_sym = apply_x_word(cse.n, Model::q0, rw, s0, M, q, {});
          for (auto& [t, c] : rhs_sym) {
            Rational v = c.evaluate(rbind) / denom;
            if (!v.is_zero()) rhs[t] += v;
          }
        });
        for (auto it = rhs.begin(); it != rhs.end();) {
          if (it->second.is_zero())
            it = rhs.erase(it);
          else
            ++it;
        }
        if (lhs != rhs) {
          ok = false;
          detail = "n=" + std::to_string(cse.n) + " idx=(" + join_ints(cse.idx) + ")";
          break;
        }
      }
    }
  }
  return make_result("multi_comm",
                     "n<=4, decreasing words, blocks<=2, 3 rational samples, states occ<=1",
                     "point-eval", ok, false, ok ? "commutation relation holds" : detail);
}

// staircase partition from decreasing indices and block sizes
std::vector<int> staircase_parts(const std::vector<int>& idx, const std::vector<int>& sizes) {
  int m = static_cast<int>(idx.size());
  std::vector<int> parts;
  for (int k = 0; k < m; ++k)
    parts.insert(parts.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(k)]),
                 idx[static_cast<std::size_t>(k)] - m + 1 + k);
  return parts;
}

CheckResult check_schur_corr(const CheckContext& ctx) {
  (void)ctx;
  VarId q = var("q");
  bool ok = true;
  std::string detail;
  int cases = 0;
  for (int n = 2; n <= 4 && ok; ++n) {
    // strictly decreasing index words of length m <= 3 over 0..n
    std::vector<std::vector<int>> words;
    for (int a = n; a >= 0; --a) {
      words.push_back({a});
      for (int b = a - 1; b >= 0; --b) {
        words.push_back({a, b});
        for (int c = b - 1; c >= 0; --c) words.push_back({a, b, c});
      }
    }
    for (const auto& idx : words) {
      int m = static_cast<int>(idx.size());
      std::vector<std::vector<int>> size_combos;
      std::function<void(std::vector<int>&)> gen = [&](std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) == m) {
          int tot = 0;
          for (int s : cur) tot += s;
          if (tot <= 6) size_combos.push_back(cur);
          return;
        }
        for (int s = 1; s <= 2; ++s) {
          cur.push_back(s);
          gen(cur);
          cur.pop_back();
        }
      };
      std::vector<int> tmp;
      gen(tmp);
      for (const auto& sizes : size_combos) {
        ++cases;
        std::vector<std::pair<int, VarId>> fw;
        std::vector<VarId> all_vars;
        std::vector<std::vector<VarId>> blocks;
        int vpos = 0;
        for (int k = 0; k < m; ++k) {
          std::vector<VarId> blk;
          for (int c = 0; c < sizes[static_cast<std::size_t>(k)]; ++c) {
            VarId v = var_indexed("sc_z", ++vpos);
            fw.emplace_back(idx[static_cast<std::size_t>(k)], v);
            blk.push_back(v);
            all_vars.push_back(v);
          }
          blocks.push_back(blk);
        }
        OperatorWord word;
        word.model = Model::q0;
        word.n = n;
        for (auto& [i, z] : fw) word.factors.push_back(XFactor{i, z});
        LaurentPoly lhs = vacuum_expectation(word, q);
        LaurentPoly rhs = alternant_schur(staircase_parts(idx, sizes), all_vars);
        for (int k = 0; k < m; ++k)
          for (VarId v : blocks[static_cast<std::size_t>(k)])
            rhs *= LaurentPoly::variable(v, m - 1 - k);
        if (lhs != rhs) {
          ok = false;
          detail = "n=" + std::to_string(n) + " idx=(" + join_ints(idx) + ") sizes=(" +
                   join_ints(sizes) + ")";
          break;
        }
      }
      if (!ok) break;
    }
  }
  return make_result("schur_corr",
                     "n<=4, strictly decreasing words m<=3, block sizes<=2 (total vars<=6), " +
                         std::to_string(cases) + " cases",
                     "symbolic", ok, false,
                     ok ? "lattice expectation equals staircase Schur" : detail);
}

CheckResult check_tensor_schur(const CheckContext& ctx) {
  (void)ctx;
  VarId q = var("q");
  bool ok = true;
  std::string detail;

  struct Group {  // one (m_i; n_i) group of the product
    std::vector<int> m_idx;             // decreasing
    std::vector<int> m_sizes;           // z block sizes
    std::vector<int> n_idx;             // increasing
  };
  struct Case {
    int n;
    std::vector<Group> groups;
  };
  std::vector<Case> cases = {
      {4, {Group{{3, 1}, {1, 1}, {}}}},
      {4, {Group{{3, 1}, {2, 1}, {}}}},
      {4, {Group{{2, 1}, {1, 1}, {3, 4}}}},
      {3, {Group{{2, 0}, {1, 2}, {3}}}},
      {4, {Group{{1}, {1}, {2}}, Group{{3}, {1}, {4}}}},  // p = 2
  };

  for (const auto& cse : cases) {
    std::vector<std::pair<int, VarId>> fw;
    LaurentPoly rhs(1);
    int vz = 0, vw = 0;
    for (const auto& g : cse.groups) {
      int k_i = static_cast<int>(g.m_idx.size());
      std::vector<VarId> zvars_all;
      std::vector<std::vector<VarId>> zblocks;
      for (int j = 0; j < k_i; ++j) {
        std::vector<VarId> blk;
        for (int c = 0; c < g.m_sizes[static_cast<std::size_t>(j)]; ++c) {
          VarId v = var_indexed("ts_z", ++vz);
          fw.emplace_back(g.m_idx[static_cast<std::size_t>(j)], v);
          blk.push_back(v);
          zvars_all.push_back(v);
        }
        zblocks.push_back(blk);
      }
      for (std::size_t j = 0; j < g.n_idx.size(); ++j) {
        VarId v = var_indexed("ts_w", ++vw);
        fw.emplace_back(g.n_idx[j], v);
        rhs *= LaurentPoly::variable(v, g.n_idx[j]);
      }
      if (k_i > 0) {
        rhs *= alternant_schur(staircase_parts(g.m_idx, g.m_sizes), zvars_all);
        for (int j = 0; j < k_i; ++j)
          for (VarId v : zblocks[static_cast<std::size_t>(j)])
            rhs *= LaurentPoly::variable(v, k_i - 1 - j);
      }
    }
    OperatorWord word;
    word.model = Model::q0;
    word.n = cse.n;
    for (auto& [i, z] : fw) word.factors.push_back(XFactor{i, z});
    LaurentPoly lhs = vacuum_expectation(word, q);
    if (lhs != rhs) {
      ok = false;
      detail = "case with n=" + std::to_string(cse.n);
      break;
    }
  }
  return make_result("tensor_schur", "p<=2 groups, n<=4, blocks<=2", "symbolic", ok, false,
                     ok ? "mixed words factor into tensor Schur polynomials" : detail);
}

CheckResult check_shuffle_jlp(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 5);
  struct Case {
    std::vector<int> m1, s1;  // decreasing indices and sizes, group 1
    std::vector<int> m2, s2;  // group 2
  };
  std::vector<Case> cases = {
      {{1}, {1}, {2}, {1}},
      {{2}, {2}, {3}, {1}},
      {{2, 1}, {1, 1}, {3}, {1}},
      {{3}, {2}, {3, 2}, {1, 1}},
      {{3, 1}, {1, 2}, {4}, {1}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& cse : cases) {
    int k1 = static_cast<int>(cse.m1.size());
    int k2 = static_cast<int>(cse.m2.size());
    int z1 = 0, z2 = 0;
    for (int s : cse.s1) z1 += s;
    for (int s : cse.s2) z2 += s;
    // LHS staircase sequence over (z1, z2)
    std::vector<int> lhs_seq;
    for (int j = 0; j < k2; ++j)
      lhs_seq.insert(lhs_seq.end(), static_cast<std::size_t>(cse.s2[static_cast<std::size_t>(j)]),
                     cse.m2[static_cast<std::size_t>(j)] - k1 - k2 + 1 + j);
    for (int j = 0; j < k1; ++j)
      lhs_seq.insert(lhs_seq.end(), static_cast<std::size_t>(cse.s1[static_cast<std::size_t>(j)]),
                     cse.m1[static_cast<std::size_t>(j)] - k1 + 1 + j);
    std::vector<int> rhs1_seq = staircase_parts(cse.m1, cse.s1);
    std::vector<int> rhs2_seq;
    for (int j = 0; j < k2; ++j)
      rhs2_seq.insert(rhs2_seq.end(), static_cast<std::size_t>(cse.s2[static_cast<std::size_t>(j)]),
                      cse.m2[static_cast<std::size_t>(j)] + z1 - k1 - k2 + 1 + j);

    for (int sample = 0; sample < 3 && ok; ++sample) {
      auto vals = smp.distinct(z1 + z2);
      Rational lhs = schur_eval(lhs_seq, vals);
      Rational rhs(0);
      for_each_split(vals, {z1, z2}, [&](const std::vector<std::vector<Rational>>& w) {
        Rational den = diff_prod(w[1], w[0]);  // (w2 - w1)
        rhs += schur_eval(rhs1_seq, w[0]) * schur_eval(rhs2_seq, w[1]) / den;
      });
      if (lhs != rhs) {
        ok = false;
        detail = "m1=(" + join_ints(cse.m1) + ") m2=(" + join_ints(cse.m2) + ") sample " +
                 std::to_string(sample);
      }
    }
  }
  return make_result("shuffle_jlp", "5 parameter sets, <=6 variables, 3 rational samples",
                     "point-eval", ok, false, ok ? "shuffle formula holds" : detail);
}

CheckResult check_fnr(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 6);
  struct Case {
    int n;
    std::vector<int> tail_idx;  // i_2 > ... > i_m
    std::vector<int> sizes;     // |z_1|, ..., |z_m|
  };
  std::vector<Case> cases = {
      {3, {1}, {1, 2}}, {4, {2}, {2, 2}}, {4, {2, 0}, {1, 1, 2}}, {5, {0}, {2, 1}},
      {4, {3, 1}, {2, 1, 1}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& cse : cases) {
    int m = 1 + static_cast<int>(cse.tail_idx.size());
    std::vector<int> full_idx = {cse.n};
    full_idx.insert(full_idx.end(), cse.tail_idx.begin(), cse.tail_idx.end());
    std::vector<int> lhs_seq = staircase_parts(full_idx, cse.sizes);
    // RHS tail staircase over w_{[2,m]}
    std::vector<int> tail_sizes(cse.sizes.begin() + 1, cse.sizes.end());
    std::vector<int> tail_seq;
    for (int k = 0; k < m - 1; ++k)
      tail_seq.insert(tail_seq.end(),
                      static_cast<std::size_t>(tail_sizes[static_cast<std::size_t>(k)]),
                      cse.tail_idx[static_cast<std::size_t>(k)] - m + 2 + k);
    int z1 = cse.sizes[0];
    int zrest = 0;
    for (int k = 1; k < m; ++k) zrest += cse.sizes[static_cast<std::size_t>(k)];
    for (int sample = 0; sample < 3 && ok; ++sample) {
      auto vals = smp.distinct(z1 + zrest);
      Rational lhs = schur_eval(lhs_seq, vals);
      Rational rhs(0);
      for_each_split(vals, {z1, zrest}, [&](const std::vector<std::vector<Rational>>& w) {
        Rational num = schur_eval(tail_seq, w[1]) * pow_prod(w[0], cse.n + 1 - m + zrest);
        rhs += num / diff_prod(w[0], w[1]);
      });
      if (lhs != rhs) {
        ok = false;
        detail = "n=" + std::to_string(cse.n) + " tail=(" + join_ints(cse.tail_idx) + ")";
      }
    }
  }
  return make_result("fnr", "5 parameter sets, <=6 variables, 3 rational samples", "point-eval",
                     ok, false, ok ? "subset expansion holds" : detail);
}

CheckResult check_gm(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 7);
  struct Case {
    int n;
    std::vector<int> idx;    // i_1 > ... > i_{m-1} > 0
    std::vector<int> sizes;  // |z_1|..|z_{m-1}|, |z_m|
  };
  std::vector<Case> cases = {
      {3, {2}, {2, 1}}, {4, {3}, {2, 2}}, {4, {3, 1}, {1, 1, 2}}, {5, {2}, {1, 2}},
      {4, {2, 1}, {2, 1, 1}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& cse : cases) {
    int m = 1 + static_cast<int>(cse.idx.size());
    std::vector<int> head_sizes(cse.sizes.begin(), cse.sizes.end() - 1);
    int zm = cse.sizes.back();
    int zhead = 0;
    for (int s : head_sizes) zhead += s;
    // LHS over all variables: parts (i_k - m + 1 + k)^{size_k}, zeros for z_m
    std::vector<int> lhs_seq;
    for (int k = 0; k < m - 1; ++k)
      lhs_seq.insert(lhs_seq.end(),
                     static_cast<std::size_t>(head_sizes[static_cast<std::size_t>(k)]),
                     cse.idx[static_cast<std::size_t>(k)] - m + 1 + k);
    std::vector<int> rhs_seq;
    for (int k = 0; k < m - 1; ++k)
      rhs_seq.insert(rhs_seq.end(),
                     static_cast<std::size_t>(head_sizes[static_cast<std::size_t>(k)]),
                     cse.idx[static_cast<std::size_t>(k)] - m + 1 + k + zm);
    for (int sample = 0; sample < 3 && ok; ++sample) {
      auto vals = smp.distinct(zhead + zm);
      Rational lhs = schur_eval(lhs_seq, vals);
      Rational rhs(0);
      for_each_split(vals, {zhead, zm}, [&](const std::vector<std::vector<Rational>>& w) {
        rhs += schur_eval(rhs_seq, w[0]) / diff_prod(w[0], w[1]);
      });
      if (lhs != rhs) {
        ok = false;
        detail = "n=" + std::to_string(cse.n) + " idx=(" + join_ints(cse.idx) + ")";
      }
    }
  }
  return make_result("gm", "5 parameter sets, <=6 variables, 3 rational samples", "point-eval",
                     ok, false, ok ? "complementary-subset expansion holds" : detail);
}

CheckResult check_unified(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 8);
  struct Case {
    int n;
    std::vector<int> mid_idx;  // i_2 > ... > i_{m-1} > 0
    std::vector<int> sizes;    // |z_1|, mid sizes..., |z_m|
  };
  std::vector<Case> cases = {
      {3, {1}, {1, 1, 1}}, {4, {2}, {2, 1, 1}}, {4, {1}, {1, 2, 1}}, {4, {2, 1}, {1, 1, 1, 1}},
      {5, {3, 1}, {1, 1, 1, 2}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& cse : cases) {
    int m = 2 + static_cast<int>(cse.mid_idx.size());
    int z1 = cse.sizes.front(), zm = cse.sizes.back();
    std::vector<int> mid_sizes(cse.sizes.begin() + 1, cse.sizes.end() - 1);
    int zmid = 0;
    for (int s : mid_sizes) zmid += s;
    std::vector<int> lhs_seq(static_cast<std::size_t>(z1), cse.n - m + 1);
    for (int k = 0; k < m - 2; ++k)
      lhs_seq.insert(lhs_seq.end(), static_cast<std::size_t>(mid_sizes[static_cast<std::size_t>(k)]),
                     cse.mid_idx[static_cast<std::size_t>(k)] - m + 2 + k);
    std::vector<int> rhs_seq;
    for (int k = 0; k < m - 2; ++k)
      rhs_seq.insert(rhs_seq.end(), static_cast<std::size_t>(mid_sizes[static_cast<std::size_t>(k)]),
                     cse.mid_idx[static_cast<std::size_t>(k)] - m + 3 + k);
    for (int sample = 0; sample < 3 && ok; ++sample) {
      auto vals = smp.distinct(z1 + zmid + zm);
      Rational lhs = schur_eval(lhs_seq, vals);
      Rational rhs(0);
      for_each_split(vals, {z1, zmid, zm}, [&](const std::vector<std::vector<Rational>>& w) {
        Rational den = one_minus_ratio(w[0], w[1]) * one_minus_ratio(w[0], w[2]) *
                       one_minus_ratio(w[1], w[2]);
        Rational num = pow_prod(w[0], cse.n + 1 - m) / pow_prod(w[1], 1);
        rhs += num * schur_eval(rhs_seq, w[1]) / den;
      });
      if (lhs != rhs) {
        ok = false;
        detail = "n=" + std::to_string(cse.n) + " mid=(" + join_ints(cse.mid_idx) + ")";
      }
    }
  }
  return make_result("unified", "5 parameter sets, m>=3, <=6 variables, 3 rational samples",
                     "point-eval", ok, false, ok ? "unified identity holds" : detail);
}

CheckResult check_kostka_3d(const CheckContext& ctx) {
  (void)ctx;
  VarId q = var("q");
  bool ok = true;
  std::string detail;
  int cases = 0;
  for (int m = 1; m <= 3 && ok; ++m) {
    // partitions with |lambda| <= 5 and length <= m (trailing zeros allowed)
    std::vector<std::vector<int>> lambdas;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    std::function<void(int, int, int)> gen = [&](int pos, int maxpart, int left) {
      if (pos == m) {
        lambdas.push_back(cur);
        return;
      }
      for (int p = 0; p <= std::min(maxpart, left); ++p) {
        cur[static_cast<std::size_t>(pos)] = p;
        gen(pos + 1, p, left - p);
      }
    };
    gen(0, 5, 5);
    for (const auto& lam_raw : lambdas) {
      Partition lam(lam_raw);
      long w = lam.weight();
      std::vector<std::vector<int>> alphas;
      std::vector<int> alpha(static_cast<std::size_t>(m), 0);
      std::function<void(int, int)> comp = [&](int pos, int left) {
        if (pos == m - 1) {
          alpha[static_cast<std::size_t>(pos)] = left;
          alphas.push_back(alpha);
          return;
        }
        for (int a = 0; a <= left; ++a) {
          alpha[static_cast<std::size_t>(pos)] = a;
          comp(pos + 1, left - a);
        }
      };
      comp(0, static_cast<int>(w));
      for (const auto& al : alphas) {
        int n = std::max(lam.part(0) + m - 1, 1);
        OperatorWord word;
        word.model = Model::q0;
        word.n = n;
        bool skip = false;
        for (int k = 0; k < m; ++k) {
          int i_idx = lam.part(k) + m - 1 - k;
          int j_idx = al[static_cast<std::size_t>(k)] + m - 1 - k;
          if (j_idx < 0 || j_idx > n || i_idx < 0 || i_idx > n) skip = true;
          word.factors.push_back(XijFactor{i_idx, j_idx});
        }
        if (skip) continue;
        ++cases;
        LaurentPoly lhs = vacuum_expectation(word, q);
        long rhs = kostka(lam, al);
        if (lhs != LaurentPoly(Rational(rhs))) {
          ok = false;
          detail = "m=" + std::to_string(m) + " lambda=" + lam.to_string() + " alpha=(" +
                   join_ints(al) + ")";
          break;
        }
      }
      if (!ok) break;
    }
  }
  return make_result("kostka_3d",
                     "|lambda|<=5, m<=3, all contents (" + std::to_string(cases) + " cases)",
                     "symbolic", ok, false,
                     ok ? "lattice matrix elements count tableaux" : detail);
}

CheckResult check_trace_fact(const CheckContext& ctx) {
  (void)ctx;
  VarId q = var("q");
  bool ok = true;
  std::string detail;
  struct Case {
    int n;
    std::vector<int> sizes;  // |z_0|, ..., |z_n|
  };
  std::vector<Case> cases = {{2, {1, 2, 1}}, {3, {1, 1, 1, 1}}, {3, {2, 1, 1, 1}}};
  for (const auto& cse : cases) {
    OperatorWord word;
    word.model = Model::q0;
    word.n = cse.n;
    LaurentPoly want(1);
    int vpos = 0;
    for (int j = cse.n; j >= 0; --j)
      for (int c = 0; c < cse.sizes[static_cast<std::size_t>(j)]; ++c) {
        VarId v = var_indexed("tf_z", ++vpos);
        word.factors.push_back(XFactor{j, v});
        want *= LaurentPoly::variable(v, j);
      }
    TraceResult tr = plain_trace(word, 0, cse.n + 4, q);
    if (tr.value != want) {
      ok = false;
      detail = "n=" + std::to_string(cse.n) + " got " + tr.value.to_string();
      break;
    }
    // cyclicity: rotate the word
    OperatorWord rot = word;
    std::rotate(rot.factors.begin(), rot.factors.begin() + 1, rot.factors.end());
    TraceResult tr2 = plain_trace(rot, 0, cse.n + 4, q);
    if (tr2.value != tr.value) {
      ok = false;
      detail = "cyclic rotation changed the trace, n=" + std::to_string(cse.n);
      break;
    }
  }
  return make_result("trace_fact", "n<=3, descending full words with blocks, symbolic",
                     "symbolic", ok, false, ok ? "trace factorizes and is cyclic" : detail);
}

CheckResult check_tasep_probgen(const CheckContext& ctx) {
  (void)ctx;
  VarId q = var("q");
  bool ok = true;
  std::string detail;
  struct Case {
    int n, j, k;
    std::vector<int> sizes;  // a_0..a_n
  };
  std::vector<Case> cases = {{3, 1, 2, {2, 1, 1, 1}}, {3, 2, 2, {2, 1, 1, 1}},
                             {2, 1, 1, {1, 1, 1}}};
  for (const auto& cse : cases) {
    // word: X_n .. X_{k+1}, X_{j-1} .. X_0, X_k .. X_j
    OperatorWord word;
    word.model = Model::q0;
    word.n = cse.n;
    std::map<int, std::vector<VarId>> zvars;
    int vpos = 0;
    auto push_range = [&](int from, int to) {  // descending from..to
      for (int s = from; s >= to; --s)
        for (int c = 0; c < cse.sizes[static_cast<std::size_t>(s)]; ++c) {
          VarId v = var_indexed("tp_z", ++vpos);
          word.factors.push_back(XFactor{s, v});
          zvars[s].push_back(v);
        }
    };
    push_range(cse.n, cse.k + 1);
    push_range(cse.j - 1, 0);
    push_range(cse.k, cse.j);

    LaurentPoly want(1);
    for (int l = cse.k + 1; l <= cse.n; ++l)
      for (VarId v : zvars[l]) want *= LaurentPoly::variable(v, l + cse.j - cse.k - 1);
    for (int l = 0; l <= cse.k; ++l)
      for (VarId v : zvars[l]) want *= LaurentPoly::variable(v, l);
    std::vector<VarId> schur_vars;
    for (int l = 0; l <= cse.j - 1; ++l)
      for (VarId v : zvars[l]) schur_vars.push_back(v);
    int high = 0;
    for (int l = cse.k + 1; l <= cse.n; ++l)
      for (VarId v : zvars[l]) {
        schur_vars.push_back(v);
        ++high;
      }
    std::vector<int> parts(static_cast<std::size_t>(high), cse.k + 1 - cse.j);
    want *= alternant_schur(parts, schur_vars);

    TraceResult tr = plain_trace(word, 0, cse.n + 5, q);
    if (tr.value != want) {
      ok = false;
      detail = "n=" + std::to_string(cse.n) + " j=" + std::to_string(cse.j) +
               " k=" + std::to_string(cse.k);
      break;
    }
  }
  return make_result("tasep_probgen", "n<=3, spectral traces vs staircase Schur, symbolic",
                     "symbolic", ok, false, ok ? "spectral trace matches closed form" : detail);
}

CheckResult check_tasep_example(const CheckContext& ctx) {
  (void)ctx;
  TasepSector sec{3, {2, 1, 1, 1}};
  auto ss = steady_state_kernel(sec);
  struct E {
    const char* cfg;
    long val;
  };
  const E expected[] = {{"00123", 24}, {"00213", 6}, {"01023", 12}, {"01203", 17},
                        {"02013", 8},  {"02103", 3}, {"10023", 4},  {"10203", 7},
                        {"12003", 9},  {"20013", 6}, {"20103", 3},  {"21003", 1}};
  bool ok = true;
  std::string detail;
  for (const auto& e : expected) {
    TasepConfig c;
    for (const char* p = e.cfg; *p; ++p) c.push_back(*p - '0');
    if (ss.at(c) != Rational(e.val)) {
      ok = false;
      detail = std::string("kernel value for ") + e.cfg;
    }
  }
  // positivity and integrality of the whole normalized vector
  for (const auto& [cfg, v] : ss) {
    if (v.sign() <= 0 || !v.is_integer()) {
      ok = false;
      detail = "vector entry for " + config_to_string(cfg) + " = " + v.to_string();
    }
  }
  // cyclic invariance
  for (const auto& [cfg, v] : ss) {
    TasepConfig rot = cfg;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (ss.at(rot) != v) {
      ok = false;
      detail = "rotation symmetry broken at " + config_to_string(cfg);
    }
  }
  // independent trace route and closed forms
  if (steady_state_trace(sec, {3, 0, 0, 2, 1}) != Rational(6)) ok = false;
  if (steady_state_trace(sec, {3, 1, 0, 0, 2}) != Rational(4)) ok = false;
  if (steady_closed_form(3, 1, 2, {2, 1, 1, 1}) != Rational(6)) ok = false;
  if (steady_closed_form(3, 2, 2, {2, 1, 1, 1}) != Rational(4)) ok = false;
  return make_result("tasep_example",
                     "n=3, L=5, sector (2,1,1,1): kernel vs paper vector, trace, closed form",
                     "symbolic", ok, false,
                     ok ? "12 coefficients, positivity, integrality, cyclicity, trace route"
                        : detail);
}

CheckResult check_mock_schubert(const CheckContext& ctx) {
  (void)ctx;
  VarId q = var("q");
  bool ok = true;
  std::string detail;
  for (int m = 2; m <= 3 && ok; ++m) {
    int n = 2 * m - 2;  // minimal rank admitting indices 2(w-1) <= 2(m-1)
    std::vector<int> base(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) base[static_cast<std::size_t>(i)] = i + 1;
    std::sort(base.begin(), base.end());
    do {
      Permutation w(base);
      // word X_{2(w(m)-1)}(z_m) ... X_{2(w(1)-1)}(z_1)
      OperatorWord word;
      word.model = Model::q0;
      word.n = n;
      for (int pos = m; pos >= 1; --pos)
        word.factors.push_back(XFactor{2 * (w(pos) - 1), var_indexed("z", pos)});
      LaurentPoly lhs = vacuum_expectation(word, q);
      LaurentPoly rhs = schubert_poly(w, true);
      for (int k = 1; k <= m; ++k) rhs *= LaurentPoly::variable(var_indexed("z", k), m - k);
      if (lhs != rhs) {
        ok = false;
        detail = "w=" + w.to_string() + " n=" + std::to_string(n);
      }
    } while (std::next_permutation(base.begin(), base.end()) && ok);
  }
  return make_result("mock_schubert", "m=2 (n=2) and m=3 (n=4), all w in S_m", "symbolic", ok,
                     false, ok ? "partition functions realize modified Schubert polynomials" : detail);
}

CheckResult check_dd_braid(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 11);
  bool ok = true;
  for (int nv = 3; nv <= 4 && ok; ++nv) {
    auto vars = z_vars(nv);
    for (int trial = 0; trial < 4 && ok; ++trial) {
      LaurentPoly f = smp.laurent(vars, 4, 2);
      for (int i = 1; i + 1 < nv + 1 && i + 1 <= nv - 1; ++i) {
        LaurentPoly lhs = apply_dd_word({i, i + 1, i}, true, f, vars);
        LaurentPoly rhs = apply_dd_word({i + 1, i, i + 1}, true, f, vars);
        if (lhs != rhs) ok = false;
      }
    }
  }
  return make_result("dd_braid", "3..4 variables, 4 random Laurent samples each", "symbolic", ok,
                     false, ok ? "braid relation holds" : "braid relation failed");
}

CheckResult check_dd_idem(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 12);
  bool ok = true;
  auto vars = z_vars(3);
  for (int trial = 0; trial < 6 && ok; ++trial) {
    LaurentPoly f = smp.laurent(vars, 4, 2);
    for (int i = 1; i <= 2; ++i) {
      LaurentPoly d = modified_divided_difference(i, f, vars);
      LaurentPoly dd = modified_divided_difference(i, d, vars);
      if (dd != -d) ok = false;
    }
  }
  return make_result("dd_idem", "3 variables, 6 random samples", "symbolic", ok, false,
                     ok ? "D_i^2 = -D_i" : "idempotent-type relation failed");
}

CheckResult check_dd_leibniz(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 13);
  bool ok = true;
  auto vars = z_vars(3);
  for (int trial = 0; trial < 5 && ok; ++trial) {
    LaurentPoly f = smp.laurent(vars, 3, 2);
    LaurentPoly g = smp.laurent(vars, 3, 2);
    for (int i = 1; i <= 2; ++i) {
      VarId zi = vars[static_cast<std::size_t>(i - 1)], zi1 = vars[static_cast<std::size_t>(i)];
      LaurentPoly lhs = modified_divided_difference(i, f * g, vars);
      LaurentPoly rhs = LaurentPoly::variable(zi1) * divided_difference(i, f, vars) * g +
                        f.swap_vars(zi, zi1) * modified_divided_difference(i, g, vars);
      if (lhs != rhs) ok = false;
    }
  }
  return make_result("dd_leibniz", "3 variables, 5 random sample pairs", "symbolic", ok, false,
                     ok ? "twisted Leibniz rule holds" : "Leibniz rule failed");
}

CheckResult check_dd_relopprod(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 14);
  auto vars = z_vars(3);
  bool ok = true;
  // also check the relation D_i = (z_{i+1}/z_i)(1 + z_{i+1} partial_i) both ways
  for (int trial = 0; trial < 4 && ok; ++trial) {
    LaurentPoly f = smp.laurent(vars, 4, 2);
    for (int i = 1; i <= 2; ++i) {
      VarId zi = vars[static_cast<std::size_t>(i - 1)], zi1 = vars[static_cast<std::size_t>(i)];
      LaurentPoly ratio = LaurentPoly::variable(zi1) * LaurentPoly::variable(zi, -1);
      LaurentPoly lhs = modified_divided_difference(i, f, vars);
      LaurentPoly r1 = ratio * (f + LaurentPoly::variable(zi1) * divided_difference(i, f, vars));
      LaurentPoly r2 = ratio * divided_difference(i, LaurentPoly::variable(zi) * f, vars);
      if (lhs != r1 || lhs != r2) ok = false;
    }
  }
  // six-term expansion of D_1 D_2 D_1 against its closed form
  for (int trial = 0; trial < 3 && ok; ++trial) {
    LaurentPoly f = smp.laurent(vars, 4, 2);
    LaurentPoly lhs = apply_dd_word({1, 2, 1}, true, f, vars);
    VarId z1 = vars[0], z2 = vars[1], z3 = vars[2];
    LaurentPoly pre = LaurentPoly::variable(z3, 2) * LaurentPoly::variable(z1, -2);
    LaurentPoly mid =
        divided_difference(1, divided_difference(2, divided_difference(1,
            LaurentPoly::variable(z1, 2) * LaurentPoly::variable(z2) * f, vars), vars), vars);
    LaurentPoly rhs = pre * mid;
    if (lhs != rhs) ok = false;
    // expanded six-term form
    auto d1 = [&](const LaurentPoly& p) { return divided_difference(1, p, vars); };
    auto d2 = [&](const LaurentPoly& p) { return divided_difference(2, p, vars); };
    LaurentPoly Z2 = LaurentPoly::variable(z2), Z3 = LaurentPoly::variable(z3);
    LaurentPoly six = f + (Z2 + Z3) * d1(f) + Z3 * d2(f) + Z2 * Z3 * d1(d2(f)) +
                      Z3 * Z3 * d2(d1(f)) + Z2 * Z3 * Z3 * d1(d2(d1(f)));
    if (lhs != pre * six) ok = false;
  }
  return make_result("dd_relopprod",
                     "relation to the standard operator and the six-term expansion of "
                     "D_1 D_2 D_1, random samples",
                     "symbolic", ok, false, ok ? "operator product expansions hold" : "mismatch");
}

CheckResult check_dd_c_recursion(const CheckContext& ctx) {
  Sampler smp(ctx.seed + 15);
  auto vars = z_vars(4);
  bool ok = true;
  std::string detail;
  // all reduced letter sequences of length <= 4 over s_1..s_3
  std::vector<std::vector<int>> words;
  std::function<void(std::vector<int>&, const Permutation&)> gen =
      [&](std::vector<int>& cur, const Permutation& u) {
        if (!cur.empty()) words.push_back(cur);
        if (cur.size() == 4) return;
        for (int a = 1; a <= 3; ++a) {
          Permutation ext = u.times_s(a);
          if (ext.length() == u.length() + 1) {
            cur.push_back(a);
            gen(cur, ext);
            cur.pop_back();
          }
        }
      };
  std::vector<int> cur;
  Permutation id = Permutation::identity(4);
  gen(cur, id);
  for (const auto& I : words) {
    auto coeffs = expand_D_in_partial(I, vars);
    for (int trial = 0; trial < 2; ++trial) {
      LaurentPoly f = smp.laurent(vars, 3, 2);
      LaurentPoly lhs = apply_dd_word(I, true, f, vars);
      LaurentPoly rhs(0);
      for (const auto& [u, c] : coeffs) rhs += c * apply_partial_perm(u, f, vars);
      if (lhs != rhs) {
        ok = false;
        detail = "I=(" + join_ints(I) + ")";
        break;
      }
    }
    if (!ok) break;
  }
  return make_result("dd_c_recursion",
                     "all reduced words of length<=4 in S4 (" + std::to_string(words.size()) +
                         " words), 2 random samples each",
                     "symbolic", ok, false,
                     ok ? "coefficient recursion reproduces the operators" : detail);
}

CheckResult check_dd_yb(const CheckContext& ctx) {
  YbReport rep = yb_element_check(1, 3, 3, ctx.seed + 16);
  bool ok = rep.symbolic_ok && rep.series_ok;
  return make_result("dd_yb", "i=1, 3 variables, formal symbols and series to degree 3",
                     "symbolic", ok, false,
                     ok ? "braid-type relation for R_i(u) holds in both modes" : rep.detail);
}

CheckResult check_nonneg(const CheckContext& ctx) {
  (void)ctx;
  bool ok = true;
  std::string detail;
  for (int m = 3; m <= 4 && ok; ++m) {
    std::vector<int> base(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) base[static_cast<std::size_t>(i)] = i + 1;
    do {
      Permutation w(base);
      LaurentPoly p = schubert_poly(w, true);
      if (!p.has_nonnegative_coeffs()) {
        ok = false;
        detail = "negative coefficient in " + w.to_string();
      }
    } while (std::next_permutation(base.begin(), base.end()) && ok);
  }
  return make_result("nonneg", "all w in S3 and S4", "symbolic", ok, false,
                     ok ? "modified Schubert polynomials have nonnegative coefficients" : detail);
}

// RHS of the weighted-trace closed forms for N=3. The inner sum carries
// (-1)^l against a positive Pochhammer argument for type A (and the opposite
// sign inside the argument for type B); the printed source drops that sign,
// which the direct lattice computation refutes.
FormalSeries wtrace_rhs(TraceKind kind, int m, int n, const DegreeCaps& caps, VarId q,
                        const std::vector<VarId>& zv, const std::vector<VarId>& wv,
                        VarId t11, VarId Q11, VarId t12, VarId Q12, VarId t21, VarId Q21) {
  LaurentPoly qn = LaurentPoly::variable(q, n);
  FormalSeries pre(LaurentPoly(1), caps);
  if (kind == TraceKind::A) {
    pre = q_pochhammer_series(qn * LaurentPoly::variable(t11), Q11, caps).inverse() *
          q_pochhammer_series(qn * LaurentPoly::variable(t21), Q21, caps).inverse();
  } else {
    pre = q_pochhammer_series(-(qn * LaurentPoly::variable(t11)), Q11, caps) *
          q_pochhammer_series(-(qn * LaurentPoly::variable(t21)), Q21, caps);
  }
  FormalSeries sum(LaurentPoly(0), caps);
  VarId q2 = var("q__sq");  // helper symbol substituted to q^2 below
  for (int i = 0; i <= std::min(m, n); ++i) {
    LaurentPoly ei_zinv(0), ei_w(0);
    {
      // e_i(z^{-1}) and e_i(w)
      std::function<void(int, int, Monomial&, const std::vector<VarId>&, int, LaurentPoly&)> rec =
          [&](int start, int left, Monomial& acc, const std::vector<VarId>& vs, int exp,
              LaurentPoly& out) {
            if (left == 0) {
              Monomial mm = acc;
              out += LaurentPoly::monomial(mm, Rational(1));
              return;
            }
            for (int v = start; v <= static_cast<int>(vs.size()) - left; ++v) {
              acc.emplace_back(vs[static_cast<std::size_t>(v)], exp);
              rec(v + 1, left - 1, acc, vs, exp, out);
              acc.pop_back();
            }
          };
      Monomial acc;
      rec(0, i, acc, zv, -1, ei_zinv);
      acc.clear();
      rec(0, i, acc, wv, 1, ei_w);
      if (i == 0) {
        ei_zinv = LaurentPoly(1);
        ei_w = LaurentPoly(1);
      }
    }
    FormalSeries inner(LaurentPoly(0), caps);
    for (int l = 0; l <= i; ++l) {
      LaurentPoly binom = q_binomial(i, l, q2).substitute({{q2, LaurentPoly::variable(q, 2)}});
      LaurentPoly coeff = LaurentPoly::variable(q, l * (l + 1)) * binom * Rational(l % 2 ? -1 : 1);
      LaurentPoly arg = LaurentPoly::variable(q, 2 * l) * LaurentPoly::variable(t12);
      FormalSeries poch = (kind == TraceKind::A)
                              ? q_pochhammer_series(arg, Q12, caps).inverse()
                              : q_pochhammer_series(-arg, Q12, caps);
      inner = inner + FormalSeries(coeff, caps) * poch;
    }
    sum = sum + FormalSeries(ei_zinv * ei_w, caps) * inner;
  }
  return pre * sum;
}

CheckResult check_wtrace(TraceKind kind, const CheckContext& ctx) {
  VarId q = var("q");
  FockLayout lay(3);
  int p11 = lay.position(1, 1), p12 = lay.position(1, 2), p21 = lay.position(2, 1);
  VarId t11 = var("t1_1"), t12 = var("t1_2"), t21 = var("t2_1");
  VarId Q11 = var("Q1_1"), Q12 = var("Q1_2"), Q21 = var("Q2_1");
  DegreeCaps caps{{t11, ctx.cap}, {t12, ctx.cap}, {t21, ctx.cap},
                  {Q11, ctx.cap}, {Q12, ctx.cap}, {Q21, ctx.cap}};
  bool ok = true;
  std::string detail;
  for (int m = 1; m <= 3 && ok; ++m) {
    for (int n = 1; n <= 3 && ok; ++n) {
      std::vector<VarId> zv, wv;
      OperatorWord word;
      word.model = Model::generic;
      word.n = 3;
      word.opts.flip_sixth_vertex = ctx.mutate;
      for (int a = 1; a <= m; ++a) {
        zv.push_back(var_indexed("wt_z", a));
        word.factors.push_back(XFactor{3, zv.back()});
      }
      for (int b = 1; b <= n; ++b) {
        wv.push_back(var_indexed("wt_w", b));
        word.factors.push_back(XFactor{1, wv.back()});
      }
      TraceWeights weights;
      weights.kind = kind;
      weights.t.assign(static_cast<std::size_t>(lay.site_count()), 0);
      weights.Q.assign(static_cast<std::size_t>(lay.site_count()), 0);
      weights.t[static_cast<std::size_t>(p11)] = t11;
      weights.t[static_cast<std::size_t>(p12)] = t12;
      weights.t[static_cast<std::size_t>(p21)] = t21;
      weights.Q[static_cast<std::size_t>(p11)] = Q11;
      weights.Q[static_cast<std::size_t>(p12)] = Q12;
      weights.Q[static_cast<std::size_t>(p21)] = Q21;
      FormalSeries lhs = weighted_trace(word, weights, caps, q);
      FormalSeries rhs = wtrace_rhs(kind, m, n, caps, q, zv, wv, t11, Q11, t12, Q12, t21, Q21);
      if (!(lhs == rhs)) {
        ok = false;
        detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
  }
  std::string nm = kind == TraceKind::A ? "wtrace_A" : "wtrace_B";
  return make_result(nm, "N=3, m,n<=3, cap D=" + std::to_string(ctx.cap), "symbolic", ok, false,
                     ok ? "weighted trace matches the closed form" : detail);
}

CheckResult check_wtrace_special(const CheckContext& ctx) {
  VarId q = var("q");
  LatticeOptions opts;
  opts.flip_sixth_vertex = ctx.mutate;
  bool ok = true;
  std::string detail;
  for (int m = 1; m <= 3 && ok; ++m) {
    for (int n = 1; n <= 3 && ok; ++n) {
      std::vector<VarId> zv, wv;
      std::vector<std::pair<int, VarId>> fw;
      for (int a = 1; a <= m; ++a) {
        zv.push_back(var_indexed("ws_z", a));
        fw.emplace_back(3, zv.back());
      }
      for (int b = 1; b <= n; ++b) {
        wv.push_back(var_indexed("ws_w", b));
        fw.emplace_back(1, wv.back());
      }
      FockLayout lay(3);
      OccupationState vac = vacuum_state(lay);
      StateMap out = apply_x_word(3, Model::generic, fw, {{vac, LaurentPoly(1)}},
                                  m + n + 1, q, opts);
      LaurentPoly lhs = vacuum_coeff(out, lay.site_count());
      LaurentPoly rhs(0);
      for (int l = 0; l <= std::min(m, n); ++l) {
        LaurentPoly c(1);
        for (int k = 1; k <= l; ++k) c *= LaurentPoly(1) - LaurentPoly::variable(q, 2 * k);
        rhs += c * elementary(m - l, zv) * elementary(l, wv);
      }
      LaurentPoly zprod(1);
      for (VarId v : zv) zprod *= LaurentPoly::variable(v, -1);
      rhs *= zprod;
      if (lhs != rhs) {
        ok = false;
        detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
  }
  return make_result("wtrace_special", "m,n<=3, exact in q", "symbolic", ok, false,
                     ok ? "vacuum special case matches" : detail);
}

// oracle for the general q-loop matrix element
LaurentPoly qloop_oracle(const std::vector<int>& bra, int n, VarId q) {
  int ell = static_cast<int>(bra.size());
  LaurentPoly total(0);
  // assignments: per layer j a set of distinct columns (decreasing m_1 > m_2 > ...),
  // all columns distinct across layers
  std::vector<std::vector<int>> chosen(static_cast<std::size_t>(ell));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> rec = [&](int j) {
    if (j == ell) {
      LaurentPoly term(1);
      for (int jj = 0; jj < ell; ++jj) {
        const auto& cols = chosen[static_cast<std::size_t>(jj)];
        for (std::size_t kk = 0; kk < cols.size(); ++kk) {
          int col = cols[kk];
          term *= LaurentPoly::variable(var_grid("z", col, jj + 1));
          int spow = 0;
          for (int p = 0; p < jj; ++p) {
            for (int r : chosen[static_cast<std::size_t>(p)])
              if (r > col) ++spow;
          }
          if (spow) term *= LaurentPoly::variable(q, spow);
        }
      }
      total += term;
      return;
    }
    int need = bra[static_cast<std::size_t>(j)];
    std::vector<int> cols;
    std::function<void(int, int)> pick = [&](int start, int left) {
      if (left == 0) {
        chosen[static_cast<std::size_t>(j)] = cols;
        // store decreasing
        std::sort(chosen[static_cast<std::size_t>(j)].begin(),
                  chosen[static_cast<std::size_t>(j)].end(), std::greater<int>());
        rec(j + 1);
        return;
      }
      for (int c = start; c <= n - left + 1; ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        used[static_cast<std::size_t>(c)] = true;
        cols.push_back(c);
        pick(c + 1, left - 1);
        cols.pop_back();
        used[static_cast<std::size_t>(c)] = false;
      }
    };
    pick(1, need);
  };
  rec(0);
  return total;
}

LaurentPoly qloop_lattice(const std::vector<int>& bra, int n, VarId q,
                          const LatticeOptions& opts, bool equal_vars) {
  int ell = static_cast<int>(bra.size());
  OperatorWord word;
  word.model = Model::generic;
  word.n = ell;
  word.opts = opts;
  for (int k = 1; k <= n; ++k) {
    YFactor y;
    y.column = k;
    for (int j = 1; j <= ell; ++j)
      y.grid.push_back(equal_vars ? var_indexed("ql_u", k) : var_grid("z", k, j));
    word.factors.push_back(std::move(y));
  }
  return dual_expectation(bra, word, q);
}

CheckResult check_qloop_general(const CheckContext& ctx) {
  VarId q = var("q");
  LatticeOptions opts;
  opts.flip_sixth_vertex = ctx.mutate;
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::vector<int>, int>> cases = {
      {{1, 2, 0}, 3}, {{2, 1, 0}, 3}, {{1, 1, 1}, 3}, {{0, 2, 1}, 3}, {{2, 1}, 3}, {{1, 2}, 4}};
  for (const auto& [bra, n] : cases) {
    LaurentPoly lhs = qloop_lattice(bra, n, q, opts, false);
    LaurentPoly rhs = qloop_oracle(bra, n, q);
    if (lhs != rhs) {
      ok = false;
      detail = "bra=(" + join_ints(bra) + ") n=" + std::to_string(n);
      break;
    }
  }
  return make_result("qloop_general", "l<=3, n<=4, occupations up to 2", "symbolic", ok, false,
                     ok ? "column products match the combinatorial sum" : detail);
}

CheckResult check_qloop_binary(const CheckContext& ctx) {
  VarId q = var("q");
  LatticeOptions opts;
  opts.flip_sixth_vertex = ctx.mutate;
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::vector<int>, int>> cases = {
      {{1, 0, 0, 1, 0}, 3}, {{1, 1, 0, 0}, 3}, {{1, 0, 1, 0}, 3}, {{0, 1, 0, 1}, 2}};
  for (const auto& [bra, n] : cases) {
    LaurentPoly lhs = qloop_lattice(bra, n, q, opts, false);
    // Inv-weighted sum over layer permutations and column subsets
    std::vector<int> ks;
    for (std::size_t j = 0; j < bra.size(); ++j)
      if (bra[j] == 1) ks.push_back(static_cast<int>(j) + 1);
    int m = static_cast<int>(ks.size());
    LaurentPoly rhs(0);
    std::vector<int> sigma = ks;
    std::sort(sigma.begin(), sigma.end());
    do {
      int inv = 0;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)]) ++inv;
      // column subsets j_1 < ... < j_m
      std::vector<int> cols;
      std::function<void(int)> pick = [&](int start) {
        if (static_cast<int>(cols.size()) == m) {
          LaurentPoly term = LaurentPoly::variable(q, inv);
          for (int a = 0; a < m; ++a)
            term *= LaurentPoly::variable(
                var_grid("z", cols[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(a)]));
          rhs += term;
          return;
        }
        for (int c = start; c <= n; ++c) {
          cols.push_back(c);
          pick(c + 1);
          cols.pop_back();
        }
      };
      pick(1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (lhs != rhs) {
      ok = false;
      detail = "bra=(" + join_ints(bra) + ")";
      break;
    }
  }
  return make_result("qloop_binary", "binary bras, l<=5, n<=3 (includes the 10010 example)",
                     "symbolic", ok, false, ok ? "inversion-weighted loop sums match" : detail);
}

CheckResult check_qloop_eqvars(const CheckContext& ctx) {
  VarId q = var("q");
  LatticeOptions opts;
  opts.flip_sixth_vertex = ctx.mutate;
  bool ok = true;
  std::string detail;
  for (int ell = 1; ell <= 4 && ok; ++ell) {
    for (int n = 1; n <= 4 && ok; ++n) {
      for (int m = 0; m <= std::min(ell, n); ++m) {
        std::vector<int> bra(static_cast<std::size_t>(ell), 0);
        for (int j = 0; j < m; ++j) bra[static_cast<std::size_t>(j)] = 1;
        LaurentPoly lhs = qloop_lattice(bra, n, q, opts, true);
        std::vector<VarId> uv;
        for (int k = 1; k <= n; ++k) uv.push_back(var_indexed("ql_u", k));
        LaurentPoly rhs = q_factorial(m, q) * elementary(m, uv);
        if (lhs != rhs) {
          ok = false;
          detail = "l=" + std::to_string(ell) + " n=" + std::to_string(n) +
                   " m=" + std::to_string(m);
          break;
        }
      }
    }
  }
  return make_result("qloop_eqvars", "l<=4, n<=4, all m, symbolic in q", "symbolic", ok, false,
                     ok ? "[m]_q! e_m corollary holds" : detail);
}

CheckResult check_vac_action(const CheckContext& ctx) {
  (void)ctx;
  VarId q = var("q"), z = var("z");
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 5 && ok; ++n) {
    FockLayout lay(n);
    OccupationState vac = vacuum_state(lay);
    auto Xn = build_x_operator(n, n, z, Model::q0, q);
    auto r = Xn.apply(vac, 2, q);
    if (!(r.size() == 1 && r[0].first == vac && r[0].second == LaurentPoly::variable(z, n))) {
      ok = false;
      detail = "X_n on vacuum, n=" + std::to_string(n);
    }
    auto X0 = build_x_operator(n, 0, z, Model::q0, q);
    for (const auto& s : states_up_to(lay.site_count(), 1)) {
      for (auto& [t, c] : X0.apply(s, 4, q)) {
        if (t == vac && !(s == vac && c.is_one())) {
          ok = false;
          detail = "dual vacuum action, n=" + std::to_string(n);
        }
      }
    }
  }
  return make_result("vac_action", "n<=5, q0 model", "symbolic", ok, false,
                     ok ? "vacuum eigenvalue and dual invariance hold" : detail);
}

CheckResult check_conj_commute(const CheckContext& ctx) {
  VarId q = var("q"), z = var("x"), w = var("y");
  LatticeOptions opts;
  opts.flip_sixth_vertex = ctx.mutate;
  bool ok = true;
  std::string detail;
  for (int N = 3; N <= 4 && ok; ++N) {
    FockLayout lay(N);
    auto states = states_up_to(lay.site_count(), 2);
    int M = 2 + 3;
    for (int j = 0; j <= N && ok; ++j) {
      for (const auto& s : states) {
        StateMap s0{{s, LaurentPoly(1)}};
        StateMap zw = apply_x_word(N, Model::generic, {{j, z}, {j, w}}, s0, M, q, opts);
        StateMap wz = apply_x_word(N, Model::generic, {{j, w}, {j, z}}, s0, M, q, opts);
        if (zw != wz) {
          ok = false;
          detail = "counterexample: N=" + std::to_string(N) + " j=" + std::to_string(j) +
                   " on state " + state_to_string(lay, s);
          break;
        }
      }
    }
  }
  return make_result("conj_commute",
                     "N=3 and N=4, all j, states occ<=2, symbolic in both variables",
                     "evidence", ok, true,
                     ok ? "commutator vanishes on every tested instance (evidence only)"
                        : detail);
}

CheckResult check_conj_dd(const CheckContext& ctx) {
  bool ok = true;
  int cases = 0;
  std::string detail;
  for (int n = 1; n <= 3 && ok; ++n) {
    ConjectureReport rep = conjecture_D_product(n, 1, 4, 3, ctx.seed + 20 + static_cast<std::uint64_t>(n));
    cases += rep.cases_checked;
    if (!rep.agree) {
      ok = false;
      detail = "counterexample at n=" + std::to_string(n) + ": " + rep.counterexample;
    }
  }
  return make_result("conj_dd",
                     "n<=3, i=1, monomials of degree<=4 plus 3 random samples (" +
                         std::to_string(cases) + " cases)",
                     "evidence", ok, true,
                     ok ? "product identity holds on every tested instance (evidence only)"
                        : detail);
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"zf_relations", {"q0", "zf"}, check_zf_relations},
      {"multi_comm", {"q0", "zf"}, check_multi_comm},
      {"schur_corr", {"q0", "schur"}, check_schur_corr},
      {"tensor_schur", {"q0", "schur"}, check_tensor_schur},
      {"shuffle_jlp", {"q0", "schur", "identities"}, check_shuffle_jlp},
      {"fnr", {"q0", "schur", "identities"}, check_fnr},
      {"gm", {"q0", "schur", "identities"}, check_gm},
      {"unified", {"q0", "schur", "identities"}, check_unified},
      {"kostka_3d", {"q0", "schur"}, check_kostka_3d},
      {"trace_fact", {"q0", "tasep"}, check_trace_fact},
      {"tasep_probgen", {"q0", "tasep"}, check_tasep_probgen},
      {"tasep_example", {"q0", "tasep"}, check_tasep_example},
      {"mock_schubert", {"q0", "schubert"}, check_mock_schubert},
      {"dd_braid", {"schubert"}, check_dd_braid},
      {"dd_idem", {"schubert"}, check_dd_idem},
      {"dd_leibniz", {"schubert"}, check_dd_leibniz},
      {"dd_relopprod", {"schubert"}, check_dd_relopprod},
      {"dd_c_recursion", {"schubert"}, check_dd_c_recursion},
      {"dd_yb", {"schubert"}, check_dd_yb},
      {"nonneg", {"schubert"}, check_nonneg},
      {"wtrace_A", {"generic", "wtrace"},
       [](const CheckContext& c) { return check_wtrace(TraceKind::A, c); }},
      {"wtrace_B", {"generic", "wtrace"},
       [](const CheckContext& c) { return check_wtrace(TraceKind::B, c); }},
      {"wtrace_special", {"generic", "wtrace"}, check_wtrace_special},
      {"qloop_general", {"generic", "qloop"}, check_qloop_general},
      {"qloop_binary", {"generic", "qloop"}, check_qloop_binary},
      {"qloop_eqvars", {"generic", "qloop"}, check_qloop_eqvars},
      {"vac_action", {"q0"}, check_vac_action},
      {"conj_commute", {"generic", "conjectures"}, check_conj_commute},
      {"conj_dd", {"schubert", "conjectures"}, check_conj_dd},
  };
  return defs;
}

CheckResult verify(const std::string& name, const CheckContext& ctx) {
  for (const auto& def : registry()) {
    if (def.name == name) {
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = def.fn(ctx);
      } catch (const std::exception& e) {
        r = make_result(name, "", "symbolic", false, false,
                        std::string("exception: ") + e.what());
      }
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           start)
                     .count();
      return r;
    }
  }
  fail(Errc::OutOfRange, "unknown check '" + name + "'");
}

SuiteResult run_suite(const std::string& tag, const CheckContext& ctx) {
  SuiteResult suite;
  for (const auto& def : registry()) {
    bool match = tag == "all" || tag.empty();
    for (const auto& t : def.tags)
      if (t == tag) match = true;
    if (!match) continue;
    CheckResult r = verify(def.name, ctx);
    if (r.pass)
      ++suite.passed;
    else
      ++suite.failed;
    suite.results.push_back(std::move(r));
  }
  return suite;
}

std::string suite_to_json(const SuiteResult& suite, const CheckContext& ctx) {
  json out;
  out["seed"] = ctx.seed;
  out["cap"] = ctx.cap;
  out["mutated"] = ctx.mutate;
  out["passed"] = suite.passed;
  out["failed"] = suite.failed;
  json cases = json::array();
  for (const auto& r : suite.results) {
    json c;
    c["name"] = r.name;
    c["params"] = r.params;
    c["mode"] = r.mode;
    c["verdict"] = r.pass ? (r.evidence_only ? "evidence" : "pass") : "fail";
    c["detail"] = r.detail;
    cases.push_back(std::move(c));
  }
  out["cases"] = std::move(cases);
  return out.dump(2);
}

}  // namespace tetralat::harness
