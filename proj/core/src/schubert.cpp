#include "tetralat/schubert.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tetralat/error.hpp"

namespace tetralat {

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
  std::vector<bool> seen(line_.size() + 1, false);
  for (int v : line_) {
    if (v < 1 || v > static_cast<int>(line_.size()) || seen[static_cast<std::size_t>(v)])
      fail(Errc::OutOfRange, "not a permutation of 1..m");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> l(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) l[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(l);
}

Permutation Permutation::longest(int m) {
  std::vector<int> l(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) l[static_cast<std::size_t>(i)] = m - i;
  return Permutation(l);
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < line_.size(); ++i)
    for (std::size_t j = i + 1; j < line_.size(); ++j)
      if (line_[i] > line_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < line_.size(); ++i)
    if (line_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= size()) fail(Errc::OutOfRange, "transposition index out of range");
  std::vector<int> l = line_;
  std::swap(l[static_cast<std::size_t>(i - 1)], l[static_cast<std::size_t>(i)]);
  return Permutation(l);
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < line_.size(); ++i) os << (i ? "," : "") << line_[i];
  os << "]";
  return os.str();
}

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {  // descent: w = (w s_i) s_i with l(w s_i) = l(w) - 1
      for (auto word : reduced_words(w.times_s(i))) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
  }
  return out;
}

std::vector<VarId> z_vars(int m) {
  std::vector<VarId> vars;
  for (int i = 1; i <= m; ++i) vars.push_back(var_indexed("z", i));
  return vars;
}

LaurentPoly divided_difference(int i, const LaurentPoly& f, const std::vector<VarId>& vars) {
  if (i < 1 || i >= static_cast<int>(vars.size()))
    fail(Errc::OutOfRange, "divided difference index out of range");
  VarId zi = vars[static_cast<std::size_t>(i - 1)];
  VarId zi1 = vars[static_cast<std::size_t>(i)];
  LaurentPoly num = f - f.swap_vars(zi, zi1);
  LaurentPoly den = LaurentPoly::variable(zi) - LaurentPoly::variable(zi1);
  return num.div_exact(den);
}

LaurentPoly modified_divided_difference(int i, const LaurentPoly& f,
                                        const std::vector<VarId>& vars) {
  if (i < 1 || i >= static_cast<int>(vars.size()))
    fail(Errc::OutOfRange, "divided difference index out of range");
  VarId zi = vars[static_cast<std::size_t>(i - 1)];
  VarId zi1 = vars[static_cast<std::size_t>(i)];
  LaurentPoly num = LaurentPoly::variable(zi) * f -
                    LaurentPoly::variable(zi1) * f.swap_vars(zi, zi1);
  LaurentPoly den = LaurentPoly::variable(zi) - LaurentPoly::variable(zi1);
  LaurentPoly ratio = LaurentPoly::variable(zi1) * LaurentPoly::variable(zi, -1);
  return ratio * num.div_exact(den);
}

LaurentPoly apply_dd_word(const std::vector<int>& word, bool modified, const LaurentPoly& f,
                          const std::vector<VarId>& vars) {
  LaurentPoly cur = f;
  for (int a : word)
    cur = modified ? modified_divided_difference(a, cur, vars)
                   : divided_difference(a, cur, vars);
  return cur;
}

LaurentPoly schubert_poly(const Permutation& w, bool modified, int ascent_choice) {
  int m = w.size();
  std::vector<VarId> vars = z_vars(m);
  // seed at the longest element: z1^{m-1} z2^{m-2} ... z_{m-1}
  std::vector<std::pair<Permutation, int>> path;  // (perm, ascent used)
  Permutation cur = w;
  while (!(cur == Permutation::longest(m))) {
    std::vector<int> ascents;
    for (int i = 1; i < m; ++i)
      if (cur(i) < cur(i + 1)) ascents.push_back(i);
    if (ascents.empty()) fail(Errc::Internal, "no ascent below the longest element");
    int pick = ascents[static_cast<std::size_t>(ascent_choice) % ascents.size()];
    path.emplace_back(cur, pick);
    cur = cur.times_s(pick);
  }
  LaurentPoly poly(1);
  for (int i = 1; i <= m - 1; ++i) poly *= LaurentPoly::variable(vars[static_cast<std::size_t>(i - 1)], m - i);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    int i = it->second;
    poly = modified ? modified_divided_difference(i, poly, vars)
                    : divided_difference(i, poly, vars);
  }
  return poly;
}

std::map<Permutation, LaurentPoly> expand_D_in_partial(const std::vector<int>& I,
                                                       const std::vector<VarId>& vars) {
  int m = static_cast<int>(vars.size());
  Permutation u = Permutation::identity(m);
  for (int a : I) u = u.times_s(a);
  if (u.length() != static_cast<int>(I.size()))
    fail(Errc::NotReduced, "operator word is not reduced");

  std::map<Permutation, LaurentPoly> coeffs;
  coeffs[Permutation::identity(m)] = LaurentPoly(1);
  for (int a : I) {
    VarId za = vars[static_cast<std::size_t>(a - 1)];
    VarId za1 = vars[static_cast<std::size_t>(a)];
    LaurentPoly ratio = LaurentPoly::variable(za1) * LaurentPoly::variable(za, -1);
    LaurentPoly ratio2 = LaurentPoly::variable(za1, 2) * LaurentPoly::variable(za, -1);
    std::map<Permutation, LaurentPoly> next;
    for (const auto& [sub, c] : coeffs) {
      // D_a (c * partial_sub) = [ (z_{a+1}/z_a) c + (z_{a+1}^2/z_a) (partial_a c) ] partial_sub
      //                         + (z_{a+1}^2/z_a) (s_a c) partial_a partial_sub
      LaurentPoly stay = ratio * c + ratio2 * divided_difference(a, c, vars);
      if (!stay.is_zero()) {
        next[sub] += stay;
        if (next[sub].is_zero()) next.erase(sub);
      }
      Permutation ext = sub.times_s(a);
      if (ext.length() == sub.length() + 1) {  // partial_a partial_sub nonzero
        LaurentPoly grow = ratio2 * c.swap_vars(za, za1);
        if (!grow.is_zero()) {
          next[ext] += grow;
          if (next[ext].is_zero()) next.erase(ext);
        }
      }
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

LaurentPoly apply_partial_perm(const Permutation& u, const LaurentPoly& f,
                               const std::vector<VarId>& vars) {
  if (u.is_identity()) return f;
  // any reduced word works; peel descents
  Permutation cur = u;
  std::vector<int> word;
  while (!cur.is_identity()) {
    for (int i = 1; i < cur.size(); ++i) {
      if (cur(i) > cur(i + 1)) {
        word.push_back(i);
        cur = cur.times_s(i);
        break;
      }
    }
  }
  // cur = s_{word.back()} ... s_{word.front()} * u ... we peeled from the right:
  // u = s_{w1} s_{w2} ... reading word in reverse order gives a reduced word of u.
  std::reverse(word.begin(), word.end());
  LaurentPoly out = f;
  for (int a : word) out = divided_difference(a, out, vars);
  return out;
}

namespace {

LaurentPoly random_laurent(const std::vector<VarId>& vars, std::mt19937_64& rng, int terms,
                           int max_abs_exp) {
  LaurentPoly p(0);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (VarId v : vars) {
      int e = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * max_abs_exp + 1)) -
              max_abs_exp;
      if (e != 0) m.emplace_back(v, e);
    }
    std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    long c = static_cast<long>(rng() % 19) - 9;
    if (c == 0) c = 1;
    p += LaurentPoly::monomial(m, Rational(c));
  }
  return p;
}

}  // namespace

YbReport yb_element_check(int i, int nvars, int series_degree, std::uint64_t seed) {
  YbReport rep;
  std::vector<VarId> vars = z_vars(nvars);
  std::mt19937_64 rng(seed);

  // Symbolic mode: formal exponentials E1 = e^u, E2 = e^v, e^{u+v} = E1 E2.
  {
    LaurentPoly E1 = LaurentPoly::variable(var("Eu"));
    LaurentPoly E2 = LaurentPoly::variable(var("Ev"));
    auto apply_R = [&](int idx, const LaurentPoly& e, const LaurentPoly& f) {
      return f + (LaurentPoly(1) - e) * modified_divided_difference(idx, f, vars);
    };
    bool ok = true;
    for (int trial = 0; trial < 4 && ok; ++trial) {
      LaurentPoly f = random_laurent(vars, rng, 4, 2);
      LaurentPoly lhs = apply_R(i, E1, apply_R(i + 1, E1 * E2, apply_R(i, E2, f)));
      LaurentPoly rhs = apply_R(i + 1, E2, apply_R(i, E1 * E2, apply_R(i + 1, E1, f)));
      if (lhs != rhs) {
        ok = false;
        rep.detail = "symbolic mode mismatch on " + f.to_string();
      }
    }
    rep.symbolic_ok = ok;
  }

  // Series mode: e^u truncated to the given degree in u and v.
  {
    VarId uv = var("u"), vv = var("v");
    DegreeCaps caps{{uv, series_degree}, {vv, series_degree}};
    auto exp_series = [&](const LaurentPoly& arg) {
      FormalSeries acc(LaurentPoly(1), caps);
      FormalSeries pw(LaurentPoly(1), caps);
      Rational fact(1);
      for (int k = 1; k <= 2 * series_degree; ++k) {
        pw = pw * FormalSeries(arg, caps);
        fact *= Rational(k);
        if (pw.poly().is_zero()) break;
        acc = acc + FormalSeries(pw.poly() * fact.inverse(), caps);
      }
      return acc;
    };
    LaurentPoly u_arg = LaurentPoly::variable(uv);
    LaurentPoly v_arg = LaurentPoly::variable(vv);
    FormalSeries eu = exp_series(u_arg), ev = exp_series(v_arg), euv = exp_series(u_arg + v_arg);
    auto apply_R = [&](int idx, const FormalSeries& e, const FormalSeries& f) {
      LaurentPoly dd = modified_divided_difference(idx, f.poly(), vars);
      return f + (FormalSeries(LaurentPoly(1), caps) - e) * FormalSeries(dd, caps);
    };
    bool ok = true;
    for (int trial = 0; trial < 3 && ok; ++trial) {
      FormalSeries f(random_laurent(vars, rng, 3, 2), caps);
      FormalSeries lhs = apply_R(i, eu, apply_R(i + 1, euv, apply_R(i, ev, f)));
      FormalSeries rhs = apply_R(i + 1, ev, apply_R(i, euv, apply_R(i + 1, eu, f)));
      if (!(lhs == rhs)) {
        ok = false;
        rep.detail += " series mode mismatch";
      }
    }
    rep.series_ok = ok;
  }
  return rep;
}

ConjectureReport conjecture_D_product(int n, int i, int max_degree, int samples,
                                      std::uint64_t seed) {
  ConjectureReport rep;
  if (i != 1)
    fail(Errc::OutOfRange,
         "the closed form references z_{n+2-j}, which needs i = 1 to stay in range");
  int nv = n + i;  // operators up to index n+i-1 act on z_1..z_{n+i}
  std::vector<VarId> vars = z_vars(nv);

  // written word, left to right: [i], [i+1, i], ..., [i+n-1, ..., i]
  std::vector<int> written;
  for (int b = 0; b < n; ++b)
    for (int a = i + b; a >= i; --a) written.push_back(a);
  std::vector<int> app_order(written.rbegin(), written.rend());

  LaurentPoly pre(1), post(1);
  for (int jj = i + 1; jj <= n + i; ++jj) {
    pre *= (LaurentPoly::variable(vars[static_cast<std::size_t>(jj - 1)]) *
            LaurentPoly::variable(vars[static_cast<std::size_t>(n + 2 - jj - 1)], -1))
               .pow(jj - i);
    post *= LaurentPoly::variable(vars[static_cast<std::size_t>(n + 2 - jj - 1)], jj - i);
  }

  auto lhs_apply = [&](const LaurentPoly& f) {
    LaurentPoly cur = f;
    for (int a : app_order) cur = modified_divided_difference(a, cur, vars);
    return cur;
  };
  auto rhs_apply = [&](const LaurentPoly& f) {
    LaurentPoly cur = post * f;
    for (int a : app_order) cur = divided_difference(a, cur, vars);
    return pre * cur;
  };

  auto check_one = [&](const LaurentPoly& f, const std::string& label) {
    ++rep.cases_checked;
    if (lhs_apply(f) != rhs_apply(f)) {
      rep.agree = false;
      if (rep.counterexample.empty()) rep.counterexample = label;
    }
  };

  // all monomials in nv variables with total degree <= max_degree
  std::vector<int> exps(static_cast<std::size_t>(nv), 0);
  std::function<void(int, int)> enumerate = [&](int pos, int left) {
    if (pos == nv) {
      Monomial mo;
      for (int p = 0; p < nv; ++p)
        if (exps[static_cast<std::size_t>(p)] != 0)
          mo.emplace_back(vars[static_cast<std::size_t>(p)], exps[static_cast<std::size_t>(p)]);
      LaurentPoly f = LaurentPoly::monomial(mo, Rational(1));
      check_one(f, "monomial " + f.to_string());
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[static_cast<std::size_t>(pos)] = e;
      enumerate(pos + 1, left - e);
    }
    exps[static_cast<std::size_t>(pos)] = 0;
  };
  enumerate(0, max_degree);

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    LaurentPoly f = random_laurent(vars, rng, 4, 2);
    check_one(f, "random sample " + std::to_string(s));
  }
  return rep;
}

}  // namespace tetralat
