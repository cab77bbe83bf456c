#include "tetralat/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "tetralat/error.hpp"

namespace tetralat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] < parts_[i + 1]) fail(Errc::OutOfRange, "partition parts must weakly decrease");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (!parts_.empty() && parts_.back() < 0)
    fail(Errc::OutOfRange, "partition parts must be nonnegative");
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

// Leibniz expansion of det(z_i^{e_j}) over S_n; fine at desk scale (n <= 7).
LaurentPoly alternant_det(const std::vector<int>& exps, const std::vector<VarId>& vars) {
  int n = static_cast<int>(vars.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(0);
  // iterate permutations with sign
  std::function<void(int, int)> rec = [&](int depth, int sign) {
    if (depth == n) {
      Monomial m;
      for (int r = 0; r < n; ++r) {
        int e = exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
        if (e != 0) m.emplace_back(vars[static_cast<std::size_t>(r)], e);
      }
      std::sort(m.begin(), m.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      det += LaurentPoly::monomial(m, Rational(sign));
      return;
    }
    for (int r = depth; r < n; ++r) {
      std::swap(perm[static_cast<std::size_t>(depth)], perm[static_cast<std::size_t>(r)]);
      rec(depth + 1, r == depth ? sign : -sign);
      std::swap(perm[static_cast<std::size_t>(depth)], perm[static_cast<std::size_t>(r)]);
    }
  };
  rec(0, 1);
  return det;
}

LaurentPoly vandermonde(const std::vector<VarId>& vars) {
  LaurentPoly v(1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      v *= LaurentPoly::variable(vars[i]) - LaurentPoly::variable(vars[j]);
  return v;
}

}  // namespace

LaurentPoly alternant_schur(const std::vector<int>& mu, const std::vector<VarId>& vars) {
  int n = static_cast<int>(vars.size());
  if (static_cast<int>(mu.size()) > n)
    fail(Errc::OutOfRange, "sequence longer than variable list");
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    int mu_j = j < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(j)] : 0;
    exps[static_cast<std::size_t>(j)] = mu_j + n - 1 - j;
  }
  // repeated shifted exponents -> zero determinant
  std::vector<int> sorted = exps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return LaurentPoly(0);
  return alternant_det(exps, vars).div_exact(vandermonde(vars));
}

LaurentPoly schur_bialternant(const Partition& lambda, const std::vector<VarId>& vars) {
  if (lambda.length() > static_cast<int>(vars.size())) return LaurentPoly(0);
  return alternant_schur(lambda.parts(), vars);
}

LaurentPoly elementary(int k, const std::vector<VarId>& vars) {
  int n = static_cast<int>(vars.size());
  if (k < 0 || k > n) return LaurentPoly(k == 0 ? 1 : 0);
  if (k == 0) return LaurentPoly(1);
  LaurentPoly out(0);
  std::function<void(int, int, Monomial&)> rec = [&](int start, int left, Monomial& acc) {
    if (left == 0) {
      out += LaurentPoly::monomial(acc, Rational(1));
      return;
    }
    for (int v = start; v <= n - left; ++v) {
      acc.emplace_back(vars[static_cast<std::size_t>(v)], 1);
      rec(v + 1, left - 1, acc);
      acc.pop_back();
    }
  };
  Monomial acc;
  rec(0, k, acc);
  return out;
}

LaurentPoly complete_homogeneous(int k, const std::vector<VarId>& vars) {
  if (k < 0) return LaurentPoly(0);
  if (k == 0) return LaurentPoly(1);
  LaurentPoly out(0);
  int n = static_cast<int>(vars.size());
  std::function<void(int, int, Monomial&)> rec = [&](int start, int left, Monomial& acc) {
    if (left == 0) {
      Monomial m = acc;
      out += LaurentPoly::monomial(m, Rational(1));
      return;
    }
    for (int v = start; v < n; ++v) {
      // weakly increasing choices
      Monomial saved = acc;
      bool merged = false;
      for (auto& [var_, e] : acc)
        if (var_ == vars[static_cast<std::size_t>(v)]) {
          ++e;
          merged = true;
          break;
        }
      if (!merged) acc.emplace_back(vars[static_cast<std::size_t>(v)], 1);
      rec(v, left - 1, acc);
      acc = saved;
    }
  };
  Monomial acc;
  rec(0, k, acc);
  return out;
}

LaurentPoly loop_elementary(int k, int a, int n, int colors,
                            const std::vector<std::vector<VarId>>& grid) {
  if (k < 0 || k > n) return LaurentPoly(k == 0 ? 1 : 0);
  if (k == 0) return LaurentPoly(1);
  LaurentPoly out(0);
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == k) {
      Monomial m;
      for (int j = 0; j < k; ++j) {
        int color = ((a - 1 + j) % colors + colors) % colors;  // 0-based cyclic
        m.emplace_back(grid[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]
                           [static_cast<std::size_t>(color)],
                       1);
      }
      std::sort(m.begin(), m.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      // merge duplicate vars (same var can appear once only here, but be safe)
      Monomial merged;
      for (const auto& [v, e] : m) {
        if (!merged.empty() && merged.back().first == v)
          merged.back().second += e;
        else
          merged.emplace_back(v, e);
      }
      out += LaurentPoly::monomial(merged, Rational(1));
      return;
    }
    for (int v = start; v < n; ++v) {
      idx.push_back(v);
      rec(v + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

long kostka(const Partition& lambda, const std::vector<int>& alpha) {
  long w = 0;
  for (int a : alpha) {
    if (a < 0) fail(Errc::OutOfRange, "composition entries must be nonnegative");
    w += a;
  }
  if (w != lambda.weight()) return 0;
  int rows = lambda.length();
  if (rows == 0) return 1;  // empty shape, empty content
  int letters = static_cast<int>(alpha.size());
  std::vector<int> remaining = alpha;
  // fill row by row, cell by cell; rows weakly increase, columns strictly increase
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    tab[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda.part(r)), 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda.part(r)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
    if (r > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= letters; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      rec(nr, nc);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0, 0);
  return count;
}

Rational symmetrize_blocks(const std::vector<std::pair<int, int>>& blocks,
                           const std::vector<Rational>& values) {
  int total = 0;
  for (const auto& [size, exp] : blocks) {
    (void)exp;
    total += size;
  }
  if (total != static_cast<int>(values.size()))
    fail(Errc::OutOfRange, "point count must match total block size");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) fail(Errc::DegeneratePoint, "zero evaluation point");
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) fail(Errc::DegeneratePoint, "coincident evaluation points");
  }

  int m = static_cast<int>(blocks.size());
  std::vector<std::vector<Rational>> assign(static_cast<std::size_t>(m));
  std::vector<bool> used(values.size(), false);
  Rational sum(0);

  std::function<void(int)> rec = [&](int b) {
    if (b == m) {
      Rational term(1);
      for (int k = 0; k < m; ++k) {
        Rational p(1);
        for (const auto& w : assign[static_cast<std::size_t>(k)])
          p *= w.pow(blocks[static_cast<std::size_t>(k)].second);
        term *= p;
      }
      Rational denom(1);
      for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k)
          for (const auto& wj : assign[static_cast<std::size_t>(j)])
            for (const auto& wk : assign[static_cast<std::size_t>(k)])
              denom *= Rational(1) - wk / wj;
      sum += term / denom;
      return;
    }
    // choose an increasing-index subset of unused values for block b
    int need = blocks[static_cast<std::size_t>(b)].first;
    std::function<void(int, int)> pick = [&](int start, int left) {
      if (left == 0) {
        rec(b + 1);
        return;
      }
      for (int v = start; v < static_cast<int>(values.size()); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        assign[static_cast<std::size_t>(b)].push_back(values[static_cast<std::size_t>(v)]);
        pick(v + 1, left - 1);
        assign[static_cast<std::size_t>(b)].pop_back();
        used[static_cast<std::size_t>(v)] = false;
      }
    };
    pick(0, need);
  };
  rec(0);
  return sum;
}

Rational schur_eval(const std::vector<int>& mu, const std::vector<Rational>& values) {
  int n = static_cast<int>(values.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (values[static_cast<std::size_t>(i)] == values[static_cast<std::size_t>(j)])
        fail(Errc::DegeneratePoint, "coincident evaluation points");
  if (static_cast<int>(mu.size()) > n) fail(Errc::OutOfRange, "sequence too long");
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    int mu_j = j < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(j)] : 0;
    exps[static_cast<std::size_t>(j)] = mu_j + n - 1 - j;
  }
  // numeric determinant via Leibniz (n small)
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rational det(0);
  std::function<void(int, int)> rec = [&](int depth, int sign) {
    if (depth == n) {
      Rational t(sign);
      for (int r = 0; r < n; ++r)
        t *= values[static_cast<std::size_t>(r)].pow(
            exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])]);
      det += t;
      return;
    }
    for (int r = depth; r < n; ++r) {
      std::swap(perm[static_cast<std::size_t>(depth)], perm[static_cast<std::size_t>(r)]);
      rec(depth + 1, r == depth ? sign : -sign);
      std::swap(perm[static_cast<std::size_t>(depth)], perm[static_cast<std::size_t>(r)]);
    }
  };
  rec(0, 1);
  Rational vdm(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      vdm *= values[static_cast<std::size_t>(i)] - values[static_cast<std::size_t>(j)];
  return det / vdm;
}

Rational schur_at_ones(const Partition& lambda, int n) {
  if (lambda.length() > n) return Rational(0);
  // hook content product would also work; reuse the symbolic route
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(var_indexed("sao_z", i));
  LaurentPoly s = schur_bialternant(lambda, vars);
  std::map<VarId, Rational> ones;
  for (VarId v : vars) ones[v] = Rational(1);
  return s.evaluate(ones);
}

}  // namespace tetralat
