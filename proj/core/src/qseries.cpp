#include "tetralat/qseries.hpp"

#include "tetralat/error.hpp"

namespace tetralat {

LaurentPoly q_pochhammer(const LaurentPoly& a, VarId q, long n) {
  LaurentPoly out(1);
  LaurentPoly aq = a;
  LaurentPoly qv = LaurentPoly::variable(q);
  for (long r = 0; r < n; ++r) {
    out *= LaurentPoly(1) - aq;
    aq *= qv;
  }
  return out;
}

FormalSeries q_pochhammer_series(const LaurentPoly& a, VarId q, const DegreeCaps& caps) {
  for (const auto& [m, c] : a.terms()) {
    (void)c;
    bool ok = false;
    for (const auto& [v, cap] : caps) {
      (void)cap;
      if (mono_degree_in(m, v) > 0) {
        ok = true;
        break;
      }
    }
    if (!ok)
      fail(Errc::NonTerminating,
           "infinite q-Pochhammer argument has a term with no capped-variable degree");
  }
  FormalSeries out(LaurentPoly(1), caps);
  FormalSeries aq(a, caps);
  FormalSeries qv(LaurentPoly::variable(q), caps);
  long budget = 1;
  for (const auto& [v, cap] : caps) {
    (void)v;
    budget += cap;
  }
  // Factors (1 - a q^r) become trivial once a q^r truncates to zero; with
  // every monomial of `a` carrying capped degree, this happens within the
  // total cap budget.
  for (long r = 0; r <= budget; ++r) {
    if (aq.poly().is_zero()) return out;
    out = out * (FormalSeries(LaurentPoly(1), caps) - aq);
    aq = aq * qv;
  }
  if (!aq.poly().is_zero())
    fail(Errc::NonTerminating, "q-Pochhammer product did not stabilize under caps");
  return out;
}

LaurentPoly q_binomial(long n, long k, VarId q) {
  if (k < 0 || n < 0 || k > n) fail(Errc::OutOfRange, "q-binomial needs 0 <= k <= n");
  // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]; row by row.
  std::vector<LaurentPoly> row(static_cast<std::size_t>(k) + 1, LaurentPoly(0));
  row[0] = LaurentPoly(1);
  LaurentPoly qv = LaurentPoly::variable(q);
  for (long i = 1; i <= n; ++i) {
    for (long j = std::min(i, k); j >= 1; --j) {
      LaurentPoly qs = LaurentPoly::variable(q, static_cast<int>(j));
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j) - 1] + qs * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

LaurentPoly q_integer(long n, VarId q) {
  LaurentPoly out(0);
  for (long j = 0; j < n; ++j) out += LaurentPoly::variable(q, static_cast<int>(j));
  return out;
}

LaurentPoly q_factorial(long n, VarId q) {
  LaurentPoly out(1);
  for (long j = 1; j <= n; ++j) out *= q_integer(j, q);
  return out;
}

}  // namespace tetralat
