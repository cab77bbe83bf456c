#ifndef TETRALAT_QSERIES_HPP
#define TETRALAT_QSERIES_HPP

#include "tetralat/laurent.hpp"
#include "tetralat/series.hpp"

namespace tetralat {

/// Finite q-Pochhammer (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); (a;q)_0 = 1.
LaurentPoly q_pochhammer(const LaurentPoly& a, VarId q, long n);

/// Infinite product (a;q)_inf truncated to the given caps. Every monomial of
/// `a` must have positive degree in at least one capped variable, otherwise
/// the product cannot terminate and NonTerminating is thrown.
FormalSeries q_pochhammer_series(const LaurentPoly& a, VarId q, const DegreeCaps& caps);

/// Gaussian binomial coefficient [n choose k]_q, a polynomial in q with
/// nonnegative integer coefficients. Requires 0 <= k <= n.
LaurentPoly q_binomial(long n, long k, VarId q);

/// [n]_q = 1 + q + ... + q^{n-1}.
LaurentPoly q_integer(long n, VarId q);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
LaurentPoly q_factorial(long n, VarId q);

}  // namespace tetralat

#endif
