#ifndef TETRALAT_SYMFUN_HPP
#define TETRALAT_SYMFUN_HPP

#include <vector>

#include "tetralat/laurent.hpp"

namespace tetralat {

/// Integer partition; trailing zeros are normalized away.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  long weight() const;

  friend bool operator==(const Partition&, const Partition&) = default;

  std::string to_string() const;

private:
  std::vector<int> parts_;
};

/// Schur polynomial via the bialternant: det(z_i^{lambda_j + n - j}) divided
/// by the Vandermonde determinant, expanded and divided exactly.
LaurentPoly schur_bialternant(const Partition& lambda, const std::vector<VarId>& vars);

/// Alternant quotient for an arbitrary integer sequence mu (length <= #vars):
/// det(z_i^{mu_j + n - j}) / det(z_i^{n - j}). Zero when two shifted exponents
/// collide; otherwise +/- a Schur polynomial. Entries may be negative
/// (Laurent result).
LaurentPoly alternant_schur(const std::vector<int>& mu, const std::vector<VarId>& vars);

/// Elementary symmetric polynomial e_k; e_0 = 1, e_k = 0 for k > #vars.
LaurentPoly elementary(int k, const std::vector<VarId>& vars);

/// Complete homogeneous symmetric polynomial h_k.
LaurentPoly complete_homogeneous(int k, const std::vector<VarId>& vars);

/// Loop elementary symmetric function
///   e_k^{(a)} = sum_{i_1<...<i_k} z_{i_1}^{(a)} z_{i_2}^{(a+1)} ... ,
/// with color superscripts cyclic modulo `colors`. grid(i, c) names z_i^{(c)}.
LaurentPoly loop_elementary(int k, int a, int n, int colors,
                            const std::vector<std::vector<VarId>>& grid);

/// Kostka number K_{lambda,alpha}: semistandard tableaux of shape lambda and
/// content alpha (alpha in any order; 0 when |lambda| != |alpha|).
long kostka(const Partition& lambda, const std::vector<int>& alpha);

/// Hall-Littlewood t=0 symmetrization evaluated at exact points: the sum over
/// redistributions (w_1,...,w_m) of the given values into blocks of the given
/// sizes of  prod_k w_k^{lambda_k} / prod_{j<k} (1 - w_k/w_j),
/// where (1 - w_k/w_j) multiplies over all element pairs. Values must be
/// pairwise distinct and nonzero.
Rational symmetrize_blocks(const std::vector<std::pair<int, int>>& blocks /* (size, exponent) */,
                           const std::vector<Rational>& values);

/// Schur polynomial value at exact points via the bialternant determinant;
/// points must be pairwise distinct (DegeneratePoint otherwise).
Rational schur_eval(const std::vector<int>& mu, const std::vector<Rational>& values);

/// s_lambda(1^n), exact.
Rational schur_at_ones(const Partition& lambda, int n);

}  // namespace tetralat

#endif
