#ifndef TETRALAT_SCHUBERT_HPP
#define TETRALAT_SCHUBERT_HPP

#include <map>
#include <string>
#include <vector>

#include "tetralat/laurent.hpp"
#include "tetralat/series.hpp"

namespace tetralat {

/// Permutation in one-line notation (values 1..m).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int m);
  static Permutation longest(int m);  // w0 = [m, m-1, ..., 1]

  int size() const { return static_cast<int>(line_.size()); }
  int operator()(int i) const { return line_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  const std::vector<int>& one_line() const { return line_; }

  int length() const;  // inversion count
  bool is_identity() const;

  /// Right multiplication by the adjacent transposition s_i (swaps entries at
  /// positions i, i+1).
  Permutation times_s(int i) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.line_ < b.line_; }

  std::string to_string() const;

private:
  std::vector<int> line_;
};

/// All reduced words (a_1,...,a_p) with w = s_{a_1} ... s_{a_p}.
std::vector<std::vector<int>> reduced_words(const Permutation& w);

/// Canonical variables z1..zm used by the divided-difference calculus.
std::vector<VarId> z_vars(int m);

/// Standard divided difference: (f - s_i f) / (z_i - z_{i+1}).
LaurentPoly divided_difference(int i, const LaurentPoly& f, const std::vector<VarId>& vars);

/// Twisted divided difference:
///   (z_{i+1}/z_i) (z_i f - z_{i+1} s_i f) / (z_i - z_{i+1}).
LaurentPoly modified_divided_difference(int i, const LaurentPoly& f,
                                        const std::vector<VarId>& vars);

/// Schubert polynomial (modified=false) or modified Schubert polynomial
/// (modified=true) of w, descending from the longest element. `ascent_choice`
/// selects among the available ascents at each recursion step (any choice
/// yields the same polynomial; exercised by the word-independence tests).
LaurentPoly schubert_poly(const Permutation& w, bool modified, int ascent_choice = 0);

/// Applies the composite operator for a reduced word (rightmost letter acts
/// first if `modified_ops` is read as D_{a_p} ... D_{a_1} h — i.e. the word
/// (a_1..a_p) means first a_1).
LaurentPoly apply_dd_word(const std::vector<int>& word, bool modified, const LaurentPoly& f,
                          const std::vector<VarId>& vars);

/// Expansion of D_{I} = D_{i_k} ... D_{i_1} in the basis of standard
/// divided-difference operators: returns coefficients keyed by the subword
/// permutation u = s_{j_1} ... s_{j_l} (u = id gives the constant term).
/// Throws NotReduced when I itself is not reduced.
std::map<Permutation, LaurentPoly> expand_D_in_partial(const std::vector<int>& I,
                                                       const std::vector<VarId>& vars);

/// Applies the operator partial_u (for any reduced word of u) to f.
LaurentPoly apply_partial_perm(const Permutation& u, const LaurentPoly& f,
                               const std::vector<VarId>& vars);

struct YbReport {
  bool symbolic_ok = false;  // formal exponential symbols with E_{u+v} = E_u E_v
  bool series_ok = false;    // truncated exponential series
  std::string detail;
};

/// Checks R_i(u) R_{i+1}(u+v) R_i(v) = R_{i+1}(v) R_i(u+v) R_{i+1}(u) with
/// R_i(u) = 1 + (1 - e^u) D_i, acting on sampled Laurent polynomials in
/// `nvars` variables; the series mode truncates e^u at the given degree.
YbReport yb_element_check(int i, int nvars, int series_degree, std::uint64_t seed);

struct ConjectureReport {
  bool agree = true;
  int cases_checked = 0;
  std::string counterexample;  // empty when agree
};

/// Evidence runner for the product identity
///   D_i (D_{i+1} D_i) ... (D_{i+n-1} ... D_i)
///     = prod_j (z_j / z_{n+2-j})^{j-i} partial-product prod_j z_{n+2-j}^{j-i},
/// checked on all monomials of total degree <= max_degree plus `samples`
/// random Laurent polynomials. Only i = 1 keeps every variable index
/// positive; other i throw OutOfRange.
ConjectureReport conjecture_D_product(int n, int i, int max_degree, int samples,
                                      std::uint64_t seed);

}  // namespace tetralat

#endif
