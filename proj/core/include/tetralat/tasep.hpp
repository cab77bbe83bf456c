#ifndef TETRALAT_TASEP_HPP
#define TETRALAT_TASEP_HPP

#include <map>
#include <string>
#include <vector>

#include "tetralat/rational.hpp"

namespace tetralat {

/// Species labels 0..n around a periodic chain; index 0 is site 1.
using TasepConfig = std::vector<int>;

/// Species multiplicities (m_0, ..., m_n) with sum = number of sites.
struct TasepSector {
  int species = 0;  // n
  std::vector<int> counts;

  int sites() const;
  static TasepSector of_config(int species, const TasepConfig& config);
};

std::string config_to_string(const TasepConfig& c);

/// All configurations of the sector in lexicographic order.
std::vector<TasepConfig> sector_configs(const TasepSector& sector);

/// Dense exact-rational matrix.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;  // row-major

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

/// Markov generator restricted to the sector: column sigma has +1 toward each
/// single-swap target (adjacent alpha > beta around the ring, cyclic) and the
/// negated swap count on the diagonal.
RationalMatrix build_generator(const TasepSector& sector);

/// One-dimensional kernel of the generator via fraction-free elimination,
/// scaled so the weakly decreasing configuration has value 1. Throws
/// KernelDimensionError when the kernel is not one-dimensional.
std::map<TasepConfig, Rational> steady_state_kernel(const TasepSector& sector);

/// Matrix-product value: the plain q=0 trace of X_{sigma_1}(1)...X_{sigma_L}(1).
/// Every species 0..n must appear in the sector (the finite-trace class).
Rational steady_state_trace(const TasepSector& sector, const TasepConfig& config);

/// Closed form (j <= k+1; j = k+1 gives the empty partition) for
/// configurations of the shape
///   (n^{a_n}, ..., (k+1)^{a_{k+1}}, (j-1)^{a_{j-1}}, ..., 0^{a_0}, k^{a_k}, ..., j^{a_j}):
/// the value s_{(k+1-j)^M}(1^K) with M = sum_{l>k} a_l and K = M + sum_{l<j} a_l.
Rational steady_closed_form(int n, int j, int k, const std::vector<int>& block_sizes);

/// The configuration of the closed-form shape above, for cross-checking.
TasepConfig closed_form_config(int n, int j, int k, const std::vector<int>& block_sizes);

}  // namespace tetralat

#endif
