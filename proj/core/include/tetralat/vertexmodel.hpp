#ifndef TETRALAT_VERTEXMODEL_HPP
#define TETRALAT_VERTEXMODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tetralat/fock.hpp"
#include "tetralat/laurent.hpp"

namespace tetralat {

enum class Model { q0, generic };

const char* model_name(Model m);

struct LatticeOptions {
  /// Negates the q-proportional diagonal vertex weight. Used by the harness
  /// mutation-sensitivity check; never set in normal operation.
  bool flip_sixth_vertex = false;
};

/// One summand of a lattice operator: an exact scalar times a product of
/// single-site oscillator operators, at most one per site.
struct LatticeTerm {
  LaurentPoly scalar;
  std::vector<std::pair<int, SiteOpKind>> ops;  // (site position, op), position-sorted
  int boundary_reds = 0;  // number of 1s on the weighted (top) boundary
};

/// A lattice operator (X or Y column) as an explicit sum of LatticeTerms,
/// acting on occupation states by position.
///
/// X wiring convention (pinned by the explicit rank-3 operators and the
/// q=0 identities): vertex (k,l) of D_n has ports (h_in, v_in) -> (h_out,
/// v_out); the L element [L]_{h_in v_in}^{h_out v_out} takes values
///   [L]00^00 = [L]11^11 = 1,  [L]10^01 = z a+,  [L]01^10 = z^-1 a-,
///   [L]01^01 = k,             [L]10^10 = -q k
/// (q=0 model: b+, b-, t and no [L]10^10). Horizontal lines run along rows
/// left to right and bend upward at the staircase edge into the next column:
/// h_out(k, n-k) feeds v_in(k-1, n-k+1). Fixed boundary color p sits on the
/// bottom edge of column p: v_in(n-1, 1) for p=1, the bend edge for
/// 1 < p < n, and h_out(1, n-1) for p=n. Row h_in edges on the left are
/// summed over; the weighted top boundary is v_out(1, l) for l=1..n-1 plus
/// the p=n edge. In the q=0 model the scalar weight is z^(top reds); in the
/// generic model z enters only through the L elements.
class LatticeOperator {
public:
  Model model = Model::q0;
  int n = 0;                    // rank (X) or chain length (Y column)
  int site_count = 0;
  int i = 0;                    // bottom boundary: first i columns red
  std::optional<int> j;         // set for X_{i,j}: top-red count restricted to j
  std::optional<VarId> z;       // spectral variable (unset for X_{i,j})
  std::vector<LatticeTerm> terms;

  /// Applies this operator to a basis state: out-states with exact
  /// coefficients, zero-coefficient entries dropped. Creations beyond
  /// `cutoff` throw CutoffExceeded.
  std::vector<std::pair<OccupationState, LaurentPoly>> apply(const OccupationState& s,
                                                             int cutoff, VarId q) const;

  std::string to_string() const;
};

LatticeOperator build_x_operator(int n, int i, VarId z, Model model, VarId q,
                                 const LatticeOptions& opts = {});

/// q=0 only: the z-degree-j piece, X_i^{(n)}(z) = sum_j z^j X_{i,j}^{(n)}.
LatticeOperator build_x_ij(int n, int i, int j, VarId q, const LatticeOptions& opts = {});

/// One column of the Y_l^{(l)} operator on F^{tensor l} (generic model).
/// The column crosses the l Fock lines from layer l (bottom) to layer 1
/// (top); per layer the right horizontal edge is fixed blue and the left one
/// is summed, which admits exactly the three local configurations
/// [L]00^00, [L]10^01 and [L]01^01. The L element in layer j carries the
/// spectral variable grid[j-1].
LatticeOperator build_y_column(int ell, const std::vector<VarId>& grid, VarId q,
                               const LatticeOptions& opts = {});

/// Finitely supported operator on the truncated space, materialized on an
/// explicit domain of basis states.
class SparseOperator {
public:
  using Column = std::map<OccupationState, LaurentPoly>;

  SparseOperator(Model model, int n, int cutoff) : model_(model), n_(n), cutoff_(cutoff) {}

  static SparseOperator identity(Model model, int n, int cutoff,
                                 const std::vector<OccupationState>& domain);
  static SparseOperator materialize(const LatticeOperator& op,
                                    const std::vector<OccupationState>& domain, int cutoff,
                                    VarId q);

  Model model() const { return model_; }
  int rank() const { return n_; }
  int cutoff() const { return cutoff_; }
  const std::map<OccupationState, Column>& action() const { return action_; }

  bool has_state(const OccupationState& s) const { return action_.count(s) != 0; }
  const Column& column(const OccupationState& s) const;

  /// Exact operator product this∘other; `this` must be materialized on every
  /// state in the range of `other`.
  SparseOperator compose(const SparseOperator& other) const;

  SparseOperator scaled(const LaurentPoly& c) const;
  SparseOperator plus(const SparseOperator& other) const;
  SparseOperator minus(const SparseOperator& other) const;

  bool is_zero() const;
  friend bool operator==(const SparseOperator& a, const SparseOperator& b);

  /// Sorted (in-state, out-state, coefficient) triples in canonical text form.
  std::string dump() const;

private:
  Model model_;
  int n_;
  int cutoff_;
  std::map<OccupationState, Column> action_;
};

/// All occupation states on `site_count` sites with every occupation <= max_occ.
std::vector<OccupationState> states_up_to(int site_count, int max_occ);

}  // namespace tetralat

#endif
