#ifndef TETRALAT_PFUNC_HPP
#define TETRALAT_PFUNC_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tetralat/series.hpp"
#include "tetralat/vertexmodel.hpp"

namespace tetralat {

struct XFactor {
  int i = 0;
  VarId z = 0;
};

struct XijFactor {
  int i = 0;
  int j = 0;
};

/// One Y_l^{(l)} column with its per-layer spectral variables.
struct YFactor {
  int column = 0;
  std::vector<VarId> grid;
};

/// An ordered product of lattice operators sharing model and rank; leftmost
/// factor acts last.
struct OperatorWord {
  Model model = Model::q0;
  int n = 0;  // rank for X words, chain length for Y words
  LatticeOptions opts{};
  std::vector<std::variant<XFactor, XijFactor, YFactor>> factors;

  /// Parses the CLI word syntax, e.g. "X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)",
  /// "Xij(n=3,i=2,j=1)" or "Y(l=5,k=1)" (grid variables z<k>_<j>; pass
  /// eq=<name> for equal-variable columns).
  static OperatorWord parse(const std::string& text, Model model);

  std::string to_string() const;
  int site_count() const;
};

using StateMap = std::map<OccupationState, LaurentPoly>;

/// Applies the word to a linear combination of states (rightmost factor
/// first). Coefficients stay exact; zero entries are dropped.
StateMap apply_word(const OperatorWord& word, const StateMap& in, int cutoff, VarId q);

/// <O| word |O>, with the cutoff chosen as factor count + 1 so that
/// CutoffExceeded is unreachable.
LaurentPoly vacuum_expectation(const OperatorWord& word, VarId q);

/// <<bra| word |O> with normalized dual states.
LaurentPoly dual_expectation(const std::vector<int>& bra, const OperatorWord& word, VarId q);

struct TraceResult {
  LaurentPoly value;
  int stabilized_at = 0;  // cutoff at which two consecutive values agreed
};

/// Plain q=0 trace with stabilization detection: evaluates the truncated
/// trace at cutoffs M_start, M_start+1, ... and returns once two consecutive
/// cutoffs agree; throws NotStabilized when M_max is reached first.
TraceResult plain_trace(const OperatorWord& word, int m_start, int m_max, VarId q);

enum class TraceKind { A, B };

struct TraceWeights {
  TraceKind kind = TraceKind::A;
  std::vector<VarId> t;  // one per site
  std::vector<VarId> Q;  // one per site
};

/// Weighted trace Tr^{A/B} as a truncated formal series; per-site weights
/// t^m/(Q;Q)_m (A) or Q^{m(m-1)/2} t^m/(Q;Q)_m (B). The occupation sum per
/// site stops at that site's t-cap, beyond which terms fall outside the caps.
FormalSeries weighted_trace(const OperatorWord& word, const TraceWeights& weights,
                            const DegreeCaps& caps, VarId q);

}  // namespace tetralat

#endif
