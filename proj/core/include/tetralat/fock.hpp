#ifndef TETRALAT_FOCK_HPP
#define TETRALAT_FOCK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetralat/laurent.hpp"

namespace tetralat {

/// Site (k,l) of the triangular index set D_n = {k,l >= 1, k+l <= n}.
struct SiteIndex {
  int k = 0;
  int l = 0;
  friend bool operator==(const SiteIndex&, const SiteIndex&) = default;
  friend auto operator<=>(const SiteIndex&, const SiteIndex&) = default;
};

/// Row-major enumeration of D_n; shared by all states and operators of rank n.
class FockLayout {
public:
  explicit FockLayout(int n);

  int rank() const { return n_; }
  int site_count() const { return static_cast<int>(sites_.size()); }
  const std::vector<SiteIndex>& sites() const { return sites_; }
  int position(int k, int l) const;  // -1 if outside D_n

private:
  int n_;
  std::vector<SiteIndex> sites_;
};

/// Occupation numbers per site of D_n, aligned with FockLayout order.
using OccupationState = std::vector<std::uint8_t>;

OccupationState vacuum_state(const FockLayout& layout);
int max_occupation(const OccupationState& s);
std::string state_to_string(const FockLayout& layout, const OccupationState& s);

enum class SiteOpKind : std::uint8_t { Id, BPlus, BMinus, TProj, APlus, AMinus, Kdiag };

const char* site_op_name(SiteOpKind kind);

/// Single-site action on occupation m. Returns the new occupation and exact
/// coefficient, or nothing when the state is annihilated. A creation beyond
/// `cutoff` throws CutoffExceeded rather than truncating silently.
std::optional<std::pair<int, LaurentPoly>> apply_site_op(SiteOpKind kind, int m, int cutoff,
                                                         VarId q);

/// Fock pairing <m|m'> = delta * (q^2;q^2)_m, or delta alone when normalized
/// (the double-bracket duals). At q=0 both reduce to delta.
LaurentPoly pairing(int bra_occ, int ket_occ, VarId q, bool normalized);

enum class OscillatorModel { q0, generic };

struct RelationCheck {
  std::string name;
  bool ok = false;
};

/// Verifies the defining oscillator algebra relations as operator identities
/// on occupations 0..M-1 (one below cutoff so creations stay in range).
std::vector<RelationCheck> oscillator_relation_check(OscillatorModel model, int M, VarId q);

}  // namespace tetralat

#endif
