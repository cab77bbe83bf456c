#include "tetralat/fock.hpp"

#include <sstream>

#include "tetralat/error.hpp"

namespace tetralat {

FockLayout::FockLayout(int n) : n_(n) {
  if (n < 1) fail(Errc::OutOfRange, "rank must be >= 1");
  for (int k = 1; k <= n - 1; ++k)
    for (int l = 1; l <= n - k; ++l) sites_.push_back({k, l});
}

int FockLayout::position(int k, int l) const {
  if (k < 1 || l < 1 || k + l > n_) return -1;
  // Row-major: rows 1..k-1 contribute (n-1) + (n-2) + ... terms.
  int pos = 0;
  for (int r = 1; r < k; ++r) pos += n_ - r;
  return pos + (l - 1);
}

OccupationState vacuum_state(const FockLayout& layout) {
  return OccupationState(static_cast<std::size_t>(layout.site_count()), 0);
}

int max_occupation(const OccupationState& s) {
  int m = 0;
  for (auto v : s) m = std::max(m, static_cast<int>(v));
  return m;
}

std::string state_to_string(const FockLayout& layout, const OccupationState& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < layout.site_count(); ++i) {
    if (!first) os << ", ";
    first = false;
    os << "(" << layout.sites()[i].k << "," << layout.sites()[i].l
       << "): " << static_cast<int>(s[i]);
  }
  os << "}";
  return os.str();
}

const char* site_op_name(SiteOpKind kind) {
  switch (kind) {
    case SiteOpKind::Id: return "1";
    case SiteOpKind::BPlus: return "b+";
    case SiteOpKind::BMinus: return "b-";
    case SiteOpKind::TProj: return "t";
    case SiteOpKind::APlus: return "a+";
    case SiteOpKind::AMinus: return "a-";
    case SiteOpKind::Kdiag: return "k";
  }
  return "?";
}

std::optional<std::pair<int, LaurentPoly>> apply_site_op(SiteOpKind kind, int m, int cutoff,
                                                         VarId q) {
  switch (kind) {
    case SiteOpKind::Id:
      return std::make_pair(m, LaurentPoly(1));
    case SiteOpKind::BPlus:
    case SiteOpKind::APlus:
      if (m + 1 > cutoff)
        fail(Errc::CutoffExceeded, "creation above cutoff " + std::to_string(cutoff));
      return std::make_pair(m + 1, LaurentPoly(1));
    case SiteOpKind::BMinus:
      if (m == 0) return std::nullopt;
      return std::make_pair(m - 1, LaurentPoly(1));
    case SiteOpKind::TProj:
      if (m != 0) return std::nullopt;
      return std::make_pair(0, LaurentPoly(1));
    case SiteOpKind::AMinus: {
      if (m == 0) return std::nullopt;
      LaurentPoly c = LaurentPoly(1) - LaurentPoly::variable(q, 2 * m);
      return std::make_pair(m - 1, c);
    }
    case SiteOpKind::Kdiag:
      return std::make_pair(m, LaurentPoly::variable(q, m));
  }
  return std::nullopt;
}

LaurentPoly pairing(int bra_occ, int ket_occ, VarId q, bool normalized) {
  if (bra_occ != ket_occ) return LaurentPoly(0);
  if (normalized) return LaurentPoly(1);
  // (q^2;q^2)_m = prod_{r=1..m} (1 - q^{2r})
  LaurentPoly out(1);
  for (int r = 1; r <= bra_occ; ++r) out *= LaurentPoly(1) - LaurentPoly::variable(q, 2 * r);
  return out;
}

namespace {

using OpSeq = std::vector<SiteOpKind>;

// Applies ops right to left to |m>, fully symbolic; nullopt when annihilated.
std::optional<std::pair<int, LaurentPoly>> apply_seq(const OpSeq& seq, int m, int cutoff,
                                                     VarId q) {
  LaurentPoly coeff(1);
  int cur = m;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    auto r = apply_site_op(*it, cur, cutoff, q);
    if (!r) return std::nullopt;
    cur = r->first;
    coeff *= r->second;
  }
  return std::make_pair(cur, coeff);
}

// Operator identity lhs == rhs + c on occupations 0..M-1, where rhs may be
// empty (zero) and c is a polynomial multiple of the identity or of another
// diagonal sequence.
bool seq_identity(const OpSeq& lhs, const LaurentPoly& lhs_scale, const OpSeq& rhs,
                  const LaurentPoly& rhs_scale, const LaurentPoly& id_coeff,
                  const OpSeq& diag, const LaurentPoly& diag_coeff, int M, VarId q) {
  for (int m = 0; m < M; ++m) {
    std::map<int, LaurentPoly> acc;
    auto l = apply_seq(lhs, m, M + 2, q);
    if (l) acc[l->first] += lhs_scale * l->second;
    auto r = apply_seq(rhs, m, M + 2, q);
    if (r) acc[r->first] -= rhs_scale * r->second;
    if (!id_coeff.is_zero()) acc[m] -= id_coeff;
    if (!diag.empty()) {
      auto d = apply_seq(diag, m, M + 2, q);
      if (d) acc[d->first] -= diag_coeff * d->second;
    }
    for (const auto& [occ, c] : acc) {
      (void)occ;
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RelationCheck> oscillator_relation_check(OscillatorModel model, int M, VarId q) {
  if (M < 2) fail(Errc::OutOfRange, "relation check needs M >= 2");
  std::vector<RelationCheck> out;
  LaurentPoly one(1), zero(0);
  LaurentPoly q2 = LaurentPoly::variable(q, 2);
  using K = SiteOpKind;
  auto check = [&](const std::string& name, bool ok) { out.push_back({name, ok}); };

  if (model == OscillatorModel::q0) {
    check("t b+ = 0", seq_identity({K::TProj, K::BPlus}, one, {}, zero, zero, {}, zero, M, q));
    check("b- t = 0", seq_identity({K::BMinus, K::TProj}, one, {}, zero, zero, {}, zero, M, q));
    check("b+ b- = 1 - t",
          seq_identity({K::BPlus, K::BMinus}, one, {}, zero, one, {K::TProj}, -one, M, q));
    check("b- b+ = 1", seq_identity({K::BMinus, K::BPlus}, one, {}, zero, one, {}, zero, M, q));
    check("t t = t", seq_identity({K::TProj, K::TProj}, one, {K::TProj}, one, zero, {}, zero, M, q));
  } else {
    check("k a+ = q a+ k",
          seq_identity({K::Kdiag, K::APlus}, one, {K::APlus, K::Kdiag},
                       LaurentPoly::variable(q), zero, {}, zero, M, q));
    check("q k a- = a- k",
          seq_identity({K::Kdiag, K::AMinus}, LaurentPoly::variable(q), {K::AMinus, K::Kdiag},
                       one, zero, {}, zero, M, q));
    check("a- a+ = 1 - q^2 k^2",
          seq_identity({K::AMinus, K::APlus}, one, {}, zero, one, {K::Kdiag, K::Kdiag}, -q2, M, q));
    check("a+ a- = 1 - k^2",
          seq_identity({K::APlus, K::AMinus}, one, {}, zero, one, {K::Kdiag, K::Kdiag}, -one, M, q));
  }
  return out;
}

}  // namespace tetralat
