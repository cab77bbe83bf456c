#include "tetralat/vertexmodel.hpp"

#include <algorithm>
#include <sstream>

#include "tetralat/error.hpp"

namespace tetralat {

const char* model_name(Model m) { return m == Model::q0 ? "q0" : "generic"; }

namespace {

struct RawTerm {
  std::vector<std::pair<int, SiteOpKind>> ops;
  int boundary_reds = 0;
  int z_exp = 0;    // generic: net z power from a+ / a- elements
  int mq_count = 0; // generic: number of -q k vertices
};

// DFS over lattice colorings for X_i^{(n)}. Rows are processed bottom (k=n-1)
// to top (k=1), each row left to right, so every vertex sees its v_in (from
// the row below or a bottom-boundary edge) and h_in (from the left) already
// decided. The bend at the end of row k carries fixed boundary color n+1-k.
struct XBuilder {
  int n;
  int i;
  Model model;
  FockLayout layout;
  std::vector<int> vcol;  // pending vertical color per column (index 1..n-1)
  std::vector<std::pair<int, SiteOpKind>> ops;
  int z_exp = 0;
  int mq_count = 0;
  std::vector<RawTerm>* out = nullptr;

  XBuilder(int n_, int i_, Model m)
      : n(n_), i(i_), model(m), layout(n_), vcol(static_cast<std::size_t>(n_) + 1, 0) {
    vcol[1] = pattern(1) ? 1 : 0;  // bottom edge of column 1 (boundary position 1)
  }

  bool pattern(int p) const { return p <= i; }

  void finalize() {
    RawTerm term;
    term.ops = ops;
    std::sort(term.ops.begin(), term.ops.end());
    int reds = pattern(n) ? 1 : 0;
    for (int l = 1; l <= n - 1; ++l) reds += vcol[static_cast<std::size_t>(l)];
    term.boundary_reds = reds;
    term.z_exp = z_exp;
    term.mq_count = mq_count;
    out->push_back(std::move(term));
  }

  void run_row(int k) {
    if (k == 0) {
      finalize();
      return;
    }
    // summed left entry: h in {0,1}
    for (int h = 0; h <= 1; ++h) run_vertex(k, 1, h);
  }

  void run_vertex(int k, int l, int h) {
    if (l > n - k) {
      // end of row k: h is the fixed boundary color at position n+1-k
      int p = n + 1 - k;
      if (h != (pattern(p) ? 1 : 0)) return;
      if (k >= 2) {
        int save = vcol[static_cast<std::size_t>(p)];
        vcol[static_cast<std::size_t>(p)] = h;
        run_row(k - 1);
        vcol[static_cast<std::size_t>(p)] = save;
      } else {
        run_row(0);
      }
      return;
    }
    int pos = layout.position(k, l);
    int v = vcol[static_cast<std::size_t>(l)];
    auto descend = [&](int h_out, int v_out, std::optional<SiteOpKind> op, int dz, int dmq) {
      if (op) ops.emplace_back(pos, *op);
      z_exp += dz;
      mq_count += dmq;
      int save = vcol[static_cast<std::size_t>(l)];
      vcol[static_cast<std::size_t>(l)] = v_out;
      run_vertex(k, l + 1, h_out);
      vcol[static_cast<std::size_t>(l)] = save;
      z_exp -= dz;
      mq_count -= dmq;
      if (op) ops.pop_back();
    };
    bool q0 = model == Model::q0;
    if (h == 0 && v == 0) {
      descend(0, 0, std::nullopt, 0, 0);  // [L]00^00
    } else if (h == 1 && v == 1) {
      descend(1, 1, std::nullopt, 0, 0);  // [L]11^11
    } else if (h == 1 && v == 0) {
      descend(0, 1, q0 ? SiteOpKind::BPlus : SiteOpKind::APlus, q0 ? 0 : 1, 0);  // [L]10^01
      if (!q0) descend(1, 0, SiteOpKind::Kdiag, 0, 1);                           // [L]10^10
    } else {  // h == 0, v == 1
      descend(1, 0, q0 ? SiteOpKind::BMinus : SiteOpKind::AMinus, q0 ? 0 : -1, 0);  // [L]01^10
      descend(0, 1, q0 ? SiteOpKind::TProj : SiteOpKind::Kdiag, 0, 0);              // [L]01^01
    }
  }
};

}  // namespace

LatticeOperator build_x_operator(int n, int i, VarId z, Model model, VarId q,
                                 const LatticeOptions& opts) {
  if (i < 0 || i > n) fail(Errc::OutOfRange, "boundary index i must be in 0..n");
  XBuilder b(n, i, model);
  std::vector<RawTerm> raw;
  b.out = &raw;
  b.run_row(n - 1);

  LatticeOperator op;
  op.model = model;
  op.n = n;
  op.site_count = b.layout.site_count();
  op.i = i;
  op.z = z;
  for (auto& r : raw) {
    LatticeTerm t;
    t.ops = std::move(r.ops);
    t.boundary_reds = r.boundary_reds;
    if (model == Model::q0) {
      t.scalar = r.boundary_reds == 0 ? LaurentPoly(1)
                                      : LaurentPoly::variable(z, r.boundary_reds);
    } else {
      t.scalar = r.z_exp == 0 ? LaurentPoly(1) : LaurentPoly::variable(z, r.z_exp);
      if (r.mq_count != 0) {
        // the sixth vertex contributes (-q)^count; the mutation hook flips it to (+q)^count
        bool negative = (r.mq_count % 2 != 0) && !opts.flip_sixth_vertex;
        t.scalar *= LaurentPoly::variable(q, r.mq_count) * Rational(negative ? -1 : 1);
      }
    }
    op.terms.push_back(std::move(t));
  }
  return op;
}

LatticeOperator build_x_ij(int n, int i, int j, VarId q, const LatticeOptions& opts) {
  (void)q;
  (void)opts;
  if (i < 0 || i > n) fail(Errc::OutOfRange, "boundary index i must be in 0..n");
  XBuilder b(n, i, Model::q0);
  std::vector<RawTerm> raw;
  b.out = &raw;
  b.run_row(n - 1);

  LatticeOperator op;
  op.model = Model::q0;
  op.n = n;
  op.site_count = b.layout.site_count();
  op.i = i;
  op.j = j;
  for (auto& r : raw) {
    if (r.boundary_reds != j) continue;
    LatticeTerm t;
    t.ops = std::move(r.ops);
    t.boundary_reds = r.boundary_reds;
    t.scalar = LaurentPoly(1);
    op.terms.push_back(std::move(t));
  }
  return op;
}

LatticeOperator build_y_column(int ell, const std::vector<VarId>& grid, VarId q,
                               const LatticeOptions& opts) {
  (void)q;
  (void)opts;
  if (ell < 1) fail(Errc::OutOfRange, "Y column needs ell >= 1");
  if (static_cast<int>(grid.size()) != ell)
    fail(Errc::OutOfRange, "Y column needs one spectral variable per layer");
  LatticeOperator op;
  op.model = Model::generic;
  op.n = ell;
  op.site_count = ell;
  op.i = 0;

  // Walk the vertical line from layer ell (bottom) to layer 1 (top). With
  // the right edges fixed blue, a branch either stays empty or turns red at
  // a single creation layer j and stays red above it ([L]01^01 = k).
  // Identity branch:
  op.terms.push_back(LatticeTerm{LaurentPoly(1), {}, 0});
  for (int j = ell; j >= 1; --j) {
    LatticeTerm t;
    t.scalar = LaurentPoly::variable(grid[static_cast<std::size_t>(j - 1)]);
    t.ops.emplace_back(j - 1, SiteOpKind::APlus);
    for (int p = j - 1; p >= 1; --p) t.ops.emplace_back(p - 1, SiteOpKind::Kdiag);
    std::sort(t.ops.begin(), t.ops.end());
    t.boundary_reds = 1;
    op.terms.push_back(std::move(t));
  }
  return op;
}

std::vector<std::pair<OccupationState, LaurentPoly>> LatticeOperator::apply(
    const OccupationState& s, int cutoff, VarId q) const {
  std::map<OccupationState, LaurentPoly> acc;
  for (const auto& term : terms) {
    OccupationState t = s;
    LaurentPoly coeff = term.scalar;
    bool dead = false;
    for (const auto& [pos, kind] : term.ops) {
      auto r = apply_site_op(kind, t[static_cast<std::size_t>(pos)], cutoff, q);
      if (!r) {
        dead = true;
        break;
      }
      t[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(r->first);
      coeff *= r->second;
    }
    if (dead || coeff.is_zero()) continue;
    acc[t] += coeff;
  }
  std::vector<std::pair<OccupationState, LaurentPoly>> out;
  for (auto& [st, c] : acc)
    if (!c.is_zero()) out.emplace_back(st, std::move(c));
  return out;
}

std::string LatticeOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.scalar.to_string() << ")";
    for (const auto& [pos, kind] : t.ops) os << " " << site_op_name(kind) << "[" << pos << "]";
  }
  if (first) os << "0";
  return os.str();
}

SparseOperator SparseOperator::identity(Model model, int n, int cutoff,
                                        const std::vector<OccupationState>& domain) {
  SparseOperator op(model, n, cutoff);
  for (const auto& s : domain) op.action_[s][s] = LaurentPoly(1);
  return op;
}

SparseOperator SparseOperator::materialize(const LatticeOperator& op,
                                           const std::vector<OccupationState>& domain,
                                           int cutoff, VarId q) {
  SparseOperator sp(op.model, op.n, cutoff);
  for (const auto& s : domain) {
    Column col;
    for (auto& [t, c] : op.apply(s, cutoff, q)) col[t] = c;
    sp.action_.emplace(s, std::move(col));
  }
  return sp;
}

const SparseOperator::Column& SparseOperator::column(const OccupationState& s) const {
  auto it = action_.find(s);
  if (it == action_.end()) fail(Errc::Internal, "state outside materialized domain");
  return it->second;
}

SparseOperator SparseOperator::compose(const SparseOperator& other) const {
  SparseOperator out(model_, n_, std::min(cutoff_, other.cutoff_));
  for (const auto& [s, mid_col] : other.action_) {
    Column col;
    for (const auto& [mid, c_mid] : mid_col) {
      const Column& final_col = column(mid);
      for (const auto& [t, c_t] : final_col) {
        auto [it, inserted] = col.emplace(t, c_mid * c_t);
        if (!inserted) it->second += c_mid * c_t;
      }
    }
    for (auto it = col.begin(); it != col.end();) {
      if (it->second.is_zero())
        it = col.erase(it);
      else
        ++it;
    }
    out.action_.emplace(s, std::move(col));
  }
  return out;
}

SparseOperator SparseOperator::scaled(const LaurentPoly& c) const {
  SparseOperator out(model_, n_, cutoff_);
  for (const auto& [s, col] : action_) {
    Column nc;
    for (const auto& [t, v] : col) {
      LaurentPoly w = v * c;
      if (!w.is_zero()) nc.emplace(t, std::move(w));
    }
    out.action_.emplace(s, std::move(nc));
  }
  return out;
}

SparseOperator SparseOperator::plus(const SparseOperator& other) const {
  SparseOperator out = *this;
  for (const auto& [s, col] : other.action_) {
    Column& dst = out.action_[s];
    for (const auto& [t, v] : col) {
      dst[t] += v;
      if (dst[t].is_zero()) dst.erase(t);
    }
  }
  return out;
}

SparseOperator SparseOperator::minus(const SparseOperator& other) const {
  return plus(other.scaled(LaurentPoly(Rational(-1))));
}

bool SparseOperator::is_zero() const {
  for (const auto& [s, col] : action_) {
    (void)s;
    for (const auto& [t, v] : col) {
      (void)t;
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

bool operator==(const SparseOperator& a, const SparseOperator& b) {
  if (a.action_.size() != b.action_.size()) return false;
  auto ita = a.action_.begin();
  auto itb = b.action_.begin();
  for (; ita != a.action_.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    const auto& ca = ita->second;
    const auto& cb = itb->second;
    // compare ignoring explicit zeros
    auto nonzero_count = [](const SparseOperator::Column& c) {
      std::size_t k = 0;
      for (const auto& [t, v] : c) {
        (void)t;
        if (!v.is_zero()) ++k;
      }
      return k;
    };
    if (nonzero_count(ca) != nonzero_count(cb)) return false;
    for (const auto& [t, v] : ca) {
      if (v.is_zero()) continue;
      auto it = cb.find(t);
      if (it == cb.end() || it->second != v) return false;
    }
  }
  return true;
}

std::string SparseOperator::dump() const {
  std::ostringstream os;
  for (const auto& [s, col] : action_) {
    for (const auto& [t, v] : col) {
      os << "[";
      for (std::size_t p = 0; p < s.size(); ++p) os << (p ? "," : "") << int(s[p]);
      os << "] -> [";
      for (std::size_t p = 0; p < t.size(); ++p) os << (p ? "," : "") << int(t[p]);
      os << "]: " << v.to_string() << "\n";
    }
  }
  return os.str();
}

std::vector<OccupationState> states_up_to(int site_count, int max_occ) {
  std::vector<OccupationState> out;
  OccupationState cur(static_cast<std::size_t>(site_count), 0);
  while (true) {
    out.push_back(cur);
    int p = 0;
    while (p < site_count && cur[static_cast<std::size_t>(p)] == max_occ) {
      cur[static_cast<std::size_t>(p)] = 0;
      ++p;
    }
    if (p == site_count) break;
    ++cur[static_cast<std::size_t>(p)];
  }
  return out;
}

}  // namespace tetralat
