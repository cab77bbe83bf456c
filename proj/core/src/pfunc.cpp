#include "tetralat/pfunc.hpp"

#include <cctype>
#include <sstream>

#include "tetralat/error.hpp"

namespace tetralat {

namespace {

LatticeOperator build_factor(const OperatorWord& word,
                             const std::variant<XFactor, XijFactor, YFactor>& f, VarId q) {
  if (std::holds_alternative<XFactor>(f)) {
    const auto& x = std::get<XFactor>(f);
    return build_x_operator(word.n, x.i, x.z, word.model, q, word.opts);
  }
  if (std::holds_alternative<XijFactor>(f)) {
    const auto& x = std::get<XijFactor>(f);
    if (word.model != Model::q0) fail(Errc::OutOfRange, "X_ij factors exist in the q0 model only");
    return build_x_ij(word.n, x.i, x.j, q, word.opts);
  }
  const auto& y = std::get<YFactor>(f);
  return build_y_column(word.n, y.grid, q, word.opts);
}

}  // namespace

int OperatorWord::site_count() const {
  bool has_y = false;
  for (const auto& f : factors)
    if (std::holds_alternative<YFactor>(f)) has_y = true;
  if (has_y) return n;
  return FockLayout(n).site_count();
}

StateMap apply_word(const OperatorWord& word, const StateMap& in, int cutoff, VarId q) {
  StateMap cur = in;
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    LatticeOperator op = build_factor(word, *it, q);
    StateMap next;
    for (const auto& [s, c] : cur)
      for (auto& [t, w] : op.apply(s, cutoff, q)) next[t] += c * w;
    for (auto jt = next.begin(); jt != next.end();) {
      if (jt->second.is_zero())
        jt = next.erase(jt);
      else
        ++jt;
    }
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly vacuum_expectation(const OperatorWord& word, VarId q) {
  OccupationState vac(static_cast<std::size_t>(word.site_count()), 0);
  int cutoff = static_cast<int>(word.factors.size()) + 1;
  StateMap out = apply_word(word, {{vac, LaurentPoly(1)}}, cutoff, q);
  auto it = out.find(vac);
  return it == out.end() ? LaurentPoly(0) : it->second;
}

LaurentPoly dual_expectation(const std::vector<int>& bra, const OperatorWord& word, VarId q) {
  int sc = word.site_count();
  if (static_cast<int>(bra.size()) != sc)
    fail(Errc::OutOfRange, "bra length must match the word's Fock line count");
  OccupationState vac(static_cast<std::size_t>(sc), 0);
  OccupationState target;
  int bra_max = 0;
  for (int m : bra) {
    if (m < 0) fail(Errc::OutOfRange, "bra occupations must be nonnegative");
    target.push_back(static_cast<std::uint8_t>(m));
    bra_max = std::max(bra_max, m);
  }
  int cutoff = std::max(bra_max, static_cast<int>(word.factors.size())) + 1;
  StateMap out = apply_word(word, {{vac, LaurentPoly(1)}}, cutoff, q);
  auto it = out.find(target);
  return it == out.end() ? LaurentPoly(0) : it->second;
}

TraceResult plain_trace(const OperatorWord& word, int m_start, int m_max, VarId q) {
  if (word.model != Model::q0) fail(Errc::OutOfRange, "plain traces are defined in the q0 model");
  if (m_start < 0 || m_max < m_start) fail(Errc::OutOfRange, "bad cutoff range");
  int sc = word.site_count();
  auto trace_at = [&](int M) {
    LaurentPoly tr(0);
    int reach = M + static_cast<int>(word.factors.size()) + 1;
    for (const auto& s : states_up_to(sc, M)) {
      StateMap out = apply_word(word, {{s, LaurentPoly(1)}}, reach, q);
      auto it = out.find(s);
      if (it != out.end()) tr += it->second;
    }
    return tr;
  };
  LaurentPoly prev = trace_at(m_start);
  for (int M = m_start + 1; M <= m_max; ++M) {
    LaurentPoly cur = trace_at(M);
    if (cur == prev) return {cur, M};
    prev = std::move(cur);
  }
  fail(Errc::NotStabilized,
       "trace did not stabilize by cutoff " + std::to_string(m_max) +
           "; the word may have a divergent trace");
}

FormalSeries weighted_trace(const OperatorWord& word, const TraceWeights& weights,
                            const DegreeCaps& caps, VarId q) {
  if (word.model != Model::generic)
    fail(Errc::OutOfRange, "weighted traces are defined in the generic model");
  int sc = word.site_count();
  if (static_cast<int>(weights.t.size()) != sc || static_cast<int>(weights.Q.size()) != sc)
    fail(Errc::OutOfRange, "one (t, Q) pair per site required");

  // Per-site occupation bound: the t-degree cap of that site.
  std::vector<int> occ_cap(static_cast<std::size_t>(sc), 0);
  for (int p = 0; p < sc; ++p) {
    auto it = caps.find(weights.t[static_cast<std::size_t>(p)]);
    if (it == caps.end()) fail(Errc::OutOfRange, "every t variable needs a degree cap");
    occ_cap[static_cast<std::size_t>(p)] = it->second;
  }

  // Precompute per-site, per-occupation weight series.
  std::vector<std::vector<FormalSeries>> weight(static_cast<std::size_t>(sc));
  for (int p = 0; p < sc; ++p) {
    VarId tv = weights.t[static_cast<std::size_t>(p)];
    VarId Qv = weights.Q[static_cast<std::size_t>(p)];
    for (int m = 0; m <= occ_cap[static_cast<std::size_t>(p)]; ++m) {
      LaurentPoly num = m == 0 ? LaurentPoly(1) : LaurentPoly::variable(tv, m);
      if (weights.kind == TraceKind::B && m >= 2)
        num *= LaurentPoly::variable(Qv, m * (m - 1) / 2);
      LaurentPoly den(1);
      for (int r = 1; r <= m; ++r) den *= LaurentPoly(1) - LaurentPoly::variable(Qv, r);
      FormalSeries w =
          FormalSeries(num, caps) * FormalSeries(den, caps).inverse();
      weight[static_cast<std::size_t>(p)].push_back(std::move(w));
    }
  }

  int max_cap = 0;
  for (int c : occ_cap) max_cap = std::max(max_cap, c);
  FormalSeries total(LaurentPoly(0), caps);

  // enumerate states with occ(p) <= occ_cap[p]
  OccupationState s(static_cast<std::size_t>(sc), 0);
  int reach = max_cap + static_cast<int>(word.factors.size()) + 1;
  while (true) {
    StateMap out = apply_word(word, {{s, LaurentPoly(1)}}, reach, q);
    auto it = out.find(s);
    if (it != out.end()) {
      FormalSeries contrib(it->second, caps);
      for (int p = 0; p < sc; ++p)
        contrib = contrib * weight[static_cast<std::size_t>(p)][s[static_cast<std::size_t>(p)]];
      total = total + contrib;
    }
    int p = 0;
    while (p < sc && static_cast<int>(s[static_cast<std::size_t>(p)]) ==
                         occ_cap[static_cast<std::size_t>(p)]) {
      s[static_cast<std::size_t>(p)] = 0;
      ++p;
    }
    if (p == sc) break;
    ++s[static_cast<std::size_t>(p)];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Word syntax: NAME(key=value,...) factors separated by whitespace.

namespace {

struct WordParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail(Errc::Parse, "expected identifier in word at offset " + std::to_string(pos));
    return s.substr(start, pos - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(Errc::Parse, std::string("expected '") + c + "' in word");
    ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  std::map<std::string, std::string> args() {
    std::map<std::string, std::string> kv;
    expect('(');
    while (!peek_is(')')) {
      std::string key = ident();
      expect('=');
      std::string val = ident();
      kv[key] = val;
      if (peek_is(',')) ++pos;
    }
    expect(')');
    return kv;
  }
};

int to_int(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) fail(Errc::Parse, "missing word argument '" + key + "'");
  try {
    return std::stoi(it->second);
  } catch (...) {
    fail(Errc::Parse, "bad integer for '" + key + "'");
  }
}

}  // namespace

OperatorWord OperatorWord::parse(const std::string& text, Model model) {
  OperatorWord word;
  word.model = model;
  WordParser p{text};
  p.skip_ws();
  while (p.pos < text.size()) {
    std::string name = p.ident();
    auto kv = p.args();
    if (name == "X") {
      int n = to_int(kv, "n");
      if (word.n == 0) word.n = n;
      if (word.n != n) fail(Errc::Parse, "all factors must share the same rank");
      auto it = kv.find("z");
      if (it == kv.end()) fail(Errc::Parse, "X factor needs z=<var>");
      word.factors.push_back(XFactor{to_int(kv, "i"), var(it->second)});
    } else if (name == "Xij") {
      int n = to_int(kv, "n");
      if (word.n == 0) word.n = n;
      if (word.n != n) fail(Errc::Parse, "all factors must share the same rank");
      word.factors.push_back(XijFactor{to_int(kv, "i"), to_int(kv, "j")});
    } else if (name == "Y") {
      int ell = to_int(kv, "l");
      if (word.n == 0) word.n = ell;
      if (word.n != ell) fail(Errc::Parse, "all factors must share the same chain length");
      int k = to_int(kv, "k");
      YFactor y;
      y.column = k;
      auto eq = kv.find("eq");
      for (int j = 1; j <= ell; ++j)
        y.grid.push_back(eq != kv.end() ? var(eq->second) : var_grid("z", k, j));
      word.factors.push_back(std::move(y));
    } else {
      fail(Errc::Parse, "unknown factor '" + name + "'");
    }
    p.skip_ws();
  }
  if (word.factors.empty() && word.n == 0) word.n = 1;
  if (word.n == 0) fail(Errc::Parse, "empty word");
  return word;
}

std::string OperatorWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << " ";
    first = false;
    if (std::holds_alternative<XFactor>(f)) {
      const auto& x = std::get<XFactor>(f);
      os << "X(n=" << n << ",i=" << x.i << ",z=" << var_name(x.z) << ")";
    } else if (std::holds_alternative<XijFactor>(f)) {
      const auto& x = std::get<XijFactor>(f);
      os << "Xij(n=" << n << ",i=" << x.i << ",j=" << x.j << ")";
    } else {
      const auto& y = std::get<YFactor>(f);
      os << "Y(l=" << n << ",k=" << y.column << ")";
    }
  }
  return os.str();
}

}  // namespace tetralat
