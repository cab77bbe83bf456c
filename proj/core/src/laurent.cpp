#include "tetralat/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "tetralat/error.hpp"

namespace tetralat {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

std::int64_t mono_total_degree(const Monomial& m) {
  std::int64_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

int mono_degree_in(const Monomial& m, VarId v) {
  for (const auto& [w, e] : m)
    if (w == v) return e;
  return 0;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  std::int64_t da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Lex on the dense exponent vectors: walk ids in increasing order.
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    VarId va = i < a.size() ? a[i].first : UINT32_MAX;
    VarId vb = j < b.size() ? b[j].first : UINT32_MAX;
    VarId v = std::min(va, vb);
    int ea = (va == v) ? a[i].second : 0;
    int eb = (vb == v) ? b[j].second : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return 0;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(VarId v, int exp) {
  LaurentPoly p;
  if (exp == 0) return LaurentPoly(1);
  p.terms_.emplace(Monomial{{v, exp}}, Rational(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& c) {
  LaurentPoly p;
  if (c.is_zero()) return p;
  // canonicalize: sort by variable id, merge repeats, drop zero exponents
  Monomial sorted = m;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial canon;
  for (const auto& [v, e] : sorted) {
    if (!canon.empty() && canon.back().first == v)
      canon.back().second += e;
    else
      canon.emplace_back(v, e);
  }
  canon.erase(std::remove_if(canon.begin(), canon.end(),
                             [](const auto& p2) { return p2.second == 0; }),
              canon.end());
  p.terms_.emplace(std::move(canon), c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational LaurentPoly::constant_coeff() const { return coeff(Monomial{}); }

Rational LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  terms_.swap(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e == 0) return LaurentPoly(1);
  if (e < 0) {
    if (terms_.size() != 1) fail(Errc::NotDivisible, "negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (const auto& [v, k] : m) inv.emplace_back(v, -k);
    return LaurentPoly::monomial(inv, c.inverse()).pow(-e);
  }
  LaurentPoly base = *this, acc(1);
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= base;
    if (k >>= 1) base *= base;
  }
  return acc;
}

namespace {

// Componentwise minimum exponent over the support, as a monomial.
Monomial support_min_exponents(const LaurentPoly::TermMap& terms) {
  std::map<VarId, int> mins;
  std::map<VarId, int> seen_count;
  std::size_t nterms = 0;
  for (const auto& [m, c] : terms) {
    (void)c;
    ++nterms;
    for (const auto& [v, e] : m) {
      auto it = mins.find(v);
      if (it == mins.end()) {
        mins[v] = e;
      } else {
        it->second = std::min(it->second, e);
      }
      seen_count[v]++;
    }
  }
  Monomial out;
  for (auto& [v, e] : mins) {
    // A variable missing from some term has exponent 0 there.
    if (seen_count[v] < static_cast<int>(nterms)) e = std::min(e, 0);
    if (e != 0) out.emplace_back(v, e);
  }
  return out;
}

Monomial mono_negate(const Monomial& m) {
  Monomial out;
  out.reserve(m.size());
  for (const auto& [v, e] : m) out.emplace_back(v, -e);
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& den) const {
  if (den.is_zero()) fail(Errc::NotDivisible, "division by zero polynomial");
  if (is_zero()) return LaurentPoly();

  // Shift both operands into the ordinary polynomial ring; the exact Laurent
  // quotient, if it exists, shifts accordingly.
  Monomial num_shift = support_min_exponents(terms_);
  Monomial den_shift = support_min_exponents(den.terms_);
  LaurentPoly num_p = *this * LaurentPoly::monomial(mono_negate(num_shift), 1);
  LaurentPoly den_p = den * LaurentPoly::monomial(mono_negate(den_shift), 1);

  LaurentPoly quot;
  LaurentPoly rem = num_p;
  const auto& den_lead = *den_p.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rem_lead = *rem.terms_.rbegin();
    Monomial t = mono_mul(rem_lead.first, mono_negate(den_lead.first));
    for (const auto& [v, e] : t)
      if (e < 0) fail(Errc::NotDivisible, "no exact Laurent quotient");
    Rational c = rem_lead.second / den_lead.second;
    LaurentPoly step = LaurentPoly::monomial(t, c);
    quot += step;
    rem -= step * den_p;
  }
  return quot * LaurentPoly::monomial(mono_mul(num_shift, mono_negate(den_shift)), 1);
}

LaurentPoly LaurentPoly::substitute(const std::map<VarId, LaurentPoly>& bindings) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    LaurentPoly term = LaurentPoly(c);
    Monomial kept;
    for (const auto& [v, e] : m) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      const LaurentPoly& b = it->second;
      if (e < 0) {
        if (b.is_zero()) fail(Errc::PoleAtZero, "zero bound to " + var_name(v) + "^" + std::to_string(e));
        if (!b.is_single_term())
          fail(Errc::NotDivisible,
               "negative power of non-monomial binding for " + var_name(v));
      }
      term *= b.pow(e);
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    out += term * LaurentPoly::monomial(kept, 1);
  }
  return out;
}

Rational LaurentPoly::evaluate(const std::map<VarId, Rational>& bindings) const {
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = bindings.find(v);
      if (it == bindings.end()) fail(Errc::Internal, "unbound variable " + var_name(v));
      t *= it->second.pow(e);
    }
    out += t;
  }
  return out;
}

LaurentPoly LaurentPoly::swap_vars(VarId a, VarId b) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial sw;
    sw.reserve(m.size());
    for (const auto& [v, e] : m) {
      VarId w = (v == a) ? b : (v == b ? a : v);
      sw.emplace_back(w, e);
    }
    std::sort(sw.begin(), sw.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.add_term(sw, c);
  }
  return out;
}

std::vector<VarId> LaurentPoly::variables() const {
  std::vector<VarId> vars;
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [v, e] : m) {
      (void)e;
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

int LaurentPoly::degree_in(VarId v) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int e = mono_degree_in(m, v);
    d = first ? e : std::max(d, e);
    first = false;
  }
  return d;
}

int LaurentPoly::min_degree_in(VarId v) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int e = mono_degree_in(m, v);
    d = first ? e : std::min(d, e);
    first = false;
  }
  return d;
}

std::int64_t LaurentPoly::total_degree() const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    (void)c;
    std::int64_t t = mono_total_degree(m);
    d = first ? t : std::max(d, t);
    first = false;
  }
  return d;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  for (const auto& [m, c] : terms_) {
    (void)m;
    if (c.sign() < 0) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    os << a.to_string();
    for (const auto& [v, e] : m) {
      os << "*" << var_name(v);
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly poly_var(const std::string& name) { return LaurentPoly::variable(var(name)); }

// ---------------------------------------------------------------------------
// Expression parser: +, -, *, ^, parentheses, rational literals, identifiers.

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  LaurentPoly parse_expr() {
    LaurentPoly acc = parse_term_signed();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc += parse_term();
      } else if (c == '-') {
        ++pos;
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly parse_term_signed() {
    if (eat('-')) return -parse_term();
    eat('+');
    return parse_term();
  }

  LaurentPoly parse_term() {
    LaurentPoly acc = parse_power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc *= parse_power();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
        // implicit multiplication: 3z1, z1 z2, 2(x+y)
        acc *= parse_power();
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly parse_power() {
    LaurentPoly base = parse_atom();
    if (eat('^')) {
      long e = parse_int();
      return base.pow(e);
    }
    return base;
  }

  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail(Errc::Parse, "expected integer at offset " + std::to_string(pos));
    long v = std::stol(s.substr(start, pos - start));
    return neg ? -v : v;
  }

  LaurentPoly parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail(Errc::Parse, "unexpected end of expression");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      LaurentPoly inner = parse_expr();
      if (!eat(')')) fail(Errc::Parse, "missing closing parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos < s.size() && s[pos] == '/') {
        std::size_t slash = pos;
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (dstart == pos) {
          pos = slash;  // bare "/" belongs to something else
        } else {
          return LaurentPoly(Rational::from_string(s.substr(start, pos - start)));
        }
      }
      return LaurentPoly(Rational::from_string(s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return LaurentPoly::variable(var(s.substr(start, pos - start)));
    }
    if (c == '-') {
      ++pos;
      return -parse_atom();
    }
    fail(Errc::Parse, std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Parser p(text);
  LaurentPoly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) fail(Errc::Parse, "trailing input at offset " + std::to_string(p.pos));
  return out;
}

}  // namespace tetralat
