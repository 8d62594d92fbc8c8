#include "mono/symexpr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mono {

SymExpr::SymExpr(GaussRat c) {
  // callers may hand over fractions built from raw numerator/denominator
  // pairs, which gmp requires to be reduced before any comparison
  c.re.canonicalize();
  c.im.canonicalize();
  if (!c.is_zero()) terms_[Monomial::one()] = c;
}

SymExpr SymExpr::symbol(int id, int exp) {
  SymExpr e;
  e.add_term(GaussRat(Rat(1)), Monomial::sym(id, exp));
  return e;
}

SymExpr SymExpr::symbol(const std::string& name, int exp) {
  return symbol(SymbolTable::instance().id(name), exp);
}

SymExpr SymExpr::i() {
  SymExpr e;
  e.add_term(GaussRat::i(), Monomial::one());
  return e;
}

bool SymExpr::is_one() const {
  auto c = constant_value();
  return c && c->is_one();
}

std::optional<GaussRat> SymExpr::constant_value() const {
  if (terms_.empty()) return GaussRat();
  if (terms_.size() == 1 && terms_.begin()->first.trivial())
    return terms_.begin()->second;
  return std::nullopt;
}

void SymExpr::add_term(const GaussRat& c, const Monomial& m) {
  if (c.is_zero()) return;
  auto nf = normalize_monomial(m);
  GaussRat scaled = c * nf.scale;
  auto it = terms_.find(nf.m);
  if (it == terms_.end()) {
    terms_[nf.m] = scaled;
  } else {
    it->second = it->second + scaled;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymExpr SymExpr::operator-() const {
  SymExpr r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

SymExpr SymExpr::operator+(const SymExpr& o) const {
  SymExpr r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(c, m);
  return r;
}

SymExpr SymExpr::operator-(const SymExpr& o) const {
  SymExpr r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(-c, m);
  return r;
}

SymExpr SymExpr::operator*(const SymExpr& o) const {
  SymExpr r;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(c1 * c2, m1 * m2);
  return r;
}

SymExpr SymExpr::inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("inverse requires a single-term expression");
  auto& [m, c] = *terms_.begin();
  Monomial inv;
  for (auto& [s, e] : m.e) inv.e.push_back({s, -e});
  SymExpr r;
  r.add_term(c.inverse(), inv);
  return r;
}

SymExpr SymExpr::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  SymExpr acc(1L);
  SymExpr base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

SymExpr SymExpr::subst(int id, const SymExpr& value) const {
  SymExpr r;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(id);
    if (e == 0) {
      SymExpr t;
      t.add_term(c, m);
      r += t;
      continue;
    }
    Monomial rest;
    for (auto& [s, ex] : m.e)
      if (s != id) rest.e.push_back({s, ex});
    SymExpr t;
    t.add_term(c, rest);
    r += t * value.pow(e);
  }
  return r;
}

std::complex<double> SymExpr::eval(
    const std::map<int, std::complex<double>>& overrides) const {
  auto& tab = SymbolTable::instance();
  std::complex<double> sum = 0.0;
  for (auto& [m, c] : terms_) {
    std::complex<double> prod = c.to_complex();
    for (auto& [s, e] : m.e) {
      std::complex<double> v;
      auto it = overrides.find(s);
      if (it != overrides.end()) {
        v = it->second;
      } else if (auto tv = tab.value(s)) {
        v = *tv;
      } else {
        throw std::domain_error("symbol has no numeric value: " + tab.name(s));
      }
      prod *= std::pow(v, e);
    }
    sum += prod;
  }
  return sum;
}

namespace {

std::string coeff_str(const GaussRat& c) {
  bool has_re = !(c.re == 0);
  bool has_im = !(c.im == 0);
  if (!has_re && !has_im) return "0";
  std::string s;
  if (has_re) s += rat_to_string(c.re);
  if (has_im) {
    Rat a = abs(c.im);
    std::string part = (a == 1) ? "i" : rat_to_string(a) + "*i";
    if (!has_re)
      s += (c.im < 0 ? "-" : "") + part;
    else
      s += (c.im < 0 ? "-" : "+") + part;
  }
  return s;
}

std::string mono_str(const Monomial& m) {
  auto& tab = SymbolTable::instance();
  std::string s;
  for (auto& [id, e] : m.e) {
    if (!s.empty()) s += "*";
    s += tab.name(id);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string term_str(const Monomial& m, const GaussRat& c) {
  if (m.trivial()) return coeff_str(c);
  std::string ms = mono_str(m);
  bool has_re = !(c.re == 0);
  bool has_im = !(c.im == 0);
  if (has_re && has_im) return "(" + coeff_str(c) + ")*" + ms;
  if (!has_im) {
    if (c.re == 1) return ms;
    if (c.re == -1) return "-" + ms;
    return rat_to_string(c.re) + "*" + ms;
  }
  if (c.im == 1) return "i*" + ms;
  if (c.im == -1) return "-i*" + ms;
  return rat_to_string(c.im) + "*i*" + ms;
}

}  // namespace

std::string SymExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    std::string t = term_str(m, c);
    if (first) {
      out = t;
      first = false;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t p = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }

  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return p < s.size() ? s[p] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at offset " + std::to_string(p) +
                                ": " + msg);
  }

  long integer() {
    skip();
    size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
      fail("expected integer");
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return std::stol(s.substr(start, p - start));
  }

  SymExpr number() {
    skip();
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    Rat num(s.substr(start, p - start));
    if (p < s.size() && s[p] == '/') {
      size_t save = p;
      ++p;
      if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
        size_t ds = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        Rat den(s.substr(ds, p - ds));
        if (den == 0) fail("zero denominator");
        num /= den;
      } else {
        p = save;
      }
    }
    num.canonicalize();
    return SymExpr(GaussRat(num));
  }

  SymExpr primary() {
    skip();
    if (p >= s.size()) fail("unexpected end of input");
    char c = s[p];
    if (c == '(') {
      ++p;
      SymExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = p;
      while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) ||
                              s[p] == '_'))
        ++p;
      std::string name = s.substr(start, p - start);
      if (name == "i") return SymExpr::i();
      int id = SymbolTable::instance().add(name, std::nullopt);
      return SymExpr::symbol(id);
    }
    fail("unexpected character");
  }

  SymExpr factor() {
    SymExpr base = primary();
    skip();
    if (p < s.size() && s[p] == '^') {
      ++p;
      long e = integer();
      return base.pow(e);
    }
    return base;
  }

  SymExpr term() {
    SymExpr acc = factor();
    for (;;) {
      skip();
      if (p < s.size() && s[p] == '*') {
        ++p;
        acc = acc * factor();
      } else if (p < s.size() && s[p] == '/') {
        ++p;
        acc = acc / factor();
      } else {
        return acc;
      }
    }
  }

  SymExpr expr() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      ++p;
      neg = true;
    } else if (peek() == '+') {
      ++p;
    }
    SymExpr acc = term();
    if (neg) acc = -acc;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++p;
        acc += term();
      } else if (c == '-') {
        ++p;
        acc -= term();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

SymExpr SymExpr::parse(const std::string& text) {
  Parser pr(text);
  SymExpr e = pr.expr();
  pr.skip();
  if (pr.p != text.size()) pr.fail("trailing input");
  return e;
}

SymExpr exp_i_pi_rational(const Rat& r) {
  Rat t = r * 4;
  if (!rat_is_integer(t))
    throw std::domain_error("exponent denominator must divide 4: " +
                            rat_to_string(r));
  long k = rat_to_long(t) % 8;
  if (k < 0) k += 8;
  SymExpr s2 = SymExpr::symbol(SymbolTable::S2);
  Rat half(1, 2);
  switch (k) {
    case 0: return SymExpr(1L);
    case 1: return SymExpr(GaussRat(half, half)) * s2;
    case 2: return SymExpr::i();
    case 3: return SymExpr(GaussRat(-half, half)) * s2;
    case 4: return SymExpr(-1L);
    case 5: return SymExpr(GaussRat(-half, -half)) * s2;
    case 6: return -SymExpr::i();
    default: return SymExpr(GaussRat(half, -half)) * s2;
  }
}

}  // namespace mono
