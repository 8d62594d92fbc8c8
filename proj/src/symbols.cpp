#include "mono/symbols.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mono {

namespace {

// Euclidean split e = 2k + r with r in {0,1}.
void split2(int e, int& k, int& r) {
  r = ((e % 2) + 2) % 2;
  k = (e - r) / 2;
}

GaussRat pow2(long k) { return GaussRat(Rat(2)).pow(k); }

int rewrite_degree(const Monomial& m) {
  int d = 0;
  for (auto& [s, e] : m.e) {
    if (s == SymbolTable::S2 || s == SymbolTable::SPI || s == SymbolTable::C12 ||
        s == SymbolTable::G14 || s == SymbolTable::G34)
      d += std::max(e, 0);
  }
  return d;
}

}  // namespace

int Monomial::exponent(int id) const {
  for (auto& p : e)
    if (p.first == id) return p.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::map<int, int> acc;
  for (auto& [s, ex] : e) acc[s] += ex;
  for (auto& [s, ex] : o.e) acc[s] += ex;
  Monomial r;
  for (auto& [s, ex] : acc)
    if (ex != 0) r.e.push_back({s, ex});
  return r;
}

ScaledMonomial normalize_monomial(const Monomial& raw) {
  std::map<int, int> ex;
  for (auto& [s, e] : raw.e) ex[s] += e;
  GaussRat scale{Rat(1)};

  int a = ex[SymbolTable::G14];
  int b = ex[SymbolTable::G34];
  int m = 0;
  if (a > 0 && b > 0)
    m = std::min(a, b);
  else if (a < 0 && b < 0)
    m = std::max(a, b);
  if (m != 0) {
    ex[SymbolTable::G14] -= m;
    ex[SymbolTable::G34] -= m;
    ex[SymbolTable::S2] += m;
    ex[SymbolTable::PI] += m;
  }

  int k, r;
  split2(ex[SymbolTable::S2], k, r);
  if (k != 0) scale = scale * pow2(k);
  ex[SymbolTable::S2] = r;

  split2(ex[SymbolTable::SPI], k, r);
  ex[SymbolTable::PI] += k;
  ex[SymbolTable::SPI] = r;

  split2(ex[SymbolTable::C12], k, r);
  ex[SymbolTable::C] += k;
  ex[SymbolTable::C12] = r;

  Monomial out;
  for (auto& [s, e] : ex)
    if (e != 0) out.e.push_back({s, e});
  std::sort(out.e.begin(), out.e.end());
  return {scale, out};
}

SymbolTable& SymbolTable::instance() {
  static SymbolTable table;
  return table;
}

SymbolTable::SymbolTable() {
  auto reg = [&](const std::string& n, std::complex<double> v) {
    index_[n] = static_cast<int>(names_.size());
    names_.push_back(n);
    values_.push_back(v);
  };
  reg("pi", 3.141592653589793);
  reg("gamma", 0.5772156649015329);
  reg("zeta3", 1.2020569031595943);
  reg("s2", 1.4142135623730951);
  reg("spi", 1.7724538509055160);
  reg("g14", 3.6256099082219083);
  reg("g34", 1.2254167024651777);
  reg("c12", 1.0);
  reg("c", 1.0);
  selfcheck();
}

int SymbolTable::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown symbol: " + name);
  return it->second;
}

int SymbolTable::add(const std::string& name, std::optional<std::complex<double>> value) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  index_[name] = static_cast<int>(names_.size());
  names_.push_back(name);
  values_.push_back(value);
  return index_[name];
}

namespace {

struct State {
  GaussRat scale;
  std::map<int, int> ex;

  std::string key() const {
    std::string k = rat_to_string(scale.re) + "|" + rat_to_string(scale.im);
    for (auto& [s, e] : ex)
      if (e != 0) k += ";" + std::to_string(s) + "^" + std::to_string(e);
    return k;
  }
};

// One forward application of each rewrite rule, where applicable.
std::vector<State> rewrite_steps(const State& st) {
  std::vector<State> out;
  auto get = [&](int s) {
    auto it = st.ex.find(s);
    return it == st.ex.end() ? 0 : it->second;
  };
  if (get(SymbolTable::S2) >= 2) {
    State n = st;
    n.ex[SymbolTable::S2] -= 2;
    n.scale = n.scale * GaussRat(Rat(2));
    out.push_back(n);
  }
  if (get(SymbolTable::SPI) >= 2) {
    State n = st;
    n.ex[SymbolTable::SPI] -= 2;
    n.ex[SymbolTable::PI] += 1;
    out.push_back(n);
  }
  if (get(SymbolTable::G14) >= 1 && get(SymbolTable::G34) >= 1) {
    State n = st;
    n.ex[SymbolTable::G14] -= 1;
    n.ex[SymbolTable::G34] -= 1;
    n.ex[SymbolTable::S2] += 1;
    n.ex[SymbolTable::PI] += 1;
    out.push_back(n);
  }
  if (get(SymbolTable::C12) >= 2) {
    State n = st;
    n.ex[SymbolTable::C12] -= 2;
    n.ex[SymbolTable::C] += 1;
    out.push_back(n);
  }
  return out;
}

Monomial to_monomial(const std::map<int, int>& ex) {
  Monomial m;
  for (auto& [s, e] : ex)
    if (e != 0) m.e.push_back({s, e});
  return m;
}

}  // namespace

void SymbolTable::selfcheck() const {
  // Probe monomials covering all rule overlaps, reduced exhaustively in
  // every possible order; the normal form must be unique and must agree
  // with the closed-form normalizer.
  for (int s2 = 0; s2 <= 4; ++s2)
    for (int spi = 0; spi <= 3; ++spi)
      for (int c12 = 0; c12 <= 3; ++c12)
        for (int g14 = 0; g14 <= 2; ++g14)
          for (int g34 = 0; g34 <= 2; ++g34) {
            State start;
            start.scale = GaussRat(Rat(1));
            if (s2) start.ex[S2] = s2;
            if (spi) start.ex[SPI] = spi;
            if (c12) start.ex[C12] = c12;
            if (g14) start.ex[G14] = g14;
            if (g34) start.ex[G34] = g34;

            std::set<std::string> seen;
            std::set<std::string> terminals;
            ScaledMonomial terminal_form;
            std::vector<State> stack{start};
            seen.insert(start.key());
            while (!stack.empty()) {
              State cur = stack.back();
              stack.pop_back();
              auto next = rewrite_steps(cur);
              if (next.empty()) {
                if (terminals.insert(cur.key()).second && terminals.size() > 1)
                  throw std::logic_error("rewrite system is not confluent");
                terminal_form = {cur.scale, to_monomial(cur.ex)};
                continue;
              }
              int d0 = rewrite_degree(to_monomial(cur.ex));
              for (auto& n : next) {
                if (rewrite_degree(to_monomial(n.ex)) >= d0)
                  throw std::logic_error("rewrite step does not decrease measure");
                if (seen.insert(n.key()).second) stack.push_back(n);
              }
            }
            auto closed = normalize_monomial(to_monomial(start.ex));
            if (!(closed.scale == terminal_form.scale) || !(closed.m == terminal_form.m))
              throw std::logic_error("closed-form normalizer disagrees with rewriting");
          }
}

}  // namespace mono
