#include "mono/monodromy.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mono/zl.hpp"

namespace mono {

BraidWord BraidWord::parse(const std::string& text) {
  BraidWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter: " + tok);
    }
    if (pos != tok.size() || v == 0)
      throw std::invalid_argument("bad braid letter: " + tok);
    w.letters.push_back(v);
  }
  return w;
}

std::string BraidWord::str() const {
  std::string out;
  for (int l : letters) {
    if (!out.empty()) out += " ";
    out += std::to_string(l);
  }
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(-*it);
  return w;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  BraidWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

namespace {

Mat matrix_from_json(const nlohmann::json& j, int n, const std::string& key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("field " + key + " must be an " +
                                std::to_string(n) + "-row matrix");
  std::vector<std::vector<SymExpr>> rows;
  for (auto& jr : j) {
    if (!jr.is_array() || static_cast<int>(jr.size()) != n)
      throw std::invalid_argument("field " + key + " has a bad row");
    std::vector<SymExpr> row;
    for (auto& je : jr) row.push_back(SymExpr::parse(je.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return Mat::from_rows(rows);
}

nlohmann::json matrix_to_json(const Mat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    j.push_back(row);
  }
  return j;
}

}  // namespace

MonodromyData MonodromyData::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MonodromyData d;
  d.n = j.at("n").get<int>();
  if (d.n <= 0) throw std::invalid_argument("n must be positive");
  d.mu = matrix_from_json(j.at("mu"), d.n, "mu");
  d.r = matrix_from_json(j.at("R"), d.n, "R");
  d.eta = matrix_from_json(j.at("eta"), d.n, "eta");
  d.s = matrix_from_json(j.at("S"), d.n, "S");
  d.c = matrix_from_json(j.at("C"), d.n, "C");
  if (j.contains("u") && !j.at("u").is_null()) {
    for (auto& ju : j.at("u")) {
      if (!ju.is_array() || ju.size() != 2)
        throw std::invalid_argument("u entries must be [re, im] pairs");
      d.u.push_back({ju[0].get<double>(), ju[1].get<double>()});
    }
    if (!d.u.empty() && static_cast<int>(d.u.size()) != d.n)
      throw std::invalid_argument("u must have n entries");
  }
  return d;
}

std::string MonodromyData::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["mu"] = matrix_to_json(mu);
  j["R"] = matrix_to_json(r);
  j["eta"] = matrix_to_json(eta);
  j["S"] = matrix_to_json(s);
  j["C"] = matrix_to_json(c);
  nlohmann::json ju = nlohmann::json::array();
  for (auto& z : u) ju.push_back({z.real(), z.imag()});
  j["u"] = ju;
  return j.dump(2) + "\n";
}

Mat exp_pi_i_mu(const Mat& mu, const Rat& mult) {
  auto d = diagonal_rationals(mu);
  std::vector<SymExpr> e;
  for (auto& m : d) e.push_back(exp_i_pi_rational(m * mult));
  return Mat::diag(e);
}

Mat exp_pi_i_r(const Mat& r, const Rat& mult) {
  SymExpr f = SymExpr(GaussRat(Rat(0), mult)) * SymExpr::symbol(SymbolTable::PI);
  return matrix_exp_nilpotent(f * r);
}

Mat m0_matrix(const Mat& mu, const Mat& r) {
  return exp_pi_i_mu(mu, 2) * exp_pi_i_r(r, 2);
}

Mat eta_inverse(const Mat& eta) {
  try {
    return monomial_inverse(eta);
  } catch (const std::domain_error&) {
    return inverse_rational(eta);
  }
}

bool g_eta_mu_membership(const Mat& r, const Mat& mu, const Mat& eta,
                         std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  int n = r.rows();
  if (r.cols() != n || eta.rows() != n || eta.cols() != n || mu.rows() != n)
    return fail("shape mismatch");
  std::vector<Rat> mud;
  try {
    mud = diagonal_rationals(mu);
  } catch (const std::domain_error& e) {
    return fail(e.what());
  }

  long kmax = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (r.at(i, j).is_zero()) continue;
      Rat d = mud[i] - mud[j];
      if (!rat_is_integer(d) || d <= 0)
        return fail("entry (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") sits at a non-positive-integer jump");
      kmax = std::max(kmax, rat_to_long(d));
    }

  Mat etainv;
  try {
    etainv = eta_inverse(eta);
  } catch (const std::exception& e) {
    return fail(std::string("eta not invertible: ") + e.what());
  }
  for (long k = 1; k <= kmax; ++k) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!r.at(i, j).is_zero() && mud[i] - mud[j] == k) a.at(i, j) = r.at(i, j);
    Mat rhs = eta * a * etainv;
    if (k % 2 == 0) rhs = -rhs;
    if (a.transpose() != rhs)
      return fail("degree " + std::to_string(k) + " part breaks the signed symmetry");
  }
  return true;
}

bool c0_membership(const Mat& g, const Mat& mu, const Mat& r, const Mat& eta,
                   std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  int n = g.rows();
  if (g.cols() != n) return fail("shape mismatch");
  if (g * r != r * g) return fail("does not commute with R");
  ZLMat p;
  try {
    p = conj_by_zpow(g, mu, r);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (!zl_is_polynomial(p)) return fail("conjugated matrix is not polynomial in z");
  if (zl_constant_term(p) != Mat::identity(n)) return fail("value at z = 0 is not I");
  ZLMat etaz = ZLMat::from(eta);
  if (zl_negate_z(p).transpose() * etaz * p != etaz)
    return fail("does not preserve the pairing");
  return true;
}

Report check_constraints(const MonodromyData& d) {
  Report rep;
  int n = d.n;
  auto shape_ok = [&](const Mat& m) { return m.rows() == n && m.cols() == n; };
  bool shapes = n > 0 && shape_ok(d.mu) && shape_ok(d.r) && shape_ok(d.eta) &&
                shape_ok(d.s) && shape_ok(d.c) &&
                (d.u.empty() || static_cast<int>(d.u.size()) == n);
  rep.add("shape", shapes, shapes ? "" : "matrices must all be n x n");
  if (!shapes) return rep;

  rep.add("eta_symmetric", d.eta == d.eta.transpose());

  bool eta_inv_ok = true;
  Mat etainv;
  try {
    etainv = eta_inverse(d.eta);
  } catch (const std::exception& e) {
    eta_inv_ok = false;
    rep.add("eta_invertible", false, e.what());
  }
  if (eta_inv_ok) rep.add("eta_invertible", true);

  bool mu_diag = is_diagonal(d.mu);
  rep.add("mu_diagonal", mu_diag);
  if (mu_diag) {
    Mat anti = d.mu * d.eta + d.eta * d.mu;
    rep.add("mu_eta_antisymmetry", anti.is_zero(),
            anti.is_zero() ? "" : "mu eta + eta mu != 0");
  } else {
    rep.add("mu_eta_antisymmetry", false, "mu is not diagonal");
  }

  {
    bool unit = true;
    for (int i = 0; i < n; ++i)
      if (!d.s.at(i, i).is_one()) unit = false;
    rep.add("s_unit_diagonal", unit,
            unit ? "" : "S must have unit diagonal");
  }

  {
    std::string why;
    bool ok = mu_diag && g_eta_mu_membership(d.r, d.mu, d.eta, &why);
    rep.add("r_in_eta_mu_algebra", ok, ok ? "" : why);
  }

  if (!eta_inv_ok || !mu_diag) {
    rep.add("identity_cs_m0", false, "prerequisites failed");
    rep.add("identity_cs_eta_minus", false, "prerequisites failed");
    rep.add("identity_cs_eta_plus", false, "prerequisites failed");
    return rep;
  }

  try {
    Mat m0 = m0_matrix(d.mu, d.r);
    Mat lhs1 = d.c * d.s.transpose();
    Mat rhs1 = m0 * d.c * d.s;
    rep.add("identity_cs_m0", lhs1 == rhs1,
            lhs1 == rhs1 ? "" : "C S^T != M0 C S");

    Mat lhs2 = d.c * d.s * d.c.transpose();
    Mat rhs2 = exp_pi_i_r(d.r, -1) * exp_pi_i_mu(d.mu, -1) * etainv;
    rep.add("identity_cs_eta_minus", lhs2 == rhs2,
            lhs2 == rhs2 ? "" : "C S C^T != e^{-pi i R} e^{-pi i mu} eta^{-1}");

    Mat lhs3 = d.c * d.s.transpose() * d.c.transpose();
    Mat rhs3 = exp_pi_i_r(d.r, 1) * exp_pi_i_mu(d.mu, 1) * etainv;
    rep.add("identity_cs_eta_plus", lhs3 == rhs3,
            lhs3 == rhs3 ? "" : "C S^T C^T != e^{pi i R} e^{pi i mu} eta^{-1}");
  } catch (const std::exception& e) {
    rep.add("identity_cs_m0", false, e.what());
    rep.add("identity_cs_eta_minus", false, e.what());
    rep.add("identity_cs_eta_plus", false, e.what());
  }
  return rep;
}

namespace {

void check_letter(int n, int letter) {
  int k = letter > 0 ? letter : -letter;
  if (letter == 0 || k < 1 || k > n - 1)
    throw std::invalid_argument("braid letter out of range: " + std::to_string(letter));
}

}  // namespace

Mat braid_matrix(const Mat& s, int i, int sign) {
  int n = s.rows();
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  check_letter(n, i);
  int k = i - 1;
  SymExpr sv = s.at(k, k + 1);
  Mat a = Mat::identity(n);
  a.at(k, k + 1) = SymExpr(1L);
  a.at(k + 1, k) = SymExpr(1L);
  if (sign > 0) {
    a.at(k, k) = SymExpr(0L);
    a.at(k + 1, k + 1) = -sv;
  } else {
    a.at(k, k) = -sv;
    a.at(k + 1, k + 1) = SymExpr(0L);
  }
  return a;
}

// Closed form: [[0,1],[1,-s]]^{-1} = [[s,1],[1,0]] and
// [[-s,1],[1,0]]^{-1} = [[0,1],[1,s]] on the 2x2 block.
Mat braid_matrix_inverse(const Mat& s, int i, int sign) {
  int n = s.rows();
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  check_letter(n, i);
  int k = i - 1;
  SymExpr sv = s.at(k, k + 1);
  Mat a = Mat::identity(n);
  a.at(k, k + 1) = SymExpr(1L);
  a.at(k + 1, k) = SymExpr(1L);
  if (sign > 0) {
    a.at(k, k) = sv;
    a.at(k + 1, k + 1) = SymExpr(0L);
  } else {
    a.at(k, k) = SymExpr(0L);
    a.at(k + 1, k + 1) = sv;
  }
  return a;
}

MonodromyData apply_braid(const MonodromyData& d, const BraidWord& w) {
  if (!is_upper_unitriangular(d.s))
    throw std::domain_error("braid action needs S in unitriangular form");
  MonodromyData out = d;
  for (int letter : w.letters) {
    int i = letter > 0 ? letter : -letter;
    int sign = letter > 0 ? 1 : -1;
    Mat a = braid_matrix(out.s, i, sign);
    Mat ainv = braid_matrix_inverse(out.s, i, sign);
    out.s = a * out.s * a.transpose();
    out.c = out.c * ainv;
    if (!out.u.empty()) {
      int i = (letter > 0 ? letter : -letter) - 1;
      std::swap(out.u[i], out.u[i + 1]);
    }
  }
  return out;
}

MonodromyData apply_permutation(const MonodromyData& d, const std::vector<int>& tau) {
  if (static_cast<int>(tau.size()) != d.n)
    throw std::invalid_argument("permutation size mismatch");
  Mat p = permutation_matrix(tau);
  Mat pt = p.transpose();
  MonodromyData out = d;
  out.s = p * d.s * pt;
  out.c = d.c * pt;
  if (!d.u.empty()) {
    out.u.clear();
    for (int k = 0; k < d.n; ++k) out.u.push_back(d.u[tau[k] - 1]);
  }
  return out;
}

MonodromyData apply_signs(const MonodromyData& d, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != d.n)
    throw std::invalid_argument("sign vector size mismatch");
  std::vector<SymExpr> diag;
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");
    diag.push_back(SymExpr(static_cast<long>(s)));
  }
  Mat j = Mat::diag(diag);
  MonodromyData out = d;
  out.s = j * d.s * j;
  out.c = d.c * j;
  return out;
}

MonodromyData apply_gauge(const MonodromyData& d, const Mat& g) {
  std::string why;
  if (!c0_membership(g, d.mu, d.r, d.eta, &why))
    throw std::domain_error("not a gauge transformation: " + why);
  MonodromyData out = d;
  out.c = g * d.c;
  return out;
}

MonodromyData apply_shift(const MonodromyData& d, int k) {
  Mat step = k >= 0 ? exp_pi_i_r(d.r, -2) * exp_pi_i_mu(d.mu, -2)
                    : exp_pi_i_mu(d.mu, 2) * exp_pi_i_r(d.r, 2);
  MonodromyData out = d;
  for (int t = 0; t < (k >= 0 ? k : -k); ++t) out.c = step * out.c;
  return out;
}

BraidWord center_braid(int n) {
  if (n < 2) throw std::invalid_argument("need at least two sheets");
  BraidWord w;
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i < n; ++i) w.letters.push_back(i);
  return w;
}

bool coalescence_vanishing_check(const Mat& s,
                                 const std::vector<std::complex<double>>& u,
                                 double tol) {
  int n = s.rows();
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("need one coordinate per sheet");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(u[i] - u[j]) > tol) continue;
      if (!s.at(i, j).is_zero() || !s.at(j, i).is_zero()) return false;
    }
  return true;
}

}  // namespace mono
