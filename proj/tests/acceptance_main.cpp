// Acceptance harness: one line per criterion, nonzero exit on any failure.
#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mono/a3.hpp"
#include "mono/chambers.hpp"
#include "mono/g24.hpp"

using namespace mono;
using cplx = std::complex<double>;

namespace {

SymExpr E(const std::string& s) { return SymExpr::parse(s); }

bool close_to(const NumMat& got, const Eigen::MatrixXcd& want, double rel) {
  for (int i = 0; i < want.rows(); ++i)
    for (int j = 0; j < want.cols(); ++j) {
      double scale = std::max(1.0, std::abs(want(i, j)));
      if (std::abs(got[i][j] - want(i, j)) > rel * scale) return false;
    }
  return true;
}

Eigen::MatrixXcd to_eigen(const NumMat& m) {
  Eigen::MatrixXcd e(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) e(i, j) = m[i][j];
  return e;
}

bool criterion_constraints() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = check_constraints(g24_reference()).all_pass() &&
            check_constraints(a3_reference(0, 1)).all_pass();
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  return ok && dt.count() < 5.0;
}

bool criterion_parameter() {
  return identity_in_v().all_pass() && solve_v() == Rat(6);
}

bool criterion_morphism_pipeline() { return verify_resultg24().all_pass(); }

bool criterion_gram() { return todd_and_gram().second == g24_g_kap(); }

bool criterion_gamma_classes() {
  auto bas = [](int k) { return CohClass::basis(k); };
  CohClass gm_ref =
      CohClass::unit() + bas(1) * E("4*gamma") +
      (bas(2) + bas(3)) * E("(48*gamma^2+pi^2)/6") +
      bas(4) * E("4/3*(16*gamma^3+gamma*pi^2-zeta3)") +
      bas(5) * E("(768*gamma^4+96*gamma^2*pi^2-pi^4-192*gamma*zeta3)/36");
  CohClass gp_ref =
      CohClass::unit() + bas(1) * E("-4*gamma") +
      (bas(2) + bas(3)) * E("(48*gamma^2+pi^2)/6") +
      bas(4) * E("-4/3*(16*gamma^3+gamma*pi^2-zeta3)") +
      bas(5) * E("(768*gamma^4+96*gamma^2*pi^2-pi^4-192*gamma*zeta3)/36");
  return gamma_class(-1) == gm_ref && gamma_class(1) == gp_ref;
}

bool criterion_a3_table() {
  if (!reproduce_a3_table().all_pass()) return false;
  MonodromyData d = a3_reference(0, 1);
  MonodromyData out = apply_braid(d, center_braid(3));
  Mat rot = Mat::diag({SymExpr::i(), SymExpr(1), -SymExpr::i()});
  return out.s == d.s && out.c == rot * d.c;
}

bool criterion_g24_bands() {
  if (!band_table().all_pass()) return false;
  MonodromyData start = apply_signs(
      apply_permutation(g24_reference(), {5, 4, 2, 1, 3, 6}),
      {-1, 1, 1, -1, 1, -1});
  MonodromyData via_bands = apply_braid(start, g24_band_word(8));
  MonodromyData via_center = apply_braid(start, center_braid(6));
  if (via_bands.s != via_center.s || via_bands.c != via_center.c) return false;
  if (via_bands.s != start.s) return false;
  Mat m0inv = exp_pi_i_r(start.r, Rat(-2)) * exp_pi_i_mu(start.mu, Rat(-2));
  return via_bands.c == m0inv * start.c;
}

bool criterion_geometry() {
  const double s = 4.0 * std::sqrt(2.0);
  std::vector<cplx> u = {{0, 0}, {0, 0}, {0, -s}, {0, s}, {-s, 0}, {s, 0}};
  LexOrder lex = lexicographic_order(u, M_PI / 6);
  if (lex.order != std::vector<int>{5, 4, 1, 2, 3, 6}) return false;
  if (lex.ties != std::vector<std::vector<int>>{{1, 2}}) return false;
  TrackInput a3t = a3_split_track();
  if (track_braid(a3t.samples, a3t.phi, 1e-9).str() != "1 2 1") return false;
  TrackInput g24t = g24_band_track(1);
  return track_braid(g24t.samples, g24t.phi, 1e-9).str() == "1 5";
}

bool criterion_coalescence() {
  MonodromyData d = g24_reference();
  if (!d.s.at(0, 1).is_zero() || !d.s.at(1, 0).is_zero()) return false;
  auto u = canonical_small(cplx(1.0, 0.0));
  if (!coalescence_vanishing_check(d.s, u, 1e-9)) return false;
  MonodromyData nat = a3_natural();
  if (!nat.s.at(1, 2).is_zero() || !nat.s.at(2, 1).is_zero()) return false;
  return coalescence_vanishing_check(nat.s, nat.u, 1e-9);
}

bool property_braid_relations() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> entry(-9, 9);
  int datasets = 0;
  while (datasets < 200) {
    for (int n = 3; n <= 6 && datasets < 200; ++n, ++datasets) {
      MonodromyData d;
      d.n = n;
      d.s = Mat::identity(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.s.at(i, j) = SymExpr(entry(rng));
      d.c = Mat::identity(n);
      for (int i = 1; i + 1 <= n - 1; ++i) {
        std::string a = std::to_string(i), b = std::to_string(i + 1);
        MonodromyData lhs =
            apply_braid(d, BraidWord::parse(a + " " + b + " " + a));
        MonodromyData rhs =
            apply_braid(d, BraidWord::parse(b + " " + a + " " + b));
        if (lhs.s != rhs.s || lhs.c != rhs.c) return false;
      }
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
          std::string a = std::to_string(i), b = std::to_string(j);
          MonodromyData ab = apply_braid(d, BraidWord::parse(a + " " + b));
          MonodromyData ba = apply_braid(d, BraidWord::parse(b + " " + a));
          if (ab.s != ba.s || ab.c != ba.c) return false;
        }
      MonodromyData inv = apply_braid(
          d, BraidWord::parse("1 2 -1") * BraidWord::parse("1 2 -1").inverse());
      if (inv.s != d.s || inv.c != d.c) return false;
    }
  }
  return true;
}

bool property_actions_preserve_constraints() {
  MonodromyData g = g24_reference();
  if (!check_constraints(apply_permutation(g, {5, 4, 2, 1, 3, 6})).all_pass())
    return false;
  if (!check_constraints(apply_signs(g, {1, -1, -1, 1, -1, 1})).all_pass())
    return false;
  if (!check_constraints(apply_gauge(g, g24_gauge_a())).all_pass())
    return false;
  MonodromyData start = apply_signs(
      apply_permutation(g, {5, 4, 2, 1, 3, 6}), {-1, 1, 1, -1, 1, -1});
  if (!check_constraints(apply_braid(start, g24_band_word(1))).all_pass())
    return false;

  MonodromyData a = a3_reference(0, 1);
  if (!check_constraints(apply_permutation(a, {2, 1, 3})).all_pass())
    return false;
  if (!check_constraints(apply_signs(a, {-1, 1, -1})).all_pass()) return false;
  if (!check_constraints(apply_gauge(a, Mat::identity(3))).all_pass())
    return false;
  return check_constraints(apply_braid(a, BraidWord::parse("1 2 1"))).all_pass();
}

bool property_gauge_group() {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  auto rnd = [&] {
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return SymExpr(r);
  };
  Mat mu = g24_mu(), r = g24_r(), eta = g24_eta();
  for (int rep = 0; rep < 100; ++rep) {
    Mat g = c0_member_g24(rnd(), rnd(), rnd());
    Mat h = c0_member_g24(rnd(), rnd(), rnd());
    if (!c0_membership(g, mu, r, eta)) return false;
    if (!c0_membership(g * h, mu, r, eta)) return false;
    if (g * h != h * g) return false;
  }
  return true;
}

bool property_multiplicative_classes() {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> num(-10, 10);
  std::uniform_int_distribution<long> den(1, 5);
  Mat mu = g24_mu(), r = g24_r(), eta = g24_eta();
  for (int rep = 0; rep < 50; ++rep) {
    std::array<SymExpr, 4> f;
    for (auto& c : f) {
      Rat x(num(rng), den(rng));
      x.canonicalize();
      c = SymExpr(x);
    }
    Mat lam = cup_matrix(hirzebruch_lambda(f));
    if (!c0_membership(lam, mu, r, eta)) return false;
  }
  return true;
}

bool property_numeric_oracle() {
  Mat s6 = g24_s(SymExpr(6)), c6 = g24_c(SymExpr(6));
  if (!close_to(eval_matrix(c6 * s6),
                to_eigen(eval_matrix(c6)) * to_eigen(eval_matrix(s6)), 1e-9))
    return false;
  Mat b = g24_gauge_b(), ck = g24_c_kap_minus();
  if (!close_to(eval_matrix(b * ck),
                to_eigen(eval_matrix(b)) * to_eigen(eval_matrix(ck)), 1e-9))
    return false;
  MonodromyData a = a3_reference(0, 1);
  return close_to(eval_matrix(a.c * a.s),
                  to_eigen(eval_matrix(a.c)) * to_eigen(eval_matrix(a.s)),
                  1e-9);
}

bool criterion_properties() {
  return property_braid_relations() && property_actions_preserve_constraints() &&
         property_gauge_group() && property_multiplicative_classes() &&
         property_numeric_oracle();
}

bool criterion_levelt() { return levelt_conjugation_check().all_pass(); }

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* text;
    std::function<bool()> fn;
  };
  std::vector<Criterion> table = {
      {1, "reference tuples satisfy all coupling identities exactly, under 5 s",
       criterion_constraints},
      {2, "identities hold for every parameter value; normal form pins v = 6",
       criterion_parameter},
      {3, "tabulated morphism rederived via relabeling, signs, gauges, braid moves",
       criterion_morphism_pipeline},
      {4, "pairing matrix from characters and todd class matches the tabulated gram",
       criterion_gram},
      {5, "gamma classes equal the displayed coefficient series", criterion_gamma_classes},
      {6, "three-point band table reproduced; full turn twists by diag(i,1,-i)",
       criterion_a3_table},
      {7, "six-point band table reproduced; cumulative word acts as the full turn",
       criterion_g24_bands},
      {8, "line order and tracked deformation words at the coalescence point",
       criterion_geometry},
      {9, "couplings vanish at coalescing canonical coordinates", criterion_coalescence},
      {10, "property suites: relations, invariance, group closure, classes, numerics",
       criterion_properties},
      {11, "series conjugation is polynomial with identity constant term",
       criterion_levelt},
  };

  int failures = 0;
  for (const auto& c : table) {
    bool ok = false;
    std::string note;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      note = std::string(" (error: ") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", c.id, c.text,
                note.c_str());
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, table.size());
  return failures == 0 ? 0 : 1;
}
