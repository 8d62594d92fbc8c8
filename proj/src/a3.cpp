#include "mono/a3.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

Mat mat_from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<SymExpr>> out;
  for (auto& r : rows) {
    std::vector<SymExpr> row;
    for (auto& s : r) row.push_back(SymExpr::parse(s));
    out.push_back(std::move(row));
  }
  return Mat::from_rows(out);
}

}  // namespace

A3CriticalData critical_data(const A3Point& p) {
  cplx a0 = p.a0(), a1 = p.a1(), a2 = p.a2();
  double scale = std::max({1.0, std::abs(a1), std::abs(a2)});
  cplx disc = 27.0 * a1 * a1 + 8.0 * a2 * a2 * a2;
  if (std::abs(a2) < 1e-8 * scale || std::abs(disc) < 1e-8 * scale * scale * scale)
    throw std::domain_error("degenerate point: critical points collide");

  cplx xroot = std::pow(-9.0 * a1 + std::sqrt(cplx(3.0)) * std::sqrt(disc),
                        cplx(1.0 / 3.0));
  const double s3 = std::sqrt(3.0);
  const cplx theta[3] = {cplx(-1.0, 0.0), cplx(0.5, -0.5 * s3), cplx(0.5, 0.5 * s3)};

  A3CriticalData out;
  for (int k = 0; k < 3; ++k) {
    cplx u = -theta[k] * xroot / (2.0 * std::pow(3.0, 2.0 / 3.0));
    cplx x = u - a2 / (6.0 * u);
    cplx resid = 4.0 * x * x * x + 2.0 * a2 * x + a1;
    double rscale = 4.0 * std::pow(std::abs(x), 3) + 2.0 * std::abs(a2) * std::abs(x) +
                    std::abs(a1) + 1.0;
    if (std::abs(resid) > 1e-9 * rscale)
      throw std::domain_error("critical point residual too large");
    out.x[k] = x;
    out.u[k] = ((x * x + a2) * x + a1) * x + a0;
  }
  return out;
}

NumMat a3_u_matrix(const A3Point& p) {
  cplx t1 = p.t1, t2 = p.t2, t3 = p.t3;
  return {{t1, -5.0 / 16.0 * t2 * t3, -3.0 / 16.0 * t2 * t2 + t3 * t3 * t3 / 32.0},
          {0.75 * t2, t1 - t3 * t3 / 8.0, -5.0 / 16.0 * t2 * t3},
          {0.5 * t3, 0.75 * t2, t1}};
}

NumMat psi_matrix_a3(const A3Point& p) {
  A3CriticalData cd = critical_data(p);
  cplx a2 = p.a2();
  cplx x1 = cd.x[0], x2 = cd.x[1], x3 = cd.x[2];

  // Row normalizations square to 6 x_i^2 + a2; the chosen branches stay
  // continuous while a2 remains in the right half plane, where the split
  // family lives.
  const cplx im(0.0, 1.0);
  cplx sa = std::sqrt(a2);
  cplx w1 = 6.0 * x1 * x1 + a2;
  cplx w2 = 6.0 * x2 * x2 + a2;
  cplx w3 = 6.0 * x3 * x3 + a2;
  cplx r1 = sa * std::sqrt(w1 / a2);
  cplx r2 = -im * std::sqrt(2.0) * sa * std::sqrt(-w2 / (2.0 * a2));
  cplx r3 = -im * std::sqrt(2.0) * sa * std::sqrt(-w3 / (2.0 * a2));

  double s8 = 2.0 * std::sqrt(2.0);
  cplx d1 = s8 * (x1 - x2) * (x1 - x3);
  cplx d2a = s8 * (x1 - x2) * (x3 - x2);
  cplx d2b = s8 * (x1 - x2) * (x2 - x3);
  cplx d3a = s8 * (x1 - x3) * (x2 - x3);
  cplx d3b = s8 * (x1 - x3) * (x3 - x2);

  return {{r1 / d1, -(x2 + x3) * r1 / d1, -(a2 - 4.0 * x2 * x3) * r1 / (4.0 * d1)},
          {r2 / d2a, (x1 + x3) * r2 / d2b, (a2 - 4.0 * x1 * x3) * r2 / (4.0 * d2b)},
          {r3 / d3a, (x1 + x2) * r3 / d3b, (a2 - 4.0 * x1 * x2) * r3 / (4.0 * d3b)}};
}

Mat a3_eta() {
  return mat_from_strings({{"0", "0", "1/4"}, {"0", "1/4", "0"}, {"1/4", "0", "0"}});
}

Mat a3_mu() {
  return Mat::diag({SymExpr::parse("-1/4"), SymExpr(0L), SymExpr::parse("1/4")});
}

MonodromyData a3_natural() {
  MonodromyData d;
  d.n = 3;
  d.mu = a3_mu();
  d.r = Mat(3, 3);
  d.eta = a3_eta();
  d.s = Mat::from_longs({{1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}});
  d.c = mat_from_strings({{"(1-i)*g34/spi", "-i*g34/spi", "-i*g34/spi"},
                          {"0", "-s2", "s2"},
                          {"(1+i)*g14/spi", "i*g14/spi", "i*g14/spi"}});
  d.u = {cplx(0.0), cplx(-0.25), cplx(-0.25)};
  return d;
}

namespace {

const std::vector<std::vector<std::string>>& band_c_rows(int band) {
  static const std::vector<std::vector<std::vector<std::string>>> tab = {
      {{"-i*g34/spi", "-i*g34/spi", "(1-i)*g34/spi"},
       {"-s2", "s2", "0"},
       {"i*g14/spi", "i*g14/spi", "(1+i)*g14/spi"}},
      {{"(1+i)*g34/spi", "-i*g34/spi", "-i*g34/spi"},
       {"0", "s2", "-s2"},
       {"(1-i)*g14/spi", "i*g14/spi", "i*g14/spi"}},
      {{"g34/spi", "g34/spi", "(1+i)*g34/spi"},
       {"-s2", "s2", "0"},
       {"g14/spi", "g14/spi", "(1-i)*g14/spi"}},
      {{"(-1+i)*g34/spi", "g34/spi", "g34/spi"},
       {"0", "s2", "-s2"},
       {"(-1-i)*g14/spi", "g14/spi", "g14/spi"}},
      {{"i*g34/spi", "i*g34/spi", "(-1+i)*g34/spi"},
       {"-s2", "s2", "0"},
       {"-i*g14/spi", "-i*g14/spi", "(-1-i)*g14/spi"}}};
  return tab[band];
}

void check_band_cell(int band, int cell) {
  if (band < 0 || band > 4) throw std::invalid_argument("band must be 0..4");
  if (cell != 1 && cell != 2) throw std::invalid_argument("cell must be 1 or 2");
}

}  // namespace

MonodromyData a3_reference(int band, int cell) {
  check_band_cell(band, cell);
  MonodromyData d;
  d.n = 3;
  d.mu = a3_mu();
  d.r = Mat(3, 3);
  d.eta = a3_eta();
  bool even = band % 2 == 0;
  d.s = even ? Mat::from_longs({{1, 0, -1}, {0, 1, -1}, {0, 0, 1}})
             : Mat::from_longs({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
  d.c = mat_from_strings(band_c_rows(band));
  if (cell == 2)
    for (int j = 0; j < 3; ++j) d.c.at(1, j) = -d.c.at(1, j);
  double cv = band % 2 == 0 ? -0.25 : 0.25;
  d.u = even ? std::vector<cplx>{cv, cv, 0.0} : std::vector<cplx>{0.0, cv, cv};
  return d;
}

BraidWord a3_band_word(int band, int cell) {
  check_band_cell(band, cell);
  BraidWord w;
  int len = 3 * band + (cell == 2 ? 1 : 0);
  for (int m = 0; m < len; ++m) w.letters.push_back(1 + m % 2);
  return w;
}

TrackInput a3_split_track() {
  TrackInput in;
  in.phi = 0.0;
  const int n = 401;
  const double eps = 1e-3, psi0 = -0.58 * kPi, tmax = 0.45 * kPi;
  const cplx im(0.0, 1.0);
  for (int k = 0; k < n; ++k) {
    double th = tmax * k / (n - 1);
    cplx core = -std::exp(2.0 * im * th) / 4.0;
    cplx off = eps * std::exp(im * (th / 2.0 + psi0));
    in.samples.push_back({cplx(0.0), core + off, core - off});
  }
  return in;
}

Report reproduce_a3_table() {
  Report rep;
  MonodromyData base = a3_reference(0, 1);

  for (int band = 0; band <= 4; ++band)
    for (int cell = 1; cell <= 2; ++cell) {
      std::string tag = "band" + std::to_string(band) + "_cell" + std::to_string(cell);
      MonodromyData want = a3_reference(band, cell);
      MonodromyData got = apply_braid(base, a3_band_word(band, cell));
      bool ok = got.s == want.s && got.c == want.c;
      rep.add("table_" + tag, ok, ok ? "" : "word does not reproduce the tabulated data");
      Report cons = check_constraints(want);
      rep.add("constraints_" + tag, cons.all_pass(),
              cons.all_pass() ? "" : "constraint set fails");
    }

  for (int band = 0; band <= 4; ++band) {
    BraidWord red;
    red.letters.push_back(1 + (3 * band) % 2);
    MonodromyData switched = apply_braid(a3_reference(band, 1), red);
    MonodromyData want = a3_reference(band, 2);
    bool ok = switched.s == want.s && switched.c == want.c;
    rep.add("cell_switch_band" + std::to_string(band), ok,
            ok ? "" : "cell-switch letter does not swap the cells");
  }

  MonodromyData spun = apply_braid(base, center_braid(3));
  rep.add("rotation_fixes_s", spun.s == base.s);
  Mat m0inv = Mat::diag({SymExpr::i(), SymExpr(1L), -SymExpr::i()});
  rep.add("rotation_shifts_c", spun.c == m0inv * base.c);
  rep.add("shift_matches_rotation", apply_shift(base, 1).c == spun.c);
  rep.add("band4_is_double_shift", a3_reference(4, 1).c == apply_shift(base, 2).c);

  MonodromyData nat = a3_natural();
  rep.add("coxeter_form",
          nat.s + nat.s.transpose() ==
              Mat::from_longs({{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}));

  MonodromyData relab = apply_permutation(nat, {2, 3, 1});
  rep.add("lex_relabeling", relab.s == base.s && relab.c == base.c);

  rep.add("coalescence_natural", coalescence_vanishing_check(nat.s, nat.u, 1e-9));
  rep.add("coalescence_lex", coalescence_vanishing_check(base.s, base.u, 1e-9));
  return rep;
}

}  // namespace mono
