// monoctl: load, transform, and verify monodromy data from the command line.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mono/a3.hpp"
#include "mono/chambers.hpp"
#include "mono/g24.hpp"
#include "mono/monodromy.hpp"
#include "mono/report.hpp"

using json = nlohmann::ordered_json;
using namespace mono;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty())
    std::cout << payload;
  else
    write_file(out_path, payload);
}

std::string render_report(const Report& rep, const std::string& format) {
  if (format == "json") return rep.to_json() + "\n";
  if (format == "csv") return rep.to_csv();
  return rep.to_text();
}

std::string render_matrix(const Mat& m, const std::string& format,
                          const std::string& name) {
  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
      rows.push_back(row);
    }
    json obj;
    obj[name] = rows;
    return obj.dump(2) + "\n";
  }
  std::ostringstream ss;
  if (format == "csv") {
    ss << "matrix,i,j,entry\n";
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        ss << name << "," << i + 1 << "," << j + 1 << ","
           << m.at(i, j).str() << "\n";
    return ss.str();
  }
  ss << name << ":\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) ss << "  " << m.at(i, j).str();
    ss << "\n";
  }
  return ss.str();
}

MonodromyData load_data(const std::string& path) {
  try {
    return MonodromyData::from_json(read_file(path));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

int report_exit(const Report& rep) { return rep.all_pass() ? 0 : 1; }

Report verify_a3_suite() {
  Report rep;
  rep.add("band0_constraints", check_constraints(a3_reference(0, 1)).all_pass());
  rep.merge(reproduce_a3_table());
  return rep;
}

Report verify_g24_suite() {
  Report rep;
  rep.add("reference_constraints",
          check_constraints(g24_reference()).all_pass());
  rep.merge(identity_in_v());
  rep.add("parameter_value_is_six", solve_v() == Rat(6));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monodromy data calculus"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write the main payload to this file");

  // verify
  std::string verify_target;
  auto* cmd_verify = app.add_subcommand("verify",
      "run the constraint suite on a dataset (a3, g24, or a JSON file)");
  cmd_verify->add_option("target", verify_target, "a3 | g24 | path.json")
      ->required();

  // braid
  std::string braid_file, braid_word;
  auto* cmd_braid = app.add_subcommand("braid",
      "apply a braid word to a data file; prints the accumulated matrix");
  cmd_braid->add_option("file", braid_file, "monodromy data JSON")->required();
  cmd_braid->add_option("--word", braid_word, "letters, e.g. \"1 -2 1\"")
      ->required();

  // track
  std::string track_file, track_apply;
  auto* cmd_track = app.add_subcommand("track",
      "read a sampled deformation path and print the braid word it induces");
  cmd_track->add_option("file", track_file, "path samples JSON")->required();
  cmd_track->add_option("--apply", track_apply,
                        "monodromy data JSON to transform by the tracked word");

  // a3
  auto* cmd_a3 = app.add_subcommand("a3", "three-dimensional example");
  auto* a3_table = cmd_a3->add_subcommand("table",
      "reproduce the tabulated band data and report the outcome");
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  auto* a3_point = cmd_a3->add_subcommand("point",
      "canonical coordinates and eigenframe at a point, as JSON");
  a3_point->add_option("--t1", t1, "first flat coordinate");
  a3_point->add_option("--t2", t2, "second flat coordinate")->required();
  a3_point->add_option("--t3", t3, "third flat coordinate");

  // g24
  auto* cmd_g24 = app.add_subcommand("g24", "Grassmannian example");
  auto* g24_verify = cmd_g24->add_subcommand("verify",
      "constraints, parameter identities, and the pinned value");
  int gamma_sign = -1;
  auto* g24_gamma = cmd_g24->add_subcommand("gamma",
      "multiplicative class of the tangent bundle from the zeta series");
  g24_gamma->add_option("--sign", gamma_sign, "+1 or -1")
      ->check(CLI::IsMember({1, -1}));
  auto* g24_gram = cmd_g24->add_subcommand("gram",
      "Euler pairing matrix derived from characters and the Todd class");
  auto* g24_kapranov = cmd_g24->add_subcommand("kapranov",
      "run the full reduction pipeline to the tabulated collection data");
  auto* g24_bands = cmd_g24->add_subcommand("bands",
      "walk the tabulated bands by their connecting words");
  auto* g24_levelt = cmd_g24->add_subcommand("levelt",
      "conjugate the truncated series into the flat frame and compare");

  for (auto* sub : {cmd_verify, cmd_braid, cmd_track, cmd_a3, cmd_g24,
                    a3_table, a3_point, g24_verify, g24_gamma, g24_gram,
                    g24_kapranov, g24_bands, g24_levelt})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_verify) {
      Report rep;
      if (verify_target == "a3")
        rep = verify_a3_suite();
      else if (verify_target == "g24")
        rep = verify_g24_suite();
      else
        rep = check_constraints(load_data(verify_target));
      emit(render_report(rep, format), out_path);
      return report_exit(rep);
    }

    if (*cmd_braid) {
      MonodromyData d = load_data(braid_file);
      BraidWord w;
      try {
        w = BraidWord::parse(braid_word);
      } catch (const std::exception& e) {
        throw InputError(std::string("bad word: ") + e.what());
      }
      if (!is_upper_unitriangular(d.s))
        throw InputError("braid action needs S in unitriangular form");
      Mat acc = Mat::identity(d.n);
      MonodromyData cur = d;
      for (int letter : w.letters) {
        int i = letter > 0 ? letter : -letter;
        int sign = letter > 0 ? 1 : -1;
        acc = braid_matrix(cur.s, i, sign) * acc;
        BraidWord one;
        one.letters = {letter};
        cur = apply_braid(cur, one);
      }
      std::cout << render_matrix(acc, format, "accumulated");
      if (!out_path.empty()) write_file(out_path, cur.to_json());
      return 0;
    }

    if (*cmd_track) {
      TrackInput in;
      try {
        in = track_input_from_json(read_file(track_file));
      } catch (const InputError&) {
        throw;
      } catch (const std::exception& e) {
        throw InputError(track_file + ": " + e.what());
      }
      BraidWord w;
      try {
        w = track_braid(in.samples, in.phi);
      } catch (const std::exception& e) {
        std::cerr << "tracking failed: " << e.what() << "\n";
        return 1;
      }
      if (format == "json") {
        json obj;
        obj["word"] = w.str();
        std::cout << obj.dump(2) << "\n";
      } else if (format == "csv") {
        std::cout << "word\n" << w.str() << "\n";
      } else {
        std::cout << "word: " << w.str() << "\n";
      }
      if (!track_apply.empty()) {
        MonodromyData d = load_data(track_apply);
        if (!is_upper_unitriangular(d.s))
          throw InputError("braid action needs S in unitriangular form");
        MonodromyData moved = apply_braid(d, w);
        if (out_path.empty())
          std::cout << moved.to_json();
        else
          write_file(out_path, moved.to_json());
      }
      return 0;
    }

    if (*a3_table) {
      std::ostringstream table;
      table << "band,cell,matrix,i,j,entry\n";
      for (int band = 0; band <= 4; ++band)
        for (int cell = 1; cell <= 2; ++cell) {
          MonodromyData d = a3_reference(band, cell);
          for (int i = 0; i < d.n; ++i)
            for (int j = 0; j < d.n; ++j)
              table << band << "," << cell << ",S," << i + 1 << "," << j + 1
                    << "," << d.s.at(i, j).str() << "\n";
          for (int i = 0; i < d.n; ++i)
            for (int j = 0; j < d.n; ++j)
              table << band << "," << cell << ",C," << i + 1 << "," << j + 1
                    << "," << d.c.at(i, j).str() << "\n";
        }
      Report rep = reproduce_a3_table();
      if (out_path.empty())
        std::cout << table.str() << render_report(rep, format);
      else {
        write_file(out_path, table.str());
        std::cout << render_report(rep, format);
      }
      return report_exit(rep);
    }

    if (*a3_point) {
      A3Point p{t1, t2, t3};
      A3CriticalData cd = critical_data(p);
      NumMat psi = psi_matrix_a3(p);
      json obj;
      obj["t"] = {format_complex(p.t1), format_complex(p.t2),
                  format_complex(p.t3)};
      json uu = json::array();
      for (const auto& u : cd.u) uu.push_back(format_complex(u));
      obj["u"] = uu;
      json pm = json::array();
      for (const auto& row : psi) {
        json r = json::array();
        for (const auto& z : row) r.push_back(format_complex(z));
        pm.push_back(r);
      }
      obj["psi"] = pm;
      emit(obj.dump(2) + "\n", out_path);
      return 0;
    }

    if (*g24_verify) {
      Report rep = verify_g24_suite();
      emit(render_report(rep, format), out_path);
      return report_exit(rep);
    }

    if (*g24_gamma) {
      CohClass g = gamma_class(gamma_sign);
      static const char* names[6] = {"1", "s1", "s2", "s11", "s21", "s22"};
      std::string payload;
      if (format == "json") {
        json obj;
        for (int k = 0; k < 6; ++k) obj[names[k]] = g.a[k].str();
        payload = obj.dump(2) + "\n";
      } else if (format == "csv") {
        std::ostringstream ss;
        ss << "class,coefficient\n";
        for (int k = 0; k < 6; ++k)
          ss << names[k] << "," << g.a[k].str() << "\n";
        payload = ss.str();
      } else {
        std::ostringstream ss;
        for (int k = 0; k < 6; ++k)
          ss << names[k] << ": " << g.a[k].str() << "\n";
        payload = ss.str();
      }
      emit(payload, out_path);
      return 0;
    }

    if (*g24_gram) {
      auto [td, gram] = todd_and_gram();
      Report rep;
      rep.add("pairing_matrix_matches", gram == g24_g_kap());
      emit(render_matrix(gram, format, "gram"), out_path);
      std::cout << render_report(rep, format);
      return report_exit(rep);
    }

    if (*g24_kapranov) {
      Report rep = verify_resultg24();
      emit(render_report(rep, format), out_path);
      return report_exit(rep);
    }

    if (*g24_bands) {
      Report rep = band_table();
      emit(render_report(rep, format), out_path);
      return report_exit(rep);
    }

    if (*g24_levelt) {
      Report rep = levelt_conjugation_check();
      emit(render_report(rep, format), out_path);
      return report_exit(rep);
    }

    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
