#pragma once

#include <complex>
#include <string>
#include <vector>

namespace mono {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Flat list of named pass/fail results with stable renderings.
struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void merge(const Report& o);
  bool all_pass() const;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

// 15 significant digits, imaginary part only when nonzero.
std::string format_complex(std::complex<double> z);
std::string format_double(double x);

}  // namespace mono
