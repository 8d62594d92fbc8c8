#include "mono/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace mono {

void Report::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
}

void Report::merge(const Report& o) {
  checks.insert(checks.end(), o.checks.begin(), o.checks.end());
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

namespace {

std::vector<Check> sorted_checks(const Report& r) {
  std::vector<Check> cs = r.checks;
  std::stable_sort(cs.begin(), cs.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  return cs;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string Report::to_json() const {
  nlohmann::json j;
  j["pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (auto& c : sorted_checks(*this)) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::string out = "name,pass,detail\n";
  for (auto& c : sorted_checks(*this))
    out += csv_field(c.name) + "," + (c.pass ? "true" : "false") + "," +
           csv_field(c.detail) + "\n";
  return out;
}

std::string Report::to_text() const {
  std::string out;
  int failed = 0;
  for (auto& c : sorted_checks(*this)) {
    if (c.pass) {
      out += "ok   " + c.name;
    } else {
      out += "FAIL " + c.name;
      ++failed;
    }
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  out += std::to_string(checks.size() - failed) + "/" +
         std::to_string(checks.size()) + " checks passed\n";
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

}  // namespace mono
