#include "mono/rational.hpp"

#include <cctype>

namespace mono {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t pos = 0;
  auto digits = [&](size_t from) {
    size_t p = from;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p;
  };
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  size_t end_num = digits(pos);
  if (end_num == pos) throw std::invalid_argument("malformed rational: " + s);
  pos = end_num;
  if (pos != s.size()) {
    if (s[pos] != '/') throw std::invalid_argument("malformed rational: " + s);
    ++pos;
    size_t end_den = digits(pos);
    if (end_den == pos || end_den != s.size())
      throw std::invalid_argument("malformed rational: " + s);
  }
  Rat r;
  // set_str does not accept a leading plus
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

double rat_to_double(const Rat& r) {
  return r.get_d();
}

bool rat_is_integer(const Rat& r) {
  return r.get_den() == 1;
}

long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw std::domain_error("rational is not an integer");
  if (!r.get_num().fits_slong_p()) throw std::domain_error("integer too large");
  return r.get_num().get_si();
}

GaussRat GaussRat::pow(long k) const {
  GaussRat base = *this;
  if (k < 0) {
    base = base.inverse();
    k = -k;
  }
  GaussRat acc(Rat(1));
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace mono
