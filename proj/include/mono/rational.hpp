#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace mono {

using Rat = mpq_class;

// Parse "p" or "p/q" (optionally signed) into a reduced rational with a
// positive denominator. Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

bool rat_is_integer(const Rat& r);

// r as a long; requires an integer value that fits.
long rat_to_long(const Rat& r);

// Gaussian rational: re + im*i with exact rational components.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}
  GaussRat(long r) : re(r), im(0) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }

  GaussRat operator-() const { return GaussRat(-re, -im); }

  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }

  GaussRat inverse() const {
    if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
    Rat n = re * re + im * im;
    return GaussRat(re / n, -im / n);
  }

  GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  // Integer power; negative exponents use the inverse.
  GaussRat pow(long k) const;

  std::complex<double> to_complex() const {
    return {rat_to_double(re), rat_to_double(im)};
  }
};

}  // namespace mono
