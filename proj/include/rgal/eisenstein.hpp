#pragma once

#include "rgal/rational.hpp"

namespace rgal {

// a + b*w where w is a primitive cube root of unity, w^2 = -1 - w.
struct EisRat {
  Rat a, b;

  EisRat() : a(0), b(0) {}
  EisRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit EisRat(long v) : a(v), b(0) {}

  static EisRat omega() { return EisRat(Rat(0), Rat(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const EisRat& o) const { return a == o.a && b == o.b; }
  bool operator!=(const EisRat& o) const { return !(*this == o); }

  EisRat operator+(const EisRat& o) const { return EisRat(a + o.a, b + o.b); }
  EisRat operator-(const EisRat& o) const { return EisRat(a - o.a, b - o.b); }
  EisRat operator-() const { return EisRat(-a, -b); }

  EisRat operator*(const EisRat& o) const {
    // (a1 + b1 w)(a2 + b2 w), reduced with w^2 = -1 - w
    return EisRat(a * o.a - b * o.b, a * o.b + b * o.a - b * o.b);
  }

  // conj(a + b w) = a + b w^2 = (a - b) - b w
  EisRat conj() const { return EisRat(a - b, -b); }

  Rat norm() const { return a * a - a * b + b * b; }

  EisRat inv() const {
    Rat n = norm();
    if (n == 0) throw std::invalid_argument("EisRat::inv: zero");
    EisRat c = conj();
    return EisRat(c.a / n, c.b / n);
  }

  EisRat operator/(const EisRat& o) const { return *this * o.inv(); }

  EisRat pow(unsigned long k) const {
    EisRat r(1), base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }
};

std::string eis_string(const EisRat& z);

// Guess-and-verify cube test: float the value into C with w = e^{2 pi i/3},
// take the three complex cube roots, round their (a, b) coordinates back to
// bounded-denominator rationals and cube the candidates exactly.
bool eis_is_cube(const EisRat& z, EisRat* root = nullptr);

}  // namespace rgal
