#include "rgal/eisenstein.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace rgal {

std::string eis_string(const EisRat& z) {
  if (z.b == 0) return rat_string(z.a);
  std::string s;
  if (z.a != 0) s = rat_string(z.a) + (z.b > 0 ? "+" : "");
  else if (z.b < 0) s = "";
  return s + rat_string(z.b) + "*w";
}

namespace {

// Best continued-fraction convergent of x with denominator <= qmax.
Rat rat_approx(double x, const Int& qmax) {
  if (!std::isfinite(x)) return Rat(0);
  Rat exact(x);  // doubles are dyadic rationals, conversion is exact
  exact.canonicalize();
  if (exact.get_den() <= qmax) return exact;
  Int p0(1), q0(0), p1, q1(1);
  Rat rem = exact;
  Int a = Int(rem.get_num() / rem.get_den());
  if (rem < 0 && rem.get_num() % rem.get_den() != 0) a -= 1;  // floor
  p1 = a;
  Rat frac = rem - Rat(a);
  while (frac != 0) {
    rem = Rat(1) / frac;
    a = rem.get_num() / rem.get_den();
    if (rem < 0 && rem.get_num() % rem.get_den() != 0) a -= 1;
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > qmax) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    frac = rem - Rat(a);
  }
  return make_rat(p1, q1);
}

std::complex<double> to_complex(const EisRat& z) {
  static const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
  return z.a.get_d() + z.b.get_d() * w;
}

}  // namespace

bool eis_is_cube(const EisRat& z, EisRat* root) {
  if (z.is_zero()) {
    if (root) *root = EisRat(0);
    return true;
  }
  std::complex<double> zc = to_complex(z);
  double r = std::cbrt(std::abs(zc));
  double theta = std::arg(zc) / 3.0;
  const double sqrt3_2 = std::sqrt(3.0) / 2.0;

  // Denominator bounds to try for the rounding step: small ones first, then
  // bounds derived from the input's own denominators.
  std::vector<Int> bounds = {Int(1), Int(64), Int(100000), Int("1000000000")};
  Int dz = lcm(z.a.get_den(), z.b.get_den());
  bounds.push_back(dz);
  bounds.push_back(dz * dz);

  for (int k = 0; k < 3; ++k) {
    double ang = theta + 2.0 * M_PI * k / 3.0;
    std::complex<double> c = std::polar(r, ang);
    double bf = c.imag() / sqrt3_2;
    double af = c.real() + bf / 2.0;
    for (const Int& q : bounds) {
      EisRat cand(rat_approx(af, q), rat_approx(bf, q));
      if (cand.pow(3) == z) {
        if (root) *root = cand;
        return true;
      }
    }
  }
  return false;
}

}  // namespace rgal
