#include "rgal/poly.hpp"

namespace rgal {

Poly<Rat> normalize_content(const Poly<Rat>& f) {
  if (f.is_zero()) return f;
  Int den(1);
  for (const Rat& c : f.coeffs()) den = lcm(den, c.get_den());
  Int content(0);
  for (const Rat& c : f.coeffs()) content = gcd(content, Int(c.get_num() * (den / c.get_den())));
  if (f.lc() < 0) content = -content;
  return f.scaled(make_rat(den, content));
}

Poly<Rat> poly_from_longs(const std::vector<long>& coeffs_low_first) {
  std::vector<Rat> c;
  c.reserve(coeffs_low_first.size());
  for (long v : coeffs_low_first) c.emplace_back(v);
  return Poly<Rat>(std::move(c));
}

Poly<EisRat> lift_eisenstein(const Poly<Rat>& f) {
  std::vector<EisRat> c;
  c.reserve(f.coeffs().size());
  for (const Rat& v : f.coeffs()) c.emplace_back(v, Rat(0));
  return Poly<EisRat>(std::move(c));
}

Poly<EisRat> mobius_conjugate(const Poly<Rat>& f24) {
  if (f24.deg() != 24)
    throw std::invalid_argument("mobius_conjugate: expected a degree-24 polynomial");
  Poly<EisRat> f = lift_eisenstein(f24);
  // num = X + 1, den = -wX - conj(w) = (1 + w) - wX
  Poly<EisRat> num(std::vector<EisRat>{EisRat(1), EisRat(1)});
  Poly<EisRat> den(std::vector<EisRat>{EisRat(Rat(1), Rat(1)), EisRat(Rat(0), Rat(-1))});
  return compose_rational(f, num, den);
}

std::string poly_string(const Poly<Rat>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.deg(); i >= 0; --i) {
    Rat c = f.coeffs()[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Rat a = abs(c);
    bool unit = a == 1;
    if (!unit || i == 0) s += rat_string(a);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace rgal
