#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rgal/eisenstein.hpp"
#include "rgal/rational.hpp"

namespace rgal {

// Scalar hooks used by the generic polynomial code. The sample argument
// exists so scalars carrying runtime context (a prime-field modulus) can
// manufacture constants; field scalars over Q ignore it.
inline Rat k_zero(const Rat&) { return Rat(0); }
inline Rat k_one(const Rat&) { return Rat(1); }
inline Rat k_from(const Rat&, long v) { return Rat(v); }
inline Rat k_inv(const Rat& x) {
  if (x == 0) throw std::invalid_argument("k_inv: zero");
  return Rat(1) / x;
}
inline bool k_is_zero(const Rat& x) { return x == 0; }

inline EisRat k_zero(const EisRat&) { return EisRat(0); }
inline EisRat k_one(const EisRat&) { return EisRat(1); }
inline EisRat k_from(const EisRat&, long v) { return EisRat(v); }
inline EisRat k_inv(const EisRat& x) { return x.inv(); }
inline bool k_is_zero(const EisRat& x) { return x.is_zero(); }

template <class K>
K k_pow(const K& base, unsigned long e) {
  K r = k_one(base), b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// Dense univariate polynomial, coefficients lowest-degree first. The zero
// polynomial has an empty coefficient vector and degree -1.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(K v) {
    Poly p;
    if (!k_is_zero(v)) p.c_.push_back(std::move(v));
    return p;
  }

  // x^n with the given leading coefficient.
  static Poly monomial(K lead, int n) {
    Poly p;
    if (k_is_zero(lead)) return p;
    p.c_.assign(n + 1, k_zero(lead));
    p.c_[n] = std::move(lead);
    return p;
  }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }

  const K& lc() const {
    if (is_zero()) throw std::invalid_argument("Poly::lc: zero polynomial");
    return c_.back();
  }

  K coeff(int i) const {
    if (i >= 0 && i <= deg()) return c_[i];
    if (is_zero()) throw std::invalid_argument("Poly::coeff: zero polynomial");
    return k_zero(c_[0]);
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::vector<K> r(std::max(c_.size(), o.c_.size()), k_zero(c_[0]));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(std::move(r));
  }

  Poly operator-() const {
    Poly r = *this;
    for (K& v : r.c_) v = k_zero(v) - v;
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<K> r(c_.size() + o.c_.size() - 1, k_zero(c_[0]));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(r));
  }

  Poly scaled(const K& s) const {
    Poly r = *this;
    for (K& v : r.c_) v = v * s;
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && k_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  if (a.deg() < b.deg()) return {Poly<K>(), a};
  K inv_lc = k_inv(b.lc());
  std::vector<K> rem = a.coeffs();
  std::vector<K> quo(a.deg() - b.deg() + 1, k_zero(b.lc()));
  for (int i = a.deg(); i >= b.deg(); --i) {
    if (k_is_zero(rem[i])) continue;
    K q = rem[i] * inv_lc;
    quo[i - b.deg()] = q;
    for (int j = 0; j <= b.deg(); ++j)
      rem[i - b.deg() + j] = rem[i - b.deg() + j] - q * b.coeffs()[j];
  }
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(k_inv(a.lc()));
}

template <class K>
Poly<K> derivative(const Poly<K>& f) {
  if (f.deg() < 1) return Poly<K>();
  std::vector<K> r;
  r.reserve(f.deg());
  for (int i = 1; i <= f.deg(); ++i)
    r.push_back(f.coeffs()[i] * k_from(f.lc(), i));
  return Poly<K>(std::move(r));
}

template <class K>
K eval(const Poly<K>& f, const K& x) {
  K acc = k_zero(x);
  for (int i = f.deg(); i >= 0; --i) acc = acc * x + f.coeffs()[i];
  return acc;
}

// Res(f, g) = lc(g)^{deg f} * prod f(beta) over the roots beta of g,
// computed by Euclidean reduction (exact: all scalar kinds are fields).
template <class K>
K resultant(Poly<K> f, Poly<K> g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant: zero polynomial");
  K res = k_one(f.lc());
  while (true) {
    int df = f.deg(), dg = g.deg();
    if (df == 0) return res * k_pow(f.lc(), dg);
    if (dg == 0) return res * k_pow(g.lc(), df);
    auto [q, r] = divrem(f, g);
    if (r.is_zero()) return k_zero(f.lc());
    int dr = r.deg();
    res = res * k_pow(g.lc(), df - dr);
    if ((dr * dg) % 2 != 0) res = k_zero(res) - res;
    f = std::move(g);
    g = std::move(r);
  }
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)
template <class K>
K discriminant(const Poly<K>& f) {
  if (f.deg() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  Poly<K> fp = derivative(f);
  if (fp.is_zero()) return k_zero(f.lc());
  K res = resultant(f, fp);
  int n = f.deg();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) res = k_zero(res) - res;
  return res * k_inv(f.lc());
}

template <class K>
bool squarefree_check(const Poly<K>& f) {
  if (f.deg() < 1) return !f.is_zero();
  Poly<K> fp = derivative(f);
  if (fp.is_zero()) return false;
  return gcd_monic(f, fp).deg() == 0;
}

// den^{deg f} * f(num/den), expanded exactly with no content removal.
template <class K>
Poly<K> compose_rational(const Poly<K>& f, const Poly<K>& num, const Poly<K>& den) {
  if (den.is_zero()) throw std::invalid_argument("compose_rational: zero denominator");
  if (f.is_zero()) return Poly<K>();
  Poly<K> acc = Poly<K>::constant(f.lc());
  Poly<K> dpow = Poly<K>::constant(k_one(f.lc()));
  for (int i = f.deg() - 1; i >= 0; --i) {
    dpow = dpow * den;
    acc = acc * num + dpow * Poly<K>::constant(f.coeff(i));
  }
  return acc;
}

// ---- rational-coefficient specifics ----

// Clear denominators, divide by integer content, make the leading
// coefficient positive (the Magma `Numerator` normalization).
Poly<Rat> normalize_content(const Poly<Rat>& f);

Poly<Rat> poly_from_longs(const std::vector<long>& coeffs_low_first);

Poly<EisRat> lift_eisenstein(const Poly<Rat>& f);

// (-w X - conj(w))^24 * f24((X+1)/(-w X - conj(w))); requires deg f24 == 24.
Poly<EisRat> mobius_conjugate(const Poly<Rat>& f24);

std::string poly_string(const Poly<Rat>& f, const std::string& var = "x");

}  // namespace rgal
