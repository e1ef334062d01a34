#include "rgal/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rgal {

Rat trinomial_disc(int n, const Rat& a, const Rat& b) {
  if (n < 2) throw std::invalid_argument("trinomial_disc: n must be >= 2");
  Rat nn = pow_rat(Rat(n), n);
  Rat mm = pow_rat(Rat(n - 1), n - 1);
  Rat d = nn * pow_rat(b, n - 1) - mm * pow_rat(a, n);
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

TrinomialParams solve_params(const Rat& a, const Rat& b, const Rat& c,
                             OmegaConvention conv) {
  EisRat base = conv == OmegaConvention::kPlain ? EisRat(a, b) : EisRat(a, b).conj();
  EisRat cube = base.pow(3) * EisRat(c, Rat(0));
  // 3wt - s + 6561 conj(w) = (-s - 6561) + (3t - 6561) w
  Rat t = (cube.b + 6561) / 3;
  Rat s = -cube.a - 6561;
  EisRat lhs(-s - 6561, 3 * t - 6561);
  if (lhs != cube) throw std::logic_error("solve_params: re-substitution failed");
  return {t, s};
}

Poly<Rat> trinomial_f8(const Rat& t, const Rat& s) {
  std::vector<Rat> c(9, Rat(0));
  c[0] = -s;
  c[1] = -t;
  c[8] = 1;
  return Poly<Rat>(std::move(c));
}

Poly<Rat> cubic_lift(const Poly<Rat>& f) {
  Poly<Rat> num = poly_from_longs({1, -3, 0, 1});  // X^3 - 3X + 1
  Poly<Rat> den = poly_from_longs({0, -1, 1});     // X^2 - X
  return compose_rational(f, num, den);
}

Theorem1Data build_theorem1(const Rat& t, const Rat& s, const Int& v, const Int& w) {
  Theorem1Data out;
  out.disc_f8 = trinomial_disc(8, t, -s);
  if (!verify_norm_form(out.disc_f8, v, w))
    throw std::invalid_argument("build_theorem1: disc(f8) = " + rat_string(out.disc_f8) +
                                " != v^2 - 11w^2 for the given witness");
  out.f24 = normalize_content(cubic_lift(trinomial_f8(t, s)));
  out.r = make_rat(pow_int(Int(12), 6) * w, pow_int(Int(11), 5) * v);
  Rat r2 = out.r * out.r;
  std::vector<Rat> g(25, Rat(0));
  g[0] = r2;
  g[2] = r2;
  g[24] = 1;
  out.g24 = Poly<Rat>(std::move(g));

  Poly<EisRat> conj = mobius_conjugate(out.f24);
  EisRat lead = conj.lc();
  for (int i = 0; i <= conj.deg(); ++i)
    if (i % 3 != 0 && !conj.coeff(i).is_zero())
      throw std::logic_error("build_theorem1: conjugated lift has degree-" +
                             std::to_string(i) + " support");
  out.cube_constant = conj.coeff(0) / lead;
  if (!eis_is_cube(out.cube_constant, &out.cube_root))
    throw std::logic_error("build_theorem1: constant term is not a cube in Q[w]");
  return out;
}

std::pair<Rat, Rat> family_ts(const Rat& u, const Rat& v) {
  if (u == 0) throw std::invalid_argument("family_ts: u must be nonzero");
  Rat denom = 7 + (1 - 11 * u * u) * v * v;
  if (denom == 0) throw std::invalid_argument("family_ts: degenerate parameters");
  Rat t = -Rat(pow_int(Int(8), 8)) / (Rat(pow_int(Int(7), 6)) * denom);
  Rat s = -Rat(pow_int(Int(12), 12)) / Rat(pow_int(Int(11), 10)) * u * u;
  return {t, s};
}

FamilyPoly build_family_p(const Rat& u, const Rat& v) {
  FamilyPoly out;
  std::tie(out.t, out.s) = family_ts(u, v);
  // f(X) = X^8 - t(X+1)
  std::vector<Rat> f(9, Rat(0));
  f[0] = -out.t;
  f[1] = -out.t;
  f[8] = 1;
  out.corner_factor = cubic_lift(Poly<Rat>(std::move(f)));
  // g(X^2) = X^24 - s(X^2 + 1)
  std::vector<Rat> g(25, Rat(0));
  g[0] = -out.s;
  g[2] = -out.s;
  g[24] = 1;
  out.edge_factor = Poly<Rat>(std::move(g));
  out.product = out.corner_factor * out.edge_factor;
  return out;
}

Poly<Rat> appendix_g12(const Rat& t) {
  if (t == 1) throw std::invalid_argument("appendix_g12: t = 1 is degenerate");
  Poly<Rat> a = poly_from_longs({3, -16, -36, 0, 18});  // 18X^4 - 36X^2 - 16X + 3
  Poly<Rat> b = poly_from_longs({-4, -9, 0, 6});        // 6X^3 - 9X - 4
  Poly<Rat> h = (a * a * a).scaled(Rat(2)) - (b * b * b * b).scaled(9 * t);
  return h.scaled(Rat(1) / (Rat(-11664) * t + 11664));
}

Rat appendix_t_of_s(const Rat& s) {
  if (s == 0) throw std::invalid_argument("appendix_t_of_s: s must be nonzero");
  Rat half = s - make_rat(125, 256) / s;
  return 1 + half * half / 2;
}

namespace {
const long kCurveB = 189;
}

bool ec_on_curve(const EllipticPoint& pt) {
  if (pt.at_infinity) return true;
  return pt.y * pt.y == pt.x * pt.x * pt.x + kCurveB;
}

EllipticPoint ec_neg(const EllipticPoint& pt) {
  if (pt.at_infinity) return pt;
  return {pt.x, -pt.y, false};
}

EllipticPoint ec_add(const EllipticPoint& a, const EllipticPoint& b) {
  if (a.at_infinity) return b;
  if (b.at_infinity) return a;
  if (a.x == b.x && a.y == -b.y) return EllipticPoint::infinity();
  Rat slope;
  if (a.x == b.x) {
    // tangent; y != 0 here since the vertical case was handled above
    slope = 3 * a.x * a.x / (2 * a.y);
  } else {
    slope = (b.y - a.y) / (b.x - a.x);
  }
  Rat x3 = slope * slope - a.x - b.x;
  Rat y3 = slope * (a.x - x3) - a.y;
  return {x3, y3, false};
}

std::vector<EllipticPoint> ec_multiples(int n) {
  EllipticPoint gen{Rat(-5), Rat(8), false};
  std::vector<EllipticPoint> out;
  EllipticPoint acc = gen;
  for (int i = 1; i <= n; ++i) {
    out.push_back(acc);
    acc = ec_add(acc, gen);
  }
  return out;
}

Rat appendix_t_of_xn(const Rat& xn) {
  if (xn == 0) throw std::invalid_argument("appendix_t_of_xn: x_n must be nonzero");
  Rat s = Rat(256 * 3) / (49 * xn);
  return s * s * s;
}

Poly<Rat> appendix_f8(const Rat& t) {
  std::vector<Rat> c(9, Rat(0));
  c[0] = -t;
  c[1] = -t;
  c[8] = 1;
  return Poly<Rat>(std::move(c));
}

long long count_order2_semidirect(SemidirectVariant variant) {
  // Involutions (and the identity) of S8, acting on sum-zero vectors of
  // (Z3)^8; (x, rho) squares to the identity iff x_i + eps * x_{rho(i)} = 0
  // for all i, where eps = -1 exactly when the action is sign-twisted and
  // rho is odd.
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool involution = true;
    for (int i = 0; i < 8 && involution; ++i) involution = perm[perm[i]] == i;
    if (!involution) continue;
    int transpositions = 0;
    for (int i = 0; i < 8; ++i)
      if (perm[i] > i) ++transpositions;
    bool odd = transpositions % 2 != 0;
    int eps = (variant == SemidirectVariant::kSignTwisted && odd) ? -1 : 1;
    bool is_id = transpositions == 0;
    for (int code = 0; code < 6561; ++code) {
      int x[8], c = code, sum = 0;
      for (int i = 0; i < 8; ++i) {
        x[i] = c % 3;
        c /= 3;
        sum += x[i];
      }
      if (sum % 3 != 0) continue;
      bool ok = true;
      for (int i = 0; i < 8 && ok; ++i) ok = (x[i] + eps * x[perm[i]]) % 3 == 0;
      if (!ok) continue;
      if (is_id && code == 0) continue;  // identity has order 1
      ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace rgal
