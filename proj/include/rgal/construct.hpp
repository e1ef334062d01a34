#pragma once

#include <utility>
#include <vector>

#include "rgal/eisenstein.hpp"
#include "rgal/numtheory.hpp"
#include "rgal/poly.hpp"

namespace rgal {

// disc(X^n - aX + b) = (-1)^{n(n-1)/2} (n^n b^{n-1} - (n-1)^{n-1} a^n)
Rat trinomial_disc(int n, const Rat& a, const Rat& b);

struct TrinomialParams {
  Rat t, s;  // f8(X) = X^8 - tX - s
};

// Solve 3wt - s + 6561 conj(w) = c (a + wb)^3 for (t, s). The conjugate
// convention uses c (a + conj(w) b)^3 on the right instead; the two
// conventions disagree and both appear in worked examples, so the caller
// chooses. The returned pair is re-verified against the defining equation.
enum class OmegaConvention { kPlain, kConjugate };
TrinomialParams solve_params(const Rat& a, const Rat& b, const Rat& c,
                             OmegaConvention conv);

Poly<Rat> trinomial_f8(const Rat& t, const Rat& s);  // X^8 - tX - s

// (X^2 - X)^{deg f} * f((X^3 - 3X + 1)/(X^2 - X)), no normalization.
Poly<Rat> cubic_lift(const Poly<Rat>& f);

struct Theorem1Data {
  Poly<Rat> f24;  // content-normalized cubic lift of f8
  Poly<Rat> g24;  // X^24 + r^2 (X^2 + 1)
  Rat r;          // 12^6 w / (11^5 v)
  Rat disc_f8;
  EisRat cube_constant;  // normalized constant term of the Moebius conjugate
  EisRat cube_root;
};

// Requires disc(X^8 - tX - s) = v^2 - 11 w^2; verifies the degree-mod-3
// support and constant-term cube conditions on the conjugated lift.
Theorem1Data build_theorem1(const Rat& t, const Rat& s, const Int& v, const Int& w);

// (t, s) = (-8^8 / (7^6 (7 + (1 - 11u^2) v^2)), -(12^12 / 11^10) u^2)
std::pair<Rat, Rat> family_ts(const Rat& u, const Rat& v);

struct FamilyPoly {
  Rat t, s;
  Poly<Rat> corner_factor;  // degree 24, lift of X^8 - t(X+1)
  Poly<Rat> edge_factor;    // degree 24, X^24 - s(X^2 + 1)
  Poly<Rat> product;        // degree 48
};

FamilyPoly build_family_p(const Rat& u, const Rat& v);

// Degree-12 resolvent family of the appendix:
// (2(18X^4 - 36X^2 - 16X + 3)^3 - 9t(6X^3 - 9X - 4)^4) / (11664(1 - t))
Poly<Rat> appendix_g12(const Rat& t);

// t = 1 + (s - 125/(256 s))^2 / 2
Rat appendix_t_of_s(const Rat& s);

// Chord-tangent group law on y^2 = x^3 + 189.
struct EllipticPoint {
  Rat x, y;
  bool at_infinity = false;

  static EllipticPoint infinity() { return {Rat(0), Rat(0), true}; }
  bool operator==(const EllipticPoint&) const = default;
};

bool ec_on_curve(const EllipticPoint& pt);
EllipticPoint ec_neg(const EllipticPoint& pt);
EllipticPoint ec_add(const EllipticPoint& a, const EllipticPoint& b);

// P, 2P, ..., nP for the generator P = (-5, 8).
std::vector<EllipticPoint> ec_multiples(int n);

// t = (2^8 * 3 / (7^2 x_n))^3
Rat appendix_t_of_xn(const Rat& xn);

Poly<Rat> appendix_f8(const Rat& t);  // X^8 - t(X+1)

// Count of order-2 elements of ((C3)^8 x| S8)° under the natural
// permutation action, or the action twisted by sign acting as inversion.
// These counts distinguish the two degree-24 transitive groups.
enum class SemidirectVariant { kNatural, kSignTwisted };
long long count_order2_semidirect(SemidirectVariant variant);

}  // namespace rgal
