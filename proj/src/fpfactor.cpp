#include "rgal/fpfactor.hpp"

#include <algorithm>
#include <random>

namespace rgal {

namespace {

PolyFp x_poly(uint64_t p) { return PolyFp::monomial(Fp(1, p), 1); }
PolyFp one_poly(uint64_t p) { return PolyFp::constant(Fp(1, p)); }

bool is_one(const PolyFp& f) { return f.deg() == 0 && f.lc().v == 1; }

PolyFp exact_div(const PolyFp& a, const PolyFp& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& f) {
  return divrem(a * b, f).second;
}

PolyFp powmod(PolyFp base, Int e, const PolyFp& f) {
  PolyFp r = one_poly(f.lc().p);
  base = divrem(base, f).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, f);
    base = mulmod(base, base, f);
    e >>= 1;
  }
  return r;
}

// p-th root of a polynomial in X^p over F_p: a^p = a, so keep every p-th
// coefficient as is.
PolyFp pth_root(const PolyFp& f) {
  uint64_t p = f.lc().p;
  std::vector<Fp> c;
  for (int i = 0; i <= f.deg(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
  return PolyFp(std::move(c));
}

void squarefree_decompose(const PolyFp& f, int mult,
                          std::vector<std::pair<PolyFp, int>>& out) {
  uint64_t p = f.lc().p;
  if (f.deg() == 0) return;
  PolyFp fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_decompose(pth_root(f), mult * static_cast<int>(p), out);
    return;
  }
  PolyFp g = gcd_monic(f, fp);
  PolyFp w = exact_div(f, g);
  int i = 1;
  while (!is_one(w)) {
    PolyFp y = gcd_monic(w, g);
    PolyFp z = exact_div(w, y);
    if (!is_one(z)) out.emplace_back(z, mult * i);
    ++i;
    w = std::move(y);
    g = exact_div(g, w);
  }
  if (!is_one(g)) squarefree_decompose(pth_root(g), mult * static_cast<int>(p), out);
}

// (factor product of equal degree d, d) pairs from a monic squarefree input.
std::vector<std::pair<PolyFp, int>> distinct_degree(PolyFp f) {
  uint64_t p = f.lc().p;
  std::vector<std::pair<PolyFp, int>> out;
  PolyFp x = x_poly(p);
  PolyFp h = divrem(x, f).second;
  int d = 0;
  while (f.deg() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, Int(static_cast<unsigned long>(p)), f);
    PolyFp g = gcd_monic(h - x, f);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = divrem(h, f).second;
    }
  }
  if (f.deg() > 0) out.emplace_back(f, f.deg());
  return out;
}

void equal_degree_split(const PolyFp& f, int d, std::mt19937_64& rng,
                        std::vector<PolyFp>& out) {
  uint64_t p = f.lc().p;
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  PolyFp g;
  while (true) {
    std::uniform_int_distribution<uint64_t> coeff(0, p - 1);
    std::vector<Fp> rc;
    for (int i = 0; i < f.deg(); ++i) rc.emplace_back(coeff(rng), p);
    PolyFp a(std::move(rc));
    if (a.deg() < 1) continue;
    if (p == 2) {
      // trace map over F_{2^d}
      PolyFp t = divrem(a, f).second, acc = t;
      for (int i = 1; i < d; ++i) {
        t = mulmod(t, t, f);
        acc = acc + t;
      }
      g = gcd_monic(acc, f);
    } else {
      Int e = (pow_int(Int(static_cast<unsigned long>(p)), d) - 1) / 2;
      PolyFp b = powmod(a, e, f) - one_poly(p);
      g = gcd_monic(b, f);
    }
    if (g.deg() > 0 && g.deg() < f.deg()) break;
  }
  equal_degree_split(g, d, rng, out);
  equal_degree_split(exact_div(f, g), d, rng, out);
}

}  // namespace

std::vector<std::pair<PolyFp, int>> factor_fp(const PolyFp& f, uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("factor_fp: zero polynomial");
  std::vector<std::pair<PolyFp, int>> out;
  if (f.deg() == 0) return out;
  std::mt19937_64 rng(seed);
  PolyFp monic = f.scaled(f.lc().inv());
  std::vector<std::pair<PolyFp, int>> squarefree;
  squarefree_decompose(monic, 1, squarefree);
  for (const auto& [part, mult] : squarefree) {
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::vector<PolyFp> irreducibles;
      equal_degree_split(prod, d, rng, irreducibles);
      for (PolyFp& irr : irreducibles) out.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (int i = a.first.deg(); i >= 0; --i) {
      if (a.first.coeff(i).v != b.first.coeff(i).v)
        return a.first.coeff(i).v < b.first.coeff(i).v;
    }
    return a.second < b.second;
  });
  return out;
}

ReduceResult reduce_mod(const Poly<Rat>& f, uint64_t p) {
  ReduceResult res;
  if (f.is_zero()) throw std::invalid_argument("reduce_mod: zero polynomial");
  Poly<Rat> integral = normalize_content(f);
  Int lead = integral.lc().get_num();
  if (lead % static_cast<long>(p) == 0) {
    res.reason = "divides denominator or leading coefficient";
    return res;
  }
  std::vector<Fp> c;
  c.reserve(integral.deg() + 1);
  for (const Rat& q : integral.coeffs()) {
    Int r = q.get_num() % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    c.emplace_back(r.get_ui(), p);
  }
  PolyFp img(std::move(c));
  res.poly = img.scaled(img.lc().inv());
  res.ok = true;
  res.reason = "ok";
  return res;
}

DegreePatternResult degree_pattern(const Poly<Rat>& f, uint64_t p) {
  DegreePatternResult out;
  ReduceResult red = reduce_mod(f, p);
  if (!red.ok) {
    out.reason = red.reason;
    return out;
  }
  if (!squarefree_check(red.poly)) {
    out.reason = "not squarefree mod p";
    return out;
  }
  // seed fixed per prime, so patterns are reproducible and seed-independent
  for (const auto& [factor, mult] : factor_fp(red.poly, 0x5eed0000u + p))
    for (int i = 0; i < mult; ++i) out.parts.push_back(factor.deg());
  std::sort(out.parts.rbegin(), out.parts.rend());
  out.usable = true;
  out.reason = "ok";
  return out;
}

std::vector<uint64_t> primes_up_to(uint64_t n) {
  std::vector<char> sieve(n + 1, 1);
  std::vector<uint64_t> primes;
  for (uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    primes.push_back(i);
    for (uint64_t j = i * i; j <= n; j += i) sieve[j] = 0;
  }
  return primes;
}

}  // namespace rgal
