#include "rgal/numtheory.hpp"

namespace rgal {

namespace {

bool int_root(const Int& n, unsigned long k, Int* out) {
  if (n < 0 && k % 2 == 0) return false;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return false;
  if (out) *out = r;
  return true;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_perfect_square(const Rat& q, Rat* root) {
  if (q < 0) return false;
  Int rn, rd;
  if (!int_root(q.get_num(), 2, &rn)) return false;
  if (!int_root(q.get_den(), 2, &rd)) return false;
  if (root) *root = make_rat(rn, rd);
  return true;
}

bool is_perfect_cube(const Rat& q, Rat* root) {
  Int rn, rd;
  if (!int_root(q.get_num(), 3, &rn)) return false;
  if (!int_root(q.get_den(), 3, &rd)) return false;
  if (root) *root = make_rat(rn, rd);
  return true;
}

bool probable_prime(const Int& n) {
  if (n < 2) throw std::invalid_argument("probable_prime: n must be >= 2");
  static const long small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long p : small_primes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (long p : small_primes)
    if (!miller_rabin_witness(n, Int(p), d, s)) return false;
  // Sorenson-Webster bound: the twelve witnesses above are conclusive below it.
  static const Int kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);  // reproducible verdict
  for (int round = 0; round < 64; ++round) {
    Int a = rng.get_z_range(n - 3) + 2;
    if (!miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

bool verify_norm_form(const Rat& d, const Int& v, const Int& w) {
  return Rat(v * v - 11 * w * w) == d;
}

}  // namespace rgal
