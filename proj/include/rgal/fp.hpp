#pragma once

#include <cstdint>
#include <stdexcept>

namespace rgal {

// Prime-field element with the modulus carried alongside the value.
// Supports p < 2^62; products go through 128-bit intermediates.
struct Fp {
  uint64_t v = 0;
  uint64_t p = 0;  // modulus; 0 marks a context-free zero

  Fp() = default;
  Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

  static Fp from_signed(long long value, uint64_t prime) {
    long long r = value % static_cast<long long>(prime);
    if (r < 0) r += prime;
    return Fp(static_cast<uint64_t>(r), prime);
  }

  bool is_zero() const { return v == 0; }

  friend uint64_t common_mod(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) throw std::invalid_argument("Fp: modulus mismatch");
    return a.p ? a.p : b.p;
  }

  Fp operator+(const Fp& o) const {
    uint64_t m = common_mod(*this, o);
    uint64_t s = v + o.v;
    if (s >= m) s -= m;
    return Fp(s, m);
  }
  Fp operator-(const Fp& o) const {
    uint64_t m = common_mod(*this, o);
    return Fp(v >= o.v ? v - o.v : v + m - o.v, m);
  }
  Fp operator*(const Fp& o) const {
    uint64_t m = common_mod(*this, o);
    return Fp(static_cast<uint64_t>(static_cast<unsigned __int128>(v) * o.v % m), m);
  }
  bool operator==(const Fp& o) const { return v == o.v && (v == 0 || p == o.p); }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp pow(unsigned long long e) const {
    Fp r(1 % p, p), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  Fp inv() const {
    if (v == 0) throw std::invalid_argument("Fp::inv: zero");
    return pow(p - 2);
  }
};

inline Fp k_zero(const Fp& s) { return Fp(0, s.p ? s.p : 2); }
inline Fp k_one(const Fp& s) { return Fp(1, s.p ? s.p : 2); }
inline Fp k_from(const Fp& s, long v) { return Fp::from_signed(v, s.p ? s.p : 2); }
inline Fp k_inv(const Fp& x) { return x.inv(); }
inline bool k_is_zero(const Fp& x) { return x.is_zero(); }

}  // namespace rgal
