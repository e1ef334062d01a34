#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgal/fp.hpp"
#include "rgal/poly.hpp"

namespace rgal {

using PolyFp = Poly<Fp>;

struct ReduceResult {
  bool ok = false;
  std::string reason;  // "ok" or "divides denominator or leading coefficient"
  PolyFp poly;         // monic image when ok
};

// Monic image mod p of the integer model of f. Fails when p divides a
// coefficient denominator or the leading numerator.
ReduceResult reduce_mod(const Poly<Rat>& f, uint64_t p);

// Squarefree decomposition, then distinct-degree, then Cantor-Zassenhaus
// equal-degree splitting (trace-map variant for p = 2). Factors are monic
// irreducible; multiplying them back with the unit reproduces the input.
std::vector<std::pair<PolyFp, int>> factor_fp(const PolyFp& f, uint64_t seed = 1);

struct DegreePatternResult {
  bool usable = false;
  std::string reason;      // "ok", "divides denominator or leading coefficient",
                           // "not squarefree mod p"
  std::vector<int> parts;  // irreducible factor degrees, sorted descending
};

DegreePatternResult degree_pattern(const Poly<Rat>& f, uint64_t p);

std::vector<uint64_t> primes_up_to(uint64_t n);

}  // namespace rgal
