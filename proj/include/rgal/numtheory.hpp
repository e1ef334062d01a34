#pragma once

#include "rgal/rational.hpp"

namespace rgal {

// Exact perfect-power tests; numerator and denominator are tested
// separately by integer root extraction and re-multiplication.
bool is_perfect_square(const Rat& q, Rat* root = nullptr);
bool is_perfect_cube(const Rat& q, Rat* root = nullptr);

// Miller-Rabin, deterministic for n < 3317044064679887385961981 via the
// first twelve prime witnesses, otherwise 64 extra pseudo-random rounds
// (seeded from n, so the verdict is reproducible). Requires n >= 2.
bool probable_prime(const Int& n);

// v^2 - 11 w^2 == d, exactly.
bool verify_norm_form(const Rat& d, const Int& v, const Int& w);

}  // namespace rgal
