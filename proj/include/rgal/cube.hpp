#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "rgal/perm.hpp"
#include "rgal/rational.hpp"

namespace rgal {

// The six face moves of the 48-facet permutation model, and the two-element
// generating set alpha, beta derived from them.
std::vector<Perm> cube_moves();
std::vector<Perm> cube_two_generators();

// Wreath-model position: corner twists in (Z3)^8 with a permutation of the
// eight corner cubies, edge flips in (Z2)^12 with a permutation of the
// twelve edge cubies.
struct WreathState {
  std::array<int, 8> twist{};
  Perm corners{8};
  std::array<int, 12> flip{};
  Perm edges{12};

  bool operator==(const WreathState&) const = default;
};

struct PsiImage {
  int twist_sum;  // mod 3
  int flip_sum;   // mod 2
  int sign;       // sign(rho) * sign(sigma)
};

PsiImage psi(const WreathState& s);

// sign(rho) == sign(sigma), twists sum to 0 mod 3, flips sum to 0 mod 2.
bool is_realistic(const WreathState& s);

// 3^8 * 8! * 2^12 * 12! / 12, the size of the kernel of psi.
Int wreath_group_order();

// Wreath-product law applied componentwise: (x, g)(y, h) = (x + g.y, gh)
// with (g.y)_i = y_{g(i)}; composition is left-to-right application.
WreathState compose_states(const WreathState& s1, const WreathState& s2);
WreathState inverse_state(const WreathState& s);

// Uniform over the kernel of psi. Twists/flips drawn sum-zero, rho uniform,
// sigma by rejection until the signs match.
WreathState random_realistic(std::mt19937_64& rng);

// Cycle types of the induced action on the 24 corner facets and 24 edge
// facets. A rho-cycle of length d with twist sum t contributes one 3d part
// when t != 0 mod 3 and three d parts otherwise; a sigma-cycle with odd flip
// sum contributes one 2d part, otherwise two d parts.
struct FacetPattern {
  std::vector<int> corner;  // sorted descending, sums to 24
  std::vector<int> edge;    // sorted descending, sums to 24
};

FacetPattern facet_pattern(const WreathState& s);

// `x=[t1..t8] rho=(cycles) y=[b1..b12] sigma=(cycles)`
std::string state_string(const WreathState& s);
WreathState parse_state(const std::string& text);

}  // namespace rgal
