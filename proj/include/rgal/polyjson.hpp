#pragma once

#include <string>

#include "rgal/eisenstein.hpp"
#include "rgal/poly.hpp"

namespace rgal {

// {"var":"x","coeffs":["c0","c1",...]}, lowest degree first, rationals as
// strings; Eisenstein coefficients as ["a","b"] pairs meaning a+bw.
std::string poly_to_json(const Poly<Rat>& f, const std::string& var = "x");
std::string poly_to_json(const Poly<EisRat>& f, const std::string& var = "x");
Poly<Rat> poly_from_json(const std::string& text);
Poly<EisRat> eis_poly_from_json(const std::string& text);

}  // namespace rgal
