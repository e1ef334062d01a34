#pragma once

// Published reference values the verification commands compare against.
// Coefficient lists are degree-descending. Do not regenerate by hand; the
// verify commands exist precisely to check the pipeline against these.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rgal::fixtures {

struct Theorem1Fixture {
  std::string name;
  // solve_params inputs (a, b, c) and whether the conjugate convention applies
  long a, b, c;
  bool conjugate;
  std::string t, s;            // trinomial parameters, f8 = X^8 - tX - s
  std::string disc;            // disc(f8) = v^2 - 11 w^2
  std::string v, w;
  std::string r;               // 12^6 w / (11^5 v), lowest terms
  std::vector<long> f24;       // 25 coefficients, degree 24 down to 0
};

inline const std::vector<Theorem1Fixture>& theorem1_fixtures() {
  static const std::vector<Theorem1Fixture> fixtures = {
      {"main",
       1, 2, -24, true,
       "2139", "-6489",
       "7766749209660254797873154435458281", // 3^8 7^7 1437417619559484462138047
       "106936663173678765", "18262481960816352",
       "1962764241992810496/619884697145165705",
       {1, 0, -24, 8, 252, -168, -1484, -627, 26628, -97918, 199671, -266679,
        234997, -114681, -10107, 63686, -45384, 6819, 12880, -12096, 5502,
        -1504, 252, -24, 1}},
      {"729",
       -18, -9, 2, false,
       "-729", "-2187",
       "3949085439326327289928812040905", // 3^48 5 269 36809
       "1992257950336974", "42646860008631",
       "225441792/568026877",
       {1, 0, -24, 8, 252, -168, -1484, 2241, 2250, -11878, 41931, -126147,
        234997, -255213, 147633, -22354, -21006, 3951, 12880, -12096, 5502,
        -1504, 252, -24, 1}},
      {"123",
       7, -15, 1, false,
       "-123", "1196",
       "-58727088785134974217580322839", // a (negative of a) prime
       "760938559245", "73067632314568",
       "24242086778798112768/13616657322774055",
       {1, 0, -24, 8, 252, -168, -1484, 1635, 3109, 4278, -44915, 84511,
        -65443, 14833, -5873, 30162, -30449, 4557, 12880, -12096, 5502, -1504,
        252, -24, 1}}};
  return fixtures;
}

// r^2 as printed in the deg-24 construction's g
inline const char* kMainRSquared =
    "3852443469645611961262219752967766016/"
    "384257037754753807138505851908147025";

inline const char* kCubeOrder = "43252003274489856000";

// x-coordinates of nP on y^2 = x^3 + 189, P = (-5, 8), n = 1..5
inline const std::array<const char*, 5> kEllipticXTable = {
    "-5",
    "8185/256",
    "-67697909/89586225",
    "4280596055755105/564755072459776",
    "2421183698073114509087275/563391227230105852836241",
};

inline const char* kAppendixTOfX1 = "-452984832/14706125";

// family parameters at (u, v) = (1, 1)
inline const char* kFamilyT11 = "16777216/352947";
inline const char* kFamilyS11 = "-8916100448256/25937424601";

// orders of the degree-24 corner and edge groups of the first-draft model
inline const char* kCornerGroupOrder = "88179840";     // 3^7 8!
inline const char* kEdgeGroupOrder = "980995276800";   // 2^11 12!

}  // namespace rgal::fixtures
