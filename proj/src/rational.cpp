#include "rgal/rational.hpp"

namespace rgal {

std::string rat_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  Int num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Int(s);
    } else {
      num = Int(s.substr(0, slash));
      den = Int(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  }
  return make_rat(num, den);
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("pow_rat: zero base, negative exponent");
    return pow_rat(Rat(1) / base, -e);
  }
  Rat r(pow_int(base.get_num(), static_cast<unsigned long>(e)),
        pow_int(base.get_den(), static_cast<unsigned long>(e)));
  // num/den coprime already, so the powers are too
  return r;
}

}  // namespace rgal
