#include "rgal/cube.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rgal {

std::vector<Perm> cube_moves() {
  static const char* kMoves[6] = {
      "(1,3,8,6)(2,5,7,4)(9,33,25,17)(10,34,26,18)(11,35,27,19)",
      "(9,11,16,14)(10,13,15,12)(1,17,41,40)(4,20,44,37)(6,22,46,35)",
      "(17,19,24,22)(18,21,23,20)(6,25,43,16)(7,28,42,13)(8,30,41,11)",
      "(25,27,32,30)(26,29,31,28)(3,38,43,19)(5,36,45,21)(8,33,48,24)",
      "(33,35,40,38)(34,37,39,36)(3,9,46,32)(2,12,47,29)(1,14,48,27)",
      "(41,43,48,46)(42,45,47,44)(14,22,30,38)(15,23,31,39)(16,24,32,40)",
  };
  std::vector<Perm> t;
  for (const char* m : kMoves) t.push_back(Perm::parse_cycles(m, 48));
  return t;
}

std::vector<Perm> cube_two_generators() {
  auto t = cube_moves();
  // alpha = T2^2 T5 T4 T6^-1 T2^-1, beta = T1 T2 T4 T1 T4^-1 T1^-1 T2^-1,
  // words applied left to right.
  Perm alpha = t[1].then(t[1]).then(t[4]).then(t[3]).then(t[5].inverse()).then(t[1].inverse());
  Perm beta = t[0].then(t[1]).then(t[3]).then(t[0]).then(t[3].inverse()).then(t[0].inverse()).then(t[1].inverse());
  return {alpha, beta};
}

PsiImage psi(const WreathState& s) {
  int ts = 0, fs = 0;
  for (int v : s.twist) ts += v;
  for (int v : s.flip) fs += v;
  return {ts % 3, fs % 2, s.corners.sign() * s.edges.sign()};
}

bool is_realistic(const WreathState& s) {
  PsiImage im = psi(s);
  return im.twist_sum == 0 && im.flip_sum == 0 && im.sign == 1;
}

Int wreath_group_order() {
  Int corner = pow_int(Int(3), 8);
  Int edge = pow_int(Int(2), 12);
  Int f8 = 1, f12 = 1;
  for (int i = 2; i <= 8; ++i) f8 *= i;
  for (int i = 2; i <= 12; ++i) f12 *= i;
  return corner * f8 * edge * f12 / 12;  // index of ker(psi) is |C3 x C2 x {+-1}|
}

WreathState compose_states(const WreathState& s1, const WreathState& s2) {
  WreathState r;
  r.corners = s1.corners.then(s2.corners);
  r.edges = s1.edges.then(s2.edges);
  for (int i = 0; i < 8; ++i)
    r.twist[i] = (s1.twist[i] + s2.twist[s1.corners.image(i)]) % 3;
  for (int i = 0; i < 12; ++i)
    r.flip[i] = (s1.flip[i] + s2.flip[s1.edges.image(i)]) % 2;
  return r;
}

WreathState inverse_state(const WreathState& s) {
  WreathState r;
  r.corners = s.corners.inverse();
  r.edges = s.edges.inverse();
  for (int i = 0; i < 8; ++i) r.twist[i] = (3 - s.twist[r.corners.image(i)]) % 3;
  for (int i = 0; i < 12; ++i) r.flip[i] = s.flip[r.edges.image(i)];
  return r;
}

namespace {

Perm random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(img[i], img[pick(rng)]);
  }
  return Perm::from_images(std::move(img));
}

}  // namespace

WreathState random_realistic(std::mt19937_64& rng) {
  WreathState s;
  std::uniform_int_distribution<int> d3(0, 2), d2(0, 1);
  int sum = 0;
  for (int i = 0; i < 7; ++i) { s.twist[i] = d3(rng); sum += s.twist[i]; }
  s.twist[7] = (3 - sum % 3) % 3;
  sum = 0;
  for (int i = 0; i < 11; ++i) { s.flip[i] = d2(rng); sum += s.flip[i]; }
  s.flip[11] = sum % 2;
  s.corners = random_perm(8, rng);
  do {
    s.edges = random_perm(12, rng);
  } while (s.edges.sign() != s.corners.sign());
  return s;
}

namespace {

template <size_t N>
std::vector<int> lifted_pattern(const Perm& p, const std::array<int, N>& marks,
                                int modulus, int copies) {
  std::vector<int> parts;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, total = 0;
    for (int j = i; !seen[j]; j = p.image(j)) { seen[j] = 1; ++len; total += marks[j]; }
    if (total % modulus != 0) {
      parts.push_back(modulus * len);
    } else {
      for (int c = 0; c < copies; ++c) parts.push_back(len);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

FacetPattern facet_pattern(const WreathState& s) {
  return {lifted_pattern(s.corners, s.twist, 3, 3),
          lifted_pattern(s.edges, s.flip, 2, 2)};
}

std::string state_string(const WreathState& s) {
  std::ostringstream os;
  os << "x=[";
  for (int v : s.twist) os << v;
  os << "] rho=" << s.corners.cycle_string() << " y=[";
  for (int v : s.flip) os << v;
  os << "] sigma=" << s.edges.cycle_string();
  return os.str();
}

WreathState parse_state(const std::string& text) {
  WreathState s;
  auto grab = [&](const std::string& key) {
    auto pos = text.find(key + "=");
    if (pos == std::string::npos) throw std::invalid_argument("parse_state: missing " + key);
    pos += key.size() + 1;
    auto end = text.find(' ', pos);
    return text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
  };
  auto digits = [&](const std::string& field, auto& arr, int mod) {
    if (field.size() != arr.size() + 2 || field.front() != '[' || field.back() != ']')
      throw std::invalid_argument("parse_state: bad digit vector " + field);
    for (size_t i = 0; i < arr.size(); ++i) {
      int v = field[i + 1] - '0';
      if (v < 0 || v >= mod) throw std::invalid_argument("parse_state: digit out of range");
      arr[i] = v;
    }
  };
  digits(grab("x"), s.twist, 3);
  digits(grab("y"), s.flip, 2);
  auto cyc = [&](const std::string& field, int n) {
    return field == "()" ? Perm(n) : Perm::parse_cycles(field, n);
  };
  s.corners = cyc(grab("rho"), 8);
  s.edges = cyc(grab("sigma"), 12);
  return s;
}

}  // namespace rgal
