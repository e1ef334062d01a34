#include "rgal/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rgal {

Perm Perm::from_images(std::vector<int> img) {
  int n = static_cast<int>(img.size());
  std::vector<char> seen(n, 0);
  for (int v : img) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("Perm: not a bijection");
    seen[v] = 1;
  }
  Perm p(n);
  p.img_ = std::move(img);
  return p;
}

Perm Perm::parse_cycles(const std::string& text, int n) {
  Perm p(n);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  std::vector<char> used(n, 0);
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("parse_cycles: expected point");
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1 || pt > n) throw std::invalid_argument("parse_cycles: point out of range");
      if (used[pt - 1]) throw std::invalid_argument("parse_cycles: repeated point");
      used[pt - 1] = 1;
      cyc.push_back(pt - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ')') { ++i; break; }
      throw std::invalid_argument("parse_cycles: expected ',' or ')'");
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      p.img_[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::then(const Perm& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("Perm::then: degree mismatch");
  Perm r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[i] = q.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::power(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  Perm r(degree());
  while (e) {
    if (e & 1) r = r.then(base);
    base = base.then(base);
    e >>= 1;
  }
  return r;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> parts;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) { seen[j] = 1; ++len; }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

int Perm::sign() const {
  auto parts = cycle_type();
  return (degree() - static_cast<int>(parts.size())) % 2 == 0 ? 1 : -1;
}

long long Perm::order() const {
  long long l = 1;
  for (int d : cycle_type()) l = std::lcm(l, static_cast<long long>(d));
  return l;
}

std::string Perm::cycle_string() const {
  std::string s;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) { seen[i] = 1; continue; }
    s += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace rgal
