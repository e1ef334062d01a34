#pragma once

#include <string>
#include <vector>

namespace rgal {

// Permutation of {1..n}. Internally 0-based; the text interface is 1-based
// to match cycle notation. "(1,2,3)" maps 1 -> 2, 2 -> 3, 3 -> 1.
class Perm {
 public:
  explicit Perm(int n = 0) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }

  // 0-based image table; validates bijectivity.
  static Perm from_images(std::vector<int> img);

  // Disjoint-cycle text, 1-based points, whitespace ignored. "" is identity.
  static Perm parse_cycles(const std::string& text, int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  // Apply *this first, then q (the i^(gh) = (i^g)^h convention).
  Perm then(const Perm& q) const;
  Perm inverse() const;
  Perm power(long k) const;

  // Parts sorted descending, fixed points included as 1s.
  std::vector<int> cycle_type() const;
  int sign() const;
  long long order() const;

  std::string cycle_string() const;

  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace rgal
