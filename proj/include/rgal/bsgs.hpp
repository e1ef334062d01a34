#pragma once

#include <random>
#include <vector>

#include "rgal/perm.hpp"
#include "rgal/rational.hpp"

namespace rgal {

// Base and strong generating set via deterministic Schreier-Sims.
// Immutable after construction; queries are const and thread-safe.
class BSGS {
 public:
  explicit BSGS(const std::vector<Perm>& generators);

  const Int& order() const { return order_; }
  bool contains(const Perm& p) const;

  // Uniform over the group: one transversal representative per base point.
  Perm random_element(std::mt19937_64& rng) const;

  std::vector<int> base() const;  // 1-based
  int degree() const { return n_; }

 private:
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;         // orbit[0] == beta
    std::vector<Perm> transversal;  // transversal[k] maps beta -> orbit[k]
    std::vector<int> slot;          // point -> orbit index, -1 outside
  };

  void rebuild_orbit(int i);
  // Sift through levels [from, end); returns residue and the level where
  // sifting stopped (levels_.size() on success).
  std::pair<Perm, size_t> strip(Perm g, size_t from) const;
  void schreier_sims();
  static int moved_point(const Perm& g);

  int n_;
  std::vector<Level> levels_;
  Int order_;
};

}  // namespace rgal
