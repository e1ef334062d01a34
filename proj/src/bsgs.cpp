#include "rgal/bsgs.hpp"

#include <stdexcept>

namespace rgal {

int BSGS::moved_point(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g.image(i) != i) return i;
  return -1;
}

BSGS::BSGS(const std::vector<Perm>& generators) {
  if (generators.empty()) throw std::invalid_argument("BSGS: no generators");
  n_ = generators[0].degree();
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (g.degree() != n_) throw std::invalid_argument("BSGS: degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  order_ = 1;
  if (gens.empty()) return;  // trivial group
  Level l0;
  l0.beta = moved_point(gens[0]);
  l0.gens = std::move(gens);
  levels_.push_back(std::move(l0));
  schreier_sims();
  for (const auto& l : levels_) order_ *= static_cast<long>(l.orbit.size());
}

void BSGS::rebuild_orbit(int i) {
  Level& l = levels_[i];
  l.orbit.assign(1, l.beta);
  l.transversal.assign(1, Perm(n_));
  l.slot.assign(n_, -1);
  l.slot[l.beta] = 0;
  for (size_t k = 0; k < l.orbit.size(); ++k) {
    for (const Perm& g : l.gens) {
      int img = g.image(l.orbit[k]);
      if (l.slot[img] == -1) {
        l.slot[img] = static_cast<int>(l.orbit.size());
        l.orbit.push_back(img);
        l.transversal.push_back(l.transversal[k].then(g));
      }
    }
  }
}

std::pair<Perm, size_t> BSGS::strip(Perm g, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    int img = g.image(l.beta);
    if (l.slot[img] == -1) return {std::move(g), i};
    g = g.then(l.transversal[l.slot[img]].inverse());
  }
  return {std::move(g), levels_.size()};
}

void BSGS::schreier_sims() {
  for (size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(static_cast<int>(i));
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    rebuild_orbit(static_cast<int>(i));
    Level& l = levels_[i];
    bool extended = false;
    for (size_t k = 0; k < l.orbit.size() && !extended; ++k) {
      for (const Perm& g : l.gens) {
        int dest = g.image(l.orbit[k]);
        Perm schreier =
            l.transversal[k].then(g).then(l.transversal[l.slot[dest]].inverse());
        auto [residue, drop] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        if (drop == levels_.size()) {
          Level fresh;
          fresh.beta = moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (size_t j = i + 1; j <= drop; ++j) {
          levels_[j].gens.push_back(residue);
          rebuild_orbit(static_cast<int>(j));
        }
        i = static_cast<long>(drop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

bool BSGS::contains(const Perm& p) const {
  if (p.degree() != n_) throw std::invalid_argument("BSGS::contains: degree mismatch");
  auto [residue, drop] = strip(p, 0);
  return drop == levels_.size() && residue.is_identity();
}

Perm BSGS::random_element(std::mt19937_64& rng) const {
  Perm r(n_);
  for (size_t i = levels_.size(); i-- > 0;) {
    const Level& l = levels_[i];
    std::uniform_int_distribution<size_t> pick(0, l.orbit.size() - 1);
    r = r.then(l.transversal[pick(rng)]);
  }
  return r;
}

std::vector<int> BSGS::base() const {
  std::vector<int> b;
  for (const auto& l : levels_) b.push_back(l.beta + 1);
  return b;
}

}  // namespace rgal
