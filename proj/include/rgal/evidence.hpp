#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgal/cube.hpp"
#include "rgal/fpfactor.hpp"
#include "rgal/poly.hpp"

namespace rgal {

using DegreePattern = std::vector<int>;  // sorted descending

struct ScanResult {
  uint64_t prime = 0;
  DegreePattern pattern_f;
  DegreePattern pattern_g;  // empty for single-polynomial scans
};

struct SkippedPrime {
  uint64_t prime = 0;
  std::string reason;
};

struct ScanOutput {
  std::vector<ScanResult> results;  // sorted by prime
  std::vector<SkippedPrime> skipped;
};

// Degree patterns of f mod p for every usable prime p <= p_max; a prime is
// skipped (with reason) when the reduction degenerates or is not squarefree.
ScanOutput dedekind_scan(const Poly<Rat>& f, uint64_t p_max, int jobs = 1);

// Same, but a prime is usable only when both reductions are.
ScanOutput dedekind_scan_pair(const Poly<Rat>& f, const Poly<Rat>& g,
                              uint64_t p_max, int jobs = 1);

// A base-partition part together with its twist/flip mark.
struct MarkedPart {
  int length = 0;
  bool marked = false;  // twisted (corners) or flipped (edges)

  bool operator==(const MarkedPart&) const = default;
};

using Witness = std::vector<MarkedPart>;

struct CompatibilityVerdict {
  bool corner_ok = false;
  bool edge_ok = false;
  bool joint_ok = false;
  std::optional<Witness> corner_witness;
  std::optional<Witness> edge_witness;
};

// All decompositions of a 24-facet pattern into a marked partition of 8
// (part d -> one 3d when twisted, d,d,d when not) resp. of 12 (part d ->
// one 2d when flipped, d,d when not), side conditions included: the number
// of twisted parts is never exactly one, the number of flipped parts is
// even.
std::vector<Witness> corner_decompositions(const DegreePattern& lambda);
std::vector<Witness> edge_decompositions(const DegreePattern& lambda);

CompatibilityVerdict corner_compatible(const DegreePattern& lambda);
CompatibilityVerdict edge_compatible(const DegreePattern& lambda);

// Additionally requires corner and edge witnesses whose base partitions
// give sign(rho) = sign(sigma), i.e. (-1)^(8-#mu) = (-1)^(12-#mu').
CompatibilityVerdict joint_compatible(const DegreePattern& lf,
                                      const DegreePattern& lg);

// Expand a witness back into a facet pattern (for re-validation).
DegreePattern expand_corner_witness(const Witness& w);
DegreePattern expand_edge_witness(const Witness& w);

// Intersection over all patterns of their subset-sum sets. {0, n} certifies
// irreducibility over Q.
std::set<int> subset_sum_irreducibility(const std::vector<DegreePattern>& patterns,
                                        int n);

std::string pattern_key(const DegreePattern& f, const DegreePattern& g);

struct ChebotarevReport {
  std::vector<uint64_t> primes_used;
  std::vector<SkippedPrime> skipped;
  std::map<std::string, long> histogram_frobenius;  // key: pattern_key
  std::map<std::string, long> histogram_group;
  double tv_distance = 1.0;
  std::vector<uint64_t> compatibility_failures;  // primes failing joint_compatible
};

// Frobenius pattern-pair histogram over usable primes <= p_max against the
// facet-pattern histogram of `samples` uniform realistic wreath states.
ChebotarevReport chebotarev_compare(const Poly<Rat>& f, const Poly<Rat>& g,
                                    uint64_t p_max, long samples, uint64_t seed,
                                    int jobs = 1);

double tv_distance(const std::map<std::string, long>& a,
                   const std::map<std::string, long>& b);

std::string chebotarev_report_json(const ChebotarevReport& rep);

}  // namespace rgal
