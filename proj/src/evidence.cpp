#include "rgal/evidence.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace rgal {

namespace {

void scan_worker(const Poly<Rat>& f, const Poly<Rat>* g,
                 const std::vector<uint64_t>& primes, size_t begin, size_t stride,
                 std::vector<ScanResult>& results, std::vector<char>& usable,
                 std::vector<SkippedPrime>& skipped) {
  for (size_t i = begin; i < primes.size(); i += stride) {
    uint64_t p = primes[i];
    DegreePatternResult rf = degree_pattern(f, p);
    if (!rf.usable) {
      skipped[i] = {p, rf.reason};
      continue;
    }
    ScanResult out;
    out.prime = p;
    out.pattern_f = rf.parts;
    if (g != nullptr) {
      DegreePatternResult rg = degree_pattern(*g, p);
      if (!rg.usable) {
        skipped[i] = {p, rg.reason};
        continue;
      }
      out.pattern_g = rg.parts;
    }
    results[i] = std::move(out);
    usable[i] = 1;
  }
}

ScanOutput run_scan(const Poly<Rat>& f, const Poly<Rat>* g, uint64_t p_max,
                    int jobs) {
  if (!squarefree_check(f)) throw std::invalid_argument("dedekind_scan: f is not squarefree");
  if (g != nullptr && !squarefree_check(*g))
    throw std::invalid_argument("dedekind_scan: g is not squarefree");
  std::vector<uint64_t> primes = primes_up_to(p_max);
  std::vector<ScanResult> results(primes.size());
  std::vector<char> usable(primes.size(), 0);
  std::vector<SkippedPrime> skipped(primes.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    scan_worker(f, g, primes, 0, 1, results, usable, skipped);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back(scan_worker, std::cref(f), g, std::cref(primes), w, jobs,
                        std::ref(results), std::ref(usable), std::ref(skipped));
    for (auto& th : pool) th.join();
  }
  ScanOutput out;
  for (size_t i = 0; i < primes.size(); ++i) {
    if (usable[i])
      out.results.push_back(std::move(results[i]));
    else
      out.skipped.push_back(std::move(skipped[i]));
  }
  return out;
}

// All ways to consume the multiset `rest` (sorted descending) with marked
// base parts; `take` consumes `copies` copies of the largest part.
template <typename Accept>
void decompose(std::vector<int>& rest, Witness& acc, int marked_copies,
               int unmarked_copies, int marked_div, int max_base,
               const Accept& accept, std::vector<Witness>& out) {
  if (rest.empty()) {
    if (accept(acc)) out.push_back(acc);
    return;
  }
  int m = rest.front();
  if (m % marked_div == 0 && m / marked_div <= max_base) {
    std::vector<int> next(rest.begin() + marked_copies, rest.end());
    acc.push_back({m / marked_div, true});
    decompose(next, acc, marked_copies, unmarked_copies, marked_div, max_base,
              accept, out);
    acc.pop_back();
  }
  int copies = 0;
  while (copies < static_cast<int>(rest.size()) && rest[copies] == m) ++copies;
  if (copies >= unmarked_copies && m <= max_base) {
    std::vector<int> next(rest.begin() + unmarked_copies, rest.end());
    acc.push_back({m, false});
    decompose(next, acc, marked_copies, unmarked_copies, marked_div, max_base,
              accept, out);
    acc.pop_back();
  }
}

std::vector<int> sorted_desc(DegreePattern lambda) {
  std::sort(lambda.begin(), lambda.end(), std::greater<int>());
  return lambda;
}

int marked_count(const Witness& w) {
  int n = 0;
  for (const auto& part : w) n += part.marked;
  return n;
}

}  // namespace

ScanOutput dedekind_scan(const Poly<Rat>& f, uint64_t p_max, int jobs) {
  return run_scan(f, nullptr, p_max, jobs);
}

ScanOutput dedekind_scan_pair(const Poly<Rat>& f, const Poly<Rat>& g,
                              uint64_t p_max, int jobs) {
  return run_scan(f, &g, p_max, jobs);
}

std::vector<Witness> corner_decompositions(const DegreePattern& lambda) {
  std::vector<int> rest = sorted_desc(lambda);
  std::vector<Witness> out;
  Witness acc;
  // one twisted 3d-cycle consumes one part, an untwisted d-cycle three
  decompose(rest, acc, 1, 3, 3, 8,
            [](const Witness& w) { return marked_count(w) != 1; }, out);
  return out;
}

std::vector<Witness> edge_decompositions(const DegreePattern& lambda) {
  std::vector<int> rest = sorted_desc(lambda);
  std::vector<Witness> out;
  Witness acc;
  decompose(rest, acc, 1, 2, 2, 12,
            [](const Witness& w) { return marked_count(w) % 2 == 0; }, out);
  return out;
}

CompatibilityVerdict corner_compatible(const DegreePattern& lambda) {
  CompatibilityVerdict v;
  auto ws = corner_decompositions(lambda);
  if (!ws.empty()) {
    v.corner_ok = true;
    v.corner_witness = ws.front();
  }
  return v;
}

CompatibilityVerdict edge_compatible(const DegreePattern& lambda) {
  CompatibilityVerdict v;
  auto ws = edge_decompositions(lambda);
  if (!ws.empty()) {
    v.edge_ok = true;
    v.edge_witness = ws.front();
  }
  return v;
}

CompatibilityVerdict joint_compatible(const DegreePattern& lf,
                                      const DegreePattern& lg) {
  CompatibilityVerdict v;
  auto corner = corner_decompositions(lf);
  auto edge = edge_decompositions(lg);
  v.corner_ok = !corner.empty();
  v.edge_ok = !edge.empty();
  if (!v.corner_ok || !v.edge_ok) return v;
  v.corner_witness = corner.front();
  v.edge_witness = edge.front();
  // sign(rho) = (-1)^(8 - #mu) must match sign(sigma) = (-1)^(12 - #mu')
  for (const auto& cw : corner) {
    int cs = (8 - static_cast<int>(cw.size())) % 2;
    for (const auto& ew : edge) {
      int es = (12 - static_cast<int>(ew.size())) % 2;
      if (cs == es) {
        v.joint_ok = true;
        v.corner_witness = cw;
        v.edge_witness = ew;
        return v;
      }
    }
  }
  return v;
}

DegreePattern expand_corner_witness(const Witness& w) {
  DegreePattern out;
  for (const auto& part : w) {
    if (part.marked)
      out.push_back(3 * part.length);
    else
      out.insert(out.end(), 3, part.length);
  }
  return sorted_desc(out);
}

DegreePattern expand_edge_witness(const Witness& w) {
  DegreePattern out;
  for (const auto& part : w) {
    if (part.marked)
      out.push_back(2 * part.length);
    else
      out.insert(out.end(), 2, part.length);
  }
  return sorted_desc(out);
}

std::set<int> subset_sum_irreducibility(const std::vector<DegreePattern>& patterns,
                                        int n) {
  if (patterns.empty()) throw std::invalid_argument("subset_sum_irreducibility: no patterns");
  std::vector<char> common(n + 1, 1);
  for (const auto& lambda : patterns) {
    std::vector<char> sums(n + 1, 0);
    sums[0] = 1;
    for (int d : lambda)
      for (int s = n; s >= d; --s)
        if (sums[s - d]) sums[s] = 1;
    for (int s = 0; s <= n; ++s) common[s] &= sums[s];
  }
  std::set<int> out;
  for (int s = 0; s <= n; ++s)
    if (common[s]) out.insert(s);
  return out;
}

std::string pattern_key(const DegreePattern& f, const DegreePattern& g) {
  std::ostringstream os;
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  if (!g.empty()) {
    os << "|";
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  }
  return os.str();
}

double tv_distance(const std::map<std::string, long>& a,
                   const std::map<std::string, long>& b) {
  long ta = 0, tb = 0;
  for (const auto& [k, n] : a) ta += n;
  for (const auto& [k, n] : b) tb += n;
  if (ta == 0 || tb == 0) return 1.0;
  double sum = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum += static_cast<double>(ia->second) / ta;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum += static_cast<double>(ib->second) / tb;
      ++ib;
    } else {
      sum += std::abs(static_cast<double>(ia->second) / ta -
                      static_cast<double>(ib->second) / tb);
      ++ia;
      ++ib;
    }
  }
  return sum / 2;
}

ChebotarevReport chebotarev_compare(const Poly<Rat>& f, const Poly<Rat>& g,
                                    uint64_t p_max, long samples, uint64_t seed,
                                    int jobs) {
  ChebotarevReport rep;
  ScanOutput scan = dedekind_scan_pair(f, g, p_max, jobs);
  rep.skipped = std::move(scan.skipped);
  for (const auto& r : scan.results) {
    rep.primes_used.push_back(r.prime);
    ++rep.histogram_frobenius[pattern_key(r.pattern_f, r.pattern_g)];
    if (!joint_compatible(r.pattern_f, r.pattern_g).joint_ok)
      rep.compatibility_failures.push_back(r.prime);
  }
  std::mt19937_64 rng(seed);
  for (long i = 0; i < samples; ++i) {
    FacetPattern fp = facet_pattern(random_realistic(rng));
    ++rep.histogram_group[pattern_key(fp.corner, fp.edge)];
  }
  rep.tv_distance = tv_distance(rep.histogram_frobenius, rep.histogram_group);
  return rep;
}

std::string chebotarev_report_json(const ChebotarevReport& rep) {
  nlohmann::json j;
  j["primes_used"] = rep.primes_used;
  j["skipped"] = nlohmann::json::array();
  for (const auto& s : rep.skipped)
    j["skipped"].push_back({{"prime", s.prime}, {"reason", s.reason}});
  j["histogram_frobenius"] = rep.histogram_frobenius;
  j["histogram_group"] = rep.histogram_group;
  j["tv_distance"] = rep.tv_distance;
  j["compatibility_failures"] = rep.compatibility_failures;
  return j.dump(2);
}

}  // namespace rgal
