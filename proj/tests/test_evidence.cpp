#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "rgal/construct.hpp"
#include "rgal/evidence.hpp"
#include "rgal/fixtures.hpp"

using namespace rgal;

namespace {

// Independent oracle: build the full set of achievable 24-facet patterns by
// enumerating marked partitions forward (instead of decomposing a given
// pattern). Returns canonical sorted-descending patterns, plus the parity
// sets of the base-partition sizes for the joint sign condition.
void enumerate_marked(int remaining, int max_part, int total_parts, int marked,
                      std::vector<MarkedPart>& acc, int marked_copies,
                      int unmarked_copies,
                      std::vector<std::pair<std::vector<MarkedPart>, int>>& out) {
  if (remaining == 0) {
    out.push_back({acc, total_parts});
    return;
  }
  for (int d = std::min(remaining, max_part); d >= 1; --d) {
    for (int mark = 0; mark < 2; ++mark) {
      acc.push_back({d, mark == 1});
      enumerate_marked(remaining - d, d, total_parts + 1, marked + mark, acc,
                       marked_copies, unmarked_copies, out);
      acc.pop_back();
    }
  }
}

struct OracleSide {
  std::set<DegreePattern> patterns;
  std::map<DegreePattern, std::set<int>> parities;  // pattern -> {#mu mod 2}
};

OracleSide corner_oracle() {
  std::vector<std::pair<std::vector<MarkedPart>, int>> all;
  std::vector<MarkedPart> acc;
  enumerate_marked(8, 8, 0, 0, acc, 1, 3, all);
  OracleSide side;
  for (const auto& [w, parts] : all) {
    int marked = 0;
    for (const auto& p : w) marked += p.marked;
    if (marked == 1) continue;
    DegreePattern pat = expand_corner_witness(w);
    side.patterns.insert(pat);
    side.parities[pat].insert(parts % 2);
  }
  return side;
}

OracleSide edge_oracle() {
  std::vector<std::pair<std::vector<MarkedPart>, int>> all;
  std::vector<MarkedPart> acc;
  enumerate_marked(12, 12, 0, 0, acc, 1, 2, all);
  OracleSide side;
  for (const auto& [w, parts] : all) {
    int marked = 0;
    for (const auto& p : w) marked += p.marked;
    if (marked % 2 != 0) continue;
    DegreePattern pat = expand_edge_witness(w);
    side.patterns.insert(pat);
    side.parities[pat].insert(parts % 2);
  }
  return side;
}

std::vector<DegreePattern> all_partitions(int n) {
  std::vector<DegreePattern> out;
  DegreePattern acc;
  // partitions in descending-part order
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    for (int d = std::min(remaining, max_part); d >= 1; --d) {
      acc.push_back(d);
      self(self, remaining - d, d);
      acc.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace

TEST_CASE("corner compatibility matches the forward enumeration oracle") {
  OracleSide oracle = corner_oracle();
  for (const auto& lambda : all_partitions(24)) {
    bool want = oracle.patterns.count(lambda) > 0;
    CompatibilityVerdict v = corner_compatible(lambda);
    CAPTURE(pattern_key(lambda, {}));
    CHECK(v.corner_ok == want);
    if (v.corner_ok) CHECK(expand_corner_witness(*v.corner_witness) == lambda);
  }
}

TEST_CASE("edge compatibility matches the forward enumeration oracle") {
  OracleSide oracle = edge_oracle();
  for (const auto& lambda : all_partitions(24)) {
    bool want = oracle.patterns.count(lambda) > 0;
    CompatibilityVerdict v = edge_compatible(lambda);
    CAPTURE(pattern_key(lambda, {}));
    CHECK(v.edge_ok == want);
    if (v.edge_ok) CHECK(expand_edge_witness(*v.edge_witness) == lambda);
  }
}

TEST_CASE("published compatibility spot checks") {
  CHECK(corner_compatible({8, 8, 8}).corner_ok);
  CHECK_FALSE(corner_compatible({24}).corner_ok);
  CHECK(corner_compatible(DegreePattern(24, 1)).corner_ok);
  CHECK_FALSE(edge_compatible({24}).edge_ok);
  CHECK(edge_compatible(DegreePattern(12, 2)).edge_ok);
  CHECK(edge_compatible(DegreePattern(24, 1)).edge_ok);
}

TEST_CASE("joint compatibility adds the sign condition") {
  OracleSide corners = corner_oracle(), edges = edge_oracle();
  DegreePattern id24(24, 1);
  CHECK(joint_compatible(id24, id24).joint_ok);
  CHECK_FALSE(joint_compatible({8, 8, 8}, {24}).joint_ok);

  // cross-check against the oracle on random pattern pairs
  std::vector<DegreePattern> cs(corners.patterns.begin(), corners.patterns.end());
  std::vector<DegreePattern> es(edges.patterns.begin(), edges.patterns.end());
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<size_t> pc(0, cs.size() - 1), pe(0, es.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const DegreePattern& lf = cs[pc(rng)];
    const DegreePattern& lg = es[pe(rng)];
    // want: some achievable parity pair with (8 - #mu) = (12 - #mu') mod 2,
    // i.e. #mu = #mu' mod 2
    bool want = false;
    for (int a : corners.parities[lf])
      for (int b : edges.parities[lg])
        if (a == b) want = true;
    CompatibilityVerdict v = joint_compatible(lf, lg);
    CAPTURE(pattern_key(lf, lg));
    CHECK(v.joint_ok == want);
    if (v.joint_ok) {
      CHECK(expand_corner_witness(*v.corner_witness) == lf);
      CHECK(expand_edge_witness(*v.edge_witness) == lg);
      CHECK((8 - static_cast<int>(v.corner_witness->size())) % 2 ==
            (12 - static_cast<int>(v.edge_witness->size())) % 2);
    }
  }
}

TEST_CASE("facet patterns of realistic states always pass the joint check") {
  std::mt19937_64 rng(8080);
  for (int i = 0; i < 100000; ++i) {
    FacetPattern fp = facet_pattern(random_realistic(rng));
    CHECK(joint_compatible(fp.corner, fp.edge).joint_ok);
  }
}

TEST_CASE("pattern-visible violations are caught") {
  // single twisted cycle: twist sum 1 over one 8-cycle -> corner {24}
  WreathState s;
  s.corners = Perm::parse_cycles("(1,2,3,4,5,6,7,8)", 8);
  s.twist[0] = 1;
  CHECK_FALSE(is_realistic(s));
  CHECK_FALSE(corner_compatible(facet_pattern(s).corner).corner_ok);
  // odd flip count: one flipped 12-cycle -> edge {24}
  WreathState t;
  t.edges = Perm::parse_cycles("(1,2,3,4,5,6,7,8,9,10,11,12)", 12);
  t.flip[0] = 1;
  CHECK_FALSE(is_realistic(t));
  CHECK_FALSE(edge_compatible(facet_pattern(t).edge).edge_ok);
}

TEST_CASE("dedekind scans of the worked examples") {
  Poly<Rat> ex10 = poly_from_longs({16, 20, 0, 0, 0, 1});
  ScanOutput scan = dedekind_scan(ex10, 10);
  bool saw3 = false, saw7 = false;
  for (const auto& r : scan.results) {
    if (r.prime == 3) {
      saw3 = true;
      CHECK(r.pattern_f == DegreePattern{5});
    }
    if (r.prime == 7) {
      saw7 = true;
      CHECK(r.pattern_f == DegreePattern{3, 1, 1});
    }
  }
  CHECK(saw3);
  CHECK(saw7);

  ScanOutput quad = dedekind_scan(poly_from_longs({1, 0, 1}), 7);
  REQUIRE(quad.results.size() == 3);
  CHECK(quad.results[0].prime == 3);
  CHECK(quad.results[0].pattern_f == DegreePattern{2});
  CHECK(quad.results[1].prime == 5);
  CHECK(quad.results[1].pattern_f == DegreePattern{1, 1});
  CHECK(quad.results[2].prime == 7);
  CHECK(quad.results[2].pattern_f == DegreePattern{2});

  CHECK_THROWS(dedekind_scan(poly_from_longs({1, 2, 1}), 10));
}

TEST_CASE("pair scans conserve degree and parallel scans are deterministic") {
  Theorem1Data d = build_theorem1(Rat(2139), Rat(-6489), Int("106936663173678765"),
                                  Int("18262481960816352"));
  ScanOutput a = dedekind_scan_pair(d.f24, d.g24, 600, 1);
  ScanOutput b = dedekind_scan_pair(d.f24, d.g24, 600, 4);
  REQUIRE(!a.results.empty());
  CHECK(a.results.size() == b.results.size());
  for (size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].prime == b.results[i].prime);
    CHECK(a.results[i].pattern_f == b.results[i].pattern_f);
    CHECK(a.results[i].pattern_g == b.results[i].pattern_g);
    int sf = 0, sg = 0;
    for (int v : a.results[i].pattern_f) sf += v;
    for (int v : a.results[i].pattern_g) sg += v;
    CHECK(sf == 24);
    CHECK(sg == 24);
  }
}

TEST_CASE("subset-sum intersection") {
  CHECK(subset_sum_irreducibility({{5}}, 5) == std::set<int>{0, 5});
  CHECK(subset_sum_irreducibility({{8, 8, 8}}, 24) == std::set<int>{0, 8, 16, 24});
  CHECK(subset_sum_irreducibility({{8, 8, 8}, {24}}, 24) == std::set<int>{0, 24});
  CHECK_THROWS(subset_sum_irreducibility({}, 5));
  // always contains {0, n} and is closed under s -> n - s
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> d(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DegreePattern> pats;
    for (int k = 0; k < 3; ++k) {
      DegreePattern p;
      int left = 12;
      while (left > 0) {
        int v = std::min(left, d(rng));
        p.push_back(v);
        left -= v;
      }
      std::sort(p.rbegin(), p.rend());
      pats.push_back(p);
    }
    std::set<int> sums = subset_sum_irreducibility(pats, 12);
    CHECK(sums.count(0) == 1);
    CHECK(sums.count(12) == 1);
    for (int v : sums) CHECK(sums.count(12 - v) == 1);
  }
}

TEST_CASE("total variation distance") {
  std::map<std::string, long> h{{"a", 3}, {"b", 1}};
  CHECK(tv_distance(h, h) == 0.0);
  std::map<std::string, long> g{{"a", 1}, {"c", 1}};
  CHECK(tv_distance(h, g) == doctest::Approx(0.5));
  CHECK(tv_distance({}, h) == 1.0);
}

TEST_CASE("chebotarev comparison on a small window") {
  Theorem1Data d = build_theorem1(Rat(2139), Rat(-6489), Int("106936663173678765"),
                                  Int("18262481960816352"));
  ChebotarevReport rep = chebotarev_compare(d.f24, d.g24, 300, 2000, 11, 2);
  CHECK(rep.compatibility_failures.empty());
  CHECK(!rep.primes_used.empty());
  CHECK(rep.tv_distance >= 0.0);
  CHECK(rep.tv_distance <= 1.0);
  long nf = 0;
  for (const auto& [k, c] : rep.histogram_frobenius) nf += c;
  CHECK(nf == static_cast<long>(rep.primes_used.size()));
  // deterministic given the seed
  ChebotarevReport rep2 = chebotarev_compare(d.f24, d.g24, 300, 2000, 11, 2);
  CHECK(chebotarev_report_json(rep) == chebotarev_report_json(rep2));
  // corner-side marginals: f paired with itself agrees across slots
  ChebotarevReport self = chebotarev_compare(d.f24, d.f24, 300, 2000, 11, 2);
  for (const auto& r : self.histogram_frobenius) {
    size_t bar = r.first.find('|');
    REQUIRE(bar != std::string::npos);
    CHECK(r.first.substr(0, bar) == r.first.substr(bar + 1));
  }
}
